#include "linroots/linpoly.hpp"

#include <numeric>

namespace linroots {

namespace {
void require_same(const LinPoly& f, const LinPoly& g) {
    if (f.ctx != g.ctx || f.e != g.e)
        throw FieldError("TowerMismatch: polynomials from different contexts");
}
}  // namespace

LinPoly zero_poly(const FieldCtx& ctx, unsigned e) {
    if (e == 0 || ctx.degree() % e != 0)
        throw FieldError("DegreeMismatch: base exponent must divide m");
    LinPoly f;
    f.ctx = &ctx;
    f.e = e;
    f.coeff.assign(ctx.degree() / e, ctx.zero());
    return f;
}

LinPoly identity_poly(const FieldCtx& ctx, unsigned e) {
    LinPoly f = zero_poly(ctx, e);
    f.coeff[0] = ctx.one();
    return f;
}

LinPoly make_poly(const FieldCtx& ctx, unsigned e,
                  const std::vector<std::pair<unsigned, FFElem>>& terms) {
    LinPoly f = zero_poly(ctx, e);
    unsigned L = f.slots();
    for (const auto& [exp, c] : terms)
        f.coeff[exp % L] = ctx.add(f.coeff[exp % L], c);
    return f;
}

LinPoly poly_add(const LinPoly& f, const LinPoly& g) {
    require_same(f, g);
    LinPoly r = f;
    for (unsigned i = 0; i < r.slots(); ++i)
        r.coeff[i] = f.ctx->add(f.coeff[i], g.coeff[i]);
    return r;
}

LinPoly poly_sub(const LinPoly& f, const LinPoly& g) {
    require_same(f, g);
    LinPoly r = f;
    for (unsigned i = 0; i < r.slots(); ++i)
        r.coeff[i] = f.ctx->sub(f.coeff[i], g.coeff[i]);
    return r;
}

LinPoly poly_scale(const LinPoly& f, const FFElem& c) {
    LinPoly r = f;
    for (auto& a : r.coeff) a = f.ctx->mul(a, c);
    return r;
}

bool poly_is_zero(const LinPoly& f) {
    for (const auto& a : f.coeff)
        if (!f.ctx->is_zero(a)) return false;
    return true;
}

FFElem evaluate(const LinPoly& f, const FFElem& x) {
    const FieldCtx& F = *f.ctx;
    FFElem r = F.zero();
    for (unsigned i = 0; i < f.slots(); ++i) {
        if (F.is_zero(f.coeff[i])) continue;
        r = F.add(r, F.mul(f.coeff[i], F.frobenius(x, f.e * i)));
    }
    return r;
}

LinPoly compose(const LinPoly& f, const LinPoly& g) {
    require_same(f, g);
    const FieldCtx& F = *f.ctx;
    unsigned L = f.slots();
    LinPoly r = zero_poly(F, f.e);
    for (unsigned i = 0; i < L; ++i) {
        if (F.is_zero(f.coeff[i])) continue;
        for (unsigned j = 0; j < L; ++j) {
            if (F.is_zero(g.coeff[j])) continue;
            unsigned k = (i + j) % L;
            FFElem term = F.mul(f.coeff[i], F.frobenius(g.coeff[j], f.e * i));
            r.coeff[k] = F.add(r.coeff[k], term);
        }
    }
    return r;
}

LinPoly adjoint(const LinPoly& f) {
    const FieldCtx& F = *f.ctx;
    unsigned L = f.slots();
    LinPoly r = zero_poly(F, f.e);
    for (unsigned i = 0; i < L; ++i) {
        unsigned k = (L - i) % L;
        r.coeff[k] = F.add(r.coeff[k], F.frobenius(f.coeff[i], f.e * k));
    }
    return r;
}

FFMatrix dickson(const LinPoly& f) {
    const FieldCtx& F = *f.ctx;
    unsigned L = f.slots();
    FFMatrix D(F, L, L);
    for (unsigned i = 0; i < L; ++i)
        for (unsigned j = 0; j < L; ++j)
            D.at(i, j) = F.frobenius(f.coeff[(j + L - i) % L], f.e * i);
    return D;
}

SigmaForm::SigmaForm(const TowerCtx& tw, unsigned s0_, std::vector<FFElem> b_)
    : tower(&tw), s0(s0_), b(std::move(b_)) {
    if (b.size() != tw.t) throw FieldError("DegreeMismatch: need t coefficients");
    if (s0 < 1 || s0 > tw.nt()) throw FieldError("sigma exponent out of range");
    if (std::gcd(s0, tw.n) != 1)
        throw FieldError("sigma exponent must be coprime to n");
    for (const auto& x : b) tw.field.check(x);
}

SigmaForm normalize_form(const FFElem& a, const std::vector<FFElem>& b,
                         const TowerCtx& tower, unsigned s0) {
    const FieldCtx& F = tower.field;
    if (F.is_zero(a)) throw FieldError("ZeroLeadingCoefficient");
    FFElem scale = F.neg(F.inv(a));
    std::vector<FFElem> nb;
    nb.reserve(b.size());
    for (const auto& x : b) nb.push_back(F.mul(scale, x));
    return SigmaForm(tower, s0, std::move(nb));
}

LinPoly embed(const SigmaForm& F) {
    const TowerCtx& tw = *F.tower;
    std::vector<std::pair<unsigned, FFElem>> terms;
    terms.emplace_back(0, tw.field.from_int(-1));
    for (unsigned i = 0; i < tw.t; ++i)
        terms.emplace_back((F.s0 + tw.n * i) % tw.nt(), F.b[i]);
    return make_poly(tw.field, tw.e, terms);
}

LinPoly g_poly(const SigmaForm& F) {
    const TowerCtx& tw = *F.tower;
    std::vector<std::pair<unsigned, FFElem>> terms;
    for (unsigned i = 0; i < tw.t; ++i)
        terms.emplace_back((tw.n * i) % tw.nt(), F.b[i]);
    return make_poly(tw.field, tw.e, terms);
}

LinPoly h_poly(const SigmaForm& F) {
    const TowerCtx& tw = *F.tower;
    std::vector<std::pair<unsigned, FFElem>> terms;
    for (unsigned i = 0; i < tw.t; ++i)
        terms.emplace_back((F.s0 + tw.n * i) % tw.nt(), F.b[i]);
    return make_poly(tw.field, tw.e, terms);
}

FFMatrix restricted_dickson(const SigmaForm& F) {
    const TowerCtx& tw = *F.tower;
    const FieldCtx& fld = tw.field;
    FFMatrix D(fld, tw.t, tw.t);
    for (unsigned i = 0; i < tw.t; ++i)
        for (unsigned j = 0; j < tw.t; ++j)
            D.at(i, j) = fld.frobenius(F.b[(j + tw.t - i) % tw.t], tw.e * tw.n * i);
    return D;
}

LinPoly semilinear_power(const SigmaForm& F, unsigned k) {
    if (k < 1 || k > F.tower->n)
        throw FieldError("semilinear power out of range");
    LinPoly H = h_poly(F);
    LinPoly r = H;
    for (unsigned i = 1; i < k; ++i) r = compose(H, r);
    return r;
}

LinPoly L_operator(const SigmaForm& F) {
    const TowerCtx& tw = *F.tower;
    LinPoly H = h_poly(F);
    LinPoly r = identity_poly(tw.field, tw.e);
    LinPoly cur = identity_poly(tw.field, tw.e);
    for (unsigned i = 1; i < tw.n; ++i) {
        cur = compose(H, cur);
        r = poly_add(r, cur);
    }
    return r;
}

LinPoly restrict_to_qn(const LinPoly& f, unsigned n) {
    const FieldCtx& F = *f.ctx;
    unsigned L = f.slots();
    if (L % n != 0) throw FieldError("DegreeMismatch: n must divide slot count");
    for (unsigned i = 0; i < L; ++i)
        if (i % n != 0 && !F.is_zero(f.coeff[i]))
            throw FieldError("polynomial is not q^n-linear");
    LinPoly r = zero_poly(F, f.e * n);
    for (unsigned j = 0; j < L / n; ++j) r.coeff[j] = f.coeff[j * n];
    return r;
}

}  // namespace linroots
