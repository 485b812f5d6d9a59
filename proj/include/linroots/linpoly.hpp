#pragma once

#include <memory>

#include "linroots/linalg.hpp"

namespace linroots {

/// Tower parameters (q, n, t) with q = p^e over the ambient field F_{q^{nt}}.
struct TowerCtx {
    uint64_t p;
    unsigned e, n, t;
    FieldCtx field;

    TowerCtx(uint64_t p_, unsigned e_, unsigned n_, unsigned t_,
             std::optional<std::vector<uint32_t>> modulus = std::nullopt)
        : p(p_), e(e_), n(n_), t(t_), field(p_, e_ * n_ * t_, std::move(modulus)) {}

    uint64_t q_units() const { return e; }        // one q-power in p-power units
    unsigned nt() const { return n * t; }
};

/// General q-polynomial sum a_i x^(q^i) over F_{q^L}, reduced mod x^(q^L) - x.
/// The base exponent e gives q = p^e; coeff has length L = field.m / e.
struct LinPoly {
    const FieldCtx* ctx = nullptr;
    unsigned e = 1;
    std::vector<FFElem> coeff;

    unsigned slots() const { return (unsigned)coeff.size(); }
};

LinPoly zero_poly(const FieldCtx& ctx, unsigned e);
LinPoly identity_poly(const FieldCtx& ctx, unsigned e);
/// Build from (q-exponent, coefficient) terms; exponents reduced mod L.
LinPoly make_poly(const FieldCtx& ctx, unsigned e,
                  const std::vector<std::pair<unsigned, FFElem>>& terms);

LinPoly poly_add(const LinPoly& f, const LinPoly& g);
LinPoly poly_sub(const LinPoly& f, const LinPoly& g);
LinPoly poly_scale(const LinPoly& f, const FFElem& c);
bool poly_is_zero(const LinPoly& f);

FFElem evaluate(const LinPoly& f, const FFElem& x);
LinPoly compose(const LinPoly& f, const LinPoly& g);

/// Adjoint w.r.t. the bilinear form Tr(xy): coefficient a_i moves to slot L-i
/// raised to q^(L-i).
LinPoly adjoint(const LinPoly& f);

/// L x L Dickson matrix: entry (i,j) = a_((j-i) mod L)^(q^i).
FFMatrix dickson(const LinPoly& f);

/// The sigma-form polynomial -x + sum b_i x^(q^(s0+n*i)), gcd(s0,n)=1.
struct SigmaForm {
    const TowerCtx* tower = nullptr;
    unsigned s0 = 1;
    std::vector<FFElem> b;   // length t

    SigmaForm() = default;
    SigmaForm(const TowerCtx& tw, unsigned s0_, std::vector<FFElem> b_);

    /// tau exponent in q-power units: minimal s in [1, nt] with tau = q^s.
    unsigned tau_exp() const { return (tower->nt() - s0 % tower->nt()) % tower->nt(); }
    unsigned r_index() const { return tau_exp() % tower->t; }
};

/// Rescale a*x + sum b_i x^(...) with a != 0 to the normalized a = -1 form.
SigmaForm normalize_form(const FFElem& a, const std::vector<FFElem>& b,
                         const TowerCtx& tower, unsigned s0);

/// Form polynomial as a plain q-polynomial over F_{q^{nt}}.
LinPoly embed(const SigmaForm& F);
/// The q^n-polynomial G with f = G o sigma - id.
LinPoly g_poly(const SigmaForm& F);
/// H = G o sigma as a q-polynomial (no -x term).
LinPoly h_poly(const SigmaForm& F);

/// t x t Dickson matrix of G in q^n-indexing: entry (i,j) = b_((j-i) mod t)^(q^(n*i)).
FFMatrix restricted_dickson(const SigmaForm& F);

/// q-polynomial of H^k, 1 <= k <= n.
LinPoly semilinear_power(const SigmaForm& F, unsigned k);
/// L = H^(n-1) + ... + H + id.
LinPoly L_operator(const SigmaForm& F);

/// Reinterpret a q-polynomial whose support lies in multiples of n as a
/// q^n-polynomial (slots t = L/n).
LinPoly restrict_to_qn(const LinPoly& f, unsigned n);

}  // namespace linroots
