#include "linroots/linset.hpp"

#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace linroots {

LinearSetSpec::LinearSetSpec(const TowerCtx& tw, unsigned s0_,
                             std::vector<FFElem> a_)
    : tower(&tw), s0(s0_), a(std::move(a_)) {
    if (a.size() != tw.t) throw FieldError("DegreeMismatch: need t coefficients");
    if (std::gcd(s0, tw.n) != 1)
        throw FieldError("sigma exponent must be coprime to n");
    bool nonzero = false;
    for (const auto& x : a) {
        tw.field.check(x);
        if (!tw.field.is_zero(x)) nonzero = true;
    }
    if (!nonzero) throw FieldError("F must not be identically zero");
}

LinPoly LinearSetSpec::map_poly() const {
    const TowerCtx& tw = *tower;
    std::vector<std::pair<unsigned, FFElem>> terms;
    for (unsigned i = 0; i < tw.t; ++i)
        terms.emplace_back((s0 + tw.n * i) % tw.nt(), a[i]);
    return make_poly(tw.field, tw.e, terms);
}

namespace {

// dim_{F_{q^n}} ker G from the t x t restricted Dickson matrix of G
unsigned g_kernel_dim_qn(const LinearSetSpec& L) {
    SigmaForm F(*L.tower, L.s0, L.a);
    return L.tower->t - (unsigned)rank(restricted_dickson(F));
}

uint64_t q_value(const TowerCtx& tw) {
    uint64_t q = 1;
    for (unsigned i = 0; i < tw.e; ++i) q *= tw.p;
    return q;
}

unsigned weight_from_count(uint64_t q, uint64_t fiber) {
    // fiber = q^w - 1 nonzero x mapping to the slope
    uint64_t v = 1;
    unsigned w = 0;
    while (v - 1 < fiber) { v *= q; ++w; }
    if (v - 1 != fiber)
        throw FieldError("fiber size " + std::to_string(fiber) +
                         " is not q^w - 1");
    return w;
}

void validate_spectrum(const LinearSetSpec& L, const WeightSpectrum& w) {
    const TowerCtx& tw = *L.tower;
    uint64_t q = q_value(tw);
    unsigned h = g_kernel_dim_qn(L);
    // counting identities
    uint64_t total = 0;
    unsigned long long weighted = 0;
    // the ker-G direction may exceed the t-h bound that holds for every
    // other point; allow exactly one such point when it does
    uint64_t over_bound = 0;
    for (auto [i, xi] : w.counts) {
        if (i < 1) throw FieldError("spectrum contains weight-0 points");
        total += xi;
        uint64_t qi = 1;
        for (unsigned k = 0; k < i; ++k) qi *= q;
        weighted += xi * ((qi - 1) / (q - 1));
        if (i > tw.t - h) {
            over_bound += xi;
            if (i != w.infinity_weight)
                throw FieldError("weight bound violated");
        }
    }
    if (over_bound > 1) throw FieldError("weight bound violated");
    if (total != w.size) throw FieldError("size identity violated");
    uint64_t rank_sum = (tw.field.size() - 1) / (q - 1);
    if (weighted != rank_sum) throw FieldError("weight counting identity violated");
    if (h > 0 && w.infinity_weight != tw.n * h)
        throw FieldError("ker G direction weight mismatch");
}

WeightSpectrum spectrum_from_fibers(const LinearSetSpec& L,
                                    const std::vector<uint32_t>& fiber) {
    const TowerCtx& tw = *L.tower;
    uint64_t q = q_value(tw);
    WeightSpectrum out;
    for (uint64_t s = 0; s < fiber.size(); ++s) {
        if (fiber[s] == 0) continue;
        unsigned w = weight_from_count(q, fiber[s]);
        ++out.counts[w];
        ++out.size;
        if (s == 0) out.infinity_weight = w;
    }
    validate_spectrum(L, out);
    return out;
}

std::vector<uint32_t> slope_fibers(const LinearSetSpec& L, uint64_t limit,
                                   bool parallel) {
    const TowerCtx& tw = *L.tower;
    const FieldCtx& fld = tw.field;
    if (fld.size() > limit)
        throw FieldError("FieldTooLarge: exhaustive spectrum needs p^m <= limit");
    LinPoly F = L.map_poly();
    std::vector<uint32_t> fiber(fld.size(), 0);
    int64_t n = (int64_t)fld.size();
#ifdef _OPENMP
#pragma omp parallel if (parallel)
    {
        std::vector<uint32_t> local(fld.size(), 0);
#pragma omp for schedule(static)
        for (int64_t idx = 1; idx < n; ++idx) {
            FFElem x = fld.from_index((uint64_t)idx);
            FFElem slope = fld.mul(evaluate(F, x), fld.inv(x));
            ++local[fld.to_index(slope)];
        }
#pragma omp critical
        for (size_t i = 0; i < fiber.size(); ++i) fiber[i] += local[i];
    }
#else
    (void)parallel;
    for (int64_t idx = 1; idx < n; ++idx) {
        FFElem x = fld.from_index((uint64_t)idx);
        FFElem slope = fld.mul(evaluate(F, x), fld.inv(x));
        ++fiber[fld.to_index(slope)];
    }
#endif
    return fiber;
}

}  // namespace

unsigned point_weight(const LinearSetSpec& L, const FFElem& slope) {
    const TowerCtx& tw = *L.tower;
    const FieldCtx& fld = tw.field;
    if (fld.is_zero(slope)) return tw.n * g_kernel_dim_qn(L);
    FFElem minv = fld.inv(slope);
    std::vector<FFElem> b;
    b.reserve(tw.t);
    for (const auto& ai : L.a) b.push_back(fld.mul(ai, minv));
    SigmaForm f(tw, L.s0, std::move(b));
    return kernel_dim_restricted(f).dim;
}

WeightSpectrum weight_spectrum(const LinearSetSpec& L, uint64_t limit,
                               bool parallel) {
    if (L.tower->field.size() > limit) {
        // matrix path: constant work per slope, no element enumeration
        if (L.tower->t == 2 && L.tower->n <= 3)
            return weight_spectrum_by_slope(L);
        throw FieldError(
            "FieldTooLarge: exhaustive spectrum needs p^m <= limit");
    }
    return spectrum_from_fibers(L, slope_fibers(L, limit, parallel));
}

WeightSpectrum weight_spectrum_serial(const LinearSetSpec& L, uint64_t limit) {
    return spectrum_from_fibers(L, slope_fibers(L, limit, false));
}

WeightSpectrum weight_spectrum_by_slope(const LinearSetSpec& L) {
    const TowerCtx& tw = *L.tower;
    const FieldCtx& fld = tw.field;
    WeightSpectrum out;
    for (uint64_t idx = 0; idx < fld.size(); ++idx) {
        unsigned w = point_weight(L, fld.from_index(idx));
        if (w == 0) continue;
        ++out.counts[w];
        ++out.size;
        if (idx == 0) out.infinity_weight = w;
    }
    validate_spectrum(L, out);
    return out;
}

bool is_scattered(const WeightSpectrum& w) {
    for (auto [i, xi] : w.counts)
        if (i > 1) return false;
    return true;
}

std::optional<unsigned> is_club(const WeightSpectrum& w) {
    unsigned heavy = 0;
    for (auto [i, xi] : w.counts) {
        if (i == 1) continue;
        if (xi != 1 || heavy != 0) return std::nullopt;
        heavy = i;
    }
    if (heavy == 0) return std::nullopt;
    return heavy;
}

namespace {

struct F3Quad {
    FFElem B, C;   // Y^2 + B*Y + C over F_q
};

F3Quad f3_quadratic(const TowerCtx& tw, const FFElem& alpha) {
    const FieldCtx& fld = tw.field;
    if (tw.n != 3 || tw.t != 2)
        throw FieldError("WrongShape: f_3 criteria need n=3, t=2");
    FFElem nalpha = fld.mul(alpha, fld.frobenius(alpha, tw.e * 3));
    if (fld.is_zero(nalpha) || nalpha == fld.one())
        throw FieldError("BadNorm: N_{q^6/q^3}(alpha) must avoid 0 and 1");
    FFElem A = fld.mul(fld.neg(nalpha), fld.inv(fld.sub(fld.one(), nalpha)));
    if (!fld.in_subfield(A, tw.e * 3))
        throw FieldError("A is not in F_{q^3}");
    FFElem trA = fld.zero(), nA = fld.one();
    for (unsigned i = 0; i < 3; ++i) {
        trA = fld.add(trA, fld.frobenius(A, tw.e * i));
        nA = fld.mul(nA, fld.frobenius(A, tw.e * i));
    }
    return {fld.sub(fld.one(), trA), nA};
}

}  // namespace

F3Criterion scattered_f3_criterion(const TowerCtx& tower, const FFElem& alpha) {
    F3Quad quad = f3_quadratic(tower, alpha);
    F3Criterion out;
    out.quad = classify_quadratic(tower.field, tower.e, quad.B, quad.C);
    out.scattered = (out.quad == QuadRoots::TwoInBase);
    return out;
}

F3Cardinality lf3_cardinality(const TowerCtx& tower, const FFElem& alpha) {
    uint64_t q = q_value(tower);
    uint64_t c = q * q + q + 1;
    F3Criterion crit = scattered_f3_criterion(tower, alpha);
    F3Cardinality out;
    switch (crit.quad) {
        case QuadRoots::TwoInExt:
            out.x2 = 2 * c;
            out.size = q * q * q * q * q + q * q * q * q - q * q * q - q * q - q + 1;
            break;
        case QuadRoots::OneInBase:
            out.x2 = c;
            out.size = q * q * q * q * q + q * q * q * q + 1;
            break;
        case QuadRoots::TwoInBase:
            out.x2 = 0;
            out.size = (tower.field.size() - 1) / (q - 1);
            break;
    }
    return out;
}

std::vector<FFElem> search_alpha(const TowerCtx& tower, bool parallel) {
    const FieldCtx& fld = tower.field;
    std::vector<uint64_t> hits;
    int64_t n = (int64_t)fld.size();
#ifdef _OPENMP
#pragma omp parallel if (parallel)
    {
        std::vector<uint64_t> local;
#pragma omp for schedule(static)
        for (int64_t idx = 1; idx < n; ++idx) {
            FFElem alpha = fld.from_index((uint64_t)idx);
            FFElem na = fld.mul(alpha, fld.frobenius(alpha, tower.e * 3));
            if (fld.is_zero(na) || na == fld.one()) continue;
            if (scattered_f3_criterion(tower, alpha).scattered)
                local.push_back((uint64_t)idx);
        }
#pragma omp critical
        hits.insert(hits.end(), local.begin(), local.end());
    }
#else
    (void)parallel;
    for (int64_t idx = 1; idx < n; ++idx) {
        FFElem alpha = fld.from_index((uint64_t)idx);
        FFElem na = fld.mul(alpha, fld.frobenius(alpha, tower.e * 3));
        if (fld.is_zero(na) || na == fld.one()) continue;
        if (scattered_f3_criterion(tower, alpha).scattered)
            hits.push_back((uint64_t)idx);
    }
#endif
    std::sort(hits.begin(), hits.end());
    std::vector<FFElem> out;
    out.reserve(hits.size());
    for (uint64_t idx : hits) out.push_back(fld.from_index(idx));
    return out;
}

std::vector<FFElem> search_alpha_serial(const TowerCtx& tower) {
    return search_alpha(tower, false);
}

}  // namespace linroots
