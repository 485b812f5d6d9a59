#pragma once

#include <map>

#include "linroots/kernel.hpp"

namespace linroots {

/// Linear set L_F = { <(x, F(x))> : x in F_{q^{nt}}^* } on PG(1, q^{nt}) with
/// F(x) = sum a_i x^(q^(s0+n*i)) = G o sigma, F not identically zero.
struct LinearSetSpec {
    const TowerCtx* tower = nullptr;
    unsigned s0 = 1;
    std::vector<FFElem> a;   // length t

    LinearSetSpec(const TowerCtx& tw, unsigned s0_, std::vector<FFElem> a_);
    LinPoly map_poly() const;   // F as a q-polynomial
};

struct WeightSpectrum {
    std::map<unsigned, uint64_t> counts;   // weight i -> number of points x_i
    unsigned infinity_weight = 0;          // weight of <(1,0)>, the ker G direction
    uint64_t size = 0;                     // |L_F|
};

/// Weight of the point <(1, slope)>; the point <(0,1)> is never in L_F.
unsigned point_weight(const LinearSetSpec& L, const FFElem& slope);

/// Full spectrum by a single pass over F_{q^{nt}}^* (parallel), with both
/// counting identities and the pointwise weight bounds asserted.
WeightSpectrum weight_spectrum(const LinearSetSpec& L,
                               uint64_t limit = kDefaultExhaustiveLimit,
                               bool parallel = true);
WeightSpectrum weight_spectrum_serial(const LinearSetSpec& L,
                                      uint64_t limit = kDefaultExhaustiveLimit);
/// Matrix-method spectrum: one restricted-Dickson kernel computation per
/// slope; no field-size limit beyond enumerating the q^{nt} slopes.
WeightSpectrum weight_spectrum_by_slope(const LinearSetSpec& L);

bool is_scattered(const WeightSpectrum& w);
/// i when the spectrum is one point of weight i > 1 and the rest weight 1.
std::optional<unsigned> is_club(const WeightSpectrum& w);

struct F3Criterion {
    bool scattered = false;
    QuadRoots quad = QuadRoots::TwoInExt;
};

/// Scattered test for L_{f_3} = { <(x, x^(q^5) + alpha x^(q^2))> } in
/// PG(1,q^6); tower must have n=3, t=2. Requires N_{q^6/q^3}(alpha) not 0, 1.
F3Criterion scattered_f3_criterion(const TowerCtx& tower, const FFElem& alpha);

struct F3Cardinality {
    uint64_t size = 0;
    uint64_t x2 = 0;
};

/// Closed-form |L_{f_3}| and weight-2 point count from the quadratic's
/// root location.
F3Cardinality lf3_cardinality(const TowerCtx& tower, const FFElem& alpha);

/// All alpha in F_{q^6}^* with admissible norm whose L_{f_3} is scattered.
std::vector<FFElem> search_alpha(const TowerCtx& tower, bool parallel = true);
std::vector<FFElem> search_alpha_serial(const TowerCtx& tower);

}  // namespace linroots
