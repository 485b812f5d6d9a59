#pragma once

#include "linroots/linpoly.hpp"

namespace linroots {

/// F_q-basis of a kernel; elements are verified roots, F_p-coordinates in
/// reduced echelon order so output is canonical.
struct KernelBasis {
    std::vector<FFElem> elements;
    unsigned dim = 0;   // dimension over the scalar field recorded in `scalar_degree`
    unsigned scalar_degree = 1;   // p-degree of the scalar field (e for F_q, e*n for F_{q^n})
};

/// Null space of f as an F_p-linear map, regrouped into an F_q-basis.
KernelBasis kernel_basis_generic(const LinPoly& f);

/// F_{q^n}-basis of E_1(H^n) = ker(H^n - id).
KernelBasis fixed_space_Hn(const SigmaForm& F);

/// Explicit kernel basis of f via ker f = L(E_1(H^n)).
KernelBasis roots_via_L(const SigmaForm& F);

/// Checks dim_{F_q} Fix(H|E_1(H^n)) = dim_{F_{q^n}} E_1(H^n) and that the
/// fixed points span E_1(H^n) over F_{q^n}. Property-test helper.
bool fix_semilinear_property_check(const SigmaForm& F);

/// True if x lies in the span of `basis` with scalars from F_{p^d}.
bool in_scalar_span(const FieldCtx& ctx, const std::vector<FFElem>& basis,
                    unsigned d, const FFElem& x);

}  // namespace linroots
