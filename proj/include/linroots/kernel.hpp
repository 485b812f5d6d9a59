#pragma once

#include <map>
#include <string>

#include "linroots/linpoly.hpp"

namespace linroots {

inline constexpr uint64_t kDefaultExhaustiveLimit = 1ULL << 22;

/// Result of a kernel-dimension computation: the F_q-dimension of ker f plus
/// the method tag and whatever intermediate data the method produced.
struct KernelReport {
    unsigned dim = 0;
    std::string method;
    std::map<std::string, std::string> witnesses;
};

/// Root counting by full enumeration (the ground-truth oracle).
uint64_t count_roots_serial(const LinPoly& f);
uint64_t count_roots_parallel(const LinPoly& f);

KernelReport kernel_dim_bruteforce(const LinPoly& f,
                                   uint64_t limit = kDefaultExhaustiveLimit,
                                   bool parallel = true);

/// dim = L - rank(D(f)) for a q-polynomial with L slots.
KernelReport kernel_dim_dickson(const LinPoly& f);

/// Smallest m with det D_m(f) != 0, where D_m drops the first m columns and
/// last m rows of D(f).
KernelReport kernel_dim_minors(const LinPoly& f);

/// Companion-matrix method for f seen as a sigma-polynomial with sigma the
/// q^u-Frobenius, gcd(u, L) = 1. Implements dim = k - rank(E_1) with k the
/// sigma-degree; validated against the brute-force oracle in the tests.
KernelReport kernel_dim_companion(const LinPoly& f, unsigned u);

/// Restricted-Dickson method: t - rank(twisted product of D_red minus J^s).
/// The headline fast path: t x t matrix work instead of nt x nt.
KernelReport kernel_dim_restricted(const SigmaForm& F);

/// Via the fixed space of H^n: kernel dimension of H^n - id over F_{q^n}.
KernelReport semilinear_kernel_dim(const SigmaForm& F);

/// Default dispatch: restricted method for form polynomials.
KernelReport kernel_dim(const SigmaForm& F);
/// Default dispatch: Dickson rank for general polynomials.
KernelReport kernel_dim(const LinPoly& f);

bool permutation_check(const SigmaForm& F);
/// True iff dim ker f = t; when true also verifies the norm condition
/// N_{q^n/q}(det D_red) = (-1)^{s(t-1)}.
bool max_kernel_check(const SigmaForm& F);

/// (P_{0,n}, ..., P_{t-1,n}) of the coefficient recursion; the kernel is
/// maximal iff this equals the unit vector e_r.
std::vector<FFElem> recursive_P(const SigmaForm& F);

struct TrinomialBound {
    unsigned bound = 0;
    bool improved = false;          // whether the min{t-1,(n-1)l+s} bound fired
    unsigned ell = 0;
    bool hyp_t = false, cond1 = false, cond2 = false, cond3 = false;
};

/// Kernel bound for b-support {0, ell} trinomial forms.
TrinomialBound trinomial_bound(const SigmaForm& F);

/// t - dim_{F_{q^n}} ker G = rank(D_red).
unsigned g_kernel_bound(const SigmaForm& F);

enum class QuadRoots { TwoInBase, OneInBase, TwoInExt };

struct T2Result {
    unsigned dim = 0;
    std::string branch;
    std::optional<QuadRoots> quad;   // root location of the n=3 quadratic
};

/// Explicit t=2 classification for n in {2,3} via the closed coefficient
/// criteria; requires b_0, b_1 != 0.
T2Result t2_classify(const SigmaForm& F);

/// Root location of Y^2 + B*Y + C with B, C in the subfield F_q = F_{p^e}.
QuadRoots classify_quadratic(const FieldCtx& ctx, unsigned e, const FFElem& B,
                             const FFElem& C);

}  // namespace linroots
