#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace linroots {

struct FieldError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Element of F_{p^m} in polynomial-basis coordinates, least degree first.
struct FFElem {
    std::vector<uint32_t> c;
    bool operator==(const FFElem&) const = default;
};

// 64-bit integer helpers shared by the field machinery.
bool is_prime_u64(uint64_t n);
std::vector<uint64_t> factor_u64(uint64_t n);

/// Arithmetic context for F_{p^m} = F_p[x]/(modulus), modulus monic irreducible.
///
/// The modulus is either supplied (and verified) or chosen deterministically as
/// the first monic irreducible of degree m in counter order of the lower
/// coefficients, so identical parameters always give identical fields.
class FieldCtx {
public:
    FieldCtx(uint64_t p, unsigned m,
             std::optional<std::vector<uint32_t>> modulus = std::nullopt);

    uint64_t p() const { return p_; }
    unsigned degree() const { return m_; }
    const std::vector<uint32_t>& modulus() const { return mod_; }
    uint64_t size() const { return size_; }          // p^m
    uint64_t order() const { return size_ - 1; }     // |F^*|

    FFElem zero() const { return FFElem{std::vector<uint32_t>(m_, 0)}; }
    FFElem one() const { return from_int(1); }
    FFElem from_int(int64_t v) const;                // prime-subfield constant
    FFElem from_index(uint64_t idx) const;           // base-p digits, c0 = least digit
    uint64_t to_index(const FFElem& a) const;
    bool is_zero(const FFElem& a) const;
    void check(const FFElem& a) const;

    FFElem add(const FFElem& a, const FFElem& b) const;
    FFElem sub(const FFElem& a, const FFElem& b) const;
    FFElem neg(const FFElem& a) const;
    FFElem mul(const FFElem& a, const FFElem& b) const;
    FFElem inv(const FFElem& a) const;
    FFElem pow(const FFElem& a, uint64_t e) const;

    /// a^(p^e); e is reduced mod m. Uses precomputed F_p-linear Frobenius tables.
    FFElem frobenius(const FFElem& a, unsigned e) const;

    /// N_{p^m/p^d}(a) = a^((p^m-1)/(p^d-1)), d | m.
    FFElem rel_norm(const FFElem& a, unsigned d) const;
    /// Tr_{p^m/p^d}(a) = sum of a^(p^(d*i)), d | m.
    FFElem rel_trace(const FFElem& a, unsigned d) const;
    bool in_subfield(const FFElem& a, unsigned d) const;

    /// Deterministically chosen multiplicative generator (first in counter
    /// order with full order p^m - 1). Computed lazily and cached.
    const FFElem& generator() const;
    /// Discrete log base generator() by enumeration; small fields only.
    std::optional<uint64_t> dlog(const FFElem& a) const;

    /// F_p-basis of the subfield F_{p^d} inside this field, d | m.
    std::vector<FFElem> subfield_basis(unsigned d) const;

private:
    uint64_t p_;
    unsigned m_;
    std::vector<uint32_t> mod_;   // length m+1, monic
    uint64_t size_;
    std::vector<std::vector<uint32_t>> red_;   // x^(m+k) mod modulus, k = 0..m-2
    // frob_[e] is the m x m matrix of a -> a^(p^e), column-major by input coord
    std::vector<std::vector<uint32_t>> frob_;
    mutable std::optional<FFElem> gen_;

    void require_divisor(unsigned d) const;
    std::vector<uint32_t> raw_mul(const std::vector<uint32_t>& a,
                                  const std::vector<uint32_t>& b) const;
};

/// True if the monic polynomial (length deg+1 coefficient list over F_p) is
/// irreducible, by the gcd(x^(p^(m/r)) - x, f) test.
bool is_irreducible(uint64_t p, const std::vector<uint32_t>& poly);

}  // namespace linroots
