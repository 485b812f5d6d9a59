#include "linroots/gf.hpp"

#include <algorithm>
#include <numeric>

#include "linroots/pmat.hpp"

namespace linroots {

namespace {

using u128 = unsigned __int128;

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t n) {
    return (uint64_t)((u128)a * b % n);
}

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t n) {
    uint64_t r = 1 % n;
    a %= n;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, n);
        a = mulmod_u64(a, a, n);
        e >>= 1;
    }
    return r;
}

// F_p[x] helpers on coefficient vectors (least degree first, trimmed).

void trim(std::vector<uint64_t>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::vector<uint64_t> poly_mod(std::vector<uint64_t> a,
                               const std::vector<uint64_t>& b, uint64_t p) {
    trim(a);
    size_t db = b.size() - 1;
    uint64_t lead_inv = pmat::inv_mod(b[db], p);
    while (a.size() > db) {
        uint64_t coef = mulmod_u64(a.back(), lead_inv, p);
        size_t shift = a.size() - 1 - db;
        for (size_t i = 0; i <= db; ++i) {
            uint64_t s = mulmod_u64(coef, b[i], p);
            a[shift + i] = (a[shift + i] + p - s) % p;
        }
        trim(a);
    }
    return a;
}

std::vector<uint64_t> poly_mulmod(const std::vector<uint64_t>& a,
                                  const std::vector<uint64_t>& b,
                                  const std::vector<uint64_t>& f, uint64_t p) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint64_t> r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + mulmod_u64(a[i], b[j], p)) % p;
    }
    return poly_mod(std::move(r), f, p);
}

// x^(p^k) mod f, by repeated p-th powering of x.
std::vector<uint64_t> poly_xq_pow(unsigned k, const std::vector<uint64_t>& f,
                                  uint64_t p) {
    std::vector<uint64_t> x = {0, 1};
    x = poly_mod(std::move(x), f, p);
    for (unsigned i = 0; i < k; ++i) {
        // x <- x^p mod f via square-and-multiply
        std::vector<uint64_t> r = {1}, base = x;
        uint64_t e = p;
        while (e) {
            if (e & 1) r = poly_mulmod(r, base, f, p);
            base = poly_mulmod(base, base, f, p);
            e >>= 1;
        }
        x = std::move(r);
    }
    return x;
}

std::vector<uint64_t> poly_gcd(std::vector<uint64_t> a, std::vector<uint64_t> b,
                               uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        auto r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

}  // namespace

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL})
        if (n % q == 0) return n == q;
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                       29ULL, 31ULL, 37ULL}) {
        if (a % n == 0) continue;
        uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i < s - 1; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

namespace {

uint64_t pollard_rho(uint64_t n) {
    if ((n & 1) == 0) return 2;
    for (uint64_t c = 1;; ++c) {
        uint64_t x = 2, y = 2, d = 1;
        while (d == 1) {
            x = (mulmod_u64(x, x, n) + c) % n;
            y = (mulmod_u64(y, y, n) + c) % n;
            y = (mulmod_u64(y, y, n) + c) % n;
            d = std::gcd(x > y ? x - y : y - x, n);
        }
        if (d != n) return d;
    }
}

}  // namespace

std::vector<uint64_t> factor_u64(uint64_t n) {
    std::vector<uint64_t> primes;
    std::vector<uint64_t> stack = {n};
    while (!stack.empty()) {
        uint64_t v = stack.back();
        stack.pop_back();
        if (v < 2) continue;
        if (is_prime_u64(v)) {
            primes.push_back(v);
            continue;
        }
        for (uint64_t q = 2; q < 2000 && q * q <= v; ++q) {
            while (v % q == 0) { primes.push_back(q); v /= q; }
        }
        if (v == 1) continue;
        if (is_prime_u64(v)) { primes.push_back(v); continue; }
        uint64_t d = pollard_rho(v);
        stack.push_back(d);
        stack.push_back(v / d);
    }
    std::sort(primes.begin(), primes.end());
    return primes;
}

bool is_irreducible(uint64_t p, const std::vector<uint32_t>& poly) {
    unsigned m = (unsigned)poly.size() - 1;
    if (m == 0) return false;
    if (m == 1) return true;
    std::vector<uint64_t> f(poly.begin(), poly.end());
    // x^(p^m) == x mod f
    auto xm = poly_xq_pow(m, f, p);
    std::vector<uint64_t> x = {0, 1};
    auto diff = xm;
    diff.resize(std::max(diff.size(), x.size()), 0);
    for (size_t i = 0; i < x.size(); ++i) diff[i] = (diff[i] + p - x[i]) % p;
    trim(diff);
    if (!diff.empty()) return false;
    // gcd(x^(p^(m/r)) - x, f) == 1 for each prime r | m
    std::vector<unsigned> prime_divs;
    unsigned mm = m;
    for (unsigned q = 2; q <= mm; ++q)
        if (mm % q == 0) {
            prime_divs.push_back(q);
            while (mm % q == 0) mm /= q;
        }
    for (unsigned r : prime_divs) {
        auto xk = poly_xq_pow(m / r, f, p);
        auto d = xk;
        d.resize(std::max(d.size(), x.size()), 0);
        for (size_t i = 0; i < x.size(); ++i) d[i] = (d[i] + p - x[i]) % p;
        auto g = poly_gcd(f, d, p);
        if (g.size() != 1) return false;
    }
    return true;
}

FieldCtx::FieldCtx(uint64_t p, unsigned m,
                   std::optional<std::vector<uint32_t>> modulus)
    : p_(p), m_(m) {
    if (!is_prime_u64(p)) throw FieldError("NotPrime: p=" + std::to_string(p));
    if (m < 1) throw FieldError("DegreeMismatch: m must be >= 1");
    // p^m must fit comfortably in 64 bits
    u128 sz = 1;
    for (unsigned i = 0; i < m; ++i) {
        sz *= p;
        if (sz > ((u128)1 << 62))
            throw FieldError("FieldTooLarge: p^m exceeds 2^62");
    }
    size_ = (uint64_t)sz;

    if (modulus) {
        mod_ = *modulus;
        if (mod_.size() != m + 1 || mod_[m] != 1)
            throw FieldError("DegreeMismatch: modulus must be monic of degree m");
        for (auto c : mod_)
            if (c >= p) throw FieldError("DegreeMismatch: modulus coefficient >= p");
        if (!is_irreducible(p, mod_))
            throw FieldError("ReducibleModulus");
    } else {
        // first monic irreducible in counter order of the lower coefficients
        mod_.assign(m + 1, 0);
        mod_[m] = 1;
        for (uint64_t v = 0;; ++v) {
            if (v >= size_) throw FieldError("ReducibleModulus: no irreducible found");
            uint64_t w = v;
            for (unsigned i = 0; i < m; ++i) { mod_[i] = (uint32_t)(w % p); w /= p; }
            if (is_irreducible(p, mod_)) break;
        }
    }

    // reduction rows: x^(m+k) mod modulus
    red_.resize(m > 1 ? m - 1 : 0);
    std::vector<uint32_t> cur(m, 0);  // x^m mod f = -lower(f)
    for (unsigned i = 0; i < m; ++i)
        cur[i] = (uint32_t)((p - mod_[i]) % p);
    for (unsigned k = 0; k + 1 < m; ++k) {
        red_[k] = cur;
        // cur <- cur * x mod f
        std::vector<uint32_t> nxt(m, 0);
        uint64_t top = cur[m - 1];
        for (unsigned i = m - 1; i >= 1; --i) nxt[i] = cur[i - 1];
        nxt[0] = 0;
        for (unsigned i = 0; i < m; ++i) {
            uint64_t s = (uint64_t)nxt[i] + top * ((p - mod_[i]) % p) % p;
            nxt[i] = (uint32_t)(s % p);
        }
        cur = std::move(nxt);
    }
    // Frobenius tables: frob_[e] column j = (x^j)^(p^e)
    frob_.assign(m, std::vector<uint32_t>(m * (size_t)m, 0));
    // e = 0: identity
    for (unsigned j = 0; j < m; ++j) frob_[0][(size_t)j * m + j] = 1;
    if (m > 1) {
        // x^p as an element
        FFElem x{std::vector<uint32_t>(m, 0)};
        x.c[1] = 1;
        FFElem xp = pow(x, p);
        // columns of frob_[1]: powers of xp
        FFElem col = one();
        for (unsigned j = 0; j < m; ++j) {
            for (unsigned i = 0; i < m; ++i) frob_[1][(size_t)j * m + i] = col.c[i];
            col = mul(col, xp);
        }
        for (unsigned e = 2; e < m; ++e) {
            // frob_[e] = frob_[1] * frob_[e-1]
            for (unsigned j = 0; j < m; ++j)
                for (unsigned i = 0; i < m; ++i) {
                    uint64_t s = 0;
                    for (unsigned k = 0; k < m; ++k)
                        s += (uint64_t)frob_[1][(size_t)k * m + i] *
                             frob_[e - 1][(size_t)j * m + k] % p_;
                    frob_[e][(size_t)j * m + i] = (uint32_t)(s % p_);
                }
        }
    }
}

FFElem FieldCtx::from_int(int64_t v) const {
    FFElem r = zero();
    int64_t w = v % (int64_t)p_;
    if (w < 0) w += (int64_t)p_;
    r.c[0] = (uint32_t)w;
    return r;
}

FFElem FieldCtx::from_index(uint64_t idx) const {
    FFElem r = zero();
    for (unsigned i = 0; i < m_ && idx; ++i) {
        r.c[i] = (uint32_t)(idx % p_);
        idx /= p_;
    }
    return r;
}

uint64_t FieldCtx::to_index(const FFElem& a) const {
    uint64_t v = 0;
    for (unsigned i = m_; i-- > 0;) v = v * p_ + a.c[i];
    return v;
}

bool FieldCtx::is_zero(const FFElem& a) const {
    return std::all_of(a.c.begin(), a.c.end(), [](uint32_t x) { return x == 0; });
}

void FieldCtx::check(const FFElem& a) const {
    if (a.c.size() != m_) throw FieldError("DegreeMismatch: element size");
    for (auto x : a.c)
        if (x >= p_) throw FieldError("DegreeMismatch: coordinate out of range");
}

FFElem FieldCtx::add(const FFElem& a, const FFElem& b) const {
    FFElem r = a;
    for (unsigned i = 0; i < m_; ++i) {
        uint64_t s = (uint64_t)r.c[i] + b.c[i];
        r.c[i] = (uint32_t)(s >= p_ ? s - p_ : s);
    }
    return r;
}

FFElem FieldCtx::sub(const FFElem& a, const FFElem& b) const {
    FFElem r = a;
    for (unsigned i = 0; i < m_; ++i) {
        uint64_t s = (uint64_t)r.c[i] + p_ - b.c[i];
        r.c[i] = (uint32_t)(s >= p_ ? s - p_ : s);
    }
    return r;
}

FFElem FieldCtx::neg(const FFElem& a) const { return sub(zero(), a); }

std::vector<uint32_t> FieldCtx::raw_mul(const std::vector<uint32_t>& a,
                                        const std::vector<uint32_t>& b) const {
    std::vector<uint64_t> acc(2 * (size_t)m_ - 1, 0);
    for (unsigned i = 0; i < m_; ++i) {
        if (a[i] == 0) continue;
        for (unsigned j = 0; j < m_; ++j)
            acc[i + j] = (acc[i + j] + (uint64_t)a[i] * b[j]) % p_;
    }
    // fold degrees >= m using the reduction rows
    std::vector<uint32_t> r(m_, 0);
    for (unsigned i = 0; i < m_; ++i) r[i] = (uint32_t)(acc[i] % p_);
    for (unsigned k = 0; k + 1 < m_; ++k) {
        uint64_t hi = acc[m_ + k] % p_;
        if (hi == 0) continue;
        for (unsigned i = 0; i < m_; ++i) {
            uint64_t s = (uint64_t)r[i] + hi * red_[k][i] % p_;
            r[i] = (uint32_t)(s % p_);
        }
    }
    return r;
}

FFElem FieldCtx::mul(const FFElem& a, const FFElem& b) const {
    return FFElem{raw_mul(a.c, b.c)};
}

FFElem FieldCtx::inv(const FFElem& a) const {
    if (is_zero(a)) throw FieldError("DivisionByZero: inv(0)");
    // extended Euclid in F_p[x]
    std::vector<uint64_t> r0(mod_.begin(), mod_.end());
    std::vector<uint64_t> r1(a.c.begin(), a.c.end());
    std::vector<uint64_t> t0 = {}, t1 = {1};
    auto trim64 = [](std::vector<uint64_t>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    };
    trim64(r1);
    while (!r1.empty()) {
        // r0 = q*r1 + r2
        std::vector<uint64_t> q(r0.size() > r1.size() ? r0.size() - r1.size() + 1 : 1, 0);
        std::vector<uint64_t> rem = r0;
        uint64_t lead_inv = pmat::inv_mod(r1.back(), p_);
        while (rem.size() >= r1.size() && !rem.empty()) {
            uint64_t coef = mulmod_u64(rem.back(), lead_inv, p_);
            size_t shift = rem.size() - r1.size();
            q[shift] = coef;
            for (size_t i = 0; i < r1.size(); ++i)
                rem[shift + i] = (rem[shift + i] + p_ - mulmod_u64(coef, r1[i], p_)) % p_;
            trim64(rem);
        }
        // t2 = t0 - q*t1
        std::vector<uint64_t> qt(q.size() + t1.size(), 0);
        for (size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (size_t j = 0; j < t1.size(); ++j)
                qt[i + j] = (qt[i + j] + mulmod_u64(q[i], t1[j], p_)) % p_;
        }
        std::vector<uint64_t> t2(std::max(t0.size(), qt.size()), 0);
        for (size_t i = 0; i < t0.size(); ++i) t2[i] = t0[i];
        for (size_t i = 0; i < qt.size(); ++i) t2[i] = (t2[i] + p_ - qt[i] % p_) % p_;
        trim64(t2);
        t0 = std::move(t1);
        t1 = std::move(t2);
        r0 = std::move(r1);
        r1 = std::move(rem);
    }
    // r0 is the gcd (a unit); scale t0 by its inverse
    uint64_t g_inv = pmat::inv_mod(r0[0], p_);
    FFElem out = zero();
    for (size_t i = 0; i < t0.size() && i < m_; ++i)
        out.c[i] = (uint32_t)mulmod_u64(t0[i], g_inv, p_);
    return out;
}

FFElem FieldCtx::pow(const FFElem& a, uint64_t e) const {
    FFElem r = one(), base = a;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

FFElem FieldCtx::frobenius(const FFElem& a, unsigned e) const {
    e %= m_;
    if (e == 0) return a;
    const auto& M = frob_[e];
    FFElem r = zero();
    for (unsigned j = 0; j < m_; ++j) {
        uint64_t aj = a.c[j];
        if (aj == 0) continue;
        for (unsigned i = 0; i < m_; ++i) {
            uint64_t s = (uint64_t)r.c[i] + aj * M[(size_t)j * m_ + i] % p_;
            r.c[i] = (uint32_t)(s % p_);
        }
    }
    return r;
}

void FieldCtx::require_divisor(unsigned d) const {
    if (d == 0 || m_ % d != 0)
        throw FieldError("NotADivisor: d=" + std::to_string(d));
}

FFElem FieldCtx::rel_norm(const FFElem& a, unsigned d) const {
    require_divisor(d);
    u128 pd = 1;
    for (unsigned i = 0; i < d; ++i) pd *= p_;
    uint64_t e = (uint64_t)((size_ - 1) / ((uint64_t)pd - 1));
    return pow(a, e);
}

FFElem FieldCtx::rel_trace(const FFElem& a, unsigned d) const {
    require_divisor(d);
    FFElem r = zero();
    for (unsigned i = 0; i < m_ / d; ++i) r = add(r, frobenius(a, d * i));
    return r;
}

bool FieldCtx::in_subfield(const FFElem& a, unsigned d) const {
    require_divisor(d);
    return frobenius(a, d) == a;
}

const FFElem& FieldCtx::generator() const {
    if (gen_) return *gen_;
    uint64_t n = size_ - 1;
    auto primes = factor_u64(n);
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    for (uint64_t idx = 1; idx < size_; ++idx) {
        FFElem cand = from_index(idx);
        bool ok = true;
        for (uint64_t r : primes) {
            if (pow(cand, n / r) == one()) { ok = false; break; }
        }
        if (ok) { gen_ = cand; return *gen_; }
    }
    throw FieldError("no generator found");  // unreachable for a field
}

std::optional<uint64_t> FieldCtx::dlog(const FFElem& a) const {
    if (is_zero(a)) return std::nullopt;
    if (size_ > (1ULL << 24)) return std::nullopt;
    const FFElem& g = generator();
    FFElem cur = one();
    for (uint64_t k = 0; k < size_ - 1; ++k) {
        if (cur == a) return k;
        cur = mul(cur, g);
    }
    return std::nullopt;
}

std::vector<FFElem> FieldCtx::subfield_basis(unsigned d) const {
    require_divisor(d);
    // null space of Frob^d - I over F_p
    pmat::Mat M(m_, pmat::Row(m_, 0));
    for (unsigned j = 0; j < m_; ++j) {
        FFElem basis = zero();
        basis.c[j] = 1;
        FFElem img = frobenius(basis, d);
        for (unsigned i = 0; i < m_; ++i) {
            uint64_t v = img.c[i];
            if (i == j) v = (v + p_ - 1) % p_;
            M[i][j] = (uint32_t)v;
        }
    }
    auto ns = pmat::nullspace(M, m_, p_);
    std::vector<FFElem> out;
    for (auto& row : ns) out.push_back(FFElem{row});
    return out;
}

}  // namespace linroots
