#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "linroots/linset.hpp"

using namespace linroots;

TEST_CASE("frobenius map gives a scattered set of maximum size") {
    // F(x) = x^q over F_{q^4}: every point has weight 1
    TowerCtx tw(3, 1, 2, 2);
    LinearSetSpec L(tw, 1, {tw.field.one(), tw.field.zero()});
    WeightSpectrum sp = weight_spectrum(L);
    CHECK(is_scattered(sp));
    CHECK_FALSE(is_club(sp).has_value());
    CHECK(sp.size == (tw.field.size() - 1) / 2);   // (q^4-1)/(q-1), q = 3
    CHECK(sp.infinity_weight == 0);                // G is invertible
    CHECK(point_weight(L, tw.field.zero()) == 0);
}

TEST_CASE("trace map gives a club with one heavy point") {
    TowerCtx tw(2, 1, 2, 3);
    FFElem one = tw.field.one();
    LinearSetSpec L(tw, 1, {one, one, one});
    WeightSpectrum sp = weight_spectrum(L);
    auto club = is_club(sp);
    REQUIRE(club.has_value());
    CHECK(*club == 4);   // n(t-1)
    CHECK(sp.counts.at(4) == 1);
    CHECK(sp.infinity_weight == 4);
    CHECK_FALSE(is_scattered(sp));
    // direct heavy-point weight: slope 0 is the kernel-of-G direction
    CHECK(point_weight(L, tw.field.zero()) == 4);
}

TEST_CASE("per-slope weights agree with the exhaustive fibers") {
    std::mt19937 rng(51);
    TowerCtx tw(2, 1, 2, 2);
    const FieldCtx& fld = tw.field;
    std::uniform_int_distribution<uint64_t> dist(0, fld.size() - 1);
    for (int trial = 0; trial < 15; ++trial) {
        std::vector<FFElem> a = {fld.from_index(dist(rng)),
                                 fld.from_index(dist(rng))};
        if (fld.is_zero(a[0]) && fld.is_zero(a[1])) continue;
        LinearSetSpec L(tw, 1, a);
        WeightSpectrum exhaustive = weight_spectrum(L);
        WeightSpectrum serial = weight_spectrum_serial(L);
        WeightSpectrum by_slope = weight_spectrum_by_slope(L);
        CHECK(exhaustive.counts == serial.counts);
        CHECK(exhaustive.counts == by_slope.counts);
        CHECK(exhaustive.size == by_slope.size);
        CHECK(exhaustive.infinity_weight == by_slope.infinity_weight);
        // spot-check individual slopes against the matrix path
        LinPoly F = L.map_poly();
        for (int k = 0; k < 5; ++k) {
            FFElem m = fld.from_index(dist(rng));
            unsigned w = point_weight(L, m);
            uint64_t fiber = 0;
            for (uint64_t i = 1; i < fld.size(); ++i) {
                FFElem x = fld.from_index(i);
                if (evaluate(F, x) == fld.mul(m, x)) ++fiber;
            }
            uint64_t qw = ((uint64_t)1 << w) - 1;   // q = 2
            CHECK(fiber == qw);
        }
    }
}

TEST_CASE("spectrum respects the exhaustive limit") {
    TowerCtx tw(5, 1, 3, 2);   // 5^6 < 2^22 but we pass a tiny limit
    LinearSetSpec L(tw, 1, {tw.field.one(), tw.field.one()});
    // t=2, n<=3: falls back to the per-slope matrix path instead of failing
    CHECK_NOTHROW(weight_spectrum(L, 100));
    TowerCtx big(5, 1, 3, 3);
    LinearSetSpec L3(big, 1,
                     {big.field.one(), big.field.one(), big.field.zero()});
    CHECK_THROWS_AS(weight_spectrum(L3, 100), FieldError);
}

TEST_CASE("scattered criterion over F_{q^6}: q=3 agrees with enumeration") {
    TowerCtx tw(3, 1, 3, 2);
    const FieldCtx& fld = tw.field;
    unsigned scattered_seen = 0, checked = 0;
    for (uint64_t idx = 1; idx < fld.size() && checked < 40; ++idx) {
        FFElem alpha = fld.from_index(idx);
        FFElem na = fld.mul(alpha, fld.frobenius(alpha, 3));
        if (fld.is_zero(na) || na == fld.one()) continue;
        ++checked;
        F3Criterion crit = scattered_f3_criterion(tw, alpha);
        LinearSetSpec L(tw, 5, {fld.one(), alpha});
        WeightSpectrum sp = weight_spectrum(L);
        CHECK(crit.scattered == is_scattered(sp));
        F3Cardinality card = lf3_cardinality(tw, alpha);
        CHECK(card.size == sp.size);
        uint64_t x2 = sp.counts.count(2) ? sp.counts.at(2) : 0;
        CHECK(card.x2 == x2);
        CHECK(x2 % 13 == 0);   // multiple of q^2+q+1
        if (crit.scattered) ++scattered_seen;
    }
    CHECK(checked == 40);
    CHECK(scattered_seen > 0);
}

TEST_CASE("norm precondition is enforced") {
    TowerCtx tw(3, 1, 3, 2);
    const FieldCtx& fld = tw.field;
    // alpha = 0 and any alpha with N_{q^6/q^3}(alpha) = 1 are rejected
    CHECK_THROWS_AS(scattered_f3_criterion(tw, fld.zero()), FieldError);
    CHECK_THROWS_AS(scattered_f3_criterion(tw, fld.one()), FieldError);
    // wrong tower shape
    TowerCtx bad(3, 1, 2, 2);
    CHECK_THROWS_AS(scattered_f3_criterion(bad, bad.field.one()), FieldError);
}

TEST_CASE("alpha sweeps: q in {3, 4} nonempty, q = 2 empty, all verified") {
    {
        TowerCtx tw(3, 1, 3, 2);
        std::vector<FFElem> alphas = search_alpha(tw);
        CHECK(!alphas.empty());
        CHECK(alphas == search_alpha_serial(tw));
        for (size_t i = 0; i < std::min<size_t>(alphas.size(), 5); ++i) {
            LinearSetSpec L(tw, 5, {tw.field.one(), alphas[i]});
            CHECK(is_scattered(weight_spectrum(L)));
        }
    }
    {
        TowerCtx tw(2, 2, 3, 2);   // q = 4
        CHECK(!search_alpha(tw).empty());
    }
    {
        TowerCtx tw(2, 1, 3, 2);   // q = 2: existence only claimed for q > 2
        CHECK(search_alpha(tw).empty());
    }
}

TEST_CASE("spec validation") {
    TowerCtx tw(2, 1, 2, 2);
    std::vector<FFElem> zeros = {tw.field.zero(), tw.field.zero()};
    CHECK_THROWS_AS(LinearSetSpec(tw, 1, zeros), FieldError);
    std::vector<FFElem> one = {tw.field.one()};
    CHECK_THROWS_AS(LinearSetSpec(tw, 1, one), FieldError);
}
