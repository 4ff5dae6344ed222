#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "skewrit/ktower.hpp"

using namespace skewrit;

namespace {

Rat rnd_rat(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    return Rat(num(rng), den(rng));
}

CycloElem rnd_cyclo(std::mt19937_64& rng, uint64_t order) {
    std::vector<Rat> c(order / 2);
    for (auto& a : c) a = rnd_rat(rng);
    return CycloElem(order, std::move(c));
}

KElem rnd_kelem(std::mt19937_64& rng, uint64_t order, bool with_denominator = true) {
    std::vector<CycloElem> num, den;
    std::uniform_int_distribution<int> deg(0, 2);
    int dn = deg(rng), dd = with_denominator ? deg(rng) : 0;
    for (int i = 0; i <= dn; ++i) num.push_back(rnd_cyclo(rng, order));
    for (int i = 0; i < dd; ++i) den.push_back(rnd_cyclo(rng, order));
    den.push_back(CycloElem::one(order));  // keeps the denominator nonzero
    return KElem(order, RatFunc<CycloElem>(Poly<CycloElem>(num), Poly<CycloElem>(den)));
}

}  // namespace

TEST_CASE("cyclo_reduce folds high powers via omega^(l/2) = -1") {
    CycloElem a = CycloElem::reduce(4, {Rat(0), Rat(0), Rat(1)});  // omega^2
    CHECK(a.coeffs() == std::vector<Rat>{Rat(-1), Rat(0)});

    CycloElem b = CycloElem::reduce(4, {Rat(1), Rat(0)});
    CHECK(b.coeffs() == std::vector<Rat>{Rat(1), Rat(0)});

    CycloElem c = CycloElem::reduce(8, {Rat(0), Rat(0), Rat(0), Rat(0), Rat(1)});  // omega^4
    CHECK(c.coeffs() == std::vector<Rat>{Rat(-1), Rat(0), Rat(0), Rat(0)});

    CHECK_THROWS_AS(CycloElem::zero(6), std::invalid_argument);
    CHECK_THROWS_AS(CycloElem::zero(1), std::invalid_argument);
}

TEST_CASE("sigma on omega and on the fixed field") {
    SUBCASE("l=4, kappa=1: sigma(omega) = omega^3 = -omega") {
        Sigma s(4, 1);
        KElem w = KElem::omega(4);
        CHECK(sigma_apply(w, s) == -w);
    }
    SUBCASE("rational scalars are fixed") {
        Sigma s(8, 1);
        KElem e = KElem::from_rational(8, Rat(7, 3)) * KElem::z(8);
        CHECK(sigma_apply(e, s, 5) == e);
    }
    SUBCASE("l=16, kappa=2: sigma^4(omega) = omega^(5^4 mod 16) = omega") {
        Sigma s(16, 2);
        KElem w = KElem::omega(16);
        CHECK(sigma_apply(w, s, 4) == w);
        CHECK(sigma_apply(w, s, 1) != w);
    }
    SUBCASE("order mismatch rejected") {
        Sigma s(8, 1);
        CHECK_THROWS_AS(sigma_apply(KElem::omega(4), s), FieldMismatch);
    }
}

TEST_CASE("eval_at_rationals") {
    uint64_t l = 4;
    KElem w = KElem::omega(l), z = KElem::z(l);
    CHECK(eval_at_rationals(w + z, Rat(2), Rat(3)) == Rat(5));
    CHECK_THROWS_AS(eval_at_rationals(z.inverse(), Rat(2), Rat(0)), DenominatorVanishes);

    // omega^2 + 1 reduces to the zero element when l = 4
    KElem e = (w * w + KElem::one(l)) / (z + KElem::one(l));
    CHECK(e.is_zero());
    CHECK(eval_at_rationals(e, Rat(5), Rat(2)) == Rat(0));
}

TEST_CASE("field operations on K") {
    uint64_t l = 4;
    KElem w = KElem::omega(l), z = KElem::z(l);
    CHECK(z.inverse() * z == KElem::one(l));
    CHECK(w * w == KElem::from_rational(l, Rat(-1)));
    CHECK(w.inverse() == -w);  // omega * (-omega) = 1
    CHECK_THROWS_AS(KElem::zero(l).inverse(), DivisionByZero);
}

TEST_CASE("field axioms and homomorphisms on random samples") {
    std::mt19937_64 rng(20240811);
    for (uint64_t l : {2ull, 4ull, 8ull}) {
        Sigma s(l, 1);
        for (int t = 0; t < 12; ++t) {
            KElem a = rnd_kelem(rng, l), b = rnd_kelem(rng, l), c = rnd_kelem(rng, l);
            CHECK((a + b) + c == a + (b + c));
            CHECK(a * (b + c) == a * b + a * c);
            if (!a.is_zero()) CHECK(a * a.inverse() == KElem::one(l));
            CHECK(sigma_apply(a + b, s) == sigma_apply(a, s) + sigma_apply(b, s));
            CHECK(sigma_apply(a * b, s) == sigma_apply(a, s) * sigma_apply(b, s));
        }
    }
}

TEST_CASE("sigma^(2^i) fixes omega_i when a_i + i + kappa = L (L = 2 kappa)") {
    for (uint32_t kappa : {2u, 3u, 4u, 5u, 6u}) {
        uint64_t L = 2 * kappa;
        uint64_t l = 1ull << L;
        Sigma s(l, kappa);
        for (uint32_t i = 1; i < kappa; ++i) {
            uint64_t a_i = kappa - i;
            KElem wi = KElem::omega_pow(l, static_cast<int64_t>(1ull << a_i));
            CHECK(sigma_apply(wi, s, 1ull << i) == wi);
        }
    }
}

TEST_CASE("eval_at_rationals is a ring homomorphism where defined") {
    // additive always; multiplicative as long as the product stays below the
    // folding threshold omega^(l/2), which is the regime the transfer step uses
    std::mt19937_64 rng(7);
    uint64_t l = 8;
    Rat t1(3), t2(2);
    for (int t = 0; t < 10; ++t) {
        KElem a = rnd_kelem(rng, l, false), b = rnd_kelem(rng, l, false);
        CHECK(eval_at_rationals(a + b, t1, t2) ==
              eval_at_rationals(a, t1, t2) + eval_at_rationals(b, t1, t2));
    }
    for (int t = 0; t < 10; ++t) {
        std::vector<Rat> ca(l / 2, Rat(0)), cb(l / 2, Rat(0));
        ca[0] = rnd_rat(rng);
        ca[1] = rnd_rat(rng);
        cb[0] = rnd_rat(rng);
        cb[1] = rnd_rat(rng);
        KElem a = KElem::from_cyclo(CycloElem(l, ca)) * KElem::z(l);
        KElem b = KElem::from_cyclo(CycloElem(l, cb)) + KElem::z(l);
        CHECK(eval_at_rationals(a * b, t1, t2) ==
              eval_at_rationals(a, t1, t2) * eval_at_rationals(b, t1, t2));
    }
}
