#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "skewrit/genabp.hpp"

using namespace skewrit;

namespace {

Mat<Rat> rnd_mat(std::mt19937_64& rng, size_t m) {
    std::uniform_int_distribution<int> d(-3, 3);
    Mat<Rat> a = Mat<Rat>::zero(m, m, Rat(0));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) a.at(i, j) = Rat(d(rng));
    return a;
}

Mat<KElem> rnd_kmat(std::mt19937_64& rng, uint64_t order, size_t m) {
    std::uniform_int_distribution<int> d(-2, 2);
    Mat<KElem> a = Mat<KElem>::zero(m, m, KElem::zero(order));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) {
            std::vector<Rat> c(order / 2);
            for (auto& x : c) x = Rat(d(rng));
            a.at(i, j) = KElem::from_cyclo(CycloElem(order, c));
        }
    return a;
}

// generalized word a_0 x_{k_1} a_1 ... x_{k_d} a_d as a width-1 ABP
GenABP<KElem> word_abp(const std::vector<Mat<KElem>>& coeffs, const std::vector<int>& vars) {
    GenABP<KElem> b;
    b.width = 1;
    b.coeff_dim = coeffs.front().rows();
    uint64_t order = coeffs.front().like().order();
    Mat<KElem> id = Mat<KElem>::identity(b.coeff_dim, KElem::zero(order));
    b.c = {id};
    b.b = {id};
    for (size_t l = 0; l < vars.size(); ++l) {
        Mat<KElem> left = (l == 0) ? coeffs[0] : id;
        GenLinForm<KElem> form{{{l == 0 ? coeffs[0] : id, vars[l], coeffs[l + 1]}}};
        b.layers.push_back({{form}});
    }
    return b;
}

}  // namespace

TEST_CASE("q0 conjugation identity for l, d in 1..6") {
    std::mt19937_64 rng(21);
    for (size_t ell = 1; ell <= 6; ++ell)
        for (size_t d = 1; d <= 6; ++d) {
            Mat<Rat> q0 = q0_matrix(ell, d);
            // permutation: inverse = transpose
            Mat<Rat> q0t = Mat<Rat>::zero(ell * d, ell * d, Rat(0));
            for (size_t i = 0; i < ell * d; ++i)
                for (size_t j = 0; j < ell * d; ++j) q0t.at(j, i) = q0.at(i, j);
            CHECK(q0 * q0t == Mat<Rat>::identity(ell * d, Rat(0)));
            for (int t = 0; t < (ell * d > 20 ? 3 : 10); ++t) {
                Mat<Rat> a = rnd_mat(rng, ell);
                Mat<Rat> id_d = Mat<Rat>::identity(d, Rat(0));
                CHECK(q0 * kron(id_d, a) * q0t == kron(a, id_d));
            }
        }
    CHECK(q0_matrix(1, 4) == Mat<Rat>::identity(4, Rat(0)));
    CHECK(q0_matrix(4, 1) == Mat<Rat>::identity(4, Rat(0)));
}

TEST_CASE("q0 for l=2, d=3 matches the printed matrices") {
    Mat<Rat> q0 = q0_matrix(2, 3);
    Mat<Rat> expect = Mat<Rat>::zero(6, 6, Rat(0));
    expect.at(0, 0) = Rat(1);
    expect.at(1, 2) = Rat(1);
    expect.at(2, 4) = Rat(1);
    expect.at(3, 1) = Rat(1);
    expect.at(4, 3) = Rat(1);
    expect.at(5, 5) = Rat(1);
    CHECK(q0 == expect);

    Mat<Rat> q0inv = Mat<Rat>::zero(6, 6, Rat(0));
    q0inv.at(0, 0) = Rat(1);
    q0inv.at(1, 3) = Rat(1);
    q0inv.at(2, 1) = Rat(1);
    q0inv.at(3, 4) = Rat(1);
    q0inv.at(4, 2) = Rat(1);
    q0inv.at(5, 5) = Rat(1);
    CHECK(inverse(q0) == q0inv);

    Mat<Rat> a(2, 2, std::vector<Rat>{Rat(1), Rat(2), Rat(3), Rat(4)});
    CHECK(q0 * kron(Mat<Rat>::identity(3, Rat(0)), a) * q0inv ==
          kron(a, Mat<Rat>::identity(3, Rat(0))));
}

TEST_CASE("eval_genabp basics") {
    uint64_t ell = 2;
    DivAlgebra alg(ell, 1);
    std::mt19937_64 rng(22);
    Mat<KElem> a = rnd_kmat(rng, ell, ell), b = rnd_kmat(rng, ell, ell);
    GenABP<KElem> B = word_abp({a, b}, {1});

    SUBCASE("single layer a x1 b with iota = a kron I") {
        Mat<KElem> p = rnd_kmat(rng, ell, 2 * ell);
        Mat<KElem> i2 = Mat<KElem>::identity(2, KElem::zero(ell));
        Mat<KElem> got = eval_genabp(B, {p}, Iota::AKronI);
        CHECK(got == kron(a, i2) * p * kron(b, i2));
        Mat<KElem> got2 = eval_genabp(B, {p}, Iota::IKronA);
        CHECK(got2 == kron(i2, a) * p * kron(i2, b));
    }
    SUBCASE("scalar coefficient algebra: both inclusions coincide") {
        GenABP<KElem> S;
        S.width = 1;
        S.coeff_dim = 1;
        Mat<KElem> one = Mat<KElem>::identity(1, KElem::zero(ell));
        S.c = {one};
        S.b = {one};
        S.layers.push_back({{GenLinForm<KElem>{{{one, 1, one}}}}});
        Mat<KElem> p = rnd_kmat(rng, ell, 3);
        CHECK(eval_genabp(S, {p}, Iota::AKronI) == eval_genabp(S, {p}, Iota::IKronA));
    }
    SUBCASE("dimension mismatch rejected") {
        Mat<KElem> p = rnd_kmat(rng, ell, 3);  // not a multiple of 2
        CHECK_THROWS_AS(eval_genabp(B, {p}, Iota::AKronI), ShapeMismatch);
    }
}

TEST_CASE("shifted cyclic evaluation structure") {
    uint64_t ell = 2;
    std::mt19937_64 rng(23);

    SUBCASE("d=1: single block, variables expanded in place") {
        YVarPacker pk{ell, 1, 1};
        Mat<KElem> a = rnd_kmat(rng, ell, ell), b = rnd_kmat(rng, ell, ell);
        GenABP<KElem> B = word_abp({a, b}, {1});
        auto blocks = shifted_cyclic_eval(B, pk);
        REQUIRE(blocks.size() == 1);
        CHECK(blocks[0].block_order == std::vector<size_t>{1});
        // expansion equals a * Y_{1,1} * b symbolically
        Mat<CommPoly<KElem>> got = expand_sml(blocks[0]);
        CommPoly<KElem> zero(KElem::zero(ell));
        Mat<CommPoly<KElem>> y = Mat<CommPoly<KElem>>::zero(ell, ell, zero);
        for (size_t i = 1; i <= ell; ++i)
            for (size_t j = 1; j <= ell; ++j)
                y.at(i - 1, j - 1) = CommPoly<KElem>::variable(pk.pack(i, j, 1, 1), KElem::zero(ell));
        auto lift = [&](const KElem& e) { return CommPoly<KElem>::constant(e); };
        CHECK(got == a.map(lift) * y * b.map(lift));
    }

    SUBCASE("d=3 word: block 2 follows pi_2 = (2,3,1)") {
        YVarPacker pk{ell, 3, 3};
        std::vector<Mat<KElem>> coeffs;
        for (int i = 0; i < 4; ++i) coeffs.push_back(rnd_kmat(rng, ell, ell));
        GenABP<KElem> B = word_abp(coeffs, {1, 2, 3});
        auto blocks = shifted_cyclic_eval(B, pk);
        REQUIRE(blocks.size() == 3);
        CHECK(blocks[1].block_order == std::vector<size_t>{2, 3, 1});
        auto lift = [&](const KElem& e) { return CommPoly<KElem>::constant(e); };
        auto ymat = [&](size_t k, size_t l) {
            CommPoly<KElem> zero(KElem::zero(ell));
            Mat<CommPoly<KElem>> y = Mat<CommPoly<KElem>>::zero(ell, ell, zero);
            for (size_t i = 1; i <= ell; ++i)
                for (size_t j = 1; j <= ell; ++j)
                    y.at(i - 1, j - 1) =
                        CommPoly<KElem>::variable(pk.pack(i, j, k, l), KElem::zero(ell));
            return y;
        };
        Mat<CommPoly<KElem>> expect = coeffs[0].map(lift) * ymat(1, 2) * coeffs[1].map(lift) *
                                      ymat(2, 3) * coeffs[2].map(lift) * ymat(3, 1) *
                                      coeffs[3].map(lift);
        CHECK(expand_sml(blocks[1]) == expect);
    }

    SUBCASE("zero ABP gives zero blocks") {
        YVarPacker pk{ell, 1, 2};
        GenABP<KElem> B;
        B.width = 1;
        B.coeff_dim = ell;
        Mat<KElem> z = Mat<KElem>::zero(ell, ell, KElem::zero(ell));
        B.c = {z};
        B.b = {Mat<KElem>::identity(ell, KElem::zero(ell))};
        B.layers.assign(2, {{GenLinForm<KElem>{{{Mat<KElem>::identity(ell, KElem::zero(ell)), 1,
                                                 Mat<KElem>::identity(ell, KElem::zero(ell))}}}}});
        for (const auto& blk : shifted_cyclic_eval(B, pk)) {
            Mat<CommPoly<KElem>> e = expand_sml(blk);
            CHECK(e.is_zero());
        }
    }
}

TEST_CASE("Z substitution is block-diagonal with pi-re-indexed blocks") {
    std::mt19937_64 rng(24);
    int words = 0;
    for (uint64_t ell : {2ull, 4ull}) {
        for (size_t d : {2ull, 3ull}) {
            int rounds = (ell == 4 && d == 3) ? 4 : 8;
            for (int t = 0; t < rounds; ++t) {
                size_t n = 2;
                YVarPacker pk{ell, n, d};
                std::vector<Mat<KElem>> coeffs;
                for (size_t i = 0; i <= d; ++i) coeffs.push_back(rnd_kmat(rng, ell, ell));
                std::vector<int> vars;
                std::uniform_int_distribution<int> vp(1, static_cast<int>(n));
                for (size_t i = 0; i < d; ++i) vars.push_back(vp(rng));
                GenABP<KElem> B = word_abp(coeffs, vars);

                // full symbolic route: substitute the block matrices under iota'
                auto lift = [&](const KElem& e) { return CommPoly<KElem>::constant(e); };
                GenABP<CommPoly<KElem>> BP;
                BP.width = B.width;
                BP.coeff_dim = B.coeff_dim;
                for (const auto& cbl : B.c) BP.c.push_back(cbl.map(lift));
                for (const auto& bbl : B.b) BP.b.push_back(bbl.map(lift));
                for (const auto& layer : B.layers) {
                    std::vector<std::vector<GenLinForm<CommPoly<KElem>>>> nl(
                        B.width, std::vector<GenLinForm<CommPoly<KElem>>>(B.width));
                    for (size_t a = 0; a < B.width; ++a)
                        for (size_t b2 = 0; b2 < B.width; ++b2)
                            for (const auto& su : layer[a][b2].summands)
                                nl[a][b2].summands.push_back(
                                    {su.a.map(lift), su.var, su.b.map(lift)});
                    BP.layers.push_back(std::move(nl));
                }
                std::vector<Mat<CommPoly<KElem>>> zpoints;
                for (size_t k = 1; k <= n; ++k) zpoints.push_back(ztilde_matrix(pk, k, ell));
                Mat<CommPoly<KElem>> full = eval_genabp(BP, zpoints, Iota::IKronA);

                auto blocks = shifted_cyclic_eval(B, pk);
                for (size_t bi = 1; bi <= d; ++bi)
                    for (size_t bj = 1; bj <= d; ++bj) {
                        Mat<CommPoly<KElem>> blockm = full.block(bi, bj, ell);
                        if (bi == bj) CHECK(blockm == expand_sml(blocks[bi - 1]));
                        else CHECK(blockm.is_zero());
                    }
                ++words;
            }
        }
    }
    CHECK(words >= 24);
}

TEST_CASE("to_roabp encoding") {
    uint64_t ell = 4;
    std::mt19937_64 rng(25);
    YVarPacker pk{ell, 2, 2};
    SUBCASE("exponent of y_{1,1,1,1} with l=4 is 31 on v_1") {
        Mat<KElem> id = Mat<KElem>::identity(ell, KElem::zero(ell));
        GenABP<KElem> B = word_abp({id, id, id}, {1, 1});
        auto blocks = shifted_cyclic_eval(B, pk);
        Roabp r = to_roabp(blocks[0], pk);
        CHECK(r.base == 5);
        // layer 1 reads block 1; the (0,0) entry carries y_{1,1,1,1} -> v^31
        bool found = false;
        for (size_t i = 0; i < r.width && !found; ++i)
            for (size_t j = 0; j < r.width && !found; ++j)
                if (r.layers[0][i][j].degree() >= 31 && !r.layers[0][i][j].coeff(31).is_zero())
                    found = true;
        CHECK(found);
        CHECK(r.var_order == std::vector<size_t>{1, 2});
    }
    SUBCASE("injective exponents and evaluation consistency") {
        std::vector<Mat<KElem>> coeffs{rnd_kmat(rng, ell, ell), rnd_kmat(rng, ell, ell),
                                       rnd_kmat(rng, ell, ell)};
        GenABP<KElem> B = word_abp(coeffs, {1, 2});
        auto blocks = shifted_cyclic_eval(B, pk);
        Roabp r = to_roabp(blocks[1], pk);
        CHECK(r.var_order == std::vector<size_t>{2, 1});
        // evaluating the ROABP matches evaluating the symbolic block
        std::vector<Rat> assign{Rat(2), Rat(3)};
        Mat<KElem> via_roabp = eval_roabp(r, assign);
        Mat<CommPoly<KElem>> sym = expand_sml(blocks[1]);
        std::map<uint32_t, KElem> amap;
        for (size_t i = 1; i <= ell; ++i)
            for (size_t j = 1; j <= ell; ++j)
                for (size_t k = 1; k <= 2; ++k)
                    for (size_t l = 1; l <= 2; ++l) {
                        uint64_t e = r.base * r.base * i + r.base * j + k;
                        mpz_class num, den;
                        mpz_pow_ui(num.get_mpz_t(), assign[l - 1].numerator().get_mpz_t(),
                                   static_cast<unsigned long>(e));
                        mpz_pow_ui(den.get_mpz_t(), assign[l - 1].denominator().get_mpz_t(),
                                   static_cast<unsigned long>(e));
                        amap.emplace(pk.pack(i, j, k, l),
                                     KElem::from_rational(ell, Rat(mpq_class(num) / mpq_class(den))));
                    }
        Mat<KElem> via_sym = sym.map([&](const CommPoly<KElem>& p) { return p.eval(amap); });
        CHECK(via_roabp == via_sym);
    }
}

TEST_CASE("roabp_hitting_set backends") {
    SUBCASE("univariate grid 0..2") {
        RoabpHittingSet h = roabp_hitting_set(1, 4, 2);
        CHECK(h.mode == "exhaustive-grid");
        REQUIRE(h.assignments.size() == 3);
        for (size_t i = 0; i < 3; ++i) CHECK(h.assignments[i][0] == Rat(static_cast<long>(i)));
        // any nonzero univariate of degree <= 2 survives on the grid
        Poly<Rat> p(std::vector<Rat>{Rat(2), Rat(-3), Rat(1)});  // (v-1)(v-2)
        int nonzero = 0;
        for (const auto& a : h.assignments)
            if (!p.eval(a[0]).is_zero()) ++nonzero;
        CHECK(nonzero >= 1);
    }
    SUBCASE("products of roabps in different orders are still hit") {
        RoabpHittingSet h = roabp_hitting_set(2, 2, 4);
        Poly<Rat> p(std::vector<Rat>{Rat(0), Rat(1)});          // v
        Poly<Rat> q(std::vector<Rat>{Rat(-1), Rat(1)});         // w - 1
        bool hit = false;
        for (const auto& a : h.assignments)
            if (!(p.eval(a[0]) * q.eval(a[1])).is_zero() &&
                !(q.eval(a[0]) * p.eval(a[1])).is_zero())
                hit = true;
        CHECK(hit);
    }
    SUBCASE("large variable count falls back to the seeded backend") {
        RoabpHittingSet h = roabp_hitting_set(6, 2, 3);
        CHECK(h.mode == "seeded-random");
        CHECK(!h.assignments.empty());
    }
}

TEST_CASE("strong hitting set over the l=2 family") {
    DivAlgebra alg(2, 1);
    StrongHitsetOptions opt;
    opt.max_points = 6;
    HittingSet hs = strong_hitting_set_genabp(1, 1, 1, alg, opt);
    REQUIRE(hs.count() >= 1);
    CHECK(hs.dim == 2);  // d = 1: ell x ell, q0 = I

    GenAbpFamily fam = default_family(alg, 1);
    for (const auto& [name, member] : fam.members) {
        bool some_invertible = false;
        for (const auto& tuple : hs.kpoints) {
            Mat<KElem> v = eval_genabp(member, tuple, Iota::AKronI);
            if (invertible(v)) {
                some_invertible = true;
                break;
            }
        }
        CHECK_MESSAGE(some_invertible, name);
    }

    // a zero generalized ABP evaluates to zero at every point
    GenABP<KElem> zero;
    zero.width = 1;
    zero.coeff_dim = 2;
    Mat<KElem> z = Mat<KElem>::zero(2, 2, KElem::zero(2));
    zero.c = {z};
    zero.b = {Mat<KElem>::identity(2, KElem::zero(2))};
    zero.layers.push_back({{GenLinForm<KElem>{{{Mat<KElem>::identity(2, KElem::zero(2)), 1,
                                                Mat<KElem>::identity(2, KElem::zero(2))}}}}});
    for (const auto& tuple : hs.kpoints)
        CHECK(eval_genabp(zero, tuple, Iota::AKronI).is_zero());
}

TEST_CASE("iota and iota-prime verdicts agree through q0") {
    std::mt19937_64 rng(26);
    uint64_t ell = 2;
    size_t d = 2;
    DivAlgebra alg(ell, 1);
    Mat<KElem> q0 = q0_matrix(ell, d, KElem::zero(ell));
    Mat<KElem> q0i = inverse(q0);
    for (int t = 0; t < 6; ++t) {
        std::vector<Mat<KElem>> coeffs{rnd_kmat(rng, ell, ell), rnd_kmat(rng, ell, ell),
                                       rnd_kmat(rng, ell, ell)};
        GenABP<KElem> B = word_abp(coeffs, {1, 1});
        Mat<KElem> p = rnd_kmat(rng, ell, d * ell);
        Mat<KElem> via_iota_prime = eval_genabp(B, {p}, Iota::IKronA);
        Mat<KElem> via_iota = eval_genabp(B, {q0 * p * q0i}, Iota::AKronI);
        CHECK(via_iota == q0 * via_iota_prime * q0i);
        CHECK(via_iota.is_zero() == via_iota_prime.is_zero());
    }
}
