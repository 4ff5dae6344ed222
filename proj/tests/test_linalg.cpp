#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "skewrit/ktower.hpp"
#include "skewrit/matrix.hpp"

using namespace skewrit;

namespace {

Mat<Rat> rnd_mat(std::mt19937_64& rng, size_t r, size_t c) {
    std::uniform_int_distribution<int> d(-4, 4);
    Mat<Rat> m = Mat<Rat>::zero(r, c, Rat(0));
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < c; ++j) m.at(i, j) = Rat(d(rng));
    return m;
}

Mat<KElem> rnd_kmat(std::mt19937_64& rng, uint64_t order, size_t n) {
    std::uniform_int_distribution<int> d(-1, 1);
    std::uniform_int_distribution<int> zpick(0, 7);
    Mat<KElem> m = Mat<KElem>::zero(n, n, KElem::zero(order));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            std::vector<Rat> c(order / 2);
            for (auto& a : c) a = Rat(d(rng));
            KElem e = KElem::from_cyclo(CycloElem(order, c));
            if (zpick(rng) == 0) e = e * KElem::z(order);
            m.at(i, j) = e;
        }
    return m;
}

}  // namespace

TEST_CASE("matrix arithmetic basics") {
    std::mt19937_64 rng(1);
    Mat<Rat> a = rnd_mat(rng, 3, 3);
    CHECK(Mat<Rat>::identity(3, Rat(0)) * a == a);
    CHECK(a.scaled(Rat(0)).is_zero());
    CHECK_THROWS_AS(rnd_mat(rng, 2, 3) * rnd_mat(rng, 2, 3), ShapeMismatch);

    // [[0,1],[z,0]]^2 = z * I
    uint64_t l = 2;
    Mat<KElem> mx = Mat<KElem>::zero(2, 2, KElem::zero(l));
    mx.at(0, 1) = KElem::one(l);
    mx.at(1, 0) = KElem::z(l);
    CHECK(mx * mx == Mat<KElem>::identity(2, KElem::zero(l)).scaled(KElem::z(l)));
    CHECK(det(mx) == -KElem::z(l));
}

TEST_CASE("inverse, det, rank on fixed cases") {
    Mat<Rat> i4 = Mat<Rat>::identity(4, Rat(0));
    CHECK(inverse(i4) == i4);

    Mat<Rat> r23(2, 3, std::vector<Rat>{Rat(1), Rat(2), Rat(3), Rat(2), Rat(4), Rat(6)});
    CHECK(rank(r23) == 1);

    Mat<Rat> sing(2, 2, std::vector<Rat>{Rat(1), Rat(2), Rat(2), Rat(4)});
    CHECK_THROWS_AS(inverse(sing), SingularMatrix);
    CHECK(det(sing) == Rat(0));
}

TEST_CASE("kron") {
    std::mt19937_64 rng(2);
    Mat<Rat> a(2, 2, std::vector<Rat>{Rat(1), Rat(2), Rat(3), Rat(4)});
    CHECK(kron(a, Mat<Rat>::identity(1, Rat(0))) == a);
    CHECK(kron(Mat<Rat>::identity(2, Rat(0)), Mat<Rat>::identity(3, Rat(0))) ==
          Mat<Rat>::identity(6, Rat(0)));

    // I_3 kron a is block-diagonal with three copies of a
    Mat<Rat> blk = kron(Mat<Rat>::identity(3, Rat(0)), a);
    for (size_t b = 1; b <= 3; ++b) CHECK(blk.block(b, b, 2) == a);
    CHECK(blk.block(1, 2, 2).is_zero());

    // multiplicativity on conformable samples
    for (int t = 0; t < 5; ++t) {
        Mat<Rat> A = rnd_mat(rng, 2, 3), B = rnd_mat(rng, 2, 2);
        Mat<Rat> C = rnd_mat(rng, 3, 2), D = rnd_mat(rng, 2, 2);
        CHECK(kron(A, B) * kron(C, D) == kron(A * C, B * D));
    }
}

TEST_CASE("block extraction") {
    Mat<Rat> i6 = Mat<Rat>::identity(6, Rat(0));
    CHECK(i6.block(1, 1, 3) == Mat<Rat>::identity(3, Rat(0)));
    CHECK(i6.block(1, 2, 3).is_zero());
    CHECK_THROWS_AS(i6.block(3, 1, 3), ShapeMismatch);

    Mat<Rat> a(2, 2, std::vector<Rat>{Rat(1), Rat(2), Rat(3), Rat(4)});
    CHECK(kron(a, Mat<Rat>::identity(2, Rat(0))).block(1, 1, 2) ==
          Mat<Rat>::identity(2, Rat(0)));
}

TEST_CASE("det(A) * det(inverse(A)) = 1 over K, l <= 8, up to 8x8") {
    std::mt19937_64 rng(3);
    for (uint64_t l : {2ull, 4ull, 8ull}) {
        for (size_t n : {2ull, 4ull, 8ull}) {
            Mat<KElem> a = rnd_kmat(rng, l, n);
            if (!invertible(a)) continue;
            CHECK(det(a) * det(inverse(a)) == KElem::one(l));
            CHECK(a * inverse(a) == Mat<KElem>::identity(n, KElem::zero(l)));
        }
    }
}

TEST_CASE("rank invariant under row scaling") {
    std::mt19937_64 rng(4);
    Mat<Rat> a = rnd_mat(rng, 4, 5);
    size_t r0 = rank(a);
    for (size_t j = 0; j < 5; ++j) a.at(2, j) = a.at(2, j) * Rat(7, 3);
    CHECK(rank(a) == r0);
}

TEST_CASE("circulant-shift determinant short-circuit matches elimination") {
    uint64_t l = 4;
    Mat<KElem> c = Mat<KElem>::zero(4, 4, KElem::zero(l));
    c.at(0, 1) = KElem::omega(l);
    c.at(1, 2) = KElem::one(l) + KElem::z(l);
    c.at(2, 3) = KElem::from_rational(l, Rat(3));
    c.at(3, 0) = KElem::z(l);
    CHECK(is_cir_shaped(c));
    KElem fast = det(c);
    KElem slow = eliminate(c, false).det;
    CHECK(fast == slow);
}
