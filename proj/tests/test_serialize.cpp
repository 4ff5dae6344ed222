#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "skewrit/assembly.hpp"
#include "skewrit/serialize.hpp"

using namespace skewrit;

namespace {

KElem rnd_k(std::mt19937_64& rng, uint64_t order) {
    std::uniform_int_distribution<int> d(-3, 3);
    std::vector<CycloElem> num, den;
    for (int i = 0; i < 2; ++i) {
        std::vector<Rat> c(order / 2);
        for (auto& a : c) a = Rat(d(rng));
        num.push_back(CycloElem(order, c));
    }
    den.push_back(CycloElem::one(order));
    return KElem(order, RatFunc<CycloElem>(Poly<CycloElem>(num), Poly<CycloElem>(den)));
}

}  // namespace

TEST_CASE("rational strings") {
    CHECK(to_json(Rat(5)) == "5");
    CHECK(to_json(Rat(-3, 4)) == "-3/4");
    CHECK(rat_from_json(json("7/2")) == Rat(7, 2));
    CHECK(rat_from_json(json("-9")) == Rat(-9));
    CHECK_THROWS(rat_from_json(json("x")));
}

TEST_CASE("KElem round trip") {
    std::mt19937_64 rng(31);
    for (uint64_t order : {2ull, 4ull, 8ull}) {
        for (int t = 0; t < 10; ++t) {
            KElem e = rnd_k(rng, order);
            if (t % 3 == 0 && !e.is_zero()) e = e.inverse();
            KElem back = kelem_from_json(order, to_json(e));
            CHECK(back == e);
        }
    }
    // the documented shape: [num, den] with ascending z-degree and omega-power
    KElem wz = KElem::omega(4) * KElem::z(4) + KElem::one(4);
    json j = to_json(wz);
    CHECK(j.size() == 2);
    CHECK(j[0].size() == 2);               // 1 + (omega) z
    CHECK(j[0][0][0] == "1");              // constant coefficient 1
    CHECK(j[0][1][1] == "1");              // omega coefficient of the z term
    CHECK(j[1].size() == 1);               // monic constant denominator
}

TEST_CASE("matrix round trips") {
    std::mt19937_64 rng(32);
    Mat<Rat> q(2, 3, std::vector<Rat>{Rat(1), Rat(-2), Rat(1, 3), Rat(0), Rat(7), Rat(-5, 2)});
    CHECK(qmat_from_json(to_json(q)) == q);

    Mat<KElem> k = Mat<KElem>::zero(2, 2, KElem::zero(4));
    k.at(0, 0) = rnd_k(rng, 4);
    k.at(1, 0) = KElem::z(4).inverse();
    CHECK(kmat_from_json(4, to_json(k)) == k);
}

TEST_CASE("hitting set file round trip") {
    DeskProfile p;
    p.h0_max_points = 2;
    p.h1_max_points = 1;
    p.t_cap = 2;
    HittingSet hs = strong_hs_height1(1, 3, p);
    json j = to_json(hs);
    CHECK(j.at("header").at("field") == "K");
    CHECK(j.at("header").at("count") == hs.count());
    HittingSet back = hitset_from_json(j);
    CHECK(back.count() == hs.count());
    CHECK(back.dim == hs.dim);
    REQUIRE(!back.kpoints.empty());
    CHECK(back.kpoints[0][0] == hs.kpoints[0][0]);
    CHECK(to_json(back).dump() == j.dump());
}

TEST_CASE("linear rep serialization carries the shift record") {
    auto f = parse("inv(x1)");
    std::vector<Mat<Rat>> u{Mat<Rat>::identity(2, Rat(0))};
    LinearRep<Rat> rep = realize_shifted(f, u, 2, Rat(0));
    json j = to_json(rep);
    CHECK(j.at("s") == rep.s);
    CHECK(j.at("shift").size() == 1);
    CHECK(qmat_from_json(j.at("shift")[0]) == u[0]);
}

TEST_CASE("point files") {
    json j{{"field", "Q"},
           {"dim", 2},
           {"matrices", json::array({to_json(Mat<Rat>::identity(2, Rat(0)))})}};
    auto pts = qpoint_from_json(j);
    REQUIRE(pts.size() == 1);
    CHECK(pts[0] == Mat<Rat>::identity(2, Rat(0)));
}
