#include "skewrit/serialize.hpp"

namespace skewrit {

json to_json(const Rat& r) { return r.str(); }

Rat rat_from_json(const json& j) { return Rat::parse(j.get<std::string>()); }

json to_json(const CycloElem& c) {
    json a = json::array();
    for (const auto& r : c.coeffs()) a.push_back(to_json(r));
    return a;
}

CycloElem cyclo_from_json(uint64_t order, const json& j) {
    std::vector<Rat> coeffs;
    for (const auto& e : j) coeffs.push_back(rat_from_json(e));
    return CycloElem(order, std::move(coeffs));
}

json to_json(const KElem& e) {
    auto poly = [](const Poly<CycloElem>& p) {
        json a = json::array();
        for (int k = 0; k <= p.degree(); ++k) a.push_back(to_json(p.coeff(k)));
        return a;
    };
    return json::array({poly(e.num()), poly(e.den())});
}

KElem kelem_from_json(uint64_t order, const json& j) {
    auto poly = [&](const json& a) {
        std::vector<CycloElem> coeffs;
        for (const auto& e : a) coeffs.push_back(cyclo_from_json(order, e));
        return Poly<CycloElem>(std::move(coeffs));
    };
    Poly<CycloElem> num = poly(j.at(0));
    Poly<CycloElem> den = poly(j.at(1));
    if (den.zero()) den = Poly<CycloElem>::constant(CycloElem::one(order));
    return KElem(order, RatFunc<CycloElem>(std::move(num), std::move(den)));
}

json to_json(const Mat<Rat>& m) {
    json rows = json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json to_json(const Mat<KElem>& m) {
    json rows = json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Mat<Rat> qmat_from_json(const json& j) {
    size_t rows = j.size();
    if (rows == 0) throw std::invalid_argument("empty matrix");
    size_t cols = j.at(0).size();
    std::vector<Rat> entries;
    for (const auto& row : j) {
        if (row.size() != cols) throw std::invalid_argument("ragged matrix");
        for (const auto& e : row) entries.push_back(rat_from_json(e));
    }
    return Mat<Rat>(rows, cols, std::move(entries));
}

Mat<KElem> kmat_from_json(uint64_t order, const json& j) {
    size_t rows = j.size();
    if (rows == 0) throw std::invalid_argument("empty matrix");
    size_t cols = j.at(0).size();
    std::vector<KElem> entries;
    for (const auto& row : j)
        for (const auto& e : row) entries.push_back(kelem_from_json(order, e));
    return Mat<KElem>(rows, cols, std::move(entries));
}

json to_json(const DElem& d) {
    json coeffs = json::array();
    for (const auto& b : d.coeffs()) coeffs.push_back(to_json(b));
    return json{{"ell", d.algebra().ell}, {"kappa", d.algebra().kappa}, {"coeffs", coeffs}};
}

json to_json(const HittingSet& hs) {
    json header{{"n", hs.n},       {"s", hs.s},           {"height", hs.height},
                {"dim", hs.dim},   {"field", hs.field},   {"ell", hs.ell},
                {"kappa", hs.kappa}, {"L", hs.L},         {"r", hs.r},
                {"dtilde", hs.dtilde}, {"blockdim", hs.blockdim}, {"mode", hs.mode},
                {"count", hs.count()}};
    json points = json::array();
    if (hs.field == "K") {
        for (const auto& tuple : hs.kpoints) {
            json t = json::array();
            for (const auto& m : tuple) t.push_back(to_json(m));
            points.push_back(std::move(t));
        }
    } else {
        for (const auto& tuple : hs.qpoints) {
            json t = json::array();
            for (const auto& m : tuple) t.push_back(to_json(m));
            points.push_back(std::move(t));
        }
    }
    return json{{"header", header},
                {"points", points},
                {"certifications", hs.certs},
                {"dropped", hs.dropped}};
}

HittingSet hitset_from_json(const json& j) {
    HittingSet hs;
    const json& h = j.at("header");
    hs.n = h.at("n");
    hs.s = h.at("s");
    hs.height = h.at("height");
    hs.dim = h.at("dim");
    hs.field = h.at("field");
    hs.ell = h.at("ell");
    hs.kappa = h.at("kappa");
    hs.L = h.at("L");
    hs.r = h.at("r");
    hs.dtilde = h.at("dtilde");
    hs.blockdim = h.at("blockdim");
    hs.mode = h.at("mode");
    for (const auto& tuple : j.at("points")) {
        if (hs.field == "K") {
            std::vector<Mat<KElem>> t;
            for (const auto& m : tuple) t.push_back(kmat_from_json(hs.ell, m));
            hs.kpoints.push_back(std::move(t));
        } else {
            std::vector<Mat<Rat>> t;
            for (const auto& m : tuple) t.push_back(qmat_from_json(m));
            hs.qpoints.push_back(std::move(t));
        }
    }
    if (j.contains("certifications"))
        for (const auto& c : j.at("certifications")) hs.certs.push_back(c);
    if (j.contains("dropped"))
        for (const auto& c : j.at("dropped")) hs.dropped.push_back(c);
    return hs;
}

json to_json(const LinearRep<Rat>& rep) {
    json c = json::array(), b = json::array(), shift = json::array();
    for (const auto& m : rep.c) c.push_back(to_json(m));
    for (const auto& m : rep.b) b.push_back(to_json(m));
    for (const auto& m : rep.shift) shift.push_back(to_json(m));
    json mrows = json::array();
    for (const auto& row : rep.M) {
        json r = json::array();
        for (const auto& form : row) {
            json summands = json::array();
            for (const auto& su : form.summands)
                summands.push_back(
                    json{{"a", to_json(su.a)}, {"var", su.var}, {"b", to_json(su.b)}});
            r.push_back(std::move(summands));
        }
        mrows.push_back(std::move(r));
    }
    return json{{"s", rep.s}, {"m", rep.m}, {"nvars", rep.nvars},
                {"c", c},     {"M", mrows}, {"b", b},
                {"shift", shift}};
}

std::vector<Mat<Rat>> qpoint_from_json(const json& j) {
    if (j.contains("field") && j.at("field") != "Q")
        throw std::invalid_argument("point file must carry rational matrices");
    std::vector<Mat<Rat>> out;
    for (const auto& m : j.at("matrices")) out.push_back(qmat_from_json(m));
    return out;
}

}  // namespace skewrit
