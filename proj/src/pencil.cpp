#include "skewrit/pencil.hpp"

namespace skewrit {

namespace {

// Pencil under construction with its designated entry.
struct Piece {
    size_t size;
    std::vector<Mat<Rat>> mats;
    size_t i, j;
};

Piece atom(int nvars, const Formula* f) {
    // L = [[0, 1], [-1, a]] is invertible everywhere and (L^-1)[0][0] = a
    Piece p;
    p.size = 2;
    p.i = p.j = 0;
    p.mats.assign(static_cast<size_t>(nvars + 1), Mat<Rat>::zero(2, 2, Rat(0)));
    p.mats[0].at(0, 1) = Rat(1);
    p.mats[0].at(1, 0) = Rat(-1);
    if (f->kind == Formula::Kind::Const) {
        p.mats[0].at(1, 1) = f->value;
    } else {
        p.mats[static_cast<size_t>(f->var_index)].at(1, 1) = Rat(1);
    }
    return p;
}

// diag(Lg, Lh) bordered so that the (0, last) entry of the inverse is g + h
Piece add(Piece g, Piece h) {
    size_t pg = g.size, ph = h.size, n = pg + ph + 2;
    Piece r;
    r.size = n;
    r.i = 0;
    r.j = n - 1;
    r.mats.reserve(g.mats.size());
    for (size_t k = 0; k < g.mats.size(); ++k) {
        Mat<Rat> m = Mat<Rat>::zero(n, n, Rat(0));
        for (size_t a = 0; a < pg; ++a)
            for (size_t b = 0; b < pg; ++b) m.at(1 + a, 1 + b) = g.mats[k].at(a, b);
        for (size_t a = 0; a < ph; ++a)
            for (size_t b = 0; b < ph; ++b) m.at(1 + pg + a, 1 + pg + b) = h.mats[k].at(a, b);
        if (k == 0) {
            m.at(0, 0) = Rat(1);
            m.at(n - 1, n - 1) = Rat(1);
            m.at(0, 1 + g.i) = Rat(1);
            m.at(0, 1 + pg + h.i) = Rat(1);
            m.at(1 + g.j, n - 1) = Rat(1);
            m.at(1 + pg + h.j, n - 1) = Rat(1);
        }
        r.mats.push_back(std::move(m));
    }
    return r;
}

// [[Lg, -E], [0, Lh]] with E = e_{g.j} e_{h.i}^T; output at (g.i, pg + h.j)
Piece mul(Piece g, Piece h) {
    size_t pg = g.size, ph = h.size, n = pg + ph;
    Piece r;
    r.size = n;
    r.i = g.i;
    r.j = pg + h.j;
    for (size_t k = 0; k < g.mats.size(); ++k) {
        Mat<Rat> m = Mat<Rat>::zero(n, n, Rat(0));
        for (size_t a = 0; a < pg; ++a)
            for (size_t b = 0; b < pg; ++b) m.at(a, b) = g.mats[k].at(a, b);
        for (size_t a = 0; a < ph; ++a)
            for (size_t b = 0; b < ph; ++b) m.at(pg + a, pg + b) = h.mats[k].at(a, b);
        if (k == 0) m.at(g.j, pg + h.i) = Rat(-1);
        r.mats.push_back(std::move(m));
    }
    return r;
}

// [[0, e_{g.i}^T], [-e_{g.j}, Lg]]; the (0,0) entry of the inverse is g^{-1}
Piece inv_gadget(Piece g) {
    size_t pg = g.size, n = pg + 1;
    Piece r;
    r.size = n;
    r.i = 0;
    r.j = 0;
    for (size_t k = 0; k < g.mats.size(); ++k) {
        Mat<Rat> m = Mat<Rat>::zero(n, n, Rat(0));
        for (size_t a = 0; a < pg; ++a)
            for (size_t b = 0; b < pg; ++b) m.at(1 + a, 1 + b) = g.mats[k].at(a, b);
        if (k == 0) {
            m.at(0, 1 + g.i) = Rat(1);
            m.at(1 + g.j, 0) = Rat(-1);
        }
        r.mats.push_back(std::move(m));
    }
    return r;
}

Piece walk(int nvars, const Formula* f) {
    switch (f->kind) {
        case Formula::Kind::Var:
        case Formula::Kind::Const: return atom(nvars, f);
        case Formula::Kind::Add: return add(walk(nvars, f->left.get()), walk(nvars, f->right.get()));
        case Formula::Kind::Mul: return mul(walk(nvars, f->left.get()), walk(nvars, f->right.get()));
        case Formula::Kind::Inv: return inv_gadget(walk(nvars, f->left.get()));
    }
    throw std::logic_error("unreachable");
}

}  // namespace

LinearPencil build_pencil(const FormulaPtr& f) {
    int nvars = f->max_var;
    Piece p = walk(nvars, f.get());
    LinearPencil L;
    L.size = p.size;
    L.nvars = nvars;
    L.mats = std::move(p.mats);
    L.out_i = p.i;
    L.out_j = p.j;
    return L;
}

}  // namespace skewrit
