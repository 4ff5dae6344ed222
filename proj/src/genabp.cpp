#include "skewrit/genabp.hpp"

#include <random>
#include <set>

namespace skewrit {

namespace {

Mat<KElem> transpose(const Mat<KElem>& a) {
    Mat<KElem> t = Mat<KElem>::zero(a.cols(), a.rows(), a.like());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) t.at(j, i) = a.at(i, j);
    return t;
}

std::optional<Mat<CycloElem>> mat_at_z(const Mat<KElem>& m, const Rat& z0) {
    std::vector<CycloElem> out;
    out.reserve(m.entries().size());
    try {
        for (const auto& e : m.entries()) out.push_back(e.at_z(z0));
    } catch (const DenominatorVanishes&) {
        return std::nullopt;
    }
    return Mat<CycloElem>(m.rows(), m.cols(), std::move(out));
}

// determinant-based invertibility certificate: a nonzero specialized
// determinant proves det != 0 over K; exact elimination is the fallback
bool certify_invertible(const Mat<KElem>& m) {
    for (long z0 : {7L, 11L, 13L}) {
        auto spec = mat_at_z(m, Rat(z0));
        if (!spec) continue;
        if (!det(*spec).is_zero()) return true;
    }
    return invertible(m);
}

}  // namespace

Mat<CommPoly<KElem>> ztilde_matrix(const YVarPacker& pk, size_t k, uint64_t order) {
    CommPoly<KElem> zero(KElem::zero(order));
    size_t ell = pk.ell, d = pk.d;
    Mat<CommPoly<KElem>> m = Mat<CommPoly<KElem>>::zero(d * ell, d * ell, zero);
    for (size_t l = 1; l <= d; ++l) {
        size_t row0 = (l - 1) * ell;
        size_t col0 = (l % d) * ell;  // block (l, l+1), wrapping (d, 1)
        for (size_t i = 1; i <= ell; ++i)
            for (size_t j = 1; j <= ell; ++j)
                m.at(row0 + i - 1, col0 + j - 1) =
                    CommPoly<KElem>::variable(pk.pack(i, j, k, l), KElem::zero(order));
    }
    return m;
}

std::vector<SmlAbp> shifted_cyclic_eval(const GenABP<KElem>& B, const YVarPacker& pk) {
    size_t ell = pk.ell, d = pk.d, r = B.width;
    if (B.degree() != d) throw ShapeMismatch("packer degree != ABP degree");
    if (B.coeff_dim != ell) throw ShapeMismatch("packer ell != coefficient dimension");
    const KElem zero = KElem::zero(B.c.front().like().order());

    std::vector<SmlAbp> blocks;
    for (size_t bi = 1; bi <= d; ++bi) {
        SmlAbp abp;
        abp.width = r * ell;
        abp.ell = ell;
        abp.start = Mat<KElem>::zero(ell, r * ell, zero);
        abp.finish = Mat<KElem>::zero(r * ell, ell, zero);
        for (size_t a = 0; a < r; ++a)
            for (size_t u = 0; u < ell; ++u)
                for (size_t w = 0; w < ell; ++w) {
                    abp.start.at(u, a * ell + w) = B.c[a].at(u, w);
                    abp.finish.at(a * ell + u, w) = B.b[a].at(u, w);
                }
        for (size_t l = 1; l <= d; ++l) {
            size_t slot = ((bi - 1) + (l - 1)) % d + 1;  // pi_i(l)
            abp.block_order.push_back(slot);
            std::vector<std::vector<std::vector<SmlAbp::LinTerm>>> layer(
                r * ell, std::vector<std::vector<SmlAbp::LinTerm>>(r * ell));
            for (size_t a = 0; a < r; ++a)
                for (size_t b = 0; b < r; ++b)
                    for (const auto& su : B.layers[l - 1][a][b].summands) {
                        // M_a * Y_{k, slot} * M_b expands entrywise
                        for (size_t u = 0; u < ell; ++u)
                            for (size_t ii = 1; ii <= ell; ++ii) {
                                const KElem& av = su.a.at(u, ii - 1);
                                if (av.is_zero()) continue;
                                for (size_t jj = 1; jj <= ell; ++jj)
                                    for (size_t w = 0; w < ell; ++w) {
                                        const KElem& bv = su.b.at(jj - 1, w);
                                        if (bv.is_zero()) continue;
                                        layer[a * ell + u][b * ell + w].push_back(
                                            {pk.pack(ii, jj, static_cast<size_t>(su.var), slot),
                                             av * bv});
                                    }
                            }
                    }
            abp.layers.push_back(std::move(layer));
        }
        blocks.push_back(std::move(abp));
    }
    return blocks;
}

Mat<CommPoly<KElem>> expand_sml(const SmlAbp& abp) {
    const KElem kzero = KElem::zero(abp.start.like().order());
    CommPoly<KElem> pzero(kzero);
    auto lift = [&](const KElem& e) { return CommPoly<KElem>::constant(e); };
    Mat<CommPoly<KElem>> cur = abp.start.map(lift);
    for (const auto& layer : abp.layers) {
        Mat<CommPoly<KElem>> lm = Mat<CommPoly<KElem>>::zero(abp.width, abp.width, pzero);
        for (size_t i = 0; i < abp.width; ++i)
            for (size_t j = 0; j < abp.width; ++j)
                for (const auto& t : layer[i][j])
                    lm.at(i, j) += CommPoly<KElem>::variable(t.var, kzero) * lift(t.coeff);
        cur = cur * lm;
    }
    return cur * abp.finish.map(lift);
}

Roabp to_roabp(const SmlAbp& block, const YVarPacker& pk) {
    Roabp r;
    r.width = block.width;
    r.ell = block.ell;
    r.base = (pk.ell > std::max(pk.n, pk.d)) ? pk.ell + 1 : std::max({pk.ell, pk.n, pk.d}) + 1;
    r.var_order = block.block_order;
    r.start = block.start;
    r.finish = block.finish;
    const KElem kzero = KElem::zero(block.start.like().order());
    std::set<uint64_t> seen_exponents;
    std::set<std::tuple<size_t, size_t, size_t>> seen_triples;
    for (const auto& layer : block.layers) {
        std::vector<std::vector<Poly<KElem>>> lm(block.width,
                                                 std::vector<Poly<KElem>>(block.width));
        for (size_t i = 0; i < block.width; ++i)
            for (size_t j = 0; j < block.width; ++j) {
                for (const auto& t : layer[i][j]) {
                    size_t yi, yj, yk, yl;
                    pk.unpack(t.var, yi, yj, yk, yl);
                    uint64_t e = r.base * r.base * yi + r.base * yj + yk;
                    if (!seen_triples.count({yi, yj, yk})) {
                        if (seen_exponents.count(e))
                            throw std::logic_error("Kronecker exponent collision");
                        seen_exponents.insert(e);
                        seen_triples.insert({yi, yj, yk});
                    }
                    std::vector<KElem> coeffs(e + 1, kzero);
                    coeffs[e] = t.coeff;
                    lm[i][j] = lm[i][j] + Poly<KElem>(std::move(coeffs));
                }
            }
        r.layers.push_back(std::move(lm));
    }
    return r;
}

Mat<KElem> eval_roabp(const Roabp& r, const std::vector<Rat>& assignment) {
    if (assignment.size() < r.var_order.size())
        throw std::invalid_argument("assignment too short");
    Mat<KElem> cur = r.start;
    const KElem kzero = KElem::zero(r.start.like().order());
    for (size_t l = 0; l < r.layers.size(); ++l) {
        KElem v = KElem::from_rational(kzero.order(), assignment[r.var_order[l] - 1]);
        Mat<KElem> lm = Mat<KElem>::zero(r.width, r.width, kzero);
        for (size_t i = 0; i < r.width; ++i)
            for (size_t j = 0; j < r.width; ++j)
                if (!r.layers[l][i][j].zero()) lm.at(i, j) = r.layers[l][i][j].eval(v);
        cur = cur * lm;
    }
    return cur * r.finish;
}

RoabpHittingSet roabp_hitting_set(size_t nvars, size_t width, uint64_t degree_per_var,
                                  const RoabpHittingOptions& opt) {
    (void)width;
    RoabpHittingSet out;
    out.degree_bound = degree_per_var;
    if (nvars == 0) throw std::invalid_argument("roabp_hitting_set: no variables");
    if (nvars <= opt.exhaustive_nvars_limit) {
        out.mode = "exhaustive-grid";
        std::vector<uint64_t> idx(nvars, 0);
        for (;;) {
            std::vector<Rat> a;
            for (uint64_t v : idx) a.push_back(Rat(static_cast<long>(v)));
            out.assignments.push_back(std::move(a));
            if (out.assignments.size() >= opt.max_assignments) {
                out.mode = "exhaustive-grid-truncated";
                break;
            }
            size_t t = nvars;
            bool done = false;
            while (t > 0) {
                --t;
                if (++idx[t] <= degree_per_var) break;
                idx[t] = 0;
                if (t == 0) done = true;
            }
            if (done) break;
        }
    } else {
        out.mode = "seeded-random";
        std::mt19937_64 rng(opt.seed);
        std::uniform_int_distribution<uint64_t> pick(0, degree_per_var);
        size_t count = std::min<size_t>(opt.max_assignments, nvars * 2 + 1);
        for (size_t t = 0; t < count; ++t) {
            std::vector<Rat> a;
            for (size_t i = 0; i < nvars; ++i) a.push_back(Rat(static_cast<long>(pick(rng))));
            out.assignments.push_back(std::move(a));
        }
    }
    return out;
}

GenAbpFamily default_family(const DivAlgebra& alg, int nvars) {
    GenAbpFamily fam;
    uint64_t ell = alg.ell;
    Mat<KElem> id = Mat<KElem>::identity(ell, KElem::zero(ell));
    auto single = [&](const std::string& name, const Mat<KElem>& a, int var, const Mat<KElem>& b) {
        GenABP<KElem> abp;
        abp.width = 1;
        abp.coeff_dim = ell;
        abp.c = {id};
        abp.b = {id};
        abp.layers.assign(1, {{GenLinForm<KElem>{{{a, var, b}}}}});
        fam.members.push_back({name, std::move(abp)});
    };
    for (int k = 1; k <= nvars; ++k) single("x" + std::to_string(k), id, k, id);
    std::vector<std::pair<std::string, Mat<KElem>>> units = {
        {"1", id},
        {"x", matrix_rep(DElem::x(alg))},
        {"w", matrix_rep(DElem::from_k(alg, KElem::omega(ell)))}};
    for (const auto& [an, am] : units)
        for (const auto& [bn, bm] : units) single(an + "*x1*" + bn, am, 1, bm);
    return fam;
}

HittingSet strong_hitting_set_genabp(int n, int r, int d, const DivAlgebra& alg,
                                     const StrongHitsetOptions& opt) {
    if (n < 1 || r < 1 || d < 1) throw std::invalid_argument("positive parameters required");
    uint64_t ell = alg.ell;
    YVarPacker pk{ell, static_cast<size_t>(n), static_cast<size_t>(d)};
    uint64_t base = (ell > std::max<uint64_t>(n, d)) ? ell + 1
                                                     : std::max<uint64_t>({ell, static_cast<uint64_t>(n),
                                                                           static_cast<uint64_t>(d)}) + 1;
    uint64_t delta = base * base * ell + base * ell + static_cast<uint64_t>(n);

    HittingSet hs;
    hs.field = "K";
    hs.n = n;
    hs.r = r;
    hs.blockdim = d;
    hs.ell = ell;
    hs.kappa = alg.kappa;
    hs.dim = static_cast<size_t>(d) * ell;
    hs.mode = "desk";

    GenAbpFamily fam = default_family(alg, n);
    std::vector<bool> covered(fam.members.size(), false);

    // candidate y assignments: ROABP grid values lifted through the Kronecker
    // encoding, then deterministic small-value patterns
    struct Candidate {
        std::string source;
        // per (k, l): the y values, as a function object over (i, j)
        std::vector<std::vector<std::vector<Rat>>> y;  // [k-1][l-1][(i-1)*ell+(j-1)]
    };
    std::vector<Candidate> candidates;

    RoabpHittingSet rh = roabp_hitting_set(static_cast<size_t>(d),
                                           static_cast<size_t>(r) * ell, delta, opt.roabp);
    size_t power_bit_cap = 4096;
    for (const auto& assign : rh.assignments) {
        if (candidates.size() >= opt.max_candidates) break;
        Candidate c;
        c.source = "roabp:" + rh.mode;
        bool feasible = true;
        c.y.assign(static_cast<size_t>(n),
                   std::vector<std::vector<Rat>>(static_cast<size_t>(d),
                                                 std::vector<Rat>(ell * ell, Rat(0))));
        for (size_t k = 1; k <= static_cast<size_t>(n) && feasible; ++k)
            for (size_t l = 1; l <= static_cast<size_t>(d) && feasible; ++l) {
                const Rat& v = assign[l - 1];
                for (size_t i = 1; i <= ell && feasible; ++i)
                    for (size_t j = 1; j <= ell; ++j) {
                        uint64_t e = base * base * i + base * j + k;
                        if (!(v == Rat(0) || v == Rat(1)) &&
                            e * mpz_sizeinbase(v.numerator().get_mpz_t(), 2) > power_bit_cap) {
                            feasible = false;  // desk guard against giant powers
                            break;
                        }
                        Rat p(1);
                        if (v == Rat(0)) p = Rat(0);
                        else if (v == Rat(1)) p = Rat(1);
                        else {
                            mpz_class num, den;
                            mpz_pow_ui(num.get_mpz_t(), v.numerator().get_mpz_t(),
                                       static_cast<unsigned long>(e));
                            mpz_pow_ui(den.get_mpz_t(), v.denominator().get_mpz_t(),
                                       static_cast<unsigned long>(e));
                            p = Rat(mpq_class(num) / mpq_class(den));
                        }
                        c.y[k - 1][l - 1][(i - 1) * ell + (j - 1)] = p;
                    }
            }
        if (feasible) candidates.push_back(std::move(c));
    }
    if (opt.use_pil_patterns) {
        for (uint64_t t = 0; t < opt.pil_span && candidates.size() < opt.max_candidates; ++t) {
            Candidate c;
            c.source = "pil-pattern:" + std::to_string(t);
            c.y.assign(static_cast<size_t>(n),
                       std::vector<std::vector<Rat>>(static_cast<size_t>(d),
                                                     std::vector<Rat>(ell * ell, Rat(0))));
            for (size_t k = 1; k <= static_cast<size_t>(n); ++k)
                for (size_t l = 1; l <= static_cast<size_t>(d); ++l)
                    for (size_t i = 1; i <= ell; ++i)
                        for (size_t j = 1; j <= ell; ++j) {
                            long val = static_cast<long>((3 * i + 5 * j + 7 * k + 11 * l + t) % 7) - 3;
                            c.y[k - 1][l - 1][(i - 1) * ell + (j - 1)] = Rat(val);
                        }
            candidates.push_back(std::move(c));
        }
    }

    Mat<KElem> q0 = q0_matrix(ell, static_cast<size_t>(d), KElem::zero(ell));
    Mat<KElem> q0inv = transpose(q0);

    for (const auto& cand : candidates) {
        if (hs.kpoints.size() >= opt.max_points) break;
        // p_{kl} = sum_{i,j} y_{ijkl} C_{ij} as an algebra element
        std::vector<Mat<KElem>> tuple;
        bool all_nonzero = true;
        for (size_t k = 1; k <= static_cast<size_t>(n); ++k) {
            std::vector<Mat<KElem>> pkl_reps;
            for (size_t l = 1; l <= static_cast<size_t>(d); ++l) {
                std::vector<KElem> coeffs(ell, KElem::zero(ell));
                for (size_t i = 1; i <= ell; ++i) {
                    CycloElem acc = CycloElem::zero(ell);
                    for (size_t j = 1; j <= ell; ++j) {
                        const Rat& y = cand.y[k - 1][l - 1][(i - 1) * ell + (j - 1)];
                        if (y.is_zero()) continue;
                        std::vector<Rat> mono(CycloElem::omega_pow(ell, static_cast<int64_t>(j - 1))
                                                  .coeffs());
                        for (auto& mc : mono) mc = mc * y;
                        acc += CycloElem(ell, std::move(mono));
                    }
                    coeffs[i - 1] = KElem::from_cyclo(acc);
                }
                DElem pkl(alg, std::move(coeffs));
                if (pkl.is_zero()) all_nonzero = false;
                pkl_reps.push_back(matrix_rep(pkl));
            }
            // block circulant-shift assembly, then the q0 conjugation
            Mat<KElem> mk = Mat<KElem>::zero(static_cast<size_t>(d) * ell,
                                             static_cast<size_t>(d) * ell, KElem::zero(ell));
            for (size_t l = 1; l <= static_cast<size_t>(d); ++l)
                mk.set_block(l, (l % static_cast<size_t>(d)) + 1, ell, pkl_reps[l - 1]);
            tuple.push_back(q0 * mk * q0inv);
        }
        if (!all_nonzero) {
            nlohmann::json j;
            j["source"] = cand.source;
            j["reason"] = "some p_kl vanishes";
            hs.dropped.push_back(j);
            continue;
        }
        // certification against the family
        std::vector<std::string> certified;
        for (size_t fi = 0; fi < fam.members.size(); ++fi) {
            Mat<KElem> value = eval_genabp(fam.members[fi].second, tuple, Iota::AKronI);
            if (certify_invertible(value)) {
                certified.push_back(fam.members[fi].first);
                covered[fi] = true;
            }
        }
        if (certified.empty()) {
            nlohmann::json j;
            j["source"] = cand.source;
            j["reason"] = "certifies no family member";
            hs.dropped.push_back(j);
            continue;
        }
        nlohmann::json cert;
        cert["source"] = cand.source;
        cert["invertible_on"] = certified;
        hs.certs.push_back(cert);
        hs.kpoints.push_back(std::move(tuple));
    }

    nlohmann::json cov;
    for (size_t fi = 0; fi < fam.members.size(); ++fi)
        cov[fam.members[fi].first] = static_cast<bool>(covered[fi]);
    hs.dropped.push_back(nlohmann::json{{"family_coverage", cov}});
    return hs;
}

}  // namespace skewrit
