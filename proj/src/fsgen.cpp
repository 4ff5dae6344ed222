#include "skewrit/fsgen.hpp"

#include <random>

namespace skewrit {

namespace {

uint32_t exact_log2(uint64_t v) {
    uint32_t t = 0;
    while ((1ull << t) < v) ++t;
    return t;
}

// Lagrange basis on the nodes 1..count; rational coefficients, so sigma fixes
// every basis polynomial.
std::vector<Poly<KElem>> lagrange_basis(size_t count, uint64_t order) {
    std::vector<Poly<KElem>> out;
    for (size_t j = 1; j <= count; ++j) {
        Poly<KElem> p = Poly<KElem>::constant(KElem::one(order));
        for (size_t t = 1; t <= count; ++t) {
            if (t == j) continue;
            // (v - t) / (j - t)
            Rat scale(1, static_cast<long>(j) - static_cast<long>(t));
            std::vector<KElem> lin{KElem::from_rational(order, Rat(-static_cast<long>(t)) * scale),
                                   KElem::from_rational(order, scale)};
            p = p * Poly<KElem>(lin);
        }
        out.push_back(std::move(p));
    }
    return out;
}

std::vector<Poly<Rat>> lagrange_basis_q(size_t count) {
    std::vector<Poly<Rat>> out;
    for (size_t j = 1; j <= count; ++j) {
        Poly<Rat> p = Poly<Rat>::constant(Rat(1));
        for (size_t t = 1; t <= count; ++t) {
            if (t == j) continue;
            Rat scale(1, static_cast<long>(j) - static_cast<long>(t));
            p = p * Poly<Rat>(std::vector<Rat>{Rat(-static_cast<long>(t)) * scale, scale});
        }
        out.push_back(std::move(p));
    }
    return out;
}

}  // namespace

ParamSchedule schedule(int n, int r, uint64_t dtilde, int m, ScheduleMode mode,
                       uint32_t desk_kappa) {
    if (n < 1 || r < 1 || m < 1) throw ScheduleError("schedule: positive n, r, m required");
    if (dtilde < 1 || !is_power_of_two(dtilde)) throw ScheduleError("dtilde must be a power of two");
    ParamSchedule s;
    s.n = n;
    s.r = r;
    s.dtilde = dtilde;
    s.m = m;
    s.d = exact_log2(dtilde);
    s.mode = mode;
    if (mode == ScheduleMode::PaperFaithful) {
        uint64_t v = static_cast<uint64_t>(n) * static_cast<uint64_t>(m) * static_cast<uint64_t>(r);
        if (v > (1ull << 31)) throw ScheduleError("nmr too large");
        uint64_t v2 = v * v;
        s.kappa = 2 * s.d + exact_log2(v2) + 1;
    } else {
        if (desk_kappa == 0) throw ScheduleError("desk mode needs an explicit kappa");
        s.kappa = desk_kappa;
    }
    if (s.d >= 1 && s.kappa < s.d + 1)
        throw ScheduleError("a_" + std::to_string(s.d) + " = kappa - d <= 0: kappa too small for " +
                            std::to_string(s.d) + " levels");
    s.L = 2 * s.kappa;
    s.ell = s.L <= 62 ? (1ull << s.L) : 0;
    for (uint32_t i = 1; i <= s.d; ++i) {
        s.a.push_back(s.kappa - i);
        s.w_size.push_back(1ull << (s.L - (s.kappa - i)));
    }
    return s;
}

Generator base_generator(const ParamSchedule& sched) {
    if (!sched.materializable()) throw ScheduleError("schedule too large to instantiate over K");
    Generator g;
    g.level = 0;
    for (int i = 1; i <= sched.n; ++i) {
        std::vector<KElem> coeffs(static_cast<size_t>(i), KElem::zero(sched.ell));
        coeffs.back() = KElem::one(sched.ell);
        g.polys.push_back({Poly<KElem>(std::move(coeffs))});
    }
    return g;
}

Generator combine(const Generator& g, const ParamSchedule& sched, uint64_t alpha_exp) {
    uint32_t t = g.level + 1;
    if (t > sched.d) throw ScheduleError("no combination level left in the schedule");
    uint64_t wsize = sched.w_size[t - 1];
    if (alpha_exp < 1 || alpha_exp > wsize) throw ScheduleError("alpha outside W_level");
    uint64_t ell = sched.ell;
    uint64_t a_t = sched.a[t - 1];
    uint64_t step = 1ull << a_t;  // omega_t = omega^step
    uint64_t mu = sched.mu(t);
    size_t r2 = static_cast<size_t>(sched.r) * static_cast<size_t>(sched.r);
    std::vector<Poly<KElem>> lag = lagrange_basis(r2, ell);

    size_t half = 1ull << (t - 1);
    Generator out;
    out.level = t;
    out.alpha_exps = g.alpha_exps;
    out.alpha_exps.push_back(alpha_exp);
    out.polys.assign(g.polys.size(), {});
    for (size_t var = 0; var < g.polys.size(); ++var) {
        std::vector<Poly<KElem>> np(2 * half);
        for (size_t pos = 0; pos < half; ++pos) {
            Poly<KElem> low, high;
            for (size_t l = 1; l <= r2; ++l) {
                uint64_t e = (step * ((l + alpha_exp) % (ell / step))) % ell;
                KElem c = KElem::omega_pow(ell, static_cast<int64_t>(e));
                KElem cmu = KElem::omega_pow(ell, static_cast<int64_t>((e * mu) % ell));
                low = low + lag[l - 1].scaled(g.polys[var][pos].eval(c));
                high = high + lag[l - 1].scaled(g.polys[var][pos].eval(cmu));
            }
            np[pos] = std::move(low);
            np[pos + half] = std::move(high);
        }
        out.polys[var] = std::move(np);
    }
    return out;
}

std::vector<std::vector<Poly<KElem>>> sigma_extend(const Generator& g,
                                                   const ParamSchedule& sched) {
    Sigma s(sched.ell, sched.kappa);
    auto lift = [&](const KElem& e) { return sigma_apply(e, s); };
    std::vector<std::vector<Poly<KElem>>> out;
    for (const auto& per_var : g.polys) {
        std::vector<Poly<KElem>> ext = per_var;
        while (ext.size() < sched.ell) ext.push_back(ext.back().map(lift));
        out.push_back(std::move(ext));
    }
    return out;
}

MaterializeResult materialize(const Generator& g, const ParamSchedule& sched, const Rat& v) {
    MaterializeResult res;
    uint64_t ell = sched.ell;
    Sigma sig(ell, sched.kappa);
    DivAlgebra alg(ell, sched.kappa);
    KElem vk = KElem::from_rational(ell, v);
    auto ext = sigma_extend(g, sched);

    res.det_nonzero = true;
    res.sigma_chain_ok = true;
    std::vector<std::vector<KElem>> values;
    for (size_t var = 0; var < ext.size(); ++var) {
        std::vector<KElem> e;
        for (uint64_t j = 0; j < ell; ++j) {
            KElem val = ext[var][j].zero() ? KElem::zero(ell) : ext[var][j].eval(vk);
            if (val.is_zero()) {
                res.det_nonzero = false;
                res.reason = "entry f^" + std::to_string(var + 1) + "_" + std::to_string(j) +
                             " vanishes at v = " + v.str();
            }
            e.push_back(std::move(val));
        }
        for (uint64_t j = 0; j + 1 < ell; ++j)
            if (sigma_apply(e[j], sig) != e[j + 1]) {
                res.sigma_chain_ok = false;
                res.reason = "sigma chain breaks at position " + std::to_string(j + 1);
            }
        values.push_back(std::move(e));
    }
    if (!res.det_nonzero || !res.sigma_chain_ok) {
        res.ok = false;
        return res;
    }
    for (size_t var = 0; var < values.size(); ++var) {
        std::vector<KElem> entries = values[var];
        entries.back() = entries.back() * KElem::z(ell);
        Mat<KElem> point = cir(entries);
        DElem d = DElem::monomial(alg, values[var][0], 1);
        if (matrix_rep(d) != point) {
            // membership in D is part of the certificate, not an assumption
            res.ok = false;
            res.sigma_chain_ok = false;
            res.reason = "circulant is not the regular representation of its readback";
            return res;
        }
        res.point.push_back(std::move(point));
        res.delems.push_back(std::move(d));
    }
    res.ok = true;
    return res;
}

namespace {

Poly<KElem> compose_entry(const Poly<Rat>& entry, const Poly<KElem>& f, uint64_t order) {
    Poly<KElem> acc;
    Poly<KElem> pw = Poly<KElem>::constant(KElem::one(order));
    for (int k = 0; k <= entry.degree(); ++k) {
        acc = acc + pw.scaled(KElem::from_rational(order, entry.coeff(k)));
        pw = pw * f;
    }
    return acc;
}

// matrix-valued polynomial as a coefficient list
using MatPoly = std::vector<Mat<KElem>>;

MatPoly matpoly_mul(const MatPoly& a, const MatPoly& b, size_t r, uint64_t order) {
    MatPoly out(a.size() + b.size() - 1, Mat<KElem>::zero(r, r, KElem::zero(order)));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] = out[i + j] + a[i] * b[j];
    return out;
}

MatPoly substituted_matrix(const std::vector<std::vector<Poly<Rat>>>& entries,
                           const Poly<KElem>& f, size_t r, uint64_t order) {
    std::vector<std::vector<Poly<KElem>>> composed(r, std::vector<Poly<KElem>>(r));
    int deg = 0;
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < r; ++j) {
            composed[i][j] = compose_entry(entries[i][j], f, order);
            deg = std::max(deg, composed[i][j].degree());
        }
    MatPoly out(static_cast<size_t>(deg + 1), Mat<KElem>::zero(r, r, KElem::zero(order)));
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < r; ++j)
            for (int k = 0; k <= composed[i][j].degree(); ++k)
                out[static_cast<size_t>(k)].at(i, j) = composed[i][j].coeff(k);
    return out;
}

}  // namespace

bool validate_alpha_span(const Generator& g, const ParamSchedule& sched, uint64_t alpha_exp,
                         uint64_t seed) {
    uint64_t ell = sched.ell;
    size_t r = static_cast<size_t>(std::min(sched.r, 2));
    size_t half = 1ull << g.level;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(-2, 2);
    auto rnd_entries = [&]() {
        std::vector<std::vector<Poly<Rat>>> e(r, std::vector<Poly<Rat>>(r));
        for (size_t i = 0; i < r; ++i)
            for (size_t j = 0; j < r; ++j)
                e[i][j] = Poly<Rat>(std::vector<Rat>{Rat(pick(rng)), Rat(pick(rng)), Rat(pick(rng))});
        return e;
    };
    std::vector<std::vector<std::vector<Poly<Rat>>>> ms, ns;
    for (size_t i = 0; i < half; ++i) {
        ms.push_back(rnd_entries());
        ns.push_back(rnd_entries());
    }
    Generator comb = combine(g, sched, alpha_exp);

    // left side: product over M_i(f_i(x)) and N_i(f_i(y)); variable 0's polys
    const auto& f = g.polys.front();
    MatPoly px{Mat<KElem>::identity(r, KElem::zero(ell))};
    MatPoly py{Mat<KElem>::identity(r, KElem::zero(ell))};
    for (size_t i = 0; i < half; ++i) {
        px = matpoly_mul(px, substituted_matrix(ms[i], f[i], r, ell), r, ell);
        py = matpoly_mul(py, substituted_matrix(ns[i], f[i], r, ell), r, ell);
    }
    // right side: the combined polynomials in one indeterminate v
    const auto& fc = comb.polys.front();
    MatPoly pv{Mat<KElem>::identity(r, KElem::zero(ell))};
    for (size_t i = 0; i < half; ++i)
        pv = matpoly_mul(pv, substituted_matrix(ms[i], fc[i], r, ell), r, ell);
    for (size_t i = 0; i < half; ++i)
        pv = matpoly_mul(pv, substituted_matrix(ns[i], fc[half + i], r, ell), r, ell);

    // coefficient span containment, checked by exact ranks
    std::vector<std::vector<KElem>> rhs_rows, all_rows;
    auto flatten = [&](const Mat<KElem>& m) {
        std::vector<KElem> row;
        for (const auto& x : m.entries()) row.push_back(x);
        return row;
    };
    for (const auto& mcoef : pv) rhs_rows.push_back(flatten(mcoef));
    all_rows = rhs_rows;
    for (const auto& a : px)
        for (const auto& b : py) all_rows.push_back(flatten(a * b));
    auto to_mat = [&](const std::vector<std::vector<KElem>>& rows) {
        Mat<KElem> m = Mat<KElem>::zero(rows.size(), r * r, KElem::zero(ell));
        for (size_t i = 0; i < rows.size(); ++i)
            for (size_t j = 0; j < r * r; ++j) m.at(i, j) = rows[i][j];
        return m;
    };
    return rank(to_mat(rhs_rows)) == rank(to_mat(all_rows));
}

HittingSet hitting_set_in_D(const ParamSchedule& sched, const FsDeskCaps& caps) {
    if (!sched.materializable() || sched.ell > 1024)
        throw ScheduleError("schedule too large to materialize; use the print mode");
    if (sched.d >= 2 && sched.r >= 2)
        throw ScheduleError(
            "sigma-compatible materialization supports r = 1 when d >= 2 (combined Lagrange "
            "positions lose the exact sigma chain otherwise)");
    HittingSet hs;
    hs.field = "K";
    hs.n = sched.n;
    hs.r = sched.r;
    hs.dtilde = sched.dtilde;
    hs.kappa = sched.kappa;
    hs.L = sched.L;
    hs.ell = sched.ell;
    hs.dim = sched.ell;
    hs.mode = sched.mode == ScheduleMode::Desk ? "desk" : "paper-faithful";

    // the final coordinate varies over the first few nonnegative integers; the
    // budget comes from the v-degree of the generator polynomials (n-1 for the
    // Vandermonde base, r^2-1 after a combine) times the certified family degree
    size_t r2 = static_cast<size_t>(sched.r) * static_cast<size_t>(sched.r);
    size_t maxdeg = sched.d == 0 ? static_cast<size_t>(sched.n - 1) : r2 - 1;
    size_t nv = maxdeg * static_cast<size_t>(sched.dtilde) + 1;
    nv = std::min(std::max(nv, size_t(2)), caps.max_v_values);

    std::vector<size_t> levels(sched.d, 0);
    std::vector<size_t> level_count;
    for (uint32_t i = 0; i < sched.d; ++i)
        level_count.push_back(
            static_cast<size_t>(std::min<uint64_t>(sched.w_size[i], caps.max_alpha_per_level)));

    auto emit_for_alpha = [&](const std::vector<size_t>& alpha_idx) {
        Generator g = base_generator(sched);
        for (uint32_t t = 0; t < sched.d; ++t) {
            uint64_t alpha_exp = static_cast<uint64_t>(alpha_idx[t]) + 1;
            if (caps.validate_alphas && !validate_alpha_span(g, sched, alpha_exp, 20240813)) {
                nlohmann::json j;
                j["alpha_level"] = t + 1;
                j["alpha_exp"] = alpha_exp;
                j["reason"] = "span validation failed";
                hs.dropped.push_back(j);
                return;
            }
            g = combine(g, sched, alpha_exp);
        }
        for (size_t vi = 0; vi < nv && hs.kpoints.size() < caps.max_points; ++vi) {
            Rat v(static_cast<long>(vi));
            MaterializeResult m = materialize(g, sched, v);
            nlohmann::json cert;
            cert["v"] = v.str();
            cert["alpha_exps"] = g.alpha_exps;
            cert["det_nonzero"] = m.det_nonzero;
            cert["sigma_chain_ok"] = m.sigma_chain_ok;
            if (!m.ok) {
                cert["reason"] = m.reason;
                hs.dropped.push_back(cert);
                continue;
            }
            hs.kpoints.push_back(std::move(m.point));
            hs.certs.push_back(cert);
        }
    };

    // lexicographic odometer over the alpha indices
    std::vector<size_t> idx(sched.d, 0);
    if (sched.d == 0) {
        emit_for_alpha(idx);
    } else {
        for (;;) {
            emit_for_alpha(idx);
            if (hs.kpoints.size() >= caps.max_points) break;
            size_t t = sched.d;
            bool done = false;
            while (t > 0) {
                --t;
                if (++idx[t] < level_count[t]) break;
                idx[t] = 0;
                if (t == 0) done = true;
            }
            if (done) break;
        }
    }
    return hs;
}

std::vector<std::vector<Mat<Rat>>> rational_fs_points(int nvars, int r, uint64_t dtilde,
                                                      const RationalFsOptions& opt) {
    if (!is_power_of_two(dtilde)) throw ScheduleError("dtilde must be a power of two");
    uint32_t d = exact_log2(dtilde);
    size_t r2 = static_cast<size_t>(std::max(r, 1)) * static_cast<size_t>(std::max(r, 1));
    std::vector<Poly<Rat>> lag = lagrange_basis_q(r2);
    uint32_t kap = d + 1;

    // level polynomials per variable; combine with omega replaced by 2. The
    // base is the affine map u + (i-1): still a single-layer hitting map over
    // any two distinct values, and it keeps entry sizes flat in the variable
    // count (the embedded-D generator keeps the Vandermonde base).
    auto base = [&]() {
        std::vector<std::vector<Poly<Rat>>> polys;
        for (int i = 1; i <= nvars; ++i)
            polys.push_back({Poly<Rat>(std::vector<Rat>{Rat(i - 1), Rat(1)})});
        return polys;
    };
    auto combine_q = [&](const std::vector<std::vector<Poly<Rat>>>& polys, uint32_t t,
                         uint64_t alpha_pow) {
        Rat alpha(1);
        for (uint64_t i = 0; i < alpha_pow; ++i) alpha *= Rat(2);
        uint64_t mu = (1ull << (kap + t - 1)) + 1;
        size_t half = polys.front().size();
        std::vector<std::vector<Poly<Rat>>> out(polys.size());
        for (size_t var = 0; var < polys.size(); ++var) {
            std::vector<Poly<Rat>> np(2 * half);
            for (size_t pos = 0; pos < half; ++pos) {
                Poly<Rat> low, high;
                for (size_t l = 1; l <= r2; ++l) {
                    Rat c = alpha;
                    for (size_t i = 0; i < l; ++i) c *= Rat(2);
                    Rat cmu(1);
                    for (uint64_t i = 0; i < mu; ++i) cmu *= c;
                    low = low + lag[l - 1].scaled(polys[var][pos].eval(c));
                    high = high + lag[l - 1].scaled(polys[var][pos].eval(cmu));
                }
                np[pos] = std::move(low);
                np[pos + half] = std::move(high);
            }
            out[var] = std::move(np);
        }
        return out;
    };

    std::vector<std::vector<Mat<Rat>>> points;
    std::vector<size_t> idx(d, 0);
    for (;;) {
        auto polys = base();
        for (uint32_t t = 0; t < d; ++t) polys = combine_q(polys, t + 1, idx[t] + 1);
        for (size_t vi = 0; vi < opt.v_values && points.size() < opt.max_points; ++vi) {
            Rat v(static_cast<long>(vi));
            std::vector<Mat<Rat>> tuple;
            bool nonzero_all = true;
            for (int var = 0; var < nvars; ++var) {
                Mat<Rat> m = Mat<Rat>::zero(dtilde + 1, dtilde + 1, Rat(0));
                for (uint64_t j = 0; j < dtilde; ++j) {
                    Rat val = polys[static_cast<size_t>(var)][j].zero()
                                  ? Rat(0)
                                  : polys[static_cast<size_t>(var)][j].eval(v);
                    if (val.is_zero()) nonzero_all = false;
                    m.at(j, j + 1) = val;
                }
                tuple.push_back(std::move(m));
            }
            (void)nonzero_all;  // nilpotent substitutions need no invertibility
            points.push_back(std::move(tuple));
        }
        if (points.size() >= opt.max_points || d == 0) break;
        size_t t = d;
        bool done = false;
        while (t > 0) {
            --t;
            if (++idx[t] < opt.alpha_values_per_level) break;
            idx[t] = 0;
            if (t == 0) done = true;
        }
        if (done) break;
    }
    return points;
}

}  // namespace skewrit
