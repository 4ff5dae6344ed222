#include "skewrit/assembly.hpp"

#include <random>

namespace skewrit {

namespace {

uint64_t next_pow2(uint64_t v) {
    uint64_t p = 1;
    while (p < v) p *= 2;
    return p;
}

Mat<KElem> rat_to_k(const Mat<Rat>& m, uint64_t order) {
    return m.map([&](const Rat& r) { return KElem::from_rational(order, r); });
}

// z-specialized evaluation: sound filter for the K-point scans; witnesses are
// re-verified exactly before they are reported
std::optional<Mat<CycloElem>> point_at_z(const Mat<KElem>& m, const Rat& z0) {
    std::vector<CycloElem> out;
    out.reserve(m.entries().size());
    try {
        for (const auto& e : m.entries()) out.push_back(e.at_z(z0));
    } catch (const DenominatorVanishes&) {
        return std::nullopt;
    }
    return Mat<CycloElem>(m.rows(), m.cols(), std::move(out));
}

}  // namespace

ScalingSet scaling_set(uint64_t s, uint64_t m, uint64_t dprime) {
    if (s < 1 || m < 1) throw std::invalid_argument("scaling_set: positive s, m required");
    uint64_t inner = 2 * s * m * dprime;  // determinant expansion bound
    uint64_t n = 2 * inner + 1;           // numerator * denominator products
    ScalingSet out;
    out.bound = n;
    out.derivation["s"] = s;
    out.derivation["m"] = m;
    out.derivation["dprime"] = dprime;
    out.derivation["det_expansion_bound"] = inner;
    out.derivation["N"] = n;
    for (uint64_t i = 0; i <= n; ++i) out.values.push_back(Rat(static_cast<long>(i)));
    return out;
}

HittingSet hs_height0(int n, int s, const DeskProfile& profile) {
    if (n < 1 || s < 1) throw std::invalid_argument("positive n, s required");
    uint64_t dtilde = next_pow2(static_cast<uint64_t>(std::min(s, 4)));
    int r = std::min(s, profile.h0_width);
    RationalFsOptions opt;
    opt.max_points = profile.h0_max_points * 2;
    opt.v_values = profile.h0_max_v;
    HittingSet hs;
    hs.field = "Q";
    hs.n = n;
    hs.s = s;
    hs.height = 0;
    hs.r = r;
    hs.dtilde = dtilde;
    hs.dim = dtilde + 1;
    hs.mode = "desk";
    hs.qpoints = rational_fs_points(n, r, dtilde, opt);
    for (size_t i = 0; i < hs.qpoints.size(); ++i)
        hs.certs.push_back(nlohmann::json{{"index", i}, {"shape", "nilpotent-upper-shift"}});
    return hs;
}

HittingSet strong_hs_height1(int n, int s, const DeskProfile& profile) {
    if (n < 1 || s < 1) throw std::invalid_argument("positive n, s required");
    // H0: the sigma-compatible Forbes-Shpilka set embedded in D
    ParamSchedule sched = schedule(n, std::min(s, profile.h0_width), 2, 1, ScheduleMode::Desk,
                                   profile.kappa);
    FsDeskCaps caps;
    caps.max_points = profile.h0_max_points;
    caps.max_v_values = profile.h0_max_v;
    HittingSet h0 = hitting_set_in_D(sched, caps);

    // H1: strong points for generalized ABPs over the same algebra
    DivAlgebra alg(sched.ell, sched.kappa);
    StrongHitsetOptions gopt;
    gopt.max_points = profile.h1_max_points;
    HittingSet h1 = strong_hitting_set_genabp(n, std::min(2 * s, 2), profile.genabp_degree, alg,
                                              gopt);

    size_t d1 = static_cast<size_t>(profile.genabp_degree);
    size_t dim = sched.ell * d1;
    ScalingSet t_full = scaling_set(static_cast<uint64_t>(s), dim, 1);
    size_t t_count = std::min<size_t>(profile.t_cap, t_full.values.size());

    HittingSet hs;
    hs.field = "K";
    hs.n = n;
    hs.s = s;
    hs.height = 1;
    hs.dim = dim;
    hs.ell = sched.ell;
    hs.kappa = sched.kappa;
    hs.L = sched.L;
    hs.mode = "desk";

    Mat<KElem> id_d = Mat<KElem>::identity(d1, KElem::zero(sched.ell));
    for (size_t qi = 0; qi < h0.kpoints.size(); ++qi) {
        std::vector<Mat<KElem>> shifted;
        for (const auto& qm : h0.kpoints[qi]) shifted.push_back(kron(qm, id_d));
        for (size_t pi = 0; pi < std::max<size_t>(h1.kpoints.size(), 1); ++pi) {
            for (size_t ti = 0; ti < t_count; ++ti) {
                const Rat& alpha = t_full.values[ti];
                if (alpha.is_zero() && pi > 0) continue;  // alpha = 0 collapses p
                if (pi >= h1.kpoints.size() && !alpha.is_zero()) continue;
                std::vector<Mat<KElem>> point;
                for (int k = 0; k < n; ++k) {
                    Mat<KElem> m = shifted[static_cast<size_t>(k)];
                    if (!alpha.is_zero())
                        m = m + h1.kpoints[pi][static_cast<size_t>(k)].scaled(
                                    KElem::from_rational(sched.ell, alpha));
                    point.push_back(std::move(m));
                }
                hs.certs.push_back(nlohmann::json{{"q_index", qi},
                                                  {"p_index", alpha.is_zero() ? -1 : (int)pi},
                                                  {"alpha", alpha.str()},
                                                  {"scaling_bound", t_full.bound}});
                hs.kpoints.push_back(std::move(point));
            }
        }
    }
    hs.dropped.insert(hs.dropped.end(), h0.dropped.begin(), h0.dropped.end());
    hs.dropped.insert(hs.dropped.end(), h1.dropped.begin(), h1.dropped.end());
    return hs;
}

HittingSet hs_height2(int n, int s, const DeskProfile& profile) {
    HittingSet h1 = strong_hs_height1(n, s, profile);
    size_t d = h1.dim;  // dimension of the shift points
    uint64_t dhat = profile.fs_dhat;
    size_t block = static_cast<size_t>(dhat) + 1;
    size_t dim = d * block;
    uint64_t order = h1.ell;

    // reshaped Forbes-Shpilka set over the n d^2 commuting-block variables
    RationalFsOptions fopt;
    fopt.max_points = profile.fs_max_points;
    fopt.v_values = 3;
    size_t nz = static_cast<size_t>(n) * d * d;
    auto fs_raw = rational_fs_points(static_cast<int>(nz), 1, next_pow2(dhat), fopt);
    std::vector<std::vector<Mat<Rat>>> fs_reshaped;
    for (const auto& raw : fs_raw) {
        std::vector<Mat<Rat>> per_var;
        for (int k = 0; k < n; ++k) {
            Mat<Rat> big = Mat<Rat>::zero(dim, dim, Rat(0));
            for (size_t i = 0; i < d; ++i)
                for (size_t j = 0; j < d; ++j) {
                    size_t zvar = (static_cast<size_t>(k) * d + i) * d + j;
                    const Mat<Rat>& sub = raw[zvar];
                    for (size_t a = 0; a < block; ++a)
                        for (size_t b = 0; b < block; ++b)
                            big.at(i * block + a, j * block + b) = sub.at(a, b);
                }
            per_var.push_back(std::move(big));
        }
        fs_reshaped.push_back(std::move(per_var));
    }

    ScalingSet t_full = scaling_set(static_cast<uint64_t>(s), d, 1);
    size_t t_count = std::min<size_t>(profile.t_cap, t_full.values.size());
    size_t shifts = std::min(profile.h2_shift_cap, h1.kpoints.size());

    // K-points alpha p + q kron I_{dhat+1}, then the (omega, z) -> (t1, t2)
    // transfer with denominator-vanishing pairs skipped
    HittingSet hs;
    hs.field = "Q";
    hs.n = n;
    hs.s = s;
    hs.height = 2;
    hs.dim = dim;
    hs.ell = order;
    hs.kappa = h1.kappa;
    hs.mode = "desk";

    Mat<KElem> iblk = Mat<KElem>::identity(block, KElem::zero(order));
    std::vector<Rat> tgrid;
    for (size_t i = 0; i < profile.t2_cap; ++i) tgrid.push_back(Rat(static_cast<long>(i)));

    for (size_t qi = 0; qi < shifts; ++qi) {
        std::vector<Mat<KElem>> shifted;
        for (const auto& qm : h1.kpoints[qi]) shifted.push_back(kron(qm, iblk));
        for (size_t pi = 0; pi < std::max<size_t>(fs_reshaped.size(), 1); ++pi) {
            for (size_t ti = 0; ti < t_count; ++ti) {
                const Rat& alpha = t_full.values[ti];
                if (alpha.is_zero() && pi > 0) continue;
                if (pi >= fs_reshaped.size() && !alpha.is_zero()) continue;
                std::vector<Mat<KElem>> kpoint;
                for (int k = 0; k < n; ++k) {
                    Mat<KElem> m = shifted[static_cast<size_t>(k)];
                    if (!alpha.is_zero())
                        m = m + rat_to_k(fs_reshaped[pi][static_cast<size_t>(k)], order)
                                    .scaled(KElem::from_rational(order, alpha));
                    kpoint.push_back(std::move(m));
                }
                // transfer to Q over the (t1, t2) grid
                for (const Rat& t1 : tgrid)
                    for (const Rat& t2 : tgrid) {
                        if (hs.qpoints.size() >= profile.max_scan_points) return hs;
                        bool vanished = false;
                        std::vector<Mat<Rat>> qpoint;
                        for (const auto& km : kpoint) {
                            std::vector<Rat> entries;
                            entries.reserve(km.entries().size());
                            for (const auto& e : km.entries()) {
                                try {
                                    entries.push_back(eval_at_rationals(e, t1, t2));
                                } catch (const DenominatorVanishes&) {
                                    vanished = true;
                                    break;
                                }
                            }
                            if (vanished) break;
                            qpoint.push_back(Mat<Rat>(km.rows(), km.cols(), std::move(entries)));
                        }
                        nlohmann::json rec{{"q_index", qi},
                                           {"p_index", alpha.is_zero() ? -1 : (int)pi},
                                           {"alpha", alpha.str()},
                                           {"t1", t1.str()},
                                           {"t2", t2.str()}};
                        if (vanished) {
                            rec["reason"] = "denominator vanished during transfer";
                            hs.dropped.push_back(rec);
                            continue;
                        }
                        hs.certs.push_back(rec);
                        hs.qpoints.push_back(std::move(qpoint));
                    }
            }
        }
    }
    hs.dropped.insert(hs.dropped.end(), h1.dropped.begin(), h1.dropped.end());
    return hs;
}

Verdict blackbox_scan_q(const EvalOracleQ& oracle, const HittingSet& hs) {
    Verdict v;
    v.report["points_scanned"] = 0;
    size_t scanned = 0, not_defined = 0;
    for (size_t i = 0; i < hs.qpoints.size(); ++i) {
        auto r = oracle(hs.qpoints[i]);
        ++scanned;
        if (!r.defined()) {
            ++not_defined;
            continue;
        }
        if (!r.value->is_zero()) {
            v.zero = false;
            v.witness_index = i;
            v.witness_q = hs.qpoints[i];
            break;
        }
    }
    v.report["points_scanned"] = scanned;
    v.report["not_defined"] = not_defined;
    v.report["verdict"] = v.zero ? "ZERO" : "NONZERO";
    return v;
}

Verdict blackbox_scan_k(const EvalOracleK& oracle, const HittingSet& hs) {
    Verdict v;
    size_t scanned = 0, not_defined = 0;
    for (size_t i = 0; i < hs.kpoints.size(); ++i) {
        auto r = oracle(hs.kpoints[i]);
        ++scanned;
        if (!r.defined()) {
            ++not_defined;
            continue;
        }
        if (!r.value->is_zero()) {
            v.zero = false;
            v.witness_index = i;
            v.witness_k = hs.kpoints[i];
            break;
        }
    }
    v.report["points_scanned"] = scanned;
    v.report["not_defined"] = not_defined;
    v.report["verdict"] = v.zero ? "ZERO" : "NONZERO";
    return v;
}

Verdict blackbox_test(const FormulaPtr& f, int n, int s, int height, const DeskProfile& profile) {
    if (height < 0 || height > 2) throw std::invalid_argument("height must be 0, 1 or 2");
    Verdict v;
    if (height == 0 || height == 2) {
        HittingSet hs = height == 0 ? hs_height0(n, s, profile) : hs_height2(n, s, profile);
        EvalOracleQ oracle = [&](const std::vector<Mat<Rat>>& pt) {
            return eval(f, pt, hs.dim, Rat(0));
        };
        v = blackbox_scan_q(oracle, hs);
        if (!v.zero) {
            // re-verify the witness through a fresh evaluation
            auto rv = eval(f, v.witness_q, hs.dim, Rat(0));
            if (!rv.defined() || rv.value->is_zero())
                throw std::logic_error("witness failed re-verification");
            v.report["witness_reverified"] = true;
        }
        v.report["set_size"] = hs.qpoints.size();
        v.report["height"] = height;
        return v;
    }
    // height 1: scan the K-point set, filtering through a z-specialization and
    // re-verifying exactly over K
    HittingSet hs = strong_hs_height1(n, s, profile);
    size_t scanned = 0, not_defined = 0;
    for (size_t i = 0; i < hs.kpoints.size(); ++i) {
        ++scanned;
        bool candidate = false;
        for (long z0 : {7L, 11L}) {
            std::vector<Mat<CycloElem>> spec;
            bool ok = true;
            for (const auto& m : hs.kpoints[i]) {
                auto sm = point_at_z(m, Rat(z0));
                if (!sm) {
                    ok = false;
                    break;
                }
                spec.push_back(std::move(*sm));
            }
            if (!ok) continue;
            auto r = eval(f, spec, hs.dim, CycloElem::zero(hs.ell));
            if (!r.defined()) continue;
            if (!r.value->is_zero()) {
                candidate = true;
                break;
            }
        }
        if (!candidate) {
            ++not_defined;
            continue;
        }
        auto exact = eval(f, hs.kpoints[i], hs.dim, KElem::zero(hs.ell));
        if (exact.defined() && !exact.value->is_zero()) {
            v.zero = false;
            v.witness_index = i;
            v.witness_k = hs.kpoints[i];
            break;
        }
    }
    v.report["points_scanned"] = scanned;
    v.report["skipped_or_zero_specialized"] = not_defined;
    v.report["verdict"] = v.zero ? "ZERO" : "NONZERO";
    v.report["witness_reverified"] = !v.zero;
    v.report["set_size"] = hs.kpoints.size();
    v.report["height"] = height;
    return v;
}

Verdict random_oracle_test(const FormulaPtr& f, size_t max_dim, size_t trials, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> entry(-4, 4);
    int n = std::max(f->max_var, 1);
    Verdict v;
    v.randomized = true;
    size_t scanned = 0, not_defined = 0;
    for (size_t m = 1; m <= max_dim && v.zero; ++m) {
        for (size_t t = 0; t < trials; ++t) {
            std::vector<Mat<Rat>> pt;
            for (int k = 0; k < n; ++k) {
                Mat<Rat> a = Mat<Rat>::zero(m, m, Rat(0));
                for (size_t i = 0; i < m; ++i)
                    for (size_t j = 0; j < m; ++j) a.at(i, j) = Rat(entry(rng));
                pt.push_back(std::move(a));
            }
            ++scanned;
            auto r = eval(f, pt, m, Rat(0));
            if (!r.defined()) {
                ++not_defined;
                continue;
            }
            if (!r.value->is_zero()) {
                v.zero = false;
                v.witness_q = pt;
                v.report["witness_dimension"] = m;
                break;
            }
        }
    }
    v.report["points_scanned"] = scanned;
    v.report["not_defined"] = not_defined;
    v.report["verdict"] = v.zero ? "LIKELY_ZERO" : "NONZERO";
    v.report["seed"] = seed;
    v.report["trials_per_dimension"] = trials;
    v.report["max_dimension"] = max_dim;
    return v;
}

}  // namespace skewrit
