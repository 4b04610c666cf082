#include "pcms/suites.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "pcms/fixedpoint.hpp"
#include "pcms/rng.hpp"
#include "pcms/topology.hpp"

namespace pcms {
namespace {

double pick_tol(const SpaceConfig& cfg, const SuiteOptions& opts) {
    return opts.tol.value_or(cfg.grids.tolerance);
}

std::string fmt(double v) {
    std::ostringstream out;
    out << v;
    return out.str();
}

// Builds the space, folding a failed cone-metric sweep into the report
// instead of throwing; returns nullopt when the space cannot exist.
std::optional<PcmSpace> build_space_checked(const SpaceConfig& cfg, AxiomReport& report,
                                            const SuiteOptions& opts) {
    if (cfg.kernel == KernelFamily::FromConeMetric) {
        AxiomReport cm = check_cone_metric_axioms(ConeMetric{cfg.metric},
                                                  cfg.carrier.sample_points(),
                                                  pick_tol(cfg, opts), opts.mode);
        report.append(cm);
        if (!cm.all_passed()) return std::nullopt;
    }
    return build_space(cfg);
}

std::vector<double> interior_mus(const SpaceConfig& cfg) {
    std::vector<double> out;
    for (double mu : cfg.grids.mu_values)
        if (mu > 0.0 && mu < 1.0) out.push_back(mu);
    if (out.empty()) out = {0.25, 0.5, 0.75};
    return out;
}

void append_diameter_checks(AxiomReport& report, const PcmSpace& space, const SpaceConfig& cfg,
                            const SuiteOptions& opts) {
    std::vector<double> A = space.sample_points();
    DiameterProfile profile = diameter_profile(space, A, cfg.t_vectors(), 8, opts.mode);
    for (const auto& [ts, delta] : profile.values)
        report.add("Diameter(t=" + fmt(ts) + ")", CheckStatus::Pass, delta);

    {
        double tol = pick_tol(cfg, opts);
        bool monotone = true;
        Witness bad;
        for (std::size_t i = 1; i < profile.values.size(); ++i)
            if (profile.values[i].second < profile.values[i - 1].second - tol) {
                monotone = false;
                bad = {profile.values[i - 1].first, profile.values[i].first};
                break;
            }
        report.add("Diameter-nondecreasing", monotone ? CheckStatus::Pass : CheckStatus::Fail,
                   0.0, monotone ? std::nullopt : std::make_optional(bad));
    }

    {
        std::vector<double> eps_grid = cfg.grids.epsilons();
        eps_grid.insert(eps_grid.end(), cfg.grids.t_values.begin(), cfg.grids.t_values.end());
        std::optional<FcBound> fc = is_fc_bounded(space, A, eps_grid, cfg.grids.lambda_values);
        if (fc) {
            Witness w(fc->eps.components());
            w.push_back(fc->lambda);
            report.add("FC-bounded", CheckStatus::Pass, fc->lambda, std::move(w));
        } else {
            report.add("FC-bounded", CheckStatus::Degenerate, 0.0);
        }
    }

    {
        std::optional<NondiametralPoint> nd = find_nondiametral(space, A, cfg.t_vectors(), 1e-9);
        if (nd) {
            Witness w{nd->x};
            const auto& tc = nd->t0.components();
            w.insert(w.end(), tc.begin(), tc.end());
            report.add("Nondiametral", CheckStatus::Pass, nd->margin, std::move(w));
        } else {
            report.add("Nondiametral", CheckStatus::Degenerate, 0.0);
        }
    }

    {
        Vector eps = cfg.epsilon_vectors().front();
        double lambda = cfg.grids.lambda_values[cfg.grids.lambda_values.size() / 2];
        std::vector<double> centers = totally_bounded_cover(space, A, eps, lambda);
        bool covered = true;
        for (double a : A) {
            bool in_some = false;
            for (double c : centers)
                if (member(space, Neighborhood{c, eps, lambda, false}, a)) {
                    in_some = true;
                    break;
                }
            if (!in_some) {
                covered = false;
                break;
            }
        }
        report.add("Cover", covered ? CheckStatus::Pass : CheckStatus::Fail,
                   static_cast<double>(centers.size()), Witness(centers));
    }
}

void append_hausdorff_checks(AxiomReport& report, const PcmSpace& space, const SpaceConfig& cfg,
                             const SuiteOptions& opts) {
    std::vector<double> points = space.sample_points();
    Vector t0 = cfg.epsilon_vectors().front();

    std::vector<std::pair<double, double>> pairs{{points.front(), points.back()}};
    SplitMix64 rng(opts.seed);
    for (int i = 0; i < 20 && points.size() >= 2; ++i) {
        double p = points[rng.below(points.size())];
        double q = points[rng.below(points.size())];
        if (p == q || (p == pairs.front().first && q == pairs.front().second)) continue;
        if (std::find(pairs.begin(), pairs.end(), std::make_pair(p, q)) != pairs.end()) continue;
        pairs.emplace_back(p, q);
    }

    for (auto [p, q] : pairs) {
        std::string id = "Hausdorff(" + fmt(p) + "," + fmt(q) + ")";
        try {
            HausdorffWitness w = hausdorff_witness(space, p, q, t0);
            bool disjoint = true;
            for (double r : points)
                if (member(space, w.ball_p, r) && member(space, w.ball_q, r)) {
                    disjoint = false;
                    break;
                }
            report.add(id, disjoint ? CheckStatus::Pass : CheckStatus::Fail,
                       w.lambda0 - w.lambda, Witness{p, q, w.lambda, w.lambda1});
        } catch (const WitnessNotFoundError&) {
            report.add(id, CheckStatus::Degenerate, 0.0, Witness{p, q});
        }
    }
}

void append_convexity_checks(AxiomReport& report, const PcmSpace& space,
                             const SpaceConfig& cfg, const SuiteOptions& opts) {
    ConvexStructure cs = ConvexStructure::affine();
    std::vector<double> points = space.sample_points();
    std::vector<double> mus = interior_mus(cfg);
    std::vector<Vector> eps = cfg.epsilon_vectors();
    double tol = pick_tol(cfg, opts);
    ConvexitySweepOptions copts{tol, opts.mode};

    // Endpoint laws are exact by definition of the structure.
    {
        double worst = 0.0;
        Witness bad;
        for (double x : points)
            for (double y : points) {
                double d = std::max(std::fabs(cs.s_point(x, y, 0.0) - y),
                                    std::fabs(cs.s_point(x, y, 1.0) - x));
                if (d > worst) {
                    worst = d;
                    bad = {x, y};
                }
            }
        report.add("S-boundary", worst == 0.0 ? CheckStatus::Pass : CheckStatus::Fail, -worst,
                   worst == 0.0 ? std::nullopt : std::make_optional(bad));
    }

    report.append(check_convexity_inequality(space, cs, points, mus, eps, copts));
    report.append(check_strict_comparison(space, cs, points, mus, eps, copts));
    report.append(check_strict_convexity(space, cs, points, mus, eps, 101, copts));

    {
        RealInterval bounds = space.carrier().bounds();
        RealInterval shell = closed_convex_shell(cs, points);
        bool ok = shell.lo == bounds.lo && shell.hi == bounds.hi;
        report.add("Shell-carrier", ok ? CheckStatus::Pass : CheckStatus::Fail, 0.0,
                   ok ? std::nullopt : std::make_optional(Witness{shell.lo, shell.hi}));
    }

    {
        double center = space.carrier().bounds().mid();
        Vector eps0 = cfg.epsilon_vectors().front();
        double lambda = cfg.grids.lambda_values[cfg.grids.lambda_values.size() / 2];
        report.append(
            closed_ball_convexity_check(space, cs, center, eps0, lambda, points, mus, copts));
    }
}

void append_fixed_point_checks(AxiomReport& report, const PcmSpace& space,
                               const SpaceConfig& cfg, const SuiteOptions& opts) {
    double tol = pick_tol(cfg, opts);
    std::pair<SelfMap, SelfMap> maps = [&] {
        try {
            return build_maps(cfg);
        } catch (const ConstructionError& e) {
            report.append(e.report());
            throw;
        }
    }();
    const SelfMap& f = maps.first;
    const SelfMap& g = maps.second;
    std::vector<double> points = space.sample_points();
    std::vector<Vector> ts = cfg.t_vectors();

    report.append(check_pair_condition(space, f, g, points, ts, tol, opts.mode));

    bool same_map = true;
    for (double x : points)
        if (f.apply(x) != g.apply(x)) {
            same_map = false;
            break;
        }
    if (same_map)
        report.append(check_nonexpansive(space, f, points, cfg.epsilon_vectors(), tol, opts.mode));

    SolverConfig solver = cfg.maps->solver;
    try {
        FixedPointResult r =
            find_common_fixed_point(f, g, ConvexStructure::affine(), solver, opts.mode);
        report.add("FixedPoint-found", CheckStatus::Pass,
                   std::max(r.residual_f, r.residual_g),
                   Witness{r.point, static_cast<double>(r.iterations)});
        bool verified = verify_fixed_point(f, g, r.point, solver.tol);
        report.add("FixedPoint-verified", verified ? CheckStatus::Pass : CheckStatus::Fail,
                   verified ? 0.0 : -1.0, Witness{r.point});
    } catch (const SolveError& e) {
        report.add("FixedPoint-found", CheckStatus::Fail,
                   -std::max(e.best().residual_f, e.best().residual_g),
                   Witness{e.best().point});
    }
}

}  // namespace

AxiomReport run_check_axioms(const SpaceConfig& cfg, const SuiteOptions& opts) {
    AxiomReport report{"check-axioms", {}};

    {
        std::vector<double> grid;
        for (int i = 0; i <= 10; ++i) grid.push_back(i / 10.0);
        report.append(check_tnorm_axioms(cfg.tnorm_obj(), grid));
    }

    {
        ConeSpec cone = cfg.cone();
        std::vector<Vector> samples{cone.zero(), Vector::uniform(cone.dim(), 1.0)};
        for (int axis = 0; axis < cone.dim(); ++axis) {
            std::vector<double> e(static_cast<std::size_t>(cone.dim()), 0.0);
            e[static_cast<std::size_t>(axis)] = 1.0;
            samples.push_back(Vector(std::move(e)));
        }
        for (const Vector& t : cfg.t_vectors()) samples.push_back(t);
        report.append(check_cone_axioms(cone, samples, {0.0, 0.5, 1.0, 2.0}));
    }

    std::optional<PcmSpace> space = build_space_checked(cfg, report, opts);
    if (!space) return report;

    PcmCheckOptions popts{pick_tol(cfg, opts), opts.mode};
    report.append(check_pcm_axioms(*space, space->sample_points(), cfg.t_vectors(), popts));
    return report;
}

AxiomReport run_diameter(const SpaceConfig& cfg, const SuiteOptions& opts) {
    AxiomReport report{"diameter", {}};
    std::optional<PcmSpace> space = build_space_checked(cfg, report, opts);
    if (space) append_diameter_checks(report, *space, cfg, opts);
    return report;
}

AxiomReport run_hausdorff(const SpaceConfig& cfg, const SuiteOptions& opts) {
    AxiomReport report{"hausdorff-witness", {}};
    std::optional<PcmSpace> space = build_space_checked(cfg, report, opts);
    if (space) append_hausdorff_checks(report, *space, cfg, opts);
    return report;
}

AxiomReport run_convexity(const SpaceConfig& cfg, const SuiteOptions& opts) {
    if (cfg.structure != ConfigStructure::Affine)
        throw ConfigError("config error at structure: convexity checks require structure affine");
    AxiomReport report{"convexity", {}};
    std::optional<PcmSpace> space = build_space_checked(cfg, report, opts);
    if (!space) return report;
    append_convexity_checks(report, *space, cfg, opts);
    return report;
}

AxiomReport run_fixed_point(const SpaceConfig& cfg, const SuiteOptions& opts) {
    if (!cfg.maps)
        throw ConfigError("config error at maps: fixed-point checks require a maps section");
    AxiomReport report{"fixed-point", {}};
    std::optional<PcmSpace> space = build_space_checked(cfg, report, opts);
    if (!space) return report;
    try {
        append_fixed_point_checks(report, *space, cfg, opts);
    } catch (const ConstructionError&) {
        // Range report already appended; the failure is the result.
    }
    return report;
}

AxiomReport run_full_suite(const SpaceConfig& cfg, const SuiteOptions& opts) {
    AxiomReport report = run_check_axioms(cfg, opts);
    report.suite = "full-suite";
    if (!report.all_passed()) return report;  // space may be unusable past here

    PcmSpace space = build_space(cfg);  // CM sweep already green
    append_diameter_checks(report, space, cfg, opts);
    append_hausdorff_checks(report, space, cfg, opts);
    if (cfg.structure == ConfigStructure::Affine &&
        cfg.carrier.kind() == Carrier::Kind::Interval)
        append_convexity_checks(report, space, cfg, opts);
    if (cfg.maps) {
        try {
            append_fixed_point_checks(report, space, cfg, opts);
        } catch (const ConstructionError&) {
            // Range report already appended; the failure is the result.
        }
    }
    return report;
}

AxiomReport run_suite(const std::string& name, const SpaceConfig& cfg,
                      const SuiteOptions& opts) {
    if (name == "check-axioms") return run_check_axioms(cfg, opts);
    if (name == "diameter") return run_diameter(cfg, opts);
    if (name == "hausdorff-witness") return run_hausdorff(cfg, opts);
    if (name == "convexity") return run_convexity(cfg, opts);
    if (name == "fixed-point") return run_fixed_point(cfg, opts);
    if (name == "full-suite") return run_full_suite(cfg, opts);
    throw ConfigError("unknown subcommand '" + name + "'");
}

}  // namespace pcms
