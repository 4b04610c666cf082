#include "pcms/convexity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pcms/errors.hpp"
#include "pcms/topology.hpp"

namespace pcms {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_interior_mu(const std::vector<double>& mus) {
    for (double mu : mus)
        if (!(mu > 0.0 && mu < 1.0))
            throw DomainError("convexity sweeps require mu in (0,1)");
}

std::vector<double> scalarized(const PcmSpace& space, const std::vector<Vector>& ts) {
    std::vector<double> out;
    out.reserve(ts.size());
    for (const Vector& t : ts) out.push_back(space.scalarize(t));
    return out;
}

}  // namespace

ConvexStructure ConvexStructure::affine() { return ConvexStructure(StructureKind::Affine); }

ConvexStructure ConvexStructure::tabulated(std::vector<TableEntry> table) {
    if (table.empty()) throw InputError("tabulated structure needs at least one entry");
    ConvexStructure cs(StructureKind::Tabulated);
    for (const TableEntry& e : table) {
        if (!(e.mu >= 0.0 && e.mu <= 1.0))
            throw InputError("tabulated mu values must lie in [0,1]");
        if (e.mu == 0.0 && e.value != e.y)
            throw InputError("tabulated structure violates S(x,y,0) = y");
        if (e.mu == 1.0 && e.value != e.x)
            throw InputError("tabulated structure violates S(x,y,1) = x");
    }
    cs.table_ = std::move(table);
    return cs;
}

double ConvexStructure::s_point(double x, double y, double mu) const {
    if (!(mu >= 0.0 && mu <= 1.0)) throw DomainError("mu must lie in [0,1]");
    if (kind_ == StructureKind::Affine) {
        if (mu == 0.0) return y;
        if (mu == 1.0) return x;
        if (x == y) return x;  // idempotence must be exact, not one rounding off
        return mu * x + (1.0 - mu) * y;
    }
    for (const TableEntry& e : table_)
        if (e.x == x && e.y == y && e.mu == mu) return e.value;
    throw DomainError("no tabulated entry for (x, y, mu)");
}

AxiomReport check_convexity_inequality(const PcmSpace& space, const ConvexStructure& cs,
                     const std::vector<double>& points, const std::vector<double>& mus,
                     const std::vector<Vector>& epsilons, const ConvexitySweepOptions& opts) {
    if (points.empty() || mus.empty() || epsilons.empty())
        throw InputError("G1 sweep needs points, mus, and epsilons");
    require_interior_mu(mus);
    std::vector<double> es = scalarized(space, epsilons);

    const Kernel& kernel = space.kernel();
    const TNorm& tnorm = space.tnorm();
    const std::size_t np = points.size(), nm = mus.size(), ne = es.size();

    AxiomReport report{"convexity-g1", {}};
    const std::array<std::size_t, 5> ext{np, np, np, nm, ne};
    SweepResult r = sweep_min(np * np * np * nm * ne, [&](std::size_t idx) {
        auto c = decode_index(idx, ext);
        double x = points[c[0]], y = points[c[1]], z = points[c[2]], mu = mus[c[3]];
        double e = es[c[4]];
        double lhs = kernel.eval(cs.s_point(x, y, mu), z, 2.0 * e);
        double rhs = tnorm.apply(kernel.eval(x, z, e / mu),
                                 kernel.eval(y, z, e / (1.0 - mu)));
        return lhs - rhs;
    }, opts.mode);
    bool ok = r.min_slack >= -opts.tol;
    std::optional<Witness> wit;
    if (!ok) {
        auto c = decode_index(r.argmin, ext);
        Witness w{points[c[0]], points[c[1]], points[c[2]], mus[c[3]]};
        const auto& ec = epsilons[c[4]].components();
        w.insert(w.end(), ec.begin(), ec.end());
        wit = std::move(w);
    }
    report.add("ConvexityIneq", ok ? CheckStatus::Pass : CheckStatus::Fail, r.min_slack, std::move(wit));
    return report;
}

AxiomReport check_strict_comparison(const PcmSpace& space, const ConvexStructure& cs,
                     const std::vector<double>& points, const std::vector<double>& mus,
                     const std::vector<Vector>& epsilons, const ConvexitySweepOptions& opts) {
    if (points.empty() || mus.empty() || epsilons.empty())
        throw InputError("G3 sweep needs points, mus, and epsilons");
    require_interior_mu(mus);
    std::vector<double> es = scalarized(space, epsilons);

    const Kernel& kernel = space.kernel();
    const std::size_t np = points.size(), nm = mus.size(), ne = es.size();
    const std::size_t total = np * np * np * nm * ne;
    const double tol = opts.tol;

    const std::array<std::size_t, 5> ext{np, np, np, nm, ne};
    auto diff_at = [&](std::size_t idx) {
        auto c = decode_index(idx, ext);
        double x = points[c[0]], y = points[c[1]], z = points[c[2]], mu = mus[c[3]];
        double e = es[c[4]];
        double lhs = kernel.eval(cs.s_point(x, y, mu), z, e);
        double rhs = std::min(kernel.eval(x, z, e), kernel.eval(z, y, e));
        return lhs - rhs;
    };
    auto witness_at = [&](std::size_t idx) {
        auto c = decode_index(idx, ext);
        Witness w{points[c[0]], points[c[1]], points[c[2]], mus[c[3]]};
        const auto& ec = epsilons[c[4]].components();
        w.insert(w.end(), ec.begin(), ec.end());
        return w;
    };

    AxiomReport report{"convexity-g3", {}};

    // Strictness over tuples where the two sides actually differ.
    {
        SweepResult r = sweep_min(total, [&](std::size_t idx) {
            double diff = diff_at(idx);
            return std::fabs(diff) <= tol ? kInf : diff;
        }, opts.mode);
        bool vacuous = !std::isfinite(r.min_slack);
        bool ok = vacuous || r.min_slack > tol;
        report.add("StrictIneq", ok ? CheckStatus::Pass : CheckStatus::Fail,
                   vacuous ? 0.0 : r.min_slack,
                   ok ? std::nullopt : std::make_optional(witness_at(r.argmin)));
    }

    // Equality tuples: degenerate coincidences the strictness claim excludes.
    {
        CountResult eq = sweep_count(total, [&](std::size_t idx) {
            return std::fabs(diff_at(idx)) <= tol;
        }, opts.mode);
        report.add("StrictIneq-equality", eq.count == 0 ? CheckStatus::Pass : CheckStatus::Degenerate,
                   static_cast<double>(eq.count),
                   eq.count == 0 ? std::nullopt : std::make_optional(witness_at(eq.first)));
    }

    return report;
}

AxiomReport check_strict_convexity(const PcmSpace& space, const ConvexStructure& cs,
                                   const std::vector<double>& points,
                                   const std::vector<double>& mus,
                                   const std::vector<Vector>& t_samples, int z_grid_size,
                                   const ConvexitySweepOptions& opts) {
    if (points.empty() || mus.empty() || t_samples.empty())
        throw InputError("strict convexity sweep needs points, mus, and t samples");
    if (z_grid_size < 2) throw InputError("z grid needs at least 2 points");
    require_interior_mu(mus);
    std::vector<double> ts = scalarized(space, t_samples);

    const Kernel& kernel = space.kernel();
    const std::size_t np = points.size(), nm = mus.size(), nt = ts.size();
    const double tol = opts.tol;

    AxiomReport report{"convexity-strict", {}};

    // Distance-splitting equalities at z = S(x,y,mu).
    {
        const std::array<std::size_t, 4> ext{np, np, nm, nt};
        SweepResult r = sweep_min(np * np * nm * nt, [&](std::size_t idx) {
            auto c = decode_index(idx, ext);
            double x = points[c[0]], y = points[c[1]], mu = mus[c[2]], t = ts[c[3]];
            double z = cs.s_point(x, y, mu);
            double d1 = std::fabs(kernel.eval(z, x, t) - kernel.eval(x, y, t / (1.0 - mu)));
            double d2 = std::fabs(kernel.eval(z, y, t) - kernel.eval(x, y, t / mu));
            return -std::max(d1, d2);
        }, opts.mode);
        bool ok = r.min_slack >= -tol;
        std::optional<Witness> wit;
        if (!ok) {
            auto c = decode_index(r.argmin, ext);
            Witness w{points[c[0]], points[c[1]], mus[c[2]]};
            const auto& tc = t_samples[c[3]].components();
            w.insert(w.end(), tc.begin(), tc.end());
            wit = std::move(w);
        }
        report.add("StrictConvexity-splitting", ok ? CheckStatus::Pass : CheckStatus::Fail, r.min_slack,
                   std::move(wit));
    }

    // Uniqueness: sweep candidate z' over the carrier and keep those that
    // satisfy both equalities at every t.
    {
        RealInterval bounds = space.carrier().bounds();
        const double cell = bounds.width() / (z_grid_size - 1);
        CheckStatus status = CheckStatus::Pass;
        double worst_span = 0.0;
        std::optional<Witness> witness;

        for (std::size_t pi = 0; pi < np * np * nm && status != CheckStatus::Fail; ++pi) {
            std::size_t rest = pi;
            double x = points[rest % np]; rest /= np;
            double y = points[rest % np]; rest /= np;
            double mu = mus[rest];
            if (x == y) continue;  // z = x trivially; grids cannot discriminate
            double s = cs.s_point(x, y, mu);

            double lo_survivor = kInf, hi_survivor = -kInf;
            std::size_t survivors = 0;
            for (int zi = 0; zi < z_grid_size; ++zi) {
                double z = bounds.lo + cell * zi;
                bool all = true;
                for (std::size_t ti = 0; ti < nt && all; ++ti) {
                    double d1 = std::fabs(kernel.eval(z, x, ts[ti]) -
                                          kernel.eval(x, y, ts[ti] / (1.0 - mu)));
                    double d2 = std::fabs(kernel.eval(z, y, ts[ti]) -
                                          kernel.eval(x, y, ts[ti] / mu));
                    all = d1 <= tol && d2 <= tol;
                }
                if (all) {
                    ++survivors;
                    lo_survivor = std::min(lo_survivor, z);
                    hi_survivor = std::max(hi_survivor, z);
                }
            }
            if (survivors == 0) continue;  // S itself off-grid; nothing to flag
            bool within_cell = lo_survivor >= s - 0.5 * cell - 1e-15 &&
                               hi_survivor <= s + 0.5 * cell + 1e-15;
            if (within_cell) continue;
            bool contiguous =
                survivors == static_cast<std::size_t>(
                                 std::llround((hi_survivor - lo_survivor) / cell)) + 1 &&
                s >= lo_survivor - 0.5 * cell && s <= hi_survivor + 0.5 * cell;
            if (contiguous) {
                // Grid cannot discriminate between neighbors of S; report the
                // widest ambiguous block but do not fail.
                if (status == CheckStatus::Pass || hi_survivor - lo_survivor > worst_span) {
                    status = CheckStatus::Degenerate;
                    worst_span = hi_survivor - lo_survivor;
                    witness = Witness{x, y, mu, lo_survivor, hi_survivor};
                }
            } else {
                status = CheckStatus::Fail;
                double bad = lo_survivor < s - 0.5 * cell ? lo_survivor : hi_survivor;
                witness = Witness{x, y, mu, bad};
            }
        }
        report.add("StrictConvexity-uniqueness", status,
                   status == CheckStatus::Fail ? -1.0 : worst_span, std::move(witness));
    }

    return report;
}

bool IntervalUnion::contains(double x, double tol) const {
    return std::any_of(parts.begin(), parts.end(),
                       [&](const RealInterval& p) { return p.contains(x, tol); });
}

bool is_convex_set(const ConvexStructure& cs, const IntervalUnion& A,
                   const std::vector<double>& xs, const std::vector<double>& mus) {
    if (xs.empty() || mus.empty()) throw InputError("convex set check needs samples and mus");
    for (double x : xs)
        if (!A.contains(x)) throw InputError("sample point outside the candidate set");
    for (double x : xs)
        for (double y : xs)
            for (double mu : mus)
                if (!A.contains(cs.s_point(x, y, mu))) return false;
    return true;
}

RealInterval closed_convex_shell(const ConvexStructure& cs, const std::vector<double>& Y) {
    if (!cs.is_affine())
        throw UnsupportedError("closed convex shell is only defined for the affine structure");
    if (Y.empty()) throw InputError("shell needs a nonempty set");
    auto [lo, hi] = std::minmax_element(Y.begin(), Y.end());
    return {*lo, *hi};
}

AxiomReport closed_ball_convexity_check(const PcmSpace& space, const ConvexStructure& cs,
                                        double center, const Vector& eps, double lambda,
                                        const std::vector<double>& probes,
                                        const std::vector<double>& mus,
                                        const ConvexitySweepOptions& opts) {
    Neighborhood ball{center, eps, lambda, true};
    std::vector<double> members;
    for (double q : probes)
        if (member(space, ball, q)) members.push_back(q);

    AxiomReport report{"ball-convexity", {}};
    const std::size_t n = members.size(), nm = mus.size();
    if (n == 0 || nm == 0) {
        report.add("Ball-convex", CheckStatus::Degenerate, 0.0);
        return report;
    }
    double eps_scalar = space.scalarize(eps);
    const Kernel& kernel = space.kernel();
    const std::array<std::size_t, 3> ext{n, n, nm};
    SweepResult r = sweep_min(n * n * nm, [&](std::size_t idx) {
        auto c = decode_index(idx, ext);
        double s = cs.s_point(members[c[0]], members[c[1]], mus[c[2]]);
        return kernel.eval(center, s, eps_scalar) - (1.0 - lambda);
    }, opts.mode);
    bool ok = r.min_slack >= 0.0;
    std::optional<Witness> wit;
    if (!ok) {
        auto c = decode_index(r.argmin, ext);
        wit = Witness{members[c[0]], members[c[1]], mus[c[2]]};
    }
    report.add("Ball-convex", ok ? CheckStatus::Pass : CheckStatus::Fail, r.min_slack,
               std::move(wit));
    return report;
}

}  // namespace pcms
