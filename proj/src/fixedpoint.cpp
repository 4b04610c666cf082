#include "pcms/fixedpoint.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace pcms {
namespace {

constexpr int kRangeGrid = 11;

double interp(const std::vector<double>& xs, const std::vector<double>& ys, double x) {
    if (x <= xs.front()) return ys.front();
    if (x >= xs.back()) return ys.back();
    auto it = std::upper_bound(xs.begin(), xs.end(), x);
    std::size_t hi = static_cast<std::size_t>(it - xs.begin());
    std::size_t lo = hi - 1;
    double w = (x - xs[lo]) / (xs[hi] - xs[lo]);
    return ys[lo] + w * (ys[hi] - ys[lo]);
}

}  // namespace

const char* to_string(SolveMethod m) {
    switch (m) {
        case SolveMethod::Exact: return "exact";
        case SolveMethod::Picard: return "picard";
        case SolveMethod::Mann: return "mann";
        case SolveMethod::Grid: return "grid";
    }
    return "unknown";
}

SelfMap SelfMap::scale_half(RealInterval domain, bool enforce_range) {
    SelfMap m(SelfMapKind::ScaleHalf, domain);
    if (enforce_range) m.check_range();
    return m;
}

SelfMap SelfMap::quad(RealInterval domain, bool enforce_range) {
    SelfMap m(SelfMapKind::Quad, domain);
    if (enforce_range) m.check_range();
    return m;
}

SelfMap SelfMap::affine(double a, double b, RealInterval domain, bool enforce_range) {
    SelfMap m(SelfMapKind::Affine, domain);
    m.a_ = a;
    m.b_ = b;
    if (enforce_range) m.check_range();
    return m;
}

SelfMap SelfMap::tabulated(std::vector<double> xs, std::vector<double> ys,
                           RealInterval domain, bool enforce_range) {
    if (xs.size() < 2 || xs.size() != ys.size())
        throw InputError("tabulated map needs matching xs/ys with at least 2 knots");
    if (!std::is_sorted(xs.begin(), xs.end(), std::less_equal<double>()))
        throw InputError("tabulated xs must be strictly increasing");
    SelfMap m(SelfMapKind::Tabulated, domain);
    m.xs_ = std::move(xs);
    m.ys_ = std::move(ys);
    if (enforce_range) m.check_range();
    return m;
}

double SelfMap::apply(double x) const {
    switch (kind_) {
        case SelfMapKind::ScaleHalf: return x / 2.0;
        case SelfMapKind::Quad: return x * x / 3.0 + 0.5;
        case SelfMapKind::Affine: return a_ * x + b_;
        case SelfMapKind::Tabulated: return interp(xs_, ys_, x);
    }
    return x;
}

void SelfMap::check_range() const {
    for (int i = 0; i < kRangeGrid; ++i) {
        double x = domain_.lo + domain_.width() * i / (kRangeGrid - 1);
        double fx = apply(x);
        if (!domain_.contains(fx)) {
            AxiomReport report{"self-map", {}};
            report.add("SelfMap-range", CheckStatus::Fail,
                       fx > domain_.hi ? domain_.hi - fx : fx - domain_.lo, Witness{x, fx});
            throw ConstructionError("self-map leaves its domain", report);
        }
    }
}

std::vector<double> SelfMap::exact_fixed_points() const {
    std::vector<double> roots;
    switch (kind_) {
        case SelfMapKind::ScaleHalf:
            roots.push_back(0.0);
            break;
        case SelfMapKind::Quad: {
            // x^2/3 - x + 1/2 = 0  <=>  x = (3 +- sqrt(3)) / 2
            double s = std::sqrt(3.0);
            roots.push_back((3.0 - s) / 2.0);
            roots.push_back((3.0 + s) / 2.0);
            break;
        }
        case SelfMapKind::Affine:
            if (a_ != 1.0) roots.push_back(b_ / (1.0 - a_));
            break;
        case SelfMapKind::Tabulated:
            break;
    }
    std::vector<double> in_domain;
    for (double r : roots)
        if (domain_.contains(r)) in_domain.push_back(r);
    std::sort(in_domain.begin(), in_domain.end());
    return in_domain;
}

AxiomReport check_nonexpansive(const PcmSpace& space, const SelfMap& f,
                               const std::vector<double>& points,
                               const std::vector<Vector>& t_samples, double tol, ExecMode mode) {
    if (points.empty() || t_samples.empty())
        throw InputError("nonexpansiveness sweep needs points and t samples");
    std::vector<double> ts;
    for (const Vector& t : t_samples) ts.push_back(space.scalarize(t));
    const Kernel& kernel = space.kernel();
    const std::size_t np = points.size(), nt = ts.size();

    AxiomReport report{"nonexpansive", {}};
    const std::array<std::size_t, 3> ext{np, np, nt};
    SweepResult r = sweep_min(np * np * nt, [&](std::size_t idx) {
        auto c = decode_index(idx, ext);
        double x = points[c[0]], y = points[c[1]];
        return kernel.eval(f.apply(x), f.apply(y), ts[c[2]]) - kernel.eval(x, y, ts[c[2]]);
    }, mode);
    bool ok = r.min_slack >= -tol;
    std::optional<Witness> wit;
    if (!ok) {
        auto c = decode_index(r.argmin, ext);
        Witness w{points[c[0]], points[c[1]]};
        const auto& tc = t_samples[c[2]].components();
        w.insert(w.end(), tc.begin(), tc.end());
        wit = std::move(w);
    }
    report.add("Nonexpansive", ok ? CheckStatus::Pass : CheckStatus::Fail, r.min_slack, std::move(wit));
    return report;
}

AxiomReport check_pair_condition(const PcmSpace& space, const SelfMap& f, const SelfMap& g,
                                 const std::vector<double>& points,
                                 const std::vector<Vector>& t_samples, double tol,
                                 ExecMode mode) {
    if (points.empty() || t_samples.empty())
        throw InputError("pair condition sweep needs points and t samples");
    std::vector<double> ts;
    for (const Vector& t : t_samples) ts.push_back(space.scalarize(t));
    const Kernel& kernel = space.kernel();
    const std::size_t np = points.size(), nt = ts.size();
    constexpr double kInf = std::numeric_limits<double>::infinity();

    AxiomReport report{"pair-condition", {}};

    // Image points stay inside the shared domain.
    {
        CountResult bad = sweep_count(np, [&](std::size_t i) {
            double x = points[i];
            return !f.domain().contains(f.apply(x)) || !g.domain().contains(g.apply(x));
        }, mode);
        std::optional<Witness> wit;
        if (bad.count > 0) {
            double x = points[bad.first];
            wit = Witness{x, f.apply(x), g.apply(x)};
        }
        report.add("Range-fg", bad.count == 0 ? CheckStatus::Pass : CheckStatus::Fail,
                   bad.count == 0 ? 0.0 : -1.0, std::move(wit));
    }

    {
        const std::array<std::size_t, 3> ext{np, np, nt};
        SweepResult r = sweep_min(np * np * nt, [&](std::size_t idx) {
            auto c = decode_index(idx, ext);
            double x = points[c[0]], y = points[c[1]];
            if (x == y) return kInf;
            return kernel.eval(f.apply(x), g.apply(y), ts[c[2]]) - kernel.eval(x, y, ts[c[2]]);
        }, mode);
        bool vacuous = !std::isfinite(r.min_slack);
        bool ok = vacuous || r.min_slack >= -tol;
        std::optional<Witness> wit;
        if (!ok) {
            auto c = decode_index(r.argmin, ext);
            Witness w{points[c[0]], points[c[1]]};
            const auto& tc = t_samples[c[2]].components();
            w.insert(w.end(), tc.begin(), tc.end());
            wit = std::move(w);
        }
        report.add("PairCondition", ok ? CheckStatus::Pass : CheckStatus::Fail,
                   vacuous ? 0.0 : r.min_slack, std::move(wit));
    }

    return report;
}

namespace {

FixedPointResult make_result(const SelfMap& f, const SelfMap& g, double x, long iters,
                             SolveMethod method) {
    return {x, std::fabs(f.apply(x) - x), std::fabs(g.apply(x) - x), iters, method};
}

bool good(const FixedPointResult& r, double tol) {
    return std::max(r.residual_f, r.residual_g) <= tol;
}

// Picard-style loop; the stepper maps the current iterate to the next one.
template <class Step>
std::pair<double, long> iterate(double x0, long max_iter, double step_tol, Step&& step) {
    double x = x0;
    long n = 0;
    while (n < max_iter) {
        double next = step(x);
        ++n;
        if (std::fabs(next - x) <= step_tol) return {next, n};
        x = next;
    }
    return {x, n};
}

}  // namespace

FixedPointResult find_common_fixed_point(const SelfMap& f, const SelfMap& g,
                                         const ConvexStructure& cs, const SolverConfig& cfg,
                                         ExecMode mode) {
    if (f.domain().lo != g.domain().lo || f.domain().hi != g.domain().hi)
        throw PreconditionError("both maps must share the same domain");
    const RealInterval E = f.domain();
    FixedPointResult best{E.mid(), std::numeric_limits<double>::infinity(),
                          std::numeric_limits<double>::infinity(), 0, SolveMethod::Grid};

    auto consider = [&](FixedPointResult r) {
        if (std::max(r.residual_f, r.residual_g) < std::max(best.residual_f, best.residual_g))
            best = r;
        return good(r, cfg.tol);
    };

    // Stage 1: closed-form roots shared by both maps.
    {
        std::vector<double> candidates = f.exact_fixed_points();
        std::vector<double> g_roots = g.exact_fixed_points();
        candidates.insert(candidates.end(), g_roots.begin(), g_roots.end());
        std::sort(candidates.begin(), candidates.end());
        for (double x : candidates)
            if (consider(make_result(f, g, x, 0, SolveMethod::Exact)))
                return best;
    }

    // Stage 2: Picard from the midpoint.
    {
        auto [x, n] = iterate(E.mid(), cfg.max_iter, cfg.tol / 10.0,
                              [&](double v) { return f.apply(v); });
        if (consider(make_result(f, g, x, n, SolveMethod::Picard))) return best;
    }

    // Stage 3: Mann averaging through the convex structure.
    {
        auto [x, n] = iterate(E.mid(), cfg.max_iter, cfg.tol / 10.0, [&](double v) {
            return cs.s_point(v, f.apply(v), cfg.mann_mu);
        });
        if (consider(make_result(f, g, x, n, SolveMethod::Mann))) return best;
    }

    // Stage 4: grid refinement; terminates on compact intervals.
    {
        double lo = E.lo, hi = E.hi;
        long evals = 0;
        for (int level = 0; level < 64; ++level) {
            const long n = std::max<long>(cfg.grid_n, 3);
            const double cell = (hi - lo) / static_cast<double>(n - 1);
            SweepResult r = sweep_min(static_cast<std::size_t>(n), [&](std::size_t i) {
                double x = lo + cell * static_cast<double>(i);
                return std::max(std::fabs(f.apply(x) - x), std::fabs(g.apply(x) - x));
            }, mode);
            evals += n;
            double x = lo + cell * static_cast<double>(r.argmin);
            if (consider(make_result(f, g, x, evals, SolveMethod::Grid))) return best;
            lo = std::max(E.lo, x - cell);
            hi = std::min(E.hi, x + cell);
            if (cell <= cfg.tol / 10.0) break;
        }
    }

    throw SolveError("no stage reached the residual tolerance", best);
}

bool verify_fixed_point(const SelfMap& f, const SelfMap& g, double x, double tol) {
    if (!f.domain().contains(x) || !g.domain().contains(x))
        throw DomainError("candidate point lies outside the map domain");
    return std::fabs(f.apply(x) - x) <= tol && std::fabs(g.apply(x) - x) <= tol;
}

double grid_fixed_point_oracle(const SelfMap& f, const SelfMap& g, long n, ExecMode mode) {
    if (n < 2) throw InputError("oracle grid needs at least 2 points");
    const RealInterval E = f.domain();
    const double cell = E.width() / static_cast<double>(n - 1);
    SweepResult r = sweep_min(static_cast<std::size_t>(n), [&](std::size_t i) {
        double x = E.lo + cell * static_cast<double>(i);
        return std::max(std::fabs(f.apply(x) - x), std::fabs(g.apply(x) - x));
    }, mode);
    return E.lo + cell * static_cast<double>(r.argmin);
}

}  // namespace pcms
