#include "pcms/topology.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pcms/errors.hpp"
#include "pcms/tnorm.hpp"

namespace pcms {
namespace {

void require_lambda(double lambda) {
    if (!(lambda > 0.0 && lambda < 1.0))
        throw DomainError("lambda must lie in (0,1)");
}

// Left-open sup over the s-grid below t_scalar.
double left_sup(const Kernel& kernel, double x, double y, double t_scalar, int resolution) {
    double best = 0.0;
    for (int i = 1; i <= resolution; ++i) {
        double s = t_scalar * (static_cast<double>(i) / resolution) * (1.0 - 1e-9);
        best = std::max(best, kernel.eval(x, y, s));
    }
    return best;
}

}  // namespace

bool member(const PcmSpace& space, const Neighborhood& nbhd, double q) {
    require_lambda(nbhd.lambda);
    double v = space.eval_kernel(nbhd.center, q, nbhd.eps);
    return nbhd.closed ? v >= 1.0 - nbhd.lambda : v > 1.0 - nbhd.lambda;
}

bool neighborhood_monotone_check(const PcmSpace& space, double p,
                                 const Vector& eps1, double lam1,
                                 const Vector& eps2, double lam2,
                                 const std::vector<double>& probes) {
    require_lambda(lam1);
    require_lambda(lam2);
    if (!space.cone().leq(eps1, eps2) || lam1 > lam2)
        throw PreconditionError("monotone check requires eps1 <= eps2 and lam1 <= lam2");
    Neighborhood small{p, eps1, lam1, false};
    Neighborhood large{p, eps2, lam2, false};
    for (double q : probes)
        if (member(space, small, q) && !member(space, large, q)) return false;
    return true;
}

HausdorffWitness hausdorff_witness(const PcmSpace& space, double p, double q, const Vector& t0) {
    if (p == q) throw PreconditionError("hausdorff witness requires distinct points");
    double lambda = space.eval_kernel(p, q, t0);
    if (lambda >= 1.0)
        throw WitnessNotFoundError("kernel does not separate the pair at t0");
    double lambda0 = lambda + (1.0 - lambda) / 5.0;
    double lambda1 = find_idempotent_bound(space.tnorm(), lambda0);
    Vector half = t0.scaled(0.5);
    HausdorffWitness w{t0, lambda, lambda0, lambda1,
                       Neighborhood{p, half, 1.0 - lambda1, false},
                       Neighborhood{q, half, 1.0 - lambda1, false}};
    for (double r : space.sample_points())
        if (member(space, w.ball_p, r) && member(space, w.ball_q, r))
            throw WitnessNotFoundError("constructed balls overlap on the sampled carrier");
    return w;
}

namespace {

SequenceResult tail_screen(const PcmSpace& space, const std::vector<double>& prefix,
                           const std::vector<Vector>& eps_schedule,
                           const std::vector<double>& lam_schedule, bool pairwise,
                           double limit_point) {
    if (prefix.empty()) throw InputError("sequence prefix must be nonempty");
    if (eps_schedule.empty() || lam_schedule.empty())
        throw InputError("schedules must be nonempty");
    for (double lam : lam_schedule) require_lambda(lam);

    const std::size_t n0 = prefix.size() / 2;
    for (const Vector& eps : eps_schedule) {
        double eps_scalar = space.scalarize(eps);
        for (double lam : lam_schedule) {
            for (std::size_t n = n0; n < prefix.size(); ++n) {
                if (!pairwise) {
                    double v = space.kernel().eval(prefix[n], limit_point, eps_scalar);
                    if (!(v > 1.0 - lam)) {
                        Witness w(eps.components());
                        w.insert(w.end(), {lam, static_cast<double>(n), prefix[n], v});
                        return {SequenceVerdict::Refuted, std::move(w)};
                    }
                    continue;
                }
                for (std::size_t m = n; m < prefix.size(); ++m) {
                    double v = space.kernel().eval(prefix[n], prefix[m], eps_scalar);
                    if (!(v > 1.0 - lam)) {
                        Witness w(eps.components());
                        w.insert(w.end(), {lam, static_cast<double>(n),
                                           static_cast<double>(m), prefix[n], prefix[m], v});
                        return {SequenceVerdict::Refuted, std::move(w)};
                    }
                }
            }
        }
    }
    return {SequenceVerdict::Consistent, std::nullopt};
}

}  // namespace

SequenceResult converges(const PcmSpace& space, const std::vector<double>& prefix, double x,
                         const std::vector<Vector>& eps_schedule,
                         const std::vector<double>& lam_schedule) {
    return tail_screen(space, prefix, eps_schedule, lam_schedule, false, x);
}

SequenceResult is_cauchy(const PcmSpace& space, const std::vector<double>& prefix,
                         const std::vector<Vector>& eps_schedule,
                         const std::vector<double>& lam_schedule) {
    return tail_screen(space, prefix, eps_schedule, lam_schedule, true, 0.0);
}

double prob_diameter(const PcmSpace& space, const std::vector<double>& A, const Vector& t,
                     int s_resolution, ExecMode mode) {
    if (A.empty()) throw InputError("probabilistic diameter needs a nonempty set");
    if (s_resolution < 1) throw InputError("s-grid resolution must be positive");
    double ts = space.scalarize(t);
    const std::size_t n = A.size();
    const Kernel& kernel = space.kernel();
    SweepResult r = sweep_min(n * n, [&](std::size_t idx) {
        return left_sup(kernel, A[idx % n], A[idx / n], ts, s_resolution);
    }, mode);
    return r.min_slack;
}

DiameterProfile diameter_profile(const PcmSpace& space, const std::vector<double>& A,
                                 const std::vector<Vector>& t_grid, int s_resolution,
                                 ExecMode mode) {
    if (t_grid.empty()) throw InputError("diameter profile needs a t grid");
    DiameterProfile profile;
    profile.set = A;
    for (const Vector& t : t_grid)
        profile.values.emplace_back(space.scalarize(t),
                                    prob_diameter(space, A, t, s_resolution, mode));
    std::sort(profile.values.begin(), profile.values.end());
    profile.overall = 0.0;
    for (const auto& [ts, v] : profile.values) profile.overall = std::max(profile.overall, v);
    return profile;
}

std::optional<FcBound> is_fc_bounded(const PcmSpace& space, const std::vector<double>& A,
                                     const std::vector<double>& eps_scalars,
                                     const std::vector<double>& lambdas) {
    if (A.empty()) throw InputError("FC-boundedness needs a nonempty set");
    std::vector<double> eps_grid = eps_scalars;
    if (eps_grid.empty())
        for (int i = 1; i <= 10; ++i) eps_grid.push_back(static_cast<double>(i));
    std::vector<double> lam_grid = lambdas;
    if (lam_grid.empty()) lam_grid = {0.1, 0.2, 0.3, 0.4, 0.5};

    const Kernel& kernel = space.kernel();
    const int dim = space.cone().dim();
    for (double lam : lam_grid) {
        require_lambda(lam);
        for (double es : eps_grid) {
            Vector eps = Vector::uniform(dim, es);
            double scalar = space.scalarize(eps);
            bool all = true;
            for (std::size_t i = 0; i < A.size() && all; ++i)
                for (std::size_t j = i; j < A.size() && all; ++j)
                    all = kernel.eval(A[i], A[j], scalar) > 1.0 - lam;
            if (all) return FcBound{eps, lam};
        }
    }
    return std::nullopt;
}

std::optional<NondiametralPoint> find_nondiametral(const PcmSpace& space,
                                                   const std::vector<double>& A,
                                                   const std::vector<Vector>& t_grid,
                                                   double tol, int s_resolution) {
    if (A.size() < 2) throw PreconditionError("non-diametral search needs at least 2 points");
    if (t_grid.empty()) throw InputError("non-diametral search needs a t grid");
    const Kernel& kernel = space.kernel();
    const std::size_t n = A.size();

    std::optional<NondiametralPoint> best;
    for (const Vector& t0 : t_grid) {
        double ts = space.scalarize(t0);
        std::vector<double> profile(n, std::numeric_limits<double>::infinity());
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                profile[i] = std::min(profile[i], left_sup(kernel, A[i], A[j], ts, s_resolution));
        double delta = *std::min_element(profile.begin(), profile.end());
        for (std::size_t i = 0; i < n; ++i) {
            double margin = profile[i] - delta;
            if (margin <= tol) continue;
            if (!best || margin > best->margin ||
                (margin == best->margin && A[i] < best->x))
                best = NondiametralPoint{A[i], t0, margin};
        }
    }
    return best;
}

std::vector<double> totally_bounded_cover(const PcmSpace& space, const std::vector<double>& A,
                                          const Vector& eps, double lambda) {
    if (A.empty()) throw InputError("cover needs a nonempty set");
    require_lambda(lambda);
    std::vector<double> centers;
    std::vector<bool> covered(A.size(), false);
    for (std::size_t i = 0; i < A.size(); ++i) {
        if (covered[i]) continue;
        double c = A[i];
        centers.push_back(c);
        Neighborhood ball{c, eps, lambda, false};
        for (std::size_t j = i; j < A.size(); ++j)
            if (!covered[j] && member(space, ball, A[j])) covered[j] = true;
    }
    return centers;
}

bool first_countable_basis_check(const PcmSpace& space, double x, const Vector& eps,
                                 double lambda, const std::vector<double>& probes) {
    require_lambda(lambda);
    int n = std::max(2, static_cast<int>(std::floor(1.0 / lambda)) + 1);
    Neighborhood small{x, eps.scaled(1.0 / n), 1.0 / n, false};
    Neighborhood large{x, eps, lambda, false};
    for (double q : probes)
        if (member(space, small, q) && !member(space, large, q)) return false;
    return true;
}

}  // namespace pcms
