#pragma once

// Self-mapping pairs on compact real intervals: the contraction-style
// hypothesis sweeps and a staged common-fixed-point solver with an
// independent grid oracle.

#include <vector>

#include "pcms/convexity.hpp"
#include "pcms/errors.hpp"
#include "pcms/space.hpp"

namespace pcms {

enum class SelfMapKind { ScaleHalf, Quad, Affine, Tabulated };

class SelfMap {
public:
    // Factories check on an 11-point grid that the map stays inside its
    // domain and raise ConstructionError with the violating point otherwise.
    // enforce_range = false skips that check so hypothesis sweeps can probe
    // maps that are deliberately not self-maps.
    static SelfMap scale_half(RealInterval domain, bool enforce_range = true);  // x/2
    static SelfMap quad(RealInterval domain, bool enforce_range = true);        // x^2/3 + 1/2
    static SelfMap affine(double a, double b, RealInterval domain, bool enforce_range = true);
    static SelfMap identity(RealInterval domain) { return affine(1.0, 0.0, domain); }
    // Piecewise-linear interpolant of (xs, ys); xs strictly increasing.
    static SelfMap tabulated(std::vector<double> xs, std::vector<double> ys,
                             RealInterval domain, bool enforce_range = true);

    double apply(double x) const;
    const RealInterval& domain() const { return domain_; }
    SelfMapKind kind() const { return kind_; }

    // Closed-form fixed points inside the domain, ascending. Empty for
    // tabulated maps and for the everywhere-fixed identity.
    std::vector<double> exact_fixed_points() const;

private:
    SelfMap(SelfMapKind k, RealInterval domain) : kind_(k), domain_(domain) {}
    void check_range() const;  // grid check that the map stays inside the domain

    SelfMapKind kind_;
    RealInterval domain_;
    double a_ = 1.0, b_ = 0.0;
    std::vector<double> xs_, ys_;
};

struct SolverConfig {
    double tol = 1e-9;
    long max_iter = 1'000'000;
    double mann_mu = 0.5;
    long grid_n = 100'001;
};

enum class SolveMethod { Exact, Picard, Mann, Grid };

const char* to_string(SolveMethod m);

struct FixedPointResult {
    double point = 0.0;
    double residual_f = 0.0;
    double residual_g = 0.0;
    long iterations = 0;
    SolveMethod method = SolveMethod::Exact;
};

class SolveError : public Error {
public:
    SolveError(const std::string& msg, FixedPointResult best)
        : Error(msg), best_(best) {}
    const FixedPointResult& best() const { return best_; }

private:
    FixedPointResult best_;
};

// F_{fx,fy}(eps) >= F_{x,y}(eps) over the sampled tuples.
AxiomReport check_nonexpansive(const PcmSpace& space, const SelfMap& f,
                               const std::vector<double>& points,
                               const std::vector<Vector>& t_samples, double tol = 1e-12,
                               ExecMode mode = ExecMode::Parallel);

// F_{f(x),g(y)}(t) >= F_{x,y}(t) for distinct-point tuples, plus the range
// check that both images stay inside the shared domain.
AxiomReport check_pair_condition(const PcmSpace& space, const SelfMap& f, const SelfMap& g,
                                 const std::vector<double>& points,
                                 const std::vector<Vector>& t_samples, double tol = 1e-12,
                                 ExecMode mode = ExecMode::Parallel);

// Stage pipeline: closed-form roots, Picard from the midpoint, Mann through
// the convex structure, then grid refinement. First stage whose candidate
// meets the residual tolerance for both maps wins. SolveError carries the
// best candidate when every stage misses.
FixedPointResult find_common_fixed_point(const SelfMap& f, const SelfMap& g,
                                         const ConvexStructure& cs, const SolverConfig& cfg = {},
                                         ExecMode mode = ExecMode::Parallel);

// Direct residual check, independent of any iteration state.
bool verify_fixed_point(const SelfMap& f, const SelfMap& g, double x, double tol);

// Single-pass argmin of max(|f(x)-x|, |g(x)-x|) over an n-point grid; the
// independent oracle for solver results. Ties resolve to the smaller x.
double grid_fixed_point_oracle(const SelfMap& f, const SelfMap& g, long n,
                               ExecMode mode = ExecMode::Parallel);

}  // namespace pcms
