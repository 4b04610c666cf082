#pragma once

// The (eps, lambda)-neighborhood topology: membership, separation
// witnesses, convergence verdicts on finite prefixes, probabilistic
// diameters, and boundedness searches.

#include <optional>
#include <utility>
#include <vector>

#include "pcms/space.hpp"

namespace pcms {

struct Neighborhood {
    double center = 0.0;
    Vector eps;            // must lie in Int P
    double lambda = 0.5;   // in (0,1)
    bool closed = false;   // closed: F >= 1-lambda; open: F > 1-lambda
};

bool member(const PcmSpace& space, const Neighborhood& nbhd, double q);

// Every probe inside N_p(eps1, lam1) must land inside N_p(eps2, lam2);
// requires eps1 <= eps2 in the cone order and lam1 <= lam2.
bool neighborhood_monotone_check(const PcmSpace& space, double p,
                                 const Vector& eps1, double lam1,
                                 const Vector& eps2, double lam2,
                                 const std::vector<double>& probes);

// Separating balls for a distinct pair, built the way the Hausdorff
// argument does: lambda = F_{p,q}(t0), lambda0 strictly above it, lambda1
// with lambda1 * lambda1 >= lambda0. The two open balls N_.(t0/2, 1-lambda1)
// are then disjoint; this is re-verified over the sampled carrier.
struct HausdorffWitness {
    Vector eps;       // = t0
    double lambda;    // F_{p,q}(t0)
    double lambda0;
    double lambda1;
    Neighborhood ball_p;
    Neighborhood ball_q;
};

HausdorffWitness hausdorff_witness(const PcmSpace& space, double p, double q, const Vector& t0);

enum class SequenceVerdict { Consistent, Refuted };

struct SequenceResult {
    SequenceVerdict verdict = SequenceVerdict::Consistent;
    std::optional<Witness> witness;  // offending (eps..., lambda, index data, value)
};

// Finite-prefix convergence screen. The tail starting at the prefix
// midpoint must stay inside every scheduled neighborhood of x; earlier
// entries are burn-in. Consistency is evidence, never a proof.
SequenceResult converges(const PcmSpace& space, const std::vector<double>& prefix, double x,
                         const std::vector<Vector>& eps_schedule,
                         const std::vector<double>& lam_schedule);

// Same screen with pairwise tails.
SequenceResult is_cauchy(const PcmSpace& space, const std::vector<double>& prefix,
                         const std::vector<Vector>& eps_schedule,
                         const std::vector<double>& lam_schedule);

// delta_A(t) = inf over pairs of sup_{s<t} F_{x,y}(s). The left-open sup is
// taken over an s-grid ending at t*(1-1e-9).
double prob_diameter(const PcmSpace& space, const std::vector<double>& A, const Vector& t,
                     int s_resolution = 8, ExecMode mode = ExecMode::Parallel);

struct DiameterProfile {
    std::vector<double> set;
    std::vector<std::pair<double, double>> values;  // (scalarized t, delta_A(t)), t ascending
    double overall = 0.0;                           // max over the grid
};

DiameterProfile diameter_profile(const PcmSpace& space, const std::vector<double>& A,
                                 const std::vector<Vector>& t_grid, int s_resolution = 8,
                                 ExecMode mode = ExecMode::Parallel);

struct FcBound {
    Vector eps;
    double lambda = 0.5;
};

// First (eps, lambda) on the search grids with F_{x,y}(eps) > 1 - lambda for
// every pair; lambda-major order, none when the grids are exhausted.
std::optional<FcBound> is_fc_bounded(const PcmSpace& space, const std::vector<double>& A,
                                     const std::vector<double>& eps_scalars = {},
                                     const std::vector<double>& lambdas = {});

struct NondiametralPoint {
    double x = 0.0;
    Vector t0;
    double margin = 0.0;  // inf_y sup_{s<t0} F_{x,y}(s) - delta_A(t0)
};

std::optional<NondiametralPoint> find_nondiametral(const PcmSpace& space,
                                                   const std::vector<double>& A,
                                                   const std::vector<Vector>& t_grid,
                                                   double tol = 1e-9, int s_resolution = 8);

// Greedy cover of A by open (eps, lambda)-balls; returns the chosen centers.
std::vector<double> totally_bounded_cover(const PcmSpace& space, const std::vector<double>& A,
                                          const Vector& eps, double lambda);

// Local-basis inclusion N_x(eps/n, 1/n) within N_x(eps, lambda), n picked so
// that 1/n < lambda, checked over the probes.
bool first_countable_basis_check(const PcmSpace& space, double x, const Vector& eps,
                                 double lambda, const std::vector<double>& probes);

}  // namespace pcms
