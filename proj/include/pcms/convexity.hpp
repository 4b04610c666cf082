#pragma once

// Convex structures S(x, y, mu) on a carrier, the probabilistic convexity
// inequalities, convex sets, and closed convex shells.

#include <vector>

#include "pcms/space.hpp"

namespace pcms {

enum class StructureKind { Affine, Tabulated };

class ConvexStructure {
public:
    // S(x, y, mu) = mu x + (1 - mu) y with exact endpoint laws.
    static ConvexStructure affine();
    // Entries are (x, y, mu, value); lookups require an exact grid hit.
    // Endpoint entries must already satisfy S(x,y,0)=y and S(x,y,1)=x.
    struct TableEntry {
        double x, y, mu, value;
    };
    static ConvexStructure tabulated(std::vector<TableEntry> table);

    StructureKind kind() const { return kind_; }
    bool is_affine() const { return kind_ == StructureKind::Affine; }
    double s_point(double x, double y, double mu) const;

private:
    explicit ConvexStructure(StructureKind k) : kind_(k) {}
    StructureKind kind_;
    std::vector<TableEntry> table_;
};

struct ConvexitySweepOptions {
    double tol = 1e-12;
    ExecMode mode = ExecMode::Parallel;
};

// F_{S(x,y,mu),z}(2e) >= F_{x,z}(e/mu) * F_{y,z}(e/(1-mu)) over the grids.
AxiomReport check_convexity_inequality(const PcmSpace& space, const ConvexStructure& cs,
                     const std::vector<double>& points, const std::vector<double>& mus,
                     const std::vector<Vector>& epsilons,
                     const ConvexitySweepOptions& opts = {});

// Strict inequality F_{S(x,y,mu),z}(e) > min{F_{x,z}(e), F_{z,y}(e)}.
// Tuples where both sides coincide (within tol) are reported as degenerate
// rather than failed; only an outright reversal fails the check.
AxiomReport check_strict_comparison(const PcmSpace& space, const ConvexStructure& cs,
                     const std::vector<double>& points, const std::vector<double>& mus,
                     const std::vector<Vector>& epsilons,
                     const ConvexitySweepOptions& opts = {});

// Distance-splitting equalities for z = S(x,y,mu):
//   F_{z,x}(t) = F_{x,y}(t/(1-mu))   and   F_{z,y}(t) = F_{x,y}(t/mu),
// plus a z-grid uniqueness sweep: no other grid point may satisfy both
// equalities at every t. Grids too coarse to discriminate report degenerate.
AxiomReport check_strict_convexity(const PcmSpace& space, const ConvexStructure& cs,
                                   const std::vector<double>& points,
                                   const std::vector<double>& mus,
                                   const std::vector<Vector>& t_samples, int z_grid_size = 101,
                                   const ConvexitySweepOptions& opts = {});

struct IntervalUnion {
    std::vector<RealInterval> parts;
    bool contains(double x, double tol = 1e-12) const;
};

// All sampled S(x, y, mu) stay inside A.
bool is_convex_set(const ConvexStructure& cs, const IntervalUnion& A,
                   const std::vector<double>& xs, const std::vector<double>& mus);

// [min Y, max Y]; defined for the affine structure only.
RealInterval closed_convex_shell(const ConvexStructure& cs, const std::vector<double>& Y);

// Closed-ball convexity: S(a, b, mu) stays inside N_center[eps, lambda] for
// all member pairs among the probes.
AxiomReport closed_ball_convexity_check(const PcmSpace& space, const ConvexStructure& cs,
                                        double center, const Vector& eps, double lambda,
                                        const std::vector<double>& probes,
                                        const std::vector<double>& mus,
                                        const ConvexitySweepOptions& opts = {});

}  // namespace pcms
