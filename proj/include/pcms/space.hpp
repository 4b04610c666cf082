#pragma once

// Probabilistic cone metric spaces: carriers, the built-in kernel families,
// and the sampled Menger axiom sweeps.

#include <optional>
#include <vector>

#include "pcms/cone.hpp"
#include "pcms/report.hpp"
#include "pcms/sweep.hpp"
#include "pcms/tnorm.hpp"

namespace pcms {

struct RealInterval {
    double lo = 0.0;
    double hi = 1.0;
    double mid() const { return 0.5 * (lo + hi); }
    double width() const { return hi - lo; }
    bool contains(double x, double tol = 1e-12) const { return x >= lo - tol && x <= hi + tol; }
};

// The point set a kernel is evaluated over.
class Carrier {
public:
    enum class Kind { Interval, Points, Naturals };

    static Carrier interval(double lo, double hi, int samples);
    static Carrier points(std::vector<double> pts);
    static Carrier naturals(long max);  // {1, 2, ..., max}

    Kind kind() const { return kind_; }
    bool contains(double p) const;
    std::vector<double> sample_points() const;
    RealInterval bounds() const;  // [lo, hi] for intervals, hull otherwise
    int sample_count() const;

private:
    Carrier() = default;
    Kind kind_ = Kind::Interval;
    double lo_ = 0.0, hi_ = 1.0;
    int samples_ = 2;
    std::vector<double> pts_;
    long max_natural_ = 1;
};

enum class MetricKind { AbsDiff, AbsDiffSquared };

struct ConeMetric {
    MetricKind kind = MetricKind::AbsDiff;
    double operator()(double x, double y) const;
};

// CM1-CM4 on all sampled pairs/triples; triangle witnesses are (x, z, y).
AxiomReport check_cone_metric_axioms(const ConeMetric& d, const std::vector<double>& points,
                                     double tol = 1e-12, ExecMode mode = ExecMode::Parallel);

enum class KernelFamily { Heaviside, ExpRatio, Fraction, RationalPair, FromConeMetric };
enum class Scalarizer { Norm, FirstComponent };

// A distance distribution family F_{p,q}(t). The argument t is reduced to a
// positive scalar before evaluation; which reduction applies is part of the
// kernel (norm for exp-ratio, first component elsewhere).
class Kernel {
public:
    static Kernel heaviside();                    // H(t - |p-q|), values in {0,1}
    static Kernel exp_ratio();                    // exp(-|p-q| / ||t||)
    static Kernel fraction();                     // t / (t + |p-q|)
    static Kernel rational_pair();                // min(p,q) / max(p,q), t-free
    static Kernel from_cone_metric(ConeMetric d); // H(t - d(p,q))

    KernelFamily family() const { return family_; }
    Scalarizer scalarizer() const { return scalarizer_; }
    Kernel with_scalarizer(Scalarizer s) const;
    const ConeMetric& metric() const { return metric_; }

    // Raw family formula at an already-scalarized t > 0.
    double eval(double p, double q, double t_scalar) const;

private:
    Kernel(KernelFamily f, Scalarizer s) : family_(f), scalarizer_(s) {}
    KernelFamily family_;
    Scalarizer scalarizer_;
    ConeMetric metric_{};
};

class PcmSpace {
public:
    PcmSpace(Carrier carrier, ConeSpec cone, TNorm tnorm, Kernel kernel);

    const Carrier& carrier() const { return carrier_; }
    const ConeSpec& cone() const { return cone_; }
    const TNorm& tnorm() const { return tnorm_; }
    const Kernel& kernel() const { return kernel_; }

    double scalarize(const Vector& t) const;  // validates t in Int P
    // Validated evaluation of F_{p,q}(t).
    double eval_kernel(double p, double q, const Vector& t) const;

    std::vector<double> sample_points() const { return carrier_.sample_points(); }

private:
    Carrier carrier_;
    ConeSpec cone_;
    TNorm tnorm_;
    Kernel kernel_;
};

struct PcmCheckOptions {
    double tol = 1e-12;
    ExecMode mode = ExecMode::Parallel;
};

// PCM1-PCM5 over the sampled points and interior t values. PCM2 is checked
// in both directions: p == q must give exactly 1 (hard), while a value
// within tol of 1 for p != q is flagged as a near-violation (degenerate,
// not a failure; step kernels saturate at coarse t).
AxiomReport check_pcm_axioms(const PcmSpace& space, const std::vector<double>& points,
                             const std::vector<Vector>& t_samples,
                             const PcmCheckOptions& opts = {});

struct ConeMetricDescriptor {
    Carrier carrier = Carrier::interval(0.0, 1.0, 11);
    ConeMetric metric{};
    ConeSpec cone{1, ConeNorm::Sup};
    TNorm tnorm = TNorm::minimum();
    double tol = 1e-12;
};

// Wraps a cone metric as the step-kernel space H(t - d). The CM sweep runs
// first; a failure raises ConstructionError carrying the failing report.
PcmSpace space_from_cone_metric(const ConeMetricDescriptor& d);

}  // namespace pcms
