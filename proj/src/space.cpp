#include "pcms/space.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <string>

#include "pcms/errors.hpp"

namespace pcms {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double step(double u) { return u > 0.0 ? 1.0 : 0.0; }

}  // namespace

Carrier Carrier::interval(double lo, double hi, int samples) {
    if (!(lo < hi)) throw InputError("interval carrier requires lo < hi");
    if (samples < 2) throw InputError("interval carrier requires at least 2 samples");
    Carrier c;
    c.kind_ = Kind::Interval;
    c.lo_ = lo;
    c.hi_ = hi;
    c.samples_ = samples;
    return c;
}

Carrier Carrier::points(std::vector<double> pts) {
    if (pts.empty()) throw InputError("point carrier requires at least one point");
    for (double p : pts)
        if (!std::isfinite(p)) throw InputError("carrier points must be finite");
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    Carrier c;
    c.kind_ = Kind::Points;
    c.pts_ = std::move(pts);
    c.lo_ = c.pts_.front();
    c.hi_ = c.pts_.back();
    return c;
}

Carrier Carrier::naturals(long max) {
    if (max < 1) throw InputError("naturals carrier requires max >= 1");
    Carrier c;
    c.kind_ = Kind::Naturals;
    c.max_natural_ = max;
    c.lo_ = 1.0;
    c.hi_ = static_cast<double>(max);
    return c;
}

bool Carrier::contains(double p) const {
    switch (kind_) {
        case Kind::Interval:
            return p >= lo_ - 1e-12 && p <= hi_ + 1e-12;
        case Kind::Points:
            return std::any_of(pts_.begin(), pts_.end(),
                               [p](double q) { return std::fabs(p - q) <= 1e-12; });
        case Kind::Naturals: {
            double r = std::round(p);
            return std::fabs(p - r) <= 1e-9 && r >= 1.0 && r <= static_cast<double>(max_natural_);
        }
    }
    return false;
}

std::vector<double> Carrier::sample_points() const {
    switch (kind_) {
        case Kind::Interval: {
            std::vector<double> out(static_cast<std::size_t>(samples_));
            for (int i = 0; i < samples_; ++i)
                out[static_cast<std::size_t>(i)] =
                    lo_ + (hi_ - lo_) * static_cast<double>(i) / static_cast<double>(samples_ - 1);
            out.back() = hi_;
            return out;
        }
        case Kind::Points:
            return pts_;
        case Kind::Naturals: {
            std::vector<double> out(static_cast<std::size_t>(max_natural_));
            for (long i = 1; i <= max_natural_; ++i)
                out[static_cast<std::size_t>(i - 1)] = static_cast<double>(i);
            return out;
        }
    }
    return {};
}

RealInterval Carrier::bounds() const { return {lo_, hi_}; }

int Carrier::sample_count() const {
    switch (kind_) {
        case Kind::Interval: return samples_;
        case Kind::Points: return static_cast<int>(pts_.size());
        case Kind::Naturals: return static_cast<int>(max_natural_);
    }
    return 0;
}

double ConeMetric::operator()(double x, double y) const {
    double d = std::fabs(x - y);
    return kind == MetricKind::AbsDiff ? d : d * d;
}

AxiomReport check_cone_metric_axioms(const ConeMetric& d, const std::vector<double>& points,
                                     double tol, ExecMode mode) {
    if (points.empty()) throw InputError("cone metric check needs at least one point");
    AxiomReport report{"cone-metric-axioms", {}};
    const std::size_t n = points.size();
    const std::array<std::size_t, 2> ext2{n, n};
    const std::array<std::size_t, 3> ext3{n, n, n};

    auto pair_witness = [&](std::size_t idx) {
        auto c = decode_index(idx, ext2);
        return Witness{points[c[0]], points[c[1]]};
    };
    auto add_entry = [&](const char* id, const SweepResult& r, double threshold,
                         auto&& witness_at) {
        bool ok = r.min_slack >= threshold;
        report.add(id, ok ? CheckStatus::Pass : CheckStatus::Fail, r.min_slack,
                   ok ? std::nullopt : std::make_optional(witness_at(r.argmin)));
    };

    {
        SweepResult r = sweep_min(n * n, [&](std::size_t idx) {
            auto c = decode_index(idx, ext2);
            return d(points[c[0]], points[c[1]]);
        }, mode);
        add_entry("CM1", r, 0.0, pair_witness);
    }

    {
        SweepResult r = sweep_min(n * n, [&](std::size_t idx) {
            auto c = decode_index(idx, ext2);
            double x = points[c[0]], y = points[c[1]];
            if (x == y) return d(x, y) == 0.0 ? 0.0 : -d(x, y);
            return d(x, y) > tol ? 0.0 : -1.0;
        }, mode);
        add_entry("CM2", r, 0.0, pair_witness);
    }

    {
        SweepResult r = sweep_min(n * n, [&](std::size_t idx) {
            auto c = decode_index(idx, ext2);
            return -std::fabs(d(points[c[0]], points[c[1]]) - d(points[c[1]], points[c[0]]));
        }, mode);
        add_entry("CM3", r, 0.0, pair_witness);
    }

    {
        SweepResult r = sweep_min(n * n * n, [&](std::size_t idx) {
            auto c = decode_index(idx, ext3);
            double x = points[c[0]], z = points[c[1]], y = points[c[2]];
            return d(x, z) + d(z, y) - d(x, y);
        }, mode);
        add_entry("CM4", r, -tol, [&](std::size_t idx) {
            auto c = decode_index(idx, ext3);
            return Witness{points[c[0]], points[c[1]], points[c[2]]};
        });
    }

    return report;
}

Kernel Kernel::heaviside() { return Kernel(KernelFamily::Heaviside, Scalarizer::FirstComponent); }
Kernel Kernel::exp_ratio() { return Kernel(KernelFamily::ExpRatio, Scalarizer::Norm); }
Kernel Kernel::fraction() { return Kernel(KernelFamily::Fraction, Scalarizer::FirstComponent); }
Kernel Kernel::rational_pair() {
    return Kernel(KernelFamily::RationalPair, Scalarizer::FirstComponent);
}
Kernel Kernel::from_cone_metric(ConeMetric d) {
    Kernel k(KernelFamily::FromConeMetric, Scalarizer::FirstComponent);
    k.metric_ = d;
    return k;
}

Kernel Kernel::with_scalarizer(Scalarizer s) const {
    Kernel k = *this;
    k.scalarizer_ = s;
    return k;
}

double Kernel::eval(double p, double q, double t_scalar) const {
    switch (family_) {
        case KernelFamily::Heaviside:
            return step(t_scalar - std::fabs(p - q));
        case KernelFamily::ExpRatio:
            return std::exp(-std::fabs(p - q) / t_scalar);
        case KernelFamily::Fraction:
            return t_scalar / (t_scalar + std::fabs(p - q));
        case KernelFamily::RationalPair: {
            if (p == q) return 1.0;
            return std::min(p, q) / std::max(p, q);
        }
        case KernelFamily::FromConeMetric:
            return step(t_scalar - metric_(p, q));
    }
    return 0.0;
}

PcmSpace::PcmSpace(Carrier carrier, ConeSpec cone, TNorm tnorm, Kernel kernel)
    : carrier_(std::move(carrier)),
      cone_(std::move(cone)),
      tnorm_(std::move(tnorm)),
      kernel_(std::move(kernel)) {
    if (kernel_.family() == KernelFamily::RationalPair &&
        carrier_.kind() != Carrier::Kind::Naturals)
        throw InputError("rational-pair kernel requires a naturals carrier");
}

double PcmSpace::scalarize(const Vector& t) const {
    if (!cone_.in_interior(t))
        throw DomainError("t must lie in the cone interior");
    return kernel_.scalarizer() == Scalarizer::Norm ? cone_.norm(t) : t[0];
}

double PcmSpace::eval_kernel(double p, double q, const Vector& t) const {
    if (!carrier_.contains(p) || !carrier_.contains(q))
        throw InputError("point outside the carrier");
    return kernel_.eval(p, q, scalarize(t));
}

AxiomReport check_pcm_axioms(const PcmSpace& space, const std::vector<double>& points,
                             const std::vector<Vector>& t_samples, const PcmCheckOptions& opts) {
    if (points.empty() || t_samples.empty())
        throw InputError("axiom check needs points and t samples");
    if (opts.tol < 0.0) throw InputError("tolerance must be nonnegative");
    {
        std::set<double> distinct(points.begin(), points.end());
        if (distinct.size() < 2) throw InputError("axiom check needs at least 2 distinct points");
    }
    for (double p : points)
        if (!space.carrier().contains(p)) throw InputError("sample point outside the carrier");

    const std::size_t np = points.size();
    const std::size_t nt = t_samples.size();
    const Kernel& kernel = space.kernel();
    const TNorm& tnorm = space.tnorm();
    const double tol = opts.tol;

    // Scalarize every t and every pairwise sum once (validates interiority).
    std::vector<double> ts(nt);
    for (std::size_t i = 0; i < nt; ++i) ts[i] = space.scalarize(t_samples[i]);
    std::vector<double> tsum(nt * nt);
    for (std::size_t i = 0; i < nt; ++i)
        for (std::size_t j = 0; j < nt; ++j)
            tsum[i * nt + j] = space.scalarize(t_samples[i] + t_samples[j]);

    AxiomReport report{"pcm-axioms", {}};

    const std::array<std::size_t, 3> ext_pqt{np, np, nt};
    const std::array<std::size_t, 5> ext_pqrts{np, np, np, nt, nt};
    auto pqt_witness = [&](std::size_t idx) {
        auto c = decode_index(idx, ext_pqt);
        Witness w{points[c[0]], points[c[1]]};
        const auto& tc = t_samples[c[2]].components();
        w.insert(w.end(), tc.begin(), tc.end());
        return w;
    };
    auto pqrts_witness = [&](std::size_t idx) {
        auto c = decode_index(idx, ext_pqrts);
        Witness w{points[c[0]], points[c[1]], points[c[2]]};
        const auto& tc = t_samples[c[3]].components();
        const auto& sc = t_samples[c[4]].components();
        w.insert(w.end(), tc.begin(), tc.end());
        w.insert(w.end(), sc.begin(), sc.end());
        return w;
    };

    // PCM1: strictly positive values.
    {
        SweepResult r = sweep_min(np * np * nt, [&](std::size_t idx) {
            auto c = decode_index(idx, ext_pqt);
            return kernel.eval(points[c[0]], points[c[1]], ts[c[2]]);
        }, opts.mode);
        bool ok = r.min_slack > 0.0;
        report.add("PCM1", ok ? CheckStatus::Pass : CheckStatus::Fail, r.min_slack,
                   ok ? std::nullopt : std::make_optional(pqt_witness(r.argmin)));
    }

    // PCM2 forward: identical points evaluate to exactly 1.
    // PCM2 reverse: distinct points within tol of 1 are near-violations.
    {
        const std::array<std::size_t, 2> ext_pt{np, nt};
        SweepResult fwd = sweep_min(np * nt, [&](std::size_t idx) {
            auto c = decode_index(idx, ext_pt);
            return -std::fabs(kernel.eval(points[c[0]], points[c[0]], ts[c[1]]) - 1.0);
        }, opts.mode);
        CountResult near = sweep_count(np * np * nt, [&](std::size_t idx) {
            auto c = decode_index(idx, ext_pqt);
            double p = points[c[0]], q = points[c[1]];
            return p != q && kernel.eval(p, q, ts[c[2]]) >= 1.0 - tol;
        }, opts.mode);
        CheckStatus st = CheckStatus::Pass;
        std::optional<Witness> wit;
        if (fwd.min_slack < 0.0) {
            st = CheckStatus::Fail;
            auto c = decode_index(fwd.argmin, ext_pt);
            Witness w{points[c[0]], points[c[0]]};
            const auto& tc = t_samples[c[1]].components();
            w.insert(w.end(), tc.begin(), tc.end());
            wit = std::move(w);
        } else if (near.count > 0) {
            st = CheckStatus::Degenerate;
            wit = pqt_witness(near.first);
        }
        report.add("PCM2", st, fwd.min_slack, std::move(wit));
    }

    // PCM3: exact symmetry.
    {
        SweepResult r = sweep_min(np * np * nt, [&](std::size_t idx) {
            auto c = decode_index(idx, ext_pqt);
            return -std::fabs(kernel.eval(points[c[0]], points[c[1]], ts[c[2]]) -
                              kernel.eval(points[c[1]], points[c[0]], ts[c[2]]));
        }, opts.mode);
        bool ok = r.min_slack >= 0.0;
        report.add("PCM3", ok ? CheckStatus::Pass : CheckStatus::Fail, r.min_slack,
                   ok ? std::nullopt : std::make_optional(pqt_witness(r.argmin)));
    }

    // PCM4: unit values chain across the triangle.
    {
        SweepResult r = sweep_min(np * np * np * nt * nt, [&](std::size_t idx) {
            auto c = decode_index(idx, ext_pqrts);
            double p = points[c[0]], q = points[c[1]], x = points[c[2]];
            if (kernel.eval(p, q, ts[c[3]]) < 1.0 - tol ||
                kernel.eval(q, x, ts[c[4]]) < 1.0 - tol)
                return kInf;
            return kernel.eval(p, x, tsum[c[3] * nt + c[4]]) - 1.0 + tol;
        }, opts.mode);
        bool vacuous = !std::isfinite(r.min_slack);
        bool ok = vacuous || r.min_slack >= 0.0;
        report.add("PCM4", ok ? CheckStatus::Pass : CheckStatus::Fail,
                   vacuous ? 0.0 : r.min_slack,
                   ok ? std::nullopt : std::make_optional(pqrts_witness(r.argmin)));
    }

    // PCM5 (Menger): F_{p,r}(t+s) >= F_{p,q}(t) * F_{q,r}(s).
    {
        SweepResult r = sweep_min(np * np * np * nt * nt, [&](std::size_t idx) {
            auto c = decode_index(idx, ext_pqrts);
            double p = points[c[0]], q = points[c[1]], x = points[c[2]];
            double lhs = kernel.eval(p, x, tsum[c[3] * nt + c[4]]);
            double rhs = tnorm.apply(kernel.eval(p, q, ts[c[3]]),
                                     kernel.eval(q, x, ts[c[4]]));
            return lhs - rhs;
        }, opts.mode);
        bool ok = r.min_slack >= -tol;
        report.add("PCM5", ok ? CheckStatus::Pass : CheckStatus::Fail, r.min_slack,
                   ok ? std::nullopt : std::make_optional(pqrts_witness(r.argmin)));
    }

    return report;
}

PcmSpace space_from_cone_metric(const ConeMetricDescriptor& d) {
    AxiomReport cm = check_cone_metric_axioms(d.metric, d.carrier.sample_points(), d.tol);
    if (!cm.all_passed())
        throw ConstructionError("cone metric axioms fail on the sampled carrier", cm);
    return PcmSpace(d.carrier, d.cone, d.tnorm, Kernel::from_cone_metric(d.metric));
}

}  // namespace pcms
