#include "pcms/cone.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pcms/errors.hpp"
#include "pcms/sweep.hpp"

namespace pcms {
namespace {

void require_dim(const ConeSpec& c, const Vector& v) {
    if (v.dim() != c.dim())
        throw DimensionError("vector dimension " + std::to_string(v.dim()) +
                             " does not match cone dimension " + std::to_string(c.dim()));
}

Witness flatten(std::initializer_list<const Vector*> vecs, std::initializer_list<double> tail = {}) {
    Witness w;
    for (const Vector* v : vecs)
        w.insert(w.end(), v->components().begin(), v->components().end());
    w.insert(w.end(), tail.begin(), tail.end());
    return w;
}

}  // namespace

Vector::Vector(std::vector<double> components) : comps_(std::move(components)) {
    if (comps_.empty()) throw InputError("vector must have at least one component");
    for (double c : comps_)
        if (!std::isfinite(c)) throw InputError("vector components must be finite");
}

Vector Vector::uniform(int dim, double value) {
    if (dim < 1) throw InputError("vector dimension must be positive");
    return Vector(std::vector<double>(static_cast<std::size_t>(dim), value));
}

Vector Vector::zero(int dim) { return uniform(dim, 0.0); }

Vector Vector::operator+(const Vector& o) const {
    if (dim() != o.dim()) throw DimensionError("vector addition dimension mismatch");
    std::vector<double> out(comps_);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += o.comps_[i];
    return Vector(std::move(out));
}

Vector Vector::operator-(const Vector& o) const {
    if (dim() != o.dim()) throw DimensionError("vector subtraction dimension mismatch");
    std::vector<double> out(comps_);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= o.comps_[i];
    return Vector(std::move(out));
}

Vector Vector::scaled(double a) const {
    std::vector<double> out(comps_);
    for (double& c : out) c *= a;
    return Vector(std::move(out));
}

ConeSpec::ConeSpec(int dim, ConeNorm norm) : dim_(dim), norm_(norm) {
    if (dim < 1) throw InputError("cone dimension must be positive");
}

bool ConeSpec::contains(const Vector& v) const {
    require_dim(*this, v);
    return std::all_of(v.components().begin(), v.components().end(),
                       [](double c) { return c >= 0.0; });
}

bool ConeSpec::in_interior(const Vector& v) const {
    require_dim(*this, v);
    return std::all_of(v.components().begin(), v.components().end(),
                       [](double c) { return c > 0.0; });
}

OrderRelation ConeSpec::order(const Vector& x, const Vector& y) const {
    require_dim(*this, x);
    require_dim(*this, y);
    Vector diff = y - x;
    if (in_interior(diff)) return OrderRelation::Ll;
    if (contains(diff)) return x == y ? OrderRelation::Leq : OrderRelation::Lt;
    return OrderRelation::NotComparable;
}

bool ConeSpec::leq(const Vector& x, const Vector& y) const {
    return order(x, y) != OrderRelation::NotComparable;
}

bool ConeSpec::ll(const Vector& x, const Vector& y) const {
    return order(x, y) == OrderRelation::Ll;
}

double ConeSpec::norm(const Vector& v) const {
    require_dim(*this, v);
    if (norm_ == ConeNorm::Sup) {
        double m = 0.0;
        for (double c : v.components()) m = std::max(m, std::fabs(c));
        return m;
    }
    double s = 0.0;
    for (double c : v.components()) s += c * c;
    return std::sqrt(s);
}

AxiomReport check_cone_axioms(const ConeSpec& cone,
                              const std::vector<Vector>& samples,
                              const std::vector<double>& scalars) {
    if (samples.empty()) throw InputError("cone axiom check needs at least one sample");
    for (const Vector& v : samples) require_dim(cone, v);
    for (double a : scalars)
        if (a < 0.0) throw InputError("cone axiom scalars must be nonnegative");

    AxiomReport report{"cone-axioms", {}};

    // P1 is structural for the orthant: it contains theta and the all-ones
    // point, so it is nonempty and differs from {0}.
    bool p1 = cone.contains(cone.zero()) && cone.contains(Vector::uniform(cone.dim(), 1.0));
    report.add("P1", p1 ? CheckStatus::Pass : CheckStatus::Fail, p1 ? 0.0 : -1.0);

    const std::size_t ns = samples.size();
    const std::size_t na = scalars.size();

    // P2: a x + b y stays in P for samples claimed to lie in P.
    {
        const std::array<std::size_t, 4> ext{ns, ns, na, na};
        const std::size_t total = ns * ns * na * na;
        auto slack = [&](std::size_t idx) {
            auto c = decode_index(idx, ext);
            const Vector& x = samples[c[0]];
            const Vector& y = samples[c[1]];
            if (!cone.contains(x) || !cone.contains(y)) return 0.0;
            Vector combo = x.scaled(scalars[c[2]]) + y.scaled(scalars[c[3]]);
            double worst = 0.0;
            for (double v : combo.components()) worst = std::min(worst, v);
            return worst;
        };
        SweepResult r = sweep_min(total, slack);
        bool ok = total == 0 || r.min_slack >= 0.0;
        std::optional<Witness> wit;
        if (!ok) {
            auto c = decode_index(r.argmin, ext);
            wit = flatten({&samples[c[0]], &samples[c[1]]}, {scalars[c[2]], scalars[c[3]]});
        }
        report.add("P2", ok ? CheckStatus::Pass : CheckStatus::Fail,
                   total == 0 ? 0.0 : r.min_slack, std::move(wit));
    }

    // P3 over the claimed sample set: a nonzero member of P whose negation is
    // also claimed to lie in P breaks pointedness.
    {
        CountResult bad = sweep_count(ns, [&](std::size_t i) {
            const Vector& x = samples[i];
            if (x == cone.zero() || !cone.contains(x)) return false;
            Vector neg = x.scaled(-1.0);
            for (const Vector& y : samples)
                if (y == neg) return true;
            return false;
        });
        report.add("P3", bad.count == 0 ? CheckStatus::Pass : CheckStatus::Fail,
                   bad.count == 0 ? 0.0 : -1.0,
                   bad.count == 0 ? std::nullopt
                                  : std::make_optional(flatten({&samples[bad.first]})));
    }

    // Interior stability (a): p + q lands in Int P for p in P, q in Int P.
    {
        const std::array<std::size_t, 2> ext{ns, ns};
        CountResult bad = sweep_count(ns * ns, [&](std::size_t idx) {
            auto c = decode_index(idx, ext);
            const Vector& p = samples[c[0]];
            const Vector& q = samples[c[1]];
            return cone.contains(p) && cone.in_interior(q) && !cone.in_interior(p + q);
        });
        std::optional<Witness> wit;
        if (bad.count > 0) {
            auto c = decode_index(bad.first, ext);
            wit = flatten({&samples[c[0]], &samples[c[1]]});
        }
        report.add("IntP-additive", bad.count == 0 ? CheckStatus::Pass : CheckStatus::Fail,
                   bad.count == 0 ? 0.0 : -1.0, std::move(wit));
    }

    // Interior stability (b): alpha q stays interior for alpha > 0.
    {
        const std::array<std::size_t, 2> ext{na, ns};
        CountResult bad = sweep_count(na * ns, [&](std::size_t idx) {
            auto c = decode_index(idx, ext);
            double alpha = scalars[c[0]];
            const Vector& q = samples[c[1]];
            return alpha > 0.0 && cone.in_interior(q) && !cone.in_interior(q.scaled(alpha));
        });
        std::optional<Witness> wit;
        if (bad.count > 0) {
            auto c = decode_index(bad.first, ext);
            wit = flatten({&samples[c[1]]}, {scalars[c[0]]});
        }
        report.add("IntP-scaling", bad.count == 0 ? CheckStatus::Pass : CheckStatus::Fail,
                   bad.count == 0 ? 0.0 : -1.0, std::move(wit));
    }

    return report;
}

double normal_constant_estimate(const ConeSpec& cone,
                                const std::vector<std::pair<Vector, Vector>>& pairs) {
    if (pairs.empty()) throw InputError("normal constant estimate needs at least one pair");
    double best = 0.0;
    for (const auto& [x, y] : pairs) {
        if (!cone.leq(cone.zero(), x) || !cone.leq(x, y))
            throw PreconditionError("pair must satisfy theta <= x <= y");
        double ny = cone.norm(y);
        if (ny == 0.0) throw PreconditionError("upper element must differ from theta");
        best = std::max(best, cone.norm(x) / ny);
    }
    return best;
}

Vector common_lower_interior(const ConeSpec& cone, const Vector& c1, const Vector& c2) {
    if (!cone.in_interior(c1) || !cone.in_interior(c2))
        throw PreconditionError("both bounds must lie in the cone interior");
    std::vector<double> out(static_cast<std::size_t>(cone.dim()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = 0.5 * std::min(c1[i], c2[i]);
    return Vector(std::move(out));
}

}  // namespace pcms
