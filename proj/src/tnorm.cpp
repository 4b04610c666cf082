#include "pcms/tnorm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pcms/errors.hpp"
#include "pcms/sweep.hpp"

namespace pcms {
namespace {

void require_unit(double v, const char* what) {
    if (!(v >= 0.0 && v <= 1.0))
        throw DomainError(std::string(what) + " must lie in [0,1]");
}

// Nudge r upward by ulps until t(anchor, r) >= target; guards against the
// quotient/sqrt rounding a hair below the algebraic solution.
double nudge_up(const TNorm& t, double anchor, double r, double target) {
    for (int i = 0; i < 8 && t.apply(anchor, r) < target && r < 1.0; ++i)
        r = std::nextafter(r, 1.0);
    return r;
}

}  // namespace

TNorm TNorm::product() {
    return TNorm(TNormKind::Product, "product", [](double a, double b) { return a * b; });
}

TNorm TNorm::minimum() {
    return TNorm(TNormKind::Minimum, "minimum",
                 [](double a, double b) { return std::min(a, b); });
}

TNorm TNorm::custom(std::string name, std::function<double(double, double)> fn) {
    return TNorm(TNormKind::Custom, std::move(name), std::move(fn));
}

double TNorm::apply(double a, double b) const {
    require_unit(a, "t-norm argument");
    require_unit(b, "t-norm argument");
    return fn_(a, b);
}

AxiomReport check_tnorm_axioms(const TNorm& t, const std::vector<double>& grid) {
    if (grid.empty()) throw InputError("t-norm axiom check needs a nonempty grid");
    for (double g : grid) require_unit(g, "grid value");

    AxiomReport report{"tnorm-axioms", {}};
    const std::size_t n = grid.size();
    const std::array<std::size_t, 2> ext2{n, n};
    const std::array<std::size_t, 3> ext3{n, n, n};
    const std::array<std::size_t, 4> ext4{n, n, n, n};

    auto add_entry = [&](const char* id, const SweepResult& r, auto&& witness_at) {
        bool ok = r.min_slack >= 0.0;
        report.add(id, ok ? CheckStatus::Pass : CheckStatus::Fail, r.min_slack,
                   ok ? std::nullopt : std::make_optional(witness_at(r.argmin)));
    };

    {
        SweepResult r = sweep_min(n * n, [&](std::size_t idx) {
            auto c = decode_index(idx, ext2);
            return -std::fabs(t.apply(grid[c[0]], grid[c[1]]) -
                              t.apply(grid[c[1]], grid[c[0]]));
        });
        add_entry("T-commutative", r, [&](std::size_t idx) {
            auto c = decode_index(idx, ext2);
            return Witness{grid[c[0]], grid[c[1]]};
        });
    }

    {
        // Exact for minimum; product associates within a few ulps.
        const double tol = 1e-15;
        SweepResult r = sweep_min(n * n * n, [&](std::size_t idx) {
            auto c = decode_index(idx, ext3);
            double a = grid[c[0]], b = grid[c[1]], d = grid[c[2]];
            return tol - std::fabs(t.apply(a, t.apply(b, d)) - t.apply(t.apply(a, b), d));
        });
        add_entry("T-associative", r, [&](std::size_t idx) {
            auto c = decode_index(idx, ext3);
            return Witness{grid[c[0]], grid[c[1]], grid[c[2]]};
        });
    }

    {
        SweepResult r = sweep_min(n * n * n * n, [&](std::size_t idx) {
            auto c = decode_index(idx, ext4);
            double a = grid[c[0]], b = grid[c[1]], cc = grid[c[2]], d = grid[c[3]];
            if (a > cc || b > d) return 0.0;
            return t.apply(cc, d) - t.apply(a, b);
        });
        add_entry("T-monotone", r, [&](std::size_t idx) {
            auto c = decode_index(idx, ext4);
            return Witness{grid[c[0]], grid[c[1]], grid[c[2]], grid[c[3]]};
        });
    }

    {
        SweepResult r = sweep_min(n, [&](std::size_t i) {
            return -std::fabs(t.apply(grid[i], 1.0) - grid[i]);
        });
        add_entry("T-unit", r, [&](std::size_t idx) { return Witness{grid[idx]}; });
    }

    {
        SweepResult r = sweep_min(n * n, [&](std::size_t idx) {
            auto c = decode_index(idx, ext2);
            double v = t.apply(grid[c[0]], grid[c[1]]);
            return std::min(v, 1.0 - v);
        });
        add_entry("T-range", r, [&](std::size_t idx) {
            auto c = decode_index(idx, ext2);
            return Witness{grid[c[0]], grid[c[1]]};
        });
    }

    return report;
}

double find_companion(const TNorm& t, double r1, double r2) {
    if (!(0.0 < r2 && r2 < r1 && r1 < 1.0))
        throw PreconditionError("companion lookup requires 1 > r1 > r2 > 0");
    double r3 = 0.0;
    switch (t.kind()) {
        case TNormKind::Minimum:
            r3 = r2;  // min(r1, r2) = r2
            break;
        case TNormKind::Product:
            r3 = std::min(1.0 - std::numeric_limits<double>::epsilon(), r2 / r1);
            break;
        case TNormKind::Custom: {
            // Bisect for a small valid value; monotonicity makes the upper
            // end valid for any genuine continuous t-norm.
            double lo = r2, hi = 1.0 - std::numeric_limits<double>::epsilon();
            if (t.apply(r1, lo) >= r2) { r3 = lo; break; }
            for (int i = 0; i < 60; ++i) {
                double mid = 0.5 * (lo + hi);
                if (t.apply(r1, mid) >= r2) hi = mid; else lo = mid;
            }
            r3 = hi;
            break;
        }
    }
    r3 = nudge_up(t, r1, r3, r2);
    if (!(r3 > 0.0 && r3 < 1.0) || t.apply(r1, r3) < r2)
        throw PreconditionError("no companion value found in (0,1)");
    return r3;
}

double find_idempotent_bound(const TNorm& t, double r4) {
    if (!(0.0 < r4 && r4 < 1.0)) throw DomainError("idempotent bound requires r4 in (0,1)");
    double r5 = 0.0;
    switch (t.kind()) {
        case TNormKind::Minimum:
            r5 = r4;
            break;
        case TNormKind::Product:
            r5 = std::sqrt(r4);
            break;
        case TNormKind::Custom: {
            double lo = r4, hi = 1.0 - std::numeric_limits<double>::epsilon();
            if (t.apply(lo, lo) >= r4) { r5 = lo; break; }
            for (int i = 0; i < 60; ++i) {
                double mid = 0.5 * (lo + hi);
                if (t.apply(mid, mid) >= r4) hi = mid; else lo = mid;
            }
            r5 = hi;
            break;
        }
    }
    for (int i = 0; i < 8 && t.apply(r5, r5) < r4 && r5 < 1.0; ++i)
        r5 = std::nextafter(r5, 1.0);
    if (!(r5 > 0.0 && r5 < 1.0) || t.apply(r5, r5) < r4)
        throw PreconditionError("no idempotent bound found in (0,1)");
    return r5;
}

}  // namespace pcms
