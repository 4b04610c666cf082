#pragma once

// Continuous t-norms on [0,1] and the solvability facts the topology
// layer leans on (companion values and idempotent-style bounds).

#include <functional>
#include <string>
#include <vector>

#include "pcms/report.hpp"

namespace pcms {

enum class TNormKind { Product, Minimum, Custom };

class TNorm {
public:
    static TNorm product();
    static TNorm minimum();
    // Arbitrary binary op under the same axiom checker; used to build
    // counterexample spaces in tests. Not reachable from config files.
    static TNorm custom(std::string name, std::function<double(double, double)> fn);

    double apply(double a, double b) const;  // validates a, b in [0,1]
    TNormKind kind() const { return kind_; }
    const std::string& name() const { return name_; }

private:
    TNorm(TNormKind kind, std::string name, std::function<double(double, double)> fn)
        : kind_(kind), name_(std::move(name)), fn_(std::move(fn)) {}

    TNormKind kind_;
    std::string name_;
    std::function<double(double, double)> fn_;
};

// Commutativity, associativity, monotonicity in each argument, and the
// unit law, verified exhaustively over the grid.
AxiomReport check_tnorm_axioms(const TNorm& t, const std::vector<double>& grid);

// For 1 > r1 > r2 > 0, an r3 in (0,1) with r1 * r3 >= r2.
double find_companion(const TNorm& t, double r1, double r2);

// For r4 in (0,1), an r5 in (0,1) with r5 * r5 >= r4.
double find_idempotent_bound(const TNorm& t, double r4);

}  // namespace pcms
