#pragma once

// Finite-dimensional nonnegative-orthant cones: the partial orders they
// induce, interior membership, axiom sweeps, and normality estimation.

#include <cstddef>
#include <utility>
#include <vector>

#include "pcms/report.hpp"

namespace pcms {

class Vector {
public:
    Vector() = default;
    explicit Vector(std::vector<double> components);  // rejects NaN/inf and empty
    static Vector uniform(int dim, double value);
    static Vector zero(int dim);

    int dim() const { return static_cast<int>(comps_.size()); }
    double operator[](std::size_t i) const { return comps_[i]; }
    const std::vector<double>& components() const { return comps_; }

    Vector operator+(const Vector& o) const;
    Vector operator-(const Vector& o) const;
    Vector scaled(double a) const;

    bool operator==(const Vector& o) const { return comps_ == o.comps_; }

private:
    std::vector<double> comps_;
};

enum class ConeNorm { Sup, Euclidean };

// x vs y under the cone order, strongest relation that holds:
// Ll implies Lt implies Leq (Leq alone means x == y).
enum class OrderRelation { NotComparable, Leq, Lt, Ll };

class ConeSpec {
public:
    explicit ConeSpec(int dim, ConeNorm norm = ConeNorm::Sup);

    int dim() const { return dim_; }
    ConeNorm norm_kind() const { return norm_; }

    bool contains(const Vector& v) const;      // v in P (componentwise >= 0)
    bool in_interior(const Vector& v) const;   // v in Int P (componentwise > 0)
    OrderRelation order(const Vector& x, const Vector& y) const;

    bool leq(const Vector& x, const Vector& y) const;  // x precedes-or-equals y
    bool ll(const Vector& x, const Vector& y) const;   // y - x in Int P

    double norm(const Vector& v) const;
    Vector zero() const { return Vector::zero(dim_); }

private:
    int dim_;
    ConeNorm norm_;
};

// Sampled verification of P1-P3 plus the interior stability facts
// P + Int P in Int P and alpha Int P in Int P (alpha > 0).
AxiomReport check_cone_axioms(const ConeSpec& cone,
                              const std::vector<Vector>& samples,
                              const std::vector<double>& scalars);

// max over pairs of ||x|| / ||y||; a lower bound for the normal constant K.
// Each pair must satisfy theta <= x <= y with y != theta.
double normal_constant_estimate(const ConeSpec& cone,
                                const std::vector<std::pair<Vector, Vector>>& pairs);

// An interior point below both inputs: componentwise minimum, halved.
Vector common_lower_interior(const ConeSpec& cone, const Vector& c1, const Vector& c2);

}  // namespace pcms
