#pragma once

// Declarative space definitions: JSON schema, validation, and builders.

#include <optional>
#include <string>

#include "json.hpp"
#include "pcms/convexity.hpp"
#include "pcms/errors.hpp"
#include "pcms/fixedpoint.hpp"
#include "pcms/space.hpp"

namespace pcms {

class ConfigError : public Error {
public:
    using Error::Error;
};

struct GridSpec {
    std::vector<double> t_values;
    std::vector<double> epsilon_values;  // defaults to t_values when empty
    std::vector<double> mu_values;
    std::vector<double> lambda_values;
    double tolerance = 1e-12;

    const std::vector<double>& epsilons() const {
        return epsilon_values.empty() ? t_values : epsilon_values;
    }
};

struct MapSpec {
    SelfMapKind kind = SelfMapKind::ScaleHalf;
    double a = 1.0, b = 0.0;             // affine parameters
    std::vector<double> xs, ys;          // tabulated knots
};

struct MapsSpec {
    MapSpec f, g;
    SolverConfig solver;
};

enum class ConfigStructure { None, Affine };

struct SpaceConfig {
    Carrier carrier = Carrier::interval(0.0, 1.0, 11);
    int cone_dim = 1;
    ConeNorm cone_norm = ConeNorm::Sup;
    TNormKind tnorm = TNormKind::Minimum;
    KernelFamily kernel = KernelFamily::Fraction;
    MetricKind metric = MetricKind::AbsDiff;            // from-cone-metric only
    std::optional<Scalarizer> scalarizer;               // family default when unset
    ConfigStructure structure = ConfigStructure::None;
    GridSpec grids;
    std::optional<MapsSpec> maps;

    ConeSpec cone() const { return ConeSpec(cone_dim, cone_norm); }
    TNorm tnorm_obj() const {
        return tnorm == TNormKind::Product ? TNorm::product() : TNorm::minimum();
    }
    std::vector<Vector> t_vectors() const;        // t_values as uniform interior vectors
    std::vector<Vector> epsilon_vectors() const;  // epsilons() likewise
};

SpaceConfig parse_config(const nlohmann::json& doc);
SpaceConfig load_config(const std::string& path);
nlohmann::json config_to_json(const SpaceConfig& cfg);

// Builds the space; from-cone-metric configs run the CM sweep first and may
// raise ConstructionError carrying the failing report.
PcmSpace build_space(const SpaceConfig& cfg);

// Builds the (f, g) pair; raises ConfigError when no maps are configured.
std::pair<SelfMap, SelfMap> build_maps(const SpaceConfig& cfg);

}  // namespace pcms
