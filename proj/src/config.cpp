#include "pcms/config.hpp"

#include <fstream>
#include <set>

namespace pcms {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& why) {
    throw ConfigError("config error at " + field + ": " + why);
}

const json& need(const json& doc, const std::string& field, const std::string& path) {
    auto it = doc.find(field);
    if (it == doc.end()) fail(path.empty() ? field : path + "." + field, "missing field");
    return *it;
}

double need_number(const json& doc, const std::string& field, const std::string& path) {
    const json& v = need(doc, field, path);
    if (!v.is_number()) fail(path + "." + field, "expected a number");
    return v.get<double>();
}

std::vector<double> number_list(const json& v, const std::string& path) {
    if (!v.is_array() || v.empty()) fail(path, "expected a nonempty array of numbers");
    std::vector<double> out;
    for (const auto& e : v) {
        if (!e.is_number()) fail(path, "expected a nonempty array of numbers");
        out.push_back(e.get<double>());
    }
    return out;
}

Carrier parse_carrier(const json& doc) {
    if (!doc.is_object() || doc.size() != 1)
        fail("carrier", "expected exactly one of interval | points | naturals");
    try {
        if (doc.contains("interval")) {
            const json& iv = doc["interval"];
            return Carrier::interval(need_number(iv, "lo", "carrier.interval"),
                                     need_number(iv, "hi", "carrier.interval"),
                                     static_cast<int>(need_number(iv, "samples", "carrier.interval")));
        }
        if (doc.contains("points"))
            return Carrier::points(number_list(doc["points"], "carrier.points"));
        if (doc.contains("naturals"))
            return Carrier::naturals(
                static_cast<long>(need_number(doc["naturals"], "max", "carrier.naturals")));
    } catch (const InputError& e) {
        fail("carrier", e.what());
    }
    fail("carrier", "unknown carrier kind");
}

KernelFamily parse_family(const std::string& s) {
    if (s == "heaviside") return KernelFamily::Heaviside;
    if (s == "exp-ratio") return KernelFamily::ExpRatio;
    if (s == "fraction") return KernelFamily::Fraction;
    if (s == "rational-pair") return KernelFamily::RationalPair;
    if (s == "from-cone-metric") return KernelFamily::FromConeMetric;
    fail("kernel.family", "unknown family '" + s + "'");
}

std::string family_name(KernelFamily f) {
    switch (f) {
        case KernelFamily::Heaviside: return "heaviside";
        case KernelFamily::ExpRatio: return "exp-ratio";
        case KernelFamily::Fraction: return "fraction";
        case KernelFamily::RationalPair: return "rational-pair";
        case KernelFamily::FromConeMetric: return "from-cone-metric";
    }
    return "unknown";
}

SelfMapKind parse_map_kind(const std::string& s) {
    if (s == "scale-half") return SelfMapKind::ScaleHalf;
    if (s == "quad") return SelfMapKind::Quad;
    if (s == "affine") return SelfMapKind::Affine;
    if (s == "tabulated") return SelfMapKind::Tabulated;
    fail("maps", "unknown map kind '" + s + "'");
}

std::string map_kind_name(SelfMapKind k) {
    switch (k) {
        case SelfMapKind::ScaleHalf: return "scale-half";
        case SelfMapKind::Quad: return "quad";
        case SelfMapKind::Affine: return "affine";
        case SelfMapKind::Tabulated: return "tabulated";
    }
    return "unknown";
}

MapSpec parse_map(const json& doc, const std::string& path) {
    MapSpec m;
    if (!doc.is_object()) fail(path, "expected an object");
    m.kind = parse_map_kind(need(doc, "kind", path).get<std::string>());
    if (m.kind == SelfMapKind::Affine) {
        m.a = need_number(doc, "a", path);
        m.b = need_number(doc, "b", path);
    }
    if (m.kind == SelfMapKind::Tabulated) {
        m.xs = number_list(need(doc, "xs", path), path + ".xs");
        m.ys = number_list(need(doc, "ys", path), path + ".ys");
    }
    return m;
}

json map_to_json(const MapSpec& m) {
    json out{{"kind", map_kind_name(m.kind)}};
    if (m.kind == SelfMapKind::Affine) {
        out["a"] = m.a;
        out["b"] = m.b;
    }
    if (m.kind == SelfMapKind::Tabulated) {
        out["xs"] = m.xs;
        out["ys"] = m.ys;
    }
    return out;
}

}  // namespace

std::vector<Vector> SpaceConfig::t_vectors() const {
    std::vector<Vector> out;
    for (double t : grids.t_values) out.push_back(Vector::uniform(cone_dim, t));
    return out;
}

std::vector<Vector> SpaceConfig::epsilon_vectors() const {
    std::vector<Vector> out;
    for (double e : grids.epsilons()) out.push_back(Vector::uniform(cone_dim, e));
    return out;
}

SpaceConfig parse_config(const json& doc) {
    if (!doc.is_object()) throw ConfigError("config error: top level must be an object");
    SpaceConfig cfg;

    cfg.carrier = parse_carrier(need(doc, "carrier", ""));

    {
        const json& cone = need(doc, "cone", "");
        cfg.cone_dim = static_cast<int>(need_number(cone, "dim", "cone"));
        if (cfg.cone_dim < 1) fail("cone.dim", "must be a positive integer");
        std::string norm = cone.value("norm", "sup");
        if (norm == "sup") cfg.cone_norm = ConeNorm::Sup;
        else if (norm == "euclidean") cfg.cone_norm = ConeNorm::Euclidean;
        else fail("cone.norm", "expected sup | euclidean");
    }

    {
        std::string t = need(doc, "tnorm", "").get<std::string>();
        if (t == "product") cfg.tnorm = TNormKind::Product;
        else if (t == "minimum") cfg.tnorm = TNormKind::Minimum;
        else fail("tnorm", "expected product | minimum");
    }

    {
        const json& kernel = need(doc, "kernel", "");
        cfg.kernel = parse_family(need(kernel, "family", "kernel").get<std::string>());
        if (kernel.contains("scalarizer")) {
            std::string s = kernel["scalarizer"].get<std::string>();
            if (s == "norm") cfg.scalarizer = Scalarizer::Norm;
            else if (s == "first-component") cfg.scalarizer = Scalarizer::FirstComponent;
            else fail("kernel.scalarizer", "expected norm | first-component");
        }
        if (kernel.contains("params") && kernel["params"].contains("metric")) {
            std::string m = kernel["params"]["metric"].get<std::string>();
            if (m == "abs") cfg.metric = MetricKind::AbsDiff;
            else if (m == "abs-squared") cfg.metric = MetricKind::AbsDiffSquared;
            else fail("kernel.params.metric", "expected abs | abs-squared");
        }
        if (cfg.kernel == KernelFamily::RationalPair &&
            cfg.carrier.kind() != Carrier::Kind::Naturals)
            fail("kernel.family", "kernel family incompatible with carrier "
                                  "(rational-pair requires naturals)");
    }

    {
        std::string s = need(doc, "structure", "").get<std::string>();
        if (s == "affine") cfg.structure = ConfigStructure::Affine;
        else if (s == "none") cfg.structure = ConfigStructure::None;
        else fail("structure", "expected affine | none");
    }

    {
        const json& grids = need(doc, "grids", "");
        cfg.grids.t_values = number_list(need(grids, "t_values", "grids"), "grids.t_values");
        for (double t : cfg.grids.t_values)
            if (!(t > 0.0)) fail("grids.t_values", "t values must be strictly positive");
        if (grids.contains("epsilon_values")) {
            cfg.grids.epsilon_values = number_list(grids["epsilon_values"], "grids.epsilon_values");
            for (double e : cfg.grids.epsilon_values)
                if (!(e > 0.0)) fail("grids.epsilon_values", "epsilon values must be positive");
        }
        cfg.grids.mu_values = number_list(need(grids, "mu_values", "grids"), "grids.mu_values");
        for (double mu : cfg.grids.mu_values)
            if (!(mu >= 0.0 && mu <= 1.0)) fail("grids.mu_values", "mu values must lie in [0,1]");
        cfg.grids.lambda_values =
            number_list(need(grids, "lambda_values", "grids"), "grids.lambda_values");
        for (double l : cfg.grids.lambda_values)
            if (!(l > 0.0 && l < 1.0)) fail("grids.lambda_values", "lambda values must lie in (0,1)");
        cfg.grids.tolerance = need_number(grids, "tolerance", "grids");
        if (!(cfg.grids.tolerance > 0.0)) fail("grids.tolerance", "must be strictly positive");
    }

    if (doc.contains("maps")) {
        const json& maps = doc["maps"];
        MapsSpec spec;
        spec.f = parse_map(need(maps, "f", "maps"), "maps.f");
        spec.g = parse_map(need(maps, "g", "maps"), "maps.g");
        if (maps.contains("solver")) {
            const json& s = maps["solver"];
            spec.solver.tol = s.value("tol", spec.solver.tol);
            spec.solver.max_iter = s.value("max_iter", spec.solver.max_iter);
            spec.solver.mann_mu = s.value("mann_mu", spec.solver.mann_mu);
            spec.solver.grid_n = s.value("grid_n", spec.solver.grid_n);
            if (!(spec.solver.tol > 0.0)) fail("maps.solver.tol", "must be strictly positive");
            if (!(spec.solver.mann_mu > 0.0 && spec.solver.mann_mu < 1.0))
                fail("maps.solver.mann_mu", "must lie in (0,1)");
        }
        if (cfg.carrier.kind() != Carrier::Kind::Interval)
            fail("maps", "fixed-point maps require an interval carrier");
        cfg.maps = std::move(spec);
    }

    return cfg;
}

SpaceConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config error: cannot open '" + path + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError("config error in '" + path + "': " + e.what());
    }
    return parse_config(doc);
}

json config_to_json(const SpaceConfig& cfg) {
    json carrier;
    switch (cfg.carrier.kind()) {
        case Carrier::Kind::Interval: {
            RealInterval b = cfg.carrier.bounds();
            carrier["interval"] = {{"lo", b.lo}, {"hi", b.hi}, {"samples", cfg.carrier.sample_count()}};
            break;
        }
        case Carrier::Kind::Points:
            carrier["points"] = cfg.carrier.sample_points();
            break;
        case Carrier::Kind::Naturals:
            carrier["naturals"] = {{"max", cfg.carrier.sample_count()}};
            break;
    }

    json kernel{{"family", family_name(cfg.kernel)}};
    if (cfg.scalarizer)
        kernel["scalarizer"] =
            *cfg.scalarizer == Scalarizer::Norm ? "norm" : "first-component";
    if (cfg.kernel == KernelFamily::FromConeMetric)
        kernel["params"] = {{"metric", cfg.metric == MetricKind::AbsDiff ? "abs" : "abs-squared"}};

    json grids{{"t_values", cfg.grids.t_values},
               {"mu_values", cfg.grids.mu_values},
               {"lambda_values", cfg.grids.lambda_values},
               {"tolerance", cfg.grids.tolerance}};
    if (!cfg.grids.epsilon_values.empty()) grids["epsilon_values"] = cfg.grids.epsilon_values;

    json out{{"carrier", carrier},
             {"cone", {{"dim", cfg.cone_dim},
                       {"norm", cfg.cone_norm == ConeNorm::Sup ? "sup" : "euclidean"}}},
             {"tnorm", cfg.tnorm == TNormKind::Product ? "product" : "minimum"},
             {"kernel", kernel},
             {"structure", cfg.structure == ConfigStructure::Affine ? "affine" : "none"},
             {"grids", grids}};

    if (cfg.maps) {
        json maps{{"f", map_to_json(cfg.maps->f)},
                  {"g", map_to_json(cfg.maps->g)},
                  {"solver", {{"tol", cfg.maps->solver.tol},
                              {"max_iter", cfg.maps->solver.max_iter},
                              {"mann_mu", cfg.maps->solver.mann_mu},
                              {"grid_n", cfg.maps->solver.grid_n}}}};
        out["maps"] = maps;
    }
    return out;
}

PcmSpace build_space(const SpaceConfig& cfg) {
    Kernel kernel = [&] {
        switch (cfg.kernel) {
            case KernelFamily::Heaviside: return Kernel::heaviside();
            case KernelFamily::ExpRatio: return Kernel::exp_ratio();
            case KernelFamily::Fraction: return Kernel::fraction();
            case KernelFamily::RationalPair: return Kernel::rational_pair();
            case KernelFamily::FromConeMetric: return Kernel::from_cone_metric({cfg.metric});
        }
        return Kernel::fraction();
    }();
    if (cfg.scalarizer) kernel = kernel.with_scalarizer(*cfg.scalarizer);

    if (cfg.kernel == KernelFamily::FromConeMetric) {
        AxiomReport cm = check_cone_metric_axioms(ConeMetric{cfg.metric},
                                                  cfg.carrier.sample_points(),
                                                  cfg.grids.tolerance);
        if (!cm.all_passed())
            throw ConstructionError("cone metric axioms fail on the sampled carrier", cm);
    }
    return PcmSpace(cfg.carrier, cfg.cone(), cfg.tnorm_obj(), kernel);
}

std::pair<SelfMap, SelfMap> build_maps(const SpaceConfig& cfg) {
    if (!cfg.maps) throw ConfigError("config error: this operation requires a maps section");
    RealInterval E = cfg.carrier.bounds();
    auto build = [&](const MapSpec& m) {
        switch (m.kind) {
            case SelfMapKind::ScaleHalf: return SelfMap::scale_half(E);
            case SelfMapKind::Quad: return SelfMap::quad(E);
            case SelfMapKind::Affine: return SelfMap::affine(m.a, m.b, E);
            case SelfMapKind::Tabulated: return SelfMap::tabulated(m.xs, m.ys, E);
        }
        return SelfMap::scale_half(E);
    };
    return {build(cfg.maps->f), build(cfg.maps->g)};
}

}  // namespace pcms
