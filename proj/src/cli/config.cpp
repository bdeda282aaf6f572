#include "stagmesh/cli/config.hpp"

#include "stagmesh/errors.hpp"

#include <fstream>

namespace stagmesh::cli {
namespace {

using integrators::SMConfig;

json optional_number(const std::optional<double>& x)
{
    return x ? json(*x) : json(nullptr);
}

bool same_kind(const json& a, const json& b)
{
    if (a.is_number() && b.is_number()) {
        return true;
    }
    return a.type() == b.type();
}

/// Overlays src onto dst; every key in src must exist in dst with a compatible type.
void merge(json& dst, const json& src, const std::string& path)
{
    if (!src.is_object()) {
        throw ConfigError("'" + (path.empty() ? std::string("<root>") : path) + "' must be an object");
    }
    for (auto it = src.begin(); it != src.end(); ++it) {
        const std::string key = path.empty() ? it.key() : path + "." + it.key();
        if (!dst.contains(it.key())) {
            throw ConfigError("unknown config key '" + key + "'");
        }
        json& slot = dst[it.key()];
        const json& val = it.value();
        if (slot.is_object()) {
            merge(slot, val, key);
        } else if (slot.is_null() || val.is_null()) {
            // Optional numbers: null means "use the default".
            if (!val.is_null() && !val.is_number()) {
                throw ConfigError("config key '" + key + "' must be a number or null");
            }
            slot = val;
        } else if (!same_kind(slot, val)) {
            throw ConfigError("config key '" + key + "' has the wrong type (expected " + slot.type_name() + ")");
        } else {
            slot = val;
        }
    }
}

template <class T>
T get(const json& j, const char* key, const std::string& where)
{
    try {
        return j.at(key).get<T>();
    } catch (const json::exception&) {
        throw ConfigError("config key '" + where + key + "' has an invalid value");
    }
}

std::optional<double> get_optional(const json& j, const char* key)
{
    const json& v = j.at(key);
    return v.is_null() ? std::nullopt : std::optional<double>(v.get<double>());
}

}  // namespace

json to_json(const Config& c)
{
    const ExperimentSpec& s = c.spec;
    const SMConfig& k = s.scheme;
    return json{
        {"name", s.name},
        {"model",
         {{"kind", s.model.kind},
          {"eps", s.model.eps},
          {"mobility", s.model.mobility},
          {"nu", s.model.nu},
          {"kappa", s.model.kappa},
          {"lambda", s.model.lambda},
          {"tensions",
           {{"sigma12", s.model.tensions.sigma12},
            {"sigma13", s.model.tensions.sigma13},
            {"sigma23", s.model.tensions.sigma23}}},
          {"dealias", s.model.dealias}}},
        {"grid", {{"nx", s.grid.nx}, {"ny", s.grid.ny}, {"lx", s.grid.lx}, {"ly", s.grid.ly}}},
        {"scheme",
         {{"scheme", std::string(integrators::to_string(k.scheme))},
          {"variant", std::string(integrators::to_string(k.variant))},
          {"chi", std::string(integrators::to_string(k.chi))},
          {"chi_base", k.chi_base},
          {"theta", k.theta},
          {"c0", optional_number(k.c0)},
          {"s_stab", k.s_stab},
          {"c_star", optional_number(k.c_star)},
          {"placement", std::string(integrators::to_string(k.placement))},
          {"dt", k.dt},
          {"bdf_order", k.bdf_order},
          {"cn_modified", k.cn_modified},
          {"bdf2_eta", std::string(integrators::to_string(k.bdf2_eta))}}},
        {"t_final", s.t_final},
        {"dt_list", s.dt_list},
        {"reference_dt", s.reference_dt},
        {"exact",
         {{"kind", s.exact.kind},
          {"mx", s.exact.mx},
          {"my", s.exact.my},
          {"profile", s.exact.profile},
          {"a0", s.exact.a0},
          {"a1", s.exact.a1}}},
        {"initial",
         {{"kind", s.initial.kind},
          {"amplitude", s.initial.amplitude},
          {"offset", s.initial.offset},
          {"max_mode", s.initial.max_mode},
          {"rho", s.initial.rho},
          {"sigma", s.initial.sigma},
          {"bubble1", {{"x", s.initial.bubble1.x}, {"y", s.initial.bubble1.y}, {"r", s.initial.bubble1.r}}},
          {"bubble2", {{"x", s.initial.bubble2.x}, {"y", s.initial.bubble2.y}, {"r", s.initial.bubble2.r}}}}},
        {"seed", s.seed},
        {"trace_stride", s.trace_stride},
        {"snapshot_times", s.snapshot_times},
        {"output_dir", s.output_dir},
        {"verbosity", c.verbosity},
    };
}

Config from_json(const json& doc, const Config& base)
{
    json j = to_json(base);
    merge(j, doc, "");

    Config c;
    ExperimentSpec& s = c.spec;
    s.name = get<std::string>(j, "name", "");
    const json& m = j.at("model");
    s.model.kind = get<std::string>(m, "kind", "model.");
    s.model.eps = get<double>(m, "eps", "model.");
    s.model.mobility = get<double>(m, "mobility", "model.");
    s.model.nu = get<double>(m, "nu", "model.");
    s.model.kappa = get<double>(m, "kappa", "model.");
    s.model.lambda = get<double>(m, "lambda", "model.");
    const json& ten = m.at("tensions");
    s.model.tensions.sigma12 = get<double>(ten, "sigma12", "model.tensions.");
    s.model.tensions.sigma13 = get<double>(ten, "sigma13", "model.tensions.");
    s.model.tensions.sigma23 = get<double>(ten, "sigma23", "model.tensions.");
    s.model.dealias = get<bool>(m, "dealias", "model.");

    const json& g = j.at("grid");
    s.grid.nx = get<int>(g, "nx", "grid.");
    s.grid.ny = get<int>(g, "ny", "grid.");
    s.grid.lx = get<double>(g, "lx", "grid.");
    s.grid.ly = get<double>(g, "ly", "grid.");

    const json& k = j.at("scheme");
    s.scheme.scheme = integrators::parse_scheme(get<std::string>(k, "scheme", "scheme."));
    s.scheme.variant = integrators::parse_variant(get<std::string>(k, "variant", "scheme."));
    s.scheme.chi = integrators::parse_chi(get<std::string>(k, "chi", "scheme."));
    s.scheme.chi_base = get<double>(k, "chi_base", "scheme.");
    s.scheme.theta = get<double>(k, "theta", "scheme.");
    s.scheme.c0 = get_optional(k, "c0");
    s.scheme.s_stab = get<double>(k, "s_stab", "scheme.");
    s.scheme.c_star = get_optional(k, "c_star");
    s.scheme.placement = integrators::parse_placement(get<std::string>(k, "placement", "scheme."));
    s.scheme.dt = get<double>(k, "dt", "scheme.");
    s.scheme.bdf_order = get<int>(k, "bdf_order", "scheme.");
    s.scheme.cn_modified = get<bool>(k, "cn_modified", "scheme.");
    s.scheme.bdf2_eta = integrators::parse_bdf2_eta(get<std::string>(k, "bdf2_eta", "scheme."));

    s.t_final = get<double>(j, "t_final", "");
    s.dt_list = get<std::vector<double>>(j, "dt_list", "");
    s.reference_dt = get<double>(j, "reference_dt", "");

    const json& e = j.at("exact");
    s.exact.kind = get<std::string>(e, "kind", "exact.");
    s.exact.mx = get<int>(e, "mx", "exact.");
    s.exact.my = get<int>(e, "my", "exact.");
    s.exact.profile = get<std::string>(e, "profile", "exact.");
    s.exact.a0 = get<double>(e, "a0", "exact.");
    s.exact.a1 = get<double>(e, "a1", "exact.");

    const json& in = j.at("initial");
    s.initial.kind = get<std::string>(in, "kind", "initial.");
    s.initial.amplitude = get<double>(in, "amplitude", "initial.");
    s.initial.offset = get<double>(in, "offset", "initial.");
    s.initial.max_mode = get<int>(in, "max_mode", "initial.");
    s.initial.rho = get<double>(in, "rho", "initial.");
    s.initial.sigma = get<double>(in, "sigma", "initial.");
    for (auto [key, b] : {std::pair{"bubble1", &s.initial.bubble1}, std::pair{"bubble2", &s.initial.bubble2}}) {
        const json& bj = in.at(key);
        const std::string where = std::string("initial.") + key + ".";
        b->x = get<double>(bj, "x", where);
        b->y = get<double>(bj, "y", where);
        b->r = get<double>(bj, "r", where);
    }

    s.seed = get<std::uint64_t>(j, "seed", "");
    s.trace_stride = get<int>(j, "trace_stride", "");
    s.snapshot_times = get<std::vector<double>>(j, "snapshot_times", "");
    s.output_dir = get<std::string>(j, "output_dir", "");
    c.verbosity = get<int>(j, "verbosity", "");

    s.validate();
    // Resolve names early so typos fail before any work.
    (void)harness::make_exact(s.exact);
    (void)harness::make_model(s.model, harness::make_grid(s.grid));
    return c;
}

Config load_config(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot read config file " + path.string());
    }
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError("malformed config " + path.string() + ": " + e.what());
    }
    return from_json(doc);
}

void apply_override(json& doc, const std::string& dotted, const std::string& value)
{
    if (dotted.empty()) {
        throw ConfigError("empty override key");
    }
    json parsed = json::parse(value, nullptr, false);
    if (parsed.is_discarded()) {
        parsed = value;
    }
    json* node = &doc;
    std::size_t start = 0;
    while (true) {
        const std::size_t dot = dotted.find('.', start);
        const std::string part = dotted.substr(start, dot == std::string::npos ? std::string::npos : dot - start);
        if (part.empty()) {
            throw ConfigError("malformed override key '" + dotted + "'");
        }
        if (!node->is_object()) {
            *node = json::object();
        }
        node = &(*node)[part];
        if (dot == std::string::npos) {
            break;
        }
        start = dot + 1;
    }
    *node = std::move(parsed);
}

}  // namespace stagmesh::cli
