#include "floq/config.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace floq {

namespace {

using nlohmann::json;

void reject_unknown(const json& obj, const std::string& scope,
                    const std::set<std::string>& known) {
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (!known.count(it.key()))
            throw ValidationError(scope.empty() ? it.key() : scope + "." + it.key(),
                                  "unknown key");
}

double require_number(const json& obj, const std::string& scope, const std::string& key) {
    if (!obj.contains(key)) throw ValidationError(scope + "." + key, "missing");
    if (!obj[key].is_number()) throw ValidationError(scope + "." + key, "must be a number");
    return obj[key].get<double>();
}

int require_int(const json& obj, const std::string& scope, const std::string& key) {
    if (!obj.contains(key) || !obj[key].is_number_integer())
        throw ValidationError(scope + "." + key, "must be an integer");
    return obj[key].get<int>();
}

}  // namespace

BathSpec RunConfig::bath_spec() const {
    BathSpec spec;
    spec.h = hT;  // T = 1 internally
    spec.z = coupling_exponent_full ? 2.0 * z : z;
    spec.omega0 = 2.0 * M_PI;
    spec.s = s;
    spec.modes = modes;
    spec.beta = beta;
    return spec;
}

SystemSpec RunConfig::system_spec() const {
    return {omega_T, FockSpace(fock_dim), bath_spec()};
}

DensityMatrix RunConfig::initial_state() const {
    FockSpace space(fock_dim);
    switch (state_kind) {
        case StateKind::Vacuum: {
            Vec v = Vec::Zero(fock_dim);
            v(0) = 1.0;
            return density_from_ket({space, v});
        }
        case StateKind::Fock: {
            if (fock_level < 0 || fock_level >= fock_dim)
                throw ValidationError("initial_state.n", "outside the Fock space");
            Vec v = Vec::Zero(fock_dim);
            v(fock_level) = 1.0;
            return density_from_ket({space, v});
        }
        case StateKind::Coherent:
            return density_from_ket(coherent_state(space, alpha));
        case StateKind::Cat:
            return density_from_ket(cat_state(space, alpha));
        case StateKind::Amplitudes: {
            std::ifstream in(amplitudes_file);
            if (!in) throw ParseError("cannot open amplitudes file " + amplitudes_file);
            std::vector<Complex> amps;
            double re, im;
            while (in >> re >> im) amps.emplace_back(re, im);
            if (int(amps.size()) != fock_dim)
                throw ValidationError("initial_state.file",
                                      "amplitude count does not match fock_dim");
            Vec v(fock_dim);
            for (int i = 0; i < fock_dim; ++i) v(i) = amps[i];
            return density_from_ket({space, v});
        }
    }
    throw Error("unreachable");
}

std::vector<double> RunConfig::time_grid() const {
    std::vector<double> grid(time_points);
    for (int i = 0; i < time_points; ++i)
        grid[i] = time_periods * double(i) / double(time_points - 1);
    return grid;
}

RunConfig parse_config_text(const std::string& text, const std::string& base_dir) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!root.is_object()) throw ParseError("config root must be an object");

    RunConfig cfg;
    reject_unknown(root, "",
                   {"system", "bath", "initial_state", "propagation", "grid", "time_grid",
                    "l_max", "wigner_times", "log_floor"});

    if (root.contains("system")) {
        const json& sys = root["system"];
        reject_unknown(sys, "system", {"omega_T", "fock_dim"});
        if (sys.contains("omega_T")) cfg.omega_T = require_number(sys, "system", "omega_T");
        if (sys.contains("fock_dim")) cfg.fock_dim = require_int(sys, "system", "fock_dim");
        if (cfg.fock_dim < 2) throw ValidationError("system.fock_dim", "must be >= 2");
        if (cfg.omega_T <= 0.0) throw ValidationError("system.omega_T", "must be > 0");
    }

    if (root.contains("bath")) {
        const json& bath = root["bath"];
        reject_unknown(bath, "bath", {"hT", "z", "s", "modes", "beta", "coupling_exponent"});
        if (bath.contains("hT")) cfg.hT = require_number(bath, "bath", "hT");
        if (bath.contains("z")) cfg.z = require_number(bath, "bath", "z");
        if (bath.contains("s")) cfg.s = require_int(bath, "bath", "s");
        if (bath.contains("modes")) {
            const json& m = bath["modes"];
            if (m.is_string() && m.get<std::string>() == "closed_form")
                cfg.modes = std::nullopt;
            else if (m.is_number_integer())
                cfg.modes = m.get<int>();
            else
                throw ValidationError("bath.modes", "must be an integer or \"closed_form\"");
        }
        if (bath.contains("beta") && !bath["beta"].is_null())
            cfg.beta = require_number(bath, "bath", "beta");
        if (bath.contains("coupling_exponent")) {
            std::string conv = bath["coupling_exponent"].get<std::string>();
            if (conv == "full")
                cfg.coupling_exponent_full = true;
            else if (conv != "half")
                throw ValidationError("bath.coupling_exponent", "must be \"half\" or \"full\"");
        }
        if (cfg.hT < 0.0) throw ValidationError("bath.h", "must be >= 0");
    }

    if (root.contains("initial_state")) {
        const json& st = root["initial_state"];
        reject_unknown(st, "initial_state", {"type", "n", "alpha", "file"});
        std::string type = st.contains("type") ? st["type"].get<std::string>() : "cat";
        if (type == "vacuum") {
            cfg.state_kind = RunConfig::StateKind::Vacuum;
        } else if (type == "fock") {
            cfg.state_kind = RunConfig::StateKind::Fock;
            cfg.fock_level = require_int(st, "initial_state", "n");
        } else if (type == "coherent" || type == "cat") {
            cfg.state_kind = type == "cat" ? RunConfig::StateKind::Cat
                                           : RunConfig::StateKind::Coherent;
            if (st.contains("alpha")) {
                const json& a = st["alpha"];
                if (a.is_number())
                    cfg.alpha = a.get<double>();
                else if (a.is_array() && a.size() == 2)
                    cfg.alpha = Complex(a[0].get<double>(), a[1].get<double>());
                else
                    throw ValidationError("initial_state.alpha",
                                          "must be a number or [re, im]");
            }
        } else if (type == "amplitudes") {
            cfg.state_kind = RunConfig::StateKind::Amplitudes;
            if (!st.contains("file"))
                throw ValidationError("initial_state.file", "missing");
            std::filesystem::path p = st["file"].get<std::string>();
            if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
            cfg.amplitudes_file = p.string();
        } else {
            throw ValidationError("initial_state.type", "unknown state type " + type);
        }
    }

    if (root.contains("propagation")) {
        const json& prop = root["propagation"];
        reject_unknown(prop, "propagation",
                       {"steps_per_period", "richardson_check", "richardson_tol"});
        if (prop.contains("steps_per_period"))
            cfg.propagation.steps_per_period =
                require_int(prop, "propagation", "steps_per_period");
        if (prop.contains("richardson_check"))
            cfg.propagation.richardson_check = prop["richardson_check"].get<bool>();
        if (prop.contains("richardson_tol"))
            cfg.propagation.richardson_tol =
                require_number(prop, "propagation", "richardson_tol");
        if (cfg.propagation.steps_per_period < 100)
            throw ValidationError("propagation.steps_per_period", "must be >= 100");
    }

    if (root.contains("grid")) {
        const json& g = root["grid"];
        reject_unknown(g, "grid", {"q_min", "q_max", "p_min", "p_max", "n_q", "n_p"});
        cfg.grid = {require_number(g, "grid", "q_min"), require_number(g, "grid", "q_max"),
                    require_number(g, "grid", "p_min"), require_number(g, "grid", "p_max"),
                    require_int(g, "grid", "n_q"),      require_int(g, "grid", "n_p")};
        cfg.grid.validate();
    }

    if (root.contains("time_grid")) {
        const json& tg = root["time_grid"];
        reject_unknown(tg, "time_grid", {"periods", "points"});
        if (tg.contains("periods")) cfg.time_periods = require_number(tg, "time_grid", "periods");
        if (tg.contains("points")) cfg.time_points = require_int(tg, "time_grid", "points");
        if (cfg.time_periods <= 0.0) throw ValidationError("time_grid.periods", "must be > 0");
        if (cfg.time_points < 2) throw ValidationError("time_grid.points", "must be >= 2");
    }

    if (root.contains("l_max")) {
        cfg.l_max = require_int(root, "", "l_max");
        if (cfg.l_max < 0) throw ValidationError("l_max", "must be >= 0");
    }
    if (root.contains("wigner_times")) {
        if (!root["wigner_times"].is_array())
            throw ValidationError("wigner_times", "must be an array of periods");
        cfg.wigner_times.clear();
        for (const json& v : root["wigner_times"]) cfg.wigner_times.push_back(v.get<double>());
    }
    if (root.contains("log_floor")) {
        cfg.log_floor = require_number(root, "", "log_floor");
        if (cfg.log_floor <= 0.0) throw ValidationError("log_floor", "must be > 0");
    }

    // Re-validate the cross-field constraints of the referenced types.
    try {
        cfg.bath_spec().validate();
    } catch (const ValidationError&) {
        throw;
    }
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open config file " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::filesystem::path dir = std::filesystem::path(path).parent_path();
    return parse_config_text(buf.str(), dir.empty() ? "." : dir.string());
}

std::string serialize(const RunConfig& cfg) {
    json root;
    root["system"] = {{"omega_T", cfg.omega_T}, {"fock_dim", cfg.fock_dim}};
    json bath = {{"hT", cfg.hT},
                 {"z", cfg.z},
                 {"s", cfg.s},
                 {"coupling_exponent", cfg.coupling_exponent_full ? "full" : "half"}};
    if (cfg.modes)
        bath["modes"] = *cfg.modes;
    else
        bath["modes"] = "closed_form";
    if (cfg.beta) bath["beta"] = *cfg.beta;
    root["bath"] = bath;

    json st;
    switch (cfg.state_kind) {
        case RunConfig::StateKind::Vacuum:
            st = {{"type", "vacuum"}};
            break;
        case RunConfig::StateKind::Fock:
            st = {{"type", "fock"}, {"n", cfg.fock_level}};
            break;
        case RunConfig::StateKind::Coherent:
            st = {{"type", "coherent"}, {"alpha", {cfg.alpha.real(), cfg.alpha.imag()}}};
            break;
        case RunConfig::StateKind::Cat:
            st = {{"type", "cat"}, {"alpha", {cfg.alpha.real(), cfg.alpha.imag()}}};
            break;
        case RunConfig::StateKind::Amplitudes:
            st = {{"type", "amplitudes"}, {"file", cfg.amplitudes_file}};
            break;
    }
    root["initial_state"] = st;
    root["propagation"] = {{"steps_per_period", cfg.propagation.steps_per_period},
                           {"richardson_check", cfg.propagation.richardson_check},
                           {"richardson_tol", cfg.propagation.richardson_tol}};
    root["grid"] = {{"q_min", cfg.grid.q_min}, {"q_max", cfg.grid.q_max},
                    {"p_min", cfg.grid.p_min}, {"p_max", cfg.grid.p_max},
                    {"n_q", cfg.grid.n_q},     {"n_p", cfg.grid.n_p}};
    root["time_grid"] = {{"periods", cfg.time_periods}, {"points", cfg.time_points}};
    root["l_max"] = cfg.l_max;
    root["wigner_times"] = cfg.wigner_times;
    root["log_floor"] = cfg.log_floor;
    return root.dump(2);
}

std::uint64_t config_hash(const RunConfig& cfg) {
    std::string text = serialize(cfg);
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace floq
