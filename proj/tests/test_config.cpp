#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "floq/config.hpp"
#include "floq/csv.hpp"

using namespace floq;

namespace {
const char* kMinimal = R"({
  "system": { "omega_T": 6.283185307179586, "fock_dim": 30 },
  "bath": { "hT": 1.0, "z": 0.1, "s": 1, "modes": 60 },
  "initial_state": { "type": "cat", "alpha": [2.0, 0.0] }
})";
}  // namespace

TEST_CASE("parse a minimal config with defaults") {
    RunConfig cfg = parse_config_text(kMinimal);
    CHECK(cfg.fock_dim == 30);
    CHECK(cfg.hT == 1.0);
    CHECK(cfg.modes == 60);
    CHECK(!cfg.beta);
    CHECK(cfg.state_kind == RunConfig::StateKind::Cat);
    CHECK(cfg.alpha == Complex(2.0, 0.0));
    CHECK(cfg.propagation.richardson_check);
    CHECK(cfg.l_max == 10);
    CHECK(cfg.time_grid().size() == 200);
    CHECK(cfg.time_grid().front() == 0.0);
    CHECK(cfg.time_grid().back() == 3.0);
}

TEST_CASE("malformed JSON is a parse error") {
    CHECK_THROWS_AS(parse_config_text("{ not json"), ParseError);
    CHECK_THROWS_AS(parse_config_text("[1, 2]"), ParseError);
}

TEST_CASE("unknown keys are rejected with the offending path") {
    try {
        parse_config_text(R"({ "bath": { "hT": 1.0, "coupling": 2.0 } })");
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("bath.coupling") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_config_text(R"({ "extra": 1 })"), ValidationError);
}

TEST_CASE("field validation") {
    CHECK_THROWS_AS(parse_config_text(R"({ "bath": { "hT": -1.0 } })"), ValidationError);
    CHECK_THROWS_AS(parse_config_text(R"({ "bath": { "z": -0.1 } })"), ValidationError);
    CHECK_THROWS_AS(parse_config_text(R"({ "system": { "fock_dim": 1 } })"), ValidationError);
    CHECK_THROWS_AS(parse_config_text(R"({ "propagation": { "steps_per_period": 10 } })"),
                    ValidationError);
    CHECK_THROWS_AS(parse_config_text(R"({ "bath": { "modes": "closed_form", "s": 2 } })"),
                    ValidationError);
    CHECK_THROWS_AS(
        parse_config_text(R"({ "bath": { "modes": "closed_form", "beta": 1.0 } })"),
        ValidationError);
    CHECK_THROWS_AS(parse_config_text(R"({ "initial_state": { "type": "squeezed" } })"),
                    ValidationError);
    CHECK_THROWS_AS(parse_config_text(R"({ "bath": { "coupling_exponent": "both" } })"),
                    ValidationError);
    CHECK_THROWS_AS(parse_config_text(R"({ "time_grid": { "points": 1 } })"), ValidationError);
}

TEST_CASE("closed-form and full-exponent variants") {
    RunConfig cfg = parse_config_text(R"({ "bath": { "modes": "closed_form" } })");
    CHECK(!cfg.bath_spec().modes);
    RunConfig full = parse_config_text(R"({ "bath": { "coupling_exponent": "full" } })");
    // g_k = h e^{-z k} maps onto the half convention with doubled z
    CHECK(full.bath_spec().z == 2.0 * full.z);
}

TEST_CASE("initial states from the config") {
    RunConfig cfg = parse_config_text(kMinimal);
    DensityMatrix cat = cfg.initial_state();
    CHECK(cat.elements.rows() == 30);
    CHECK(std::abs(cat.elements.trace().real() - 1.0) < 1e-14);

    RunConfig fock = parse_config_text(R"({ "initial_state": { "type": "fock", "n": 3 } })");
    CHECK(fock.initial_state().elements(3, 3) == Complex(1.0));
    RunConfig bad = parse_config_text(R"({ "system": { "fock_dim": 3 },
                                           "initial_state": { "type": "fock", "n": 7 } })");
    CHECK_THROWS_AS(bad.initial_state(), ValidationError);

    RunConfig vac = parse_config_text(R"({ "initial_state": { "type": "vacuum" } })");
    CHECK(vac.initial_state().elements(0, 0) == Complex(1.0));
}

TEST_CASE("amplitude files resolve relative to the config directory") {
    std::string dir = "./cfg_test_tmp";
    std::filesystem::create_directories(dir);
    {
        std::ofstream amps(dir + "/state.txt");
        for (int i = 0; i < 4; ++i) amps << (i == 1 ? 1.0 : 0.0) << " " << 0.0 << "\n";
    }
    {
        std::ofstream cfg(dir + "/run.json");
        cfg << R"({ "system": { "fock_dim": 4 },
                    "initial_state": { "type": "amplitudes", "file": "state.txt" } })";
    }
    RunConfig cfg = load_config(dir + "/run.json");
    DensityMatrix rho = cfg.initial_state();
    CHECK(rho.elements(1, 1) == Complex(1.0));
    std::filesystem::remove_all(dir);
}

TEST_CASE("serialization round trip and hashing") {
    RunConfig cfg = parse_config_text(kMinimal);
    RunConfig back = parse_config_text(serialize(cfg));
    CHECK(serialize(back) == serialize(cfg));
    CHECK(config_hash(back) == config_hash(cfg));
    RunConfig other = parse_config_text(R"({ "bath": { "hT": 0.5 } })");
    CHECK(config_hash(other) != config_hash(cfg));
}

TEST_CASE("missing config file is a parse error") {
    CHECK_THROWS_AS(load_config("/nonexistent/path.json"), ParseError);
}

TEST_CASE("csv formatting round-trips doubles") {
    for (double v : {0.1, 1.0 / 3.0, 6.283185307179586, 1e-16, -0.0, 12345.678}) {
        CHECK(std::stod(format_double(v)) == v);
    }
}

TEST_CASE("csv export") {
    std::string path = "./csv_test_tmp.csv";
    export_table({"a", "b"}, {{1.0, 0.5}, {2.0, 0.25}}, path);
    std::ifstream in(path);
    std::string line;
    std::getline(in, line);
    CHECK(line == "a,b");
    std::getline(in, line);
    CHECK(line == "1,0.5");
    std::getline(in, line);
    CHECK(line == "2,0.25");
    CHECK(!std::getline(in, line));
    std::remove(path.c_str());

    export_table({"x"}, {}, path);
    std::ifstream in2(path);
    std::getline(in2, line);
    CHECK(line == "x");
    CHECK(!std::getline(in2, line));
    std::remove(path.c_str());
}
