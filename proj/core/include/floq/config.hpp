#ifndef FLOQ_CONFIG_HPP
#define FLOQ_CONFIG_HPP

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "floq/analysis.hpp"

namespace floq {

// One run = one config file. All dimensionful inputs are in units of the bath
// fundamental: time in periods T, couplings as hT, frequencies as omega*T.
// Internally T = 1, Omega = 2 pi.
struct RunConfig {
    enum class StateKind { Vacuum, Fock, Coherent, Cat, Amplitudes };

    // system
    double omega_T = 2.0 * M_PI;
    int fock_dim = 30;

    // bath
    double hT = 1.0;
    double z = 0.1;
    int s = 1;
    std::optional<int> modes = 60;         // nullopt = infinite closed form
    std::optional<double> beta;            // nullopt = zero temperature
    bool coupling_exponent_full = false;   // g_k = h e^{-zk} instead of h e^{-zk/2}

    // initial state
    StateKind state_kind = StateKind::Cat;
    int fock_level = 0;
    Complex alpha = 2.0;
    std::string amplitudes_file;

    PropagationConfig propagation{40000, true, 1e-6};

    // task blocks
    PhaseGrid grid{-6.0, 6.0, -6.0, 6.0, 241, 241};
    double time_periods = 3.0;
    int time_points = 200;
    int l_max = 10;
    std::vector<double> wigner_times{0.0, 1.0, 2.0, 3.0};  // in periods
    double log_floor = 1e-16;  // floor for log N_k export; stroboscopic zeros are exact

    BathSpec bath_spec() const;
    SystemSpec system_spec() const;
    DensityMatrix initial_state() const;
    std::vector<double> time_grid() const;  // [0, time_periods * T], time_points samples
};

// Throws ParseError on malformed input, ValidationError (naming the field) on
// constraint violations. Unknown keys are rejected.
RunConfig parse_config_text(const std::string& text, const std::string& base_dir = ".");
RunConfig load_config(const std::string& path);

// Canonical serialization; parse_config_text(serialize(c)) == c.
std::string serialize(const RunConfig& cfg);

// FNV-1a over the canonical serialization.
std::uint64_t config_hash(const RunConfig& cfg);

}  // namespace floq

#endif
