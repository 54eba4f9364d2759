#ifndef FLOQ_VERIFY_HPP
#define FLOQ_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "floq/config.hpp"

namespace floq {

struct GateResult {
    std::string name;
    double measured;   // the quantity compared against the threshold
    double threshold;
    bool pass;
};

// Full invariant suite for one configuration: rate identities, closed-form
// agreement, determinant identity, oracle equivalence of the two propagation
// channels, spectrum match, stroboscopic purification, divisibility, bath-mode
// structure, Wigner parity identity, and the Richardson accuracy gate.
std::vector<GateResult> run_verification(const RunConfig& cfg, std::uint64_t seed = 12345);

}  // namespace floq

#endif
