#ifndef FLOQ_CSV_HPP
#define FLOQ_CSV_HPP

#include <string>
#include <vector>

#include "floq/analysis.hpp"

namespace floq {

// Shortest round-trip decimal representation.
std::string format_double(double v);

// CSV with a header row; an empty row set yields a header-only file.
void export_table(const std::vector<std::string>& header,
                  const std::vector<std::vector<double>>& rows, const std::string& path);

// (Q, P, W) triples.
void export_field(const WignerField& field, const std::string& path);

// Sidecar metadata JSON: config hash, grid bounds when present, timestamp.
struct Metadata {
    std::uint64_t config_hash = 0;
    std::string tool_version;
    std::string subcommand;
    const PhaseGrid* grid = nullptr;  // optional
};
void write_metadata(const Metadata& meta, const std::string& path);

}  // namespace floq

#endif
