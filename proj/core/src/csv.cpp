#include "floq/csv.hpp"

#include <chrono>
#include <fstream>

#include <fmt/format.h>
#include <json.hpp>

namespace floq {

std::string format_double(double v) { return fmt::format("{}", v); }

namespace {

std::ofstream open_or_throw(const std::string& path) {
    std::ofstream out(path, std::ios::binary);  // binary: byte-identical across reruns
    if (!out) throw Error("cannot open output file " + path);
    return out;
}

}  // namespace

void export_table(const std::vector<std::string>& header,
                  const std::vector<std::vector<double>>& rows, const std::string& path) {
    std::ofstream out = open_or_throw(path);
    for (size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
    out << "\n";
    for (const auto& row : rows) {
        if (row.size() != header.size())
            throw Error("row width does not match header in " + path);
        for (size_t i = 0; i < row.size(); ++i)
            out << (i ? "," : "") << format_double(row[i]);
        out << "\n";
    }
    if (!out) throw Error("write failed for " + path);
}

void export_field(const WignerField& field, const std::string& path) {
    std::ofstream out = open_or_throw(path);
    out << "Q,P,W\n";
    for (int i = 0; i < field.grid.n_q; ++i)
        for (int j = 0; j < field.grid.n_p; ++j)
            out << format_double(field.grid.q_at(i)) << ','
                << format_double(field.grid.p_at(j)) << ','
                << format_double(field.values(i, j)) << "\n";
    if (!out) throw Error("write failed for " + path);
}

void write_metadata(const Metadata& meta, const std::string& path) {
    nlohmann::json j;
    j["config_hash"] = fmt::format("{:016x}", meta.config_hash);
    j["tool_version"] = meta.tool_version;
    j["subcommand"] = meta.subcommand;
    auto now = std::chrono::system_clock::now();
    j["created_unix"] = std::chrono::duration_cast<std::chrono::seconds>(
                            now.time_since_epoch())
                            .count();
    if (meta.grid) {
        j["grid"] = {{"q_min", meta.grid->q_min}, {"q_max", meta.grid->q_max},
                     {"p_min", meta.grid->p_min}, {"p_max", meta.grid->p_max},
                     {"n_q", meta.grid->n_q},     {"n_p", meta.grid->n_p}};
    }
    std::ofstream out = open_or_throw(path);
    out << j.dump(2) << "\n";
}

}  // namespace floq
