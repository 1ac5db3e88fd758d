#pragma once

#include "fourfold/divisors.hpp"

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

namespace fourfold::atlas {

struct AtlasMeta {
    std::string version;
    std::string built_at;  // ISO-8601 UTC
    Int fano_cap;
    bool operator==(const AtlasMeta&) const = default;
};

// Rows are exactly the Hassett discriminants in [d_min, d_max], ascending.
struct AtlasTable {
    Int d_min, d_max;
    AtlasMeta meta;
    std::vector<divisors::DivisorReport> rows;
    bool operator==(const AtlasTable&) const = default;
};

struct BuildOptions {
    Int fano_cap = divisors::default_fano_cap;
    unsigned jobs = 1;          // values < 1 behave as 1
    std::string built_at;       // empty: stamp with the current UTC time
};

const char* tool_version();

// Deterministic for fixed caps regardless of jobs. Error("domain") unless
// 1 <= d_min <= d_max.
AtlasTable build_atlas(const Int& d_min, const Int& d_max, const BuildOptions& opts = {});

// CSV columns: d,is_divisor,star,star_obstruction,bulles_f,bulles_g,
// bulles_n,fano1_n,fano1_a,fano2,fm_count. Empty cell = absent. No meta.
std::string export_csv(const AtlasTable& table);
std::string export_json(const AtlasTable& table);

// Importers re-validate every stored witness and fail with
// Error("corrupt") on any mismatch. CSV carries no range metadata, so the
// imported range is the span of the stored rows.
AtlasTable import_csv(const std::string& text);
AtlasTable import_json(const std::string& text);

// Reads the table from a file, dispatching on a ".json" suffix (anything
// else is treated as CSV). Error("io") when unreadable.
AtlasTable load_file(const std::string& path);
void save_file(const AtlasTable& table, const std::string& path, const std::string& format);

// Conjunction of field filters. Recognized fields: star, fano2 ("true"/
// "false"), bulles, fano1, fm ("present"/"absent"), fm_count (integer),
// d_min, d_max (integers). Error("filter") on anything else.
std::vector<divisors::DivisorReport> query(
    const AtlasTable& table, const std::vector<std::pair<std::string, std::string>>& conditions);

// Shared report serialization (also used by the CLI).
nlohmann::json report_to_json(const divisors::DivisorReport& rep);
divisors::DivisorReport report_from_json(const nlohmann::json& j);
std::string csv_header();
std::string report_to_csv_line(const divisors::DivisorReport& rep);

// Int <-> JSON helpers: emits a JSON integer when the value fits 64 bits,
// a decimal string otherwise; accepts either on input.
nlohmann::json int_to_json(const Int& v);
Int int_from_json(const nlohmann::json& j);

}  // namespace fourfold::atlas
