#include "fourfold/atlas.hpp"

#include <chrono>
#include <fstream>
#include <sstream>
#include <thread>

namespace fourfold::atlas {

using divisors::BullesWitness;
using divisors::DivisorReport;
using divisors::FanoWitness;
using nlohmann::json;

const char* tool_version() { return "0.1.0"; }

namespace {

std::string utc_now() {
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void validate_report(const DivisorReport& rep) {
    // Witnesses re-validate by substitution; the cheap recomputable fields
    // re-validate outright. Absences are trusted (re-searching would defeat
    // the point of persistence).
    if (rep.bulles) {
        const auto& w = *rep.bulles;
        if (w.f < 1 || w.g < 1 || w.n < 0 || w.f * w.f * w.g != rep.d ||
            (2 * w.n * w.n + 2 * w.n + 2) % w.g != 0)
            throw Error("corrupt", "stored bulles witness fails re-validation for d=" + rep.d.str());
    }
    if (rep.fano1) {
        const auto& w = *rep.fano1;
        if (w.n < 2 || w.a < 1 || rep.d * w.a * w.a != 2 * w.n * w.n + 2 * w.n + 2)
            throw Error("corrupt", "stored fano witness fails re-validation for d=" + rep.d.str());
    }
    if (rep.d < 1 || rep.is_divisor != divisors::is_hassett_divisor(rep.d))
        throw Error("corrupt", "divisor flag fails re-validation for d=" + rep.d.str());
    divisors::StarResult star = divisors::satisfies_star(rep.d);
    if (rep.star != star.ok || rep.star_failure != star.obstruction)
        throw Error("corrupt", "star fields fail re-validation for d=" + rep.d.str());
    if (rep.fano2 != divisors::fano_condition_two(rep.d))
        throw Error("corrupt", "fano2 flag fails re-validation for d=" + rep.d.str());
}

Int next_hassett_after(const Int& d) {
    Int x = d < 7 ? Int(7) : d + 1;
    while (!divisors::is_hassett_divisor(x)) ++x;  // gap is at most 4
    return x;
}

// Rows must be exactly the Hassett discriminants of [d_min, d_max],
// ascending with no gaps.
void validate_coverage(const AtlasTable& table) {
    Int expected = divisors::is_hassett_divisor(table.d_min)
                       ? table.d_min
                       : next_hassett_after(table.d_min);
    for (const auto& rep : table.rows) {
        if (rep.d != expected)
            throw Error("corrupt", "expected row d=" + expected.str() + ", found d=" + rep.d.str());
        expected = next_hassett_after(rep.d);
    }
    if (expected <= table.d_max)
        throw Error("corrupt", "missing row d=" + expected.str() + " at the end of the range");
}

}  // namespace

AtlasTable build_atlas(const Int& d_min, const Int& d_max, const BuildOptions& opts) {
    if (d_min < 1 || d_min > d_max) throw Error("domain", "need 1 <= d_min <= d_max");

    std::vector<Int> candidates;
    for (Int d = d_min; d <= d_max; ++d)
        if (divisors::is_hassett_divisor(d)) candidates.push_back(d);

    std::vector<DivisorReport> rows(candidates.size());
    unsigned jobs = std::max(1u, opts.jobs);
    if (jobs <= 1 || candidates.size() < 2) {
        for (std::size_t i = 0; i < candidates.size(); ++i)
            rows[i] = divisors::classify(candidates[i], opts.fano_cap);
    } else {
        jobs = std::min<std::size_t>(jobs, candidates.size());
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (unsigned w = 0; w < jobs; ++w)
            pool.emplace_back([&, w] {
                for (std::size_t i = w; i < candidates.size(); i += jobs)
                    rows[i] = divisors::classify(candidates[i], opts.fano_cap);
            });
        for (auto& th : pool) th.join();
    }

    AtlasTable table;
    table.d_min = d_min;
    table.d_max = d_max;
    table.meta = {tool_version(), opts.built_at.empty() ? utc_now() : opts.built_at, opts.fano_cap};
    table.rows = std::move(rows);
    return table;
}

std::string csv_header() {
    return "d,is_divisor,star,star_obstruction,bulles_f,bulles_g,bulles_n,"
           "fano1_n,fano1_a,fano2,fm_count";
}

std::string report_to_csv_line(const DivisorReport& rep) {
    std::ostringstream out;
    auto boolean = [](bool b) { return b ? "true" : "false"; };
    out << rep.d.str() << ',' << boolean(rep.is_divisor) << ',' << boolean(rep.star) << ','
        << (rep.star_failure ? *rep.star_failure : "") << ',';
    if (rep.bulles)
        out << rep.bulles->f.str() << ',' << rep.bulles->g.str() << ',' << rep.bulles->n.str();
    else
        out << ",,";
    out << ',';
    if (rep.fano1)
        out << rep.fano1->n.str() << ',' << rep.fano1->a.str();
    else
        out << ',';
    out << ',' << boolean(rep.fano2) << ',' << (rep.fm_count ? rep.fm_count->str() : "");
    return out.str();
}

std::string export_csv(const AtlasTable& table) {
    std::ostringstream out;
    out << csv_header() << '\n';
    for (const auto& rep : table.rows) out << report_to_csv_line(rep) << '\n';
    return out.str();
}

json int_to_json(const Int& v) {
    if (fits_int64(v)) return to_int64(v);
    return v.str();
}

Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_string()) return parse_int(j.get<std::string>());
    throw Error("corrupt", "expected integer, got " + j.dump());
}

json report_to_json(const DivisorReport& rep) {
    json j;
    j["d"] = int_to_json(rep.d);
    j["is_divisor"] = rep.is_divisor;
    j["star"] = rep.star;
    j["star_failure"] = rep.star_failure ? json(*rep.star_failure) : json(nullptr);
    if (rep.bulles)
        j["bulles"] = {{"f", int_to_json(rep.bulles->f)},
                       {"g", int_to_json(rep.bulles->g)},
                       {"n", int_to_json(rep.bulles->n)}};
    else
        j["bulles"] = nullptr;
    if (rep.fano1)
        j["fano1"] = {{"n", int_to_json(rep.fano1->n)}, {"a", int_to_json(rep.fano1->a)}};
    else
        j["fano1"] = nullptr;
    j["fano2"] = rep.fano2;
    j["fm_count"] = rep.fm_count ? int_to_json(*rep.fm_count) : json(nullptr);
    return j;
}

DivisorReport report_from_json(const json& j) {
    DivisorReport rep;
    rep.d = int_from_json(j.at("d"));
    rep.is_divisor = j.at("is_divisor").get<bool>();
    rep.star = j.at("star").get<bool>();
    if (!j.at("star_failure").is_null()) rep.star_failure = j.at("star_failure").get<std::string>();
    if (!j.at("bulles").is_null())
        rep.bulles = BullesWitness{int_from_json(j.at("bulles").at("f")),
                                   int_from_json(j.at("bulles").at("g")),
                                   int_from_json(j.at("bulles").at("n"))};
    if (!j.at("fano1").is_null())
        rep.fano1 =
            FanoWitness{int_from_json(j.at("fano1").at("n")), int_from_json(j.at("fano1").at("a"))};
    rep.fano2 = j.at("fano2").get<bool>();
    if (!j.at("fm_count").is_null()) rep.fm_count = int_from_json(j.at("fm_count"));
    return rep;
}

std::string export_json(const AtlasTable& table) {
    json j;
    j["d_min"] = int_to_json(table.d_min);
    j["d_max"] = int_to_json(table.d_max);
    j["meta"] = {{"version", table.meta.version},
                 {"built_at", table.meta.built_at},
                 {"fano_cap", int_to_json(table.meta.fano_cap)}};
    j["rows"] = json::array();
    for (const auto& rep : table.rows) j["rows"].push_back(report_to_json(rep));
    return j.dump(2) + "\n";
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur += ch;
        }
    }
    fields.push_back(cur);
    return fields;
}

bool parse_bool(const std::string& s) {
    if (s == "true") return true;
    if (s == "false") return false;
    throw Error("corrupt", "bad boolean cell: '" + s + "'");
}

}  // namespace

AtlasTable import_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw Error("corrupt", "empty csv input");
    if (split_csv_line(line) != split_csv_line(csv_header()))
        throw Error("corrupt", "unexpected csv header");

    AtlasTable table;
    // csv carries no meta; stamp the import itself
    table.meta = {tool_version(), utc_now(), divisors::default_fano_cap};
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto f = split_csv_line(line);
        if (f.size() != 11) throw Error("corrupt", "bad csv row: '" + line + "'");
        DivisorReport rep;
        rep.d = parse_int(f[0]);
        rep.is_divisor = parse_bool(f[1]);
        rep.star = parse_bool(f[2]);
        if (!f[3].empty()) rep.star_failure = f[3];
        if (!f[4].empty() || !f[5].empty() || !f[6].empty())
            rep.bulles = BullesWitness{parse_int(f[4]), parse_int(f[5]), parse_int(f[6])};
        if (!f[7].empty() || !f[8].empty())
            rep.fano1 = FanoWitness{parse_int(f[7]), parse_int(f[8])};
        rep.fano2 = parse_bool(f[9]);
        if (!f[10].empty()) rep.fm_count = parse_int(f[10]);
        validate_report(rep);
        table.rows.push_back(std::move(rep));
    }
    if (!table.rows.empty()) {
        table.d_min = table.rows.front().d;
        table.d_max = table.rows.back().d;
    } else {
        table.d_min = table.d_max = 0;
    }
    validate_coverage(table);
    return table;
}

AtlasTable import_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw Error("corrupt", std::string("bad json: ") + e.what());
    }
    try {
        AtlasTable table;
        table.d_min = int_from_json(j.at("d_min"));
        table.d_max = int_from_json(j.at("d_max"));
        table.meta = {j.at("meta").at("version").get<std::string>(),
                      j.at("meta").at("built_at").get<std::string>(),
                      int_from_json(j.at("meta").at("fano_cap"))};
        for (const auto& row : j.at("rows")) {
            DivisorReport rep = report_from_json(row);
            validate_report(rep);
            table.rows.push_back(std::move(rep));
        }
        validate_coverage(table);
        return table;
    } catch (const json::exception& e) {
        throw Error("corrupt", std::string("bad atlas document: ") + e.what());
    }
}

AtlasTable load_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("io", "cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json")
        return import_json(buf.str());
    return import_csv(buf.str());
}

void save_file(const AtlasTable& table, const std::string& path, const std::string& format) {
    std::string payload;
    if (format == "csv")
        payload = export_csv(table);
    else if (format == "json")
        payload = export_json(table);
    else
        throw Error("domain", "unknown format '" + format + "'");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("io", "cannot write " + path);
    out << payload;
    if (!out) throw Error("io", "short write to " + path);
}

std::vector<DivisorReport> query(const AtlasTable& table,
                                 const std::vector<std::pair<std::string, std::string>>& conditions) {
    // Parse all conditions up front so unknown fields fail even on empty
    // tables.
    std::optional<bool> want_star, want_fano2;
    std::optional<bool> want_bulles, want_fano1, want_fm;  // present=true / absent=false
    std::optional<Int> want_fm_count, lo, hi;

    auto present_flag = [](const std::string& field, const std::string& v) -> bool {
        if (v == "present") return true;
        if (v == "absent") return false;
        throw Error("filter", field + " expects 'present' or 'absent', got '" + v + "'");
    };
    auto bool_flag = [](const std::string& field, const std::string& v) -> bool {
        if (v == "true") return true;
        if (v == "false") return false;
        throw Error("filter", field + " expects 'true' or 'false', got '" + v + "'");
    };

    for (const auto& [field, value] : conditions) {
        if (field == "star")
            want_star = bool_flag(field, value);
        else if (field == "fano2")
            want_fano2 = bool_flag(field, value);
        else if (field == "bulles")
            want_bulles = present_flag(field, value);
        else if (field == "fano1")
            want_fano1 = present_flag(field, value);
        else if (field == "fm")
            want_fm = present_flag(field, value);
        else if (field == "fm_count")
            want_fm_count = parse_int(value);
        else if (field == "d_min")
            lo = parse_int(value);
        else if (field == "d_max")
            hi = parse_int(value);
        else
            throw Error("filter", "unknown filter field '" + field + "'");
    }

    std::vector<DivisorReport> out;
    for (const auto& rep : table.rows) {
        if (want_star && rep.star != *want_star) continue;
        if (want_fano2 && rep.fano2 != *want_fano2) continue;
        if (want_bulles && rep.bulles.has_value() != *want_bulles) continue;
        if (want_fano1 && rep.fano1.has_value() != *want_fano1) continue;
        if (want_fm && rep.fm_count.has_value() != *want_fm) continue;
        if (want_fm_count && (!rep.fm_count || *rep.fm_count != *want_fm_count)) continue;
        if (lo && rep.d < *lo) continue;
        if (hi && rep.d > *hi) continue;
        out.push_back(rep);
    }
    return out;
}

}  // namespace fourfold::atlas
