#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fourfold/atlas.hpp"

#include <cstdio>
#include <set>

using namespace fourfold;
using namespace fourfold::atlas;

namespace {

std::vector<long long> row_ds(const std::vector<divisors::DivisorReport>& rows) {
    std::vector<long long> out;
    for (const auto& r : rows) out.push_back(to_int64(r.d));
    return out;
}

AtlasTable small_table(long long lo, long long hi) {
    BuildOptions opts;
    opts.built_at = "2000-01-01T00:00:00Z";
    return build_atlas(lo, hi, opts);
}

}  // namespace

TEST_CASE("build_atlas: row coverage") {
    AtlasTable t = small_table(8, 48);
    CHECK(row_ds(t.rows) ==
          std::vector<long long>{8, 12, 14, 18, 20, 24, 26, 30, 32, 36, 38, 42, 44, 48});
    for (const auto& r : t.rows) CHECK(r.is_divisor);

    std::vector<long long> star_true;
    for (const auto& r : t.rows)
        if (r.star) star_true.push_back(to_int64(r.d));
    CHECK(star_true == std::vector<long long>{14, 26, 38, 42});

    CHECK(small_table(7, 7).rows.empty());
    CHECK_THROWS_WITH_AS(static_cast<void>(build_atlas(5, 4)), doctest::Contains("domain"), Error);
    CHECK_THROWS_AS(static_cast<void>(build_atlas(0, 4)), Error);
}

TEST_CASE("build_atlas: rows match per-d classification and caps are honored") {
    BuildOptions opts;
    opts.built_at = "2000-01-01T00:00:00Z";
    opts.fano_cap = 12;
    AtlasTable t = build_atlas(8, 60, opts);
    for (const auto& r : t.rows) CHECK(r == divisors::classify(r.d, 12));
    CHECK(t.meta.fano_cap == 12);
    CHECK(t.meta.version == tool_version());
}

TEST_CASE("csv export: golden lines") {
    AtlasTable t = small_table(20, 20);
    REQUIRE(t.rows.size() == 1);
    CHECK(report_to_csv_line(t.rows[0]) == "20,true,false,div-by-4,,,,,,false,2");

    t = small_table(42, 42);
    REQUIRE(t.rows.size() == 1);
    CHECK(report_to_csv_line(t.rows[0]) == "42,true,true,,1,42,4,4,1,false,1");

    t = small_table(8, 8);
    REQUIRE(t.rows.size() == 1);
    CHECK(report_to_csv_line(t.rows[0]) == "8,true,false,div-by-4,2,2,0,,,true,1");

    t = small_table(38, 38);  // a witness with a > 1: 38 * 49 = 2*900+60+2
    REQUIRE(t.rows.size() == 1);
    CHECK(report_to_csv_line(t.rows[0]) == "38,true,true,,1,38,7,30,7,false,1");

    AtlasTable empty = small_table(7, 7);
    CHECK(export_csv(empty) == csv_header() + "\n");
}

TEST_CASE("csv round-trips rows exactly") {
    AtlasTable t = small_table(8, 120);
    AtlasTable back = import_csv(export_csv(t));
    CHECK(back.rows == t.rows);
    CHECK(back.d_min == 8);
    CHECK(back.d_max == 120);

    AtlasTable empty = import_csv(export_csv(small_table(7, 7)));
    CHECK(empty.rows.empty());
}

TEST_CASE("json round-trips the full table") {
    AtlasTable t = small_table(8, 90);
    AtlasTable back = import_json(export_json(t));
    CHECK(back == t);
}

TEST_CASE("imports re-validate witnesses and reject corruption") {
    AtlasTable t = small_table(8, 48);
    std::string csv = export_csv(t);

    // tamper with a bulles witness: 8,...,2,2,0,... -> f=3
    std::string bad = csv;
    auto pos = bad.find("8,true,false,div-by-4,2,2,0");
    REQUIRE(pos != std::string::npos);
    bad.replace(pos, 27, "8,true,false,div-by-4,3,2,0");
    CHECK_THROWS_WITH_AS(static_cast<void>(import_csv(bad)), doctest::Contains("corrupt"), Error);

    // reordered rows are rejected
    std::string json = export_json(t);
    auto doc = nlohmann::json::parse(json);
    std::swap(doc["rows"][0], doc["rows"][1]);
    CHECK_THROWS_WITH_AS(static_cast<void>(import_json(doc.dump())),
                         doctest::Contains("corrupt"), Error);

    // a deleted row leaves a gap in the covered range
    std::string gapped = csv;
    auto row14 = gapped.find("\n14,");
    auto row18 = gapped.find("\n18,");
    REQUIRE(row14 != std::string::npos);
    gapped.erase(row14, row18 - row14);
    CHECK_THROWS_WITH_AS(static_cast<void>(import_csv(gapped)), doctest::Contains("corrupt"),
                         Error);

    // same through the JSON document, where the stored range sets the bounds
    auto doc2 = nlohmann::json::parse(export_json(t));
    doc2["rows"].erase(doc2["rows"].size() - 1);  // drop d = 48, d_max still 48
    CHECK_THROWS_WITH_AS(static_cast<void>(import_json(doc2.dump())),
                         doctest::Contains("corrupt"), Error);

    std::string bad_header = "x" + csv;
    CHECK_THROWS_WITH_AS(static_cast<void>(import_csv(bad_header)), doctest::Contains("corrupt"),
                         Error);

    CHECK_THROWS_WITH_AS(static_cast<void>(import_json("{nope")), doctest::Contains("corrupt"),
                         Error);
}

TEST_CASE("query: filters and errors") {
    AtlasTable t = small_table(8, 48);

    auto rows = query(t, {});
    CHECK(rows == t.rows);

    rows = query(t, {{"fm_count", "1"}});
    auto ds = row_ds(rows);
    std::set<long long> got(ds.begin(), ds.end());
    CHECK(got == std::set<long long>{8, 12, 14, 24, 26, 30, 32, 38, 42, 48});
    for (long long want : {8, 12, 42}) CHECK(got.count(want) == 1);
    // cross-check against per-row recomputation
    for (const auto& r : t.rows) {
        bool expect = r.fm_count.has_value() && *r.fm_count == 1;
        CHECK(expect == (got.count(to_int64(r.d)) == 1));
    }

    rows = query(t, {{"star", "true"}});
    CHECK(row_ds(rows) == std::vector<long long>{14, 26, 38, 42});

    rows = query(t, {{"bulles", "absent"}});
    CHECK(row_ds(rows) == std::vector<long long>{20, 30, 44});

    rows = query(t, {{"star", "true"}, {"d_min", "20"}, {"d_max", "42"}});
    CHECK(row_ds(rows) == std::vector<long long>{26, 38, 42});

    rows = query(t, {{"fm", "absent"}});
    CHECK(row_ds(rows) == std::vector<long long>{18, 36});  // 9 divides both

    CHECK_THROWS_WITH_AS(static_cast<void>(query(t, {{"nope", "1"}})),
                         doctest::Contains("filter"), Error);
    CHECK_THROWS_WITH_AS(static_cast<void>(query(t, {{"star", "maybe"}})),
                         doctest::Contains("filter"), Error);
}

TEST_CASE("query: star and fano2 jointly pick out 98 on [8,200]") {
    AtlasTable t = small_table(8, 200);
    auto rows = query(t, {{"star", "true"}, {"fano2", "true"}});
    CHECK(row_ds(rows) == std::vector<long long>{98});
    // 98 = 2 * 7^2: star holds (7 ≡ 1 mod 3), fm hypotheses do not
    CHECK_FALSE(rows[0].fm_count.has_value());
}

TEST_CASE("parallel builds match serial builds byte for byte") {
    BuildOptions serial;
    serial.built_at = "2000-01-01T00:00:00Z";
    BuildOptions parallel = serial;
    parallel.jobs = 8;

    AtlasTable a = build_atlas(8, 400, serial);
    AtlasTable b = build_atlas(8, 400, parallel);
    CHECK(a == b);
    CHECK(export_csv(a) == export_csv(b));
    CHECK(export_json(a) == export_json(b));
}

TEST_CASE("rebuilding a sub-range reproduces the slice") {
    AtlasTable whole = small_table(8, 160);
    AtlasTable part = small_table(50, 100);
    std::vector<divisors::DivisorReport> slice;
    for (const auto& r : whole.rows)
        if (r.d >= 50 && r.d <= 100) slice.push_back(r);
    CHECK(part.rows == slice);
}

TEST_CASE("file save/load dispatches on extension") {
    AtlasTable t = small_table(8, 48);
    save_file(t, "atlas_test_tmp.csv", "csv");
    save_file(t, "atlas_test_tmp.json", "json");
    CHECK(load_file("atlas_test_tmp.csv").rows == t.rows);
    CHECK(load_file("atlas_test_tmp.json") == t);
    CHECK_THROWS_WITH_AS(static_cast<void>(load_file("definitely_missing_file.csv")),
                         doctest::Contains("io"), Error);
    std::remove("atlas_test_tmp.csv");
    std::remove("atlas_test_tmp.json");
}
