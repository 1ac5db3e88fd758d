// Command-line frontend. Exit codes: 0 success, 1 domain error
// (not-applicable hypotheses, degenerate forms, I/O), 2 usage error.
#include "fourfold/atlas.hpp"
#include "fourfold/catalog.hpp"
#include "fourfold/divisors.hpp"
#include "fourfold/fm.hpp"
#include "fourfold/intlat.hpp"
#include "fourfold/towers.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iomanip>
#include <iostream>
#include <optional>
#include <string>

using fourfold::Int;
using fourfold::IntMatrix;
using fourfold::intlat::GramMatrix;
using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Int parse_integer_arg(const std::string& text, const std::string& what) {
    try {
        return fourfold::parse_int(text);
    } catch (const fourfold::Error&) {
        throw UsageError(what + " must be an integer, got '" + text + "'");
    }
}

Int parse_positive_arg(const std::string& text, const std::string& what) {
    Int v = parse_integer_arg(text, what);
    if (v < 1) throw UsageError(what + " must be positive, got '" + text + "'");
    return v;
}

IntMatrix matrix_from_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw UsageError(std::string("malformed matrix: ") + e.what());
    }
    if (!j.is_array()) throw UsageError("malformed matrix: expected an array of rows");
    std::vector<std::vector<Int>> rows;
    for (const auto& row : j) {
        if (!row.is_array()) throw UsageError("malformed matrix: expected an array of rows");
        std::vector<Int> r;
        for (const auto& v : row) {
            if (v.is_number_integer())
                r.emplace_back(v.get<long long>());
            else if (v.is_string())
                r.emplace_back(parse_integer_arg(v.get<std::string>(), "matrix entry"));
            else
                throw UsageError("malformed matrix: entries must be integers");
        }
        rows.push_back(std::move(r));
    }
    try {
        return IntMatrix::from_rows(rows);
    } catch (const fourfold::Error& e) {
        throw UsageError(std::string("malformed matrix: ") + e.what());
    }
}

json matrix_to_json(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(fourfold::atlas::int_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

void print_report(const fourfold::divisors::DivisorReport& rep, const Int& cap) {
    auto boolean = [](bool b) { return b ? "true" : "false"; };
    std::cout << "d               " << rep.d << "\n";
    std::cout << "hassett-divisor " << boolean(rep.is_divisor) << "\n";
    std::cout << "star            " << boolean(rep.star);
    if (rep.star_failure) std::cout << " (" << *rep.star_failure << ")";
    std::cout << "\n";
    std::cout << "bulles          ";
    if (rep.bulles)
        std::cout << "f=" << rep.bulles->f << " g=" << rep.bulles->g << " n=" << rep.bulles->n;
    else
        std::cout << "absent";
    std::cout << "\n";
    std::cout << "fano1           ";
    if (rep.fano1)
        std::cout << "n=" << rep.fano1->n << " a=" << rep.fano1->a;
    else
        std::cout << "absent (no witness <= cap " << cap << ")";
    std::cout << "\n";
    std::cout << "fano2           " << boolean(rep.fano2) << "\n";
    std::cout << "fm-count        ";
    if (rep.fm_count)
        std::cout << *rep.fm_count;
    else
        std::cout << "not-applicable";
    std::cout << "\n";
}

struct LatticeInput {
    std::string matrix_text;
    std::string named;
    std::string a_text, b_text;
};

GramMatrix named_gram(const LatticeInput& in) {
    using namespace fourfold::catalog;
    if (in.named == "kab") {
        if (in.a_text.empty() || in.b_text.empty())
            throw UsageError("--named kab requires --a and --b");
        return k_ab(parse_integer_arg(in.a_text, "--a"), parse_integer_arg(in.b_text, "--b"));
    }
    if (in.named == "admissible") {
        if (in.b_text.empty()) throw UsageError("--named admissible requires --b");
        return admissible_a_matrix(parse_integer_arg(in.b_text, "--b"));
    }
    if (in.named == "scroll-kx") return scroll_kx_gram();
    if (in.named == "scroll-ky") return scroll_ky_gram();
    if (in.named == "eckardt") return eckardt_gram();
    if (in.named == "e8-2") return e8_2();
    throw UsageError("unknown --named matrix '" + in.named +
                     "' (expected kab, admissible, scroll-kx, scroll-ky, eckardt or e8-2)");
}

IntMatrix lattice_matrix(const LatticeInput& in) {
    if (!in.named.empty() && !in.matrix_text.empty())
        throw UsageError("give either a matrix argument or --named, not both");
    if (!in.named.empty()) return named_gram(in).entries();
    if (!in.matrix_text.empty()) return matrix_from_text(in.matrix_text);
    throw UsageError("missing matrix: pass JSON rows or --named");
}

GramMatrix lattice_gram(const LatticeInput& in) {
    if (!in.named.empty() && in.matrix_text.empty()) return named_gram(in);
    IntMatrix m = lattice_matrix(in);
    try {
        return GramMatrix(std::move(m));
    } catch (const fourfold::Error& e) {
        throw UsageError(e.what());  // non-symmetric input is a usage problem
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic invariants of special cubic fourfolds"};
    app.require_subcommand(1);
    app.fallthrough();  // lets --json appear after the subcommand
    app.set_version_flag("--version", fourfold::atlas::tool_version());
    bool as_json = false;
    app.add_flag("--json", as_json, "emit machine-readable JSON");

    // check
    auto* cmd_check = app.add_subcommand("check", "classify a discriminant d");
    std::string check_d;
    std::string check_cap = std::to_string(fourfold::divisors::default_fano_cap);
    cmd_check->add_option("d", check_d, "discriminant to classify")->required();
    cmd_check->add_option("--cap", check_cap, "search cap for the fano witness n")
        ->capture_default_str();
    cmd_check->callback([&] {
        Int d = parse_positive_arg(check_d, "d");
        Int cap = parse_positive_arg(check_cap, "--cap");
        auto rep = fourfold::divisors::classify(d, cap);
        if (as_json)
            emit(fourfold::atlas::report_to_json(rep));
        else
            print_report(rep, cap);
    });

    // count-fm
    auto* cmd_fm = app.add_subcommand("count-fm", "Fourier-Mukai partner count for d");
    std::string fm_d;
    cmd_fm->add_option("d", fm_d, "discriminant")->required();
    cmd_fm->callback([&] {
        Int d = parse_positive_arg(fm_d, "d");
        auto c = fourfold::fm::fm_partner_count(d);
        if (as_json) {
            emit(json{{"d", fourfold::atlas::int_to_json(c.d)},
                      {"a", c.two_exponent},
                      {"k", c.odd_prime_count},
                      {"m", fourfold::atlas::int_to_json(c.m)},
                      {"count", fourfold::atlas::int_to_json(c.count)}});
        } else {
            std::cout << "d     " << c.d << "\n"
                      << "a     " << c.two_exponent << "\n"
                      << "k     " << c.odd_prime_count << "\n"
                      << "m     " << c.m << "\n"
                      << "count " << c.count << "\n";
        }
    });

    // towers
    auto* cmd_towers = app.add_subcommand("towers", "order-3 quotient genus towers up to n_max");
    std::string towers_nmax;
    cmd_towers->add_option("n_max", towers_nmax, "largest n to scan (n >= 2)")->required();
    cmd_towers->callback([&] {
        Int n_max = parse_integer_arg(towers_nmax, "n_max");
        if (n_max < 2) throw UsageError("n_max must be at least 2, got '" + towers_nmax + "'");
        auto entries = fourfold::towers::enumerate_towers(n_max);
        if (as_json) {
            json arr = json::array();
            for (const auto& e : entries)
                arr.push_back(
                    json{{"n", fourfold::atlas::int_to_json(e.n)},
                         {"g", fourfold::atlas::int_to_json(e.g)},
                         {"deg6d", fourfold::atlas::int_to_json(e.deg6d)},
                         {"d", fourfold::atlas::int_to_json(e.d)},
                         {"gprime", fourfold::atlas::int_to_json(e.gprime)},
                         {"m", fourfold::atlas::int_to_json(e.m)},
                         {"divisor_pair",
                          json::array({fourfold::atlas::int_to_json(e.divisor_pair.first),
                                       fourfold::atlas::int_to_json(e.divisor_pair.second)})}});
            emit(arr);
        } else {
            std::cout << std::left << std::setw(6) << "n" << std::setw(8) << "g" << std::setw(8)
                      << "6d" << std::setw(8) << "d" << std::setw(8) << "g'" << std::setw(6)
                      << "m" << "pair\n";
            for (const auto& e : entries)
                std::cout << std::left << std::setw(6) << e.n.str() << std::setw(8) << e.g.str()
                          << std::setw(8) << e.deg6d.str() << std::setw(8) << e.d.str()
                          << std::setw(8) << e.gprime.str() << std::setw(6) << e.m.str() << "("
                          << e.divisor_pair.first << ", " << e.divisor_pair.second << ")\n";
        }
    });

    // lattice
    auto* cmd_lattice = app.add_subcommand("lattice", "exact lattice computations");
    cmd_lattice->require_subcommand(1);
    LatticeInput lin;
    std::string ambient_text, generators_text, p_text, q_text;
    bool with_transforms = false;

    auto add_matrix_inputs = [&](CLI::App* sub, bool positional = true) {
        if (positional) sub->add_option("matrix", lin.matrix_text, "matrix as JSON rows");
        sub->add_option("--named", lin.named,
                        "named form: kab, admissible, scroll-kx, scroll-ky, eckardt, e8-2");
        sub->add_option("--a", lin.a_text, "parameter a for --named kab");
        sub->add_option("--b", lin.b_text, "parameter b for --named kab/admissible");
    };

    auto* lat_det = cmd_lattice->add_subcommand("det", "exact determinant");
    add_matrix_inputs(lat_det);
    lat_det->callback([&] {
        Int det = fourfold::intlat::determinant(lattice_matrix(lin));
        if (as_json)
            emit(json{{"det", fourfold::atlas::int_to_json(det)}});
        else
            std::cout << det << "\n";
    });

    auto* lat_snf = cmd_lattice->add_subcommand("snf", "Smith normal form");
    add_matrix_inputs(lat_snf);
    lat_snf->add_flag("--transforms", with_transforms, "also print the unimodular transforms");
    lat_snf->callback([&] {
        auto snf = fourfold::intlat::smith_normal_form(lattice_matrix(lin));
        if (as_json) {
            json j{{"d", matrix_to_json(snf.d)}, {"elementary_divisors", json::array()}};
            for (const auto& e : snf.elementary_divisors)
                j["elementary_divisors"].push_back(fourfold::atlas::int_to_json(e));
            if (with_transforms) {
                j["left"] = matrix_to_json(snf.left);
                j["right"] = matrix_to_json(snf.right);
            }
            emit(j);
        } else {
            std::cout << snf.d;
            if (with_transforms) std::cout << "left:\n" << snf.left << "right:\n" << snf.right;
        }
    });

    auto* lat_disc = cmd_lattice->add_subcommand("disc-group", "discriminant group");
    add_matrix_inputs(lat_disc);
    lat_disc->callback([&] {
        auto group = fourfold::intlat::discriminant_group(lattice_gram(lin));
        if (as_json) {
            json j{{"invariant_factors", json::array()}};
            for (const auto& e : group.invariant_factors)
                j["invariant_factors"].push_back(fourfold::atlas::int_to_json(e));
            emit(j);
        } else if (group.invariant_factors.empty()) {
            std::cout << "trivial\n";
        } else {
            for (std::size_t i = 0; i < group.invariant_factors.size(); ++i)
                std::cout << (i ? " " : "") << group.invariant_factors[i];
            std::cout << "\n";
        }
    });

    auto* lat_posdef = cmd_lattice->add_subcommand("posdef", "positive definiteness");
    add_matrix_inputs(lat_posdef);
    lat_posdef->callback([&] {
        bool pd = fourfold::intlat::is_positive_definite(lattice_gram(lin));
        if (as_json)
            emit(json{{"positive_definite", pd}});
        else
            std::cout << (pd ? "true" : "false") << "\n";
    });

    auto add_spec_inputs = [&](CLI::App* sub) {
        sub->add_option("--ambient", ambient_text, "ambient Gram matrix as JSON rows");
        sub->add_option("--generators", generators_text, "generator rows as JSON")->required();
        sub->add_option("--named", lin.named, "use a named form as the ambient");
        sub->add_option("--a", lin.a_text, "parameter a for --named kab");
        sub->add_option("--b", lin.b_text, "parameter b for --named kab/admissible");
    };

    auto make_spec_from_cli = [&]() {
        GramMatrix ambient;
        if (!lin.named.empty()) {
            if (!ambient_text.empty())
                throw UsageError("give either --ambient or --named, not both");
            ambient = named_gram(lin);
        } else if (!ambient_text.empty()) {
            try {
                ambient = GramMatrix(matrix_from_text(ambient_text));
            } catch (const fourfold::Error& e) {
                throw UsageError(e.what());
            }
        } else {
            throw UsageError("missing ambient: pass --ambient or --named");
        }
        IntMatrix gens = matrix_from_text(generators_text);
        if (gens.rows() == 0) gens = IntMatrix(0, ambient.dim());
        if (gens.cols() != ambient.dim())
            throw UsageError("malformed matrix: generator rows must have length " +
                             std::to_string(ambient.dim()));
        return fourfold::intlat::SublatticeSpec{std::move(ambient), std::move(gens)};
    };

    auto* lat_gram =
        cmd_lattice->add_subcommand("gram", "Gram of generators under an ambient form");
    add_spec_inputs(lat_gram);
    lat_gram->callback([&] {
        auto g = fourfold::intlat::gram_from_generators(make_spec_from_cli());
        if (as_json)
            emit(json{{"gram", matrix_to_json(g.entries())}});
        else
            std::cout << g.entries();
    });

    auto* lat_comp = cmd_lattice->add_subcommand("complement", "saturated orthogonal complement");
    add_spec_inputs(lat_comp);
    lat_comp->callback([&] {
        auto basis = fourfold::intlat::orthogonal_complement(make_spec_from_cli());
        if (as_json)
            emit(json{{"basis", matrix_to_json(basis)}});
        else if (basis.rows() == 0)
            std::cout << "(empty)\n";
        else
            std::cout << basis;
    });

    auto* lat_prim = cmd_lattice->add_subcommand("primitive", "saturation test for generators");
    add_spec_inputs(lat_prim);
    lat_prim->callback([&] {
        bool prim = fourfold::intlat::is_primitive(make_spec_from_cli());
        if (as_json)
            emit(json{{"primitive", prim}});
        else
            std::cout << (prim ? "true" : "false") << "\n";
    });

    auto* lat_lab = cmd_lattice->add_subcommand("labelling", "discriminant of <h^2, v>");
    lat_lab->add_option("--p", p_text, "v . h^2")->required();
    lat_lab->add_option("--q", q_text, "v . v")->required();
    lat_lab->callback([&] {
        Int disc = fourfold::catalog::labelling_discriminant(
            {parse_integer_arg(p_text, "--p"), parse_integer_arg(q_text, "--q")});
        if (as_json)
            emit(json{{"discriminant", fourfold::atlas::int_to_json(disc)}});
        else
            std::cout << disc << "\n";
    });

    auto* lat_show = cmd_lattice->add_subcommand("show", "print a named matrix");
    add_matrix_inputs(lat_show, false);
    lat_show->callback([&] {
        IntMatrix m = named_gram(lin).entries();
        if (as_json)
            emit(json{{"matrix", matrix_to_json(m)}});
        else
            std::cout << m;
    });

    // atlas
    auto* cmd_atlas = app.add_subcommand("atlas", "build, query and convert divisor tables");
    cmd_atlas->require_subcommand(1);

    auto* atlas_build = cmd_atlas->add_subcommand("build", "classify every d in a range");
    std::string bd_min, bd_max, out_path, out_format = "csv", stamp;
    std::string build_cap = std::to_string(fourfold::divisors::default_fano_cap);
    unsigned jobs = 1;
    atlas_build->add_option("d_min", bd_min)->required();
    atlas_build->add_option("d_max", bd_max)->required();
    atlas_build->add_option("-o,--output", out_path, "output file")->required();
    atlas_build->add_option("--format", out_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    atlas_build->add_option("--jobs", jobs, "parallel workers")->check(CLI::PositiveNumber);
    atlas_build->add_option("--cap", build_cap, "search cap for the fano witness n")
        ->capture_default_str();
    atlas_build->add_option("--stamp", stamp, "fixed build timestamp (for reproducible output)");
    atlas_build->callback([&] {
        fourfold::atlas::BuildOptions opts;
        opts.fano_cap = parse_positive_arg(build_cap, "--cap");
        opts.jobs = jobs;
        opts.built_at = stamp;
        auto table = fourfold::atlas::build_atlas(parse_positive_arg(bd_min, "d_min"),
                                                  parse_positive_arg(bd_max, "d_max"), opts);
        fourfold::atlas::save_file(table, out_path, out_format);
        std::cout << "wrote " << table.rows.size() << " rows to " << out_path << "\n";
    });

    auto* atlas_query = cmd_atlas->add_subcommand("query", "filter rows of a stored table");
    std::string in_path, f_star, f_fano2, f_bulles, f_fano1, f_fm, f_fm_count, f_dmin, f_dmax;
    atlas_query->add_option("file", in_path, "table file (csv or json)")->required();
    atlas_query->add_option("--star", f_star)->check(CLI::IsMember({"true", "false"}));
    atlas_query->add_option("--fano2", f_fano2)->check(CLI::IsMember({"true", "false"}));
    atlas_query->add_option("--bulles", f_bulles)->check(CLI::IsMember({"present", "absent"}));
    atlas_query->add_option("--fano1", f_fano1)->check(CLI::IsMember({"present", "absent"}));
    atlas_query->add_option("--fm", f_fm)->check(CLI::IsMember({"present", "absent"}));
    atlas_query->add_option("--fm-count", f_fm_count, "exact partner count");
    atlas_query->add_option("--d-min", f_dmin);
    atlas_query->add_option("--d-max", f_dmax);
    atlas_query->callback([&] {
        auto table = fourfold::atlas::load_file(in_path);
        std::vector<std::pair<std::string, std::string>> conds;
        if (!f_star.empty()) conds.emplace_back("star", f_star);
        if (!f_fano2.empty()) conds.emplace_back("fano2", f_fano2);
        if (!f_bulles.empty()) conds.emplace_back("bulles", f_bulles);
        if (!f_fano1.empty()) conds.emplace_back("fano1", f_fano1);
        if (!f_fm.empty()) conds.emplace_back("fm", f_fm);
        if (!f_fm_count.empty()) conds.emplace_back("fm_count", f_fm_count);
        if (!f_dmin.empty()) conds.emplace_back("d_min", f_dmin);
        if (!f_dmax.empty()) conds.emplace_back("d_max", f_dmax);
        auto rows = fourfold::atlas::query(table, conds);
        if (as_json) {
            json arr = json::array();
            for (const auto& r : rows) arr.push_back(fourfold::atlas::report_to_json(r));
            emit(arr);
        } else {
            std::cout << fourfold::atlas::csv_header() << "\n";
            for (const auto& r : rows) std::cout << fourfold::atlas::report_to_csv_line(r) << "\n";
        }
    });

    auto* atlas_export = cmd_atlas->add_subcommand("export", "re-serialize a stored table");
    std::string exp_in, exp_out, exp_format = "json";
    atlas_export->add_option("file", exp_in, "table file (csv or json)")->required();
    atlas_export->add_option("-o,--output", exp_out, "output file")->required();
    atlas_export->add_option("--format", exp_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    atlas_export->callback([&] {
        auto table = fourfold::atlas::load_file(exp_in);
        fourfold::atlas::save_file(table, exp_out, exp_format);
        std::cout << "wrote " << table.rows.size() << " rows to " << exp_out << "\n";
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const fourfold::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
