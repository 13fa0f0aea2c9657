#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "trispec/constructions.hpp"
#include "trispec/enumeration.hpp"
#include "trispec/extremal.hpp"
#include "trispec/incidence.hpp"
#include "trispec/manifest.hpp"
#include "trispec/matrix_market.hpp"
#include "trispec/report_json.hpp"
#include "trispec/source.hpp"
#include "trispec/spectra.hpp"
#include "trispec/verify.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace trispec;

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kUsage = 2, kNumerical = 3, kIo = 4 };

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

std::pair<int, int> parse_range(const std::string& text, const char* flag) {
    const auto dots = text.find("..");
    try {
        std::size_t used = 0;
        if (dots == std::string::npos) {
            const int v = std::stoi(text, &used);
            if (used != text.size()) throw std::invalid_argument(text);
            return {v, v};
        }
        const auto lo_text = text.substr(0, dots), hi_text = text.substr(dots + 2);
        const int lo = std::stoi(lo_text, &used);
        if (used != lo_text.size()) throw std::invalid_argument(text);
        const int hi = std::stoi(hi_text, &used);
        if (used != hi_text.size()) throw std::invalid_argument(text);
        return {lo, hi};
    } catch (const std::logic_error&) {
        throw UsageError(std::string(flag) + " expects N or LO..HI, got '" + text + "'");
    }
}

unsigned thread_count() {
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("TRISPEC_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v >= 1) return std::min<unsigned>(static_cast<unsigned>(v), hw);
        } catch (const std::logic_error&) {
        }
        throw UsageError(std::string("TRISPEC_THREADS must be a positive integer, got '") + env + "'");
    }
    return hw;
}

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::ios_base::failure("cannot write " + path.string());
    out << text;
    if (!out) throw std::ios_base::failure("write failed: " + path.string());
}

FamilySource load(const std::string& spec, RunManifest& manifest) {
    auto src = load_source(spec, std::cin);
    if (src.family.empty()) throw UsageError("family source '" + spec + "' contains no triangles");
    manifest.add_input(src.text);
    return src;
}

struct Options {
    std::string manifest_path;

    std::string source;
    std::string suite;
    std::string c_range = "3..5";
    std::string b_range = "1..3";
    std::size_t random_count = 0;
    std::int64_t seed = -1;

    int t = 0;
    int max_vertices = 0;
    double budget_seconds = 0.0;
    bool no_prune = false;
    std::string checkpoint;
    bool table = false;
    bool csv = false;

    std::string matrices = "d0,d1,L2down";
    std::string outdir;
};

int cmd_lambda(const Options& o, RunManifest& m) {
    const auto src = load(o.source, m);
    m.set_tolerance("jacobi", JacobiOptions{}.tolerance);
    m.set_tolerance("zero_band_relative", 1e-7);
    std::cout << to_json(spectral_report(src.family)).dump(2) << '\n';
    m.add_output("stdout:spectral_report");
    return kOk;
}

int cmd_construct(const Options& o, RunManifest& m) {
    if (!is_construction_name(o.source)) throw UsageError("not a construction name: " + o.source);
    const auto family = construct(o.source);
    m.add_input(o.source);
    write_family(std::cout, family);
    m.add_output("stdout:family");
    return kOk;
}

int cmd_certify(const Options& o, RunManifest& m) {
    const auto src = load(o.source, m);
    const double lambda = lambda_of(src.family);
    json j;
    j["overlap"] = to_json(check_overlap(src.family, lambda));
    j["counting"] = to_json(check_counting(src.family, lambda));
    const int n = lambda_staircase(static_cast<std::int64_t>(src.family.size()));
    j["vertex_window"] = {{"n", n}, {"verdict", to_string(vertex_window_check(src.family, n, lambda))}};
    std::cout << j.dump(2) << '\n';
    m.set_tolerance("ceil_guard", 1e-9);
    m.add_output("stdout:certificates");
    const bool ok = j["overlap"]["pass"].get<bool>() && j["counting"]["pass"].get<bool>() &&
                    j["vertex_window"]["verdict"] != "fail";
    return ok ? kOk : kCheckFailed;
}

int cmd_verify(const Options& o, RunManifest& m) {
    if (!is_suite(o.suite)) throw UsageError("unknown suite: " + o.suite);
    VerifyOptions vo;
    std::tie(vo.c_min, vo.c_max) = parse_range(o.c_range, "--c");
    std::tie(vo.b_min, vo.b_max) = parse_range(o.b_range, "--b");
    vo.random_count = o.random_count;
    if (o.seed >= 0) vo.seed = static_cast<std::uint64_t>(o.seed);
    if (vo.random_count > 0 && !vo.seed) throw UsageError("--random requires --seed");
    m.add_input("suite=" + o.suite + ";c=" + o.c_range + ";b=" + o.b_range + ";random=" +
                std::to_string(o.random_count) + ";seed=" + std::to_string(o.seed));
    m.set_tolerance("spectrum", 1e-8);
    m.set_tolerance("cluster_radius", 1e-6);
    m.set_tolerance("mingap_relative", 1e-7);
    m.set_tolerance("rigidity", 1e-8);

    const auto report = run_suite(o.suite, vo);
    for (const auto& c : report.checks) {
        std::cout << (c.pass ? "PASS " : "FAIL ") << c.suite << ' ' << c.name;
        if (c.residual != 0.0) std::cout << " residual=" << c.residual;
        std::cout << "  " << c.detail << '\n';
    }
    std::cout << "summary: " << report.checks.size() - report.failures() << '/' << report.checks.size()
              << " passed\n";
    m.add_output("stdout:verify");
    return report.pass() ? kOk : kCheckFailed;
}

int cmd_phi(const Options& o, RunManifest& m) {
    if (o.t < 1) throw UsageError("phi: t must be >= 1");
    PhiSearchOptions po;
    po.max_vertices = o.max_vertices;
    po.budget_seconds = o.budget_seconds;
    po.prune = !o.no_prune;
    po.threads = thread_count();
    if (!o.checkpoint.empty()) po.checkpoint = o.checkpoint;
    m.add_input("phi t=" + std::to_string(o.t) + " max_vertices=" + std::to_string(o.max_vertices) +
                " prune=" + (po.prune ? "1" : "0"));
    m.set_tolerance("ceil_guard", 1e-9);
    m.set_tolerance("incumbent_slack", 1e-9);

    const auto table = phi_table(o.t, po);
    if (o.csv) {
        std::cout << to_csv(table);
    } else if (o.table) {
        std::cout << to_json(table).dump(2) << '\n';
    } else {
        auto j = to_json(table.entries.at(o.t));
        j["Lambda"] = table.running_max().at(o.t);
        std::cout << j.dump(2) << '\n';
    }
    m.add_output(o.csv ? "stdout:phi_csv" : "stdout:phi_json");
    if (po.checkpoint) m.add_output(po.checkpoint->string());
    return kOk;
}

int cmd_export(const Options& o, RunManifest& m) {
    const auto src = load(o.source, m);
    const auto g = support_graph(src.family);
    const auto d0 = build_delta0(g);
    const auto d1 = build_delta1(src.family, g);

    std::vector<std::string> names;
    std::stringstream list(o.matrices);
    for (std::string item; std::getline(list, item, ',');)
        if (!item.empty()) names.push_back(item);
    if (names.empty()) throw UsageError("--matrices is empty");
    std::vector<std::pair<std::string, IntMatrix>> mats;
    for (const auto& name : names) {
        if (name == "d0") mats.emplace_back(name, d0.entries);
        else if (name == "d1") mats.emplace_back(name, d1.entries);
        else mats.emplace_back(name, build_laplacian(parse_laplacian_kind(name), d0, d1).matrix);
    }

    const fs::path dir(o.outdir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir)) throw std::ios_base::failure("cannot create directory " + dir.string());
    for (const auto& [name, mat] : mats) {
        std::ostringstream text;
        write_matrix_market(text, mat, name + " of " + src.spec);
        const auto path = dir / (name + ".mtx");
        write_text(path, text.str());
        m.add_output(path.string());
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectral gaps of triangle families"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kVersion));
    Options o;
    app.add_option("--manifest", o.manifest_path, "Write the run manifest here instead of stderr");

    auto* lambda = app.add_subcommand("lambda", "Spectral report of a family (file, '-', or construction name)");
    lambda->add_option("source", o.source)->required();

    auto* construct_cmd = app.add_subcommand("construct", "Print a named construction in family format");
    construct_cmd->add_option("name", o.source)->required();

    auto* certify = app.add_subcommand("certify", "Overlap, counting and vertex-window certificates");
    certify->add_option("source", o.source)->required();

    auto* verify = app.add_subcommand("verify", "Run an invariant suite");
    verify->add_option("suite", o.suite, "hodge|overlap|counting|rigidity|gcb|mingap|all")->required();
    verify->add_option("--c", o.c_range, "Clique sizes for the T_{c,b} grid, N or LO..HI");
    verify->add_option("--b", o.b_range, "Apex counts for the T_{c,b} grid, N or LO..HI");
    verify->add_option("--random", o.random_count, "Add N seeded random families");
    verify->add_option("--seed", o.seed, "Seed for --random")->check(CLI::NonNegativeNumber);

    auto* phi = app.add_subcommand("phi", "Exact phi(t) by exhaustive search");
    phi->add_option("t", o.t)->required();
    phi->add_option("--max-vertices", o.max_vertices, "Vertex cap per family (default 2t+1)");
    phi->add_option("--budget-seconds", o.budget_seconds, "Stop after this many seconds (result flagged partial)");
    phi->add_flag("--no-prune", o.no_prune, "Disable counting-bound pruning");
    phi->add_option("--checkpoint", o.checkpoint, "Resumable checkpoint file");
    phi->add_flag("--table", o.table, "Print phi(1..t) and Lambda as JSON");
    phi->add_flag("--csv", o.csv, "Print phi(1..t) and Lambda as CSV");

    auto* exp = app.add_subcommand("export", "Write incidence and Laplacian matrices in MatrixMarket format");
    exp->add_option("source", o.source)->required();
    exp->add_option("outdir", o.outdir)->required();
    exp->add_option("--matrices", o.matrices, "Comma list of d0,d1,L0,L1down,L1up,L2down,L1");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    RunManifest manifest(std::vector<std::string>(argv, argv + argc));
    int code = kOk;
    try {
        if (lambda->parsed()) code = cmd_lambda(o, manifest);
        else if (construct_cmd->parsed()) code = cmd_construct(o, manifest);
        else if (certify->parsed()) code = cmd_certify(o, manifest);
        else if (verify->parsed()) code = cmd_verify(o, manifest);
        else if (phi->parsed()) code = cmd_phi(o, manifest);
        else if (exp->parsed()) code = cmd_export(o, manifest);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        code = kUsage;
    } catch (const NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << " (residual " << e.residual() << ")\n";
        code = kNumerical;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "I/O error: " << e.what() << '\n';
        code = kIo;
    } catch (const fs::filesystem_error& e) {
        std::cerr << "I/O error: " << e.what() << '\n';
        code = kIo;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        code = kUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        code = kUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        code = kUsage;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        code = kUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        code = kNumerical;
    }

    manifest.set_exit_code(code);
    const auto record = manifest.to_json().dump();
    try {
        if (!o.manifest_path.empty()) {
            write_text(o.manifest_path, record + "\n");
        } else if (exp->parsed() && code == kOk) {
            write_text(fs::path(o.outdir) / "manifest.json", manifest.to_json().dump(2) + "\n");
        } else {
            std::cerr << record << '\n';
        }
    } catch (const std::ios_base::failure& e) {
        std::cerr << "I/O error: " << e.what() << '\n';
        return kIo;
    }
    return code;
}
