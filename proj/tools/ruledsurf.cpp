// Command-line front end: single-class queries, region scans, decompositions
// and the self-verification suite.
//
// Exit codes: 0 success, 1 invariant violation, 2 usage or input error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ruledsurf/presentation.hpp"
#include "ruledsurf/render.hpp"
#include "ruledsurf/report.hpp"
#include "ruledsurf/surface.hpp"
#include "ruledsurf/verify.hpp"

namespace {

using namespace ruledsurf;

constexpr int kUsageError = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Writes to --out when given, stdout otherwise.
void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw UsageError("cannot open output file '" + out_path + "'");
    file << text;
}

SurfaceModel surface_from(std::int64_t e) {
    try {
        return SurfaceModel(e);
    } catch (const std::invalid_argument& ex) {
        throw UsageError(ex.what());
    }
}

int cmd_classify(std::int64_t e, std::int64_t a, std::int64_t b, const std::string& tag_text,
                 const std::string& out) {
    const SurfaceModel s = surface_from(e);
    BundleRef ref{{a, b}, BoundaryTag::Generic};
    if (!tag_text.empty()) {
        auto tag = parse_boundary_tag(tag_text);
        if (!tag) throw UsageError("unknown tag '" + tag_text + "' (expected zero|eta1|eta2|eta3|generic)");
        ref.tag = *tag;
    }
    try {
        validate(ref, s);
    } catch (const std::invalid_argument& ex) {
        throw UsageError(ex.what());
    }
    emit(classify_document(ref, s).dump(2) + "\n", out);
    return 0;
}

int cmd_region(std::int64_t e, const std::string& a_text, const std::string& b_text, const std::string& format,
               const std::string& out) {
    const SurfaceModel s = surface_from(e);
    IntRange a_range;
    IntRange b_range;
    std::vector<RegionCell> cells;
    try {
        a_range = parse_range(a_text);
        b_range = parse_range(b_text);
        cells = scan_region(a_range, b_range, s);
    } catch (const std::invalid_argument& ex) {
        throw UsageError(ex.what());
    } catch (const std::length_error& ex) {
        throw UsageError(ex.what());
    }
    std::string text;
    if (format == "json") {
        for (const auto& cell : cells) text += to_json(cell, s).dump() + "\n";
    } else if (format == "ascii") {
        text = render_ascii(cells, a_range, b_range, s);
    } else {
        text = render_svg(cells, a_range, b_range, s);
    }
    emit(text, out);
    return 0;
}

int cmd_decompose(std::int64_t e, std::int64_t a, std::int64_t b, const std::string& mode, const std::string& out) {
    const SurfaceModel s = surface_from(e);
    const auto m = mode == "brute" ? DecomposeMode::Brute : DecomposeMode::Constructive;
    try {
        emit(decompose_document({a, b}, s, m).dump(2) + "\n", out);
    } catch (const std::length_error& ex) {
        throw UsageError(ex.what());
    }
    return 0;
}

int cmd_verify(const std::vector<std::int64_t>& e_values, std::int64_t window, std::uint64_t seed,
               const std::string& out) {
    VerifyConfig config;
    config.e_values = e_values;
    config.window = window;
    config.seed = seed;
    VerifyReport report;
    try {
        report = run_verify(config);
    } catch (const std::invalid_argument& ex) {
        throw UsageError(ex.what());
    }
    std::cout << "verify: window " << window << ", seed " << seed << ", e in {";
    for (std::size_t i = 0; i < e_values.size(); ++i) std::cout << (i ? ", " : "") << e_values[i];
    std::cout << "}\n";
    for (const auto& check : report.checks) {
        std::cout << (check.passed ? "PASS " : "FAIL ") << check.name << " (" << check.cases << " cases)\n";
        for (const auto& ce : check.counterexamples) std::cout << "  counterexample: " << ce << "\n";
    }
    std::cout << (report.passed() ? "all checks passed" : "verification FAILED") << " in "
              << static_cast<long long>(report.wall_time_ms) << " ms\n";
    if (!out.empty()) emit(to_json(report).dump(2) + "\n", out);
    return exit_code(report);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Line-bundle classification on elliptic ruled surfaces"};
    app.require_subcommand(1);

    std::int64_t e = -1;
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::string tag;
    std::string out;

    auto* classify = app.add_subcommand("classify", "Classify one numerical class aC0 + bf");
    classify->add_option("--e", e, "Invariant e of the surface (>= -1)")->required();
    classify->add_option("--a", a, "Coefficient of C0")->required();
    classify->add_option("--b", b, "Coefficient of f")->required();
    classify->add_option("--tag", tag, "Member of a (2n,-n) class on e = -1: zero|eta1|eta2|eta3|generic");
    classify->add_option("--out", out, "Write to PATH instead of stdout");

    std::string a_range;
    std::string b_range;
    std::string format = "json";
    auto* region = app.add_subcommand("region", "Classify every class in a lattice window");
    region->add_option("--e", e, "Invariant e of the surface (>= -1)")->required();
    region->add_option("--a-range", a_range, "lo:hi")->required();
    region->add_option("--b-range", b_range, "lo:hi")->required();
    region->add_option("--format", format, "json|ascii|svg")->check(CLI::IsMember({"json", "ascii", "svg"}));
    region->add_option("--out", out, "Write to PATH instead of stdout");

    std::string mode = "constructive";
    auto* decompose = app.add_subcommand("decompose", "Split a class into two all-bpf classes");
    decompose->add_option("--e", e, "Invariant e of the surface (>= -1)")->required();
    decompose->add_option("--a", a, "Coefficient of C0")->required();
    decompose->add_option("--b", b, "Coefficient of f")->required();
    decompose->add_option("--mode", mode, "constructive|brute")->check(CLI::IsMember({"constructive", "brute"}));
    decompose->add_option("--out", out, "Write to PATH instead of stdout");

    std::vector<std::int64_t> e_values{-1, 0, 1, 2};
    std::int64_t window = 40;
    std::uint64_t seed = 1;
    auto* verify = app.add_subcommand("verify", "Run the invariant suites");
    verify->add_option("--e", e_values, "Comma-separated e values")->delimiter(',');
    verify->add_option("--window", window, "Half-width of the lattice window (>= 4)");
    verify->add_option("--seed", seed, "Seed for the random corollary tuples");
    verify->add_option("--out", out, "Also write the JSON report to PATH");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& ex) {
        return app.exit(ex);
    } catch (const CLI::CallForAllHelp& ex) {
        return app.exit(ex);
    } catch (const CLI::ParseError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kUsageError;
    }

    try {
        if (*classify) return cmd_classify(e, a, b, tag, out);
        if (*region) return cmd_region(e, a_range, b_range, format, out);
        if (*decompose) return cmd_decompose(e, a, b, mode, out);
        if (*verify) return cmd_verify(e_values, window, seed, out);
    } catch (const UsageError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kUsageError;
    } catch (const std::overflow_error& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kUsageError;
    }
    return kUsageError;
}
