#include "axo/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "axo/criterion.hpp"
#include "axo/generator.hpp"
#include "axo/io.hpp"
#include "axo/spectrum.hpp"

namespace axo::cli {

namespace {

std::string read_all(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open input file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct ToleranceFlags {
    std::optional<double> rel, abs, rank;

    void attach(CLI::App& cmd) {
        cmd.add_option("--tol-rel", rel, "Relative singular-value clustering tolerance");
        cmd.add_option("--tol-abs", abs, "Absolute clustering floor");
        cmd.add_option("--tol-rank", rank, "Numerical-rank threshold");
    }

    criterion::ToleranceConfig apply(criterion::ToleranceConfig tol) const {
        if (rel) tol.tau_rel = *rel;
        if (abs) tol.tau_abs = *abs;
        if (rank) tol.tau_rank = *rank;
        tol.validate();
        return tol;
    }
};

InputFormat parse_format(const std::string& name) {
    return name == "json" ? InputFormat::json : InputFormat::text;
}

int run_analyze(const std::string& input, const std::string& format, const ToleranceFlags& flags,
                bool pretty) {
    const InputDocument doc = parse_input(read_all(input), parse_format(format));
    const criterion::ToleranceConfig tol = flags.apply(doc.tolerances());
    const criterion::CoordinateMatrix cm(doc.matrix);
    std::cout << format_report(criterion::analyze(cm, tol), pretty);
    return 0;
}

int run_spectrum(const std::string& input, const std::string& format,
                 const ToleranceFlags& flags) {
    const InputDocument doc = parse_input(read_all(input), parse_format(format));
    const criterion::ToleranceConfig tol = flags.apply(doc.tolerances());
    const criterion::CoordinateMatrix cm(doc.matrix);
    if (!criterion::validate_preconditions(cm, tol).central) {
        std::cerr << "input mapping is not central; the reduced matrix is undefined\n";
        return 0;
    }
    const std::vector<double> sigma = linalg::singular_values(criterion::reduce(cm).a_tilde);
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        if (i) std::cout << ' ';
        std::cout << format_double(sigma[i]);
    }
    std::cout << '\n';
    return 0;
}

int run_generate(std::size_t n, std::size_t m, const std::string& kind,
                 const std::vector<double>& sigma, std::uint64_t seed, bool pretty) {
    const generator::Seed s{seed};
    std::optional<generator::GeneratedInstance> inst;
    if (kind == "central") {
        inst = generator::gen_geometric_central(n, m, s);
    } else if (kind == "orthogonal") {
        inst = generator::gen_geometric_orthogonal(n, m, s);
    } else if (kind == "spectrum") {
        if (sigma.empty()) throw ParseError("--kind spectrum requires --sigma");
        inst = generator::gen_prescribed_spectrum(n, m, sigma, s);
    } else {
        inst = generator::gen_random_valid(n, m, s);
    }
    std::cout << format_instance(*inst);
    std::cout << format_report(criterion::analyze(inst->cm), pretty);
    return 0;
}

int run_batch(const std::string& input) {
    const std::string bytes = read_all(input);
    std::size_t line_no = 0;
    std::size_t pos = 0;
    std::string out;
    while (pos < bytes.size()) {
        std::size_t eol = bytes.find('\n', pos);
        if (eol == std::string_view::npos) eol = bytes.size();
        const std::string_view line(bytes.data() + pos, eol - pos);
        ++line_no;
        pos = eol + 1;
        if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
        try {
            const InputDocument doc = parse_input(line, InputFormat::json);
            const criterion::CoordinateMatrix cm(doc.matrix);
            out += format_report(criterion::analyze(cm, doc.tolerances()), false);
        } catch (const ParseError& e) {
            throw ParseError("input line " + std::to_string(line_no) + ": " + e.what());
        } catch (const DimensionError& e) {
            throw ParseError("input line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    std::cout << out;
    return 0;
}

}  // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{"Decomposability analysis of central linear mappings given by homogeneous "
                 "Cartesian coordinate matrices"};
    app.require_subcommand(1);

    std::string input = "-";
    std::string format = "text";
    bool pretty = false;
    ToleranceFlags flags;

    auto* analyze = app.add_subcommand(
        "analyze", "Analyze one coordinate matrix and print a JSON report");
    analyze->add_option("--input", input, "Input path, or - for stdin")
        ->capture_default_str();
    analyze->add_option("--format", format, "Input format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    flags.attach(*analyze);
    analyze->add_flag("--pretty", pretty, "Append a human-readable summary");

    auto* spectrum = app.add_subcommand(
        "spectrum", "Print only the singular values of the reduced matrix");
    spectrum->add_option("--input", input, "Input path, or - for stdin")->capture_default_str();
    spectrum->add_option("--format", format, "Input format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    flags.attach(*spectrum);

    std::size_t gen_n = 0;
    std::size_t gen_m = 0;
    std::string kind;
    std::vector<double> sigma;
    std::uint64_t seed = 0;
    auto* generate = app.add_subcommand(
        "generate", "Generate a labeled test instance and analyze it");
    generate->add_option("--n", gen_n, "Source affine dimension")->required();
    generate->add_option("--m", gen_m, "Target affine dimension")->required();
    generate->add_option("--kind", kind, "Instance family")
        ->check(CLI::IsMember({"central", "orthogonal", "spectrum", "random"}))
        ->required();
    generate->add_option("--sigma", sigma, "Requested singular values (kind=spectrum)")
        ->delimiter(',');
    generate->add_option("--seed", seed, "Generator seed")->required();
    generate->add_flag("--pretty", pretty, "Append a human-readable summary");

    auto* batch = app.add_subcommand(
        "batch", "Process one JSON document per input line, one report per line");
    batch->add_option("--input", input, "Input path, or - for stdin")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (analyze->parsed()) return run_analyze(input, format, flags, pretty);
        if (spectrum->parsed()) return run_spectrum(input, format, flags);
        if (generate->parsed()) return run_generate(gen_n, gen_m, kind, sigma, seed, pretty);
        return run_batch(input);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const DimensionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const InvalidInputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        // Convergence failures, degenerate draws, and anything unexpected.
        std::cerr << "numerical failure: " << e.what() << '\n';
        return 3;
    }
}

}  // namespace axo::cli
