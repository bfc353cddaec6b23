// qfisher: Fisher information tables, figure data, and the verification suite
// for the quasi-1D hydrogen atom and the infinite potential well.

#include "qfisher/fisher.hpp"
#include "qfisher/report_io.hpp"
#include "qfisher/systems.hpp"
#include "qfisher/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

constexpr int kExitSuccess = 0;
constexpr int kExitVerification = 1; // verification or convergence failure
constexpr int kExitUsage = 2;        // bad arguments or configuration

struct TableArgs {
    std::string system = "hydrogen";
    int n_min = 1;
    int n_max = 1;
    double width = 1.0;
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    std::string format = "csv";
    std::string output;
};

struct FigureArgs {
    std::string which;
    std::string system = "hydrogen";
    std::vector<int> n_list;
    std::string grid;
    double width = 1.0;
    std::string format = "csv";
    std::string output;
};

struct VerifyArgs {
    int n_max = 8;
    std::string fault;
    bool as_json = false;
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    int max_panels = 20000;
};

/// Writes to the path when given, else stdout. Returns false on I/O failure.
bool emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return static_cast<bool>(std::cout);
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open output file " << path << "\n";
        return false;
    }
    out << text;
    return static_cast<bool>(out);
}

qfisher::GridSpec parse_grid(const std::string& text) {
    const auto first = text.find(':');
    const auto second = text.find(':', first == std::string::npos ? first : first + 1);
    if (first == std::string::npos || second == std::string::npos)
        throw std::invalid_argument("grid must be MIN:MAX:POINTS");

    qfisher::GridSpec grid;
    std::size_t used = 0;
    grid.min = std::stod(text.substr(0, first), &used);
    if (used != first) throw std::invalid_argument("grid: bad MIN");
    const std::string mid = text.substr(first + 1, second - first - 1);
    grid.max = std::stod(mid, &used);
    if (used != mid.size()) throw std::invalid_argument("grid: bad MAX");
    const std::string last = text.substr(second + 1);
    grid.points = std::stoi(last, &used);
    if (used != last.size()) throw std::invalid_argument("grid: bad POINTS");

    if (grid.points < 2) throw std::invalid_argument("grid needs at least 2 points");
    if (!(grid.min < grid.max)) throw std::invalid_argument("grid needs min < max");
    return grid;
}

int run_table(const TableArgs& args) {
    if (args.n_min < 1 || args.n_min > args.n_max) {
        std::cerr << "error: need 1 <= n-min <= n-max\n";
        return kExitUsage;
    }

    qfisher::QuadratureConfig config;
    config.abs_tol = args.abs_tol;
    config.rel_tol = args.rel_tol;

    std::vector<qfisher::BoundState> states;
    for (int n = args.n_min; n <= args.n_max; ++n)
        states.push_back(args.system == "well" ? qfisher::BoundState::well(n, args.width)
                                               : qfisher::BoundState::hydrogen(n));

    const std::vector<qfisher::FisherReport> reports =
        qfisher::build_reports(states, config);

    const std::string text = (args.format == "json") ? qfisher::table_to_json(reports)
                                                     : qfisher::table_to_csv(reports);
    if (!emit(text, args.output)) return kExitUsage;

    for (const qfisher::FisherReport& r : reports) {
        if (!r.converged) {
            std::cerr << "error: quadrature did not converge for n=" << r.state.n << "\n";
            return kExitVerification;
        }
    }
    return kExitSuccess;
}

int run_figure(const FigureArgs& args) {
    qfisher::GridSpec grid;
    try {
        grid = parse_grid(args.grid);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    const qfisher::SystemKind kind = (args.system == "well") ? qfisher::SystemKind::Well
                                                             : qfisher::SystemKind::Hydrogen;
    for (int n : args.n_list) {
        if (n < 1) {
            std::cerr << "error: n-list entries must be >= 1\n";
            return kExitUsage;
        }
    }

    if (args.which == "position") {
        if (kind == qfisher::SystemKind::Hydrogen && grid.min < 0.0) {
            std::cerr << "error: hydrogen position grid must not go below x = 0\n";
            return kExitUsage;
        }
        if (kind == qfisher::SystemKind::Well &&
            (grid.min < -0.5 * args.width || grid.max > 0.5 * args.width)) {
            std::cerr << "error: well position grid must stay inside [-width/2, width/2]\n";
            return kExitUsage;
        }
        const std::string text =
            qfisher::figure_position_csv(kind, args.width, args.n_list, grid);
        return emit(text, args.output) ? kExitSuccess : kExitUsage;
    }

    // Momentum samples follow the nonnegative-p convention.
    if (grid.min < 0.0) {
        std::cerr << "error: momentum grid must start at p >= 0\n";
        return kExitUsage;
    }
    bool converged = true;
    const std::string text = qfisher::figure_momentum_csv(
        kind, args.width, args.n_list, grid, {}, qfisher::ExecutionMode::Parallel, &converged);
    if (!emit(text, args.output)) return kExitUsage;
    if (!converged) {
        std::cerr << "error: momentum transform did not converge on the grid\n";
        return kExitVerification;
    }
    return kExitSuccess;
}

int run_verify(const VerifyArgs& args) {
    qfisher::VerifyOptions options;
    options.n_max = args.n_max;
    options.fault_real_phi = (args.fault == "real-phi");
    options.quad.abs_tol = args.abs_tol;
    options.quad.rel_tol = args.rel_tol;
    options.quad.max_panels = args.max_panels;

    const std::vector<qfisher::CheckResult> checks = qfisher::run_verification(options);
    std::cout << (args.as_json ? qfisher::checks_to_json(checks)
                               : qfisher::checks_to_text(checks));

    if (qfisher::all_passed(checks)) return kExitSuccess;
    std::string failed;
    for (const qfisher::CheckResult& c : checks) {
        if (c.passed) continue;
        if (!failed.empty()) failed += ", ";
        failed += c.name;
    }
    std::cerr << "error: verification failed: " << failed << "\n";
    return kExitVerification;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fisher information for the quasi-1D hydrogen atom and the infinite well"};
    app.require_subcommand(1);

    TableArgs table;
    CLI::App* table_cmd = app.add_subcommand(
        "table", "Fisher information per state: numeric vs closed form");
    table_cmd->add_option("--system", table.system, "hydrogen or well")
        ->check(CLI::IsMember({"hydrogen", "well"}));
    table_cmd->add_option("--n-min", table.n_min, "first principal quantum number")->required();
    table_cmd->add_option("--n-max", table.n_max, "last principal quantum number")->required();
    table_cmd->add_option("--width", table.width, "well width a")
        ->check(CLI::PositiveNumber);
    table_cmd->add_option("--abs-tol", table.abs_tol, "absolute quadrature tolerance")
        ->check(CLI::PositiveNumber);
    table_cmd->add_option("--rel-tol", table.rel_tol, "relative quadrature tolerance")
        ->check(CLI::PositiveNumber);
    table_cmd->add_option("--format", table.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->required();
    table_cmd->add_option("--output", table.output, "output file (default stdout)");

    FigureArgs figure;
    CLI::App* figure_cmd = app.add_subcommand(
        "figure", "wavefunction / momentum amplitude samples on a grid");
    figure_cmd->add_option("--which", figure.which, "position or momentum")
        ->check(CLI::IsMember({"position", "momentum"}))
        ->required();
    figure_cmd->add_option("--n-list", figure.n_list, "comma-separated quantum numbers")
        ->delimiter(',')
        ->required();
    figure_cmd->add_option("--grid", figure.grid, "MIN:MAX:POINTS")->required();
    figure_cmd->add_option("--system", figure.system, "hydrogen or well")
        ->check(CLI::IsMember({"hydrogen", "well"}));
    figure_cmd->add_option("--width", figure.width, "well width a")
        ->check(CLI::PositiveNumber);
    figure_cmd->add_option("--format", figure.format, "csv")
        ->check(CLI::IsMember({"csv"}))
        ->required();
    figure_cmd->add_option("--output", figure.output, "output file (default stdout)");

    VerifyArgs verify;
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "run the full verification suite");
    verify_cmd->add_option("--n-max", verify.n_max, "cap for per-state check families")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--fault", verify.fault,
                           "inject a deliberate defect (real-phi strips the momentum phase)")
        ->check(CLI::IsMember({"real-phi"}));
    verify_cmd->add_flag("--json", verify.as_json, "emit the report as JSON");
    verify_cmd->add_option("--abs-tol", verify.abs_tol, "absolute quadrature tolerance")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--rel-tol", verify.rel_tol, "relative quadrature tolerance")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--max-panels", verify.max_panels,
                           "adaptive panel budget per integral")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e); // prints the message
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(table_cmd)) return run_table(table);
        if (app.got_subcommand(figure_cmd)) return run_figure(figure);
        return run_verify(verify);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
