#include "qfisher/report_io.hpp"

#include "qfisher/systems.hpp"

#include <json.hpp>

#include <cstdio>
#include <stdexcept>

namespace qfisher {

namespace {

using nlohmann::json;

const char* kTableHeader =
    "n,energy,i_rho_numeric,i_rho_closed,i_gamma_numeric,i_gamma_closed,"
    "product,discrepancy,converged";

std::vector<double> grid_points(const GridSpec& grid) {
    if (grid.points < 2)
        throw std::invalid_argument("figure grid needs at least 2 points");
    if (!(grid.min < grid.max))
        throw std::invalid_argument("figure grid needs min < max");
    std::vector<double> xs(static_cast<std::size_t>(grid.points));
    for (int i = 0; i < grid.points; ++i)
        xs[static_cast<std::size_t>(i)] =
            grid.min + (grid.max - grid.min) * i / (grid.points - 1);
    return xs;
}

// Closed forms exist for hydrogen only; where absent the JSON field is null
// and the CSV cell is empty.
json optional_to_json(const std::optional<double>& v) {
    if (!v) return nullptr;
    return *v;
}

json report_to_json(const FisherReport& r) {
    return json{{"n", r.state.n},
                {"energy", r.energy},
                {"i_rho_numeric", r.i_rho_numeric},
                {"i_rho_closed", optional_to_json(r.i_rho_closed)},
                {"i_gamma_numeric", r.i_gamma_numeric},
                {"i_gamma_closed", optional_to_json(r.i_gamma_closed)},
                {"product", r.product},
                {"discrepancy", r.max_abs_discrepancy},
                {"converged", r.converged}};
}

std::string optional_to_csv(const std::optional<double>& v) {
    if (!v) return "";
    return format_double(*v);
}

} // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string table_to_csv(std::span<const FisherReport> reports) {
    std::string out = kTableHeader;
    out += '\n';
    for (const FisherReport& r : reports) {
        out += std::to_string(r.state.n);
        for (const std::string& cell :
             {format_double(r.energy), format_double(r.i_rho_numeric),
              optional_to_csv(r.i_rho_closed), format_double(r.i_gamma_numeric),
              optional_to_csv(r.i_gamma_closed), format_double(r.product),
              format_double(r.max_abs_discrepancy)}) {
            out += ',';
            out += cell;
        }
        out += ',';
        out += r.converged ? "true" : "false";
        out += '\n';
    }
    return out;
}

std::string table_to_json(std::span<const FisherReport> reports) {
    json doc;
    doc["system"] = (!reports.empty() && reports.front().state.kind == SystemKind::Well)
                        ? "well"
                        : "hydrogen";
    if (!reports.empty() && reports.front().state.kind == SystemKind::Well)
        doc["width"] = reports.front().state.width;
    doc["reports"] = json::array();
    for (const FisherReport& r : reports) doc["reports"].push_back(report_to_json(r));
    return doc.dump(2) + "\n";
}

std::string figure_position_csv(SystemKind kind, double width, std::span<const int> ns,
                                const GridSpec& grid) {
    const std::vector<double> xs = grid_points(grid);

    std::string out = "x";
    for (int n : ns) out += ",psi_" + std::to_string(n);
    out += '\n';

    for (double x : xs) {
        out += format_double(x);
        for (int n : ns) {
            const double psi =
                (kind == SystemKind::Hydrogen) ? hydrogen_psi(n, x) : well_psi(n, width, x);
            out += ',';
            out += format_double(psi);
        }
        out += '\n';
    }
    return out;
}

std::string figure_momentum_csv(SystemKind kind, double width, std::span<const int> ns,
                                const GridSpec& grid, const QuadratureConfig& config,
                                ExecutionMode mode, bool* all_converged) {
    const std::vector<double> ps = grid_points(grid);
    if (all_converged) *all_converged = true;

    std::string out = "p";
    for (int n : ns)
        out += ",re_phi_" + std::to_string(n) + ",im_phi_" + std::to_string(n);
    out += '\n';

    // One amplitude column pair per state, sampled up front.
    std::vector<std::vector<std::complex<double>>> columns;
    columns.reserve(ns.size());
    for (int n : ns) {
        std::vector<std::complex<double>> column(ps.size());
        if (kind == SystemKind::Hydrogen) {
            for (std::size_t i = 0; i < ps.size(); ++i) column[i] = hydrogen_phi(n, ps[i]);
        } else {
            const std::vector<ComplexIntegralResult> samples =
                well_phi_numeric_grid(n, width, ps, config, mode);
            for (std::size_t i = 0; i < ps.size(); ++i) {
                column[i] = samples[i].value;
                if (all_converged && !samples[i].converged) *all_converged = false;
            }
        }
        columns.push_back(std::move(column));
    }

    for (std::size_t i = 0; i < ps.size(); ++i) {
        out += format_double(ps[i]);
        for (const auto& column : columns) {
            out += ',';
            out += format_double(column[i].real());
            out += ',';
            out += format_double(column[i].imag());
        }
        out += '\n';
    }
    return out;
}

std::string checks_to_text(const std::vector<CheckResult>& checks) {
    std::string out;
    std::size_t passed = 0;
    for (const CheckResult& c : checks) {
        char line[256];
        std::snprintf(line, sizeof(line), "%-26s %s  worst %.3e  tol %.3e  (%s)\n",
                      c.name.c_str(), c.passed ? "PASS" : "FAIL", c.worst, c.tolerance,
                      c.detail.c_str());
        out += line;
        if (c.passed) ++passed;
    }
    out += "verification: " + std::to_string(passed) + "/" + std::to_string(checks.size()) +
           " checks passed\n";
    return out;
}

std::string checks_to_json(const std::vector<CheckResult>& checks) {
    json doc;
    doc["all_passed"] = all_passed(checks);
    doc["checks"] = json::array();
    for (const CheckResult& c : checks)
        doc["checks"].push_back(json{{"name", c.name},
                                     {"passed", c.passed},
                                     {"worst", c.worst},
                                     {"tolerance", c.tolerance},
                                     {"detail", c.detail}});
    return doc.dump(2) + "\n";
}

} // namespace qfisher
