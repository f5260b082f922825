#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lcmc/catalog.hpp"
#include "lcmc/hopf.hpp"

namespace lcmc {

struct AnalysisOptions {
    int grid = 129;
    double fd_step = 0.0;  // > 0 forces finite-difference derivatives with this step
    ExecMode exec = ExecMode::Parallel;
    // verification-tolerance overrides; <= 0 keeps the entry defaults
    double tol_h = 0.0;
    double tol_kappa = 0.0;
    double tol_beta = 0.0;
    double tol_angle = 0.0;
    double tol_index = 0.0;
    double tol_sum = 0.0;
    double tol_cr = 0.0;
    bool measure_timings = true;
};

struct AnalysisReport {
    std::string surface;
    std::map<std::string, double> params;
    int grid = 0;

    bool spacelike_pass = false;
    double spacelike_min = 0.0;
    Vec2 spacelike_worst;
    double isothermal_residual = 0.0;
    std::optional<double> cr_residual;   // only on isothermal charts
    double kappa_gap_max = 0.0;
    std::optional<double> phi_rel_max;   // max |Phi| / lambda^2, isothermal charts
    std::optional<double> h_dev_max;     // vs the expected constant H
    std::optional<double> kappa_dev_max; // vs the expected constant kappa

    IndexReport index;
    std::vector<CapillaryReport> capillary;

    // expected-vs-actual mismatches; the run verifies clean iff empty
    std::vector<std::string> violations;

    struct Timings {
        double total_ms = 0, scan_ms = 0, index_ms = 0, capillary_ms = 0;
    } timings;
};

// Full verification pipeline over one catalog entry.
AnalysisReport analyze(const CatalogEntry& entry, const AnalysisOptions& opts = {});

enum class ReportFormat { Json, Csv };

// Stable-schema serialization. Timings are excluded unless `with_timings`
// is set, so identical inputs produce byte-identical files.
std::string report_to_json(const AnalysisReport& rep, bool with_timings = false);
AnalysisReport report_from_json(const std::string& json_text);

void write_report(const AnalysisReport& rep, const std::string& path,
                  ReportFormat format, bool with_timings = false);

} // namespace lcmc
