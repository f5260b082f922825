// Command-line front end: catalog surfaces in, verification reports out.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lcmc/lines.hpp"
#include "lcmc/report.hpp"

namespace {

using lcmc::AnalysisOptions;
using lcmc::CatalogEntry;
using ordered_json = nlohmann::ordered_json;

struct SpecConfig {
    std::string name;
    std::map<std::string, double> params;
    int grid = 0;        // 0: unset
    double fd_step = 0;  // 0: unset
};

// A surface spec is either a catalog name or a path to a flat key=value file
// (name=..., params.<p>=..., grid=..., fd_step=...).
SpecConfig load_spec(const std::string& spec) {
    const auto names = lcmc::catalog_names();
    for (const auto& n : names)
        if (n == spec) return {spec, {}, 0, 0};

    std::ifstream in(spec);
    if (!in) throw lcmc::IoError("unknown surface spec (not a catalog name or readable file): " + spec);
    SpecConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw lcmc::IoError(spec + ":" + std::to_string(lineno) + ": expected key=value");
        auto trim = [](std::string s) {
            const auto a = s.find_first_not_of(" \t\r");
            const auto b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key == "name") {
            cfg.name = val;
        } else if (key == "grid") {
            cfg.grid = std::stoi(val);
        } else if (key == "fd_step") {
            cfg.fd_step = std::stod(val);
        } else if (key.rfind("params.", 0) == 0) {
            cfg.params[key.substr(7)] = std::stod(val);
        } else {
            throw lcmc::IoError(spec + ":" + std::to_string(lineno) + ": unknown key " + key);
        }
    }
    if (cfg.name.empty())
        throw lcmc::IoError(spec + ": missing name=<catalog surface>");
    return cfg;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw lcmc::IoError("cannot open output file: " + out_path);
    out << text;
    if (!out) throw lcmc::IoError("write failed: " + out_path);
}

ordered_json umbilic_json(const lcmc::UmbilicScan& scan) {
    ordered_json j;
    j["everywhere_umbilic"] = scan.everywhere_umbilic;
    j["umbilic_fraction"] = scan.umbilic_fraction;
    ordered_json hits = ordered_json::array();
    for (const auto& h : scan.hits) {
        hits.push_back({{"u", h.location.u},
                        {"v", h.location.v},
                        {"kind", lcmc::to_string(h.kind)},
                        {"kappa_gap", h.kappa_gap}});
    }
    j["umbilics"] = std::move(hits);
    return j;
}

ordered_json index_json(const lcmc::IndexReport& rep) {
    ordered_json j;
    j["everywhere_umbilic"] = rep.everywhere_umbilic;
    ordered_json recs = ordered_json::array();
    for (const auto& r : rep.records) {
        recs.push_back({{"u", r.location.u},
                        {"v", r.location.v},
                        {"kind", lcmc::to_string(r.kind)},
                        {"order", r.order},
                        {"index", r.index},
                        {"angle", r.angle},
                        {"method", lcmc::to_string(r.method)}});
    }
    j["umbilics"] = std::move(recs);
    j["index_sum"] = rep.index_sum;
    j["euler_char"] = rep.euler_characteristic;
    j["ph_residual"] = rep.residual;
    j["ph_applicable"] = rep.ph_applicable;
    j["consistent"] = rep.consistent;
    j["acute_vertex_count"] = rep.acute_vertex_count;
    j["lemma_sum_bound"] = rep.lemma_sum_bound;
    j["contradiction_regime"] = rep.contradiction_regime;
    j["violations"] = rep.violations;
    return j;
}

ordered_json capillary_json(const std::vector<lcmc::CapillaryReport>& reps) {
    ordered_json arr = ordered_json::array();
    for (const auto& c : reps) {
        arr.push_back({{"edge", c.edge},
                       {"beta_mean", c.beta_mean},
                       {"beta_spread", c.beta_spread},
                       {"joachimsthal_max", c.joachimsthal_max},
                       {"membership_max", c.membership_max},
                       {"verdict", lcmc::to_string(c.verdict)}});
    }
    return arr;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"spacelike CMC surface toolkit for Lorentz-Minkowski 3-space"};
    app.require_subcommand(1);

    std::string spec, out_path;
    AnalysisOptions opts;
    opts.grid = 0;  // resolved after parsing: flag, then spec file, then 129
    bool serial = false, csv = false, timings = false;

    auto add_common = [&](CLI::App* cmd, bool needs_spec = true) {
        if (needs_spec)
            cmd->add_option("spec", spec, "catalog surface name or key=value spec file")
                ->required();
        cmd->add_option("--grid", opts.grid, "lattice points per axis (default 129)");
        cmd->add_option("--fd-step", opts.fd_step,
                        "force finite-difference derivatives with this step");
        cmd->add_option("--out", out_path, "write the report here instead of stdout");
        cmd->add_flag("--serial", serial, "run grid kernels on one thread");
        cmd->add_flag("--timings", timings, "include wall-clock timings in the report");
        cmd->add_option("--tol-h", opts.tol_h, "override the mean-curvature tolerance");
        cmd->add_option("--tol-kappa", opts.tol_kappa,
                        "override the principal-curvature tolerance");
        cmd->add_option("--tol-beta", opts.tol_beta, "override the contact-angle tolerance");
        cmd->add_option("--tol-angle", opts.tol_angle, "override the vertex-angle tolerance");
        cmd->add_option("--tol-index", opts.tol_index,
                        "override the rotation-index tolerance");
        cmd->add_option("--tol-sum", opts.tol_sum, "override the index-sum tolerance");
        cmd->add_option("--tol-cr", opts.tol_cr, "override the CMC-certificate tolerance");
    };

    auto* cat = app.add_subcommand("catalog", "list or describe the built-in surfaces");
    auto* cat_list = cat->add_subcommand("list", "print the catalog surface names");
    std::string build_name;
    auto* cat_build = cat->add_subcommand("build", "print one catalog entry as JSON");
    cat_build->add_option("name", build_name, "catalog surface name")->required();
    cat_build->add_option("--out", out_path, "write here instead of stdout");
    cat->require_subcommand(1);

    auto* an = app.add_subcommand("analyze", "full verification report for a surface");
    add_common(an);
    an->add_flag("--csv", csv, "flat CSV instead of JSON");

    auto* um = app.add_subcommand("umbilics", "umbilic scan only");
    add_common(um);

    auto* ix = app.add_subcommand("index", "umbilic records, rotation indices, index sum");
    add_common(ix);

    auto* cp = app.add_subcommand("capillary", "contact-angle profiles and verdicts");
    add_common(cp);

    auto* tr = app.add_subcommand("trace", "integrate curvature lines and export them");
    add_common(tr);
    std::string family = "both", svg_path, csv_path;
    int n_starts = 12;
    double trace_step = 0.0;
    tr->add_option("--family", family, "first | second | both (default both)");
    tr->add_option("--starts", n_starts, "seed points per family (default 12)");
    tr->add_option("--svg", svg_path, "write an SVG rendering here");
    tr->add_option("--csv", csv_path, "write the polylines as CSV here");
    tr->add_option("--step", trace_step, "integration step in parameter arclength");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        opts.exec = serial ? lcmc::ExecMode::Serial : lcmc::ExecMode::Parallel;

        if (cat_list->parsed()) {
            std::ostringstream os;
            for (const auto& n : lcmc::catalog_names()) os << n << "\n";
            emit(os.str(), out_path);
            return 0;
        }
        if (cat_build->parsed()) {
            const CatalogEntry entry = lcmc::build_catalog_entry(build_name);
            ordered_json j;
            j["name"] = entry.name;
            j["description"] = entry.description;
            j["params"] = entry.params;
            j["edges"] = ordered_json::array();
            for (const auto& e : entry.patch.domain().edges()) j["edges"].push_back(e.name);
            j["supports"] = ordered_json::array();
            for (const auto& s : entry.supports)
                j["supports"].push_back({{"edge", s.label}, {"kind", s.support.kind_name()}});
            emit(j.dump(2) + "\n", out_path);
            return 0;
        }

        const SpecConfig cfg = load_spec(spec);
        if (opts.grid <= 0) opts.grid = cfg.grid > 0 ? cfg.grid : 129;
        if (opts.fd_step == 0.0 && cfg.fd_step > 0.0) opts.fd_step = cfg.fd_step;
        const CatalogEntry entry = lcmc::build_catalog_entry(cfg.name, cfg.params);
        const lcmc::ParametricPatch patch =
            opts.fd_step > 0.0 ? entry.patch.finite_difference_copy(opts.fd_step)
                               : entry.patch;

        if (an->parsed()) {
            const lcmc::AnalysisReport rep = lcmc::analyze(entry, opts);
            if (!out_path.empty())
                lcmc::write_report(rep, out_path,
                                   csv ? lcmc::ReportFormat::Csv : lcmc::ReportFormat::Json,
                                   timings);
            else
                std::cout << lcmc::report_to_json(rep, timings);
            return rep.violations.empty() ? 0 : 2;
        }
        if (um->parsed()) {
            ordered_json j = umbilic_json(lcmc::find_umbilics(patch, opts.grid, 0.0, opts.exec));
            j["surface"] = entry.name;
            emit(j.dump(2) + "\n", out_path);
            return 0;
        }
        if (ix->parsed()) {
            const lcmc::IndexReport rep = lcmc::index_report(patch, opts.grid, opts.exec);
            ordered_json j = index_json(rep);
            j["surface"] = entry.name;
            emit(j.dump(2) + "\n", out_path);
            const bool ok =
                rep.everywhere_umbilic || !rep.ph_applicable || rep.consistent;
            return ok ? 0 : 2;
        }
        if (cp->parsed()) {
            std::vector<lcmc::CapillaryReport> reps;
            for (const auto& comp : entry.supports)
                reps.push_back(lcmc::capillary_constancy_check(patch, comp));
            ordered_json j;
            j["surface"] = entry.name;
            j["capillary"] = capillary_json(reps);
            emit(j.dump(2) + "\n", out_path);
            if (reps.empty()) return 0;
            for (const auto& r : reps)
                if (r.verdict != lcmc::CapillaryVerdict::Capillary) return 2;
            return 0;
        }
        if (tr->parsed()) {
            std::vector<std::pair<lcmc::Vec2, lcmc::CurvatureFamily>> starts;
            const lcmc::BBox bb = patch.domain().bounding_box();
            std::vector<lcmc::CurvatureFamily> fams;
            if (family == "first" || family == "both") fams.push_back(lcmc::CurvatureFamily::First);
            if (family == "second" || family == "both")
                fams.push_back(lcmc::CurvatureFamily::Second);
            if (fams.empty()) throw lcmc::IoError("unknown family: " + family);
            lcmc::TraceConfig seed_cfg;  // defaults carry the umbilic tolerance
            auto traceable = [&](lcmc::Vec2 p) {
                if (!patch.domain().contains(p)) return false;
                try {
                    const lcmc::FundamentalData fd = fundamental_data(patch, p.u, p.v);
                    return fd.kappa1 - fd.kappa2 >= seed_cfg.umbilic_stop_tol &&
                           fd.dir1.has_value();
                } catch (const lcmc::Error&) {
                    return false;
                }
            };
            const int side = std::max(2, (int)std::ceil(std::sqrt((double)n_starts)));
            for (auto fam : fams) {
                int placed = 0;
                for (int i = 0; i < side && placed < n_starts; ++i) {
                    for (int j = 0; j < side && placed < n_starts; ++j) {
                        const lcmc::Vec2 p{
                            bb.u0 + bb.width() * (0.15 + 0.7 * i / (side - 1.0)),
                            bb.v0 + bb.height() * (0.15 + 0.7 * j / (side - 1.0))};
                        if (!traceable(p)) continue;
                        starts.emplace_back(p, fam);
                        ++placed;
                    }
                }
            }
            if (starts.empty())
                throw lcmc::DegeneracyError(
                    "no traceable seed points (everywhere-umbilic surface?)");
            lcmc::TraceConfig cfg2;
            if (trace_step > 0.0) cfg2.step = trace_step;
            else cfg2.step = 0.005 * bb.diameter();
            const auto traces = lcmc::trace_many(patch, starts, cfg2, opts.exec);
            if (!svg_path.empty()) lcmc::export_traces_svg(traces, svg_path);
            if (!csv_path.empty()) lcmc::export_traces_csv(traces, csv_path);
            ordered_json j;
            j["surface"] = entry.name;
            j["traces"] = traces.size();
            size_t pts = 0;
            std::map<std::string, int> stops;
            for (const auto& t : traces) {
                pts += t.points_param.size();
                ++stops[lcmc::to_string(t.stop_reason)];
            }
            j["points"] = pts;
            j["stops"] = stops;
            emit(j.dump(2) + "\n", out_path);
            return 0;
        }
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 1;
}
