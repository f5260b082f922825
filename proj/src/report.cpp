#include "lcmc/report.hpp"

#include <fstream>

#include <json.hpp>

namespace lcmc {

namespace {

using ordered_json = nlohmann::ordered_json;

UmbilicKind kind_from_string(const std::string& s) {
    if (s == "interior") return UmbilicKind::Interior;
    if (s == "boundary") return UmbilicKind::BoundaryRegular;
    if (s == "vertex_acute") return UmbilicKind::VertexAcute;
    if (s == "vertex_reflex") return UmbilicKind::VertexReflex;
    throw IoError("unknown umbilic kind: " + s);
}

IndexMethod method_from_string(const std::string& s) {
    if (s == "argument_principle") return IndexMethod::ArgumentPrinciple;
    if (s == "direction_winding") return IndexMethod::DirectionWinding;
    if (s == "reflection") return IndexMethod::Reflection;
    if (s == "corner_straightening") return IndexMethod::CornerStraightening;
    throw IoError("unknown index method: " + s);
}

CapillaryVerdict verdict_from_string(const std::string& s) {
    if (s == "Capillary") return CapillaryVerdict::Capillary;
    if (s == "NotConstantAngle") return CapillaryVerdict::NotConstantAngle;
    if (s == "NotLineOfCurvature") return CapillaryVerdict::NotLineOfCurvature;
    throw IoError("unknown capillary verdict: " + s);
}

ordered_json opt_to_json(const std::optional<double>& x) {
    if (x) return *x;
    return nullptr;
}

std::optional<double> opt_from_json(const ordered_json& j) {
    if (j.is_null()) return std::nullopt;
    return j.get<double>();
}

} // namespace

std::string report_to_json(const AnalysisReport& rep, bool with_timings) {
    ordered_json j;
    j["surface"] = rep.surface;
    j["params"] = rep.params;
    j["grid"] = rep.grid;
    j["spacelike_pass"] = rep.spacelike_pass;
    j["spacelike_min"] = rep.spacelike_min;
    j["spacelike_worst"] = {rep.spacelike_worst.u, rep.spacelike_worst.v};
    j["isothermal_residual"] = rep.isothermal_residual;
    j["cr_residual"] = opt_to_json(rep.cr_residual);
    j["kappa_gap_max"] = rep.kappa_gap_max;
    j["phi_rel_max"] = opt_to_json(rep.phi_rel_max);
    j["h_dev_max"] = opt_to_json(rep.h_dev_max);
    j["kappa_dev_max"] = opt_to_json(rep.kappa_dev_max);
    j["everywhere_umbilic"] = rep.index.everywhere_umbilic;

    ordered_json umb = ordered_json::array();
    for (const auto& r : rep.index.records) {
        ordered_json u;
        u["u"] = r.location.u;
        u["v"] = r.location.v;
        u["kind"] = to_string(r.kind);
        u["order"] = r.order;
        u["index"] = r.index;
        u["angle"] = r.angle;
        u["method"] = to_string(r.method);
        umb.push_back(std::move(u));
    }
    j["umbilics"] = std::move(umb);
    j["index_sum"] = rep.index.index_sum;
    j["euler_char"] = rep.index.euler_characteristic;
    j["ph_residual"] = rep.index.residual;
    j["ph_applicable"] = rep.index.ph_applicable;
    j["index_consistent"] = rep.index.consistent;
    j["acute_vertex_count"] = rep.index.acute_vertex_count;
    j["lemma_sum_bound"] = rep.index.lemma_sum_bound;
    j["contradiction_regime"] = rep.index.contradiction_regime;
    j["index_violations"] = rep.index.violations;

    ordered_json caps = ordered_json::array();
    for (const auto& c : rep.capillary) {
        ordered_json cj;
        cj["edge"] = c.edge;
        cj["beta_mean"] = c.beta_mean;
        cj["beta_spread"] = c.beta_spread;
        cj["joachimsthal_max"] = c.joachimsthal_max;
        cj["membership_max"] = c.membership_max;
        cj["verdict"] = to_string(c.verdict);
        ordered_json prof = ordered_json::array();
        for (const auto& [s, b] : c.beta_profile) prof.push_back({s, b});
        cj["beta_profile"] = std::move(prof);
        caps.push_back(std::move(cj));
    }
    j["capillary"] = std::move(caps);
    j["violations"] = rep.violations;

    if (with_timings) {
        ordered_json t;
        t["total_ms"] = rep.timings.total_ms;
        t["scan_ms"] = rep.timings.scan_ms;
        t["index_ms"] = rep.timings.index_ms;
        t["capillary_ms"] = rep.timings.capillary_ms;
        j["timings"] = std::move(t);
    }
    return j.dump(2) + "\n";
}

AnalysisReport report_from_json(const std::string& text) {
    const ordered_json j = ordered_json::parse(text);
    AnalysisReport rep;
    rep.surface = j.at("surface").get<std::string>();
    rep.params = j.at("params").get<std::map<std::string, double>>();
    rep.grid = j.at("grid").get<int>();
    rep.spacelike_pass = j.at("spacelike_pass").get<bool>();
    rep.spacelike_min = j.at("spacelike_min").get<double>();
    rep.spacelike_worst = {j.at("spacelike_worst")[0].get<double>(),
                           j.at("spacelike_worst")[1].get<double>()};
    rep.isothermal_residual = j.at("isothermal_residual").get<double>();
    rep.cr_residual = opt_from_json(j.at("cr_residual"));
    rep.kappa_gap_max = j.at("kappa_gap_max").get<double>();
    rep.phi_rel_max = opt_from_json(j.at("phi_rel_max"));
    rep.h_dev_max = opt_from_json(j.at("h_dev_max"));
    rep.kappa_dev_max = opt_from_json(j.at("kappa_dev_max"));
    rep.index.everywhere_umbilic = j.at("everywhere_umbilic").get<bool>();

    for (const auto& u : j.at("umbilics")) {
        UmbilicRecord r;
        r.location = {u.at("u").get<double>(), u.at("v").get<double>()};
        r.kind = kind_from_string(u.at("kind").get<std::string>());
        r.order = u.at("order").get<int>();
        r.index = u.at("index").get<double>();
        r.angle = u.at("angle").get<double>();
        r.method = method_from_string(u.at("method").get<std::string>());
        rep.index.records.push_back(r);
    }
    rep.index.index_sum = j.at("index_sum").get<double>();
    rep.index.euler_characteristic = j.at("euler_char").get<int>();
    rep.index.residual = j.at("ph_residual").get<double>();
    rep.index.ph_applicable = j.at("ph_applicable").get<bool>();
    rep.index.consistent = j.at("index_consistent").get<bool>();
    rep.index.acute_vertex_count = j.at("acute_vertex_count").get<int>();
    rep.index.lemma_sum_bound = j.at("lemma_sum_bound").get<double>();
    rep.index.contradiction_regime = j.at("contradiction_regime").get<bool>();
    rep.index.violations = j.at("index_violations").get<std::vector<std::string>>();

    for (const auto& cj : j.at("capillary")) {
        CapillaryReport c;
        c.edge = cj.at("edge").get<std::string>();
        c.beta_mean = cj.at("beta_mean").get<double>();
        c.beta_spread = cj.at("beta_spread").get<double>();
        c.joachimsthal_max = cj.at("joachimsthal_max").get<double>();
        c.membership_max = cj.at("membership_max").get<double>();
        c.verdict = verdict_from_string(cj.at("verdict").get<std::string>());
        for (const auto& p : cj.at("beta_profile"))
            c.beta_profile.emplace_back(p[0].get<double>(), p[1].get<double>());
        rep.capillary.push_back(std::move(c));
    }
    rep.violations = j.at("violations").get<std::vector<std::string>>();
    if (j.contains("timings")) {
        rep.timings.total_ms = j["timings"].at("total_ms").get<double>();
        rep.timings.scan_ms = j["timings"].at("scan_ms").get<double>();
        rep.timings.index_ms = j["timings"].at("index_ms").get<double>();
        rep.timings.capillary_ms = j["timings"].at("capillary_ms").get<double>();
    }
    return rep;
}

void write_report(const AnalysisReport& rep, const std::string& path, ReportFormat format,
                  bool with_timings) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open report file: " + path);
    if (format == ReportFormat::Json) {
        out << report_to_json(rep, with_timings);
    } else {
        out.precision(17);
        out << "table,kind_or_edge,u_or_s,v_or_beta,order,index,method\n";
        for (const auto& r : rep.index.records)
            out << "umbilic," << to_string(r.kind) << ',' << r.location.u << ','
                << r.location.v << ',' << r.order << ',' << r.index << ','
                << to_string(r.method) << '\n';
        for (const auto& c : rep.capillary)
            for (const auto& [s, b] : c.beta_profile)
                out << "beta," << c.edge << ',' << s << ',' << b << ",,,\n";
    }
    if (!out) throw IoError("report write failed: " + path);
}

} // namespace lcmc
