#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "lcmc/report.hpp"

using namespace lcmc;

TEST_CASE("catalog lists every builder and rejects unknown names") {
    const auto names = catalog_names();
    CHECK(names.size() >= 5);
    for (const auto& n : names) {
        const CatalogEntry e = build_catalog_entry(n);
        CHECK(e.name == n);
    }
    CHECK_THROWS_AS(build_catalog_entry("moebius-band"), DomainError);
}

TEST_CASE("builders validate their parameters") {
    CHECK_THROWS_AS(build_planar_disk(-1.0), DomainError);
    CHECK_THROWS_AS(build_hyperbolic_cap(0.0, 1.0), DomainError);
    CHECK_THROWS_AS(build_lorentzian_catenoid(1.0, 0.0, 2.0), DomainError);
    CHECK_THROWS_AS(build_truncated_catenoid(1.0, 0.5, 1.5, 3.5), DomainError);
    CHECK_THROWS_AS(build_de_sitter_shifted_cap(1.0, 1.0, +2.0), DomainError);
    CHECK_THROWS_AS(build_tilted_cut_negative(1.0, 1.0, 1.5, 0.4), DomainError);
}

TEST_CASE("catalog overrides reach the builders") {
    const CatalogEntry e =
        build_catalog_entry("hyperbolic-cap", {{"c", 2.0}, {"t_max", 0.7}});
    CHECK(e.params.at("c") == 2.0);
    CHECK(e.params.at("t_max") == 0.7);
    CHECK(e.expected.beta_const.at("circle") == doctest::Approx(0.7));
}

TEST_CASE("analyze verifies every catalog entry cleanly") {
    AnalysisOptions opts;
    opts.grid = 65;  // smaller grid keeps the full sweep quick
    for (const auto& name : catalog_names()) {
        const CatalogEntry e = build_catalog_entry(name);
        const AnalysisReport rep = analyze(e, opts);
        INFO(name);
        for (const auto& v : rep.violations) INFO("  violation: " << v);
        CHECK(rep.violations.empty());
        CHECK(rep.spacelike_pass);
    }
}

TEST_CASE("analyze flags a wrong expectation") {
    CatalogEntry e = build_planar_disk();
    e.expected.mean_curvature = 0.25;  // deliberately wrong
    AnalysisOptions opts;
    opts.grid = 33;
    const AnalysisReport rep = analyze(e, opts);
    CHECK_FALSE(rep.violations.empty());
}

TEST_CASE("json report round-trips losslessly") {
    AnalysisOptions opts;
    opts.grid = 65;
    const AnalysisReport rep = analyze(build_catalog_entry("truncated-catenoid"), opts);
    const std::string text = report_to_json(rep, true);
    const AnalysisReport back = report_from_json(text);
    CHECK(report_to_json(back, true) == text);
    // spot-check a numeric field survives exactly
    CHECK(back.index.index_sum == rep.index.index_sum);
    CHECK(back.isothermal_residual == rep.isothermal_residual);
    REQUIRE(back.capillary.size() == rep.capillary.size());
    for (size_t i = 0; i < back.capillary.size(); ++i)
        CHECK(back.capillary[i].beta_mean == rep.capillary[i].beta_mean);
}

TEST_CASE("empty umbilic lists serialize as json arrays") {
    AnalysisOptions opts;
    opts.grid = 33;
    const AnalysisReport rep = analyze(build_catalog_entry("planar-disk"), opts);
    const std::string text = report_to_json(rep);
    CHECK(text.find("\"umbilics\": []") != std::string::npos);
    CHECK(text.find("\"timings\"") == std::string::npos);  // off by default
}

TEST_CASE("reports are byte-identical across repeated runs") {
    AnalysisOptions opts;
    opts.grid = 65;
    const CatalogEntry e1 = build_catalog_entry("truncated-catenoid");
    const CatalogEntry e2 = build_catalog_entry("truncated-catenoid");
    const std::string a = report_to_json(analyze(e1, opts));
    const std::string b = report_to_json(analyze(e2, opts));
    CHECK(a == b);
    // serial and parallel kernels must serialize identically as well
    AnalysisOptions ser = opts;
    ser.exec = ExecMode::Serial;
    CHECK(report_to_json(analyze(e1, ser)) == a);
}

TEST_CASE("numbers in reports carry full precision") {
    AnalysisOptions opts;
    opts.grid = 65;
    const AnalysisReport rep = analyze(build_catalog_entry("hyperbolic-cap"), opts);
    REQUIRE(!rep.capillary.empty());
    const double beta = rep.capillary[0].beta_mean;
    const std::string text = report_to_json(rep);
    // the parsed value must reproduce the double exactly (shortest round-trip)
    const AnalysisReport back = report_from_json(text);
    CHECK(back.capillary[0].beta_mean == beta);
}

TEST_CASE("csv flattening writes umbilic and angle-profile rows") {
    AnalysisOptions opts;
    opts.grid = 65;
    const AnalysisReport rep = analyze(build_catalog_entry("truncated-catenoid"), opts);
    const std::string path = "report_test.csv";
    write_report(rep, path, ReportFormat::Csv);
    std::ifstream in(path);
    std::string line;
    std::getline(in, line);
    CHECK(line == "table,kind_or_edge,u_or_s,v_or_beta,order,index,method");
    int umb = 0, beta = 0;
    while (std::getline(in, line)) {
        if (line.rfind("umbilic,", 0) == 0) ++umb;
        if (line.rfind("beta,", 0) == 0) ++beta;
    }
    CHECK(umb == 4);
    CHECK(beta == 4 * 128);
    std::remove(path.c_str());
}
