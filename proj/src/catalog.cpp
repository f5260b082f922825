#include "lcmc/catalog.hpp"

#include <cmath>

#include "lcmc/hopf.hpp"

namespace lcmc {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

double get(const std::map<std::string, double>& m, const std::string& key, double dflt) {
    const auto it = m.find(key);
    return it == m.end() ? dflt : it->second;
}

// Conformal disk-model chart of the hyperbolic plane of pseudoradius c,
// shifted along x3: X = shift + c (2u, 2v, 1 + r^2) / (1 - r^2).
ParametricPatch::JetFn cap_jet(double c, double shift) {
    return [c, shift](double u, double v) {
        const double D = 1.0 - u * u - v * v;
        const double w = 1.0 / D;
        const double w2 = w * w, w3 = w2 * w;
        Jet2 j;
        j.X = {2 * c * u * w, 2 * c * v * w, shift + c * (1 + u * u + v * v) * w};
        j.Xu = {2 * c * w + 4 * c * u * u * w2, 4 * c * u * v * w2, 4 * c * u * w2};
        j.Xv = {4 * c * u * v * w2, 2 * c * w + 4 * c * v * v * w2, 4 * c * v * w2};
        j.Xuu = {12 * c * u * w2 + 16 * c * u * u * u * w3,
                 4 * c * v * w2 + 16 * c * u * u * v * w3,
                 4 * c * w2 + 16 * c * u * u * w3};
        j.Xuv = {4 * c * v * w2 + 16 * c * u * u * v * w3,
                 4 * c * u * w2 + 16 * c * u * v * v * w3,
                 16 * c * u * v * w3};
        j.Xvv = {4 * c * u * w2 + 16 * c * u * v * v * w3,
                 12 * c * v * w2 + 16 * c * v * v * v * w3,
                 4 * c * w2 + 16 * c * v * v * w3};
        return j;
    };
}

ParametricPatch::JetFn catenoid_jet(double a) {
    return [a](double s, double t) {
        const double sh = std::sinh(s), ch = std::cosh(s);
        const double co = std::cos(t), si = std::sin(t);
        Jet2 j;
        j.X = {a * sh * co, a * sh * si, a * s};
        j.Xu = {a * ch * co, a * ch * si, a};
        j.Xv = {-a * sh * si, a * sh * co, 0};
        j.Xuu = {a * sh * co, a * sh * si, 0};
        j.Xuv = {-a * ch * si, a * ch * co, 0};
        j.Xvv = {-a * sh * co, -a * sh * si, 0};
        return j;
    };
}

// Catenoid over the annulus chart w = u + iv, sigma = log|w|, theta = arg w.
// The chart is conformal, so the Hopf function becomes the nonconstant
// holomorphic 2a / w^2.
ParametricPatch::JetFn catenoid_annulus_jet(double a) {
    const auto base = catenoid_jet(a);
    return [base](double u, double v) {
        const double r2 = u * u + v * v;
        const double r4 = r2 * r2;
        const double s = 0.5 * std::log(r2);
        const double t = std::atan2(v, u);
        const Jet2 F = base(s, t);

        const double su = u / r2, sv = v / r2;
        const double tu = -v / r2, tv = u / r2;
        const double suu = (v * v - u * u) / r4, suv = -2 * u * v / r4;
        const double svv = (u * u - v * v) / r4;
        const double tuu = 2 * u * v / r4, tuv = (v * v - u * u) / r4;
        const double tvv = -2 * u * v / r4;

        Jet2 j;
        j.X = F.X;
        j.Xu = F.Xu * su + F.Xv * tu;
        j.Xv = F.Xu * sv + F.Xv * tv;
        j.Xuu = F.Xuu * (su * su) + F.Xuv * (2 * su * tu) + F.Xvv * (tu * tu) +
                F.Xu * suu + F.Xv * tuu;
        j.Xuv = F.Xuu * (su * sv) + F.Xuv * (su * tv + sv * tu) + F.Xvv * (tu * tv) +
                F.Xu * suv + F.Xv * tuv;
        j.Xvv = F.Xuu * (sv * sv) + F.Xuv * (2 * sv * tv) + F.Xvv * (tv * tv) +
                F.Xu * svv + F.Xv * tvv;
        return j;
    };
}

BoundaryComponent edge_component(const PatchDomain& dom, const std::string& edge_name,
                                 SupportSurface support, int samples = 128) {
    for (const auto& e : dom.edges()) {
        if (e.name == edge_name)
            return BoundaryComponent{edge_name, e.point, std::move(support), samples};
    }
    throw DomainError("catalog: no boundary edge named " + edge_name);
}

} // namespace

CatalogEntry build_planar_disk(double radius) {
    if (!(radius > 0.0)) throw DomainError("planar_disk: radius must be positive");
    PatchDomain dom = PatchDomain::disk(radius);
    ParametricPatch patch(
        dom,
        [](double u, double v) {
            Jet2 j;
            j.X = {u, v, 0};
            j.Xu = {1, 0, 0};
            j.Xv = {0, 1, 0};
            return j;
        },
        [](double u, double v) { return LVec3{u, v, 0}; });
    patch.set_eval_margin(0.5 * radius);

    ExpectedValues exp;
    exp.mean_curvature = 0.0;
    exp.kappa_constant = 0.0;
    exp.everywhere_umbilic = true;
    exp.phi_rel_max = 1e-8;
    exp.kappa_gap_max = 1e-8;
    exp.isothermal_max = 1e-9;

    return {"planar-disk", "spacelike plane {x3 = 0} over a disk", std::move(patch),
            {}, std::move(exp), {{"radius", radius}}};
}

CatalogEntry build_hyperbolic_cap(double c, double t_max) {
    if (!(c > 0.0) || !(t_max > 0.0))
        throw DomainError("hyperbolic_cap: c and t_max must be positive");
    const double R = std::tanh(0.5 * t_max);
    PatchDomain dom = PatchDomain::disk(R);
    const auto jet = cap_jet(c, 0.0);
    ParametricPatch patch(dom, jet,
                          [jet](double u, double v) { return jet(u, v).X; });
    patch.set_eval_margin(0.25 * (1.0 - R));

    std::vector<BoundaryComponent> supports;
    supports.push_back(edge_component(
        dom, "circle",
        SupportSurface::spacelike_plane({0, 0, 1}, -c * std::cosh(t_max))));

    ExpectedValues exp;
    exp.mean_curvature = 1.0 / c;
    exp.kappa_constant = 1.0 / c;
    exp.everywhere_umbilic = true;
    exp.phi_rel_max = 1e-8;
    exp.kappa_gap_max = 1e-8;
    exp.isothermal_max = 1e-9;
    exp.beta_const["circle"] = t_max;
    exp.verdicts["circle"] = CapillaryVerdict::Capillary;

    return {"hyperbolic-cap",
            "hyperbolic plane cap cut by a horizontal spacelike plane",
            std::move(patch), std::move(supports), std::move(exp),
            {{"c", c}, {"t_max", t_max}}};
}

CatalogEntry build_lorentzian_catenoid(double a, double sigma0, double sigma1) {
    if (!(a > 0.0)) throw DomainError("catenoid: a must be positive");
    if (!(sigma0 > 0.0) || !(sigma1 > sigma0))
        throw DomainError("catenoid: need 0 < sigma0 < sigma1 (lightlike axis degeneration)");
    PatchDomain dom = PatchDomain::rectangle(sigma0, sigma1, 0.0, kTwoPi);
    const auto jet = catenoid_jet(a);
    ParametricPatch patch(dom, jet, [jet](double u, double v) { return jet(u, v).X; });
    patch.set_eval_margin(std::min(0.2, 0.5 * sigma0));

    ExpectedValues exp;
    exp.mean_curvature = 0.0;
    exp.h_tol = 1e-6;
    exp.isothermal_max = 1e-9;
    exp.cr_max = kCrCertificateGate;
    exp.isolated_umbilics = 0;
    exp.vertex_count = 4;
    exp.vertex_angle = kPi / 2.0;
    exp.vertex_index = 0.25;
    exp.index_sum = 1.0;

    return {"lorentzian-catenoid", "maximal rotation surface about the timelike axis",
            std::move(patch), {}, std::move(exp),
            {{"a", a}, {"sigma0", sigma0}, {"sigma1", sigma1}}};
}

CatalogEntry build_truncated_catenoid(double a, double sigma0, double sigma1,
                                      double theta) {
    if (!(a > 0.0)) throw DomainError("truncated_catenoid: a must be positive");
    if (!(sigma0 > 0.0) || !(sigma1 > sigma0))
        throw DomainError("truncated_catenoid: need 0 < sigma0 < sigma1");
    if (!(theta > 0.0) || !(theta < kPi))
        throw DomainError("truncated_catenoid: opening angle must lie in (0, pi)");
    PatchDomain dom = PatchDomain::rectangle(sigma0, sigma1, 0.0, theta);
    const auto jet = catenoid_jet(a);
    ParametricPatch patch(dom, jet, [jet](double u, double v) { return jet(u, v).X; });
    patch.set_eval_margin(std::min(0.2, 0.5 * sigma0));

    std::vector<BoundaryComponent> supports;
    supports.push_back(edge_component(
        dom, "u_min", SupportSurface::spacelike_plane({0, 0, 1}, -a * sigma0)));
    supports.push_back(edge_component(
        dom, "u_max", SupportSurface::spacelike_plane({0, 0, 1}, -a * sigma1)));
    supports.push_back(
        edge_component(dom, "v_min", SupportSurface::timelike_plane({0, 1, 0}, 0.0)));
    supports.push_back(edge_component(
        dom, "v_max",
        SupportSurface::timelike_plane({-std::sin(theta), std::cos(theta), 0}, 0.0)));

    ExpectedValues exp;
    exp.mean_curvature = 0.0;
    exp.isothermal_max = 1e-9;
    exp.isolated_umbilics = 0;
    exp.vertex_count = 4;
    exp.vertex_angle = kPi / 2.0;
    exp.vertex_index = 0.25;
    exp.index_sum = 1.0;
    exp.beta_const["u_min"] = std::acosh(std::cosh(sigma0) / std::sinh(sigma0));
    exp.beta_const["u_max"] = std::acosh(std::cosh(sigma1) / std::sinh(sigma1));
    exp.beta_const["v_min"] = 0.0;
    exp.beta_const["v_max"] = 0.0;
    for (const char* e : {"u_min", "u_max", "v_min", "v_max"})
        exp.verdicts[e] = CapillaryVerdict::Capillary;

    return {"truncated-catenoid",
            "catenoid piece between two horizontal planes and two vertical planes "
            "through the axis",
            std::move(patch), std::move(supports), std::move(exp),
            {{"a", a}, {"sigma0", sigma0}, {"sigma1", sigma1}, {"theta", theta}}};
}

CatalogEntry build_catenoid_annulus(double a, double sigma0, double sigma1,
                                    double theta_span) {
    if (!(a > 0.0)) throw DomainError("catenoid_annulus: a must be positive");
    if (!(sigma0 > 0.0) || !(sigma1 > sigma0))
        throw DomainError("catenoid_annulus: need 0 < sigma0 < sigma1");
    if (!(theta_span > 0.0) || !(theta_span < kPi))
        throw DomainError("catenoid_annulus: theta_span must lie in (0, pi)");
    PatchDomain dom = PatchDomain::annular_sector(std::exp(sigma0), std::exp(sigma1),
                                                  0.0, theta_span);
    const auto jet = catenoid_annulus_jet(a);
    ParametricPatch patch(dom, jet, [jet](double u, double v) { return jet(u, v).X; });
    patch.set_eval_margin(0.25 * std::exp(sigma0));

    ExpectedValues exp;
    exp.mean_curvature = 0.0;
    exp.isothermal_max = 1e-9;
    exp.isolated_umbilics = 0;
    exp.vertex_count = 4;
    exp.vertex_angle = kPi / 2.0;
    exp.vertex_index = 0.25;
    exp.index_sum = 1.0;

    return {"catenoid-annulus",
            "catenoid piece over the conformal annulus chart (the Hopf function "
            "becomes 2a / w^2)",
            std::move(patch), {}, std::move(exp),
            {{"a", a}, {"sigma0", sigma0}, {"sigma1", sigma1}, {"theta_span", theta_span}}};
}

CatalogEntry build_de_sitter_configuration(double c) {
    if (!(c > 0.0)) throw DomainError("de_sitter_configuration: c must be positive");
    CatalogEntry entry = build_planar_disk(c);
    entry.name = "desitter-disk";
    entry.description = "planar disk spanning the waist of a de Sitter surface";
    entry.params = {{"c", c}};
    entry.supports.push_back(
        edge_component(entry.patch.domain(), "circle", SupportSurface::de_sitter(c)));
    entry.expected.beta_const["circle"] = 0.0;
    entry.expected.beta_tol = 1e-6;
    entry.expected.verdicts["circle"] = CapillaryVerdict::Capillary;
    return entry;
}

CatalogEntry build_de_sitter_shifted_cap(double c, double cap_c, double shift) {
    if (!(c > 0.0) || !(cap_c > 0.0))
        throw DomainError("de_sitter_shifted_cap: radii must be positive");
    if (!(shift < 0.0))
        throw DomainError("de_sitter_shifted_cap: shift must be negative so the upper "
                          "cap meets the de Sitter surface");
    const double x3b = (shift * shift - c * c - cap_c * cap_c) / (2.0 * shift);
    const double t_b = std::acosh((x3b - shift) / cap_c);
    const double R = std::tanh(0.5 * t_b);

    PatchDomain dom = PatchDomain::disk(R);
    const auto jet = cap_jet(cap_c, shift);
    ParametricPatch patch(dom, jet, [jet](double u, double v) { return jet(u, v).X; });
    patch.set_eval_margin(0.25 * (1.0 - R));

    std::vector<BoundaryComponent> supports;
    supports.push_back(edge_component(dom, "circle", SupportSurface::de_sitter(c)));

    ExpectedValues exp;
    exp.mean_curvature = 1.0 / cap_c;
    exp.kappa_constant = 1.0 / cap_c;
    exp.everywhere_umbilic = true;
    exp.phi_rel_max = 1e-8;
    exp.kappa_gap_max = 1e-8;
    exp.isothermal_max = 1e-9;
    exp.beta_const["circle"] =
        std::asinh(std::fabs(c * c + shift * x3b) / (c * cap_c));
    exp.verdicts["circle"] = CapillaryVerdict::Capillary;

    return {"desitter-cap",
            "shifted hyperbolic cap meeting a de Sitter surface at constant angle",
            std::move(patch), std::move(supports), std::move(exp),
            {{"c", c}, {"cap_c", cap_c}, {"shift", shift}}};
}

CatalogEntry build_perturbed_cap(double scale, double u0, double v0) {
    if (!(scale > 0.0) || !(scale < 0.37))
        throw DomainError("perturbed_cap: scale must lie in (0, 0.37) to stay spacelike");
    PatchDomain dom = PatchDomain::disk(1.0);
    auto jet = [scale, u0, v0](double u, double v) {
        const double a = u - u0, b = v - v0;
        const double phi = scale * ((a * a + b * b) / 2.0 + (a * a * a - 3.0 * a * b * b) / 6.0);
        const double pu = scale * (a + (a * a - b * b) / 2.0);
        const double pv = scale * (b - a * b);
        const double puu = scale * (1.0 + a);
        const double puv = -scale * b;
        const double pvv = scale * (1.0 - a);
        Jet2 j;
        j.X = {u, v, phi};
        j.Xu = {1, 0, pu};
        j.Xv = {0, 1, pv};
        j.Xuu = {0, 0, puu};
        j.Xuv = {0, 0, puv};
        j.Xvv = {0, 0, pvv};
        return j;
    };
    ParametricPatch patch(dom, jet, [jet](double u, double v) { return jet(u, v).X; });
    patch.set_eval_margin(0.1);

    ExpectedValues exp;
    exp.isolated_umbilics = 1;
    exp.umbilic_location = Vec2{u0, v0};
    exp.umbilic_index = -0.5;

    return {"perturbed-cap",
            "spacelike graph with a single interior umbilic placed by construction",
            std::move(patch), {}, std::move(exp),
            {{"scale", scale}, {"u0", u0}, {"v0", v0}}};
}

CatalogEntry build_tilted_cut_negative(double a, double d, double m, double sigma_lo) {
    if (!(a > 0.0) || !(sigma_lo > 0.0))
        throw DomainError("tilted_cut: a and sigma_lo must be positive");
    if (!(m > 0.0) || !(m < 1.0))
        throw DomainError("tilted_cut: tilt slope must lie in (0, 1) for a spacelike plane");

    // outer boundary sigma solves sigma = d + m sinh(sigma) cos(theta)
    auto sigma_cut = [d, m](double theta) {
        const double co = std::cos(theta);
        double s = d;
        for (int it = 0; it < 60; ++it) {
            const double f = s - d - m * std::sinh(s) * co;
            const double fp = 1.0 - m * std::cosh(s) * co;
            const double step = f / fp;
            s -= step;
            if (std::fabs(step) < 1e-15) break;
        }
        return s;
    };
    // sanity: the cut must stay above sigma_lo for every direction
    if (!(sigma_cut(kPi) > sigma_lo + 0.05))
        throw DomainError("tilted_cut: cut dips below sigma_lo; lower the tilt");

    PatchDomain dom = PatchDomain::rectangle(0.0, 1.0, 0.0, kTwoPi);
    auto pos = [a, sigma_lo, sigma_cut](double rho, double theta) {
        const double s = sigma_lo + rho * (sigma_cut(theta) - sigma_lo);
        return LVec3{a * std::sinh(s) * std::cos(theta), a * std::sinh(s) * std::sin(theta),
                     a * s};
    };
    ParametricPatch patch(dom, pos);
    patch.set_eval_margin(0.02);

    const double root = std::sqrt(1.0 - m * m);
    std::vector<BoundaryComponent> supports;
    supports.push_back(edge_component(
        dom, "u_max",
        SupportSurface::spacelike_plane({m / root, 0.0, 1.0 / root}, -a * d / root)));

    ExpectedValues exp;
    exp.verdicts["u_max"] = CapillaryVerdict::NotConstantAngle;
    exp.joachimsthal_min["u_max"] = 1e-3;

    return {"tilted-cut-negative",
            "catenoid piece cut by a tilted spacelike plane; the contact angle "
            "varies along the cut",
            std::move(patch), std::move(supports), std::move(exp),
            {{"a", a}, {"d", d}, {"m", m}, {"sigma_lo", sigma_lo}}};
}

std::vector<std::string> catalog_names() {
    return {"planar-disk",        "hyperbolic-cap", "lorentzian-catenoid",
            "truncated-catenoid", "catenoid-annulus", "desitter-disk",
            "desitter-cap",       "perturbed-cap",  "tilted-cut-negative"};
}

CatalogEntry build_catalog_entry(const std::string& name,
                                 const std::map<std::string, double>& o) {
    if (name == "planar-disk") return build_planar_disk(get(o, "radius", 1.0));
    if (name == "hyperbolic-cap")
        return build_hyperbolic_cap(get(o, "c", 1.0), get(o, "t_max", 1.0));
    if (name == "lorentzian-catenoid")
        return build_lorentzian_catenoid(get(o, "a", 1.0), get(o, "sigma0", 0.5),
                                         get(o, "sigma1", 2.0));
    if (name == "truncated-catenoid")
        return build_truncated_catenoid(get(o, "a", 1.0), get(o, "sigma0", 0.5),
                                        get(o, "sigma1", 1.5),
                                        get(o, "theta", 2.0943951023931953));
    if (name == "catenoid-annulus")
        return build_catenoid_annulus(get(o, "a", 1.0), get(o, "sigma0", 0.4),
                                      get(o, "sigma1", 1.1),
                                      get(o, "theta_span", 2.0943951023931953));
    if (name == "desitter-disk") return build_de_sitter_configuration(get(o, "c", 1.0));
    if (name == "desitter-cap")
        return build_de_sitter_shifted_cap(get(o, "c", 1.0), get(o, "cap_c", 1.0),
                                           get(o, "shift", -2.0));
    if (name == "perturbed-cap")
        return build_perturbed_cap(get(o, "scale", 0.25), get(o, "u0", 0.15),
                                   get(o, "v0", -0.10));
    if (name == "tilted-cut-negative")
        return build_tilted_cut_negative(get(o, "a", 1.0), get(o, "d", 1.0),
                                         get(o, "m", 0.15), get(o, "sigma_lo", 0.4));
    throw DomainError("unknown catalog surface: " + name);
}

} // namespace lcmc
