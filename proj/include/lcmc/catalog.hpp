#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lcmc/capillary.hpp"
#include "lcmc/patch.hpp"

namespace lcmc {

// Values an analysis run is expected to reproduce, with tolerances pinned
// where the value has a closed form.
struct ExpectedValues {
    std::optional<double> mean_curvature;   // constant H over the patch
    double h_tol = 1e-6;
    std::optional<double> kappa_constant;   // both principal curvatures
    double kappa_tol = 1e-6;
    bool everywhere_umbilic = false;
    std::optional<double> phi_rel_max;      // |Phi| / lambda^2 bound
    std::optional<double> kappa_gap_max;    // |kappa1 - kappa2| bound
    std::optional<double> isothermal_max;
    std::optional<double> cr_max;
    std::optional<int> isolated_umbilics;   // interior + boundary hits
    std::optional<Vec2> umbilic_location;
    double umbilic_pos_tol = 0.02;
    std::optional<double> umbilic_index;
    std::optional<int> vertex_count;
    std::optional<double> vertex_angle;     // common expected corner angle
    double angle_tol = 0.01;
    std::optional<double> vertex_index;     // common expected corner index
    double index_tol = 0.05;
    std::optional<double> index_sum;
    double sum_tol = 0.05;
    std::map<std::string, double> beta_const;  // edge label -> expected angle
    double beta_tol = 1e-6;
    std::map<std::string, CapillaryVerdict> verdicts;  // edge label -> verdict
    std::map<std::string, double> joachimsthal_min;    // negative controls
};

struct CatalogEntry {
    std::string name;
    std::string description;
    ParametricPatch patch;
    std::vector<BoundaryComponent> supports;
    ExpectedValues expected;
    std::map<std::string, double> params;  // resolved builder parameters
};

// --- builders -----------------------------------------------------------------

// Spacelike plane {x3 = 0} over a disk of the given radius.
CatalogEntry build_planar_disk(double radius = 1.0);

// Hyperbolic plane of pseudoradius c in the conformal disk model, cut off by
// the spacelike plane {x3 = c cosh(t_max)}.
CatalogEntry build_hyperbolic_cap(double c = 1.0, double t_max = 1.0);

// Maximal rotation surface (a sinh(s) cos(t), a sinh(s) sin(t), a s),
// s in [sigma0, sigma1], full revolution.
CatalogEntry build_lorentzian_catenoid(double a = 1.0, double sigma0 = 0.5,
                                       double sigma1 = 2.0);

// Catenoid piece between two horizontal planes and two vertical planes
// through the axis with opening theta in (0, pi).
CatalogEntry build_truncated_catenoid(double a = 1.0, double sigma0 = 0.5,
                                      double sigma1 = 1.5,
                                      double theta = 2.0943951023931953);

// Same surface over the conformal annulus chart (sigma = log r): the Hopf
// function becomes the nonconstant holomorphic 2a / w^2, which makes this the
// convergence-study chart for the CMC certificate.
CatalogEntry build_catenoid_annulus(double a = 1.0, double sigma0 = 0.4,
                                    double sigma1 = 1.1,
                                    double theta_span = 2.0943951023931953);

// Planar disk {x3 = 0, r <= c} supported by the de Sitter surface of radius c.
CatalogEntry build_de_sitter_configuration(double c = 1.0);

// Hyperbolic cap of pseudoradius cap_c shifted along x3 by `shift` (< 0),
// bounded by its intersection circle with the de Sitter surface of radius c.
CatalogEntry build_de_sitter_shifted_cap(double c = 1.0, double cap_c = 1.0,
                                         double shift = -2.0);

// Spacelike graph with exactly one interior umbilic, placed by construction.
CatalogEntry build_perturbed_cap(double scale = 0.25, double u0 = 0.15,
                                 double v0 = -0.10);

// Catenoid piece whose outer boundary lies on a tilted spacelike plane
// {m x1 - x3 = -d}; the contact angle varies along that edge, so the
// capillary verdict is negative by construction.
CatalogEntry build_tilted_cut_negative(double a = 1.0, double d = 1.0,
                                       double m = 0.15, double sigma_lo = 0.4);

std::vector<std::string> catalog_names();

// Builds a catalog entry by name with optional parameter overrides (keys as
// in the builder signatures: radius, c, t_max, a, sigma0, sigma1, theta,
// cap_c, shift, scale, u0, v0, d, m, sigma_lo).
CatalogEntry build_catalog_entry(const std::string& name,
                                 const std::map<std::string, double>& overrides = {});

} // namespace lcmc
