#pragma once

#include <complex>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "lcmc/surface.hpp"

namespace lcmc {

// Value of the Hopf function Phi = e - g - 2if at one point of an isothermal
// chart. Zeros of Phi are exactly the umbilic points of a CMC chart.
struct HopfSample {
    std::complex<double> z;
    std::complex<double> phi;
    double lambda2 = 0.0;
};

// Evaluates Phi; rejects points where the chart is not isothermal to the
// 1e-6 relative gate.
HopfSample hopf_function(const ParametricPatch& patch, double u, double v);

// max |d(Phi)/d(zbar)| over interior lattice points, estimated by centered
// differences and normalized by max |Phi|. Small values certify a CMC chart;
// the certificate threshold at the default grid is 1e-3.
double cr_residual(const ParametricPatch& patch, int grid,
                   ExecMode exec = ExecMode::Parallel);

inline constexpr double kCrCertificateGate = 1e-3;

// Winding count of arg(Phi) along a closed sample loop: returns the enclosed
// zero order (negative for poles). Consecutive argument jumps must stay
// under pi/2 and |Phi| above the noise floor, otherwise SamplingError.
int winding_of_phi(std::span<const HopfSample> loop);

// --- fields and loop indices -------------------------------------------------

// A synthetic or patch-derived Hopf function on the parameter plane.
using PhiField = std::function<std::complex<double>(std::complex<double>)>;
// A line field: unit direction at a parameter point, defined modulo sign.
using DirectionField = std::function<Vec2(Vec2)>;

PhiField patch_phi_field(const ParametricPatch& patch);
DirectionField patch_direction_field(const ParametricPatch& patch);
// Curvature-line directions of a Hopf field: arg(dz) = -arg(Phi)/2 (mod pi/2).
DirectionField phi_direction_field(PhiField phi);

struct LoopOptions {
    int min_samples = 64;
    int max_samples = 4096;
    double max_jump = 1.5707963267948966;  // pi/2
};

// Unwrapped variation of arg Phi over the circle |z - center| = radius,
// divided by 2*pi (real-valued winding). Adaptively resamples.
double phi_winding(const PhiField& phi, std::complex<double> center, double radius,
                   const LoopOptions& opts = {});

// Rotation index of the line field at an interior singularity:
// -(1/4pi) * variation of arg Phi.
double rotation_index_interior(const PhiField& phi, std::complex<double> center,
                               double radius, const LoopOptions& opts = {});

// Same index from the field itself: half the winding of the doubled
// direction angle, delta(2 theta) / (4 pi).
double direction_winding_index(const DirectionField& field, Vec2 center, double radius,
                               const LoopOptions& opts = {});

// Patch-level interior index with the argument-principle and direction-
// winding routes cross-checked on isothermal charts.
double rotation_index_interior(const ParametricPatch& patch, Vec2 point,
                               double loop_radius, const LoopOptions& opts = {});

// Boundary rotation index via reflection: the field lives on the closed
// upper half plane of a local chart (boundary on the real axis, singularity
// at 0); it is extended to the lower half by (u,v) -> (u,-v),
// (du,dv) -> (du,-dv), and the index is half the full-loop index of the
// extended field.
double rotation_index_boundary(const DirectionField& upper_field, double radius,
                               const LoopOptions& opts = {});

// Patch-level version: the local chart comes from the domain edge through
// boundary_point (straight edges as-is, circular arcs through a conformal
// log chart). The edge must be a line of curvature at the point.
double rotation_index_boundary(const ParametricPatch& patch, Vec2 boundary_point,
                               double arc_radius, const LoopOptions& opts = {});

// Vertex rotation index by corner straightening: the wedge 0 < arg zeta < xi
// is mapped by w = zeta^(pi/xi), the field transported (direction angles
// shift by (pi/xi - 1) arg zeta), then the boundary reflection construction
// runs in the w chart.
double rotation_index_vertex(const DirectionField& wedge_field, double opening,
                             double radius, const LoopOptions& opts = {});

double rotation_index_vertex(const ParametricPatch& patch, const DomainVertex& vx,
                             double arc_radius, const LoopOptions& opts = {});

// Interior angle at a boundary vertex, measured in the induced first form
// and adjusted to the interior side. Returns a value in (0, 2 pi).
double vertex_angle(const ParametricPatch& patch, const DomainVertex& vx);

// --- umbilic detection and accounting ---------------------------------------

enum class UmbilicKind { Interior, BoundaryRegular, VertexAcute, VertexReflex };
enum class IndexMethod { ArgumentPrinciple, DirectionWinding, Reflection, CornerStraightening };

const char* to_string(UmbilicKind k);
const char* to_string(IndexMethod m);

struct UmbilicHit {
    Vec2 location;
    UmbilicKind kind = UmbilicKind::Interior;
    double kappa_gap = 0.0;
};

struct UmbilicScan {
    bool everywhere_umbilic = false;
    double umbilic_fraction = 0.0;  // fraction of grid points below the gate
    std::vector<UmbilicHit> hits;
};

// Grid scan for local minima of |kappa1 - kappa2| under 1e-6 (1 + |H|),
// refined locally, merged within merge_radius (default: 3 grid cells).
// Raises the everywhere-umbilic flag instead of listing points when the
// whole grid sits below the gate.
UmbilicScan find_umbilics(const ParametricPatch& patch, int grid,
                          double merge_radius = 0.0,
                          ExecMode exec = ExecMode::Parallel);

struct UmbilicRecord {
    Vec2 location;
    UmbilicKind kind = UmbilicKind::Interior;
    int order = 0;        // zero order of Phi; -1 encodes a simple pole
    double index = 0.0;   // rotation index
    double angle = 0.0;   // interior angle for vertex records, 0 otherwise
    IndexMethod method = IndexMethod::DirectionWinding;
};

struct IndexReport {
    bool everywhere_umbilic = false;
    std::vector<UmbilicRecord> records;
    double index_sum = 0.0;
    int euler_characteristic = 1;
    double residual = 0.0;            // |index_sum - chi|
    bool ph_applicable = true;        // boundary edges are lines of curvature
    bool consistent = true;           // residual and per-kind bounds hold
    int acute_vertex_count = 0;
    double lemma_sum_bound = 0.0;     // (#acute)/4
    bool contradiction_regime = false;  // <= 3 acute vertices on a non-umbilic disk
    std::vector<std::string> violations;
};

// Pure accounting over prepared records.
IndexReport poincare_hopf_report(std::vector<UmbilicRecord> records,
                                 const PatchDomain& domain);

// Full pipeline: umbilic scan, per-singularity indices (argument principle
// cross-checked against direction winding on isothermal charts), vertex
// records, and the index sum against the Euler characteristic.
IndexReport index_report(const ParametricPatch& patch, int grid,
                         ExecMode exec = ExecMode::Parallel);

inline constexpr double kIndexResidualGate = 0.05;

} // namespace lcmc
