#pragma once

#include <stdexcept>

namespace lcmc {

// Base class for all library failures.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Wrong causal class for an operation (a spacelike vector where a
// future-directed timelike one is required, and the like).
struct CausalError : Error { using Error::Error; };

// Parameter-domain violations: evaluation outside the closed domain,
// degenerate corners, stencils that cannot fit.
struct DomainError : Error { using Error::Error; };

// Geometric degeneracy: non-spacelike tangent plane, vanishing cross
// product, principal directions requested at an umbilic point.
struct DegeneracyError : Error { using Error::Error; };

// Loop sampling too coarse, |phi| under the noise floor, grids too small.
struct SamplingError : Error { using Error::Error; };

// Chart-level gates: non-isothermal chart where one is required,
// unsupported boundary geometry for reflection charts.
struct ChartError : Error { using Error::Error; };

// Frame construction and trihedra reconstruction failures.
struct FrameError : Error { using Error::Error; };

struct IoError : Error { using Error::Error; };

} // namespace lcmc
