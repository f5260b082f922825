#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "lcmc/errors.hpp"
#include "lcmc/vec2.hpp"

namespace lcmc {

enum class DomainKind { Rectangle, HalfDisk, Disk, AnnularSector };

// Corner of the parameter boundary. edge_a/edge_b are unit tangents of the
// two adjacent edges, pointing away from the vertex into each edge.
struct DomainVertex {
    Vec2 point;
    Vec2 edge_a;
    Vec2 edge_b;
};

struct BBox {
    double u0 = 0, u1 = 0, v0 = 0, v1 = 0;
    double width() const { return u1 - u0; }
    double height() const { return v1 - v0; }
    double diameter() const { return std::hypot(width(), height()); }
};

// Conformal local chart: zeta = rot*(z - origin) or zeta = rot*log(z/origin),
// with |rot| = 1 up to a real scale. Used to flatten boundary arcs so the
// reflection construction always sees a straight edge on the real axis.
struct ConformalChart {
    bool log_map = false;
    std::complex<double> origin{0.0, 0.0};
    std::complex<double> rot{1.0, 0.0};

    std::complex<double> to_chart(std::complex<double> z) const {
        return log_map ? rot * std::log(z / origin) : rot * (z - origin);
    }
    std::complex<double> from_chart(std::complex<double> zeta) const {
        const std::complex<double> w = zeta / rot;
        return log_map ? origin * std::exp(w) : origin + w;
    }
    // d zeta / d z
    std::complex<double> derivative(std::complex<double> z) const {
        return log_map ? rot / z : rot;
    }
};

// Two-dimensional parameter domain of an immersion. All domains are closed;
// `contains` accepts an optional dilation margin for stencil placement.
class PatchDomain {
public:
    static PatchDomain rectangle(double u0, double u1, double v0, double v1);
    static PatchDomain half_disk(double radius);           // diameter on v = 0, interior v > 0
    static PatchDomain disk(double radius);
    static PatchDomain annular_sector(double r0, double r1, double theta0, double theta1);

    DomainKind kind() const { return kind_; }
    BBox bounding_box() const;
    bool contains(Vec2 p, double margin = 0.0) const;

    // Signed distance to the topological boundary: positive inside.
    double boundary_distance(Vec2 p) const;

    std::vector<DomainVertex> vertices() const;

    // 1 for disk-type domains, 0 for a full annulus.
    int euler_characteristic() const;
    bool disk_type() const { return euler_characteristic() == 1; }

    // Boundary edges in counterclockwise order (interior on the left).
    struct Edge {
        std::string name;
        bool straight = true;
        std::function<Vec2(double)> point;    // s in [0,1]
        std::function<Vec2(double)> tangent;  // unit, along increasing s
        double param_length = 0.0;
    };
    std::vector<Edge> edges() const;

    // Chart flattening the boundary near p0: p0 -> 0, the edge through p0
    // into the real axis, interior to Im > 0. p0 must lie on a smooth edge.
    ConformalChart boundary_chart(Vec2 p0) const;

    // Chart for a vertex: vertex -> 0, one adjacent edge along arg = 0,
    // interior into the wedge 0 < arg < opening.
    struct VertexChart {
        ConformalChart chart;
        double opening = 0.0;  // parameter-plane opening angle of the wedge
    };
    VertexChart vertex_chart(const DomainVertex& vx) const;

    // Raw shape parameters (meaning depends on kind).
    double p0() const { return a_; }
    double p1() const { return b_; }
    double p2() const { return c_; }
    double p3() const { return d_; }

private:
    PatchDomain(DomainKind k, double a, double b, double c, double d)
        : kind_(k), a_(a), b_(b), c_(c), d_(d) {}

    DomainKind kind_;
    double a_, b_, c_, d_;  // Rectangle: u0,u1,v0,v1; Disk/HalfDisk: radius in a_;
                            // AnnularSector: r0,r1,theta0,theta1
};

} // namespace lcmc
