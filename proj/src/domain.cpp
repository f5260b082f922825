#include "lcmc/domain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace lcmc {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

// Wraps an angle into [0, 2*pi).
double wrap_angle(double a) {
    double w = std::fmod(a, kTwoPi);
    if (w < 0.0) w += kTwoPi;
    return w;
}

double point_segment_distance(Vec2 p, Vec2 a, Vec2 b) {
    const Vec2 ab = b - a;
    const double len2 = dot(ab, ab);
    double t = len2 > 0.0 ? dot(p - a, ab) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    return norm(p - (a + ab * t));
}

} // namespace

PatchDomain PatchDomain::rectangle(double u0, double u1, double v0, double v1) {
    if (!(u1 > u0) || !(v1 > v0))
        throw DomainError("rectangle: empty interior");
    return PatchDomain(DomainKind::Rectangle, u0, u1, v0, v1);
}

PatchDomain PatchDomain::half_disk(double radius) {
    if (!(radius > 0.0)) throw DomainError("half_disk: radius must be positive");
    return PatchDomain(DomainKind::HalfDisk, radius, 0, 0, 0);
}

PatchDomain PatchDomain::disk(double radius) {
    if (!(radius > 0.0)) throw DomainError("disk: radius must be positive");
    return PatchDomain(DomainKind::Disk, radius, 0, 0, 0);
}

PatchDomain PatchDomain::annular_sector(double r0, double r1, double theta0, double theta1) {
    if (!(r1 > r0) || r0 < 0.0)
        throw DomainError("annular_sector: need 0 <= r0 < r1");
    if (!(theta1 > theta0) || theta1 - theta0 > kTwoPi + 1e-12)
        throw DomainError("annular_sector: need theta0 < theta1 <= theta0 + 2*pi");
    return PatchDomain(DomainKind::AnnularSector, r0, r1, theta0, theta1);
}

BBox PatchDomain::bounding_box() const {
    switch (kind_) {
        case DomainKind::Rectangle: return {a_, b_, c_, d_};
        case DomainKind::HalfDisk: return {-a_, a_, 0.0, a_};
        case DomainKind::Disk: return {-a_, a_, -a_, a_};
        case DomainKind::AnnularSector: {
            // corners plus the axis crossings of the outer arc
            const double r0 = a_, r1 = b_;
            double u0 = 1e300, u1 = -1e300, v0 = 1e300, v1 = -1e300;
            auto grow = [&](double u, double v) {
                u0 = std::min(u0, u);
                u1 = std::max(u1, u);
                v0 = std::min(v0, v);
                v1 = std::max(v1, v);
            };
            for (double th : {c_, d_}) {
                grow(r0 * std::cos(th), r0 * std::sin(th));
                grow(r1 * std::cos(th), r1 * std::sin(th));
            }
            for (int k = -4; k <= 4; ++k) {
                const double th = k * kPi / 2.0;
                if (th >= c_ && th <= d_)
                    grow(r1 * std::cos(th), r1 * std::sin(th));
            }
            return {u0, u1, v0, v1};
        }
    }
    return {};
}

bool PatchDomain::contains(Vec2 p, double margin) const {
    return boundary_distance(p) >= -margin - 1e-14 * (1.0 + bounding_box().diameter());
}

double PatchDomain::boundary_distance(Vec2 p) const {
    switch (kind_) {
        case DomainKind::Rectangle: {
            const double ex = std::max(a_ - p.u, p.u - b_);
            const double ey = std::max(c_ - p.v, p.v - d_);
            if (ex <= 0.0 && ey <= 0.0) return -std::max(ex, ey);
            return -std::hypot(std::max(ex, 0.0), std::max(ey, 0.0));
        }
        case DomainKind::Disk:
            return a_ - norm(p);
        case DomainKind::HalfDisk: {
            if (p.v >= 0.0) {
                const double dr = a_ - norm(p);
                if (dr < 0.0) return dr;
                return std::min(dr, p.v);
            }
            if (std::fabs(p.u) <= a_) return p.v;
            return -std::hypot(std::fabs(p.u) - a_, p.v);
        }
        case DomainKind::AnnularSector: {
            const double r0 = a_, r1 = b_, th0 = c_, th1 = d_;
            const double span = th1 - th0;
            const bool full = span >= kTwoPi - 1e-12;
            const double r = norm(p);
            const double rel = wrap_angle(std::atan2(p.v, p.u) - th0);
            const bool ang_in = full || rel <= span;
            const bool inside = r >= r0 && r <= r1 && (ang_in || r == 0.0);

            double d = std::numeric_limits<double>::infinity();
            // arcs
            if (ang_in || full) {
                d = std::min(d, std::fabs(r1 - r));
                if (r0 > 0.0) d = std::min(d, std::fabs(r - r0));
            }
            if (!full) {
                const Vec2 e0{std::cos(th0), std::sin(th0)};
                const Vec2 e1{std::cos(th1), std::sin(th1)};
                d = std::min(d, point_segment_distance(p, e0 * r0, e0 * r1));
                d = std::min(d, point_segment_distance(p, e1 * r0, e1 * r1));
                // arc endpoints cover the case where the angle is out of range
                if (!ang_in) {
                    d = std::min(d, norm(p - e0 * r1));
                    d = std::min(d, norm(p - e1 * r1));
                    if (r0 > 0.0) {
                        d = std::min(d, norm(p - e0 * r0));
                        d = std::min(d, norm(p - e1 * r0));
                    }
                }
            }
            if (r0 == 0.0 && !full) d = std::min(d, norm(p));  // apex
            return inside ? d : -d;
        }
    }
    return 0.0;
}

std::vector<DomainVertex> PatchDomain::vertices() const {
    std::vector<DomainVertex> out;
    switch (kind_) {
        case DomainKind::Rectangle: {
            const Vec2 pu{1, 0}, pv{0, 1};
            out.push_back({{a_, c_}, pu, pv});
            out.push_back({{b_, c_}, -pu, pv});
            out.push_back({{b_, d_}, -pu, -pv});
            out.push_back({{a_, d_}, pu, -pv});
            break;
        }
        case DomainKind::HalfDisk: {
            // Diameter endpoints; the adjacent arc tangents are vertical there.
            out.push_back({{-a_, 0.0}, {1, 0}, {0, 1}});
            out.push_back({{a_, 0.0}, {-1, 0}, {0, 1}});
            break;
        }
        case DomainKind::Disk:
            break;
        case DomainKind::AnnularSector: {
            const double r0 = a_, r1 = b_, th0 = c_, th1 = d_;
            if (th1 - th0 >= kTwoPi - 1e-12) break;  // full annulus, smooth boundary
            const Vec2 e0{std::cos(th0), std::sin(th0)};
            const Vec2 e1{std::cos(th1), std::sin(th1)};
            const Vec2 t0{-std::sin(th0), std::cos(th0)};
            const Vec2 t1{-std::sin(th1), std::cos(th1)};
            if (r0 > 0.0) {
                out.push_back({e0 * r0, e0, t0});
                out.push_back({e1 * r0, e1, -t1});
            } else {
                out.push_back({{0, 0}, e0, e1});  // apex of a wedge
            }
            out.push_back({e0 * r1, -e0, t0});
            out.push_back({e1 * r1, -e1, -t1});
            break;
        }
    }
    return out;
}

int PatchDomain::euler_characteristic() const {
    if (kind_ == DomainKind::AnnularSector && a_ > 0.0 && d_ - c_ >= kTwoPi - 1e-12)
        return 0;  // full annulus
    return 1;
}

std::vector<PatchDomain::Edge> PatchDomain::edges() const {
    std::vector<Edge> out;
    auto line = [](std::string name, Vec2 from, Vec2 to) {
        Edge e;
        e.name = std::move(name);
        e.straight = true;
        const Vec2 t = normalized(to - from);
        e.point = [from, to](double s) { return from + (to - from) * s; };
        e.tangent = [t](double) { return t; };
        e.param_length = norm(to - from);
        return e;
    };
    auto arc = [](std::string name, double radius, double from, double to) {
        Edge e;
        e.name = std::move(name);
        e.straight = false;
        e.point = [radius, from, to](double s) {
            const double a = from + (to - from) * s;
            return Vec2{radius * std::cos(a), radius * std::sin(a)};
        };
        const double sgn = to > from ? 1.0 : -1.0;
        e.tangent = [from, to, sgn](double s) {
            const double a = from + (to - from) * s;
            return Vec2{-sgn * std::sin(a), sgn * std::cos(a)};
        };
        e.param_length = radius * std::fabs(to - from);
        return e;
    };

    switch (kind_) {
        case DomainKind::Rectangle:
            out.push_back(line("v_min", {a_, c_}, {b_, c_}));
            out.push_back(line("u_max", {b_, c_}, {b_, d_}));
            out.push_back(line("v_max", {b_, d_}, {a_, d_}));
            out.push_back(line("u_min", {a_, d_}, {a_, c_}));
            break;
        case DomainKind::HalfDisk:
            out.push_back(line("diameter", {-a_, 0}, {a_, 0}));
            out.push_back(arc("arc", a_, 0.0, kPi));
            break;
        case DomainKind::Disk:
            out.push_back(arc("circle", a_, 0.0, kTwoPi));
            break;
        case DomainKind::AnnularSector: {
            const double r0 = a_, r1 = b_, th0 = c_, th1 = d_;
            const bool full = th1 - th0 >= kTwoPi - 1e-12;
            if (full) {
                out.push_back(arc("outer", r1, th0, th1));
                if (r0 > 0.0) out.push_back(arc("inner", r0, th1, th0));
                break;
            }
            const Vec2 e0{std::cos(th0), std::sin(th0)};
            const Vec2 e1{std::cos(th1), std::sin(th1)};
            out.push_back(line("theta_min", e0 * r0, e0 * r1));
            out.push_back(arc("outer", r1, th0, th1));
            out.push_back(line("theta_max", e1 * r1, e1 * r0));
            if (r0 > 0.0) out.push_back(arc("inner", r0, th1, th0));
            break;
        }
    }
    return out;
}

ConformalChart PatchDomain::boundary_chart(Vec2 p0) const {
    const double scale = bounding_box().diameter();
    const double tol = 1e-7 * scale;
    for (const auto& vx : vertices())
        if (norm(p0 - vx.point) < 1e-6 * scale)
            throw ChartError("boundary_chart: point is a vertex; use vertex_chart");

    const std::complex<double> z0 = to_complex(p0);
    auto straight = [&](Vec2 ccw_tangent) {
        ConformalChart ch;
        ch.origin = z0;
        ch.rot = std::conj(to_complex(ccw_tangent));
        return ch;
    };
    auto log_arc = [&](bool interior_inside) {
        ConformalChart ch;
        ch.log_map = true;
        ch.origin = z0;
        ch.rot = interior_inside ? std::complex<double>(0, -1) : std::complex<double>(0, 1);
        return ch;
    };

    switch (kind_) {
        case DomainKind::Rectangle: {
            if (std::fabs(p0.v - c_) < tol) return straight({1, 0});
            if (std::fabs(p0.u - b_) < tol) return straight({0, 1});
            if (std::fabs(p0.v - d_) < tol) return straight({-1, 0});
            if (std::fabs(p0.u - a_) < tol) return straight({0, -1});
            break;
        }
        case DomainKind::HalfDisk: {
            if (std::fabs(p0.v) < tol && std::fabs(p0.u) < a_ - tol) return straight({1, 0});
            if (std::fabs(norm(p0) - a_) < tol) return log_arc(true);
            break;
        }
        case DomainKind::Disk: {
            if (std::fabs(norm(p0) - a_) < tol) return log_arc(true);
            break;
        }
        case DomainKind::AnnularSector: {
            const double r = norm(p0);
            const double th = std::atan2(p0.v, p0.u);
            if (std::fabs(r - b_) < tol) return log_arc(true);
            if (a_ > 0.0 && std::fabs(r - a_) < tol) return log_arc(false);
            if (std::fabs(wrap_angle(th - c_)) < tol / std::max(r, tol))
                return straight({std::cos(c_), std::sin(c_)});
            if (std::fabs(wrap_angle(d_ - th)) < tol / std::max(r, tol))
                return straight({-std::cos(d_), -std::sin(d_)});
            break;
        }
    }
    throw ChartError("boundary_chart: point is not on the boundary");
}

PatchDomain::VertexChart PatchDomain::vertex_chart(const DomainVertex& vx) const {
    const double scale = bounding_box().diameter();

    if (kind_ == DomainKind::HalfDisk)
        throw ChartError("vertex_chart: half-disk corners are not supported");
    if (kind_ == DomainKind::Disk)
        throw ChartError("vertex_chart: disk has no vertices");

    ConformalChart base;
    base.origin = to_complex(vx.point);
    std::complex<double> da = to_complex(vx.edge_a);
    std::complex<double> db = to_complex(vx.edge_b);
    if (kind_ == DomainKind::AnnularSector && a_ > 0.0) {
        // Log coordinates turn the sector into a rectangle; both edges
        // become straight through the corner.
        base.log_map = true;
        da /= base.origin;
        db /= base.origin;
    }
    da /= std::abs(da);
    db /= std::abs(db);

    auto try_order = [&](std::complex<double> first, std::complex<double> second,
                         VertexChart& out) {
        ConformalChart ch = base;
        ch.rot = std::conj(first);
        double opening = std::arg(ch.rot * second);
        if (opening <= 1e-12) opening += kTwoPi;
        // probe the wedge bisector; chart units are parameter units (affine)
        // or radians (log), both O(1) relative to the domain
        const double eps = base.log_map ? 1e-4 : 1e-4 * scale;
        const std::complex<double> probe =
            ch.from_chart(std::polar(eps, opening / 2.0));
        if (!contains(from_complex(probe), 0.0)) return false;
        out.chart = ch;
        out.opening = opening;
        return true;
    };

    VertexChart vc;
    if (try_order(da, db, vc)) return vc;
    if (try_order(db, da, vc)) return vc;
    throw ChartError("vertex_chart: could not orient the corner wedge");
}

} // namespace lcmc
