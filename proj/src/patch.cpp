#include "lcmc/patch.hpp"

#include <array>
#include <cmath>

namespace lcmc {

namespace {

// One-dimensional second-order stencil. w1 weights a first derivative,
// w2 a second derivative; both divided by the step later.
struct Stencil1D {
    int n = 0;
    std::array<int, 4> off{};
    std::array<double, 4> w1{};
    std::array<double, 4> w2{};
};

Stencil1D centered() {
    return {3, {-1, 0, 1}, {-0.5, 0.0, 0.5}, {1.0, -2.0, 1.0}};
}

Stencil1D one_sided(int dir) {
    // dir = +1 forward, -1 backward
    Stencil1D s;
    s.n = 4;
    s.off = {0, dir, 2 * dir, 3 * dir};
    s.w1 = {-1.5 * dir, 2.0 * dir, -0.5 * dir, 0.0};
    s.w2 = {2.0, -5.0, 4.0, -1.0};
    return s;
}

} // namespace

ParametricPatch::ParametricPatch(PatchDomain domain, JetFn jet, PositionFn position)
    : domain_(std::move(domain)), jet_(std::move(jet)), pos_(std::move(position)) {}

ParametricPatch::ParametricPatch(PatchDomain domain, PositionFn position, double fd_step)
    : domain_(std::move(domain)), pos_(std::move(position)) {
    h_ = fd_step > 0.0 ? fd_step : 1e-4 * domain_.bounding_box().diameter();
}

ParametricPatch ParametricPatch::finite_difference_copy(double fd_step) const {
    ParametricPatch p(domain_, pos_, fd_step);
    p.margin_ = margin_;
    return p;
}

LVec3 ParametricPatch::eval_checked(double u, double v) const {
    const LVec3 x = pos_(u, v);
    if (!x.finite()) throw DegeneracyError("patch: non-finite position value");
    return x;
}

LVec3 ParametricPatch::position(double u, double v) const {
    if (!domain_.contains({u, v}, margin_))
        throw DomainError("patch: evaluation outside the closed domain");
    return eval_checked(u, v);
}

Jet2 ParametricPatch::jet(double u, double v) const {
    if (!domain_.contains({u, v}, margin_))
        throw DomainError("patch: evaluation outside the closed domain");
    if (jet_) {
        const Jet2 j = jet_(u, v);
        if (!j.X.finite() || !j.Xu.finite() || !j.Xv.finite() ||
            !j.Xuu.finite() || !j.Xuv.finite() || !j.Xvv.finite())
            throw DegeneracyError("patch: non-finite jet value");
        return j;
    }
    return fd_jet(u, v);
}

Jet2 ParametricPatch::fd_jet(double u, double v) const {
    const double h = h_;

    auto axis_fits = [&](bool along_u, const Stencil1D& s) {
        for (int k = 0; k < s.n; ++k) {
            const Vec2 p = along_u ? Vec2{u + s.off[k] * h, v} : Vec2{u, v + s.off[k] * h};
            if (!domain_.contains(p, margin_)) return false;
        }
        return true;
    };
    auto pick = [&](bool along_u) {
        const Stencil1D c = centered();
        if (axis_fits(along_u, c)) return c;
        const Stencil1D f = one_sided(+1);
        if (axis_fits(along_u, f)) return f;
        const Stencil1D b = one_sided(-1);
        if (axis_fits(along_u, b)) return b;
        throw DomainError("patch: finite-difference stencil does not fit the domain");
    };

    Stencil1D su = pick(true);
    Stencil1D sv = pick(false);

    // The mixed term needs the full tensor of nodes. On domains with curved
    // boundaries a corner node can fall outside even though both axis
    // stencils fit; degrade to one-sided stencils until everything fits.
    auto tensor_fits = [&](const Stencil1D& a, const Stencil1D& b) {
        for (int i = 0; i < a.n; ++i)
            for (int j = 0; j < b.n; ++j)
                if (!domain_.contains({u + a.off[i] * h, v + b.off[j] * h}, margin_))
                    return false;
        return true;
    };
    if (!tensor_fits(su, sv)) {
        const std::array<Stencil1D, 3> cands{centered(), one_sided(+1), one_sided(-1)};
        bool ok = false;
        for (const auto& cu : cands) {
            if (!axis_fits(true, cu)) continue;
            for (const auto& cv : cands) {
                if (!axis_fits(false, cv)) continue;
                if (tensor_fits(cu, cv)) {
                    su = cu;
                    sv = cv;
                    ok = true;
                    break;
                }
            }
            if (ok) break;
        }
        if (!ok) throw DomainError("patch: mixed-derivative stencil does not fit the domain");
    }

    // Memoized evaluations on the (at most 7x7) offset lattice.
    std::array<std::array<LVec3, 7>, 7> cache{};
    std::array<std::array<bool, 7>, 7> have{};
    auto at = [&](int i, int j) -> const LVec3& {
        auto& slot = cache[i + 3][j + 3];
        auto& flag = have[i + 3][j + 3];
        if (!flag) {
            slot = eval_checked(u + i * h, v + j * h);
            flag = true;
        }
        return slot;
    };

    Jet2 out;
    out.X = at(0, 0);

    auto combine1 = [&](const Stencil1D& s, bool along_u) {
        LVec3 acc{};
        for (int k = 0; k < s.n; ++k) {
            if (s.w1[k] == 0.0) continue;
            acc = acc + (along_u ? at(s.off[k], 0) : at(0, s.off[k])) * s.w1[k];
        }
        return acc / h;
    };
    auto combine2 = [&](const Stencil1D& s, bool along_u) {
        LVec3 acc{};
        for (int k = 0; k < s.n; ++k)
            acc = acc + (along_u ? at(s.off[k], 0) : at(0, s.off[k])) * s.w2[k];
        return acc / (h * h);
    };

    out.Xu = combine1(su, true);
    out.Xv = combine1(sv, false);
    out.Xuu = combine2(su, true);
    out.Xvv = combine2(sv, false);

    LVec3 mixed{};
    for (int i = 0; i < su.n; ++i) {
        if (su.w1[i] == 0.0) continue;
        for (int j = 0; j < sv.n; ++j) {
            if (sv.w1[j] == 0.0) continue;
            mixed = mixed + at(su.off[i], sv.off[j]) * (su.w1[i] * sv.w1[j]);
        }
    }
    out.Xuv = mixed / (h * h);
    return out;
}

} // namespace lcmc
