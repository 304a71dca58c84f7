// Finite-difference operators for cross-validating the symbolic path:
// the 4D Laplacian (5-point stencil per axis), the Cauchy-Fueter operator,
// and the slice Cauchy-Riemann residual for anti-regularity checks.
#pragma once

#include <functional>

#include "fueter/quaternion.hpp"

namespace fueter {

using QuatFn = std::function<Quatd(const Quatd&)>;

constexpr double kFdStep = 1e-4;

inline Quatd shift(const Quatd& q, int axis, double h) {
    Quatd r = q;
    switch (axis) {
        case 0: r.w += h; break;
        case 1: r.x += h; break;
        case 2: r.y += h; break;
        default: r.z += h; break;
    }
    return r;
}

// Delta f(q) with the fourth-order stencil (-1, 16, -30, 16, -1)/(12 h^2)
// applied along each of the four axes.
inline Quatd laplacian_fd(const QuatFn& f, const Quatd& q, double h = kFdStep) {
    Quatd acc{};
    Quatd f0 = f(q);
    for (int axis = 0; axis < 4; ++axis) {
        Quatd fp1 = f(shift(q, axis, h)), fm1 = f(shift(q, axis, -h));
        Quatd fp2 = f(shift(q, axis, 2 * h)), fm2 = f(shift(q, axis, -2 * h));
        acc += (-fp2 + fp1 * 16.0 - f0 * 30.0 + fm1 * 16.0 - fm2) * (1.0 / (12.0 * h * h));
    }
    return acc;
}

// D f(q) = sum_u e_u d_{x_u} f(q) by central differences.
inline Quatd dirac_fd(const QuatFn& f, const Quatd& q, double h = kFdStep) {
    static const Quatd units[4] = {Quatd{1, 0, 0, 0}, Quatd{0, 1, 0, 0}, Quatd{0, 0, 1, 0},
                                   Quatd{0, 0, 0, 1}};
    Quatd acc{};
    for (int axis = 0; axis < 4; ++axis) {
        Quatd d = (f(shift(q, axis, h)) - f(shift(q, axis, -h))) * (1.0 / (2.0 * h));
        acc += units[axis] * d;
    }
    return acc;
}

// Residual of the conjugate Cauchy-Riemann system for g restricted to the
// slice C_I at p = x + I y: d_x g - (d_y g) I, which vanishes when g is a
// power series in pbar with left coefficients.
inline Quatd slice_antiregular_residual(const QuatFn& g, const Quatd& p, const ImaginaryUnit& I,
                                        double h = kFdStep) {
    Quatd dx = (g(p + Quatd{h}) - g(p - Quatd{h})) * (1.0 / (2.0 * h));
    Quatd dy = (g(p + I.q() * h) - g(p - I.q() * h)) * (1.0 / (2.0 * h));
    return dx - dy * I.q();
}

}  // namespace fueter
