// Deterministic Gaussian quadrature for every integral in the toolkit:
// the real line with weight e^{-x^2}, the slice plane C_I with weight
// e^{-|p|^2}/pi, the unit disk and half disk with the Lebesgue measure
// normalized by 1/pi, and R^4 with weight e^{-|q|^2}/pi^2.
//
// integrate() evaluates the integrand at every node (OpenMP) and reduces
// with a fixed-shape pairwise summation tree; integrate_serial() is the
// reference implementation sharing the same tree, so the two results are
// bit-identical for any thread count.
#pragma once

#include <functional>
#include <vector>

#include "fueter/quaternion.hpp"

namespace fueter {

enum class QuadDomain { real_line_gauss, slice_gauss, unit_disk, half_disk, r4_gauss };

struct QuadratureRule {
    QuadDomain domain;
    int order = 0;
    std::vector<Quatd> nodes;
    std::vector<double> weights;

    size_t size() const { return nodes.size(); }
};

// Nodes and weights for int f(x) e^{-x^2} dx (Newton iteration on the
// orthonormal recurrence).
QuadratureRule gauss_hermite(int n);

// Nodes and weights for int_{-1}^{1} f(x) dx.
QuadratureRule gauss_legendre(int n);

// Tensor Gauss-Hermite on C_I: integrates f d mu_I = f e^{-|p|^2}/pi dA.
QuadratureRule slice_gauss(const ImaginaryUnit& I, int n);

// Gauss-Legendre radial times uniform midpoint angles on the unit disk of
// C_I, normalized by 1/pi.  Exact for z^a zbar^b with a+b+1 <= 2*radial_n-1
// and |a-b| < angular_n.
QuadratureRule disk_rule(const ImaginaryUnit& I, int radial_n, int angular_n);

// Same construction on the half disk Re > 0, open midpoint angles in
// (-pi/2, pi/2), normalized by 1/pi.
QuadratureRule half_disk_rule(const ImaginaryUnit& I, int radial_n, int angular_n);

// 4-fold tensor Gauss-Hermite on H with weight e^{-|q|^2}/pi^2.
// Throws when n^4 exceeds the node cap.
QuadratureRule r4_gauss(int n, size_t node_cap = size_t(1) << 24);

using Integrand = std::function<Quatd(const Quatd&)>;

Quatd integrate(const QuadratureRule& rule, const Integrand& f);
Quatd integrate_serial(const QuadratureRule& rule, const Integrand& f);

// Fixed-shape pairwise reduction used by both integrate variants.
Quatd pairwise_sum(const std::vector<Quatd>& v);

}  // namespace fueter
