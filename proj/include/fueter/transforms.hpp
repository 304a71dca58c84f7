// The quaternionic Segal-Bargmann transform B, the Fock-Fueter transform,
// the Bargmann-Fock-Fueter transform S with kernel Phi, and the inner
// products, norms and membership predicates of the function spaces involved
// (slice Fock space, A(H), B(B), RB(H), L^2(R) and its index >= 2 subspace).
#pragma once

#include <functional>
#include <vector>

#include "fueter/appell.hpp"
#include "fueter/hermite.hpp"
#include "fueter/quadrature.hpp"
#include "fueter/quaternion.hpp"
#include "fueter/series.hpp"

namespace fueter {

enum class SpaceTag { fock_slice, A_H, B_B, RB_H, L2_R, H_sub, bergman_slice_ball };

// Coefficient weight w_k of the space's inner product sum w_k conj(g_k) f_k.
// RB_H has no coefficient form and is rejected.
double space_weight(SpaceTag tag, int k);

// B phi(q) = int A(q,x) phi(x) dx with A(q,x) = pi^{-1/4} e^{-(q^2+x^2)/2 + sqrt(2) q x};
// phi given by xi-basis coefficients (right quaternion coefficients).  The
// reported tail is the difference against an internally built lower-order rule.
TailedValue segal_bargmann(const std::vector<Quatd>& xi_coeffs, const Quatd& q,
                           const QuadratureRule& gh);

// Same transform for a sampled real function.
TailedValue segal_bargmann_fn(const std::function<double(double)>& phi, const Quatd& q,
                              const QuadratureRule& gh);

// f breve(q) = int_{C_I} K_F(q,p) f(p) dmu_I(p); N truncates the kernel series.
Quatd fock_fueter_transform(const SliceSeries& f, const Quatd& q, const QuadratureRule& slice,
                            int N = 300);

// Phi(q,x) = -pi^{-1/4} sum_k Q_k(q) h_{k+2}(x) / (2^{k/2} k!)
//          = -2 sum_k T_k(q) xi_{k+2}(x).
TailedValue phi_kernel(const Quatd& q, double x, int N);

// Quadrature route Phi(q,x) = int K_F(q,p) A(p,x) dmu_I(p).
Quatd phi_kernel_quad(const Quatd& q, double x, const QuadratureRule& slice, int N = 300);

// Coefficient action of S: xi_n -> 0 (n <= 1), -2 T_{n-2} otherwise, i.e.
// Appell coefficients beta_k = -2 sqrt((k+1)(k+2)/k!) alpha_{k+2}.
RegularSeries bargmann_fock_fueter_coeffs(const std::vector<Quatd>& xi_coeffs);
Quatd bargmann_fock_fueter(const std::vector<Quatd>& xi_coeffs, const Quatd& q);

// Cross-check route: S phi(q) = int Phi(q,x) phi(x) dx with Phi itself
// computed by slice quadrature.
Quatd bargmann_fock_fueter_quad(const std::vector<Quatd>& xi_coeffs, const Quatd& q,
                                const QuadratureRule& slice, const QuadratureRule& gh,
                                int N = 300);

// sum_k w_k conj(g_k) f_k (conjugate on the second argument's coefficients;
// shorter sequence padded with zeros).
Quatd coefficient_inner_product(const std::vector<Quatd>& f, const std::vector<Quatd>& g,
                                SpaceTag space);

double coefficient_norm(const std::vector<Quatd>& f, SpaceTag space);

using SliceFn = std::function<Quatd(const Quatd&)>;

// The defining integral of each space's inner product over the given rule:
// fock_slice / RB_H integrate conj(g) f, the section-5 Bergman spaces
// integrate conj(f) g, L2_R integrates conj(g) f against dx.
Quatd quadrature_inner_product(const SliceFn& f, const SliceFn& g, SpaceTag space,
                               const QuadratureRule& rule);

struct Membership {
    bool in_space = true;
    double norm_sq = 0.0;
};

Membership membership_check(const std::vector<Quatd>& coeffs, SpaceTag space);

// Theorem 4.7 coefficient maps between tau-preimages f = sum q^k c_k and
// images g = sum Q_k alpha_k: alpha_k = -2 (k+1)(k+2) c_{k+2} and back.
std::vector<Quatd> fueter_coeffs_from_slice(const std::vector<Quatd>& c);
std::vector<Quatd> slice_coeffs_from_fueter(const std::vector<Quatd>& alpha);

enum class QSource { fock, hermite, bergman };

// The three integral representations of Q_k: against K_F over the slice
// Gaussian, against Phi and h_{k+2} on the line, against K_BF^B over the disk.
Quatd integral_representation_Q(int k, const Quatd& q, QSource source,
                                const QuadratureRule& rule, int N = 300);

}  // namespace fueter
