// Reproducing kernels: the slice Fock kernel, the Fock-Fueter kernel, the
// slice Bergman kernels of the unit ball, half space, half ball and wedge,
// their Bergman-Fueter images under the Laplacian, and the RKHS kernels
// G and L.  Series forms are the ground truth; closed forms are implemented
// with the printed noncommutative factor order.
#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include "fueter/appell.hpp"
#include "fueter/quaternion.hpp"

namespace fueter {

enum class KernelName {
    fock,
    fock_fueter,
    bergman_ball,
    bergman_halfspace,
    bergman_halfball,
    bergman_wedge,
    bergman_fueter_ball,
    bergman_fueter_halfspace,
    bergman_fueter_halfball,
    rkhs_G,
    rkhs_L,
};

enum class KernelForm { series, closed };

struct KernelSpec {
    KernelName name = KernelName::fock;
    int truncation = 300;
    KernelForm form = KernelForm::series;
    int wedge_n = 1;  // >= 1
};

// K_H(p, q) = sum p^k qbar^k / k!.
TailedValue fock_kernel(const Quatd& p, const Quatd& q, int N);

// K_F(q, p) = -2 sum Q_k(q)/k! pbar^{k+2}; tail via |Q_k(q)| <= |q|^k.
TailedValue fock_fueter_kernel(const Quatd& q, const Quatd& p, int N);

// K_F at real first argument: -2 pbar^2 e^{x pbar}.
Quatd fock_fueter_kernel_real_axis(double x, const Quatd& p);

// R(q, r) = (1 - 2 Re(q) rbar + |q|^2 rbar^2)^{-1}.
Quatd bergman_R(const Quatd& q, const Quatd& r);

// P(q, r) = (|q|^2 + 2 Re(q) rbar + rbar^2)^{-1}.
Quatd bergman_P(const Quatd& q, const Quatd& r);

// K_B(q, r): series sum (k+1) q^k rbar^k or closed (1 - 2 qbar rbar + qbar^2 rbar^2) R^2.
TailedValue bergman_ball(const Quatd& q, const Quatd& r, int N, KernelForm form);

// K_{H+}(q, r) = (1/pi)(qbar^2 + 2 qbar rbar + rbar^2) P(q, r)^2.
Quatd bergman_halfspace(const Quatd& q, const Quatd& r);

// K_{B+} = K_B + K_{H+} (closed forms for both summands).
Quatd bergman_halfball(const Quatd& q, const Quatd& r, int N = 300);

// Independent route: representation-formula extension of the complex
// half-disk kernel (1 - z rbar)^{-2} + (1/pi)(z + rbar)^{-2} off the slice of r.
Quatd bergman_halfball_ext(const Quatd& q, const Quatd& r);

// Wedge membership: q = x + I y with x > 0 and x cos(pi/n) - y sin(pi/n) < 0.
bool wedge_contains(const Quatd& q, int n);

// K_{W^n}(q, r) as printed, with the proof's |q|^{2n} denominator.
Quatd bergman_wedge(const Quatd& q, const Quatd& r, int n);

// Complex wedge kernel (-1)^n n^2 z^{n-1} wbar^{n-1} / (z^n - (-1)^n wbar^n)^2.
std::complex<double> wedge_kernel_complex(std::complex<double> z, std::complex<double> w, int n);

// Representation-formula extension of the complex wedge kernel off the slice of r.
Quatd bergman_wedge_ext(const Quatd& q, const Quatd& r, int n);

// K_BF^B: series -2 sum (k+1)(k+2)(k+3) Q_k(q) rbar^{k+2} or closed
// -4 [R + 2 K_B] R rbar^2.
TailedValue bergman_fueter_ball(const Quatd& q, const Quatd& r, int N, KernelForm form);

// K_BF^{H+} = Delta_q K_{H+} = -4 [(1/pi) P + 2 K_{H+}] P.
Quatd bergman_fueter_halfspace(const Quatd& q, const Quatd& r);

// K_BF^{B+} = K_BF^B + K_BF^{H+}.
Quatd bergman_fueter_halfball(const Quatd& q, const Quatd& r, int N = 300);

// G(p, q) = sum T_k(p) conj(T_k(q)).
TailedValue rkhs_G(const Quatd& p, const Quatd& q, int N);

// L(q, r) = sum (k+1)^2 (k+2)^2 (k+3) Q_k(q) Q_k(rbar).
TailedValue rkhs_L(const Quatd& q, const Quatd& r, int N);

// Generating function sum_{k<=N} (k+1)(k+2)(k+3) Q_k(q) rbar^k, the series
// side of the identity = 2 R^2 + 4 K_B R.
Quatd bergman_generating_series(const Quatd& q, const Quatd& r, int N);

// CLI dispatcher; q is the first kernel argument, p the second.
TailedValue kernel_eval(const KernelSpec& spec, const Quatd& q, const Quatd& p);

// Batch evaluation over pairs; parallel variant uses OpenMP and matches the
// serial variant bit-for-bit.
std::vector<Quatd> kernel_eval_batch(const KernelSpec& spec, const std::vector<Quatd>& qs,
                                     const std::vector<Quatd>& ps);
std::vector<Quatd> kernel_eval_batch_serial(const KernelSpec& spec, const std::vector<Quatd>& qs,
                                            const std::vector<Quatd>& ps);

}  // namespace fueter
