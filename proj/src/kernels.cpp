#include "fueter/kernels.hpp"

#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fueter {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::domain_error(msg);
}

// sum_{k>N} t^k / k! by the ratio recurrence.
double exp_tail(double t, int N) {
    double term = 1.0;
    for (int k = 1; k <= N; ++k) term *= t / k;
    double tail = 0.0;
    for (int k = N + 1; k <= N + 500; ++k) {
        term *= t / k;
        tail += term;
        if (term < 1e-300) break;
    }
    return tail;
}

std::vector<Quatd> powers(const Quatd& q, int N) {
    std::vector<Quatd> p(N + 1);
    p[0] = Quatd{1.0};
    for (int k = 1; k <= N; ++k) p[k] = p[k - 1] * q;
    return p;
}

}  // namespace

TailedValue fock_kernel(const Quatd& p, const Quatd& q, int N) {
    Quatd qb = conj(q);
    // The 1/k! is split as 1/sqrt(k!) onto each power so neither factor
    // overflows when an argument is a far-out Gaussian quadrature node.
    Quatd pk{1.0}, qbk{1.0};
    Quatd acc{1.0};  // k = 0 term
    for (int k = 1; k <= N; ++k) {
        const double s = 1.0 / std::sqrt(double(k));
        pk *= p * s;
        qbk *= qb * s;
        acc += pk * qbk;
    }
    return {acc, exp_tail(abs(p) * abs(q), N)};
}

TailedValue fock_fueter_kernel(const Quatd& q, const Quatd& p, int N) {
    std::vector<Quatd> Q = appell_eval_all(q, N);
    Quatd pb = conj(p);
    // pk carries pbar^{k+2}/k! with the factorial folded in at each step;
    // the bare power overflows double at large quadrature nodes.
    Quatd pk = pb * pb;
    Quatd acc{};
    for (int k = 0; k <= N; ++k) {
        if (k > 0) pk *= pb * (1.0 / double(k));
        acc += Q[k] * pk;
    }
    double ap = abs(p);
    return {acc * -2.0, 2.0 * ap * ap * exp_tail(abs(q) * ap, N)};
}

Quatd fock_fueter_kernel_real_axis(double x, const Quatd& p) {
    Quatd pb = conj(p);
    return pb * pb * slice_exp(pb, 0.0, x, 0.0) * -2.0;
}

Quatd bergman_R(const Quatd& q, const Quatd& r) {
    Quatd rb = conj(r);
    return inverse(Quatd{1.0} - rb * (2.0 * re(q)) + rb * rb * norm_sq(q));
}

Quatd bergman_P(const Quatd& q, const Quatd& r) {
    Quatd rb = conj(r);
    return inverse(Quatd{norm_sq(q)} + rb * (2.0 * re(q)) + rb * rb);
}

TailedValue bergman_ball(const Quatd& q, const Quatd& r, int N, KernelForm form) {
    require(abs(q) < 1.0 && abs(r) < 1.0, "bergman_ball: arguments must lie in the unit ball");
    if (form == KernelForm::closed) {
        Quatd qb = conj(q), rb = conj(r);
        Quatd num = Quatd{1.0} - qb * rb * 2.0 + qb * qb * rb * rb;
        Quatd R = bergman_R(q, r);
        return {num * R * R, 0.0};
    }
    double t = abs(q) * abs(r);
    require(t < 1.0, "bergman_ball: series requires |q||r| < 1");
    Quatd qk{1.0}, rbk{1.0};
    Quatd rb = conj(r);
    Quatd acc{1.0};
    for (int k = 1; k <= N; ++k) {
        qk *= q;
        rbk *= rb;
        acc += qk * rbk * double(k + 1);
    }
    double tn = std::pow(t, N + 1);
    double tail = tn * ((N + 2) - (N + 1) * t) / ((1.0 - t) * (1.0 - t));
    return {acc, tail};
}

Quatd bergman_halfspace(const Quatd& q, const Quatd& r) {
    require(re(q) > 0.0 && re(r) > 0.0, "bergman_halfspace: arguments must have Re > 0");
    Quatd qb = conj(q), rb = conj(r);
    Quatd num = qb * qb + qb * rb * 2.0 + rb * rb;
    Quatd P = bergman_P(q, r);
    return num * P * P * (1.0 / M_PI);
}

Quatd bergman_halfball(const Quatd& q, const Quatd& r, int N) {
    require(abs(q) < 1.0 && re(q) > 0.0 && abs(r) < 1.0 && re(r) > 0.0,
            "bergman_halfball: arguments must lie in the half ball");
    (void)N;
    return bergman_ball(q, r, 0, KernelForm::closed).value + bergman_halfspace(q, r);
}

Quatd bergman_halfball_ext(const Quatd& q, const Quatd& r) {
    require(abs(q) < 1.0 && re(q) > 0.0 && abs(r) < 1.0 && re(r) > 0.0,
            "bergman_halfball: arguments must lie in the half ball");
    SlicePoint sr = slice_decompose(r);
    SlicePoint sq = slice_decompose(q);
    ImaginaryUnit J = sr.unit ? *sr.unit : (sq.unit ? *sq.unit : unit_i());
    Quatd rb = conj(r);
    auto slice_kernel = [&](const Quatd& z) {
        Quatd a = Quatd{1.0} - z * rb;
        Quatd b = z + rb;
        return inverse(a * a) + inverse(b * b) * (1.0 / M_PI);
    };
    return slice_holomorphic_eval(slice_kernel, q, J);
}

bool wedge_contains(const Quatd& q, int n) {
    if (n < 1) throw std::invalid_argument("wedge order must be >= 1");
    SlicePoint s = slice_decompose(q);
    if (s.re <= 0.0) return false;
    return s.re * std::cos(M_PI / n) - s.im * std::sin(M_PI / n) < 0.0;
}

Quatd bergman_wedge(const Quatd& q, const Quatd& r, int n) {
    require(wedge_contains(q, n) && wedge_contains(r, n),
            "bergman_wedge: arguments must lie in the wedge");
    double sign = (n % 2 == 0) ? 1.0 : -1.0;
    Quatd qb = conj(q), rb = conj(r);
    Quatd qbn = qpow(qb, n), rbn = qpow(rb, n);
    Quatd mid = qpow(qb, 2 * n) - qbn * rbn * (2.0 * sign) + qpow(rb, 2 * n);
    double q2n = std::pow(norm_sq(q), n);
    double reqn = re(qpow(q, n));
    Quatd den = Quatd{q2n} - rbn * (2.0 * sign * reqn) + qpow(rb, 2 * n);
    Quatd D = inverse(den);
    return qpow(q, n - 1) * mid * qpow(rb, n - 1) * D * D * (sign * double(n) * double(n));
}

std::complex<double> wedge_kernel_complex(std::complex<double> z, std::complex<double> w, int n) {
    double sign = (n % 2 == 0) ? 1.0 : -1.0;
    std::complex<double> wb = std::conj(w);
    std::complex<double> den = std::pow(z, n) - sign * std::pow(wb, n);
    return sign * double(n) * double(n) * std::pow(z, n - 1) * std::pow(wb, n - 1) / (den * den);
}

Quatd bergman_wedge_ext(const Quatd& q, const Quatd& r, int n) {
    require(wedge_contains(q, n) && wedge_contains(r, n),
            "bergman_wedge: arguments must lie in the wedge");
    double sign = (n % 2 == 0) ? 1.0 : -1.0;
    SlicePoint sr = slice_decompose(r);
    SlicePoint sq = slice_decompose(q);
    ImaginaryUnit J = sr.unit ? *sr.unit : (sq.unit ? *sq.unit : unit_i());
    Quatd rb = conj(r);
    Quatd rbn = qpow(rb, n);
    auto slice_kernel = [&](const Quatd& z) {
        Quatd den = qpow(z, n) - rbn * sign;
        return qpow(z, n - 1) * qpow(rb, n - 1) * inverse(den * den) *
               (sign * double(n) * double(n));
    };
    return slice_holomorphic_eval(slice_kernel, q, J);
}

TailedValue bergman_fueter_ball(const Quatd& q, const Quatd& r, int N, KernelForm form) {
    require(abs(q) < 1.0 && abs(r) < 1.0,
            "bergman_fueter_ball: arguments must lie in the unit ball");
    Quatd rb = conj(r);
    if (form == KernelForm::closed) {
        Quatd R = bergman_R(q, r);
        Quatd K = bergman_ball(q, r, 0, KernelForm::closed).value;
        return {(R + K * 2.0) * R * (rb * rb) * -4.0, 0.0};
    }
    std::vector<Quatd> Q = appell_eval_all(q, N);
    std::vector<Quatd> rbp = powers(rb, N + 2);
    Quatd acc{};
    for (int k = 0; k <= N; ++k)
        acc += Q[k] * rbp[k + 2] * (double(k + 1) * double(k + 2) * double(k + 3));
    double t = abs(q) * abs(r), r2 = norm_sq(r);
    double term = std::pow(t, N + 1), tail = 0.0;
    for (int k = N + 1; k <= N + 20000 && term > 1e-300; ++k) {
        tail += 2.0 * r2 * double(k + 1) * double(k + 2) * double(k + 3) * term;
        term *= t;
    }
    return {acc * -2.0, tail};
}

Quatd bergman_fueter_halfspace(const Quatd& q, const Quatd& r) {
    require(re(q) > 0.0 && re(r) > 0.0, "bergman_fueter_halfspace: arguments must have Re > 0");
    Quatd P = bergman_P(q, r);
    Quatd K = bergman_halfspace(q, r);
    return (P * (1.0 / M_PI) + K * 2.0) * P * -4.0;
}

Quatd bergman_fueter_halfball(const Quatd& q, const Quatd& r, int N) {
    require(abs(q) < 1.0 && re(q) > 0.0 && abs(r) < 1.0 && re(r) > 0.0,
            "bergman_fueter_halfball: arguments must lie in the half ball");
    return bergman_fueter_ball(q, r, N, KernelForm::closed).value +
           bergman_fueter_halfspace(q, r);
}

TailedValue rkhs_G(const Quatd& p, const Quatd& q, int N) {
    std::vector<Quatd> Qp = appell_eval_all(p, N);
    std::vector<Quatd> Qq = appell_eval_all(q, N);
    Quatd acc{};
    double inv_fact = 1.0;
    for (int k = 0; k <= N; ++k) {
        if (k > 0) inv_fact /= k;
        acc += Qp[k] * conj(Qq[k]) * (double(k + 1) * double(k + 2) * inv_fact);
    }
    double t = abs(p) * abs(q);
    double term = 1.0;
    for (int k = 1; k <= N; ++k) term *= t / k;
    double tail = 0.0;
    for (int k = N + 1; k <= N + 500 && (term > 1e-300 || k < N + 4); ++k) {
        term *= t / k;
        tail += double(k + 1) * double(k + 2) * term;
    }
    return {acc, tail};
}

TailedValue rkhs_L(const Quatd& q, const Quatd& r, int N) {
    double t = abs(q) * abs(r);
    require(t < 1.0, "rkhs_L: requires |q||r| < 1");
    std::vector<Quatd> Qq = appell_eval_all(q, N);
    std::vector<Quatd> Qrb = appell_eval_all(conj(r), N);
    Quatd acc{};
    for (int k = 0; k <= N; ++k) {
        double c = double(k + 1) * double(k + 1) * double(k + 2) * double(k + 2) * double(k + 3);
        acc += Qq[k] * Qrb[k] * c;
    }
    double term = std::pow(t, N + 1), tail = 0.0;
    for (int k = N + 1; k <= N + 20000 && term > 1e-300; ++k) {
        double c = double(k + 1) * double(k + 1) * double(k + 2) * double(k + 2) * double(k + 3);
        tail += c * term;
        term *= t;
    }
    return {acc, tail};
}

Quatd bergman_generating_series(const Quatd& q, const Quatd& r, int N) {
    std::vector<Quatd> Q = appell_eval_all(q, N);
    std::vector<Quatd> rbp = powers(conj(r), N);
    Quatd acc{};
    for (int k = 0; k <= N; ++k)
        acc += Q[k] * rbp[k] * (double(k + 1) * double(k + 2) * double(k + 3));
    return acc;
}

TailedValue kernel_eval(const KernelSpec& spec, const Quatd& q, const Quatd& p) {
    switch (spec.name) {
        case KernelName::fock: return fock_kernel(q, p, spec.truncation);
        case KernelName::fock_fueter: return fock_fueter_kernel(q, p, spec.truncation);
        case KernelName::bergman_ball: return bergman_ball(q, p, spec.truncation, spec.form);
        case KernelName::bergman_halfspace: return {bergman_halfspace(q, p), 0.0};
        case KernelName::bergman_halfball: return {bergman_halfball(q, p, spec.truncation), 0.0};
        case KernelName::bergman_wedge: return {bergman_wedge(q, p, spec.wedge_n), 0.0};
        case KernelName::bergman_fueter_ball:
            return bergman_fueter_ball(q, p, spec.truncation, spec.form);
        case KernelName::bergman_fueter_halfspace:
            return {bergman_fueter_halfspace(q, p), 0.0};
        case KernelName::bergman_fueter_halfball:
            return {bergman_fueter_halfball(q, p, spec.truncation), 0.0};
        case KernelName::rkhs_G: return rkhs_G(q, p, spec.truncation);
        case KernelName::rkhs_L: return rkhs_L(q, p, spec.truncation);
    }
    throw std::invalid_argument("unknown kernel");
}

std::vector<Quatd> kernel_eval_batch(const KernelSpec& spec, const std::vector<Quatd>& qs,
                                     const std::vector<Quatd>& ps) {
    if (qs.size() != ps.size()) throw std::invalid_argument("batch sizes differ");
    std::vector<Quatd> out(qs.size());
    const long long n = static_cast<long long>(qs.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (long long i = 0; i < n; ++i) out[i] = kernel_eval(spec, qs[i], ps[i]).value;
    return out;
}

std::vector<Quatd> kernel_eval_batch_serial(const KernelSpec& spec, const std::vector<Quatd>& qs,
                                            const std::vector<Quatd>& ps) {
    if (qs.size() != ps.size()) throw std::invalid_argument("batch sizes differ");
    std::vector<Quatd> out(qs.size());
    for (size_t i = 0; i < qs.size(); ++i) out[i] = kernel_eval(spec, qs[i], ps[i]).value;
    return out;
}

}  // namespace fueter
