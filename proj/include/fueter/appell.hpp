// The Appell family of Fueter-regular polynomials:
//   Q_k(q) = sum_{j=0}^{k} T^k_j q^{k-j} qbar^j,  T^k_j = 2(k-j+1)/((k+1)(k+2)),
//   P_k = -(2/k!) Q_k,  T_k = sqrt((k+1)(k+2)/k!) Q_k,
// with the lowering identity (1/2) Dbar Q_k = k Q_{k-1}, and the regular
// exponential Exp(s) = sum_k Q_k(s)/k!.
#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "fueter/operators.hpp"
#include "fueter/qqbar.hpp"
#include "fueter/rational.hpp"
#include "fueter/series.hpp"

namespace fueter {

inline Rational appell_T_coeff(int k, int j) {
    if (j < 0 || j > k) throw std::invalid_argument("appell_T_coeff: need 0 <= j <= k");
    return Rational(2 * (k - j + 1)) / Rational((k + 1) * (k + 2));
}

template <typename S = Rational>
QQbarPoly<S> appell_Q(int k) {
    if (k < 0) throw std::invalid_argument("appell_Q: k must be >= 0");
    QQbarPoly<S> r;
    for (int j = 0; j <= k; ++j) {
        Rational t = appell_T_coeff(k, j);
        if constexpr (std::is_same_v<S, Rational>)
            r.add_term(k - j, j, t);
        else
            r.add_term(k - j, j, S(to_double(t)));
    }
    return r;
}

template <typename S = Rational>
QQbarPoly<S> appell_P(int k) {
    QQbarPoly<Rational> q = appell_Q<Rational>(k);
    Rational s = Rational(-2) / rational_factorial(k);
    QQbarPoly<Rational> p = poly_scale(q, s);
    if constexpr (std::is_same_v<S, Rational>) return p;
    QQbarPoly<S> r;
    for (const auto& [key, c] : p.terms) r.add_term(key.first, key.second, S(to_double(c)));
    return r;
}

// Normalizer sqrt((k+1)(k+2)/k!), computed through lgamma so large k does
// not overflow.
inline double appell_T_normalizer(int k) {
    return std::exp(0.5 * (std::log(double(k + 1)) + std::log(double(k + 2)) -
                           std::lgamma(double(k + 1))));
}

inline QQbarPoly<double> appell_T(int k) {
    QQbarPoly<double> r;
    double t = appell_T_normalizer(k);
    for (int j = 0; j <= k; ++j) r.add_term(k - j, j, t * to_double(appell_T_coeff(k, j)));
    return r;
}

// Exact tables of Q_k and P_k up to max_degree, immutable once built.
class AppellCache {
  public:
    explicit AppellCache(int max_degree = 64) : max_degree_(max_degree) {
        Q_.reserve(max_degree + 1);
        P_.reserve(max_degree + 1);
        for (int k = 0; k <= max_degree; ++k) {
            Q_.push_back(appell_Q<Rational>(k));
            P_.push_back(appell_P<Rational>(k));
        }
    }

    int max_degree() const { return max_degree_; }

    const QQbarPoly<Rational>& Q(int k) const {
        if (k < 0 || k > max_degree_) throw std::domain_error("AppellCache: degree out of range");
        return Q_[k];
    }
    const QQbarPoly<Rational>& P(int k) const {
        if (k < 0 || k > max_degree_) throw std::domain_error("AppellCache: degree out of range");
        return P_[k];
    }

  private:
    int max_degree_;
    std::vector<QQbarPoly<Rational>> Q_;
    std::vector<QQbarPoly<Rational>> P_;
};

inline const AppellCache& default_appell_cache() {
    static const AppellCache cache(64);
    return cache;
}

// Q_0(q), ..., Q_N(q) in one sweep: O(N^2) with running powers of q, qbar.
inline std::vector<Quatd> appell_eval_all(const Quatd& q, int N) {
    std::vector<Quatd> qp(N + 1), qbp(N + 1), out(N + 1);
    qp[0] = Quatd{1.0};
    qbp[0] = Quatd{1.0};
    Quatd qc = conj(q);
    for (int m = 1; m <= N; ++m) {
        qp[m] = qp[m - 1] * q;
        qbp[m] = qbp[m - 1] * qc;
    }
    for (int k = 0; k <= N; ++k) {
        Quatd acc{};
        double denom = double(k + 1) * double(k + 2);
        for (int j = 0; j <= k; ++j) acc += qp[k - j] * qbp[j] * (2.0 * (k - j + 1) / denom);
        out[k] = acc;
    }
    return out;
}

// Fast double-path Q_k at one point.
inline Quatd appell_Q_eval(int k, const Quatd& q) {
    Quatd acc{};
    double denom = double(k + 1) * double(k + 2);
    Quatd qp{1.0}, qc = conj(q);
    std::vector<Quatd> qbp(k + 1);
    qbp[0] = Quatd{1.0};
    for (int j = 1; j <= k; ++j) qbp[j] = qbp[j - 1] * qc;
    for (int j = k; j >= 0; --j) {
        acc += qp * qbp[j] * (2.0 * (k - j + 1) / denom);
        if (j > 0) qp *= q;
    }
    return acc;
}

// T_k(q) without building the polynomial table.
inline Quatd appell_T_eval(int k, const Quatd& q) {
    return appell_Q_eval(k, q) * appell_T_normalizer(k);
}

struct TailedValue {
    Quatd value;
    double tail = 0.0;  // bound on the dropped series tail
};

// Exp(s) = sum_{k<=N} Q_k(s)/k! with tail bound sum_{k>N} |s|^k/k!,
// from |Q_k(s)| <= |s|^k.
inline TailedValue regular_exp(const Quatd& s, int N) {
    std::vector<Quatd> Q = appell_eval_all(s, N);
    Quatd acc{};
    double inv_fact = 1.0;
    for (int k = 0; k <= N; ++k) {
        if (k > 0) inv_fact /= k;
        acc += Q[k] * inv_fact;
    }
    double r = abs(s);
    double term = 1.0;
    for (int k = 1; k <= N; ++k) term *= r / k;
    double tail = 0.0;
    for (int k = N + 1; k <= N + 400; ++k) {
        term *= r / k;
        tail += term;
        if (term < 1e-300) break;
    }
    return {acc, tail};
}

// sum Q_k(q) a_k through the exact Appell table for small k, the direct
// double evaluation otherwise.
inline Quatd regular_eval(const RegularSeries& g, const Quatd& q) {
    if (g.coeffs.empty()) return Quatd{};
    int N = static_cast<int>(g.coeffs.size()) - 1;
    std::vector<Quatd> Q = appell_eval_all(q, N);
    Quatd acc{};
    for (int k = 0; k <= N; ++k) acc += Q[k] * g.coeffs[k];
    return acc;
}

}  // namespace fueter
