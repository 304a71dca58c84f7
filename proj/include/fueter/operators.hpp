// Exact action of the Cauchy-Fueter operator D = d_x0 + i d_x1 + j d_x2 + k d_x3,
// its conjugate Dbar, the Euler operator E_q, and the Fueter map tau on
// (q, qbar)-polynomials and slice series.
//
// The monomial actions follow from summing the componentwise derivatives
//   d_x1(q^l)    =  sum_{m<l} q^m i q^{l-1-m}
//   d_x1(qbar^l) = -sum_{m<l} qbar^m i qbar^{l-1-m}
// (and their j, k analogues) with the contraction sum_u u v u = v - 4 Re(v):
//   D(q^a qbar^b)    = 2b q^a qbar^{b-1} - 2 sum_{m<a} q^{a-1-m} qbar^{m+b}
//                      + 2 sum_{m<b} q^m qbar^{a+b-1-m}
//   Dbar(q^a qbar^b) = 2a q^{a-1} qbar^b + 2 sum_{m<a} q^{a-1-m} qbar^{m+b}
//                      - 2 sum_{m<b} q^m qbar^{a+b-1-m}
// Specializing b = 0 recovers D(q^n) = -2 sum_{k=1}^n q^{n-k} qbar^{k-1}.
#pragma once

#include <map>
#include <stdexcept>
#include <utility>

#include "fueter/qqbar.hpp"
#include "fueter/rational.hpp"
#include "fueter/series.hpp"

namespace fueter {

namespace detail {

template <typename S>
QQbarPoly<S> dirac_of_monomial(int a, int b) {
    QQbarPoly<S> r;
    if (b >= 1) r.add_term(a, b - 1, S(2 * b));
    for (int m = 0; m < a; ++m) r.add_term(a - 1 - m, m + b, S(-2));
    for (int m = 0; m < b; ++m) r.add_term(m, a + b - 1 - m, S(2));
    return r;
}

template <typename S>
QQbarPoly<S> dbar_of_monomial(int a, int b) {
    QQbarPoly<S> r;
    if (a >= 1) r.add_term(a - 1, b, S(2 * a));
    for (int m = 0; m < a; ++m) r.add_term(a - 1 - m, m + b, S(2));
    for (int m = 0; m < b; ++m) r.add_term(m, a + b - 1 - m, S(-2));
    return r;
}

}  // namespace detail

// D(q^n) as a QQbarPoly (zero for n = 0; the constant -2 for n = 1).
template <typename S = Rational>
QQbarPoly<S> dirac_monomial(int n) {
    if (n < 0) throw std::invalid_argument("dirac_monomial: n must be >= 0");
    QQbarPoly<S> r;
    if (n == 0) return r;
    if (n == 1) {
        r.add_term(0, 0, S(-2));
        return r;
    }
    for (int k = 1; k <= n; ++k) r.add_term(n - k, k - 1, S(-2));
    return r;
}

// f~_n = tau(q^n) = Delta(q^n): zero for n <= 1, the constant -4 for n = 2,
// otherwise -4 sum_{k=1}^{n-1} (n-k) q^{n-k-1} qbar^{k-1}.
template <typename S = Rational>
QQbarPoly<S> fueter_monomial(int n) {
    if (n < 0) throw std::invalid_argument("fueter_monomial: n must be >= 0");
    QQbarPoly<S> r;
    if (n <= 1) return r;
    if (n == 2) {
        r.add_term(0, 0, S(-4));
        return r;
    }
    for (int k = 1; k <= n - 1; ++k) r.add_term(n - k - 1, k - 1, S(-4 * (n - k)));
    return r;
}

// Precomputed exact actions of D and Dbar on all monomials q^a qbar^b with
// a + b <= max_degree.  The constructor verifies Dbar D = D Dbar on every
// stored monomial.
class OperatorTable {
  public:
    explicit OperatorTable(int max_degree) : max_degree_(max_degree) {
        for (int d = 0; d <= max_degree; ++d) {
            for (int a = 0; a <= d; ++a) {
                int b = d - a;
                dirac_[{a, b}] = detail::dirac_of_monomial<Rational>(a, b);
                dbar_[{a, b}] = detail::dbar_of_monomial<Rational>(a, b);
            }
        }
        for (int d = 1; d <= max_degree; ++d) {
            for (int a = 0; a <= d; ++a) {
                int b = d - a;
                QQbarPoly<Rational> m;
                m.add_term(a, b, Rational(1));
                if (!(dbar(dirac(m)) == dirac(dbar(m))))
                    throw std::logic_error("operator table: Dbar D != D Dbar");
            }
        }
    }

    int max_degree() const { return max_degree_; }

    QQbarPoly<Rational> dirac(const QQbarPoly<Rational>& p) const { return apply(dirac_, p); }
    QQbarPoly<Rational> dbar(const QQbarPoly<Rational>& p) const { return apply(dbar_, p); }

  private:
    QQbarPoly<Rational> apply(const std::map<std::pair<int, int>, QQbarPoly<Rational>>& table,
                              const QQbarPoly<Rational>& p) const {
        QQbarPoly<Rational> r;
        for (const auto& [key, c] : p.terms) {
            auto it = table.find(key);
            if (it == table.end())
                throw std::domain_error("operator table: monomial degree exceeds capacity");
            for (const auto& [mkey, mc] : it->second.terms)
                r.add_term(mkey.first, mkey.second, mc * c);
        }
        return r;
    }

    int max_degree_;
    std::map<std::pair<int, int>, QQbarPoly<Rational>> dirac_;
    std::map<std::pair<int, int>, QQbarPoly<Rational>> dbar_;
};

inline const OperatorTable& default_operator_table() {
    static const OperatorTable table(34);
    return table;
}

inline QQbarPoly<Rational> dirac_apply(const QQbarPoly<Rational>& p) {
    return default_operator_table().dirac(p);
}

inline QQbarPoly<Rational> dbar_apply(const QQbarPoly<Rational>& p) {
    return default_operator_table().dbar(p);
}

// E_q = sum_l x_l d_{x_l}: scales each monomial by its total degree.
template <typename S>
QQbarPoly<S> euler_apply(const QQbarPoly<S>& p) {
    QQbarPoly<S> r;
    for (const auto& [key, c] : p.terms) {
        int h = key.first + key.second;
        if (h != 0) r.terms[key] = c * S(h);
    }
    return r;
}

// tau(sum q^k c_k) = sum Q_k a_k with a_k = -2 (k+1)(k+2) c_{k+2},
// from tau(q^k) = -2 (k-1) k Q_{k-2}.
inline RegularSeries fueter_series(const SliceSeries& f) {
    RegularSeries g;
    if (f.coeffs.size() < 3) return g;
    g.coeffs.resize(f.coeffs.size() - 2);
    for (size_t k = 0; k < g.coeffs.size(); ++k)
        g.coeffs[k] = f.coeffs[k + 2] * (-2.0 * (k + 1) * (k + 2));
    return g;
}

}  // namespace fueter
