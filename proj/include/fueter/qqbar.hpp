// Sparse polynomials in the commuting pair (q, qbar) with real coefficients:
// the class containing every polynomial of section 3 (the Fueter images
// f~_n and the Appell family P_k, Q_k, T_k).
#pragma once

#include <algorithm>
#include <map>
#include <type_traits>
#include <utility>
#include <vector>

#include "fueter/quaternion.hpp"

namespace fueter {

template <typename S>
struct QQbarPoly {
    // (a, b) -> coefficient of q^a qbar^b; zero coefficients are pruned.
    std::map<std::pair<int, int>, S> terms;

    QQbarPoly() = default;
    explicit QQbarPoly(const S& c) {
        if (!(c == S(0))) terms[{0, 0}] = c;
    }

    void add_term(int a, int b, const S& c) {
        auto key = std::make_pair(a, b);
        auto it = terms.find(key);
        if (it == terms.end()) {
            if (!(c == S(0))) terms.emplace(key, c);
        } else {
            it->second += c;
            if (it->second == S(0)) terms.erase(it);
        }
    }

    S coeff(int a, int b) const {
        auto it = terms.find({a, b});
        return it == terms.end() ? S(0) : it->second;
    }

    int degree() const {
        int d = 0;
        for (const auto& [key, c] : terms) d = std::max(d, key.first + key.second);
        return d;
    }

    bool is_zero() const { return terms.empty(); }

    bool operator==(const QQbarPoly& o) const { return terms == o.terms; }
};

template <typename S>
QQbarPoly<S> poly_add(const QQbarPoly<S>& p, const QQbarPoly<S>& q) {
    QQbarPoly<S> r = p;
    for (const auto& [key, c] : q.terms) r.add_term(key.first, key.second, c);
    return r;
}

template <typename S>
QQbarPoly<S> poly_sub(const QQbarPoly<S>& p, const QQbarPoly<S>& q) {
    QQbarPoly<S> r = p;
    for (const auto& [key, c] : q.terms) r.add_term(key.first, key.second, -c);
    return r;
}

template <typename S>
QQbarPoly<S> poly_scale(const QQbarPoly<S>& p, const S& s) {
    QQbarPoly<S> r;
    if (s == S(0)) return r;
    for (const auto& [key, c] : p.terms) r.terms[key] = c * s;
    return r;
}

// Left multiplication by q (resp. qbar): shifts the exponent map.
template <typename S>
QQbarPoly<S> poly_mul_q(const QQbarPoly<S>& p) {
    QQbarPoly<S> r;
    for (const auto& [key, c] : p.terms) r.terms[{key.first + 1, key.second}] = c;
    return r;
}

template <typename S>
QQbarPoly<S> poly_mul_qbar(const QQbarPoly<S>& p) {
    QQbarPoly<S> r;
    for (const auto& [key, c] : p.terms) r.terms[{key.first, key.second + 1}] = c;
    return r;
}

namespace detail {
inline double scalar_cast_to_double(const double& s) { return s; }
template <typename S>
double scalar_cast_to_double(const S& s) { return s.template convert_to<double>(); }
}  // namespace detail

// Evaluation: sum coeff(a,b) q^a conj(q)^b.  q and conj(q) commute, so the
// order inside each monomial is immaterial.
template <typename S, typename T>
Quat<T> qq_eval(const QQbarPoly<S>& p, const Quat<T>& q) {
    int max_a = 0, max_b = 0;
    for (const auto& [key, c] : p.terms) {
        max_a = std::max(max_a, key.first);
        max_b = std::max(max_b, key.second);
    }
    std::vector<Quat<T>> qp(max_a + 1), qbp(max_b + 1);
    qp[0] = Quat<T>{T(1)};
    qbp[0] = Quat<T>{T(1)};
    Quat<T> qc = conj(q);
    for (int a = 1; a <= max_a; ++a) qp[a] = qp[a - 1] * q;
    for (int b = 1; b <= max_b; ++b) qbp[b] = qbp[b - 1] * qc;
    Quat<T> acc{};
    for (const auto& [key, c] : p.terms) {
        T cv;
        if constexpr (std::is_same_v<S, T>) cv = c;
        else cv = T(detail::scalar_cast_to_double(c));
        acc += qp[key.first] * qbp[key.second] * cv;
    }
    return acc;
}

}  // namespace fueter
