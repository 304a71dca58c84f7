#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "fueter/appell.hpp"
#include "fueter/operators.hpp"
#include "fueter/quadrature.hpp"

using namespace fueter;

namespace {

std::mt19937_64 rng(19);

Quatd random_quat(double s) {
    std::uniform_real_distribution<double> u(-s, s);
    return Quatd{u(rng), u(rng), u(rng), u(rng)};
}

}  // namespace

TEST_CASE("coefficient row properties") {
    for (int k = 0; k <= 40; ++k) {
        Rational sum = 0;
        for (int j = 0; j <= k; ++j) {
            Rational t = appell_T_coeff(k, j);
            CHECK(t == Rational(2 * (k - j + 1), (k + 1) * (k + 2)));
            Rational poch = rational_factorial(k) / pochhammer(Rational(3), k) *
                            pochhammer(Rational(2), k - j) * pochhammer(Rational(1), j) /
                            (rational_factorial(k - j) * rational_factorial(j));
            CHECK(poch == t);
            sum += t;
        }
        CHECK(sum == Rational(1));
    }
}

TEST_CASE("basis polynomials are monogenic and homogeneous") {
    OperatorTable table(22);
    for (int k = 0; k <= 20; ++k) {
        QQbarPoly<Rational> Qk = appell_Q<Rational>(k);
        CHECK(table.dirac(Qk).is_zero());
        CHECK(euler_apply(Qk) == poly_scale(Qk, Rational(k)));
        QQbarPoly<Rational> expect_lower;
        if (k > 0) expect_lower = poly_scale(appell_Q<Rational>(k - 1), Rational(k));
        CHECK(poly_scale(table.dbar(Qk), Rational(1, 2)) == expect_lower);
    }
}

TEST_CASE("basis comes from the fueter map of powers") {
    for (int k = 0; k <= 20; ++k) {
        QQbarPoly<Rational> scaled = poly_scale(
            fueter_monomial<Rational>(k + 2), Rational(-1) / Rational(2 * (k + 1) * (k + 2)));
        CHECK(scaled == appell_Q<Rational>(k));
        CHECK(appell_P<Rational>(k) ==
              poly_scale(appell_Q<Rational>(k), Rational(-2) / rational_factorial(k)));
    }
}

TEST_CASE("floating point evaluators agree with the rational polynomials") {
    for (int trial = 0; trial < 6; ++trial) {
        Quatd q = random_quat(0.8);
        std::vector<Quatd> Q = appell_eval_all(q, 12);
        for (int k = 0; k <= 12; ++k) {
            Quatd want = qq_eval(appell_Q<Rational>(k), q);
            CHECK(abs(Q[k] - want) < 1e-12);
            CHECK(abs(appell_Q_eval(k, q) - want) < 1e-12);
            CHECK(abs(appell_T_eval(k, q) - want * appell_T_normalizer(k)) < 1e-12);
        }
    }
}

TEST_CASE("pointwise growth bound") {
    for (int trial = 0; trial < 30; ++trial) {
        Quatd q = random_quat(0.9);
        double aq = abs(q), pw = 1.0;
        std::vector<Quatd> Q = appell_eval_all(q, 16);
        for (int k = 0; k <= 16; ++k) {
            CHECK(abs(Q[k]) <= pw + 1e-12);
            pw *= aq;
        }
    }
}

TEST_CASE("cache bounds") {
    AppellCache cache(8);
    CHECK(cache.Q(8).degree() == 8);
    CHECK_THROWS_AS((void)cache.Q(9), std::domain_error);
    CHECK_THROWS_AS((void)cache.P(-1), std::domain_error);
}

TEST_CASE("regular exponential") {
    for (double x : {-1.1, 0.0, 0.5, 1.7}) {
        TailedValue v = regular_exp(Quatd{x}, 60);
        CHECK(std::abs(v.value.w - std::exp(x)) < 1e-13 * std::exp(std::abs(x)));
    }
    for (int trial = 0; trial < 8; ++trial) {
        Quatd s = random_quat(1.5);
        TailedValue lo = regular_exp(s, 14);
        TailedValue hi = regular_exp(s, 64);
        CHECK(abs(lo.value - hi.value) <= lo.tail + 1e-15);
    }
}

TEST_CASE("gaussian norm bound for the mapped powers") {
    QuadratureRule rule = r4_gauss(12);
    for (int n = 2; n <= 8; ++n) {
        QQbarPoly<Rational> fn = fueter_monomial<Rational>(n);
        Quatd ns = integrate(rule, [&](const Quatd& q) {
            Quatd v = qq_eval(fn, q);
            return Quatd{norm_sq(v)};
        });
        double norm = std::sqrt(ns.w);
        double bound = 2.0 * n * (n - 1) * std::sqrt(std::exp(std::lgamma(double(n))));
        CHECK(norm <= bound + 1e-6);
        if (n == 2) CHECK(std::abs(norm - 4.0) < 1e-10);
    }
}
