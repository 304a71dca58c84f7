// Acceptance gate: twelve criteria, one PASS/FAIL line each, fixed tolerances.

#include <cmath>
#include <complex>
#include <cstdio>
#include <random>
#include <vector>

#include "fueter/appell.hpp"
#include "fueter/fd.hpp"
#include "fueter/hermite.hpp"
#include "fueter/kernels.hpp"
#include "fueter/operators.hpp"
#include "fueter/quadrature.hpp"
#include "fueter/transforms.hpp"

using namespace fueter;

namespace {

std::mt19937_64 arng(2024);

double urand(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(arng);
}

Quatd rquat(double s) { return Quatd{urand(-s, s), urand(-s, s), urand(-s, s), urand(-s, s)}; }

Quatd rball(double cap) {
    for (;;) {
        Quatd q = rquat(cap);
        if (abs(q) < cap) return q;
    }
}

ImaginaryUnit runit() {
    for (;;) {
        Quatd v{0.0, urand(-1.0, 1.0), urand(-1.0, 1.0), urand(-1.0, 1.0)};
        if (norm_sq(v) > 0.01) return ImaginaryUnit(v);
    }
}

Quatd rhalfball() {
    for (;;) {
        Quatd q = rball(0.8);
        if (q.w > 0.1) return q;
    }
}

bool g_all_pass = true;

void report(int idx, const char* name, bool pass, const char* detail) {
    std::printf("%s %2d %-28s %s\n", pass ? "PASS" : "FAIL", idx, name, detail);
    if (!pass) g_all_pass = false;
}

QQbarPoly<Rational> power_monomial(int n) {
    QQbarPoly<Rational> m;
    m.add_term(n, 0, Rational(1));
    return m;
}

}  // namespace

int main() {
    std::setvbuf(stdout, nullptr, _IONBF, 0);

    // 1: exact rational identities for the Fueter map and the Appell system
    {
        OperatorTable table(27);
        bool ok = fueter_monomial<Rational>(0).is_zero() && fueter_monomial<Rational>(1).is_zero();

        QQbarPoly<Rational> minus4;
        minus4.add_term(0, 0, Rational(-4));
        ok = ok && fueter_monomial<Rational>(2) == minus4;

        for (int n = 0; n <= 25 && ok; ++n)
            ok = table.dbar(table.dirac(power_monomial(n))) == fueter_monomial<Rational>(n);
        for (int n = 1; n <= 20 && ok; ++n) {
            QQbarPoly<Rational> rhs = poly_add(
                poly_scale(dirac_monomial<Rational>(n), Rational(2)),
                poly_mul_q(fueter_monomial<Rational>(n)));
            ok = fueter_monomial<Rational>(n + 1) == rhs;
        }
        for (int k = 0; k <= 20 && ok; ++k) {
            ok = table.dbar(fueter_monomial<Rational>(k + 2)) ==
                 poly_scale(fueter_monomial<Rational>(k + 1), Rational(2 * (k + 2)));
        }
        for (int k = 0; k <= 20 && ok; ++k) {
            QQbarPoly<Rational> Qk = appell_Q<Rational>(k);
            ok = table.dirac(Qk).is_zero() && euler_apply(Qk) == poly_scale(Qk, Rational(k));
            if (ok) {
                QQbarPoly<Rational> lower;
                if (k > 0) lower = poly_scale(appell_Q<Rational>(k - 1), Rational(k));
                ok = poly_scale(table.dbar(Qk), Rational(1, 2)) == lower;
            }
            if (ok) {
                Rational sum = 0;
                for (int j = 0; j <= k; ++j) {
                    Rational t = appell_T_coeff(k, j);
                    sum += t;
                    Rational poch = rational_factorial(k) / pochhammer(Rational(3), k) *
                                    pochhammer(Rational(2), k - j) * pochhammer(Rational(1), j) /
                                    (rational_factorial(k - j) * rational_factorial(j));
                    if (!(poch == t)) ok = false;
                }
                ok = ok && sum == Rational(1);
            }
        }
        report(1, "exact-rational-identities", ok, ok ? "all identities exact" : "mismatch");
    }

    // 2: coefficient-space isometries with constant 4
    {
        double worst = 0.0, contraction = 0.0, roundtrip = 0.0, chain = 0.0;
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<Quatd> phi(13), psi(13);
            for (auto& v : phi) v = rquat(1.0);
            for (auto& v : psi) v = rquat(1.0);

            RegularSeries sphi = bargmann_fock_fueter_coeffs(phi);
            RegularSeries spsi = bargmann_fock_fueter_coeffs(psi);
            Quatd lhs = coefficient_inner_product(sphi.coeffs, spsi.coeffs, SpaceTag::A_H);
            Quatd rhs = coefficient_inner_product(phi, psi, SpaceTag::H_sub) * 4.0;
            worst = std::max(worst, abs(lhs - rhs) / (1.0 + abs(rhs)));

            double nl = coefficient_norm(sphi.coeffs, SpaceTag::A_H);
            double nr = 2.0 * coefficient_norm(phi, SpaceTag::L2_R);
            contraction = std::max(contraction, nl - nr);

            std::vector<Quatd> c(11);
            for (size_t k = 2; k < c.size(); ++k) c[k] = rquat(1.0);
            std::vector<Quatd> alpha = fueter_coeffs_from_slice(c);
            std::vector<Quatd> back = slice_coeffs_from_fueter(alpha);
            for (size_t k = 0; k < c.size(); ++k)
                roundtrip = std::max(roundtrip, abs(back[k] - c[k]));

            double a2 = membership_check(alpha, SpaceTag::A_H).norm_sq;
            double f2 = membership_check(c, SpaceTag::fock_slice).norm_sq;
            double b2 = membership_check(alpha, SpaceTag::B_B).norm_sq;
            double g2 = membership_check(c, SpaceTag::bergman_slice_ball).norm_sq;
            chain = std::max(chain, std::abs(a2 - 4.0 * f2) / (1.0 + 4.0 * f2));
            chain = std::max(chain, std::abs(b2 - 4.0 * g2) / (1.0 + 4.0 * g2));
        }
        bool pass = worst <= 1e-13 && contraction <= 1e-13 && roundtrip <= 1e-13 &&
                    chain <= 1e-13;
        char detail[160];
        std::snprintf(detail, sizeof detail,
                      "isometry=%.3g contraction=%.3g roundtrip=%.3g chains=%.3g tol=1e-13",
                      worst, std::max(contraction, 0.0), roundtrip, chain);
        report(2, "coefficient-isometries", pass, detail);
    }

    // 3: quadrature grams in the Fock and Bergman slice spaces
    {
        QuadratureRule slice = slice_gauss(unit_i(), 80);
        QuadratureRule disk = disk_rule(unit_i(), 80, 80);
        double fock_err = 0.0, ball_err = 0.0, dep = 0.0;

        double fact = 1.0;
        for (int m = 0; m <= 10; ++m) {
            if (m > 0) fact *= m;
            for (int n = m; n <= 10; ++n) {
                Quatd ip = quadrature_inner_product(
                    [&](const Quatd& p) { return qpow(p, m); },
                    [&](const Quatd& p) { return qpow(p, n); }, SpaceTag::fock_slice, slice);
                Quatd want = m == n ? Quatd{fact} : Quatd{};
                fock_err = std::max(fock_err, abs(ip - want) / (1.0 + abs(want)));

                Quatd bp = quadrature_inner_product(
                    [&](const Quatd& p) { return qpow(p, m); },
                    [&](const Quatd& p) { return qpow(p, n); }, SpaceTag::bergman_slice_ball,
                    disk);
                Quatd bwant = m == n ? Quatd{1.0 / (m + 1)} : Quatd{};
                ball_err = std::max(ball_err, abs(bp - bwant));
            }
        }
        for (int u = 0; u < 3; ++u) {
            ImaginaryUnit I = runit();
            QuadratureRule aslice = slice_gauss(I, 80);
            QuadratureRule adisk = disk_rule(I, 80, 80);
            for (int m = 0; m <= 8; ++m) {
                Quatd a = quadrature_inner_product([&](const Quatd& p) { return qpow(p, m); },
                                                   [&](const Quatd& p) { return qpow(p, m); },
                                                   SpaceTag::fock_slice, slice);
                Quatd b = quadrature_inner_product([&](const Quatd& p) { return qpow(p, m); },
                                                   [&](const Quatd& p) { return qpow(p, m); },
                                                   SpaceTag::fock_slice, aslice);
                dep = std::max(dep, abs(a - b));
                Quatd c = quadrature_inner_product([&](const Quatd& p) { return qpow(p, m); },
                                                   [&](const Quatd& p) { return qpow(p, m); },
                                                   SpaceTag::bergman_slice_ball, disk);
                Quatd d = quadrature_inner_product([&](const Quatd& p) { return qpow(p, m); },
                                                   [&](const Quatd& p) { return qpow(p, m); },
                                                   SpaceTag::bergman_slice_ball, adisk);
                dep = std::max(dep, abs(c - d));
            }
        }
        bool pass = fock_err <= 1e-8 && ball_err <= 1e-8 && dep <= 1e-10;
        char detail[160];
        std::snprintf(detail, sizeof detail,
                      "fock=%.3g ball=%.3g tol=1e-8 slice-dep=%.3g tol=1e-10", fock_err,
                      ball_err, dep);
        report(3, "quadrature-grams", pass, detail);
    }

    // 4: gaussian moment identity
    {
        QuadratureRule slice = slice_gauss(unit_i(), 80);
        double worst = 0.0;
        for (int k = 0; k <= 6; ++k)
            for (double x : {0.0, 0.7, -0.7}) {
                Quatd lhs = integrate(slice, [&](const Quatd& p) {
                    return qpow(p, k) * norm_sq(p) * norm_sq(p) * slice_exp(conj(p), 0.0, x, 0.0);
                });
                Quatd rhs{double(k + 1) * double(k + 2) * std::pow(x, k)};
                worst = std::max(worst, abs(lhs - rhs) / std::max(1.0, abs(rhs)));
            }
        char detail[80];
        std::snprintf(detail, sizeof detail, "rel-error=%.3g tol=1e-6", worst);
        report(4, "gaussian-moments", worst <= 1e-6, detail);
    }

    // 5: bergman ball series against closed form
    {
        const int N = 400;
        double pair_err = 0.0, axis_err = 0.0;
        for (int t = 0; t < 50; ++t) {
            Quatd q = rball(0.6), r = rball(0.6);
            Quatd s = bergman_ball(q, r, N, KernelForm::series).value;
            Quatd c = bergman_ball(q, r, N, KernelForm::closed).value;
            pair_err = std::max(pair_err, abs(s - c));
        }
        for (double x = -0.5; x <= 0.5 + 1e-12; x += 0.1) {
            double y = 0.35;
            Quatd series = bergman_generating_series(Quatd{x}, Quatd{y}, N) * (1.0 / 6.0);
            axis_err = std::max(axis_err, abs(series - Quatd{std::pow(1.0 - x * y, -4.0)}));
        }
        bool pass = pair_err <= 1e-9 && axis_err <= 1e-10;
        char detail[120];
        std::snprintf(detail, sizeof detail, "pairs=%.3g tol=1e-9 axis=%.3g tol=1e-10", pair_err,
                      axis_err);
        report(5, "bergman-series-vs-closed", pass, detail);
    }

    // 6: finite difference laplacian matches each Fueter kernel
    {
        const int N = 300;
        double lap = 0.0, reg = 0.0;
        for (int t = 0; t < 20; ++t) {
            Quatd q = rball(0.55), r = rball(0.55);
            Quatd fd = laplacian_fd(
                [&](const Quatd& s) { return bergman_ball(s, r, N, KernelForm::closed).value; },
                q);
            lap = std::max(lap,
                           abs(fd - bergman_fueter_ball(q, r, N, KernelForm::closed).value));
            reg = std::max(reg, abs(dirac_fd(
                                    [&](const Quatd& s) {
                                        return bergman_fueter_ball(s, r, N, KernelForm::closed)
                                            .value;
                                    },
                                    q)));
            reg = std::max(
                reg, abs(dirac_fd(
                         [&](const Quatd& s) { return fock_fueter_kernel(s, r, N).value; }, q)));
        }
        for (int t = 0; t < 20; ++t) {
            Quatd q = rquat(0.4) + Quatd{1.0}, r = rquat(0.4) + Quatd{1.0};
            Quatd fd = laplacian_fd([&](const Quatd& s) { return bergman_halfspace(s, r); }, q);
            lap = std::max(lap, abs(fd - bergman_fueter_halfspace(q, r)));
            reg = std::max(reg, abs(dirac_fd(
                                    [&](const Quatd& s) {
                                        return bergman_fueter_halfspace(s, r);
                                    },
                                    q)));
        }
        for (int t = 0; t < 20; ++t) {
            Quatd q = rhalfball(), r = rhalfball();
            Quatd fd = laplacian_fd([&](const Quatd& s) { return bergman_halfball(s, r, N); }, q);
            lap = std::max(lap, abs(fd - bergman_fueter_halfball(q, r, N)));
            reg = std::max(reg, abs(dirac_fd(
                                    [&](const Quatd& s) {
                                        return bergman_fueter_halfball(s, r, N);
                                    },
                                    q)));
        }
        bool pass = lap <= 1e-4 && reg <= 1e-4;
        char detail[120];
        std::snprintf(detail, sizeof detail, "laplacian=%.3g regularity=%.3g tol=1e-4", lap, reg);
        report(6, "laplacian-matches-bf", pass, detail);
    }

    // 7: half ball additivity
    {
        const int N = 300;
        double ext = 0.0, lap = 0.0;
        bool exact_sum = true;
        for (int t = 0; t < 10; ++t) {
            Quatd q = rhalfball(), r = rhalfball();
            ext = std::max(ext, abs(bergman_halfball(q, r, N) - bergman_halfball_ext(q, r)));
            Quatd parts = bergman_fueter_ball(q, r, N, KernelForm::closed).value +
                          bergman_fueter_halfspace(q, r);
            if (abs(bergman_fueter_halfball(q, r, N) - parts) != 0.0) exact_sum = false;
            Quatd fd = laplacian_fd([&](const Quatd& s) { return bergman_halfball(s, r, N); }, q);
            lap = std::max(lap, abs(fd - bergman_fueter_halfball(q, r, N)));
        }
        bool pass = ext <= 1e-10 && exact_sum && lap <= 1e-4;
        char detail[140];
        std::snprintf(detail, sizeof detail,
                      "ext-route=%.3g tol=1e-10 bf-sum=%s laplacian=%.3g tol=1e-4", ext,
                      exact_sum ? "exact" : "DIFFERS", lap);
        report(7, "halfball-additivity", pass, detail);
    }

    // 8: wedge kernels restricted to slices
    {
        double slice_err = 0.0, n1_err = 0.0;
        for (int n = 1; n <= 3; ++n)
            for (int t = 0; t < 6; ++t) {
                double lo = M_PI / 2.0 - M_PI / n;
                double thz = lo + urand(0.25, 0.75) * (M_PI / n);
                double thw = lo + urand(0.25, 0.75) * (M_PI / n);
                std::complex<double> z = std::polar(urand(0.6, 1.1), thz);
                std::complex<double> w = std::polar(urand(0.6, 1.1), thw);
                ImaginaryUnit I = runit();
                Quatd zq = Quatd{z.real()} + I.q() * z.imag();
                Quatd wq = Quatd{w.real()} + I.q() * w.imag();
                std::complex<double> kc = wedge_kernel_complex(z, w, n);
                Quatd want = Quatd{kc.real()} + I.q() * kc.imag();
                slice_err = std::max(slice_err, abs(bergman_wedge(zq, wq, n) - want));
            }
        for (int t = 0; t < 10; ++t) {
            Quatd q = rquat(0.4) + Quatd{1.0}, r = rquat(0.4) + Quatd{1.0};
            n1_err = std::max(n1_err, abs(bergman_wedge(q, r, 1) + bergman_halfspace(q, r) * M_PI));
        }
        bool pass = slice_err <= 1e-12 && n1_err <= 1e-12;
        char detail[120];
        std::snprintf(detail, sizeof detail, "slice=%.3g n1-halfspace=%.3g tol=1e-12", slice_err,
                      n1_err);
        report(8, "wedge-slice-restriction", pass, detail);
    }

    // 9: gram of the phi kernel under gauss-hermite
    {
        const int N = 300;
        QuadratureRule gh = gauss_hermite(80);
        std::vector<double> tn(N + 1);
        for (int k = 0; k <= N; ++k) tn[k] = appell_T_normalizer(k);
        double worst = 0.0;
        for (int t = 0; t < 10; ++t) {
            Quatd q = rball(0.7), p = rball(0.7);
            std::vector<Quatd> Qq = appell_eval_all(q, N), Qp = appell_eval_all(p, N);
            std::vector<Quatd> vals(gh.size());
            for (std::size_t i = 0; i < gh.size(); ++i) {
                double x = gh.nodes[i].w;
                std::vector<double> ortho = hermite_ortho_poly_all(N + 2, x);
                Quatd a{}, b{};
                for (int k = 0; k <= N; ++k) {
                    a += Qq[k] * (tn[k] * ortho[k + 2]);
                    b += Qp[k] * (tn[k] * ortho[k + 2]);
                }
                vals[i] = (a * -2.0) * (b * -2.0) * gh.weights[i];
            }
            Quatd lhs = pairwise_sum(vals);
            Quatd rhs{};
            for (int k = 0; k <= N; ++k) rhs += Qq[k] * Qp[k] * (4.0 * tn[k] * tn[k]);
            worst = std::max(worst, abs(lhs - rhs));
        }
        char detail[80];
        std::snprintf(detail, sizeof detail, "max-error=%.3g tol=1e-7", worst);
        report(9, "phi-gram", worst <= 1e-7, detail);
    }

    // 10: action on the hermite basis
    {
        const int N = 300;
        QuadratureRule slice = slice_gauss(unit_i(), 80);
        QuadratureRule gh = gauss_hermite(80);
        double sxi = 0.0, routes = 0.0;
        for (int n = 0; n <= 8; ++n) {
            std::vector<Quatd> e(n + 1);
            e[n] = Quatd{1.0};
            Quatd q = rball(0.7);
            Quatd got = bargmann_fock_fueter_quad(e, q, slice, gh, N);
            Quatd want = n >= 2 ? appell_T_eval(n - 2, q) * -2.0 : Quatd{};
            sxi = std::max(sxi, abs(got - want));
        }
        for (int t = 0; t < 6; ++t) {
            Quatd q = rball(0.7);
            double x = urand(-1.5, 1.5);
            routes = std::max(routes,
                              abs(phi_kernel(q, x, N).value - phi_kernel_quad(q, x, slice, N)));
        }
        bool pass = sxi <= 1e-6 && routes <= 1e-7;
        char detail[120];
        std::snprintf(detail, sizeof detail, "pointwise=%.3g tol=1e-6 phi-routes=%.3g tol=1e-7",
                      sxi, routes);
        report(10, "s-action-hermite-basis", pass, detail);
    }

    // 11: three integral representations of the basis
    {
        const int N = 300;
        QuadratureRule slice = slice_gauss(unit_i(), 80);
        QuadratureRule gh = gauss_hermite(80);
        QuadratureRule disk = disk_rule(unit_i(), 80, 80);
        double worst = 0.0;
        for (int k = 0; k <= 5; ++k)
            for (int t = 0; t < 5; ++t) {
                Quatd q = rquat(0.6);
                Quatd qb = rball(0.6);
                Quatd want = appell_Q_eval(k, q);
                Quatd want_b = appell_Q_eval(k, qb);
                worst = std::max(
                    worst, abs(integral_representation_Q(k, q, QSource::fock, slice, N) - want));
                worst = std::max(
                    worst, abs(integral_representation_Q(k, q, QSource::hermite, gh, N) - want));
                worst = std::max(worst, abs(integral_representation_Q(k, qb, QSource::bergman,
                                                                      disk, N) -
                                            want_b));
            }
        char detail[80];
        std::snprintf(detail, sizeof detail, "max-error=%.3g tol=1e-6", worst);
        report(11, "integral-representations", worst <= 1e-6, detail);
    }

    // 12: gaussian norm bound for the mapped powers
    {
        QuadratureRule rule = r4_gauss(12);
        double excess = 0.0;
        for (int n = 2; n <= 8; ++n) {
            QQbarPoly<Rational> fn = fueter_monomial<Rational>(n);
            Quatd ns = integrate(rule, [&](const Quatd& q) {
                Quatd v = qq_eval(fn, q);
                return Quatd{norm_sq(v)};
            });
            double norm = std::sqrt(ns.w);
            double bound = 2.0 * n * (n - 1) * std::sqrt(std::exp(std::lgamma(double(n))));
            excess = std::max(excess, norm - bound);
        }
        char detail[80];
        std::snprintf(detail, sizeof detail, "max-excess=%.3g tol=1e-6", excess);
        report(12, "rb-norm-bound", excess <= 1e-6, detail);
    }

    return g_all_pass ? 0 : 1;
}
