#include "fueter/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <stdexcept>

#include "fueter/appell.hpp"
#include "fueter/fd.hpp"
#include "fueter/hermite.hpp"
#include "fueter/kernels.hpp"
#include "fueter/operators.hpp"
#include "fueter/quadrature.hpp"
#include "fueter/transforms.hpp"

namespace fueter {

Check make_check(std::string name, double measured, double tol, std::string detail) {
    Check c;
    c.name = std::move(name);
    c.measured = measured;
    c.tol = tol;
    c.pass = measured <= tol;
    c.detail = std::move(detail);
    return c;
}

Check make_flag(std::string name, bool ok, std::string detail) {
    Check c;
    c.name = std::move(name);
    c.measured = ok ? 0.0 : 1.0;
    c.tol = 0.0;
    c.pass = ok;
    c.detail = std::move(detail);
    return c;
}

namespace {

SliceSeries random_slice_poly(RandomPoints& rng, int deg) {
    SliceSeries f;
    f.coeffs.resize(deg + 1);
    for (auto& c : f.coeffs) c = rng.ball_point();
    return f;
}

std::vector<Quatd> random_coeffs(RandomPoints& rng, int n) {
    std::vector<Quatd> c(n);
    for (auto& v : c) v = rng.ball_point();
    return c;
}

Quatd embed_complex(std::complex<double> z, const ImaginaryUnit& I) {
    return Quatd{z.real()} + I.q() * z.imag();
}

// Sector point of the wedge domain: angle in (pi/2 - pi/n, pi/2), radius rho.
Quatd wedge_point(int n, double frac, double rho, const ImaginaryUnit& I) {
    double theta = M_PI / 2.0 - M_PI / n + frac * (M_PI / n);
    return Quatd{rho * std::cos(theta)} + I.q() * (rho * std::sin(theta));
}

// Lebesgue Bergman kernel of the sector via the conformal map
// phi(z) = I e^{-I n pi/2} z^n onto the right half plane.
std::complex<double> wedge_conformal_kernel(std::complex<double> z, std::complex<double> w,
                                            int n) {
    const std::complex<double> iu(0.0, 1.0);
    std::complex<double> c = iu * std::exp(-iu * (double(n) * M_PI / 2.0));
    std::complex<double> s = c * std::pow(z, n) + std::conj(c * std::pow(w, n));
    std::complex<double> dz = c * double(n) * std::pow(z, n - 1);
    std::complex<double> dw = c * double(n) * std::pow(w, n - 1);
    return dz / (M_PI * s * s) * std::conj(dw);
}

}  // namespace

std::vector<Check> verify_appell(const VerifyOptions& opt) {
    std::vector<Check> out;
    const int K = opt.max_degree;
    OperatorTable table(K + 2);

    bool row_sum = true, poch = true, monogenic = true, lowering = true, euler = true,
         via_tau = true;
    for (int k = 0; k <= K; ++k) {
        Rational s = 0;
        for (int j = 0; j <= k; ++j) {
            Rational t = appell_T_coeff(k, j);
            s += t;
            Rational alt = rational_factorial(k) / pochhammer(Rational(3), k) *
                           pochhammer(Rational(2), k - j) * pochhammer(Rational(1), j) /
                           (rational_factorial(k - j) * rational_factorial(j));
            if (!(alt == t)) poch = false;
        }
        if (!(s == Rational(1))) row_sum = false;

        QQbarPoly<Rational> Qk = appell_Q<Rational>(k);
        if (!table.dirac(Qk).is_zero()) monogenic = false;
        QQbarPoly<Rational> low = poly_scale(table.dbar(Qk), Rational(1, 2));
        QQbarPoly<Rational> low_ref;
        if (k > 0) low_ref = poly_scale(appell_Q<Rational>(k - 1), Rational(k));
        if (!(low == low_ref)) lowering = false;
        if (!(euler_apply(Qk) == poly_scale(Qk, Rational(k)))) euler = false;
        QQbarPoly<Rational> ft = poly_scale(fueter_monomial<Rational>(k + 2),
                                            Rational(-1) / Rational(2 * (k + 1) * (k + 2)));
        if (!(ft == Qk)) via_tau = false;
    }
    out.push_back(make_flag("appell/T-row-sum", row_sum, "exact"));
    out.push_back(make_flag("appell/T-pochhammer-form", poch, "exact"));
    out.push_back(make_flag("appell/Q-monogenic", monogenic, "exact"));
    out.push_back(make_flag("appell/Q-lowering", lowering, "exact"));
    out.push_back(make_flag("appell/Q-euler-degree", euler, "exact"));
    out.push_back(make_flag("appell/Q-from-tau-monomial", via_tau, "exact"));

    RandomPoints rng(opt.seed);
    double worst = 0.0;
    for (int t = 0; t < 20; ++t) {
        Quatd q = rng.ball_point();
        std::vector<Quatd> Q = appell_eval_all(q, K);
        double aq = abs(q), pw = 1.0;
        for (int k = 0; k <= K; ++k) {
            worst = std::max(worst, abs(Q[k]) - pw);
            pw *= aq;
        }
    }
    out.push_back(make_check("appell/Q-growth-bound", std::max(0.0, worst), 1e-12));

    double w_exp = 0.0;
    for (double x : {-0.9, 0.3, 1.1})
        w_exp = std::max(w_exp,
                         abs(regular_exp(Quatd{x}, opt.truncation).value - Quatd{std::exp(x)}));
    out.push_back(make_check("appell/regular-exp-real-axis", w_exp, std::max(opt.tol, 1e-12)));

    double w_tail = 0.0;
    for (int t = 0; t < 4; ++t) {
        Quatd s = rng.ball_point() * 2.0;
        TailedValue lo = regular_exp(s, 12);
        TailedValue hi = regular_exp(s, 12 + 40);
        w_tail = std::max(w_tail, abs(lo.value - hi.value) - lo.tail);
    }
    out.push_back(make_check("appell/regular-exp-tail-honest", std::max(0.0, w_tail), 1e-15));
    return out;
}

std::vector<Check> verify_fueter_map(const VerifyOptions& opt) {
    std::vector<Check> out;
    const int K = opt.max_degree;
    OperatorTable table(K + 3);

    bool lemma = true;
    for (int n = 0; n <= K + 1; ++n) {
        QQbarPoly<Rational> m;
        if (n == 0)
            m.add_term(0, 0, Rational(1));
        else
            m.add_term(n, 0, Rational(1));
        QQbarPoly<Rational> lhs = table.dirac(m);
        if (n == 0) {
            if (!lhs.is_zero()) lemma = false;
        } else if (!(lhs == dirac_monomial<Rational>(n))) {
            lemma = false;
        }
    }
    out.push_back(make_flag("fueter-map/dirac-power-sum", lemma, "exact"));

    bool thm = true;
    for (int n = 0; n <= K + 2; ++n) {
        QQbarPoly<Rational> m;
        m.add_term(n, 0, Rational(1));
        if (!(table.dbar(table.dirac(m)) == fueter_monomial<Rational>(n))) thm = false;
    }
    out.push_back(make_flag("fueter-map/tau-matches-dbar-dirac", thm, "exact"));

    bool rec = true;
    for (int n = 1; n <= K + 1; ++n) {
        QQbarPoly<Rational> rhs = poly_add(poly_scale(dirac_monomial<Rational>(n), Rational(2)),
                                           poly_mul_q(fueter_monomial<Rational>(n)));
        if (!(fueter_monomial<Rational>(n + 1) == rhs)) rec = false;
    }
    out.push_back(make_flag("fueter-map/recursion", rec, "exact"));

    bool lower = true, hom = true;
    for (int k = 0; k <= K; ++k) {
        QQbarPoly<Rational> fk2 = fueter_monomial<Rational>(k + 2);
        if (!(table.dbar(fk2) == poly_scale(fueter_monomial<Rational>(k + 1), Rational(2 * (k + 2)))))
            lower = false;
        if (!(euler_apply(fk2) == poly_scale(fk2, Rational(k)))) hom = false;
    }
    out.push_back(make_flag("fueter-map/dbar-lowering", lower, "exact"));
    out.push_back(make_flag("fueter-map/euler-homogeneity", hom, "exact"));

    bool leib = true;
    for (int k = 0; k <= K; ++k) {
        QQbarPoly<Rational> Qk = appell_Q<Rational>(k);
        QQbarPoly<Rational> lhs = table.dbar(poly_mul_q(Qk));
        QQbarPoly<Rational> rhs =
            poly_add(poly_scale(Qk, Rational(4)), poly_scale(euler_apply(Qk), Rational(2)));
        if (!(lhs == rhs)) leib = false;
    }
    out.push_back(make_flag("fueter-map/leibniz-dbar-q", leib, "exact"));

    RandomPoints rng(opt.seed);
    double worst = 0.0;
    for (int t = 0; t < 5; ++t) {
        SliceSeries f = random_slice_poly(rng, 8);
        RegularSeries g = fueter_series(f);
        Quatd q = rng.ball_point();
        Quatd fd = laplacian_fd([&](const Quatd& p) { return slice_eval(f, p); }, q);
        worst = std::max(worst, abs(fd - regular_eval(g, q)));
    }
    out.push_back(make_check("fueter-map/laplacian-fd", worst, std::max(opt.tol, 1e-6)));
    return out;
}

std::vector<Check> verify_fock_kernel(const VerifyOptions& opt) {
    std::vector<Check> out;
    const int N = opt.truncation;
    RandomPoints rng(opt.seed);

    double herm = 0.0;
    for (int t = 0; t < 5; ++t) {
        Quatd p = rng.ball_point(), q = rng.ball_point();
        herm = std::max(herm, abs(fock_kernel(p, q, N).value - conj(fock_kernel(q, p, N).value)));
    }
    out.push_back(make_check("fock-kernel/hermitian-symmetry", herm, std::max(opt.tol, 1e-12)));

    QuadratureRule slice = slice_gauss(unit_i(), opt.quad_order);
    SliceSeries f = random_slice_poly(rng, 6);
    double repro = 0.0;
    for (int t = 0; t < 3; ++t) {
        Quatd q = rng.ball_point();
        Quatd ip = quadrature_inner_product(
            [&](const Quatd& p) { return slice_eval(f, p); },
            [&](const Quatd& p) { return fock_kernel(p, q, N).value; }, SpaceTag::fock_slice,
            slice);
        Quatd fq = slice_eval(f, q);
        repro = std::max(repro, abs(ip - fq) / (1.0 + abs(fq)));
    }
    out.push_back(make_check("fock-kernel/reproducing", repro, opt.tol, "relative"));

    double gram = 0.0, fact = 1.0;
    for (int m = 0; m <= 10; ++m) {
        if (m > 0) fact *= m;
        for (int n = m; n <= 10; ++n) {
            Quatd ip = quadrature_inner_product(
                [&](const Quatd& p) { return qpow(p, m); },
                [&](const Quatd& p) { return qpow(p, n); }, SpaceTag::fock_slice, slice);
            Quatd want = m == n ? Quatd{fact} : Quatd{};
            gram = std::max(gram, abs(ip - want) / (1.0 + abs(want)));
        }
    }
    out.push_back(make_check("fock-kernel/gram-m-factorial", gram, opt.tol, "relative"));

    double slice_dep = 0.0;
    for (int u = 0; u < 3; ++u) {
        QuadratureRule alt = slice_gauss(rng.random_unit(), opt.quad_order);
        for (int m = 0; m <= 6; ++m) {
            Quatd a = quadrature_inner_product([&](const Quatd& p) { return qpow(p, m); },
                                               [&](const Quatd& p) { return qpow(p, m); },
                                               SpaceTag::fock_slice, slice);
            Quatd b = quadrature_inner_product([&](const Quatd& p) { return qpow(p, m); },
                                               [&](const Quatd& p) { return qpow(p, m); },
                                               SpaceTag::fock_slice, alt);
            slice_dep = std::max(slice_dep, abs(a - b));
        }
    }
    out.push_back(make_check("fock-kernel/gram-slice-independence", slice_dep, 1e-10));

    double reg = 0.0;
    for (int t = 0; t < 5; ++t) {
        Quatd q = rng.ball_point(), p = rng.ball_point();
        Quatd res = dirac_fd([&](const Quatd& s) { return fock_fueter_kernel(s, p, N).value; }, q);
        reg = std::max(reg, abs(res));
    }
    out.push_back(make_check("fock-kernel/fueter-regularity-fd", reg, 1e-4));

    double ax = 0.0;
    for (double x : {0.4, -0.8}) {
        Quatd p = rng.ball_point();
        ax = std::max(ax, abs(fock_fueter_kernel(Quatd{x}, p, N).value -
                              fock_fueter_kernel_real_axis(x, p)));
    }
    out.push_back(make_check("fock-kernel/real-axis-form", ax, std::max(opt.tol, 1e-12)));

    double bound = 0.0;
    for (int t = 0; t < 10; ++t) {
        Quatd q = rng.ball_point() * 2.0, p = rng.ball_point() * 2.0;
        double lhs = abs(fock_fueter_kernel(q, p, N).value);
        double rhs = 2.0 * norm_sq(p) * std::exp(abs(q) * abs(p));
        bound = std::max(bound, lhs - rhs);
    }
    out.push_back(make_check("fock-kernel/growth-bound", std::max(0.0, bound), 1e-12));

    double tail = 0.0;
    for (int t = 0; t < 4; ++t) {
        Quatd q = rng.ball_point() * 2.0, p = rng.ball_point() * 2.0;
        TailedValue lo = fock_fueter_kernel(q, p, 10);
        TailedValue hi = fock_fueter_kernel(q, p, 50);
        tail = std::max(tail, abs(lo.value - hi.value) - lo.tail);
    }
    out.push_back(make_check("fock-kernel/tail-honest", std::max(0.0, tail), 1e-15));

    double tau_route = 0.0;
    for (int t = 0; t < 3; ++t) {
        Quatd q = rng.ball_point(), p = rng.ball_point();
        SliceSeries fp;
        fp.coeffs.resize(N + 3);
        Quatd pb = conj(p), pk{1.0};
        double inv_fact = 1.0;
        for (int k = 0; k <= N + 2; ++k) {
            if (k > 0) inv_fact /= k;
            fp.coeffs[k] = pk * inv_fact;
            pk *= pb;
        }
        Quatd via_tau = regular_eval(fueter_series(fp), q);
        tau_route = std::max(tau_route, abs(via_tau - fock_fueter_kernel(q, p, N).value));
    }
    out.push_back(make_check("fock-kernel/tau-of-fock-kernel", tau_route, opt.tol));
    return out;
}

std::vector<Check> verify_transforms(const VerifyOptions& opt) {
    std::vector<Check> out;
    const int N = opt.truncation;
    RandomPoints rng(opt.seed);
    QuadratureRule gh = gauss_hermite(opt.quad_order);
    QuadratureRule slice = slice_gauss(unit_i(), opt.quad_order);

    double sb = 0.0;
    for (int n = 0; n <= 8; ++n) {
        std::vector<Quatd> e(n + 1);
        e[n] = Quatd{1.0};
        for (int t = 0; t < 3; ++t) {
            Quatd q = rng.ball_point();
            Quatd want = qpow(q, n) * std::exp(-0.5 * std::lgamma(double(n + 1)));
            sb = std::max(sb, abs(segal_bargmann(e, q, gh).value - want));
        }
    }
    out.push_back(make_check("transforms/segal-bargmann-xi-n", sb, opt.tol));

    {
        std::vector<Quatd> e3(4);
        e3[3] = Quatd{1.0};
        Quatd q = rng.ball_point();
        Quatd a = segal_bargmann(e3, q, gh).value;
        Quatd b = segal_bargmann_fn([](double x) { return hermite_xi(3, x); }, q, gh).value;
        out.push_back(make_check("transforms/segal-bargmann-fn-route", abs(a - b),
                                 std::max(opt.tol, 1e-10)));
    }

    {
        std::vector<Quatd> phi = random_coeffs(rng, 7), psi = random_coeffs(rng, 7);
        Quatd lhs = quadrature_inner_product(
            [&](const Quatd& p) { return segal_bargmann(phi, p, gh).value; },
            [&](const Quatd& p) { return segal_bargmann(psi, p, gh).value; },
            SpaceTag::fock_slice, slice);
        Quatd rhs = coefficient_inner_product(phi, psi, SpaceTag::L2_R);
        out.push_back(make_check("transforms/segal-bargmann-isometry", abs(lhs - rhs),
                                 std::max(opt.tol, 1e-9)));
    }

    double phi_rt = 0.0;
    for (int t = 0; t < 4; ++t) {
        Quatd q = rng.ball_point(0.7);
        double x = rng.range(-1.5, 1.5);
        phi_rt = std::max(phi_rt, abs(phi_kernel(q, x, N).value - phi_kernel_quad(q, x, slice, N)));
    }
    out.push_back(make_check("transforms/phi-series-vs-quadrature", phi_rt,
                             std::max(opt.tol, 1e-7)));

    double sxi = 0.0;
    for (int n = 0; n <= 8; ++n) {
        std::vector<Quatd> e(n + 1);
        e[n] = Quatd{1.0};
        Quatd q = rng.ball_point(0.7);
        Quatd got = bargmann_fock_fueter_quad(e, q, slice, gh, N);
        Quatd want = n >= 2 ? appell_T_eval(n - 2, q) * -2.0 : Quatd{};
        sxi = std::max(sxi, abs(got - want));
    }
    out.push_back(make_check("transforms/S-xi-action", sxi, std::max(opt.tol, 1e-6)));

    {
        double worst = 0.0;
        for (int t = 0; t < 4; ++t) {
            Quatd q = rng.ball_point(0.7), p = rng.ball_point(0.7);
            std::vector<Quatd> Qq = appell_eval_all(q, N), Qp = appell_eval_all(p, N);
            std::vector<double> tn(N + 1);
            for (int k = 0; k <= N; ++k) tn[k] = appell_T_normalizer(k);
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
        out.push_back(make_check("transforms/phi-gram", worst, std::max(opt.tol, 1e-7)));
    }

    {
        std::vector<Quatd> phi = random_coeffs(rng, 11), psi = random_coeffs(rng, 11);
        phi[0] = phi[1] = psi[0] = psi[1] = Quatd{};
        RegularSeries sphi = bargmann_fock_fueter_coeffs(phi);
        RegularSeries spsi = bargmann_fock_fueter_coeffs(psi);
        Quatd lhs = coefficient_inner_product(sphi.coeffs, spsi.coeffs, SpaceTag::A_H);
        Quatd rhs = coefficient_inner_product(phi, psi, SpaceTag::H_sub) * 4.0;
        out.push_back(make_check("transforms/S-isometry-constant-4", abs(lhs - rhs), 1e-13));
    }

    {
        std::vector<Quatd> phi = random_coeffs(rng, 11);
        double lhs = coefficient_norm(bargmann_fock_fueter_coeffs(phi).coeffs, SpaceTag::A_H);
        double rhs = 2.0 * coefficient_norm(phi, SpaceTag::L2_R);
        out.push_back(make_check("transforms/S-contraction", std::max(0.0, lhs - rhs), 1e-13));
    }

    {
        std::vector<Quatd> c = random_coeffs(rng, 9);
        c[0] = c[1] = Quatd{};
        std::vector<Quatd> back = slice_coeffs_from_fueter(fueter_coeffs_from_slice(c));
        double worst = 0.0;
        for (std::size_t k = 0; k < c.size(); ++k) worst = std::max(worst, abs(back[k] - c[k]));
        out.push_back(make_check("transforms/coefficient-map-roundtrip", worst, 1e-14));

        std::vector<Quatd> alpha = fueter_coeffs_from_slice(c);
        double a_lhs = membership_check(alpha, SpaceTag::A_H).norm_sq;
        double a_rhs = 4.0 * membership_check(c, SpaceTag::fock_slice).norm_sq;
        out.push_back(make_check("transforms/norm-chain-fock",
                                 std::abs(a_lhs - a_rhs) / (1.0 + a_rhs), 1e-13, "relative"));
        double b_lhs = membership_check(alpha, SpaceTag::B_B).norm_sq;
        double b_rhs = 4.0 * membership_check(c, SpaceTag::bergman_slice_ball).norm_sq;
        out.push_back(make_check("transforms/norm-chain-bergman",
                                 std::abs(b_lhs - b_rhs) / (1.0 + b_rhs), 1e-13, "relative"));
    }

    {
        std::vector<Quatd> bad(3, Quatd{1.0});
        bool flagged = !membership_check(bad, SpaceTag::H_sub).in_space;
        out.push_back(make_flag("transforms/H-sub-membership", flagged));
    }
    return out;
}

std::vector<Check> verify_integral_reps(const VerifyOptions& opt) {
    std::vector<Check> out;
    const int N = opt.truncation;
    RandomPoints rng(opt.seed);
    QuadratureRule slice = slice_gauss(unit_i(), opt.quad_order);
    QuadratureRule gh = gauss_hermite(opt.quad_order);
    QuadratureRule disk = disk_rule(unit_i(), opt.quad_order, opt.quad_order);

    double wf = 0.0, wh = 0.0, wb = 0.0;
    for (int k = 0; k <= 5; ++k) {
        QQbarPoly<Rational> Qk = appell_Q<Rational>(k);
        for (int t = 0; t < 3; ++t) {
            Quatd q = rng.ball_point();
            Quatd qb = rng.ball_point(0.6);
            Quatd want = qq_eval(Qk, q);
            Quatd want_b = qq_eval(Qk, qb);
            wf = std::max(wf, abs(integral_representation_Q(k, q, QSource::fock, slice, N) - want));
            wh = std::max(wh, abs(integral_representation_Q(k, q, QSource::hermite, gh, N) - want));
            wb = std::max(
                wb, abs(integral_representation_Q(k, qb, QSource::bergman, disk, N) - want_b));
        }
    }
    out.push_back(make_check("integral-reps/Q-fock-source", wf, std::max(opt.tol, 1e-6)));
    out.push_back(make_check("integral-reps/Q-hermite-source", wh, std::max(opt.tol, 1e-6)));
    out.push_back(make_check("integral-reps/Q-bergman-source", wb, std::max(opt.tol, 1e-6)));

    double wm = 0.0;
    for (int k = 0; k <= 6; ++k) {
        for (double x : {0.0, 0.7, -0.7}) {
            Quatd lhs = integrate(slice, [&](const Quatd& p) {
                return qpow(p, k) * norm_sq(p) * norm_sq(p) * slice_exp(conj(p), 0.0, x, 0.0);
            });
            Quatd rhs = Quatd{double(k + 1) * double(k + 2) * std::pow(x, k)};
            wm = std::max(wm, abs(lhs - rhs) / std::max(1.0, abs(rhs)));
        }
    }
    out.push_back(make_check("integral-reps/fock-moments", wm, std::max(opt.tol, 1e-6),
                             "relative"));
    return out;
}

std::vector<Check> verify_bergman_ball(const VerifyOptions& opt) {
    std::vector<Check> out;
    const int N = opt.truncation;
    RandomPoints rng(opt.seed);

    double sc = 0.0, herm = 0.0, bfsc = 0.0;
    for (int t = 0; t < 10; ++t) {
        Quatd q = rng.ball_point(0.6), r = rng.ball_point(0.6);
        TailedValue s = bergman_ball(q, r, N, KernelForm::series);
        Quatd c = bergman_ball(q, r, N, KernelForm::closed).value;
        sc = std::max(sc, abs(s.value - c) - s.tail);
        herm = std::max(herm, abs(c - conj(bergman_ball(r, q, N, KernelForm::closed).value)));
        TailedValue bs = bergman_fueter_ball(q, r, N, KernelForm::series);
        Quatd bc = bergman_fueter_ball(q, r, N, KernelForm::closed).value;
        bfsc = std::max(bfsc, abs(bs.value - bc) - bs.tail);
    }
    out.push_back(make_check("bergman-ball/series-vs-closed", std::max(0.0, sc), 1e-12));
    out.push_back(make_check("bergman-ball/hermitian-symmetry", herm, std::max(opt.tol, 1e-12)));
    out.push_back(make_check("bergman-ball/bf-series-vs-closed", std::max(0.0, bfsc), 1e-12));

    double ax = 0.0;
    for (int t = 0; t < 5; ++t) {
        double x = rng.range(-0.8, 0.8), y = rng.range(-0.8, 0.8);
        Quatd got = bergman_ball(Quatd{x}, Quatd{y}, N, KernelForm::closed).value;
        double want = 1.0 / ((1.0 - x * y) * (1.0 - x * y));
        ax = std::max(ax, abs(got - Quatd{want}));
    }
    out.push_back(make_check("bergman-ball/real-axis-form", ax, std::max(opt.tol, 1e-12)));

    QuadratureRule disk = disk_rule(unit_i(), opt.quad_order, opt.quad_order);
    SliceSeries g = random_slice_poly(rng, 5);
    double repro = 0.0;
    for (int t = 0; t < 3; ++t) {
        Quatd r = rng.ball_point(0.6);
        Quatd got = integrate(disk, [&](const Quatd& p) {
            return bergman_ball(r, p, N, KernelForm::closed).value * slice_eval(g, p);
        });
        repro = std::max(repro, abs(got - slice_eval(g, r)));
    }
    out.push_back(make_check("bergman-ball/reproducing", repro, std::max(opt.tol, 1e-8)));

    double gram = 0.0;
    for (int m = 0; m <= 10; ++m)
        for (int n = m; n <= 10; ++n) {
            Quatd ip = quadrature_inner_product(
                [&](const Quatd& p) { return qpow(p, m); },
                [&](const Quatd& p) { return qpow(p, n); }, SpaceTag::bergman_slice_ball, disk);
            Quatd want = m == n ? Quatd{1.0 / (m + 1)} : Quatd{};
            gram = std::max(gram, abs(ip - want));
        }
    out.push_back(make_check("bergman-ball/gram", gram, opt.tol));

    double slice_dep = 0.0;
    for (int u = 0; u < 3; ++u) {
        QuadratureRule alt = disk_rule(rng.random_unit(), opt.quad_order, opt.quad_order);
        for (int m = 0; m <= 6; ++m) {
            Quatd a = quadrature_inner_product([&](const Quatd& p) { return qpow(p, m); },
                                               [&](const Quatd& p) { return qpow(p, m); },
                                               SpaceTag::bergman_slice_ball, disk);
            Quatd b = quadrature_inner_product([&](const Quatd& p) { return qpow(p, m); },
                                               [&](const Quatd& p) { return qpow(p, m); },
                                               SpaceTag::bergman_slice_ball, alt);
            slice_dep = std::max(slice_dep, abs(a - b));
        }
    }
    out.push_back(make_check("bergman-ball/gram-slice-independence", slice_dep, 1e-10));

    double lap = 0.0, reg = 0.0, anti = 0.0;
    for (int t = 0; t < 6; ++t) {
        Quatd q = rng.ball_point(0.55), r = rng.ball_point(0.55);
        Quatd fd = laplacian_fd(
            [&](const Quatd& s) { return bergman_ball(s, r, N, KernelForm::closed).value; }, q);
        lap = std::max(lap,
                       abs(fd - bergman_fueter_ball(q, r, N, KernelForm::closed).value));
        reg = std::max(reg, abs(dirac_fd(
                                [&](const Quatd& s) {
                                    return bergman_fueter_ball(s, r, N, KernelForm::closed).value;
                                },
                                q)));
        SlicePoint sp = slice_decompose(r);
        ImaginaryUnit I = sp.unit ? *sp.unit : unit_i();
        anti = std::max(anti, abs(slice_antiregular_residual(
                                  [&](const Quatd& s) {
                                      return bergman_ball(q, s, N, KernelForm::closed).value;
                                  },
                                  r, I)));
    }
    out.push_back(make_check("bergman-ball/bf-is-laplacian-fd", lap, 1e-4));
    out.push_back(make_check("bergman-ball/bf-fueter-regularity-fd", reg, 1e-4));
    out.push_back(make_check("bergman-ball/antiregular-in-r-fd", anti, std::max(opt.tol, 1e-6)));

    Quatd r0 = rng.ball_point(0.6);
    Quatd want0 = conj(r0) * conj(r0) * -12.0;
    out.push_back(make_check(
        "bergman-ball/bf-at-origin",
        abs(bergman_fueter_ball(Quatd{}, r0, N, KernelForm::closed).value - want0), 1e-12));
    return out;
}

std::vector<Check> verify_bergman_halfspace(const VerifyOptions& opt) {
    std::vector<Check> out;
    RandomPoints rng(opt.seed);

    double ax = 0.0;
    for (int t = 0; t < 5; ++t) {
        double x = rng.range(0.3, 1.5), y = rng.range(0.3, 1.5);
        double want = 1.0 / (M_PI * (x + y) * (x + y));
        ax = std::max(ax, abs(bergman_halfspace(Quatd{x}, Quatd{y}) - Quatd{want}));
    }
    out.push_back(make_check("bergman-halfspace/real-axis-form", ax, std::max(opt.tol, 1e-12)));

    double herm = 0.0, cx = 0.0;
    for (int t = 0; t < 6; ++t) {
        Quatd q = rng.halfspace_point(), r = rng.halfspace_point();
        herm = std::max(herm, abs(bergman_halfspace(q, r) - conj(bergman_halfspace(r, q))));
        std::complex<double> z(rng.range(0.4, 1.6), rng.range(-0.8, 0.8));
        std::complex<double> w(rng.range(0.4, 1.6), rng.range(-0.8, 0.8));
        std::complex<double> s = z + std::conj(w);
        std::complex<double> want = 1.0 / (M_PI * s * s);
        ImaginaryUnit I = unit_i();
        cx = std::max(cx, abs(bergman_halfspace(embed_complex(z, I), embed_complex(w, I)) -
                              embed_complex(want, I)));
    }
    out.push_back(make_check("bergman-halfspace/hermitian-symmetry", herm,
                             std::max(opt.tol, 1e-12)));
    out.push_back(make_check("bergman-halfspace/slice-complex-form", cx,
                             std::max(opt.tol, 1e-12)));

    double lap = 0.0, reg = 0.0, anti = 0.0, bfax = 0.0;
    for (int t = 0; t < 6; ++t) {
        Quatd q = rng.halfspace_point(), r = rng.halfspace_point();
        Quatd fd = laplacian_fd([&](const Quatd& s) { return bergman_halfspace(s, r); }, q);
        lap = std::max(lap, abs(fd - bergman_fueter_halfspace(q, r)));
        reg = std::max(reg,
                       abs(dirac_fd([&](const Quatd& s) { return bergman_fueter_halfspace(s, r); },
                                    q)));
        SlicePoint sp = slice_decompose(r);
        ImaginaryUnit I = sp.unit ? *sp.unit : unit_i();
        anti = std::max(anti, abs(slice_antiregular_residual(
                                  [&](const Quatd& s) { return bergman_halfspace(q, s); }, r, I)));
    }
    for (int t = 0; t < 4; ++t) {
        double x = rng.range(0.4, 1.4), y = rng.range(0.4, 1.4);
        double want = -12.0 / (M_PI * std::pow(x + y, 4));
        bfax = std::max(bfax, abs(bergman_fueter_halfspace(Quatd{x}, Quatd{y}) - Quatd{want}));
    }
    out.push_back(make_check("bergman-halfspace/bf-is-laplacian-fd", lap, 1e-4));
    out.push_back(make_check("bergman-halfspace/bf-fueter-regularity-fd", reg, 1e-4));
    out.push_back(make_check("bergman-halfspace/antiregular-in-r-fd", anti,
                             std::max(opt.tol, 1e-6)));
    out.push_back(make_check("bergman-halfspace/bf-real-axis-form", bfax,
                             std::max(opt.tol, 1e-12)));
    return out;
}

std::vector<Check> verify_bergman_halfball(const VerifyOptions& opt) {
    std::vector<Check> out;
    const int N = opt.truncation;
    RandomPoints rng(opt.seed);
    auto halfball_point = [&rng]() {
        for (;;) {
            Quatd q = rng.ball_point(0.85);
            if (q.w > 0.05) return q;
        }
    };

    double ext = 0.0, herm = 0.0;
    for (int t = 0; t < 6; ++t) {
        Quatd q = halfball_point(), r = halfball_point();
        ext = std::max(ext, abs(bergman_halfball(q, r, N) - bergman_halfball_ext(q, r)));
        herm = std::max(herm, abs(bergman_halfball(q, r, N) - conj(bergman_halfball(r, q, N))));
    }
    out.push_back(make_check("bergman-halfball/additivity-vs-extension-route", ext, 1e-10));
    out.push_back(make_check("bergman-halfball/hermitian-symmetry", herm,
                             std::max(opt.tol, 1e-10)));

    {
        Quatd half{0.5};
        Quatd want{16.0 / 9.0 + 1.0 / M_PI};
        out.push_back(make_check("bergman-halfball/value-at-half",
                                 abs(bergman_halfball(half, half, N) - want), 1e-12));
    }

    double cx = 0.0;
    for (int t = 0; t < 5; ++t) {
        std::complex<double> z(rng.range(0.1, 0.7), rng.range(-0.5, 0.5));
        std::complex<double> w(rng.range(0.1, 0.7), rng.range(-0.5, 0.5));
        std::complex<double> a = 1.0 - z * std::conj(w);
        std::complex<double> b = z + std::conj(w);
        std::complex<double> want = 1.0 / (a * a) + 1.0 / (M_PI * b * b);
        ImaginaryUnit I = unit_i();
        cx = std::max(cx, abs(bergman_halfball(embed_complex(z, I), embed_complex(w, I), N) -
                              embed_complex(want, I)));
    }
    out.push_back(make_check("bergman-halfball/slice-complex-form", cx, std::max(opt.tol, 1e-10)));

    bool bf_sum = true;
    double lap = 0.0;
    for (int t = 0; t < 6; ++t) {
        Quatd q = halfball_point() * 0.8, r = halfball_point();
        Quatd parts = bergman_fueter_ball(q, r, N, KernelForm::closed).value +
                      bergman_fueter_halfspace(q, r);
        if (!(abs(bergman_fueter_halfball(q, r, N) - parts) == 0.0)) bf_sum = false;
        if (q.w > 0.1) {
            Quatd fd = laplacian_fd([&](const Quatd& s) { return bergman_halfball(s, r, N); }, q);
            lap = std::max(lap, abs(fd - bergman_fueter_halfball(q, r, N)));
        }
    }
    out.push_back(make_flag("bergman-halfball/bf-additivity-exact", bf_sum));
    out.push_back(make_check("bergman-halfball/bf-is-laplacian-fd", lap, 1e-4));
    return out;
}

std::vector<Check> verify_wedge(const VerifyOptions& opt) {
    std::vector<Check> out;
    RandomPoints rng(opt.seed);

    double red = 0.0;
    for (int t = 0; t < 8; ++t) {
        Quatd q = rng.halfspace_point(), r = rng.halfspace_point();
        red = std::max(red, abs(bergman_wedge(q, r, 1) + bergman_halfspace(q, r) * M_PI));
    }
    out.push_back(make_check("wedge/n1-is-minus-pi-halfspace", red, 1e-12));

    double sr = 0.0, ext = 0.0, confm = 0.0;
    for (int n = 1; n <= 3; ++n) {
        for (int t = 0; t < 4; ++t) {
            double thz = M_PI / 2.0 - M_PI / n + rng.range(0.25, 0.75) * (M_PI / n);
            double thw = M_PI / 2.0 - M_PI / n + rng.range(0.25, 0.75) * (M_PI / n);
            double rz = rng.range(0.6, 1.1), rw = rng.range(0.6, 1.1);
            std::complex<double> z = std::polar(rz, thz), w = std::polar(rw, thw);
            ImaginaryUnit I = rng.random_unit();
            Quatd zq = embed_complex(z, I), wq = embed_complex(w, I);
            std::complex<double> kc = wedge_kernel_complex(z, w, n);
            sr = std::max(sr, abs(bergman_wedge(zq, wq, n) - embed_complex(kc, I)));

            Quatd qg = wedge_point(n, rng.range(0.25, 0.75), rng.range(0.6, 1.1),
                                   rng.random_unit());
            Quatd rg = wedge_point(n, rng.range(0.25, 0.75), rng.range(0.6, 1.1),
                                   rng.random_unit());
            Quatd direct = bergman_wedge(qg, rg, n);
            // Relative: the kernel magnitude varies over the sampled sector.
            ext = std::max(ext, abs(direct - bergman_wedge_ext(qg, rg, n)) /
                                    (1.0 + abs(direct)));
        }
    }
    for (int n = 1; n <= 4; ++n) {
        for (int t = 0; t < 4; ++t) {
            double thz = M_PI / 2.0 - M_PI / n + rng.range(0.25, 0.75) * (M_PI / n);
            double thw = M_PI / 2.0 - M_PI / n + rng.range(0.25, 0.75) * (M_PI / n);
            std::complex<double> z = std::polar(rng.range(0.6, 1.1), thz);
            std::complex<double> w = std::polar(rng.range(0.6, 1.1), thw);
            confm = std::max(confm, std::abs(wedge_kernel_complex(z, w, n) +
                                             M_PI * wedge_conformal_kernel(z, w, n)));
        }
    }
    out.push_back(make_check("wedge/slice-restriction", sr, 1e-12));
    out.push_back(make_check("wedge/extension-route", ext, 1e-12));
    out.push_back(make_check("wedge/minus-pi-times-lebesgue-kernel", confm,
                             std::max(opt.tol, 1e-10)));

    bool pred = wedge_contains(Quatd{1.0}, 1) && !wedge_contains(Quatd{-1.0}, 1) &&
                wedge_contains(Quatd{0.1, 0.9, 0.0, 0.0}, 2) &&
                !wedge_contains(Quatd{0.9, 0.0, 0.0, 0.0}, 2) &&
                !wedge_contains(Quatd{0.9, 0.1, 0.0, 0.0}, 3) &&
                wedge_contains(Quatd{0.5, 0.0, 0.5, 0.0}, 3) &&
                !wedge_contains(Quatd{0.5, 0.0, 0.0, 0.4}, 4) &&
                wedge_contains(Quatd{0.3, 0.0, 0.0, 0.8}, 4);
    out.push_back(make_flag("wedge/contains-predicate", pred));
    return out;
}

std::vector<Check> verify_generating_function(const VerifyOptions& opt) {
    std::vector<Check> out;
    const int N = opt.truncation;
    RandomPoints rng(opt.seed);

    double sc = 0.0;
    for (int t = 0; t < 50; ++t) {
        Quatd q = rng.ball_point(0.6), r = rng.ball_point(0.6);
        Quatd series = bergman_generating_series(q, r, N);
        Quatd R = bergman_R(q, r);
        Quatd K = bergman_ball(q, r, N, KernelForm::closed).value;
        Quatd closed = R * R * 2.0 + K * R * 4.0;
        sc = std::max(sc, abs(series - closed));
    }
    out.push_back(make_check("generating-function/series-vs-closed", sc,
                             std::max(opt.tol, 1e-9)));

    double ax = 0.0;
    for (double x = -0.5; x <= 0.5 + 1e-12; x += 0.1) {
        double yr = 0.3;
        Quatd series = bergman_generating_series(Quatd{x}, Quatd{yr}, N) * (1.0 / 6.0);
        double want = std::pow(1.0 - x * yr, -4.0);
        ax = std::max(ax, abs(series - Quatd{want}));
    }
    out.push_back(make_check("generating-function/real-axis-sixth", ax, 1e-10));

    double conv = 0.0;
    for (int t = 0; t < 5; ++t) {
        Quatd q = rng.ball_point(0.6), r = rng.ball_point(0.6);
        conv = std::max(conv, abs(bergman_generating_series(q, r, N) -
                                  bergman_generating_series(q, r, 2 * N)));
    }
    out.push_back(make_check("generating-function/truncation-converged", conv, opt.tol));
    return out;
}

std::vector<Check> verify_rkhs(const VerifyOptions& opt) {
    std::vector<Check> out;
    const int N = opt.truncation;
    RandomPoints rng(opt.seed);

    double herm = 0.0;
    for (int t = 0; t < 6; ++t) {
        Quatd p = rng.ball_point(), q = rng.ball_point();
        herm = std::max(herm, abs(rkhs_G(p, q, N).value - conj(rkhs_G(q, p, N).value)));
    }
    out.push_back(make_check("rkhs/G-hermitian-symmetry", herm, std::max(opt.tol, 1e-12)));

    double g0 = 0.0, l0 = 0.0;
    for (int t = 0; t < 4; ++t) {
        Quatd q = rng.ball_point();
        g0 = std::max(g0, abs(rkhs_G(Quatd{}, q, N).value - Quatd{2.0}));
        Quatd r = rng.ball_point(0.6);
        l0 = std::max(l0, abs(rkhs_L(Quatd{}, r, N).value - Quatd{12.0}));
    }
    out.push_back(make_check("rkhs/G-at-origin-is-2", g0, 1e-12));
    out.push_back(make_check("rkhs/L-at-origin-is-12", l0, 1e-12));

    double grep = 0.0, lrep = 0.0;
    for (int t = 0; t < 4; ++t) {
        RegularSeries f;
        f.coeffs = random_coeffs(rng, 9);
        int deg = int(f.coeffs.size()) - 1;
        Quatd q = rng.ball_point();
        std::vector<Quatd> Qq = appell_eval_all(q, deg);
        std::vector<Quatd> gq(deg + 1);
        for (int k = 0; k <= deg; ++k) {
            double t2 = appell_T_normalizer(k);
            gq[k] = conj(Qq[k]) * (t2 * t2);
        }
        Quatd ip = coefficient_inner_product(f.coeffs, gq, SpaceTag::A_H);
        grep = std::max(grep, abs(ip - regular_eval(f, q)));

        Quatd r = rng.ball_point(0.6);
        std::vector<Quatd> Qrb = appell_eval_all(conj(r), deg);
        std::vector<Quatd> lr(deg + 1);
        for (int k = 0; k <= deg; ++k) {
            double c = double(k + 1) * double(k + 1) * double(k + 2) * double(k + 2) *
                       double(k + 3);
            lr[k] = Qrb[k] * c;
        }
        Quatd ipl = coefficient_inner_product(f.coeffs, lr, SpaceTag::B_B);
        lrep = std::max(lrep, abs(ipl - regular_eval(f, r)));
    }
    out.push_back(make_check("rkhs/G-reproduces-A-H", grep, 1e-12));
    out.push_back(make_check("rkhs/L-reproduces-B-B", lrep, 1e-12));

    double tail = 0.0;
    for (int t = 0; t < 4; ++t) {
        Quatd p = rng.ball_point(), q = rng.ball_point();
        TailedValue lo = rkhs_G(p, q, 10);
        TailedValue hi = rkhs_G(p, q, 60);
        tail = std::max(tail, abs(lo.value - hi.value) - lo.tail);
    }
    out.push_back(make_check("rkhs/G-tail-honest", std::max(0.0, tail), 1e-15));
    return out;
}

const std::vector<std::string>& verify_suite_names() {
    static const std::vector<std::string> names = {
        "appell",           "fueter-map",       "fock-kernel", "transforms",
        "integral-reps",    "bergman-ball",     "bergman-halfspace",
        "bergman-halfball", "wedge",            "generating-function",
        "rkhs"};
    return names;
}

std::vector<Check> run_suite(const std::string& name, const VerifyOptions& opt) {
    using SuiteFn = std::vector<Check> (*)(const VerifyOptions&);
    static const std::map<std::string, SuiteFn> table = {
        {"appell", verify_appell},
        {"fueter-map", verify_fueter_map},
        {"fock-kernel", verify_fock_kernel},
        {"transforms", verify_transforms},
        {"integral-reps", verify_integral_reps},
        {"bergman-ball", verify_bergman_ball},
        {"bergman-halfspace", verify_bergman_halfspace},
        {"bergman-halfball", verify_bergman_halfball},
        {"wedge", verify_wedge},
        {"generating-function", verify_generating_function},
        {"rkhs", verify_rkhs}};
    auto it = table.find(name);
    if (it == table.end()) throw std::invalid_argument("unknown suite: " + name);
    return it->second(opt);
}

}  // namespace fueter
