// Command line front end: verification suites, kernel evaluation, identity tables.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fueter/appell.hpp"
#include "fueter/hermite.hpp"
#include "fueter/kernels.hpp"
#include "fueter/quadrature.hpp"
#include "fueter/series.hpp"
#include "fueter/verify.hpp"

namespace {

using namespace fueter;

struct RunConfig {
    std::string suite = "all";
    int truncation = 300;
    int quad_order = 80;
    double tol = 1e-8;
    unsigned long long seed = 1;
    int max_degree = 30;
    std::string output;
};

void add_config_options(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--truncation", cfg.truncation, "series truncation order");
    cmd->add_option("--quad-order", cfg.quad_order, "quadrature order");
    cmd->add_option("--tol", cfg.tol, "default tolerance");
    cmd->add_option("--seed", cfg.seed, "random point seed");
    cmd->add_option("--max-degree", cfg.max_degree, "max polynomial degree");
    cmd->add_option("--output", cfg.output, "output file (default stdout)");
}

int check_config(const RunConfig& cfg) {
    if (!(cfg.tol > 0.0)) {
        std::cerr << "invalid config: tol must be positive\n";
        return 2;
    }
    if (cfg.truncation < cfg.max_degree + 2) {
        std::cerr << "invalid config: truncation must be at least max-degree + 2\n";
        return 2;
    }
    if (cfg.quad_order < 1) {
        std::cerr << "invalid config: quad-order must be at least 1\n";
        return 2;
    }
    return 0;
}

VerifyOptions to_options(const RunConfig& cfg) {
    VerifyOptions opt;
    opt.truncation = cfg.truncation;
    opt.quad_order = cfg.quad_order;
    opt.tol = cfg.tol;
    opt.seed = cfg.seed;
    opt.max_degree = cfg.max_degree;
    return opt;
}

class OutputSink {
  public:
    explicit OutputSink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw std::runtime_error("cannot open output file: " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

  private:
    std::ofstream file_;
};

std::optional<Quatd> parse_quat_literal(const std::string& text) {
    std::vector<std::string> parts = split_csv_row(text);
    if (parts.size() != 4) return std::nullopt;
    try {
        Quatd q;
        q.w = parse_double_field(parts[0]);
        q.x = parse_double_field(parts[1]);
        q.y = parse_double_field(parts[2]);
        q.z = parse_double_field(parts[3]);
        return q;
    } catch (const std::runtime_error&) {
        return std::nullopt;
    }
}

std::optional<std::vector<double>> parse_grid(const std::string& text) {
    std::string::size_type a = text.find(':');
    std::string::size_type b = text.find(':', a == std::string::npos ? a : a + 1);
    if (a == std::string::npos || b == std::string::npos) return std::nullopt;
    double lo, hi, step;
    try {
        lo = parse_double_field(text.substr(0, a));
        hi = parse_double_field(text.substr(a + 1, b - a - 1));
        step = parse_double_field(text.substr(b + 1));
    } catch (const std::runtime_error&) {
        return std::nullopt;
    }
    if (!(step > 0.0) || !std::isfinite(lo) || !std::isfinite(hi)) return std::nullopt;
    std::vector<double> grid;
    if (hi < lo) return grid;
    double span = (hi - lo) / step;
    if (span > 1e6) return std::nullopt;
    long count = std::lround(std::floor(span + 1e-9));
    grid.reserve(count + 1);
    for (long i = 0; i <= count; ++i) grid.push_back(lo + step * i);
    return grid;
}

int run_verify(const RunConfig& cfg) {
    std::vector<std::string> suites;
    if (cfg.suite == "all") {
        suites = verify_suite_names();
    } else {
        const auto& names = verify_suite_names();
        if (std::find(names.begin(), names.end(), cfg.suite) == names.end()) {
            std::cerr << "unknown suite: " << cfg.suite << "\n";
            return 2;
        }
        suites.push_back(cfg.suite);
    }

    VerifyOptions opt = to_options(cfg);
    int total = 0, passed = 0;
    std::string buf;
    for (const std::string& name : suites) {
        std::vector<Check> checks = run_suite(name, opt);
        buf += "suite " + name + "\n";
        for (const Check& c : checks) {
            buf += c.pass ? "PASS " : "FAIL ";
            buf += c.name;
            buf += " measured=" + format_double(c.measured);
            buf += " tol=" + format_double(c.tol);
            if (!c.detail.empty()) buf += " [" + c.detail + "]";
            buf += "\n";
            ++total;
            if (c.pass) ++passed;
        }
    }
    buf += "passed " + std::to_string(passed) + "/" + std::to_string(total) + " checks\n";

    OutputSink sink(cfg.output);
    sink.stream() << buf;
    return passed == total ? 0 : 1;
}

int run_eval(const RunConfig& cfg, const std::string& kernel, const std::string& q_text,
             const std::string& p_text, const std::string& form_text, int wedge_n) {
    static const std::map<std::string, KernelName> kernel_names = {
        {"fock", KernelName::fock},
        {"fock_fueter", KernelName::fock_fueter},
        {"bergman_ball", KernelName::bergman_ball},
        {"bergman_halfspace", KernelName::bergman_halfspace},
        {"bergman_halfball", KernelName::bergman_halfball},
        {"bergman_wedge", KernelName::bergman_wedge},
        {"bergman_fueter_ball", KernelName::bergman_fueter_ball},
        {"bergman_fueter_halfspace", KernelName::bergman_fueter_halfspace},
        {"bergman_fueter_halfball", KernelName::bergman_fueter_halfball},
        {"rkhs_G", KernelName::rkhs_G},
        {"rkhs_L", KernelName::rkhs_L}};
    auto it = kernel_names.find(kernel);
    if (it == kernel_names.end()) {
        std::cerr << "unknown kernel: " << kernel << "\n";
        return 2;
    }
    std::optional<Quatd> q = parse_quat_literal(q_text);
    std::optional<Quatd> p = parse_quat_literal(p_text);
    if (!q || !p) {
        std::cerr << "quaternion arguments must be w,x,y,z\n";
        return 2;
    }
    KernelForm form;
    if (form_text == "series")
        form = KernelForm::series;
    else if (form_text == "closed")
        form = KernelForm::closed;
    else {
        std::cerr << "unknown form: " << form_text << "\n";
        return 2;
    }
    if (wedge_n < 1) {
        std::cerr << "wedge-n must be at least 1\n";
        return 2;
    }

    KernelSpec spec;
    spec.name = it->second;
    spec.truncation = cfg.truncation;
    spec.form = form;
    spec.wedge_n = wedge_n;
    try {
        TailedValue v = kernel_eval(spec, *q, *p);
        OutputSink sink(cfg.output);
        sink.stream() << format_quat(v.value) << "\n"
                      << "truncation-error " << format_double(v.tail) << "\n";
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

int run_table(const RunConfig& cfg, const std::string& identity, const std::string& grid_text) {
    std::optional<std::vector<double>> grid = parse_grid(grid_text);
    if (!grid) {
        std::cerr << "bad grid, expected lo:hi:step with positive step\n";
        return 2;
    }

    OutputSink sink(cfg.output);
    std::ostream& os = sink.stream();
    const int N = cfg.truncation;

    if (identity == "qsum") {
        const double r = 0.3;
        os << "q,r,lhs,rhs,abs_error\n";
        for (double qv : *grid) {
            Quatd series = bergman_generating_series(Quatd{qv}, Quatd{r}, N) * (1.0 / 6.0);
            double lhs = series.w;
            double rhs = std::pow(1.0 - qv * r, -4.0);
            os << format_double(qv) << ',' << format_double(r) << ',' << format_double(lhs)
               << ',' << format_double(rhs) << ',' << format_double(abs(series - Quatd{rhs}))
               << "\n";
        }
        return 0;
    }

    if (identity == "phi-gram") {
        const double p = 0.3;
        os << "q,p,lhs,rhs,abs_error\n";
        if (!grid->empty()) {
            QuadratureRule gh = gauss_hermite(cfg.quad_order);
            std::vector<double> tn(N + 1);
            for (int k = 0; k <= N; ++k) tn[k] = appell_T_normalizer(k);
            std::vector<Quatd> Qp = appell_eval_all(Quatd{p}, N);
            for (double qv : *grid) {
                std::vector<Quatd> Qq = appell_eval_all(Quatd{qv}, N);
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
                os << format_double(qv) << ',' << format_double(p) << ','
                   << format_double(lhs.w) << ',' << format_double(rhs.w) << ','
                   << format_double(abs(lhs - rhs)) << "\n";
            }
        }
        return 0;
    }

    if (identity == "fock-moments") {
        os << "k,x,lhs,rhs,abs_error\n";
        if (!grid->empty()) {
            QuadratureRule slice = slice_gauss(unit_i(), cfg.quad_order);
            for (int k = 0; k <= 6; ++k) {
                for (double x : *grid) {
                    Quatd lhs = integrate(slice, [&](const Quatd& pt) {
                                    return qpow(pt, k) * norm_sq(pt) * norm_sq(pt) *
                                           slice_exp(conj(pt), 0.0, x, 0.0);
                                }) *
                                M_PI;
                    double rhs = M_PI * double(k + 1) * double(k + 2) * std::pow(x, k);
                    os << std::to_string(k) << ',' << format_double(x) << ','
                       << format_double(lhs.w) << ',' << format_double(rhs) << ','
                       << format_double(abs(lhs - Quatd{rhs})) << "\n";
                }
            }
        }
        return 0;
    }

    std::cerr << "unknown identity: " << identity << "\n";
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quaternionic Fueter calculus toolkit"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string kernel, q_text = "0,0,0,0", p_text = "0,0,0,0", form_text = "series";
    std::string identity, grid_text;
    int wedge_n = 1;

    CLI::App* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("--suite", cfg.suite, "suite name or all");
    add_config_options(verify, cfg);

    CLI::App* eval = app.add_subcommand("eval", "evaluate a kernel at a point pair");
    eval->add_option("--kernel", kernel, "kernel name")->required();
    eval->add_option("--q", q_text, "first argument as w,x,y,z");
    eval->add_option("--p", p_text, "second argument as w,x,y,z");
    eval->add_option("--form", form_text, "series or closed");
    eval->add_option("--wedge-n", wedge_n, "wedge opening parameter");
    add_config_options(eval, cfg);

    CLI::App* table = app.add_subcommand("table", "tabulate an identity over a grid");
    table->add_option("--identity", identity, "qsum, phi-gram or fock-moments")->required();
    table->add_option("--grid", grid_text, "grid as lo:hi:step")->required();
    add_config_options(table, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    int bad = check_config(cfg);
    if (bad != 0) return bad;

    try {
        if (verify->parsed()) return run_verify(cfg);
        if (eval->parsed()) return run_eval(cfg, kernel, q_text, p_text, form_text, wedge_n);
        if (table->parsed()) return run_table(cfg, identity, grid_text);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
