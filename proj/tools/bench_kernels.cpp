// Timing comparison between the OpenMP paths and their serial references.

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include "fueter/kernels.hpp"
#include "fueter/quadrature.hpp"

using namespace fueter;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Rejection-sampled into the open ball so the Bergman kernels stay in domain.
std::vector<Quatd> random_points(std::size_t n, double radius, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-radius, radius);
    std::vector<Quatd> pts;
    pts.reserve(n);
    while (pts.size() < n) {
        Quatd p{u(rng), u(rng), u(rng), u(rng)};
        if (abs(p) < radius) pts.push_back(p);
    }
    return pts;
}

void bench_integrate(int order, int reps) {
    QuadratureRule rule = slice_gauss(unit_i(), order);
    Integrand f = [](const Quatd& p) {
        return fock_fueter_kernel(p + Quatd{0.1}, Quatd{0.2, 0.3, 0.0, 0.1}, 120).value;
    };

    Quatd a{}, b{};
    auto t0 = Clock::now();
    for (int i = 0; i < reps; ++i) a += integrate_serial(rule, f);
    double serial = seconds_since(t0);
    t0 = Clock::now();
    for (int i = 0; i < reps; ++i) b += integrate(rule, f);
    double parallel = seconds_since(t0);

    std::printf("integrate   order=%d reps=%d nodes=%zu\n", order, reps, rule.size());
    std::printf("  serial   %8.3f ms/call\n", 1e3 * serial / reps);
    std::printf("  openmp   %8.3f ms/call  (speedup %.2fx)\n", 1e3 * parallel / reps,
                serial / parallel);
    std::printf("  agreement %s\n", abs(a - b) == 0.0 ? "bitwise" : "DIFFERS");
}

void bench_batch(KernelName name, const char* label, std::size_t count) {
    KernelSpec spec;
    spec.name = name;
    spec.truncation = 200;
    std::vector<Quatd> qs = random_points(count, 0.9, 7);
    std::vector<Quatd> ps = random_points(count, 0.9, 11);

    auto t0 = Clock::now();
    std::vector<Quatd> serial_vals = kernel_eval_batch_serial(spec, qs, ps);
    double serial = seconds_since(t0);
    t0 = Clock::now();
    std::vector<Quatd> parallel_vals = kernel_eval_batch(spec, qs, ps);
    double parallel = seconds_since(t0);

    double diff = 0.0;
    for (std::size_t i = 0; i < count; ++i)
        diff = std::max(diff, abs(serial_vals[i] - parallel_vals[i]));

    std::printf("batch %-22s n=%zu\n", label, count);
    std::printf("  serial   %8.3f ms\n", 1e3 * serial);
    std::printf("  openmp   %8.3f ms  (speedup %.2fx)\n", 1e3 * parallel, serial / parallel);
    std::printf("  agreement %s\n", diff == 0.0 ? "bitwise" : "DIFFERS");
}

}  // namespace

int main() {
    bench_integrate(60, 20);
    bench_integrate(120, 5);
    bench_batch(KernelName::fock_fueter, "fock_fueter", 2000);
    bench_batch(KernelName::bergman_ball, "bergman_ball", 2000);
    bench_batch(KernelName::bergman_fueter_ball, "bergman_fueter_ball", 2000);
    bench_batch(KernelName::rkhs_G, "rkhs_G", 1000);
    return 0;
}
