// Named verification suites, one per theorem cluster: each check compares a
// computed quantity against the identity it must satisfy and records the
// measured deviation next to its tolerance.  Exact rational checks carry a
// zero tolerance.
#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "fueter/quaternion.hpp"

namespace fueter {

struct VerifyOptions {
    int truncation = 300;
    int quad_order = 80;
    double tol = 1e-8;
    std::uint64_t seed = 1;
    int max_degree = 30;
};

struct Check {
    std::string name;
    bool pass = false;
    double measured = 0.0;
    double tol = 0.0;
    std::string detail;
};

Check make_check(std::string name, double measured, double tol, std::string detail = {});
Check make_flag(std::string name, bool ok, std::string detail = {});

// Seeded point generator shared by suites and tests: quaternion components
// uniform in [-0.6, 0.6], +1 real shift for half-space points, rejection
// sampling for a radius cap.
class RandomPoints {
  public:
    explicit RandomPoints(std::uint64_t seed) : rng_(seed) {}

    double uniform() { return double(rng_() >> 11) * 0x1.0p-53; }
    double range(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    Quatd ball_point() {
        return {range(-0.6, 0.6), range(-0.6, 0.6), range(-0.6, 0.6), range(-0.6, 0.6)};
    }

    Quatd ball_point(double radius_cap) {
        for (;;) {
            Quatd q = ball_point();
            if (abs(q) <= radius_cap) return q;
        }
    }

    Quatd halfspace_point() { return ball_point() + Quatd{1.0}; }

    // Imaginary unit in a uniformly random direction.
    ImaginaryUnit random_unit() {
        for (;;) {
            Quatd v{0.0, range(-1.0, 1.0), range(-1.0, 1.0), range(-1.0, 1.0)};
            double n = std::sqrt(norm_sq(v));
            if (n > 0.1 && n <= 1.0) return ImaginaryUnit{v};
        }
    }

  private:
    std::mt19937_64 rng_;
};

std::vector<Check> verify_appell(const VerifyOptions& opt);
std::vector<Check> verify_fueter_map(const VerifyOptions& opt);
std::vector<Check> verify_fock_kernel(const VerifyOptions& opt);
std::vector<Check> verify_transforms(const VerifyOptions& opt);
std::vector<Check> verify_integral_reps(const VerifyOptions& opt);
std::vector<Check> verify_bergman_ball(const VerifyOptions& opt);
std::vector<Check> verify_bergman_halfspace(const VerifyOptions& opt);
std::vector<Check> verify_bergman_halfball(const VerifyOptions& opt);
std::vector<Check> verify_wedge(const VerifyOptions& opt);
std::vector<Check> verify_generating_function(const VerifyOptions& opt);
std::vector<Check> verify_rkhs(const VerifyOptions& opt);

// Suite names in the fixed order `verify --suite all` runs them.
const std::vector<std::string>& verify_suite_names();

// Dispatch by suite name; throws std::invalid_argument for unknown names.
std::vector<Check> run_suite(const std::string& name, const VerifyOptions& opt);

}  // namespace fueter
