// Quaternion arithmetic over an arbitrary scalar (double or exact rational),
// slice decomposition q = x + I y, and the representation-formula extension
// of slice-holomorphic functions from one slice to all of H.
#pragma once

#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>

namespace fueter {

template <typename T = double>
struct Quat {
    T w{}, x{}, y{}, z{};

    constexpr Quat() = default;
    constexpr Quat(T w_, T x_ = T(0), T y_ = T(0), T z_ = T(0))
        : w(w_), x(x_), y(y_), z(z_) {}

    constexpr Quat operator+(const Quat& o) const { return {w + o.w, x + o.x, y + o.y, z + o.z}; }
    constexpr Quat operator-(const Quat& o) const { return {w - o.w, x - o.x, y - o.y, z - o.z}; }
    constexpr Quat operator-() const { return {-w, -x, -y, -z}; }

    // Hamilton product.
    constexpr Quat operator*(const Quat& o) const {
        return {w * o.w - x * o.x - y * o.y - z * o.z,
                w * o.x + x * o.w + y * o.z - z * o.y,
                w * o.y - x * o.z + y * o.w + z * o.x,
                w * o.z + x * o.y - y * o.x + z * o.w};
    }
    constexpr Quat operator*(const T& s) const { return {w * s, x * s, y * s, z * s}; }

    Quat& operator+=(const Quat& o) { return *this = *this + o; }
    Quat& operator-=(const Quat& o) { return *this = *this - o; }
    Quat& operator*=(const Quat& o) { return *this = *this * o; }

    constexpr bool operator==(const Quat& o) const {
        return w == o.w && x == o.x && y == o.y && z == o.z;
    }
};

template <typename T>
constexpr Quat<T> operator*(const T& s, const Quat<T>& q) { return q * s; }

template <typename T>
constexpr Quat<T> conj(const Quat<T>& q) { return {q.w, -q.x, -q.y, -q.z}; }

template <typename T>
constexpr T norm_sq(const Quat<T>& q) { return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z; }

template <typename T>
constexpr T re(const Quat<T>& q) { return q.w; }

inline double abs(const Quat<double>& q) { return std::sqrt(norm_sq(q)); }

template <typename T>
Quat<T> inverse(const Quat<T>& q) {
    T n = norm_sq(q);
    if (n == T(0)) throw std::domain_error("quaternion inverse of zero");
    return conj(q) * (T(1) / n);
}

template <typename T>
Quat<T> mul(const Quat<T>& a, const Quat<T>& b) { return a * b; }

template <typename T>
Quat<T> qpow(Quat<T> base, int n) {
    Quat<T> r{T(1)};
    for (; n > 0; n >>= 1, base *= base)
        if (n & 1) r *= base;
    return r;
}

using Quatd = Quat<double>;

// Purely imaginary quaternion of unit norm; an element of the sphere S.
struct ImaginaryUnit {
    Quatd direction;

    static constexpr double kNormTol = 1e-12;

    explicit ImaginaryUnit(const Quatd& v) {
        if (std::fabs(v.w) > kNormTol)
            throw std::domain_error("imaginary unit must have zero real part");
        double n = std::sqrt(v.x * v.x + v.y * v.y + v.z * v.z);
        if (std::fabs(n - 1.0) > kNormTol) {
            if (n == 0.0) throw std::domain_error("cannot normalize zero vector to a unit");
            direction = Quatd{0.0, v.x / n, v.y / n, v.z / n};
        } else {
            direction = Quatd{0.0, v.x, v.y, v.z};
        }
    }

    const Quatd& q() const { return direction; }
};

inline ImaginaryUnit unit_i() { return ImaginaryUnit{Quatd{0, 1, 0, 0}}; }
inline ImaginaryUnit unit_j() { return ImaginaryUnit{Quatd{0, 0, 1, 0}}; }
inline ImaginaryUnit unit_k() { return ImaginaryUnit{Quatd{0, 0, 0, 1}}; }

// A point z = re + im * unit of the slice C_I, with im >= 0.
struct SlicePoint {
    double re = 0.0;
    double im = 0.0;                     // >= 0
    std::optional<ImaginaryUnit> unit;   // empty iff the point is real

    Quatd embed() const {
        if (!unit) return Quatd{re};
        return Quatd{re} + unit->q() * im;
    }
};

// q = x + I y with y >= 0; unit is empty iff q is real.
inline SlicePoint slice_decompose(const Quatd& q) {
    SlicePoint s;
    s.re = q.w;
    double n = std::sqrt(q.x * q.x + q.y * q.y + q.z * q.z);
    s.im = n;
    if (n > 0.0)
        s.unit = ImaginaryUnit{Quatd{0.0, q.x / n, q.y / n, q.z / n}};
    return s;
}

// Representation formula: rebuild f at q from the two values f(x +/- yJ) on
// the slice C_J.  For real q this degenerates to a direct evaluation.
template <typename F>
Quatd slice_holomorphic_eval(F&& f, const Quatd& q, const ImaginaryUnit& J) {
    SlicePoint s = slice_decompose(q);
    if (!s.unit) return f(Quatd{s.re});
    Quatd zp = Quatd{s.re} + J.q() * s.im;
    Quatd zm = Quatd{s.re} - J.q() * s.im;
    Quatd fp = f(zp), fm = f(zm);
    Quatd iq = s.unit->q();
    return (fp + fm) * 0.5 + (iq * J.q()) * 0.5 * (fm - fp);
}

// e^{a q^2 + b q + c} for real a, b, c: an intrinsic slice-regular function,
// evaluated through the complex exponential on the slice of q.
inline Quatd slice_exp(const Quatd& q, double a, double b, double c) {
    SlicePoint s = slice_decompose(q);
    std::complex<double> zv(s.re, s.im);
    std::complex<double> val = std::exp(a * zv * zv + b * zv + c);
    if (!s.unit) return Quatd{val.real()};
    return Quatd{val.real()} + s.unit->q() * val.imag();
}

}  // namespace fueter
