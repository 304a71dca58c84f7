// Right-coefficient series: slice power series sum q^k c_k and regular
// series sum Q_k(q) a_k over the Appell basis, plus their CSV form.
#pragma once

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "fueter/qqbar.hpp"
#include "fueter/quaternion.hpp"

namespace fueter {

// f(q) = sum_k q^k c_k.
struct SliceSeries {
    std::vector<Quatd> coeffs;
};

// g(q) = sum_k Q_k(q) a_k.
struct RegularSeries {
    std::vector<Quatd> coeffs;
};

// Right-coefficient Horner evaluation of sum q^k c_k.
inline Quatd slice_eval(const SliceSeries& f, const Quatd& q) {
    Quatd acc{};
    for (size_t k = f.coeffs.size(); k-- > 0;) acc = q * acc + f.coeffs[k];
    return acc;
}

// Shortest round-trip decimal for reproducible CSV output.
inline std::string format_double(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

inline std::string format_quat(const Quatd& q) {
    return format_double(q.w) + "," + format_double(q.x) + "," +
           format_double(q.y) + "," + format_double(q.z);
}

inline void write_series_csv(std::ostream& os, const std::vector<Quatd>& coeffs) {
    os << "k,w,x,y,z\n";
    for (size_t k = 0; k < coeffs.size(); ++k)
        os << k << "," << format_quat(coeffs[k]) << "\n";
}

inline double parse_double_field(const std::string& s) {
    double v = 0.0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
        throw std::runtime_error("bad numeric field in CSV: '" + s + "'");
    return v;
}

inline std::vector<std::string> split_csv_row(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    std::istringstream in(line);
    while (std::getline(in, cur, ',')) fields.push_back(cur);
    return fields;
}

// Reads rows `k,w,x,y,z`; rows may arrive in any order, gaps are zero.
inline std::vector<Quatd> read_series_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw std::runtime_error("empty CSV: missing header");
    std::vector<Quatd> coeffs;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        auto f = split_csv_row(line);
        if (f.size() != 5) throw std::runtime_error("expected 5 fields per series row");
        int k = static_cast<int>(parse_double_field(f[0]));
        if (k < 0) throw std::runtime_error("negative index in series CSV");
        if (coeffs.size() <= static_cast<size_t>(k)) coeffs.resize(k + 1);
        coeffs[k] = Quatd{parse_double_field(f[1]), parse_double_field(f[2]),
                          parse_double_field(f[3]), parse_double_field(f[4])};
    }
    return coeffs;
}

inline void write_qqbar_csv(std::ostream& os, const QQbarPoly<double>& p) {
    os << "a,b,coeff\n";
    for (const auto& [key, c] : p.terms)
        os << key.first << "," << key.second << "," << format_double(c) << "\n";
}

inline QQbarPoly<double> read_qqbar_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw std::runtime_error("empty CSV: missing header");
    QQbarPoly<double> p;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        auto f = split_csv_row(line);
        if (f.size() != 3) throw std::runtime_error("expected 3 fields per poly row");
        p.add_term(static_cast<int>(parse_double_field(f[0])),
                   static_cast<int>(parse_double_field(f[1])), parse_double_field(f[2]));
    }
    return p;
}

}  // namespace fueter
