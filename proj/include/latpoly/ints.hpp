#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace latpoly {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// A lattice point / dual vector. Comparison is lexicographic (std::vector's).
using IntVector = std::vector<Int>;

struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Int ceil_div(const Int& a, const Int& b) { return -floor_div(-a, b); }

inline Int dot(const IntVector& a, const IntVector& b) {
    if (a.size() != b.size()) throw PreconditionError("dot: dimension mismatch");
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline IntVector add(const IntVector& a, const IntVector& b) {
    if (a.size() != b.size()) throw PreconditionError("add: dimension mismatch");
    IntVector r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline IntVector sub(const IntVector& a, const IntVector& b) {
    if (a.size() != b.size()) throw PreconditionError("sub: dimension mismatch");
    IntVector r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline IntVector scale(const Int& k, const IntVector& v) {
    IntVector r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = k * v[i];
    return r;
}

inline IntVector negate(const IntVector& v) { return scale(-1, v); }

inline bool is_zero(const IntVector& v) {
    for (const auto& x : v) if (x != 0) return false;
    return true;
}

inline IntVector zero_vector(int n) { return IntVector(static_cast<size_t>(n), Int(0)); }

inline IntVector unit_vector(int n, int i) {
    IntVector e = zero_vector(n);
    e[static_cast<size_t>(i)] = 1;
    return e;
}

inline Int gcd_all(const IntVector& v) {
    Int g = 0;
    for (const auto& x : v) g = boost::multiprecision::gcd(g, x);
    return g;
}

}  // namespace latpoly
