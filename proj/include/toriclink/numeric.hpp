#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

#include "toriclink/error.hpp"

namespace toriclink {

// Exact arithmetic only. Unbounded integers and rationals; no floating
// point anywhere in the engine.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

inline Int int_gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

inline Int vec_gcd(const IntVec& v) {
    Int g = 0;
    for (const Int& x : v) g = int_gcd(g, x);
    return g;
}

inline bool is_zero_vec(const IntVec& v) {
    for (const Int& x : v)
        if (x != 0) return false;
    return true;
}

// Divides out the gcd; the zero vector is returned unchanged.
inline IntVec primitive(IntVec v) {
    Int g = vec_gcd(v);
    if (g > 1)
        for (Int& x : v) x /= g;
    return v;
}

inline Int dot(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw internal_error("dot: length mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline IntVec add(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw internal_error("add: length mismatch");
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline IntVec negate(IntVec v) {
    for (Int& x : v) x = -x;
    return v;
}

inline long long binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (long long i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

}  // namespace toriclink
