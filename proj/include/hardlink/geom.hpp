#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace hardlink {

using i64 = long long;
using i128 = __int128;

// All planar constructions use integer coordinates bounded by kCoordLimit so
// that every predicate below fits in 128-bit intermediates, including
// comparisons of exact rational intersection points.
constexpr i64 kCoordLimit = 1ll << 21;

struct Pt {
    i64 x = 0, y = 0;

    friend Pt operator+(Pt a, Pt b) { return {a.x + b.x, a.y + b.y}; }
    friend Pt operator-(Pt a, Pt b) { return {a.x - b.x, a.y - b.y}; }
    friend Pt operator*(i64 k, Pt a) { return {k * a.x, k * a.y}; }
    friend bool operator==(Pt a, Pt b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(Pt a, Pt b) { return !(a == b); }
};

struct PtD {
    double x = 0, y = 0;
};

inline PtD to_double(Pt p) { return {double(p.x), double(p.y)}; }

inline int sgn(i128 v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

inline i128 cross(Pt a, Pt b) { return i128(a.x) * b.y - i128(a.y) * b.x; }
inline i128 dot(Pt a, Pt b) { return i128(a.x) * b.x + i128(a.y) * b.y; }

// Sign of the turn a -> b -> c: +1 left, -1 right, 0 collinear.
inline int orient(Pt a, Pt b, Pt c) { return sgn(cross(b - a, c - a)); }

// p lies on segment [a,b], endpoints included.
inline bool on_segment(Pt a, Pt b, Pt p) {
    if (orient(a, b, p) != 0) return false;
    return dot(p - a, b - p) >= 0;
}

// Open-interior transversal intersection of [a,b] and [c,d].
inline bool properly_intersect(Pt a, Pt b, Pt c, Pt d) {
    int o1 = orient(a, b, c), o2 = orient(a, b, d);
    int o3 = orient(c, d, a), o4 = orient(c, d, b);
    return o1 * o2 < 0 && o3 * o4 < 0;
}

inline i128 abs128(i128 v) { return v < 0 ? -v : v; }

inline i128 gcd128(i128 a, i128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Exact parameter of an intersection along a segment, in [0,1]; den > 0.
struct Frac {
    i128 num = 0, den = 1;

    friend bool operator<(const Frac& a, const Frac& b) { return a.num * b.den < b.num * a.den; }
    friend bool operator==(const Frac& a, const Frac& b) { return a.num * b.den == b.num * a.den; }
};

// Exact rational point with positive denominator, reduced.
struct QPt {
    i128 xn = 0, yn = 0, d = 1;

    void reduce() {
        i128 g = gcd128(gcd128(xn, yn), d);
        if (g > 1) {
            xn /= g;
            yn /= g;
            d /= g;
        }
        if (d < 0) {
            xn = -xn;
            yn = -yn;
            d = -d;
        }
    }

    friend bool operator==(const QPt& a, const QPt& b) {
        return a.xn == b.xn && a.yn == b.yn && a.d == b.d;
    }

    PtD to_double() const { return {double(xn) / double(d), double(yn) / double(d)}; }
};

struct QPtHash {
    size_t operator()(const QPt& p) const {
        auto mix = [](uint64_t v) {
            v ^= v >> 33;
            v *= 0xff51afd7ed558ccdULL;
            v ^= v >> 33;
            return v;
        };
        uint64_t h = mix(uint64_t(p.xn) ^ mix(uint64_t(p.xn >> 64)));
        h ^= mix(uint64_t(p.yn) ^ mix(uint64_t(p.yn >> 64))) * 3;
        h ^= mix(uint64_t(p.d) ^ mix(uint64_t(p.d >> 64))) * 7;
        return size_t(h);
    }
};

// Intersection of [a,b] and [c,d] assumed non-parallel: parameter along [a,b]
// and the exact point.
inline Frac intersection_param(Pt a, Pt b, Pt c, Pt d) {
    i128 den = cross(b - a, d - c);
    i128 num = cross(c - a, d - c);
    if (den < 0) {
        den = -den;
        num = -num;
    }
    return {num, den};
}

inline QPt intersection_point(Pt a, Pt b, Pt c, Pt d) {
    Frac t = intersection_param(a, b, c, d);
    QPt q;
    q.xn = i128(a.x) * t.den + t.num * (b.x - a.x);
    q.yn = i128(a.y) * t.den + t.num * (b.y - a.y);
    q.d = t.den;
    q.reduce();
    return q;
}

inline void check_coord(Pt p) {
    if (std::abs(p.x) >= kCoordLimit || std::abs(p.y) >= kCoordLimit)
        throw std::invalid_argument("coordinate exceeds exact-arithmetic limit");
}

}  // namespace hardlink
