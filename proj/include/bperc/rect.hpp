#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace bperc {

/// Update rule selector: standard (>=2 infected lattice neighbours) or
/// modified (an infected neighbour on each axis).
enum class ModelKind { standard, modified };

inline const char* to_string(ModelKind m) {
    return m == ModelKind::standard ? "standard" : "modified";
}

inline ModelKind model_from_string(const std::string& s) {
    if (s == "standard") return ModelKind::standard;
    if (s == "modified") return ModelKind::modified;
    throw std::invalid_argument("unknown model: " + s);
}

/// Axis-aligned integer rectangle (a,b;c,d): sites (x,y) with a<=x<=c, b<=y<=d.
/// Coordinates are 1-based so that R(L) = {1,...,L}^2.
struct Rect {
    std::int32_t a, b, c, d;

    Rect(std::int32_t a_, std::int32_t b_, std::int32_t c_, std::int32_t d_)
        : a(a_), b(b_), c(c_), d(d_) {
        if (a > c || b > d) throw std::invalid_argument("degenerate rectangle");
    }

    /// R(m,n) = (1,1;m,n)
    static Rect box(std::int32_t m, std::int32_t n) { return Rect(1, 1, m, n); }
    /// R(n) = {1,...,n}^2
    static Rect square(std::int32_t n) { return Rect(1, 1, n, n); }

    std::int32_t width() const { return c - a + 1; }
    std::int32_t height() const { return d - b + 1; }
    std::int64_t area() const { return std::int64_t(width()) * height(); }

    bool contains(std::int32_t x, std::int32_t y) const {
        return a <= x && x <= c && b <= y && y <= d;
    }
    bool contains(const Rect& r) const {
        return a <= r.a && r.c <= c && b <= r.b && r.d <= d;
    }

    bool operator==(const Rect& o) const = default;
};

inline std::int32_t long_side(const Rect& r) {
    return std::max(r.width(), r.height());
}

}  // namespace bperc
