#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "fcx/rational.hpp"

namespace fcx {

// A convex polygon with rational slopes, stored as its nondecreasing slope
// multiset. The graph is the piecewise linear function through (0,0) whose
// l-th segment has slope slopes[l-1]; vertices are derived on demand.
//
// This is the common value type for Newton points and sigma-invariant Hodge
// points of GL_n and EL data.
class ConvexPolygon {
public:
    ConvexPolygon() = default;

    // Sorts the multiset; any input order is accepted.
    static ConvexPolygon from_slopes(std::vector<Rational> slopes);

    std::size_t height() const { return slopes_.size(); }
    const std::vector<Rational>& slopes() const { return slopes_; }
    const Rational& slope(std::size_t i) const { return slopes_[i]; }

    // Sum of the first l slopes (y-coordinate of the graph at x = l).
    Rational partial_sum(std::size_t l) const;
    // Total rise: y-coordinate of the right endpoint.
    Rational total_rise() const { return partial_sum(height()); }

    bool is_isoclinic() const;

    // Pointwise concatenation (slopes re-sorted).
    ConvexPolygon concat(const ConvexPolygon& other) const;

    bool operator==(const ConvexPolygon& o) const { return slopes_ == o.slopes_; }
    bool operator!=(const ConvexPolygon& o) const { return !(*this == o); }

private:
    std::vector<Rational> slopes_;  // nondecreasing
};

// The "lying above" order: P lies above Q iff every partial sum of P
// dominates that of Q. Heights must agree; endpoint equality is not required.
bool lies_above(const ConvexPolygon& P, const ConvexPolygon& Q);

// Vertices of the graph of P: (0,0), every (l, y) where the slope strictly
// increases across x = l, and the right endpoint.
std::vector<std::pair<int, Rational>> break_points(const ConvexPolygon& P);

// Interior x-coordinates that are break points of P where the graphs of P
// and Q touch.
std::vector<int> contact_break_points(const ConvexPolygon& P, const ConvexPolygon& Q);

// The Kottwitz invariant: one integer for GL_n, one per factor for products.
struct KottwitzPoint {
    std::vector<std::int64_t> components;

    bool operator==(const KottwitzPoint& o) const { return components == o.components; }
    bool operator!=(const KottwitzPoint& o) const { return !(*this == o); }
};

}  // namespace fcx
