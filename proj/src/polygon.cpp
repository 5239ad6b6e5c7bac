#include "fcx/polygon.hpp"

#include <algorithm>

#include "fcx/errors.hpp"

namespace fcx {

ConvexPolygon ConvexPolygon::from_slopes(std::vector<Rational> slopes) {
    std::sort(slopes.begin(), slopes.end());
    ConvexPolygon p;
    p.slopes_ = std::move(slopes);
    return p;
}

Rational ConvexPolygon::partial_sum(std::size_t l) const {
    Rational s;
    for (std::size_t i = 0; i < l && i < slopes_.size(); ++i) s += slopes_[i];
    return s;
}

bool ConvexPolygon::is_isoclinic() const {
    for (std::size_t i = 1; i < slopes_.size(); ++i)
        if (slopes_[i] != slopes_[0]) return false;
    return true;
}

ConvexPolygon ConvexPolygon::concat(const ConvexPolygon& other) const {
    std::vector<Rational> all = slopes_;
    all.insert(all.end(), other.slopes_.begin(), other.slopes_.end());
    return from_slopes(std::move(all));
}

bool lies_above(const ConvexPolygon& P, const ConvexPolygon& Q) {
    if (P.height() != Q.height())
        throw height_mismatch("lies_above: heights " + std::to_string(P.height()) + " vs " +
                              std::to_string(Q.height()));
    Rational diff;
    for (std::size_t l = 0; l < P.height(); ++l) {
        diff += P.slope(l) - Q.slope(l);
        if (diff < Rational(0)) return false;
    }
    return true;
}

std::vector<std::pair<int, Rational>> break_points(const ConvexPolygon& P) {
    std::vector<std::pair<int, Rational>> pts;
    pts.emplace_back(0, Rational(0));
    Rational y;
    const std::size_t n = P.height();
    for (std::size_t l = 1; l < n; ++l) {
        y += P.slope(l - 1);
        if (P.slope(l - 1) < P.slope(l)) pts.emplace_back((int)l, y);
    }
    if (n > 0) pts.emplace_back((int)n, P.total_rise());
    return pts;
}

std::vector<int> contact_break_points(const ConvexPolygon& P, const ConvexPolygon& Q) {
    if (P.height() != Q.height())
        throw height_mismatch("contact_break_points: heights differ");
    std::vector<int> out;
    Rational yp, yq;
    const std::size_t n = P.height();
    for (std::size_t l = 1; l < n; ++l) {
        yp += P.slope(l - 1);
        yq += Q.slope(l - 1);
        if (P.slope(l - 1) < P.slope(l) && yp == yq) out.push_back((int)l);
    }
    return out;
}

}  // namespace fcx
