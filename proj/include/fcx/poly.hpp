#pragma once

#include <utility>
#include <vector>

#include "fcx/linalg.hpp"
#include "fcx/rational.hpp"
#include "fcx/witt.hpp"

namespace fcx {

// Dense univariate polynomial over a WittRing, coefficients ascending.
// Degrees are structural: a monic polynomial keeps its full coefficient
// vector even when lower coefficients vanish mod p^N.
class PolyW {
public:
    explicit PolyW(const WittRing& ring) : ring_(ring) {}
    PolyW(const WittRing& ring, std::vector<WittElem> coeffs)
        : ring_(ring), c_(std::move(coeffs)) {}

    const WittRing& ring() const { return ring_; }
    int degree() const { return (int)c_.size() - 1; }  // structural degree
    const std::vector<WittElem>& coeffs() const { return c_; }
    const WittElem& coeff(int i) const { return c_[i]; }

    bool is_monic() const;

    PolyW operator+(const PolyW& o) const;
    PolyW operator-(const PolyW& o) const;
    PolyW operator*(const PolyW& o) const;

    // Quotient and remainder by a monic divisor (exact at ring precision).
    std::pair<PolyW, PolyW> divmod_monic(const PolyW& d) const;

    // Evaluation at a square matrix by Horner's rule.
    WittMatrix eval(const WittMatrix& A) const;

    // f(p^a y) / p^{a deg f} for monic f; requires val(c_i) >= a (deg - i).
    PolyW scale_down(int a) const;
    // p^{a deg f} f(x / p^a) for monic f (inverse of scale_down).
    PolyW scale_up(int a) const;

    // Valuations of the coefficients, clamped to neff.
    std::vector<int> coeff_valuations(int neff) const;

private:
    WittRing ring_;
    std::vector<WittElem> c_;
};

// Root valuations of a monic polynomial read off the lower convex hull of
// its coefficient valuations, listed ascending with hull multiplicities.
// Throws PrecisionExhausted when a coefficient indistinguishable from zero
// mod p^neff sits on or below the candidate hull, or when the constant
// coefficient itself is undetermined.
std::vector<std::pair<Rational, int>> certified_root_valuations(
    const std::vector<int>& coeff_vals, int neff);

// Splits a monic polynomial whose root valuations are all integers into one
// monic factor per distinct valuation (ascending), by repeatedly scaling the
// smallest slope to zero and Hensel-lifting the unit-root/non-unit-root
// factorization. Reports the precision that survives the scalings.
struct SlopeSplit {
    std::vector<std::pair<int, PolyW>> factors;  // (root valuation, monic factor)
    int neff_out = 0;
};

SlopeSplit split_by_integer_valuations(const PolyW& chi, int neff);

}  // namespace fcx
