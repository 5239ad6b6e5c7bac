#pragma once

#include <vector>

#include "fcx/linalg.hpp"
#include "fcx/polygon.hpp"
#include "fcx/poly.hpp"

namespace fcx {

// An F-crystal presented by its Frobenius matrix: F = b o sigma on the
// standard basis of a free module of rank n over the Witt ring. b is kept
// integral; isogeny-level operations report their p-power denominators
// separately. effective_precision tracks digits still trusted after
// precision-consuming operations (never above the ring precision).
struct FCrystal {
    WittRing ring;
    int n = 0;
    WittMatrix b;
    int effective_precision = 0;

    FCrystal(const WittRing& r, WittMatrix mat);
    FCrystal(const WittRing& r, WittMatrix mat, int eff);
};

// sigma-twisted power Phi = b sigma(b) ... sigma^{s-1}(b); a linear map
// since sigma^s is the identity on the ring.
WittMatrix phi_matrix(const FCrystal& X);

// Elementary-divisor polygon of b (slopes = divisor exponents, ascending).
ConvexPolygon hodge_polygon(const FCrystal& X);

// Classical Newton polygon: lower-hull slopes of the characteristic polygon
// of Phi, divided by s so the result is stable under unramified base change.
ConvexPolygon newton_polygon(const FCrystal& X);

// v_p(det b); for GL_n this generates pi_1 and equals the total rise of the
// Newton polygon.
KottwitzPoint kottwitz_point(const FCrystal& X);

// b' = g b sigma(g)^{-1}. Requires val(det g) below the working precision;
// the result's effective precision drops by val(det g). The conjugate must
// stay integral (it always does for unit-determinant g).
FCrystal sigma_conjugate(const FCrystal& X, const WittMatrix& g);

// Checks p M c F M c M (more generally divisor exponents <= hodge_bound).
void validate_crystal_flag(const FCrystal& X, int hodge_bound = 1);

struct SlopeComponent {
    Rational slope;        // isoclinic slope of the factor (lowest in group)
    ConvexPolygon newton;  // full Newton polygon of the factor
    WittMatrix basis;      // n x n_k saturated basis of the sub-isocrystal
    FCrystal sub;          // Frobenius matrix in that basis
};

struct Decomposition {
    std::vector<SlopeComponent> components;  // ascending slope
    int isogeny_denominator = 0;  // p-exponent of [M : sum of components]
    int effective_precision = 0;
};

// Isogeny-level splitting of the crystal along groups of Newton slopes.
// Groups must partition the distinct slopes into consecutive runs
// (ascending). The finest grouping is Manin's slope decomposition.
Decomposition decompose_by_slope_groups(const FCrystal& X,
                                        const std::vector<std::vector<Rational>>& groups);

// One component per distinct Newton slope.
Decomposition slope_decomposition(const FCrystal& X);

}  // namespace fcx
