#pragma once

#include <vector>

#include "fcx/eltype.hpp"

namespace fcx {

// Number of formal parameters of the deformation space attached to a type:
// sum over the characters of f(i) (d - f(i)), the count of root/weight pairs
// with positive pairing against the Hodge cocharacter.
int unipotent_dim(const ELType& t);

// Vanishing of unipotent_dim, i.e. f(i) in {0, d} for every i: the factor's
// sigma-invariant Hodge polygon is isoclinic and its deformation space is a
// point.
bool is_rigid_type(const ELType& t);

// Numerical data of the two-slope mu-ordinary deformation space: the
// Lubin-Tate-power type (1, f'), the multiplicity bound d' <= d_1 d_2, and
// the dimension computed independently from the combined type.
struct TwoSlopeDeformation {
    ELType type1;  // lower-slope factor
    ELType type2;  // higher-slope factor
    std::vector<int> f_prime;  // values in {0, 1}, one per character
    int d_prime_max = 0;
    int defspace_dim = 0;
};

// Applies the case table (factor 1 = lower slope, factor 2 = higher slope):
//   f'(i) = 0 when f1(i) = f2(i) = 0,
//   f'(i) = 0 when f1(i) = d1 and f2(i) = d2,
//   f'(i) = 1 when f1(i) = 0 and f2(i) = d2.
// Any other combination raises UncoveredCase.
TwoSlopeDeformation two_slope_report(const ELType& t1, const ELType& t2);

}  // namespace fcx
