#pragma once

#include <vector>

#include "fcx/isocrystal.hpp"
#include "fcx/polygon.hpp"

namespace fcx {

// O_E-module structure on an F-crystal for O_E unramified of degree m over
// Z_p: a Z/m-grading of the basis with F mapping grade i into grade i+1.
// Requires m | s so that Phi = F^s preserves every graded piece.
struct ELStructure {
    FCrystal crystal;
    int m = 1;
    std::vector<int> grading;  // length n, values in [0, m)

    int piece_rank() const { return crystal.n / m; }  // d
    std::vector<int> rows_of_grade(int i) const;
};

// The type (d, f): per-character rank and cokernel-rank function.
struct ELType {
    int d = 0;
    std::vector<int> f;  // length m, values in [0, d]

    int m() const { return (int)f.size(); }
    bool operator==(const ELType& o) const { return d == o.d && f == o.f; }
};

// Validates the grading (block condition and equal piece ranks) and returns
// the assembled structure.
ELStructure el_validate(const FCrystal& X, int m, std::vector<int> grading);

// f(i) = corank of the block F_{i-1}: M_{i-1} -> M_i, read off mod p.
ELType el_type(const ELStructure& S);

// Newton polygon of the structure: the plain Newton polygon with every
// multiplicity divided by m (MultiplicityViolation when that fails).
ConvexPolygon el_newton(const ELStructure& S);

// sigma-invariant Hodge polygon of a type: slopes (1/m) #{i : f(i) > d-j},
// j = 1..d. Valid for minuscule data; see el_sigma_hodge_of.
ConvexPolygon el_sigma_hodge(const ELType& t);

// sigma-invariant Hodge polygon of a structure. For m = 1 this is the plain
// Hodge polygon (exact for any elementary divisors); for m >= 2 the crystal
// must be minuscule blockwise and the type formula applies.
ConvexPolygon el_sigma_hodge_of(const ELStructure& S);

// nu = mu-bar, tested as exact polygon equality.
bool is_mu_ordinary(const ELStructure& S);

// B(G, {mu}) as Newton polygons: every convex polygon of height d with the
// rise of mu-bar, lying above mu-bar, whose slopes obey Manin's denominator
// law after multiplying multiplicities by m. mu-bar first, then ascending
// lexicographically in partial sums.
std::vector<ConvexPolygon> b_set(const ELType& t);

}  // namespace fcx
