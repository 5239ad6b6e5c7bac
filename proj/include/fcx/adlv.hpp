#pragma once

#include <optional>
#include <vector>

#include "fcx/hodge_newton.hpp"
#include "fcx/isocrystal.hpp"

namespace fcx {

// A coset g GL_n(W): the lattice p^{-denom_exp} span(H) with H integral in
// canonical column Hermite form and not divisible by p (the representation
// with minimal denominator exponent, which may be negative).
struct LatticeClass {
    int denom_exp = 0;
    WittMatrix H;

    bool operator==(const LatticeClass& o) const {
        return denom_exp == o.denom_exp && H == o.H;
    }
};

struct ADLVWindowResult {
    int window = 0;
    std::vector<LatticeClass> classes;  // sorted by canonical form
    bool complete_in_window = false;    // always false: a window truncates
};

struct ADLVOptions {
    // Row colors: off-pivot Hermite entries are only allowed between rows of
    // equal color, restricting the enumeration to graded / block cosets.
    // Empty means a single color (the full coset space).
    std::vector<int> colors;
    // When set, membership is tested blockwise: the elementary-divisor
    // polygon of every color block of g^{-1} b sigma(g) must equal the
    // corresponding entry (indexed by color value).
    std::vector<ConvexPolygon> per_block_mu;
    long long candidate_budget = 2'000'000;
};

// Brute-force enumeration of X_mu(b) inside the lattice window
// p^c L c g L c p^{-c} L. Membership uses b' = g^{-1} b sigma(g) and asks
// for elementary-divisor type mu.
ADLVWindowResult adlv_enumerate(const FCrystal& X, const ConvexPolygon& mu, int c,
                                const ADLVOptions& opts = {});

// Canonicalize an arbitrary invertible matrix over the fraction field
// (given as p^{-denom} * G with G integral) to its lattice class.
LatticeClass canonicalize_lattice(const WittMatrix& G, int denom_exp, int neff);

struct HNCompareResult {
    long long count_G = 0;
    long long count_M = 0;
    bool equal = false;
    int window = 0;
};

// Window-level comparison of X^G and X^M for an HN-reducible datum whose b
// is block diagonal along P (plain GL_n only: m = 1).
HNCompareResult adlv_hn_compare(const ELStructure& S, const LeviPartition& P,
                                const ConvexPolygon& mu, int c,
                                long long candidate_budget = 2'000'000);

}  // namespace fcx
