#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fcx/eltype.hpp"

namespace fcx {

// Ordered composition (n_1, ..., n_r) of the EL height d, specifying a
// standard Levi by its block sizes.
struct LeviPartition {
    std::vector<int> sizes;

    int total() const;
    // j_k = n_1 + ... + n_k for k = 1..r-1 (the interior cut points)
    std::vector<int> interior_cuts() const;

    bool operator==(const LeviPartition& o) const { return sizes == o.sizes; }
};

// The polygon criterion: at every interior cut the partial sums of nu and
// mu-bar agree and nu has a strict break.
bool hn_reducible(const ConvexPolygon& nu, const ConvexPolygon& mu_bar, const LeviPartition& P);

// Finest admissible partition: cuts at every contact point of (nu, mu_bar)
// that is a strict break of nu; nullopt when there are none.
std::optional<LeviPartition> hn_levis(const ConvexPolygon& nu, const ConvexPolygon& mu_bar);

struct HNFactor {
    ConvexPolygon nu;       // EL Newton polygon of the factor
    ConvexPolygon mu_bar;   // sigma-invariant Hodge polygon of the factor
    ELType type;
    ELStructure structure;  // factor crystal with inherited grading
    WittMatrix basis;       // columns in the ambient module
};

struct HNReport {
    LeviPartition partition;
    std::vector<HNFactor> factors;
    int isogeny_denominator = 0;
    int effective_precision = 0;
};

// The Hodge-Newton decomposition at isogeny level: splits the underlying
// isocrystal along the cuts of P, transports the O_E-grading to every
// factor, and verifies the factor invariants (concatenation identities,
// per-factor Mazur inequality, endpoint tightness).
HNReport hn_decompose(const ELStructure& S, const LeviPartition& P);

// Combinatorial EL realization: weight-space labels grouped into
// sigma-orbits; each orbit of size m_j with constant fiber dimension n_j
// contributes a factor Res_{deg m_j} GL_{n_j}.
struct ELRealizationFactor {
    int m = 0;  // orbit size (degree of the unramified field of definition)
    int n = 0;  // fiber dimension
    bool operator==(const ELRealizationFactor& o) const { return m == o.m && n == o.n; }
};

std::vector<ELRealizationFactor> el_realization(
    const std::vector<std::pair<int, int>>& weights,  // (label, position)
    const std::vector<int>& sigma_action);            // permutation of labels

}  // namespace fcx
