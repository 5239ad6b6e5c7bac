#pragma once

#include <cstdint>
#include <vector>

#include "fcx/eltype.hpp"
#include "fcx/isocrystal.hpp"

namespace fcx::fixtures {

// SplitMix64: tiny, deterministic, good enough for reproducible suites.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

private:
    std::uint64_t state_;
};

// The named fixture corpus.
FCrystal f1_identity(int N = 16);        // 2x2 identity over W(F_3)
FCrystal f2_ordinary(int N = 16);        // diag(1, p): ordinary elliptic crystal
FCrystal f3_supersingular(int N = 16);   // [[0, p], [1, 0]]: the slope-1/2 crystal
ELStructure f4_mu_ordinary(int N = 16);  // m = 2, d = 1, f = (1, 0) over W(F_9)
ELStructure f5_rank4_two_slope(int N = 16);  // block sum of F4 and the etale m=2 crystal

WittElem random_elem(Rng& rng, const WittRing& R);
WittElem random_unit(Rng& rng, const WittRing& R);

// Product of shears, permutations and unit diagonals: determinant is a unit.
WittMatrix random_unimodular(Rng& rng, const WittRing& R, int n);

// Grading-preserving unimodular matrix (block diagonal on the graded pieces).
WittMatrix random_graded_unimodular(Rng& rng, const WittRing& R,
                                    const std::vector<int>& grading, int m);

// U diag(p^{e_i}) V with random unimodular U, V; exponents bounded by
// max_exp entrywise and max_total in total (so polygons stay certifiable).
FCrystal random_crystal(Rng& rng, const WittRing& R, int n, int max_exp, int max_total);

// The height-h cyclic isoclinic block of slope a/h (one p^a on the wrap).
WittMatrix isoclinic_block(const WittRing& R, int h, int a);

// Cyclic block F e_j = p^{exps[j]} e_{j+1} (wrapping); slope = sum(exps)/h.
WittMatrix cyclic_block(const WittRing& R, const std::vector<int>& exps);

// Block sum of cyclic blocks; expected Newton polygon is the sorted multiset
// of slopes.
struct PlannedCrystal {
    FCrystal X;
    ConvexPolygon expected_newton;
    std::vector<int> grading;  // cyclic within each block (valid for m | h)
};

struct BlockPlan {
    int height = 1;
    std::vector<int> step_exponents;  // padded with zeros up to the height

    BlockPlan(int h, int wrap_exp) : height(h), step_exponents((std::size_t)h, 0) {
        step_exponents[h - 1] = wrap_exp;
    }
    BlockPlan(int h, std::vector<int> exps) : height(h), step_exponents(std::move(exps)) {}
};

PlannedCrystal planned_multislope(const WittRing& R, const std::vector<BlockPlan>& blocks, int m);

// Random minuscule EL structure: block sum of graded cyclic blocks with
// exponents in {0, 1}, scrambled by a graded unimodular matrix.
ELStructure random_el_structure(Rng& rng, const WittRing& R, int m, int pieces);

}  // namespace fcx::fixtures
