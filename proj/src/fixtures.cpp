#include "fcx/fixtures.hpp"

#include <algorithm>
#include <numeric>

#include "fcx/errors.hpp"

namespace fcx::fixtures {

FCrystal f1_identity(int N) {
    WittRing R = WittRing::create(3, 1, N);
    return FCrystal(R, WittMatrix::identity(R, 2));
}

FCrystal f2_ordinary(int N) {
    WittRing R = WittRing::create(3, 1, N);
    WittMatrix b(R, 2, 2);
    b.set(0, 0, WittElem::one(R));
    b.set(1, 1, WittElem::from_integer(R, 3));
    return FCrystal(R, std::move(b));
}

FCrystal f3_supersingular(int N) {
    WittRing R = WittRing::create(3, 1, N);
    WittMatrix b(R, 2, 2);
    b.set(0, 1, WittElem::from_integer(R, 3));
    b.set(1, 0, WittElem::one(R));
    return FCrystal(R, std::move(b));
}

ELStructure f4_mu_ordinary(int N) {
    WittRing R = WittRing::create(3, 2, N);
    WittMatrix b(R, 2, 2);
    b.set(0, 1, WittElem::from_integer(R, 3));
    b.set(1, 0, WittElem::one(R));
    return el_validate(FCrystal(R, std::move(b)), 2, {0, 1});
}

ELStructure f5_rank4_two_slope(int N) {
    WittRing R = WittRing::create(3, 2, N);
    WittMatrix b(R, 4, 4);
    // slope 1/2 block on e1, e2
    b.set(0, 1, WittElem::from_integer(R, 3));
    b.set(1, 0, WittElem::one(R));
    // etale block on e3, e4
    b.set(2, 3, WittElem::one(R));
    b.set(3, 2, WittElem::one(R));
    return el_validate(FCrystal(R, std::move(b)), 2, {0, 1, 0, 1});
}

WittElem random_elem(Rng& rng, const WittRing& R) {
    std::vector<std::uint64_t> c(R.s());
    for (auto& x : c) x = rng.next() % R.p_pow(R.precision());
    return WittElem(R, std::move(c));
}

WittElem random_unit(Rng& rng, const WittRing& R) {
    for (;;) {
        WittElem x = random_elem(rng, R);
        if (x.val() == 0) return x;
    }
}

WittMatrix random_unimodular(Rng& rng, const WittRing& R, int n) {
    WittMatrix g = WittMatrix::identity(R, n);
    // unit diagonal
    for (int i = 0; i < n; ++i) g.set(i, i, random_unit(rng, R));
    // shears and swaps
    const int ops = 2 * n + 2;
    for (int t = 0; t < ops; ++t) {
        int i = (int)rng.below(n), j = (int)rng.below(n);
        if (i == j) continue;
        if (rng.below(4) == 0) {
            for (int c = 0; c < n; ++c) {
                WittElem tmp = g.at(i, c);
                g.set(i, c, g.at(j, c));
                g.set(j, c, tmp);
            }
        } else {
            WittElem lam = random_elem(rng, R);
            for (int c = 0; c < n; ++c) g.set(i, c, g.at(i, c) + lam * g.at(j, c));
        }
    }
    return g;
}

WittMatrix random_graded_unimodular(Rng& rng, const WittRing& R, const std::vector<int>& grading,
                                    int m) {
    const int n = (int)grading.size();
    WittMatrix g(R, n, n);
    for (int grade = 0; grade < m; ++grade) {
        std::vector<int> rows;
        for (int r = 0; r < n; ++r)
            if (grading[r] == grade) rows.push_back(r);
        WittMatrix blk = random_unimodular(rng, R, (int)rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < rows.size(); ++j)
                g.set(rows[i], rows[j], blk.at((int)i, (int)j));
    }
    return g;
}

FCrystal random_crystal(Rng& rng, const WittRing& R, int n, int max_exp, int max_total) {
    std::vector<int> exps(n);
    for (;;) {
        int total = 0;
        for (auto& e : exps) {
            e = (int)rng.below(max_exp + 1);
            total += e;
        }
        if (total * R.s() <= max_total) break;
    }
    WittMatrix D(R, n, n);
    for (int i = 0; i < n; ++i) D.set(i, i, WittElem::one(R).times_p_pow(exps[i]));
    WittMatrix U = random_unimodular(rng, R, n);
    WittMatrix V = random_unimodular(rng, R, n);
    return FCrystal(R, (U * D) * V);
}

WittMatrix cyclic_block(const WittRing& R, const std::vector<int>& exps) {
    const int h = (int)exps.size();
    WittMatrix b(R, h, h);
    for (int j = 0; j + 1 < h; ++j) b.set(j + 1, j, WittElem::one(R).times_p_pow(exps[j]));
    b.set(0, h - 1, WittElem::one(R).times_p_pow(exps[h - 1]));
    return b;
}

WittMatrix isoclinic_block(const WittRing& R, int h, int a) {
    std::vector<int> exps(h, 0);
    exps[h - 1] = a;
    return cyclic_block(R, exps);
}

PlannedCrystal planned_multislope(const WittRing& R, const std::vector<BlockPlan>& blocks, int m) {
    int n = 0;
    for (const auto& bl : blocks) n += bl.height;
    WittMatrix b(R, n, n);
    std::vector<Rational> slopes;
    std::vector<int> grading;
    int at = 0;
    for (const auto& bl : blocks) {
        const int h = bl.height;
        if (m > 1 && h % m != 0)
            throw DomainError("InvalidParameter", "graded block height must be divisible by m");
        std::vector<int> exps = bl.step_exponents;
        exps.resize(h, 0);
        WittMatrix blk = cyclic_block(R, exps);
        for (int i = 0; i < h; ++i)
            for (int j = 0; j < h; ++j) b.set(at + i, at + j, blk.at(i, j));
        int rise = 0;
        for (int e : exps) rise += e;
        for (int i = 0; i < h; ++i) {
            slopes.emplace_back(rise, h);
            grading.push_back(i % std::max(m, 1));
        }
        at += h;
    }
    PlannedCrystal out{FCrystal(R, std::move(b)), ConvexPolygon::from_slopes(std::move(slopes)),
                       std::move(grading)};
    return out;
}

ELStructure random_el_structure(Rng& rng, const WittRing& R, int m, int pieces) {
    std::vector<BlockPlan> blocks;
    for (int i = 0; i < pieces; ++i) {
        int h = m * (int)(1 + rng.below(2));  // height m or 2m
        std::vector<int> exps(h, 0);
        for (int j = 0; j < h; ++j) exps[j] = (int)rng.below(2);  // minuscule steps
        blocks.emplace_back(h, std::move(exps));
    }
    PlannedCrystal pc = planned_multislope(R, blocks, m);
    WittMatrix g = random_graded_unimodular(rng, R, pc.grading, m);
    FCrystal scrambled = sigma_conjugate(pc.X, g);
    return el_validate(scrambled, m, pc.grading);
}

}  // namespace fcx::fixtures
