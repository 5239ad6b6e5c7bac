#include "fcx/adlv.hpp"

#include <algorithm>

#include "fcx/errors.hpp"

namespace fcx {

namespace {

// strict total order on classes: denominator, diagonal exponents, then
// entry coordinates in row-major order
bool class_less(const LatticeClass& a, const LatticeClass& b) {
    if (a.denom_exp != b.denom_exp) return a.denom_exp < b.denom_exp;
    const int n = a.H.rows();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const auto& ca = a.H.at(i, j).coords();
            const auto& cb = b.H.at(i, j).coords();
            if (ca != cb) return ca < cb;
        }
    return false;
}

// p^{2c} Lambda inside span(H)?
bool contains_scaled_lattice(const WittMatrix& H, int two_c, int neff) {
    WittMatrix adj = adjugate(H);
    int delta = 0;
    for (int i = 0; i < H.rows(); ++i) delta += H.at(i, i).val();  // triangular pivots
    for (int i = 0; i < H.rows(); ++i)
        for (int j = 0; j < H.cols(); ++j) {
            int v = std::min(adj.at(i, j).val(), neff) + two_c;
            if (v < delta) return false;
        }
    return true;
}

ConvexPolygon divisor_polygon(const WittMatrix& M, int neff) {
    SmithResult sm = smith_normal_form(M, neff);
    if (sm.rank < std::min(M.rows(), M.cols()))
        throw PrecisionExhausted("membership test: elementary divisor undetermined");
    std::vector<Rational> sl;
    for (int e : sm.exponents) sl.emplace_back(e);
    return ConvexPolygon::from_slopes(std::move(sl));
}

}  // namespace

LatticeClass canonicalize_lattice(const WittMatrix& G, int denom_exp, int neff) {
    HermiteResult h = hermite_column_form(G, neff);
    // strip common p-powers for the minimal-denominator representation
    int common = neff;
    for (int i = 0; i < h.H.rows(); ++i)
        for (int j = 0; j < h.H.cols(); ++j) common = std::min(common, h.H.at(i, j).val());
    WittMatrix H = h.H;
    if (common > 0) {
        WittMatrix stripped(H.ring(), H.rows(), H.cols());
        for (int i = 0; i < H.rows(); ++i)
            for (int j = 0; j < H.cols(); ++j)
                stripped.set(i, j, H.at(i, j).divide_p_pow(common));
        H = stripped;
    }
    return LatticeClass{denom_exp - common, H};
}

ADLVWindowResult adlv_enumerate(const FCrystal& X, const ConvexPolygon& mu, int c,
                                const ADLVOptions& opts) {
    const WittRing& R = X.ring;
    const int n = X.n;
    if (n > 3 || R.p() > 5 || c > 2)
        throw BudgetExceeded("adlv window preconditions: n <= 3, p <= 5, c <= 2");
    if ((int)mu.height() != n) throw height_mismatch("mu height differs from the rank");
    int mu_max = 0;
    for (const auto& s : mu.slopes()) {
        if (!s.is_integer())
            throw DomainError("InvalidParameter", "adlv requires integer slopes in mu");
        mu_max = std::max(mu_max, (int)s.num());
    }
    std::vector<int> colors = opts.colors;
    if (colors.empty()) colors.assign(n, 0);
    if ((int)colors.size() != n)
        throw DomainError("InvalidParameter", "color vector length differs from the rank");

    const int neff = X.effective_precision;
    if (neff < 2 * c + mu_max + 2)
        throw PrecisionExhausted("adlv membership needs precision >= 2c + max(mu) + 2");

    // per-color row lists for blockwise membership
    std::vector<std::vector<int>> color_rows;
    if (!opts.per_block_mu.empty()) {
        int ncolors = 1 + *std::max_element(colors.begin(), colors.end());
        if ((int)opts.per_block_mu.size() != ncolors)
            throw DomainError("InvalidParameter", "one mu block per color is required");
        color_rows.resize(ncolors);
        for (int r = 0; r < n; ++r) color_rows[colors[r]].push_back(r);
        for (int k = 0; k < ncolors; ++k)
            if (color_rows[k].size() != opts.per_block_mu[k].height())
                throw height_mismatch("mu block height differs from its color block");
    }

    ADLVWindowResult res;
    res.window = c;
    res.complete_in_window = false;

    // enumerate canonical Hermite forms: diagonal p^{a_i}, a_i in [0, 2c],
    // below-diagonal entries over W/p^{a_i} between same-colored rows
    std::vector<int> diag(n, 0);
    const int s = R.s();
    while (true) {
        // entry slots for this diagonal
        struct Slot { int i, j; };
        std::vector<Slot> slots;
        long long total = 1;
        bool overflow = false;
        for (int j = 0; j < n && !overflow; ++j)
            for (int i = j + 1; i < n && !overflow; ++i) {
                if (colors[i] != colors[j]) continue;
                if (diag[i] == 0) continue;  // entries live in W/p^{a_i}
                slots.push_back({i, j});
                for (int t = 0; t < s * diag[i]; ++t) {
                    total *= (long long)R.p();
                    if (total > opts.candidate_budget) overflow = true;
                }
            }
        if (overflow) throw BudgetExceeded("adlv candidate count exceeds the budget");

        for (long long code = 0; code < total; ++code) {
            WittMatrix H(R, n, n);
            for (int i = 0; i < n; ++i)
                H.set(i, i, WittElem::one(R).times_p_pow(diag[i]));
            long long rem = code;
            for (const auto& sl : slots) {
                std::vector<std::uint64_t> coords(s, 0);
                for (int t = 0; t < s; ++t) {
                    long long md = 1;
                    for (int q = 0; q < diag[sl.i]; ++q) md *= (long long)R.p();
                    coords[t] = (std::uint64_t)(rem % md);
                    rem /= md;
                }
                H.set(sl.i, sl.j, WittElem(R, std::move(coords)));
            }
            if (!contains_scaled_lattice(H, 2 * c, neff)) continue;

            int delta = 0;
            for (int i = 0; i < n; ++i) delta += diag[i];
            if (neff - delta < mu_max + 2)
                throw PrecisionExhausted("adlv candidate inversion exhausts the precision budget");

            // b' = H^{-1} b sigma(H) (the p^{-c} scalings cancel)
            WittMatrix Y = (adjugate(H) * X.b) * H.sigma();
            bool divisible = true;
            for (int i = 0; i < n && divisible; ++i)
                for (int j = 0; j < n && divisible; ++j)
                    if (Y.at(i, j).val() < delta) divisible = false;
            if (!divisible) continue;  // b' not integral
            WittMatrix bp(R, n, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    bp.set(i, j, Y.at(i, j).val() >= R.precision() ? WittElem::zero(R)
                                                                   : Y.at(i, j).divide_p_pow(delta));
            const int neff_bp = neff - delta;
            bool member = false;
            if (opts.per_block_mu.empty()) {
                member = divisor_polygon(bp, neff_bp) == mu;
            } else {
                // block-diagonal H and b make b' block diagonal, so blockwise
                // divisor polygons capture the M(W) mu(p) M(W) condition
                member = true;
                for (std::size_t k = 0; k < color_rows.size() && member; ++k) {
                    WittMatrix blk = bp.submatrix(color_rows[k], color_rows[k]);
                    member = divisor_polygon(blk, neff_bp) == opts.per_block_mu[k];
                }
            }
            if (member) res.classes.push_back(canonicalize_lattice(H, c, neff));
        }

        // next diagonal vector
        int pos = n - 1;
        while (pos >= 0 && diag[pos] == 2 * c) diag[pos--] = 0;
        if (pos < 0) break;
        diag[pos]++;
    }

    std::sort(res.classes.begin(), res.classes.end(), class_less);
    return res;
}

HNCompareResult adlv_hn_compare(const ELStructure& S, const LeviPartition& P,
                                const ConvexPolygon& mu, int c, long long candidate_budget) {
    if (S.m != 1)
        throw DomainError("InvalidParameter",
                          "adlv_hn_compare handles plain GL_n data (m = 1) only");
    ConvexPolygon nu = el_newton(S);
    ConvexPolygon mu_bar = el_sigma_hodge_of(S);
    if (!hn_reducible(nu, mu_bar, P))
        throw not_hn_reducible("adlv_hn_compare requires a Hodge-Newton reducible datum");

    const int n = S.crystal.n;
    // block colors along P, and b must be block diagonal
    std::vector<int> colors(n);
    {
        int block = 0, used = 0;
        for (int r = 0; r < n; ++r) {
            if (used == P.sizes[block]) { ++block; used = 0; }
            colors[r] = block;
            ++used;
        }
    }
    const int neff = S.crystal.effective_precision;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (colors[i] != colors[j] && S.crystal.b.at(i, j).val() < neff)
                throw DomainError("NotBlockDiagonal",
                                  "b must lie in the Levi (block diagonal along P)");

    // mu sliced along P (global mu is ascending, blocks follow ascending slopes)
    std::vector<ConvexPolygon> mu_blocks;
    {
        std::size_t at = 0;
        for (int sz : P.sizes) {
            std::vector<Rational> sl(mu.slopes().begin() + at, mu.slopes().begin() + at + sz);
            mu_blocks.push_back(ConvexPolygon::from_slopes(std::move(sl)));
            at += sz;
        }
    }

    ADLVOptions optG;
    optG.candidate_budget = candidate_budget;
    ADLVWindowResult G = adlv_enumerate(S.crystal, mu, c, optG);

    ADLVOptions optM;
    optM.colors = colors;
    optM.per_block_mu = mu_blocks;
    optM.candidate_budget = candidate_budget;
    ADLVWindowResult M = adlv_enumerate(S.crystal, mu, c, optM);

    HNCompareResult out;
    out.count_G = (long long)G.classes.size();
    out.count_M = (long long)M.classes.size();
    out.equal = out.count_G == out.count_M;
    out.window = c;
    return out;
}

}  // namespace fcx
