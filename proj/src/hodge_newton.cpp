#include "fcx/hodge_newton.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "fcx/errors.hpp"

namespace fcx {

int LeviPartition::total() const {
    int t = 0;
    for (int s : sizes) t += s;
    return t;
}

std::vector<int> LeviPartition::interior_cuts() const {
    std::vector<int> cuts;
    int acc = 0;
    for (std::size_t k = 0; k + 1 < sizes.size(); ++k) {
        acc += sizes[k];
        cuts.push_back(acc);
    }
    return cuts;
}

bool hn_reducible(const ConvexPolygon& nu, const ConvexPolygon& mu_bar, const LeviPartition& P) {
    const int d = (int)nu.height();
    if ((int)mu_bar.height() != d) throw height_mismatch("hn_reducible: polygon heights differ");
    if (P.total() != d)
        throw DomainError("InvalidParameter", "partition does not sum to the polygon height");
    for (int s : P.sizes)
        if (s < 1) throw DomainError("InvalidParameter", "partition blocks must be positive");
    if (P.sizes.size() < 2) return false;  // a proper parabolic has at least two blocks
    for (int j : P.interior_cuts()) {
        if (nu.partial_sum(j) != mu_bar.partial_sum(j)) return false;
        if (!(nu.slope(j - 1) < nu.slope(j))) return false;
    }
    return true;
}

std::optional<LeviPartition> hn_levis(const ConvexPolygon& nu, const ConvexPolygon& mu_bar) {
    std::vector<int> cuts = contact_break_points(nu, mu_bar);
    if (cuts.empty()) return std::nullopt;
    LeviPartition P;
    int prev = 0;
    for (int c : cuts) {
        P.sizes.push_back(c - prev);
        prev = c;
    }
    P.sizes.push_back((int)nu.height() - prev);
    return P;
}

namespace {

// Distinct slope values of an EL polygon split into the consecutive runs
// cut out by the partition. Cuts are guaranteed to fall on slope boundaries
// by the strict-break condition.
std::vector<std::vector<Rational>> slope_groups_for(const ConvexPolygon& nu,
                                                    const LeviPartition& P) {
    std::vector<std::vector<Rational>> groups;
    std::vector<int> cuts = P.interior_cuts();
    std::size_t cut_idx = 0;
    groups.emplace_back();
    for (std::size_t l = 0; l < nu.height(); ++l) {
        if (cut_idx < cuts.size() && (int)l == cuts[cut_idx]) {
            groups.emplace_back();
            ++cut_idx;
        }
        auto& g = groups.back();
        if (g.empty() || !(g.back() == nu.slope(l))) g.push_back(nu.slope(l));
    }
    return groups;
}

}  // namespace

HNReport hn_decompose(const ELStructure& S, const LeviPartition& P) {
    ConvexPolygon nu = el_newton(S);
    ConvexPolygon mu_bar = el_sigma_hodge_of(S);
    if (!hn_reducible(nu, mu_bar, P))
        throw not_hn_reducible("the Newton and Hodge polygons have no contact break at the "
                               "requested cuts");

    Decomposition dec = decompose_by_slope_groups(S.crystal, slope_groups_for(nu, P));

    HNReport report;
    report.partition = P;
    report.isogeny_denominator = dec.isogeny_denominator;
    report.effective_precision = dec.effective_precision;

    for (auto& comp : dec.components) {
        const WittMatrix& B = comp.basis;
        const int nk = B.cols();
        const int n = S.crystal.n;
        const int neff = dec.effective_precision;
        const WittRing& R = S.crystal.ring;

        // transport the grading: the graded projections of the basis must
        // stay inside the component, and per-grade ranks must agree
        WittMatrix graded_basis(R, n, nk);
        std::vector<int> graded_labels;
        int col_out = 0;
        if (S.m == 1) {
            graded_basis = B;
            graded_labels.assign(nk, 0);
        } else {
            if (nk % S.m != 0)
                throw invalid_grading("component rank not divisible by m");
            for (int grade = 0; grade < S.m; ++grade) {
                // project every basis column onto the grade subspace
                WittMatrix proj(R, n, nk);
                for (int j = 0; j < nk; ++j)
                    for (int r = 0; r < n; ++r)
                        if (S.grading[r] == grade) proj.set(r, j, B.at(r, j));
                // membership: each projected column must lie in span(B)
                if (!solve_exact(B, proj, neff))
                    throw invalid_grading(
                        "slope component does not respect the O_E-grading at working precision");
                WittMatrix piece = saturated_column_basis(proj, neff);
                if (piece.cols() != nk / S.m)
                    throw invalid_grading("graded piece of a factor has unexpected rank");
                for (int j = 0; j < piece.cols(); ++j, ++col_out) {
                    for (int r = 0; r < n; ++r) graded_basis.set(r, col_out, piece.at(r, j));
                    graded_labels.push_back(grade);
                }
            }
        }

        auto bk = solve_exact(graded_basis, S.crystal.b * graded_basis.sigma(), neff);
        if (!bk)
            throw PrecisionExhausted("graded factor is not Frobenius-stable at working precision");
        FCrystal sub(R, *bk, neff);
        ELStructure fs = el_validate(sub, S.m, graded_labels);

        HNFactor f{el_newton(fs), el_sigma_hodge_of(fs), el_type(fs), fs, graded_basis};
        report.factors.push_back(std::move(f));
    }

    // factor invariants: concatenations, tightness, per-factor Mazur
    {
        ConvexPolygon nu_cat, mu_cat;
        for (const auto& f : report.factors) {
            nu_cat = nu_cat.concat(f.nu);
            mu_cat = mu_cat.concat(f.mu_bar);
            if (!(f.nu.total_rise() == f.mu_bar.total_rise()))
                throw DomainError("DecompositionInvariant",
                                  "factor is not endpoint-tight against its Hodge polygon");
            if (!lies_above(f.nu, f.mu_bar))
                throw DomainError("DecompositionInvariant", "factor violates Mazur's inequality");
        }
        if (!(nu_cat == nu) || !(mu_cat == mu_bar))
            throw DomainError("DecompositionInvariant",
                              "factor polygons do not concatenate to the input polygons");
    }
    return report;
}

std::vector<ELRealizationFactor> el_realization(const std::vector<std::pair<int, int>>& weights,
                                                const std::vector<int>& sigma_action) {
    const int k = (int)sigma_action.size();
    // sigma_action must be a permutation of 0..k-1
    {
        std::vector<bool> seen(k, false);
        for (int v : sigma_action) {
            if (v < 0 || v >= k || seen[v])
                throw DomainError("InvalidParameter", "sigma_action is not a permutation");
            seen[v] = true;
        }
    }
    // fiber dimensions; positions must be distinct per label
    std::map<int, std::set<int>> positions;
    for (const auto& [label, pos] : weights) {
        if (label < 0 || label >= k)
            throw DomainError("InvalidParameter",
                              "weight label " + std::to_string(label) + " out of range");
        if (!positions[label].insert(pos).second)
            throw DomainError("InvalidParameter", "duplicate weight position within a label");
    }
    std::vector<int> dim(k, 0);
    for (const auto& [label, s] : positions) dim[label] = (int)s.size();

    // sigma-orbits of the labels
    std::vector<ELRealizationFactor> out;
    std::vector<bool> used(k, false);
    for (int start = 0; start < k; ++start) {
        if (used[start]) continue;
        int size = 0, cur = start;
        int d0 = dim[start];
        do {
            used[cur] = true;
            ++size;
            if (dim[cur] != d0)
                throw inconsistent_orbit("weight spaces in one sigma-orbit have dimensions " +
                                         std::to_string(d0) + " and " + std::to_string(dim[cur]));
            cur = sigma_action[cur];
        } while (cur != start);
        out.push_back(ELRealizationFactor{size, d0});
    }
    std::sort(out.begin(), out.end(), [](const ELRealizationFactor& a, const ELRealizationFactor& b) {
        return a.m != b.m ? a.m < b.m : a.n < b.n;
    });
    return out;
}

}  // namespace fcx
