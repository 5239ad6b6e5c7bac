#include "fcx/isocrystal.hpp"

#include <algorithm>
#include <numeric>

#include "fcx/errors.hpp"

namespace fcx {

FCrystal::FCrystal(const WittRing& r, WittMatrix mat)
    : FCrystal(r, std::move(mat), r.precision()) {}

FCrystal::FCrystal(const WittRing& r, WittMatrix mat, int eff)
    : ring(r), n(mat.rows()), b(std::move(mat)), effective_precision(eff) {
    if (b.rows() != b.cols())
        throw DomainError("InvalidParameter", "Frobenius matrix must be square");
    if (effective_precision < 1 || effective_precision > ring.precision())
        throw DomainError("InvalidParameter", "effective precision out of range");
}

WittMatrix phi_matrix(const FCrystal& X) {
    WittMatrix phi = X.b;
    WittMatrix cur = X.b;
    for (int k = 1; k < X.ring.s(); ++k) {
        cur = cur.sigma();
        phi = phi * cur;
    }
    return phi;
}

ConvexPolygon hodge_polygon(const FCrystal& X) {
    SmithResult s = smith_normal_form(X.b, X.effective_precision);
    if (s.rank < X.n)
        throw PrecisionExhausted("Hodge polygon: an elementary divisor vanishes mod p^" +
                                 std::to_string(X.effective_precision));
    std::vector<Rational> slopes;
    slopes.reserve(X.n);
    for (int e : s.exponents) slopes.emplace_back(e);
    return ConvexPolygon::from_slopes(std::move(slopes));
}

ConvexPolygon newton_polygon(const FCrystal& X) {
    const int s = X.ring.s();
    PolyW chi(X.ring, char_poly(phi_matrix(X)));
    auto vals = certified_root_valuations(chi.coeff_valuations(X.effective_precision),
                                          X.effective_precision);
    std::vector<Rational> slopes;
    slopes.reserve(X.n);
    for (const auto& [lam, mult] : vals)
        for (int i = 0; i < mult; ++i) slopes.push_back(lam / Rational(s));
    return ConvexPolygon::from_slopes(std::move(slopes));
}

KottwitzPoint kottwitz_point(const FCrystal& X) {
    int v = det(X.b).val();
    if (v >= X.effective_precision)
        throw PrecisionExhausted("Kottwitz point: det(b) vanishes mod p^" +
                                 std::to_string(X.effective_precision));
    return KottwitzPoint{{v}};
}

FCrystal sigma_conjugate(const FCrystal& X, const WittMatrix& g) {
    if (g.rows() != X.n || g.cols() != X.n)
        throw DomainError("InvalidParameter", "conjugating matrix has wrong size");
    const int neff = X.effective_precision;
    WittMatrix sg = g.sigma();
    WittElem dg = det(sg);
    const int vg = dg.val();
    if (vg >= neff) throw not_invertible("sigma_conjugate: det(g) vanishes at working precision");
    if (vg == 0) {
        WittMatrix bp = (g * X.b) * inverse_unimodular(sg, neff);
        return FCrystal(X.ring, std::move(bp), neff);
    }
    // g b adj(sigma g) / det(sigma g); integrality of the result is required
    WittElem unit = dg.divide_p_pow(vg);
    WittElem uinv = unit.inverse();
    WittMatrix Y = (g * X.b) * adjugate(sg);
    WittMatrix bp(X.ring, X.n, X.n);
    for (int i = 0; i < X.n; ++i)
        for (int j = 0; j < X.n; ++j) {
            WittElem y = Y.at(i, j) * uinv;
            if (y.val() < vg)
                throw DomainError("NotIntegral",
                                  "sigma conjugate leaves the integral category at this g");
            bp.set(i, j, y.val() >= X.ring.precision() ? WittElem::zero(X.ring)
                                                       : y.divide_p_pow(vg));
        }
    return FCrystal(X.ring, std::move(bp), neff - vg);
}

void validate_crystal_flag(const FCrystal& X, int hodge_bound) {
    ConvexPolygon h = hodge_polygon(X);
    for (const auto& sl : h.slopes())
        if (sl > Rational(hodge_bound))
            throw DomainError("CrystalBoundViolation",
                              "elementary divisor exponent " + sl.str() +
                                  " exceeds the declared Hodge bound " +
                                  std::to_string(hodge_bound));
}

namespace {

struct DistinctSlopes {
    std::vector<Rational> values;  // ascending
    std::vector<int> mults;
};

DistinctSlopes distinct_slopes(const ConvexPolygon& nu) {
    DistinctSlopes d;
    for (const auto& s : nu.slopes()) {
        if (!d.values.empty() && d.values.back() == s)
            d.mults.back()++;
        else {
            d.values.push_back(s);
            d.mults.push_back(1);
        }
    }
    return d;
}

}  // namespace

Decomposition decompose_by_slope_groups(const FCrystal& X,
                                        const std::vector<std::vector<Rational>>& groups) {
    const WittRing& R = X.ring;
    const int n = X.n;
    const int s = R.s();
    ConvexPolygon nu = newton_polygon(X);
    DistinctSlopes ds = distinct_slopes(nu);

    // groups must tile the distinct slopes in ascending order
    {
        std::size_t pos = 0;
        for (const auto& g : groups) {
            for (const auto& v : g) {
                if (pos >= ds.values.size() || !(ds.values[pos] == v))
                    throw DomainError("InvalidParameter",
                                      "slope groups do not match the Newton polygon");
                ++pos;
            }
        }
        if (pos != ds.values.size())
            throw DomainError("InvalidParameter", "slope groups do not cover the Newton polygon");
    }

    Decomposition out;
    if (groups.size() == 1) {
        out.components.push_back(SlopeComponent{ds.values[0], nu, WittMatrix::identity(R, n),
                                                FCrystal(R, X.b, X.effective_precision)});
        out.isogeny_denominator = 0;
        out.effective_precision = X.effective_precision;
        return out;
    }

    // integer valuations for T = Phi^qhat
    WittMatrix phi = phi_matrix(X);
    std::int64_t qhat = 1;
    for (const auto& v : ds.values) {
        Rational lam = v * Rational(s);  // root valuation of Phi
        qhat = std::lcm(qhat, lam.den());
    }
    std::vector<int> Avals;
    for (const auto& v : ds.values) {
        Rational a = v * Rational(s) * Rational(qhat);
        Avals.push_back((int)a.num());
    }
    // reserve digits for the slope scalings
    const int neff0 = X.effective_precision;
    {
        int amax = *std::max_element(Avals.begin(), Avals.end());
        if (neff0 - n * amax < 2)
            throw PrecisionExhausted("decomposition guard: need " + std::to_string(n * amax + 2) +
                                     " digits, have " + std::to_string(neff0));
    }

    WittMatrix T = phi.pow((int)qhat);
    PolyW chiT(R, char_poly(T));
    SlopeSplit split = split_by_integer_valuations(chiT, neff0);
    if (split.factors.size() != ds.values.size())
        throw not_separable("slope classes of the power transform disagree with the Newton polygon");
    for (std::size_t i = 0; i < ds.values.size(); ++i) {
        if (split.factors[i].first != Avals[i] || split.factors[i].second.degree() != ds.mults[i])
            throw not_separable("slope factor mismatch in the power transform");
    }
    const int neff = split.neff_out;

    // matrices h_i(T), then one complementary product per group
    std::vector<WittMatrix> hT;
    hT.reserve(split.factors.size());
    for (const auto& [a, h] : split.factors) hT.push_back(h.eval(T));

    Decomposition out2;
    out2.effective_precision = neff;
    std::size_t pos = 0;
    std::vector<WittMatrix> bases;
    bases.reserve(groups.size());
    for (const auto& g : groups) {
        std::vector<int> members;
        for (std::size_t i = 0; i < g.size(); ++i) members.push_back((int)(pos + i));

        WittMatrix proj = WittMatrix::identity(R, n);
        for (std::size_t i = 0; i < hT.size(); ++i) {
            bool inside = std::find(members.begin(), members.end(), (int)i) != members.end();
            if (!inside) proj = proj * hT[i];
        }
        int expected = 0;
        for (int m : members) expected += ds.mults[m];

        WittMatrix basis = saturated_column_basis(proj, neff);
        if (basis.cols() != expected)
            throw PrecisionExhausted("slope component rank " + std::to_string(basis.cols()) +
                                     " differs from expected " + std::to_string(expected));
        // Frobenius restricted to the component, written in the new basis
        auto bk = solve_exact(basis, X.b * basis.sigma(), neff);
        if (!bk)
            throw PrecisionExhausted("component is not Frobenius-stable at working precision");
        FCrystal sub(R, *bk, neff);
        ConvexPolygon comp_nu = newton_polygon(sub);
        {
            std::vector<Rational> want;
            for (int m : members)
                for (int i = 0; i < ds.mults[m]; ++i) want.push_back(ds.values[m]);
            if (!(comp_nu == ConvexPolygon::from_slopes(std::move(want))))
                throw not_separable("component Newton polygon disagrees with its slope group");
        }
        out2.components.push_back(
            SlopeComponent{ds.values[members.front()], comp_nu, basis, std::move(sub)});
        bases.push_back(out2.components.back().basis);
        pos += g.size();
    }

    // isogeny denominator: index of the sum of the components in the ambient lattice
    {
        WittMatrix S(R, n, n);
        int col = 0;
        for (const auto& B : bases)
            for (int j = 0; j < B.cols(); ++j, ++col)
                for (int i = 0; i < n; ++i) S.set(i, col, B.at(i, j));
        SmithResult sm = smith_normal_form(S, neff);
        if (sm.rank < n)
            throw PrecisionExhausted("component sum is degenerate at working precision");
        out2.isogeny_denominator = sm.exponents.back();
    }
    return out2;
}

Decomposition slope_decomposition(const FCrystal& X) {
    ConvexPolygon nu = newton_polygon(X);
    DistinctSlopes ds = distinct_slopes(nu);
    std::vector<std::vector<Rational>> groups;
    for (const auto& v : ds.values) groups.push_back({v});
    return decompose_by_slope_groups(X, groups);
}

}  // namespace fcx
