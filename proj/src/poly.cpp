#include "fcx/poly.hpp"

#include <algorithm>
#include <cassert>

#include "fcx/errors.hpp"

namespace fcx {

bool PolyW::is_monic() const {
    if (c_.empty()) return false;
    return c_.back() == WittElem::one(ring_);
}

PolyW PolyW::operator+(const PolyW& o) const {
    std::vector<WittElem> r(std::max(c_.size(), o.c_.size()), WittElem::zero(ring_));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = r[i] + c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] = r[i] + o.c_[i];
    return PolyW(ring_, std::move(r));
}

PolyW PolyW::operator-(const PolyW& o) const {
    std::vector<WittElem> r(std::max(c_.size(), o.c_.size()), WittElem::zero(ring_));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = r[i] + c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] = r[i] - o.c_[i];
    return PolyW(ring_, std::move(r));
}

PolyW PolyW::operator*(const PolyW& o) const {
    if (c_.empty() || o.c_.empty()) return PolyW(ring_);
    std::vector<WittElem> r(c_.size() + o.c_.size() - 1, WittElem::zero(ring_));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
    }
    return PolyW(ring_, std::move(r));
}

std::pair<PolyW, PolyW> PolyW::divmod_monic(const PolyW& d) const {
    if (!d.is_monic()) throw DomainError("InvalidParameter", "divmod by non-monic polynomial");
    const int dd = d.degree();
    std::vector<WittElem> rem = c_;
    if ((int)rem.size() - 1 < dd) return {PolyW(ring_), PolyW(ring_, std::move(rem))};
    std::vector<WittElem> quo(rem.size() - dd, WittElem::zero(ring_));
    for (int k = (int)rem.size() - 1; k >= dd; --k) {
        WittElem lead = rem[k];
        if (lead.is_zero()) continue;
        quo[k - dd] = lead;
        for (int i = 0; i <= dd; ++i) rem[k - dd + i] = rem[k - dd + i] - lead * d.coeff(i);
    }
    rem.resize(dd > 0 ? dd : 1, WittElem::zero(ring_));
    return {PolyW(ring_, std::move(quo)), PolyW(ring_, std::move(rem))};
}

WittMatrix PolyW::eval(const WittMatrix& A) const {
    const int n = A.rows();
    WittMatrix acc(ring_, n, n);
    if (c_.empty()) return acc;
    for (int i = 0; i < n; ++i) acc.set(i, i, c_.back());
    for (int k = (int)c_.size() - 2; k >= 0; --k) {
        acc = acc * A;
        for (int i = 0; i < n; ++i) acc.set(i, i, acc.at(i, i) + c_[k]);
    }
    return acc;
}

PolyW PolyW::scale_down(int a) const {
    const int n = degree();
    std::vector<WittElem> r(c_.size(), WittElem::zero(ring_));
    for (int i = 0; i <= n; ++i) {
        int need = a * (n - i);
        if (c_[i].val() < need)
            throw PrecisionExhausted("scale_down: coefficient valuation below hull");
        r[i] = need >= ring_.precision() ? WittElem::zero(ring_) : c_[i].divide_p_pow(need);
    }
    return PolyW(ring_, std::move(r));
}

PolyW PolyW::scale_up(int a) const {
    const int n = degree();
    std::vector<WittElem> r(c_.size(), WittElem::zero(ring_));
    for (int i = 0; i <= n; ++i) r[i] = c_[i].times_p_pow(a * (n - i));
    return PolyW(ring_, std::move(r));
}

std::vector<int> PolyW::coeff_valuations(int neff) const {
    std::vector<int> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = std::min(c_[i].val(), neff);
    return v;
}

std::vector<std::pair<Rational, int>> certified_root_valuations(
    const std::vector<int>& coeff_vals, int neff) {
    const int n = (int)coeff_vals.size() - 1;
    if (n < 0) throw DomainError("InvalidParameter", "empty polynomial");
    if (coeff_vals[n] != 0)
        throw DomainError("InvalidParameter", "certified_root_valuations requires a monic input");
    if (n == 0) return {};
    if (coeff_vals[0] >= neff)
        throw PrecisionExhausted("constant coefficient vanishes mod p^" + std::to_string(neff));

    // lower convex hull of the determined points (monotone chain)
    std::vector<std::pair<long long, long long>> pts;
    for (int i = 0; i <= n; ++i)
        if (coeff_vals[i] < neff) pts.emplace_back(i, coeff_vals[i]);
    std::vector<std::pair<long long, long long>> hull;
    for (const auto& q : pts) {
        while (hull.size() >= 2) {
            auto& a = hull[hull.size() - 2];
            auto& b = hull[hull.size() - 1];
            // keep b only if it turns left (strictly below the chord a-q)
            __int128 cross = (__int128)(b.first - a.first) * (q.second - a.second) -
                             (__int128)(b.second - a.second) * (q.first - a.first);
            if (cross <= 0)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(q);
    }
    // undetermined coefficients must lie strictly above the hull
    auto hull_y = [&](int x) -> Rational {
        for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
            if (x >= hull[k].first && x <= hull[k + 1].first) {
                long long x1 = hull[k].first, y1 = hull[k].second;
                long long x2 = hull[k + 1].first, y2 = hull[k + 1].second;
                return Rational(y1) + Rational(y2 - y1, x2 - x1) * Rational(x - x1);
            }
        }
        return Rational(0);
    };
    for (int i = 0; i <= n; ++i) {
        if (coeff_vals[i] < neff) continue;
        if (i < hull.front().first || i > hull.back().first) continue;
        if (Rational(neff) <= hull_y(i))
            throw PrecisionExhausted("coefficient of x^" + std::to_string(i) +
                                     " is undetermined on or below the Newton hull");
    }
    std::vector<std::pair<Rational, int>> out;
    for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
        long long dx = hull[k + 1].first - hull[k].first;
        long long dy = hull[k].second - hull[k + 1].second;
        out.emplace_back(Rational(dy, dx), (int)dx);
    }
    std::reverse(out.begin(), out.end());  // ascending root valuation
    return out;
}

namespace {

// power-series inverse of u mod (p, x^m); u(0) must be a unit
PolyW series_inverse_mod_p(const PolyW& u, int m) {
    const WittRing& R = u.ring();
    std::vector<WittElem> inv((std::size_t)m, WittElem::zero(R));
    WittElem u0inv = u.coeff(0).inverse().truncate(1);
    inv[0] = u0inv;
    for (int k = 1; k < m; ++k) {
        WittElem acc = WittElem::zero(R);
        for (int j = 1; j <= k && j <= u.degree(); ++j)
            acc = acc + u.coeff(j).truncate(1) * inv[k - j];
        inv[k] = (-(u0inv * acc)).truncate(1);
    }
    return PolyW(R, std::move(inv));
}

PolyW reduce_mod_p(const PolyW& f) {
    std::vector<WittElem> c;
    c.reserve(f.degree() + 1);
    for (int i = 0; i <= f.degree(); ++i) c.push_back(f.coeff(i).truncate(1));
    return PolyW(f.ring(), std::move(c));
}

// chi monic with chi mod p = x^m * (unit series). Returns the monic factor F
// with F = x^m mod p (roots of positive valuation) and the unit-root factor
// U = chi / F. Requires 0 < m <= deg chi.
std::pair<PolyW, PolyW> hensel_split_at_zero(const PolyW& chi, int neff) {
    const WittRing& R = chi.ring();
    const int n = chi.degree();
    PolyW cbar = reduce_mod_p(chi);
    int m = -1;
    for (int i = 0; i <= n; ++i)
        if (!cbar.coeff(i).is_zero()) { m = i; break; }
    if (m < 0) throw PrecisionExhausted("polynomial vanishes mod p, cannot split");
    if (m == 0 || m > n) throw DomainError("InvalidParameter", "hensel_split_at_zero: nothing to split");
    if (m == n) {
        // no unit part: F = chi, U = 1
        return {chi, PolyW(R, {WittElem::one(R)})};
    }

    // h = x^m, g = the unit series (chi/x^m mod p); h stays monic of degree m
    std::vector<WittElem> hc((std::size_t)m + 1, WittElem::zero(R));
    hc[m] = WittElem::one(R);
    PolyW h(R, std::move(hc));
    std::vector<WittElem> gc;
    for (int i = m; i <= n; ++i) gc.push_back(cbar.coeff(i));
    PolyW g(R, std::move(gc));

    // Bezout mod p: S*g + T*h = 1 with deg S < deg h = m
    PolyW S = series_inverse_mod_p(g, m);
    PolyW T(R, {WittElem::zero(R)});
    {
        PolyW one(R, {WittElem::one(R)});
        PolyW rem = one - reduce_mod_p(S * g);  // divisible by x^m mod p
        std::vector<WittElem> tc;
        for (int i = m; i <= rem.degree(); ++i) tc.push_back(rem.coeff(i).truncate(1));
        if (!tc.empty()) T = PolyW(R, std::move(tc));
    }
    // Quadratic lifting: the congruences chi = g*h and S*g + T*h = 1 hold
    // mod p^(2^round). Only h needs degree control (deg r < m keeps it); the
    // cofactors may carry coefficients that are junk above the certified
    // precision, which the final exact division filters out.
    int rounds = 1;
    while ((1 << rounds) < neff && rounds < 30) ++rounds;
    rounds += 1;
    for (int it = 0; it < rounds; ++it) {
        PolyW e = chi - g * h;
        auto [q, r] = (S * e).divmod_monic(h);
        PolyW g1 = g + T * e + q * g;
        PolyW h1 = h + r;
        PolyW b = S * g1 + T * h1 - PolyW(R, {WittElem::one(R)});
        auto [c, d] = (S * b).divmod_monic(h1);
        PolyW S1 = S - d;
        PolyW T1 = T - T * b - c * g1;
        g = std::move(g1);
        h = std::move(h1);
        S = std::move(S1);
        T = std::move(T1);
    }
    // h is the certified monic factor; derive the unit part by exact division
    auto [U, rem] = chi.divmod_monic(h);
    for (int i = 0; i <= rem.degree(); ++i)
        if (rem.coeff(i).val() < neff)
            throw PrecisionExhausted("Hensel factorization failed to converge at this precision");
    // normalize U monic exactly (its lead is 1 up to the precision junk)
    if (!(U.coeff(U.degree()) == WittElem::one(R))) {
        WittElem lead = U.coeff(U.degree());
        if (lead.val() != 0) throw PrecisionExhausted("unit factor lost its leading coefficient");
        WittElem li = lead.inverse();
        std::vector<WittElem> uc;
        for (int i = 0; i <= U.degree(); ++i) uc.push_back(U.coeff(i) * li);
        uc.back() = WittElem::one(R);
        U = PolyW(R, std::move(uc));
    }
    return {h, U};
}

}  // namespace

SlopeSplit split_by_integer_valuations(const PolyW& chi_in, int neff) {
    SlopeSplit out;
    PolyW chi = chi_in;
    while (true) {
        const int n = chi.degree();
        if (n <= 0) break;
        auto vals = certified_root_valuations(chi.coeff_valuations(neff), neff);
        for (auto& [lam, mult] : vals)
            if (!lam.is_integer())
                throw not_separable("expected integer root valuations, found " + lam.str());
        if (vals.size() == 1) {
            out.factors.emplace_back((int)vals[0].first.num(), chi);
            break;
        }
        const int a = (int)vals[0].first.num();
        PolyW scaled = chi.scale_down(a);
        if (a > 0) {
            neff -= a * n;
            if (neff < 2) throw PrecisionExhausted("slope scaling exhausted the precision budget");
        }
        auto [h, U] = hensel_split_at_zero(scaled, neff);
        out.factors.emplace_back(a, U.scale_up(a));
        chi = h.scale_up(a);
    }
    out.neff_out = neff;
    return out;
}

}  // namespace fcx
