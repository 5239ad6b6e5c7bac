#include "fcx/eltype.hpp"

#include <algorithm>
#include <numeric>

#include "fcx/errors.hpp"

namespace fcx {

std::vector<int> ELStructure::rows_of_grade(int i) const {
    std::vector<int> out;
    for (int r = 0; r < crystal.n; ++r)
        if (grading[r] == i) out.push_back(r);
    return out;
}

ELStructure el_validate(const FCrystal& X, int m, std::vector<int> grading) {
    if (m < 1) throw DomainError("InvalidParameter", "m must be >= 1");
    if (X.ring.s() % m != 0)
        throw degree_mismatch("degree m = " + std::to_string(m) +
                              " does not divide s = " + std::to_string(X.ring.s()));
    if ((int)grading.size() != X.n)
        throw invalid_grading("grading length differs from the rank");
    if (X.n % m != 0)
        throw invalid_grading("rank is not divisible by m");
    for (int g : grading)
        if (g < 0 || g >= m) throw invalid_grading("grading value out of range [0, m)");

    // equal piece ranks
    std::vector<int> count(m, 0);
    for (int g : grading) count[g]++;
    for (int i = 0; i < m; ++i)
        if (count[i] != X.n / m)
            throw invalid_grading("graded piece " + std::to_string(i) + " has rank " +
                                  std::to_string(count[i]) + ", expected " +
                                  std::to_string(X.n / m));

    // block condition: F maps M_i into M_{i+1}
    const int neff = X.effective_precision;
    for (int c = 0; c < X.n; ++c)
        for (int r = 0; r < X.n; ++r) {
            if (grading[r] == (grading[c] + 1) % m) continue;
            if (X.b.at(r, c).val() < neff)
                throw invalid_grading("entry (" + std::to_string(r) + "," + std::to_string(c) +
                                      ") violates the grade-shift block condition");
        }

    return ELStructure{X, m, std::move(grading)};
}

ELType el_type(const ELStructure& S) {
    const int d = S.piece_rank();
    ELType t;
    t.d = d;
    t.f.resize(S.m);
    for (int i = 0; i < S.m; ++i) {
        int prev = (i - 1 + S.m) % S.m;
        WittMatrix block = S.crystal.b.submatrix(S.rows_of_grade(i), S.rows_of_grade(prev));
        // corank mod p = number of elementary divisors with exponent >= 1
        SmithResult sm = smith_normal_form(block, 1);
        t.f[i] = d - sm.rank;
    }
    return t;
}

ConvexPolygon el_newton(const ELStructure& S) {
    ConvexPolygon plain = newton_polygon(S.crystal);
    std::vector<Rational> out;
    std::size_t i = 0;
    while (i < plain.height()) {
        std::size_t j = i;
        while (j < plain.height() && plain.slope(j) == plain.slope(i)) ++j;
        const std::size_t mult = j - i;
        if (mult % (std::size_t)S.m != 0)
            throw multiplicity_violation("slope " + plain.slope(i).str() + " has multiplicity " +
                                         std::to_string(mult) + " not divisible by m = " +
                                         std::to_string(S.m));
        for (std::size_t k = 0; k < mult / S.m; ++k) out.push_back(plain.slope(i));
        i = j;
    }
    return ConvexPolygon::from_slopes(std::move(out));
}

ConvexPolygon el_sigma_hodge(const ELType& t) {
    const int m = t.m();
    std::vector<Rational> slopes;
    slopes.reserve(t.d);
    for (int j = 1; j <= t.d; ++j) {
        int cnt = 0;
        for (int i = 0; i < m; ++i)
            if (t.f[i] > t.d - j) ++cnt;
        slopes.emplace_back(cnt, m);
    }
    return ConvexPolygon::from_slopes(std::move(slopes));
}

ConvexPolygon el_sigma_hodge_of(const ELStructure& S) {
    if (S.m == 1) return hodge_polygon(S.crystal);
    // the type formula presumes minuscule blocks
    for (int i = 0; i < S.m; ++i) {
        int prev = (i - 1 + S.m) % S.m;
        WittMatrix block = S.crystal.b.submatrix(S.rows_of_grade(i), S.rows_of_grade(prev));
        SmithResult sm = smith_normal_form(block, S.crystal.effective_precision);
        if (sm.rank < S.piece_rank())
            throw PrecisionExhausted("block elementary divisors undetermined");
        if (sm.exponents.back() > 1)
            throw DomainError("CrystalBoundViolation",
                              "sigma-invariant Hodge polygon from the type requires minuscule blocks");
    }
    return el_sigma_hodge(el_type(S));
}

bool is_mu_ordinary(const ELStructure& S) {
    return el_newton(S) == el_sigma_hodge_of(S);
}

namespace {

// All nondecreasing slope vectors extending `acc` to height d with total
// rise `target`, slopes drawn from `pool` (ascending), staying above mu-bar
// partial sums. Appends complete candidates to out.
void enumerate_rec(const std::vector<Rational>& pool, std::size_t pool_from,
                   std::vector<Rational>& acc, const Rational& acc_sum, int d,
                   const ConvexPolygon& mu_bar, const Rational& target,
                   std::vector<std::vector<Rational>>& out) {
    const int l = (int)acc.size();
    if (l == d) {
        if (acc_sum == target) out.push_back(acc);
        return;
    }
    const int remaining = d - l;
    for (std::size_t k = pool_from; k < pool.size(); ++k) {
        const Rational& r = pool[k];
        Rational s1 = acc_sum + r;
        // partial sums must dominate mu-bar's
        if (s1 < mu_bar.partial_sum(l + 1)) continue;
        // nondecreasing tail cannot overshoot/undershoot the target rise
        Rational min_tail = s1 + r * Rational(remaining - 1);
        if (min_tail > target) break;  // pool ascending: all later slopes worse
        acc.push_back(r);
        enumerate_rec(pool, k, acc, s1, d, mu_bar, target, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<ConvexPolygon> b_set(const ELType& t) {
    const int d = t.d;
    const int m = t.m();
    if ((long long)d * m > 12)
        throw BudgetExceeded("b_set: d*m = " + std::to_string((long long)d * m) +
                             " exceeds the enumeration budget 12");
    ConvexPolygon mu_bar = el_sigma_hodge(t);
    const Rational target = mu_bar.total_rise();

    // candidate slopes: rationals in [mu_bar_1, mu_bar_d] with denominator
    // q <= d*m; the denominator law kills anything larger since a slope of
    // reduced denominator q needs m * mult divisible by q and m * mult <= d*m
    const Rational lo = mu_bar.slope(0);
    const Rational hi = mu_bar.slope(d - 1);
    std::vector<Rational> pool;
    for (int q = 1; q <= d * m; ++q)
        for (std::int64_t a = 0;; ++a) {
            Rational r(a, q);
            if (r < lo) continue;
            if (r > hi) break;
            if (r.den() == q) pool.push_back(r);
        }
    std::sort(pool.begin(), pool.end());

    std::vector<std::vector<Rational>> raw;
    std::vector<Rational> acc;
    enumerate_rec(pool, 0, acc, Rational(0), d, mu_bar, target, raw);

    std::vector<ConvexPolygon> out;
    for (auto& slopes : raw) {
        ConvexPolygon nu = ConvexPolygon::from_slopes(slopes);
        // Manin denominator law on the underlying height-(d*m) polygon
        bool ok = true;
        std::size_t i = 0;
        while (i < nu.height()) {
            std::size_t j = i;
            while (j < nu.height() && nu.slope(j) == nu.slope(i)) ++j;
            std::int64_t mult_m = (std::int64_t)(j - i) * m;
            if (mult_m % nu.slope(i).den() != 0) { ok = false; break; }
            i = j;
        }
        if (ok) out.push_back(std::move(nu));
    }

    // mu-bar first (smallest partial sums), then ascending lexicographically
    std::sort(out.begin(), out.end(), [](const ConvexPolygon& a, const ConvexPolygon& b) {
        for (std::size_t l = 1; l <= a.height(); ++l) {
            Rational sa = a.partial_sum(l), sb = b.partial_sum(l);
            if (sa != sb) return sa < sb;
        }
        return false;
    });
    return out;
}

}  // namespace fcx
