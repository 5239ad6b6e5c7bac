#include "fcx/linalg.hpp"

#include <algorithm>
#include <cassert>

#include "fcx/errors.hpp"

namespace fcx {

WittMatrix::WittMatrix(const WittRing& ring, int rows, int cols)
    : ring_(ring), rows_(rows), cols_(cols), e_((std::size_t)rows * cols, WittElem::zero(ring)) {
    if (rows < 0 || cols < 0) throw DomainError("InvalidParameter", "negative matrix dimension");
}

WittMatrix WittMatrix::identity(const WittRing& ring, int n) {
    WittMatrix m(ring, n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, WittElem::one(ring));
    return m;
}

WittMatrix WittMatrix::operator*(const WittMatrix& o) const {
    if (cols_ != o.rows_) throw DomainError("InvalidParameter", "matrix product shape mismatch");
    WittMatrix r(ring_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const WittElem& a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j)
                r.set(i, j, r.at(i, j) + a * o.at(k, j));
        }
    return r;
}

WittMatrix WittMatrix::operator+(const WittMatrix& o) const {
    WittMatrix r(ring_, rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
}

WittMatrix WittMatrix::operator-(const WittMatrix& o) const {
    WittMatrix r(ring_, rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
    return r;
}

bool WittMatrix::operator==(const WittMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

WittMatrix WittMatrix::sigma() const {
    WittMatrix r(ring_, rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i].sigma();
    return r;
}

WittMatrix WittMatrix::sigma_iter(int k) const {
    WittMatrix r = *this;
    k %= ring_.s();
    if (k < 0) k += ring_.s();
    for (int i = 0; i < k; ++i) r = r.sigma();
    return r;
}

WittMatrix WittMatrix::times_p_pow(int e) const {
    WittMatrix r(ring_, rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i].times_p_pow(e);
    return r;
}

WittMatrix WittMatrix::truncate(int e) const {
    WittMatrix r(ring_, rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i].truncate(e);
    return r;
}

WittMatrix WittMatrix::pow(int k) const {
    if (rows_ != cols_) throw DomainError("InvalidParameter", "pow of non-square matrix");
    WittMatrix acc = identity(ring_, rows_);
    WittMatrix base = *this;
    while (k > 0) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

WittMatrix WittMatrix::select_columns(const std::vector<int>& idx) const {
    WittMatrix r(ring_, rows_, (int)idx.size());
    for (int i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) r.set(i, (int)j, at(i, idx[j]));
    return r;
}

WittMatrix WittMatrix::select_rows(const std::vector<int>& idx) const {
    WittMatrix r(ring_, (int)idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (int j = 0; j < cols_; ++j) r.set((int)i, j, at(idx[i], j));
    return r;
}

WittMatrix WittMatrix::submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const {
    WittMatrix r(ring_, (int)rows.size(), (int)cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) r.set((int)i, (int)j, at(rows[i], cols[j]));
    return r;
}

bool WittMatrix::is_zero_mod(int e) const {
    for (const auto& x : e_)
        if (x.val() < e) return false;
    return true;
}

std::vector<WittElem> char_poly(const WittMatrix& A) {
    const int n = A.rows();
    if (n != A.cols()) throw DomainError("InvalidParameter", "char_poly of non-square matrix");
    const WittRing& R = A.ring();
    const WittElem one = WittElem::one(R);
    if (n == 0) return {one};

    // Berkowitz vectors: coefficients of det(xI - A_r), highest degree first.
    std::vector<WittElem> C = {one, -A.at(0, 0)};
    for (int r = 2; r <= n; ++r) {
        // Toeplitz column t_0..t_r for the r-th principal minor step
        std::vector<WittElem> t;
        t.reserve(r + 1);
        t.push_back(one);
        t.push_back(-A.at(r - 1, r - 1));
        // cur = S (the column above the pivot), iterate cur <- Ahat * cur
        std::vector<WittElem> cur;
        cur.reserve(r - 1);
        for (int i = 0; i < r - 1; ++i) cur.push_back(A.at(i, r - 1));
        for (int k = 2; k <= r; ++k) {
            WittElem dot = WittElem::zero(R);
            for (int i = 0; i < r - 1; ++i) dot = dot + A.at(r - 1, i) * cur[i];
            t.push_back(-dot);
            if (k < r) {
                std::vector<WittElem> nxt((std::size_t)r - 1, WittElem::zero(R));
                for (int i = 0; i < r - 1; ++i)
                    for (int j = 0; j < r - 1; ++j) nxt[i] = nxt[i] + A.at(i, j) * cur[j];
                cur = std::move(nxt);
            }
        }
        std::vector<WittElem> Cn((std::size_t)r + 1, WittElem::zero(R));
        for (int i = 0; i <= r; ++i)
            for (int j = std::max(0, i - r); j < (int)C.size() && j <= i; ++j)
                Cn[i] = Cn[i] + t[i - j] * C[j];
        C = std::move(Cn);
    }
    // highest-first -> ascending
    std::reverse(C.begin(), C.end());
    return C;
}

WittElem det(const WittMatrix& A) {
    const int n = A.rows();
    std::vector<WittElem> c = char_poly(A);
    WittElem d = c[0];
    if (n % 2 != 0) d = -d;  // det = (-1)^n * c_0
    return d;
}

WittMatrix adjugate(const WittMatrix& A) {
    const int n = A.rows();
    const WittRing& R = A.ring();
    if (n == 0) return WittMatrix(R, 0, 0);
    std::vector<WittElem> c = char_poly(A);  // ascending, c[n] = 1
    // q(x) = (char(x) - c0)/x, adj = (-1)^{n+1} q(A)
    WittMatrix acc(R, n, n);
    for (int i = 0; i < n; ++i) acc.set(i, i, c[n]);
    for (int k = n - 1; k >= 1; --k) {
        acc = acc * A;
        for (int i = 0; i < n; ++i) acc.set(i, i, acc.at(i, i) + c[k]);
    }
    if (n % 2 == 0) {
        WittMatrix neg(R, n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) neg.set(i, j, -acc.at(i, j));
        return neg;
    }
    return acc;
}

namespace {

int clamped_val(const WittElem& x, int neff) { return std::min(x.val(), neff); }

struct Transforms {
    WittMatrix u, u_inv, v, v_inv;
};

}  // namespace

SmithResult smith_normal_form(const WittMatrix& A, int neff, bool want_transforms) {
    const WittRing& R = A.ring();
    const int rows = A.rows(), cols = A.cols();
    const int k = std::min(rows, cols);
    WittMatrix M = A;
    std::optional<Transforms> T;
    if (want_transforms)
        T = Transforms{WittMatrix::identity(R, rows), WittMatrix::identity(R, rows),
                       WittMatrix::identity(R, cols), WittMatrix::identity(R, cols)};

    auto swap_rows = [&](int a, int b) {
        if (a == b) return;
        for (int j = 0; j < cols; ++j) { auto t = M.at(a, j); M.set(a, j, M.at(b, j)); M.set(b, j, t); }
        if (T) {
            for (int j = 0; j < rows; ++j) { auto t = T->u.at(a, j); T->u.set(a, j, T->u.at(b, j)); T->u.set(b, j, t); }
            for (int i = 0; i < rows; ++i) { auto t = T->u_inv.at(i, a); T->u_inv.set(i, a, T->u_inv.at(i, b)); T->u_inv.set(i, b, t); }
        }
    };
    auto swap_cols = [&](int a, int b) {
        if (a == b) return;
        for (int i = 0; i < rows; ++i) { auto t = M.at(i, a); M.set(i, a, M.at(i, b)); M.set(i, b, t); }
        if (T) {
            for (int i = 0; i < cols; ++i) { auto t = T->v.at(i, a); T->v.set(i, a, T->v.at(i, b)); T->v.set(i, b, t); }
            for (int j = 0; j < cols; ++j) { auto t = T->v_inv.at(a, j); T->v_inv.set(a, j, T->v_inv.at(b, j)); T->v_inv.set(b, j, t); }
        }
    };
    // row a *= unit u  (u_inv column a *= u^{-1})
    auto scale_row = [&](int a, const WittElem& u, const WittElem& uinv) {
        for (int j = 0; j < cols; ++j) M.set(a, j, M.at(a, j) * u);
        if (T) {
            for (int j = 0; j < rows; ++j) T->u.set(a, j, T->u.at(a, j) * u);
            for (int i = 0; i < rows; ++i) T->u_inv.set(i, a, T->u_inv.at(i, a) * uinv);
        }
    };
    // row b -= lam * row a
    auto add_row = [&](int b, int a, const WittElem& lam) {
        for (int j = 0; j < cols; ++j) M.set(b, j, M.at(b, j) - lam * M.at(a, j));
        if (T) {
            for (int j = 0; j < rows; ++j) T->u.set(b, j, T->u.at(b, j) - lam * T->u.at(a, j));
            for (int i = 0; i < rows; ++i) T->u_inv.set(i, a, T->u_inv.at(i, a) + lam * T->u_inv.at(i, b));
        }
    };
    // col b -= lam * col a
    auto add_col = [&](int b, int a, const WittElem& lam) {
        for (int i = 0; i < rows; ++i) M.set(i, b, M.at(i, b) - M.at(i, a) * lam);
        if (T) {
            for (int i = 0; i < cols; ++i) T->v.set(i, b, T->v.at(i, b) - T->v.at(i, a) * lam);
            for (int j = 0; j < cols; ++j) T->v_inv.set(a, j, T->v_inv.at(a, j) + lam * T->v_inv.at(b, j));
        }
    };

    SmithResult res;
    res.exponents.assign(k, neff);
    int step = 0;
    for (; step < k; ++step) {
        // pivot of minimal valuation in the trailing submatrix
        int bi = -1, bj = -1, bv = neff;
        for (int i = step; i < rows; ++i)
            for (int j = step; j < cols; ++j) {
                int v = clamped_val(M.at(i, j), neff);
                if (v < bv) { bv = v; bi = i; bj = j; }
            }
        if (bi < 0) break;  // everything left vanishes mod p^neff
        swap_rows(step, bi);
        swap_cols(step, bj);
        // normalize pivot to exactly p^e
        const int e = bv;
        WittElem unit = M.at(step, step).divide_p_pow(e);
        WittElem uinv = unit.inverse();
        scale_row(step, uinv, unit);
        // force the canonical representative (kill digits above neff-e junk)
        {
            WittElem pe = WittElem::one(R).times_p_pow(e);
            M.set(step, step, pe);
        }
        for (int i = step + 1; i < rows; ++i) {
            const WittElem& x = M.at(i, step);
            if (clamped_val(x, neff) >= neff) { M.set(i, step, WittElem::zero(R)); continue; }
            add_row(i, step, x.divide_p_pow(e));
        }
        for (int j = step + 1; j < cols; ++j) {
            const WittElem& x = M.at(step, j);
            if (clamped_val(x, neff) >= neff) { M.set(step, j, WittElem::zero(R)); continue; }
            add_col(j, step, x.divide_p_pow(e));
        }
        res.exponents[step] = e;
    }
    res.rank = step;
    if (T) {
        res.u = std::move(T->u);
        res.u_inv = std::move(T->u_inv);
        res.v = std::move(T->v);
        res.v_inv = std::move(T->v_inv);
    }
    return res;
}

WittMatrix saturated_column_basis(const WittMatrix& A, int neff) {
    SmithResult s = smith_normal_form(A, neff, true);
    std::vector<int> idx(s.rank);
    for (int i = 0; i < s.rank; ++i) idx[i] = i;
    return s.u_inv->select_columns(idx);
}

std::optional<WittMatrix> solve_exact(const WittMatrix& A, const WittMatrix& B, int neff) {
    if (A.rows() != B.rows()) throw DomainError("InvalidParameter", "solve shape mismatch");
    SmithResult s = smith_normal_form(A, neff, true);
    if (s.rank < A.cols()) return std::nullopt;  // not full column rank at this precision
    // A = u_inv D v_inv, so D (v_inv X) = u B; divide the top rows, the rest must vanish.
    WittMatrix UB = (*s.u) * B;
    WittMatrix Y(A.ring(), A.cols(), B.cols());
    for (int i = 0; i < A.cols(); ++i) {
        int e = s.exponents[i];
        for (int j = 0; j < B.cols(); ++j) {
            const WittElem& b = UB.at(i, j);
            if (b.val() < e) return std::nullopt;
            Y.set(i, j, b.val() >= neff ? WittElem::zero(A.ring()) : b.divide_p_pow(e));
        }
    }
    for (int i = A.cols(); i < A.rows(); ++i)
        for (int j = 0; j < B.cols(); ++j)
            if (UB.at(i, j).val() < neff) return std::nullopt;  // inconsistent
    return (*s.v) * Y;
}

WittMatrix inverse_unimodular(const WittMatrix& A, int neff) {
    if (A.rows() != A.cols()) throw DomainError("InvalidParameter", "inverse of non-square matrix");
    if (det(A).val() != 0)
        throw not_invertible("matrix determinant is not a unit");
    auto X = solve_exact(A, WittMatrix::identity(A.ring(), A.rows()), neff);
    if (!X) throw not_invertible("unit-determinant solve failed unexpectedly");
    return *X;
}

HermiteResult hermite_column_form(const WittMatrix& A, int neff) {
    const int n = A.rows();
    if (n != A.cols()) throw DomainError("InvalidParameter", "hermite form of non-square matrix");
    const WittRing& R = A.ring();
    WittMatrix H = A;
    std::vector<int> exps(n, 0);
    int loss = 0;

    for (int i = 0; i < n; ++i) {
        int bj = -1, bv = neff;
        for (int j = i; j < n; ++j) {
            int v = clamped_val(H.at(i, j), neff);
            if (v < bv) { bv = v; bj = j; }
        }
        if (bj < 0) throw PrecisionExhausted("hermite form: no pivot in row " + std::to_string(i));
        for (int r = 0; r < n; ++r) { auto t = H.at(r, i); H.set(r, i, H.at(r, bj)); H.set(r, bj, t); }
        const int e = bv;
        WittElem unit = H.at(i, i).divide_p_pow(e);
        WittElem uinv = unit.inverse();
        for (int r = 0; r < n; ++r) H.set(r, i, H.at(r, i) * uinv);
        H.set(i, i, WittElem::one(R).times_p_pow(e));
        for (int j = i + 1; j < n; ++j) {
            const WittElem& x = H.at(i, j);
            if (clamped_val(x, neff) >= neff) { H.set(i, j, WittElem::zero(R)); continue; }
            WittElem lam = x.divide_p_pow(e);
            for (int r = 0; r < n; ++r) H.set(r, j, H.at(r, j) - lam * H.at(r, i));
            H.set(i, j, WittElem::zero(R));
        }
        exps[i] = e;
        loss += e;
    }
    // reduce below-diagonal entries mod the pivot of their own row
    for (int j = 0; j < n; ++j) {
        for (int i = j + 1; i < n; ++i) {
            // quotient of H[i][j] by p^{exps[i]}, discarding the remainder
            const WittElem& x = H.at(i, j);
            WittElem rem = x.truncate(exps[i]);
            WittElem q = (x - rem).divide_p_pow(exps[i]);
            if (q.is_zero()) continue;
            for (int r = 0; r < n; ++r) H.set(r, j, H.at(r, j) - q * H.at(r, i));
        }
    }
    return HermiteResult{std::move(H), std::move(exps), loss};
}

}  // namespace fcx
