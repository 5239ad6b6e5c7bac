#pragma once

#include <optional>
#include <vector>

#include "fcx/witt.hpp"

namespace fcx {

// Dense matrix over a WittRing, row-major. Value type; all entries share
// the ring descriptor.
class WittMatrix {
public:
    WittMatrix(const WittRing& ring, int rows, int cols);  // zero matrix
    static WittMatrix identity(const WittRing& ring, int n);

    const WittRing& ring() const { return ring_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const WittElem& at(int r, int c) const { return e_[(std::size_t)r * cols_ + c]; }
    void set(int r, int c, WittElem v) { e_[(std::size_t)r * cols_ + c] = std::move(v); }

    WittMatrix operator*(const WittMatrix& o) const;
    WittMatrix operator+(const WittMatrix& o) const;
    WittMatrix operator-(const WittMatrix& o) const;
    bool operator==(const WittMatrix& o) const;

    WittMatrix sigma() const;          // entrywise Frobenius
    WittMatrix sigma_iter(int k) const;
    WittMatrix times_p_pow(int e) const;
    WittMatrix truncate(int e) const;  // entrywise mod p^e
    WittMatrix pow(int k) const;       // square matrices

    // Columns picked out as an n x k submatrix.
    WittMatrix select_columns(const std::vector<int>& idx) const;
    WittMatrix select_rows(const std::vector<int>& idx) const;
    WittMatrix submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const;

    bool is_zero_mod(int e) const;  // all entries have val >= e

private:
    WittRing ring_;
    int rows_, cols_;
    std::vector<WittElem> e_;
};

// Characteristic polynomial det(xI - A) by the Berkowitz algorithm
// (division free). Returned coefficients are ascending in degree:
// c[0] + c[1] x + ... + c[n] x^n with c[n] = 1.
std::vector<WittElem> char_poly(const WittMatrix& A);

// det(A) = (-1)^n * c[0] of the characteristic polynomial.
WittElem det(const WittMatrix& A);

// adj(A) with adj(A) * A = det(A) * I, computed division free from the
// characteristic polynomial.
WittMatrix adjugate(const WittMatrix& A);

// Smith normal form over the local ring at working precision neff:
// U * A * V = D with U, V products of unit-determinant elementary
// operations and D diagonal with entries p^{e_i}, e_i nondecreasing.
// Exponents reported as neff mean "at least neff" (undetermined).
struct SmithResult {
    std::vector<int> exponents;  // length min(rows, cols), nondecreasing
    int rank = 0;                // number of exponents < neff
    // Present when requested: A = u_inv * D * v_inv.
    std::optional<WittMatrix> u, u_inv, v, v_inv;
};

SmithResult smith_normal_form(const WittMatrix& A, int neff, bool want_transforms = false);

// Basis of the saturation of the column span of A: an rows x rank matrix
// whose columns extend to a basis of the ambient lattice (unit elementary
// divisors).
WittMatrix saturated_column_basis(const WittMatrix& A, int neff);

// Exact solve A X = B over the ring at precision neff, where A has full
// column rank. Fails (nullopt) when no solution exists mod p^neff.
std::optional<WittMatrix> solve_exact(const WittMatrix& A, const WittMatrix& B, int neff);

// Inverse of a matrix with unit determinant (exact, no precision loss).
WittMatrix inverse_unimodular(const WittMatrix& A, int neff);

// Canonical lower-triangular column Hermite form of an invertible matrix
// over the ring: H[j][j] = p^{a_j}, entries below a diagonal reduced mod the
// pivot of their own row. Right-multiplication by GL_n(W) leaves it fixed.
struct HermiteResult {
    WittMatrix H;
    std::vector<int> pivot_exponents;
    int precision_loss = 0;  // digits consumed by pivot divisions
};

HermiteResult hermite_column_form(const WittMatrix& A, int neff);

}  // namespace fcx
