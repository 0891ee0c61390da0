#pragma once

// Dense matrices over F_p with exact Gaussian elimination.  Everything is
// value-semantic; a matrix knows its modulus and mixed-modulus arithmetic is a
// logic error.  Zero-row and zero-column matrices are legal everywhere: reps of
// quivers produce them constantly, so the edge cases are load-bearing.

#include "fp.hpp"

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace torsmut {

struct Mat {
    int rows = 0;
    int cols = 0;
    u32 p = 2;
    std::vector<u32> a;  // row-major, entries reduced mod p

    Mat() = default;
    Mat(int r, int c, u32 mod) : rows(r), cols(c), p(mod), a(static_cast<size_t>(r) * c, 0) {}

    static Mat zero(int r, int c, u32 p) { return Mat(r, c, p); }
    static Mat identity(int n, u32 p) {
        Mat m(n, n, p);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1 % p;
        return m;
    }
    static Mat from_rows(std::initializer_list<std::initializer_list<int>> rws, u32 p) {
        int r = static_cast<int>(rws.size());
        int c = r ? static_cast<int>(rws.begin()->size()) : 0;
        Mat m(r, c, p);
        int i = 0;
        for (auto& row : rws) {
            int j = 0;
            for (int v : row) m.at(i, j++) = static_cast<u32>(((v % static_cast<int>(p)) + p) % p);
            ++i;
        }
        return m;
    }

    u32& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    u32 at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    bool is_zero() const {
        return std::all_of(a.begin(), a.end(), [](u32 x) { return x == 0; });
    }
    bool operator==(const Mat& o) const {
        return rows == o.rows && cols == o.cols && p == o.p && a == o.a;
    }
    bool operator!=(const Mat& o) const { return !(*this == o); }
};

inline void check_same_p(const Mat& x, const Mat& y) {
    if (x.p != y.p) throw std::logic_error("matrix modulus mismatch");
}

inline Mat mat_add(const Mat& x, const Mat& y) {
    check_same_p(x, y);
    if (x.rows != y.rows || x.cols != y.cols) throw std::logic_error("mat_add: shape mismatch");
    Mat r = x;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = fp_add(r.a[i], y.a[i], r.p);
    return r;
}

inline Mat mat_sub(const Mat& x, const Mat& y) {
    check_same_p(x, y);
    if (x.rows != y.rows || x.cols != y.cols) throw std::logic_error("mat_sub: shape mismatch");
    Mat r = x;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = fp_sub(r.a[i], y.a[i], r.p);
    return r;
}

inline Mat mat_scale(const Mat& x, u32 c) {
    Mat r = x;
    for (auto& v : r.a) v = fp_mul(v, c, r.p);
    return r;
}

inline Mat mat_mul(const Mat& x, const Mat& y) {
    check_same_p(x, y);
    if (x.cols != y.rows) throw std::logic_error("mat_mul: shape mismatch");
    Mat r(x.rows, y.cols, x.p);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            u32 v = x.at(i, k);
            if (!v) continue;
            for (int j = 0; j < y.cols; ++j)
                r.at(i, j) = static_cast<u32>((r.at(i, j) + static_cast<u64>(v) * y.at(k, j)) % r.p);
        }
    return r;
}

inline Mat mat_transpose(const Mat& x) {
    Mat r(x.cols, x.rows, x.p);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j) r.at(j, i) = x.at(i, j);
    return r;
}

inline Mat hstack(const Mat& x, const Mat& y) {
    check_same_p(x, y);
    if (x.rows != y.rows) throw std::logic_error("hstack: row mismatch");
    Mat r(x.rows, x.cols + y.cols, x.p);
    for (int i = 0; i < x.rows; ++i) {
        for (int j = 0; j < x.cols; ++j) r.at(i, j) = x.at(i, j);
        for (int j = 0; j < y.cols; ++j) r.at(i, x.cols + j) = y.at(i, j);
    }
    return r;
}

inline Mat vstack(const Mat& x, const Mat& y) {
    check_same_p(x, y);
    if (x.cols != y.cols) throw std::logic_error("vstack: col mismatch");
    Mat r(x.rows + y.rows, x.cols, x.p);
    std::copy(x.a.begin(), x.a.end(), r.a.begin());
    std::copy(y.a.begin(), y.a.end(), r.a.begin() + x.a.size());
    return r;
}

inline Mat take_cols(const Mat& x, const std::vector<int>& idx) {
    Mat r(x.rows, static_cast<int>(idx.size()), x.p);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < r.cols; ++j) r.at(i, j) = x.at(i, idx[j]);
    return r;
}

struct RrefResult {
    Mat m;                    // reduced row echelon form
    std::vector<int> pivots;  // pivot column per pivot row, strictly increasing
};

// Row reduce in place over F_p: pivots normalized to 1, cleared above and below.
inline RrefResult rref(Mat m) {
    std::vector<int> pivots;
    int pr = 0;
    for (int c = 0; c < m.cols && pr < m.rows; ++c) {
        int sel = -1;
        for (int r = pr; r < m.rows; ++r)
            if (m.at(r, c) != 0) { sel = r; break; }
        if (sel < 0) continue;
        if (sel != pr)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(pr, j));
        u32 inv = fp_inv(m.at(pr, c), m.p);
        for (int j = 0; j < m.cols; ++j) m.at(pr, j) = fp_mul(m.at(pr, j), inv, m.p);
        for (int r = 0; r < m.rows; ++r) {
            if (r == pr) continue;
            u32 f = m.at(r, c);
            if (!f) continue;
            for (int j = 0; j < m.cols; ++j)
                m.at(r, j) = fp_sub(m.at(r, j), fp_mul(f, m.at(pr, j), m.p), m.p);
        }
        pivots.push_back(c);
        ++pr;
    }
    return {std::move(m), std::move(pivots)};
}

inline int rank(const Mat& m) { return static_cast<int>(rref(m).pivots.size()); }

// Basis of the right null space, one column per free variable, free variable
// set to 1 and the others to 0.  Columns ordered by increasing free column.
inline Mat kernel_basis(const Mat& m) {
    RrefResult rr = rref(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (int c : rr.pivots) is_pivot[c] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < m.cols; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Mat k(m.cols, static_cast<int>(free_cols.size()), m.p);
    for (int j = 0; j < k.cols; ++j) {
        int fc = free_cols[j];
        k.at(fc, j) = 1 % m.p;
        for (size_t i = 0; i < rr.pivots.size(); ++i)
            k.at(rr.pivots[i], j) = fp_neg(rr.m.at(static_cast<int>(i), fc), m.p);
    }
    return k;
}

// One solution of A x = b with every free variable set to 0, or nullopt when
// the system is inconsistent.  b may have several columns; they are solved
// simultaneously (same A).
inline std::optional<Mat> solve(const Mat& A, const Mat& b) {
    check_same_p(A, b);
    if (A.rows != b.rows) throw std::logic_error("solve: shape mismatch");
    RrefResult rr = rref(hstack(A, b));
    // Any pivot landing in the augmented block marks an inconsistent column.
    for (int c : rr.pivots)
        if (c >= A.cols) return std::nullopt;
    Mat x(A.cols, b.cols, A.p);
    for (size_t i = 0; i < rr.pivots.size(); ++i)
        for (int j = 0; j < b.cols; ++j)
            x.at(rr.pivots[i], j) = rr.m.at(static_cast<int>(i), A.cols + j);
    return x;
}

inline bool is_invertible(const Mat& m) {
    return m.rows == m.cols && rank(m) == m.rows;
}

inline Mat mat_inverse(const Mat& m) {
    if (!is_invertible(m)) throw std::logic_error("mat_inverse: singular");
    auto x = solve(m, Mat::identity(m.rows, m.p));
    return *x;
}

// Canonical basis of the column space: rref the transpose and keep nonzero
// rows, transposed back.  Two matrices span the same column space iff this
// agrees entrywise.
inline Mat colspace_basis(const Mat& m) {
    RrefResult rr = rref(mat_transpose(m));
    int r = static_cast<int>(rr.pivots.size());
    Mat b(m.rows, r, m.p);
    for (int j = 0; j < r; ++j)
        for (int i = 0; i < m.rows; ++i) b.at(i, j) = rr.m.at(j, i);
    return b;
}

// span(A) contains every column of B.
inline bool colspace_contains(const Mat& A, const Mat& B) {
    check_same_p(A, B);
    if (A.rows != B.rows) throw std::logic_error("colspace_contains: row mismatch");
    return rank(A) == rank(hstack(A, B));
}

constexpr u64 kSubspaceCap = u64(1) << 20;  // total enumerated vectors

// Number of k-dimensional subspaces of F_p^n (Gaussian binomial), with an
// overflow/cap guard.
inline u64 gaussian_binomial(int n, int k, u32 p, u64 cap = kSubspaceCap) {
    if (k < 0 || k > n) return 0;
    // G(n,k) = G(n-1,k-1) + p^k G(n-1,k)
    std::vector<u64> row(static_cast<size_t>(k) + 1, 0);
    row[0] = 1;
    for (int i = 1; i <= n; ++i) {
        for (int j = std::min(i, k); j >= 1; --j) {
            u64 pk = 1;
            for (int t = 0; t < j; ++t) {
                pk *= p;
                if (pk > cap * 2) throw std::runtime_error("cap exceeded");
            }
            row[j] = row[j - 1] + pk * row[j];
            if (row[j] > cap * 2) throw std::runtime_error("cap exceeded");
        }
    }
    return row[k];
}

// All k-dimensional subspaces of F_p^dim, each returned as a dim x k matrix
// whose columns are the canonical basis: the transpose is in rref.  Order is
// deterministic (pivot sets lexicographic, then free entries lexicographic).
inline std::vector<Mat> enumerate_subspaces(int dim, int k, u32 p, u64 cap = kSubspaceCap) {
    if (k < 0 || k > dim) return {};
    u64 pd = 1;
    for (int i = 0; i < dim; ++i) {
        pd *= p;
        if (pd > cap) throw std::runtime_error("cap exceeded");
    }
    u64 count = gaussian_binomial(dim, k, p, cap);
    if (count * std::max(1, k) > cap) throw std::runtime_error("cap exceeded");

    std::vector<Mat> out;
    out.reserve(count);
    if (k == 0) {
        out.push_back(Mat(dim, 0, p));
        return out;
    }
    // choose pivot columns c_0 < ... < c_{k-1}
    std::vector<int> piv(k);
    std::iota(piv.begin(), piv.end(), 0);
    auto advance_combo = [&]() -> bool {
        int i = k - 1;
        while (i >= 0 && piv[i] == dim - k + i) --i;
        if (i < 0) return false;
        ++piv[i];
        for (int j = i + 1; j < k; ++j) piv[j] = piv[j - 1] + 1;
        return true;
    };
    do {
        std::vector<bool> is_piv(dim, false);
        for (int c : piv) is_piv[c] = true;
        // free positions: row i, column j with j > piv[i] and j not a pivot
        std::vector<std::pair<int, int>> free_pos;
        for (int i = 0; i < k; ++i)
            for (int j = piv[i] + 1; j < dim; ++j)
                if (!is_piv[j]) free_pos.emplace_back(i, j);
        std::vector<u32> assign(free_pos.size(), 0);
        while (true) {
            Mat rows(k, dim, p);
            for (int i = 0; i < k; ++i) rows.at(i, piv[i]) = 1 % p;
            for (size_t t = 0; t < free_pos.size(); ++t)
                rows.at(free_pos[t].first, free_pos[t].second) = assign[t];
            out.push_back(mat_transpose(rows));
            // increment assignment, most significant first for lexicographic order
            int t = static_cast<int>(assign.size()) - 1;
            while (t >= 0 && assign[t] == p - 1) assign[t--] = 0;
            if (t < 0) break;
            ++assign[t];
        }
    } while (advance_combo());
    return out;
}

} // namespace torsmut
