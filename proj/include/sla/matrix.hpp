#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sla/errors.hpp"
#include "sla/rational.hpp"

namespace sla {

using Vec = std::vector<Rat>;
// Row-major dense matrix over the rationals. Matrices act on column vectors,
// so column j of a linear map is the image of the j-th basis vector.
using Mat = std::vector<Vec>;

inline std::size_t mat_rows(const Mat& m) { return m.size(); }
inline std::size_t mat_cols(const Mat& m) { return m.empty() ? 0 : m[0].size(); }

inline Mat mat_zero(std::size_t r, std::size_t c) { return Mat(r, Vec(c, Rat(0))); }

inline Mat mat_identity(std::size_t n) {
    Mat id = mat_zero(n, n);
    for (std::size_t i = 0; i < n; ++i)
        id[i][i] = 1;
    return id;
}

inline bool mat_is_zero(const Mat& m) {
    for (const auto& row : m)
        for (const auto& e : row)
            if (e != 0)
                return false;
    return true;
}

inline bool vec_is_zero(const Vec& v) {
    for (const auto& e : v)
        if (e != 0)
            return false;
    return true;
}

inline Vec vec_add(const Vec& a, const Vec& b) {
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] + b[i];
    return out;
}

inline Vec vec_sub(const Vec& a, const Vec& b) {
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] - b[i];
    return out;
}

inline Vec vec_scale(const Rat& c, const Vec& v) {
    Vec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = c * v[i];
    return out;
}

inline void vec_add_scaled(Vec& acc, const Rat& c, const Vec& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        acc[i] += c * v[i];
}

inline Mat mat_add(const Mat& a, const Mat& b) {
    Mat out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = vec_add(a[i], b[i]);
    return out;
}

inline Mat mat_sub(const Mat& a, const Mat& b) {
    Mat out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = vec_sub(a[i], b[i]);
    return out;
}

inline Mat mat_scale(const Rat& c, const Mat& m) {
    Mat out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        out[i] = vec_scale(c, m[i]);
    return out;
}

inline Mat mat_mul(const Mat& a, const Mat& b) {
    const std::size_t r = mat_rows(a), k = mat_cols(a), c = mat_cols(b);
    Mat out = mat_zero(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t t = 0; t < k; ++t) {
            if (a[i][t] == 0)
                continue;
            for (std::size_t j = 0; j < c; ++j)
                out[i][j] += a[i][t] * b[t][j];
        }
    return out;
}

inline Vec mat_vec(const Mat& a, const Vec& v) {
    Vec out(mat_rows(a), Rat(0));
    for (std::size_t i = 0; i < mat_rows(a); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            if (a[i][j] != 0 && v[j] != 0)
                out[i] += a[i][j] * v[j];
    return out;
}

inline Mat mat_transpose(const Mat& m) {
    Mat out = mat_zero(mat_cols(m), mat_rows(m));
    for (std::size_t i = 0; i < mat_rows(m); ++i)
        for (std::size_t j = 0; j < mat_cols(m); ++j)
            out[j][i] = m[i][j];
    return out;
}

inline Rat mat_trace(const Mat& m) {
    Rat t = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
        t += m[i][i];
    return t;
}

// Flattens column-by-column; used to talk about spans of matrices.
inline Vec mat_vectorize(const Mat& m) {
    Vec out;
    out.reserve(mat_rows(m) * mat_cols(m));
    for (std::size_t j = 0; j < mat_cols(m); ++j)
        for (std::size_t i = 0; i < mat_rows(m); ++i)
            out.push_back(m[i][j]);
    return out;
}

// Result of Gauss-Jordan elimination. `nullspace` rows form the canonical
// kernel basis: one vector per free column f, with entry 1 at f and the
// negated reduced-row entries at the pivot columns. Free columns are taken
// in increasing order, which fixes the basis deterministically.
struct RrefResult {
    Mat reduced;
    std::size_t rank = 0;
    Mat nullspace;
    std::vector<std::size_t> pivots;
};

inline RrefResult rref(const Mat& input) {
    RrefResult res;
    res.reduced = input;
    Mat& m = res.reduced;
    const std::size_t rows = mat_rows(m), cols = mat_cols(m);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = r;
        while (sel < rows && m[sel][c] == 0)
            ++sel;
        if (sel == rows)
            continue;
        std::swap(m[sel], m[r]);
        const Rat inv = Rat(1) / m[r][c];
        for (std::size_t j = c; j < cols; ++j)
            m[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0)
                continue;
            const Rat f = m[i][c];
            for (std::size_t j = c; j < cols; ++j)
                m[i][j] -= f * m[r][j];
        }
        res.pivots.push_back(c);
        ++r;
    }
    res.rank = r;
    // Kernel basis from the reduced form.
    std::vector<bool> is_pivot(cols, false);
    for (auto p : res.pivots)
        is_pivot[p] = true;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f])
            continue;
        Vec v(cols, Rat(0));
        v[f] = 1;
        for (std::size_t i = 0; i < res.pivots.size(); ++i)
            v[res.pivots[i]] = -m[i][f];
        res.nullspace.push_back(std::move(v));
    }
    return res;
}

inline std::size_t mat_rank(const Mat& m) {
    return m.empty() ? 0 : rref(m).rank;
}

// A linear subspace of Q^ambient held as its canonical reduced row basis.
// Two subspaces are equal iff their canonical bases are equal element-wise.
struct Subspace {
    Mat rows;               // RREF basis, no zero rows
    std::size_t ambient = 0;

    std::size_t dim() const { return rows.size(); }
    bool is_zero() const { return rows.empty(); }

    bool operator==(const Subspace& o) const {
        return ambient == o.ambient && rows == o.rows;
    }
};

inline Subspace subspace_from_rows(const Mat& spanning, std::size_t ambient) {
    Subspace s;
    s.ambient = ambient;
    if (spanning.empty())
        return s;
    RrefResult rr = rref(spanning);
    for (std::size_t i = 0; i < rr.rank; ++i)
        s.rows.push_back(rr.reduced[i]);
    return s;
}

inline Subspace subspace_zero(std::size_t ambient) {
    return Subspace{{}, ambient};
}

inline Subspace subspace_full(std::size_t ambient) {
    return subspace_from_rows(mat_identity(ambient), ambient);
}

// Membership test against a canonical (RREF) basis: reduce and see whether
// anything is left over.
inline bool subspace_contains(const Subspace& s, const Vec& v) {
    Vec w = v;
    for (const auto& row : s.rows) {
        std::size_t p = 0;
        while (p < row.size() && row[p] == 0)
            ++p;
        if (p < row.size() && w[p] != 0)
            vec_add_scaled(w, -w[p], row);
    }
    return vec_is_zero(w);
}

inline bool subspace_leq(const Subspace& a, const Subspace& b) {
    for (const auto& r : a.rows)
        if (!subspace_contains(b, r))
            return false;
    return true;
}

inline Subspace subspace_sum(const Subspace& a, const Subspace& b) {
    Mat all = a.rows;
    all.insert(all.end(), b.rows.begin(), b.rows.end());
    return subspace_from_rows(all, a.ambient);
}

// Solves A x = b exactly; empty optional when inconsistent.
inline std::optional<Vec> solve(const Mat& a, const Vec& b) {
    const std::size_t rows = mat_rows(a), cols = mat_cols(a);
    Mat aug = a;
    for (std::size_t i = 0; i < rows; ++i)
        aug[i].push_back(b[i]);
    RrefResult rr = rref(aug);
    Vec x(cols, Rat(0));
    for (std::size_t i = 0; i < rr.pivots.size(); ++i) {
        if (rr.pivots[i] == cols)
            return std::nullopt; // pivot in the augmented column
        x[rr.pivots[i]] = rr.reduced[i][cols];
    }
    return x;
}

// Solves A X = B column by column (all columns must be consistent).
inline std::optional<Mat> solve_matrix(const Mat& a, const Mat& b) {
    const std::size_t rows = mat_rows(a), cols = mat_cols(a), rhs = mat_cols(b);
    Mat aug = a;
    for (std::size_t i = 0; i < rows; ++i)
        aug[i].insert(aug[i].end(), b[i].begin(), b[i].end());
    RrefResult rr = rref(aug);
    for (auto p : rr.pivots)
        if (p >= cols)
            return std::nullopt;
    Mat x = mat_zero(cols, rhs);
    for (std::size_t i = 0; i < rr.pivots.size(); ++i)
        for (std::size_t j = 0; j < rhs; ++j)
            x[rr.pivots[i]][j] = rr.reduced[i][cols + j];
    return x;
}

inline Mat mat_inverse(const Mat& m) {
    const std::size_t n = mat_rows(m);
    auto inv = solve_matrix(m, mat_identity(n));
    if (!inv || mat_rank(m) != n)
        throw SingularMatrix();
    return *inv;
}

// Clears denominators of a rational matrix: returns (L*m) with integer
// entries together with the positive scale L.
inline std::pair<Mat, Int> mat_integerize(const Mat& m) {
    Int l = 1;
    for (const auto& row : m)
        for (const auto& e : row)
            l = int_lcm(l, rat_den(e));
    return {mat_scale(Rat(l), m), l};
}

} // namespace sla
