#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sla/matrix.hpp"

namespace sla {

// One structure-constant assignment: [basis a, basis b] = value (a vector of
// coordinates over the full basis).
struct BracketEntry {
    std::size_t a = 0;
    std::size_t b = 0;
    Vec value;
};

// A finite-dimensional superalgebra given by structure constants over Q.
// Basis order is all even vectors first, then all odd ones; `table[a][b]`
// stores [e_a, e_b] as a coordinate vector. The table is kept *full*: the
// mirror of every bracket is filled in from the sign rule
//     [e_b, e_a] = -(-1)^{|a||b|} [e_a, e_b],
// i.e. odd-odd brackets are symmetric and every other pairing flips sign.
struct SuperAlgebra {
    std::size_t n = 0; // even dimension
    std::size_t m = 0; // odd dimension
    std::string name;
    std::vector<std::string> labels; // even labels then odd labels
    std::vector<std::vector<Vec>> table;

    std::size_t dim() const { return n + m; }
    int parity(std::size_t i) const { return i < n ? 0 : 1; }

    const Vec& entry(std::size_t a, std::size_t b) const { return table[a][b]; }
};

inline int mirror_sign(int parity_a, int parity_b) {
    // -(-1)^{|a||b|}: +1 only when both arguments are odd.
    return (parity_a == 1 && parity_b == 1) ? 1 : -1;
}

// Builds the algebra from one orientation of each bracket; mirrors are
// derived. Entries with a == b and a even are rejected by validate later
// (the sign rule forces them to vanish), but the table stores what it is
// given so that validation can report the violation as data.
inline SuperAlgebra make_superalgebra(std::size_t n, std::size_t m,
                                      const std::vector<BracketEntry>& entries,
                                      std::vector<std::string> labels = {},
                                      std::string name = {}) {
    SuperAlgebra a;
    a.n = n;
    a.m = m;
    a.name = std::move(name);
    const std::size_t d = n + m;
    if (labels.empty()) {
        for (std::size_t i = 0; i < n; ++i)
            labels.push_back("x" + std::to_string(i + 1));
        for (std::size_t i = 0; i < m; ++i)
            labels.push_back("y" + std::to_string(i + 1));
    }
    a.labels = std::move(labels);
    a.table.assign(d, std::vector<Vec>(d, Vec(d, Rat(0))));
    for (const auto& e : entries) {
        a.table[e.a][e.b] = e.value;
        if (e.a != e.b) {
            const int s = mirror_sign(a.parity(e.a), a.parity(e.b));
            a.table[e.b][e.a] = vec_scale(Rat(s), e.value);
        }
    }
    return a;
}

// A single validation finding; the report collects all of them instead of
// throwing, so callers can display every defect at once.
struct Violation {
    std::string kind;        // "parity", "skew", "jacobi"
    std::string description;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

inline Vec bracket(const SuperAlgebra& a, const Vec& u, const Vec& v);

// Checks grading, the sign rule across the stored table, and the graded
// Jacobi identity in Leibniz form
//     [a,[b,c]] = [[a,b],c] - (-1)^{|b||c|} [[a,c],b]
// over all homogeneous basis triples.
inline ValidationReport validate(const SuperAlgebra& a) {
    ValidationReport rep;
    const std::size_t d = a.dim();
    auto label = [&](std::size_t i) { return a.labels[i]; };

    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            const Vec& val = a.table[i][j];
            const int want = (a.parity(i) + a.parity(j)) % 2;
            for (std::size_t t = 0; t < d; ++t) {
                if (val[t] != 0 && a.parity(t) != want) {
                    rep.violations.push_back({"parity",
                        "[" + label(i) + "," + label(j) + "] has a component on " + label(t) +
                        " of the wrong parity"});
                }
            }
        }
    }
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i; j < d; ++j) {
            const int s = mirror_sign(a.parity(i), a.parity(j));
            const Vec mirrored = vec_scale(Rat(s), a.table[i][j]);
            if (a.table[j][i] != mirrored && i != j) {
                rep.violations.push_back({"skew",
                    "[" + label(j) + "," + label(i) + "] violates the sign rule against [" +
                    label(i) + "," + label(j) + "]"});
            }
            if (i == j && a.parity(i) == 0 && !vec_is_zero(a.table[i][i])) {
                rep.violations.push_back({"skew",
                    "[" + label(i) + "," + label(i) + "] must vanish for an even element"});
            }
        }
    }
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            for (std::size_t k = 0; k < d; ++k) {
                // [e_i, [e_j, e_k]]
                Vec lhs(d, Rat(0));
                const Vec& inner = a.table[j][k];
                for (std::size_t t = 0; t < d; ++t)
                    if (inner[t] != 0)
                        vec_add_scaled(lhs, inner[t], a.table[i][t]);
                // [[e_i, e_j], e_k]
                Vec r1(d, Rat(0));
                const Vec& ij = a.table[i][j];
                for (std::size_t t = 0; t < d; ++t)
                    if (ij[t] != 0)
                        vec_add_scaled(r1, ij[t], a.table[t][k]);
                // [[e_i, e_k], e_j]
                Vec r2(d, Rat(0));
                const Vec& ik = a.table[i][k];
                for (std::size_t t = 0; t < d; ++t)
                    if (ik[t] != 0)
                        vec_add_scaled(r2, ik[t], a.table[t][j]);
                const int sgn = (a.parity(j) * a.parity(k)) % 2 ? -1 : 1;
                vec_add_scaled(r1, Rat(-sgn), r2);
                if (lhs != r1) {
                    rep.violations.push_back({"jacobi",
                        "Jacobi fails on (" + label(i) + "," + label(j) + "," + label(k) + ")"});
                }
            }
        }
    }
    return rep;
}

// Bilinear extension of the bracket to arbitrary coordinate vectors.
inline Vec bracket(const SuperAlgebra& a, const Vec& u, const Vec& v) {
    const std::size_t d = a.dim();
    Vec out(d, Rat(0));
    for (std::size_t i = 0; i < d; ++i) {
        if (u[i] == 0)
            continue;
        for (std::size_t j = 0; j < d; ++j) {
            if (v[j] == 0)
                continue;
            vec_add_scaled(out, u[i] * v[j], a.table[i][j]);
        }
    }
    return out;
}

inline Vec unit_vec(std::size_t d, std::size_t i) {
    Vec v(d, Rat(0));
    v[i] = 1;
    return v;
}

// Parity of a coordinate vector: 0 or 1 when homogeneous, error otherwise.
inline int vector_parity(const SuperAlgebra& a, const Vec& v) {
    bool has_even = false, has_odd = false;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (v[i] == 0)
            continue;
        (a.parity(i) == 0 ? has_even : has_odd) = true;
    }
    if (has_even && has_odd)
        throw NonHomogeneous();
    return has_odd ? 1 : 0;
}

// Matrix of ad_x : v -> [v, x] in the given basis (column j is the image of
// basis vector j). x must be parity homogeneous for ad_x to be homogeneous.
inline Mat ad_matrix(const SuperAlgebra& a, const Vec& x) {
    vector_parity(a, x); // throws when non-homogeneous
    const std::size_t d = a.dim();
    Mat out = mat_zero(d, d);
    for (std::size_t j = 0; j < d; ++j) {
        Vec img(d, Rat(0));
        for (std::size_t i = 0; i < d; ++i)
            if (x[i] != 0)
                vec_add_scaled(img, x[i], a.table[j][i]);
        for (std::size_t i = 0; i < d; ++i)
            out[i][j] = img[i];
    }
    return out;
}

// Rewrites the algebra in a new homogeneous basis. p_even / p_odd hold the
// new basis vectors as columns, expressed in the old coordinates of the even
// and odd parts respectively.
inline SuperAlgebra change_basis(const SuperAlgebra& a, const Mat& p_even, const Mat& p_odd) {
    const std::size_t n = a.n, m = a.m, d = a.dim();
    if (mat_rows(p_even) != n || (n && mat_cols(p_even) != n) ||
        mat_rows(p_odd) != m || (m && mat_cols(p_odd) != m))
        throw SlaError("change_basis: block sizes do not match the algebra");
    Mat p = mat_zero(d, d);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            p[i][j] = p_even[i][j];
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            p[n + i][n + j] = p_odd[i][j];
    Mat p_inv;
    try {
        p_inv = mat_inverse(p);
    } catch (const SingularMatrix&) {
        throw SingularMatrix("change_basis: transformation is singular");
    }
    SuperAlgebra out;
    out.n = n;
    out.m = m;
    out.name = a.name;
    out.labels = a.labels;
    out.table.assign(d, std::vector<Vec>(d, Vec(d, Rat(0))));
    for (std::size_t i = 0; i < d; ++i) {
        Vec ei(d, Rat(0));
        for (std::size_t r = 0; r < d; ++r)
            ei[r] = p[r][i];
        for (std::size_t j = 0; j < d; ++j) {
            Vec ej(d, Rat(0));
            for (std::size_t r = 0; r < d; ++r)
                ej[r] = p[r][j];
            out.table[i][j] = mat_vec(p_inv, bracket(a, ei, ej));
        }
    }
    return out;
}

// Span of all brackets [u, v] with u in U, v in V.
inline Subspace subspace_bracket(const SuperAlgebra& a, const Subspace& u, const Subspace& v) {
    Mat rows;
    for (const auto& x : u.rows)
        for (const auto& y : v.rows)
            rows.push_back(bracket(a, x, y));
    return subspace_from_rows(rows, a.dim());
}

// Center: all z with [z, e_b] = 0 for every basis vector (the sign rule makes
// the one-sided condition two-sided).
inline Subspace center(const SuperAlgebra& a) {
    const std::size_t d = a.dim();
    Mat rows;
    for (std::size_t b = 0; b < d; ++b)
        for (std::size_t t = 0; t < d; ++t) {
            Vec row(d, Rat(0));
            for (std::size_t i = 0; i < d; ++i)
                row[i] = a.table[i][b][t];
            rows.push_back(std::move(row));
        }
    RrefResult rr = rref(rows);
    return subspace_from_rows(rr.nullspace, d);
}

inline Subspace even_subspace(const SuperAlgebra& a) {
    Mat rows;
    for (std::size_t i = 0; i < a.n; ++i)
        rows.push_back(unit_vec(a.dim(), i));
    return subspace_from_rows(rows, a.dim());
}

inline Subspace odd_subspace(const SuperAlgebra& a) {
    Mat rows;
    for (std::size_t i = 0; i < a.m; ++i)
        rows.push_back(unit_vec(a.dim(), a.n + i));
    return subspace_from_rows(rows, a.dim());
}

inline Subspace full_subspace(const SuperAlgebra& a) {
    return subspace_full(a.dim());
}

// The even part as a plain algebra on the first n coordinates ([L0,L0] lies
// in L0 whenever the grading is consistent).
inline SuperAlgebra even_part(const SuperAlgebra& a) {
    SuperAlgebra out;
    out.n = a.n;
    out.m = 0;
    out.name = a.name.empty() ? "" : a.name + "_even";
    out.labels.assign(a.labels.begin(), a.labels.begin() + a.n);
    out.table.assign(a.n, std::vector<Vec>(a.n, Vec(a.n, Rat(0))));
    for (std::size_t i = 0; i < a.n; ++i)
        for (std::size_t j = 0; j < a.n; ++j)
            for (std::size_t t = 0; t < a.n; ++t)
                out.table[i][j][t] = a.table[i][j][t];
    return out;
}

} // namespace sla
