#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "sla/derivations.hpp"

namespace sla {

// Linear conditions every diagonal derivation must satisfy: one row per
// structure constant, over unknown basis weights (one unknown per basis
// vector). A nonzero constant on [e_i, e_j] -> e_t forces w_i + w_j = w_t.
struct RootSystem {
    Mat matrix;                          // rows: w_i + w_j - w_t = 0
    std::vector<std::string> row_tags;   // "[a,b]->c" provenance per row
};

inline RootSystem build_root_system(const SuperAlgebra& a) {
    RootSystem rs;
    const std::size_t d = a.dim();
    std::set<Vec> seen;
    auto add_row = [&](std::size_t i, std::size_t j, std::size_t t) {
        Vec row(d, Rat(0));
        row[i] += 1;
        row[j] += 1;
        row[t] -= 1;
        if (seen.insert(row).second) {
            rs.matrix.push_back(row);
            rs.row_tags.push_back("[" + a.labels[i] + "," + a.labels[j] + "]->" + a.labels[t]);
        }
    };
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i; j < d; ++j) {
            if (i == j && a.parity(i) == 0)
                continue;
            const Vec& val = a.table[i][j];
            for (std::size_t t = 0; t < d; ++t)
                if (val[t] != 0)
                    add_row(i, j, t);
        }
    return rs;
}

// Rank of the root system and the dimension of the space of diagonal
// derivations in the supplied basis. Only sensible for nilpotent algebras.
inline std::pair<std::size_t, std::size_t> rank_and_torus_dim(const SuperAlgebra& a) {
    if (!is_nilpotent(a))
        throw NotNilpotent("rank_and_torus_dim requires a nilpotent algebra");
    RootSystem rs = build_root_system(a);
    const std::size_t rank = rs.matrix.empty() ? 0 : rref(rs.matrix).rank;
    return {rank, a.dim() - rank};
}

// A maximal torus: commuting semisimple even derivations of maximal
// dimension. `generators` act in the algebra's own (supplied) basis;
// `diag_basis` holds their diagonal entries in the diagonalizing basis, one
// row per generator; `weights` lists, per diagonalizing-basis vector, its
// weight tuple under the generators. p_even/p_odd express the diagonalizing
// basis in supplied coordinates.
struct Torus {
    std::vector<Derivation> generators;
    Mat diag_basis;
    std::vector<Vec> weights;
    Mat p_even, p_odd;
    std::size_t initial_diag_dim = 0; // diagonal derivations before improving
};

namespace detail {

// Diagonal derivations of `a` in its own basis, as diagonal vectors.
inline Mat diagonal_torus_vectors(const SuperAlgebra& a) {
    RootSystem rs = build_root_system(a);
    if (rs.matrix.empty())
        return mat_identity(a.dim());
    return rref(rs.matrix).nullspace;
}

inline Mat diag_to_matrix(const Vec& diag) {
    Mat m = mat_zero(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i)
        m[i][i] = diag[i];
    return m;
}

} // namespace detail

// Computes a maximal torus. Starting from the diagonal derivations of the
// supplied basis, the loop looks for semisimple parts of centralizing even
// derivations that fall outside the current torus span, rediagonalizes
// everything simultaneously (parity blocks separately), rewrites the algebra
// in that basis and repeats. Each round strictly grows the torus, so at most
// dim(a) rounds happen. The result is reported for the *final* basis, with
// generators transported back to the supplied one.
inline Torus maximal_torus(const SuperAlgebra& a) {
    if (!is_nilpotent(a))
        throw NotNilpotent("maximal_torus requires a nilpotent algebra");
    const std::size_t n = a.n, m = a.m, d = a.dim();
    SuperAlgebra cur = a;
    Mat pe_total = mat_identity(n);
    Mat po_total = mat_identity(m);
    Torus torus;
    torus.initial_diag_dim = detail::diagonal_torus_vectors(a).size();

    for (std::size_t round = 0; round <= d; ++round) {
        Mat diag_vecs = detail::diagonal_torus_vectors(cur);
        // Span of the current torus as vectorized matrices.
        Mat span_rows;
        for (const auto& dv : diag_vecs)
            span_rows.push_back(mat_vectorize(detail::diag_to_matrix(dv)));
        Subspace torus_span = subspace_from_rows(span_rows, d * d);

        std::vector<Mat> new_semisimple;
        std::vector<Derivation> der0 = derivation_space(cur, 0);
        for (const auto& der : der0) {
            // Keep only derivations commuting with the whole current torus.
            bool commutes = true;
            for (const auto& dv : diag_vecs) {
                Mat t = detail::diag_to_matrix(dv);
                if (mat_mul(der.map, t) != mat_mul(t, der.map)) {
                    commutes = false;
                    break;
                }
            }
            if (!commutes)
                continue;
            Mat s;
            try {
                s = jordan_chevalley(der.map).first;
            } catch (const IrrationalSpectrum&) {
                throw IrrationalSpectrum(
                    "maximal_torus: centralizer element with irrational spectrum; "
                    "diagonal torus of the current basis is only a partial answer");
            }
            if (!subspace_contains(torus_span, mat_vectorize(s))) {
                new_semisimple.push_back(s);
                torus_span = subspace_sum(
                    torus_span, subspace_from_rows({mat_vectorize(s)}, d * d));
            }
        }
        if (new_semisimple.empty()) {
            // Stable: assemble the answer from this basis.
            torus.p_even = pe_total;
            torus.p_odd = po_total;
            torus.diag_basis = diag_vecs;
            Mat p = mat_zero(d, d);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    p[i][j] = pe_total[i][j];
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < m; ++j)
                    p[n + i][n + j] = po_total[i][j];
            const Mat p_inv = mat_inverse(p);
            for (const auto& dv : diag_vecs) {
                Derivation gen;
                gen.parity = 0;
                gen.map = mat_mul(p, mat_mul(detail::diag_to_matrix(dv), p_inv));
                torus.generators.push_back(std::move(gen));
            }
            for (std::size_t i = 0; i < d; ++i) {
                Vec w(diag_vecs.size(), Rat(0));
                for (std::size_t g = 0; g < diag_vecs.size(); ++g)
                    w[g] = diag_vecs[g][i];
                torus.weights.push_back(std::move(w));
            }
            return torus;
        }
        // Simultaneously diagonalize old + new generators, parity-blockwise.
        std::vector<Mat> even_blocks, odd_blocks;
        auto split_blocks = [&](const Mat& full) {
            Mat eb = mat_zero(n, n), ob = mat_zero(m, m);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    eb[i][j] = full[i][j];
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < m; ++j)
                    ob[i][j] = full[n + i][n + j];
            even_blocks.push_back(std::move(eb));
            odd_blocks.push_back(std::move(ob));
        };
        for (const auto& dv : diag_vecs)
            split_blocks(detail::diag_to_matrix(dv));
        for (const auto& s : new_semisimple)
            split_blocks(s);
        Mat pe = n ? simultaneous_eigenbasis(even_blocks) : mat_identity(0);
        Mat po = m ? simultaneous_eigenbasis(odd_blocks) : mat_identity(0);
        cur = change_basis(cur, pe, po);
        pe_total = n ? mat_mul(pe_total, pe) : pe_total;
        po_total = m ? mat_mul(po_total, po) : po_total;
    }
    throw SlaError("maximal_torus failed to stabilize"); // unreachable
}

// Maximal rank: the maximal torus is as large as the generator count allows.
inline bool is_maximal_rank(const SuperAlgebra& a) {
    GeneratorSpace gen = generator_space(a);
    Torus t = maximal_torus(a);
    return t.diag_basis.size() == gen.k + gen.s;
}

// Joint weight decomposition of the algebra under a torus: weight tuples to
// subspaces (in the algebra's supplied coordinates).
inline std::vector<WeightSpace> weight_decomposition(const Torus& t, const SuperAlgebra& a) {
    const std::size_t d = a.dim();
    const std::size_t n = a.n, m = a.m;
    Mat p = mat_zero(d, d);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            p[i][j] = t.p_even[i][j];
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            p[n + i][n + j] = t.p_odd[i][j];
    std::map<Vec, Mat> grouped;
    for (std::size_t i = 0; i < d; ++i) {
        Vec basis_vec(d, Rat(0));
        for (std::size_t r = 0; r < d; ++r)
            basis_vec[r] = p[r][i];
        grouped[t.weights[i]].push_back(std::move(basis_vec));
    }
    std::vector<WeightSpace> out;
    for (auto& [w, rows] : grouped)
        out.push_back({w, subspace_from_rows(rows, d)});
    return out;
}

} // namespace sla
