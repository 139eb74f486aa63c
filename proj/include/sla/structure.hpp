#pragma once

#include <string>
#include <vector>

#include "sla/poly.hpp"
#include "sla/superalgebra.hpp"

namespace sla {

enum class SeriesKind { central, derived, c0, c1 };

inline std::string series_kind_name(SeriesKind k) {
    switch (k) {
    case SeriesKind::central: return "central";
    case SeriesKind::derived: return "derived";
    case SeriesKind::c0: return "c0";
    case SeriesKind::c1: return "c1";
    }
    return "?";
}

// A descending chain of subspaces. `terms[0]` is the starting space; each
// following term is the next bracket step, recorded until it stops changing.
// `stabilized_at` is the index of the first term equal to all later ones.
struct SeriesReport {
    SeriesKind kind;
    std::vector<Subspace> terms;
    std::size_t stabilized_at = 0;

    std::vector<std::size_t> dims() const {
        std::vector<std::size_t> out;
        for (const auto& t : terms)
            out.push_back(t.dim());
        return out;
    }
};

namespace detail {

template <typename Step>
inline SeriesReport run_series(SeriesKind kind, Subspace start, Step&& step) {
    SeriesReport rep;
    rep.kind = kind;
    rep.terms.push_back(std::move(start));
    while (true) {
        Subspace next = step(rep.terms.back());
        if (next == rep.terms.back())
            break;
        rep.terms.push_back(std::move(next));
        if (rep.terms.back().is_zero())
            break;
    }
    rep.stabilized_at = rep.terms.size() - 1;
    return rep;
}

} // namespace detail

// Lower central series L, [L,L], [[L,L],L], ...
inline SeriesReport central_series(const SuperAlgebra& a) {
    const Subspace full = full_subspace(a);
    return detail::run_series(SeriesKind::central, full,
        [&](const Subspace& prev) { return subspace_bracket(a, prev, full); });
}

// Derived series L, [L,L], [[L,L],[L,L]], ...
inline SeriesReport derived_series(const SuperAlgebra& a) {
    return detail::run_series(SeriesKind::derived, full_subspace(a),
        [&](const Subspace& prev) { return subspace_bracket(a, prev, prev); });
}

// The two descending sequences that control nilpotency of a superalgebra:
// both start brackets against the even part only,
//   C^{k+1}(L0) = [C^k(L0), L0] starting from L0,
//   C^{k+1}(L1) = [C^k(L1), L0] starting from L1.
inline std::pair<SeriesReport, SeriesReport> c_sequences(const SuperAlgebra& a) {
    const Subspace l0 = even_subspace(a);
    auto step = [&](const Subspace& prev) { return subspace_bracket(a, prev, l0); };
    SeriesReport c0 = detail::run_series(SeriesKind::c0, l0, step);
    SeriesReport c1 = detail::run_series(SeriesKind::c1, odd_subspace(a), step);
    return {std::move(c0), std::move(c1)};
}

// Nilpotency is equivalent to both c-sequences terminating at zero; the
// central series criterion and Engel-style test agree with this (exercised by
// the property suite).
inline bool is_nilpotent(const SuperAlgebra& a) {
    auto [c0, c1] = c_sequences(a);
    const bool z0 = c0.terms.back().is_zero();
    const bool z1 = a.m == 0 || c1.terms.back().is_zero();
    return z0 && z1;
}

inline bool is_solvable(const SuperAlgebra& a) {
    return derived_series(a).terms.back().is_zero();
}

// Generators of a nilpotent algebra: basis-vector representatives of a
// complement of [L, L], even ones first. k and s count the even and odd
// picks; their sum is the minimal number of generators.
struct GeneratorSpace {
    Subspace space;
    std::size_t k = 0;
    std::size_t s = 0;
    std::vector<std::size_t> indices; // chosen basis vectors
};

inline GeneratorSpace generator_space(const SuperAlgebra& a) {
    if (!is_nilpotent(a))
        throw NotNilpotent("generator_space requires a nilpotent algebra");
    const Subspace full = full_subspace(a);
    Subspace derived2 = subspace_bracket(a, full, full);
    GeneratorSpace out;
    Subspace cur = derived2;
    Mat picked;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        Vec u = unit_vec(a.dim(), i);
        if (subspace_contains(cur, u))
            continue;
        out.indices.push_back(i);
        (a.parity(i) == 0 ? out.k : out.s) += 1;
        picked.push_back(u);
        Mat rows = cur.rows;
        rows.push_back(std::move(u));
        cur = subspace_from_rows(rows, a.dim());
    }
    out.space = subspace_from_rows(picked, a.dim());
    return out;
}

// Restriction of the algebra to a graded subalgebra spanned by the rows of a
// subspace; the rows must be closed under the bracket. Used to certify
// nilpotency of candidate ideals.
inline SuperAlgebra restrict_to_subalgebra(const SuperAlgebra& a, const Subspace& v) {
    // Separate the basis by parity; every basis row must be homogeneous,
    // which holds for the graded subspaces this is called on (their RREF
    // bases split by parity because the defining systems are block-graded).
    Mat evens, odds;
    for (const auto& row : v.rows) {
        const int p = vector_parity(a, row);
        (p == 0 ? evens : odds).push_back(row);
    }
    Mat basis = evens;
    basis.insert(basis.end(), odds.begin(), odds.end());
    const std::size_t sn = evens.size(), sm = odds.size(), sd = sn + sm;
    Mat basis_cols = mat_transpose(basis); // ambient x sd
    SuperAlgebra out;
    out.n = sn;
    out.m = sm;
    out.name = a.name.empty() ? "" : a.name + "_sub";
    for (std::size_t i = 0; i < sd; ++i)
        out.labels.push_back("v" + std::to_string(i + 1));
    out.table.assign(sd, std::vector<Vec>(sd, Vec(sd, Rat(0))));
    for (std::size_t i = 0; i < sd; ++i)
        for (std::size_t j = 0; j < sd; ++j) {
            Vec val = bracket(a, basis[i], basis[j]);
            auto coords = solve(basis_cols, val);
            if (!coords)
                throw SlaError("restrict_to_subalgebra: subspace is not closed under the bracket");
            out.table[i][j] = *coords;
        }
    return out;
}

// Nilradical of a solvable superalgebra, certified exactly.
//
// Candidate: the kernel V of the trace form K(a,b) = tr(ad_a ad_b). The
// nilradical is always contained in V (a flag through the powers of the
// nilradical makes every ad_u ad_v with u in the nilradical strictly
// triangular), so once V itself is verified to be a nilpotent ideal the
// sandwich nilradical <= V <= nilradical closes and V *is* the nilradical.
// Failure of either certificate raises instead of guessing.
inline Subspace nilradical_solvable(const SuperAlgebra& a) {
    if (!is_solvable(a))
        throw NotSolvable("nilradical_solvable requires a solvable algebra");
    const std::size_t d = a.dim();
    std::vector<Mat> ads;
    for (std::size_t i = 0; i < d; ++i)
        ads.push_back(ad_matrix(a, unit_vec(d, i)));
    Mat gram = mat_zero(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            gram[i][j] = mat_trace(mat_mul(ads[i], ads[j]));
    RrefResult rr = rref(gram);
    Subspace v = subspace_from_rows(rr.nullspace, d);

    // Ideal: [V, L] subset of V.
    Subspace vl = subspace_bracket(a, v, full_subspace(a));
    if (!subspace_leq(vl, v))
        throw NilradicalVerificationFailed("trace-form kernel is not an ideal");
    // Nilpotent: restrict and run the nilpotency criterion.
    if (!v.is_zero()) {
        SuperAlgebra sub = restrict_to_subalgebra(a, v);
        if (!is_nilpotent(sub))
            throw NilradicalVerificationFailed("trace-form kernel is not nilpotent");
    }
    return v;
}

} // namespace sla
