#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "sla/nilspace.hpp"
#include "sla/structure.hpp"

namespace sla {

// A parity-homogeneous superderivation, stored as its matrix in the algebra
// basis (column j = image of basis vector j).
struct Derivation {
    Mat map;
    int parity = 0;
};

// Signed Leibniz rule d[u,v] = [du, v] + (-1)^{|d||u|} [u, dv] checked on all
// basis pairs; u, v homogeneous basis vectors.
inline bool is_superderivation(const SuperAlgebra& a, const Derivation& der) {
    const std::size_t d = a.dim();
    for (std::size_t i = 0; i < d; ++i) {
        const int sign = (der.parity * a.parity(i)) % 2 ? -1 : 1;
        for (std::size_t j = 0; j < d; ++j) {
            Vec lhs = mat_vec(der.map, a.table[i][j]);
            Vec di(d, Rat(0)), dj(d, Rat(0));
            for (std::size_t r = 0; r < d; ++r) {
                di[r] = der.map[r][i];
                dj[r] = der.map[r][j];
            }
            Vec rhs = bracket(a, di, unit_vec(d, j));
            vec_add_scaled(rhs, Rat(sign), bracket(a, unit_vec(d, i), dj));
            // combine: rhs = [d e_i, e_j] + sign * [e_i, d e_j]
            Vec diff = vec_sub(lhs, rhs);
            if (!vec_is_zero(diff))
                return false;
        }
    }
    return true;
}

// Basis of the space of superderivations of the requested parity, found as
// the kernel of the linear system the Leibniz rule imposes.
//
// Unknowns are the allowed matrix entries (parity-respecting for even maps,
// parity-swapping for odd ones), ordered column by column. Equations run
// over one orientation of each basis pair: even pairs i < j, all mixed
// pairs, odd pairs i <= j — the diagonal matters for odd vectors since
// [y, y] need not vanish. The skipped orientations follow from the sign rule.
inline std::vector<Derivation> derivation_space(const SuperAlgebra& a, int parity) {
    const std::size_t n = a.n, m = a.m, d = a.dim();
    // Enumerate unknown slots.
    std::vector<std::pair<std::size_t, std::size_t>> slots; // (row, col)
    std::vector<std::vector<long>> slot_of(d, std::vector<long>(d, -1));
    for (std::size_t col = 0; col < d; ++col)
        for (std::size_t row = 0; row < d; ++row) {
            const int want = (a.parity(col) + parity) % 2;
            if (a.parity(row) == want) {
                slot_of[row][col] = static_cast<long>(slots.size());
                slots.emplace_back(row, col);
            }
        }

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            pairs.emplace_back(i, j);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = n; j < d; ++j)
            pairs.emplace_back(i, j);
    for (std::size_t i = n; i < d; ++i)
        for (std::size_t j = i; j < d; ++j)
            pairs.emplace_back(i, j);

    Mat rows;
    for (const auto& [i, j] : pairs) {
        const int sign = (parity * a.parity(i)) % 2 ? -1 : 1;
        // For each target coordinate t: coefficient of unknown d[r][c].
        // d([e_i,e_j])_t = sum_r table[i][j]_r * d[t][r]
        // [d e_i, e_j]_t = sum_r d[r][i] * table[r][j]_t
        // [e_i, d e_j]_t = sum_r d[r][j] * table[i][r]_t
        for (std::size_t t = 0; t < d; ++t) {
            Vec row(slots.size(), Rat(0));
            bool nonzero = false;
            const Vec& val = a.table[i][j];
            for (std::size_t r = 0; r < d; ++r) {
                if (val[r] != 0 && slot_of[t][r] >= 0) {
                    row[slot_of[t][r]] += val[r];
                    nonzero = true;
                }
                if (slot_of[r][i] >= 0 && a.table[r][j][t] != 0) {
                    row[slot_of[r][i]] -= a.table[r][j][t];
                    nonzero = true;
                }
                if (slot_of[r][j] >= 0 && a.table[i][r][t] != 0) {
                    row[slot_of[r][j]] -= Rat(sign) * a.table[i][r][t];
                    nonzero = true;
                }
            }
            if (nonzero)
                rows.push_back(std::move(row));
        }
    }

    std::vector<Derivation> out;
    Mat kernel;
    if (rows.empty()) {
        // No constraints: every allowed pattern is a derivation.
        kernel = mat_identity(slots.size());
    } else {
        kernel = rref(rows).nullspace;
    }
    for (const auto& coeffs : kernel) {
        Derivation der;
        der.parity = parity;
        der.map = mat_zero(d, d);
        for (std::size_t s = 0; s < slots.size(); ++s)
            der.map[slots[s].first][slots[s].second] = coeffs[s];
        out.push_back(std::move(der));
    }
    return out;
}

// Super commutator of two homogeneous derivations.
inline Derivation der_bracket(const Derivation& d1, const Derivation& d2) {
    Derivation out;
    out.parity = (d1.parity + d2.parity) % 2;
    const int sign = (d1.parity * d2.parity) % 2 ? -1 : 1;
    out.map = mat_sub(mat_mul(d1.map, d2.map),
                      mat_scale(Rat(sign), mat_mul(d2.map, d1.map)));
    return out;
}

namespace detail {

inline Rat binomial(std::size_t r, std::size_t k) {
    Rat out = 1;
    for (std::size_t i = 0; i < k; ++i)
        out = out * Rat(Int(r - i)) / Rat(Int(i + 1));
    return out;
}

} // namespace detail

// Iterated-Leibniz identity for the r-th power of a superderivation,
// verified on all basis pairs.
//
// Even d obeys the plain binomial law
//   d^r [u,v] = sum_k C(r,k) [d^k u, d^{r-k} v].
// For odd d the square e = d^2 is an even derivation and the law splits by
// the parity of r:
//   d^{2s}   [u,v] = sum_k C(s,k) [e^k u, e^{s-k} v]
//   d^{2s+1} [u,v] = sum_k C(s,k) ( [d e^k u, e^{s-k} v]
//                                   + (-1)^{|u|} [e^k u, d e^{s-k} v] ).
inline bool leibniz_power_check(const SuperAlgebra& a, const Derivation& der, std::size_t r) {
    const std::size_t d = a.dim();
    // Power table of the relevant maps.
    std::vector<Mat> dpow = {mat_identity(d)};
    for (std::size_t k = 0; k < r; ++k)
        dpow.push_back(mat_mul(der.map, dpow.back()));
    const Mat e = mat_mul(der.map, der.map);
    std::vector<Mat> epow = {mat_identity(d)};
    for (std::size_t k = 0; k <= r; ++k)
        epow.push_back(mat_mul(e, epow.back()));

    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            const Vec lhs = mat_vec(dpow[r], a.table[i][j]);
            Vec rhs(d, Rat(0));
            auto col = [&](const Mat& mtx, std::size_t c) {
                Vec v(d, Rat(0));
                for (std::size_t t = 0; t < d; ++t)
                    v[t] = mtx[t][c];
                return v;
            };
            if (der.parity == 0) {
                for (std::size_t k = 0; k <= r; ++k) {
                    const Rat c = detail::binomial(r, k);
                    vec_add_scaled(rhs, c,
                                   bracket(a, col(dpow[k], i), col(dpow[r - k], j)));
                }
            } else if (r % 2 == 0) {
                const std::size_t s = r / 2;
                for (std::size_t k = 0; k <= s; ++k) {
                    const Rat c = detail::binomial(s, k);
                    vec_add_scaled(rhs, c,
                                   bracket(a, col(epow[k], i), col(epow[s - k], j)));
                }
            } else {
                const std::size_t s = r / 2;
                const int sign = a.parity(i) ? -1 : 1;
                for (std::size_t k = 0; k <= s; ++k) {
                    const Rat c = detail::binomial(s, k);
                    vec_add_scaled(rhs, c,
                                   bracket(a, mat_vec(der.map, col(epow[k], i)),
                                           col(epow[s - k], j)));
                    vec_add_scaled(rhs, c * Rat(sign),
                                   bracket(a, col(epow[k], i),
                                           mat_vec(der.map, col(epow[s - k], j))));
                }
            }
            if (lhs != rhs)
                return false;
        }
    }
    return true;
}

// Characteristic nilpotency: every superderivation (of either parity, and
// every combination) is nilpotent. A derivation-space basis is computed and
// the whole span is certified at once.
inline bool is_characteristically_nilpotent(const SuperAlgebra& a) {
    std::vector<Derivation> ders = derivation_space(a, 0);
    std::vector<Derivation> odd = derivation_space(a, 1);
    ders.insert(ders.end(), odd.begin(), odd.end());
    std::vector<Mat> mats;
    for (const auto& der : ders) {
        if (!is_nilpotent_mat(der.map))
            return false;
        mats.push_back(der.map);
    }
    return all_nilpotent_space(mats);
}

// Weight decomposition under a single semisimple even derivation: pairs of
// (eigenvalue, eigenspace) in descending eigenvalue order.
struct WeightSpace {
    Vec weight;       // one entry per torus generator (single entry here)
    Subspace space;
};

inline std::vector<WeightSpace> weight_decomposition_single(const SuperAlgebra& a,
                                                            const Derivation& der) {
    if (der.parity != 0)
        throw SlaError("weight decomposition needs an even derivation");
    const std::size_t d = a.dim();
    auto roots = rational_eigenvalues(der.map);
    if (!roots)
        throw IrrationalSpectrum("derivation has irrational eigenvalues");
    std::vector<WeightSpace> out;
    std::size_t total = 0;
    for (const auto& [lambda, mult] : *roots) {
        Mat shifted = der.map;
        for (std::size_t i = 0; i < d; ++i)
            shifted[i][i] -= lambda;
        Subspace eig = subspace_from_rows(rref(shifted).nullspace, d);
        if (eig.dim() != mult)
            throw NotSemisimple("derivation is not diagonalizable");
        total += eig.dim();
        out.push_back({Vec{lambda}, std::move(eig)});
    }
    if (total != d)
        throw NotSemisimple("derivation is not diagonalizable");
    return out;
}

} // namespace sla
