#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "sla/matrix.hpp"

namespace sla {

// Dense univariate polynomial over Q, coefficients in ascending degree:
// p = c[0] + c[1] x + ... + c[n] x^n. The zero polynomial is the empty list.
using Poly = std::vector<Rat>;

inline void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

inline std::size_t poly_deg(const Poly& p) { return p.empty() ? 0 : p.size() - 1; }

inline Poly poly_add(const Poly& a, const Poly& b) {
    Poly out(std::max(a.size(), b.size()), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        out[i] += b[i];
    poly_trim(out);
    return out;
}

inline Poly poly_scale(const Rat& c, const Poly& a) {
    if (c == 0)
        return {};
    Poly out = a;
    for (auto& e : out)
        e *= c;
    return out;
}

inline Poly poly_sub(const Poly& a, const Poly& b) {
    return poly_add(a, poly_scale(Rat(-1), b));
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty())
        return {};
    Poly out(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    }
    poly_trim(out);
    return out;
}

// Division with remainder: a = q*b + r, deg r < deg b.
inline std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
    if (b.empty())
        throw SlaError("polynomial division by zero");
    Poly r = a, q;
    if (a.size() >= b.size())
        q.assign(a.size() - b.size() + 1, Rat(0));
    const Rat lead = b.back();
    while (r.size() >= b.size() && !r.empty()) {
        const Rat f = r.back() / lead;
        const std::size_t shift = r.size() - b.size();
        q[shift] = f;
        for (std::size_t i = 0; i < b.size(); ++i)
            r[shift + i] -= f * b[i];
        poly_trim(r);
        if (r.size() >= b.size() && r.back() == 0)
            poly_trim(r);
    }
    poly_trim(q);
    return {q, r};
}

inline Poly poly_mod(const Poly& a, const Poly& b) { return poly_divmod(a, b).second; }

// Extended Euclid over Q[x]: returns (g, u, v) with u*a + v*b = g, g monic.
inline std::tuple<Poly, Poly, Poly> poly_ext_gcd(const Poly& a, const Poly& b) {
    Poly r0 = a, r1 = b;
    Poly u0 = {Rat(1)}, u1 = {};
    Poly v0 = {}, v1 = {Rat(1)};
    while (!r1.empty()) {
        auto [q, r] = poly_divmod(r0, r1);
        Poly u2 = poly_sub(u0, poly_mul(q, u1));
        Poly v2 = poly_sub(v0, poly_mul(q, v1));
        r0 = std::move(r1); r1 = std::move(r);
        u0 = std::move(u1); u1 = std::move(u2);
        v0 = std::move(v1); v1 = std::move(v2);
    }
    if (!r0.empty() && r0.back() != 1) {
        const Rat inv = Rat(1) / r0.back();
        r0 = poly_scale(inv, r0);
        u0 = poly_scale(inv, u0);
        v0 = poly_scale(inv, v0);
    }
    return {r0, u0, v0};
}

inline Rat poly_eval(const Poly& p, const Rat& x) {
    Rat acc = 0;
    for (std::size_t i = p.size(); i-- > 0;)
        acc = acc * x + p[i];
    return acc;
}

// Evaluates p at a square matrix by Horner's rule.
inline Mat poly_eval_mat(const Poly& p, const Mat& m) {
    const std::size_t n = mat_rows(m);
    Mat acc = mat_zero(n, n);
    for (std::size_t i = p.size(); i-- > 0;) {
        acc = mat_mul(acc, m);
        for (std::size_t d = 0; d < n; ++d)
            acc[d][d] += p[i];
    }
    return acc;
}

// Characteristic polynomial det(xI - M) by the Faddeev-LeVerrier recurrence;
// exact over Q, returns the monic coefficient list in ascending degree.
inline Poly charpoly(const Mat& m) {
    const std::size_t n = mat_rows(m);
    Poly out(n + 1, Rat(0));
    out[n] = 1;
    if (n == 0)
        return out;
    Mat a = m;       // A_1 = M
    Rat c = -mat_trace(a);
    out[n - 1] = c;
    for (std::size_t k = 2; k <= n; ++k) {
        Mat step = a;
        for (std::size_t d = 0; d < n; ++d)
            step[d][d] += c;
        a = mat_mul(m, step);
        c = -mat_trace(a) / Rat((unsigned)k);
        out[n - k] = c;
    }
    return out;
}

// Nilpotency test by repeated squaring: M is nilpotent iff M^(2^ceil(lg n))
// vanishes, and that power already exceeds the ambient dimension.
inline bool is_nilpotent_mat(const Mat& m) {
    const std::size_t n = mat_rows(m);
    if (n == 0)
        return true;
    Mat p = m;
    std::size_t covered = 1;
    while (true) {
        if (mat_is_zero(p))
            return true;
        if (covered >= n)
            return false;
        p = mat_mul(p, p);
        covered *= 2;
    }
}

// All rational eigenvalues of M with algebraic multiplicities, or nullopt if
// some eigenvalue is irrational (multiplicities then do not add up to n).
//
// Method: clear denominators, so the scaled matrix is integral and its monic
// characteristic polynomial has integer coefficients; any rational root is an
// integer, which Gershgorin discs bound by the largest absolute row sum. The
// integer candidates in that interval are tested exactly, with the power of x
// split off first so only nonzero roots are scanned.
inline std::optional<std::vector<std::pair<Rat, std::size_t>>>
rational_eigenvalues(const Mat& m) {
    const std::size_t n = mat_rows(m);
    if (n == 0)
        return std::vector<std::pair<Rat, std::size_t>>{};
    auto [mi, scale] = mat_integerize(m);
    Poly cp = charpoly(mi);
    // Multiplicity of the root zero = index of the lowest nonzero coefficient.
    std::size_t zero_mult = 0;
    while (zero_mult < cp.size() && cp[zero_mult] == 0)
        ++zero_mult;
    Poly q(cp.begin() + zero_mult, cp.end());

    Int bound = 0;
    for (std::size_t i = 0; i < n; ++i) {
        Int row_sum = 0;
        for (std::size_t j = 0; j < n; ++j)
            row_sum += int_abs(rat_num(mi[i][j]));
        bound = std::max(bound, row_sum);
    }

    std::vector<std::pair<Rat, std::size_t>> roots;
    if (zero_mult > 0)
        roots.emplace_back(Rat(0), zero_mult);
    if (q.size() > 1) {
        const Int c0 = rat_num(q[0]); // nonzero by construction
        for (Int t = -bound; t <= bound; ++t) {
            if (t == 0 || c0 % t != 0)
                continue;
            if (poly_eval(q, Rat(t)) != 0)
                continue;
            std::size_t mult = 0;
            Poly lin = {Rat(-t), Rat(1)};
            while (true) {
                auto [quot, rem] = poly_divmod(q, lin);
                if (!rem.empty())
                    break;
                q = quot;
                ++mult;
            }
            roots.emplace_back(Rat(t) / Rat(scale), mult);
        }
    }
    std::size_t total = 0;
    for (const auto& [r, mult] : roots)
        total += mult;
    if (total != n)
        return std::nullopt;
    std::sort(roots.begin(), roots.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    return roots;
}

// Jordan-Chevalley decomposition M = S + N with S semisimple, N nilpotent,
// S N = N S, both polynomials in M. Requires a fully rational spectrum.
//
// S = p(M) where p solves the congruences p = r_i mod (x - r_i)^{m_i}; on
// each generalized eigenspace p(M) then acts as the scalar r_i.
inline std::pair<Mat, Mat> jordan_chevalley(const Mat& m) {
    const std::size_t n = mat_rows(m);
    auto roots = rational_eigenvalues(m);
    if (!roots)
        throw IrrationalSpectrum("jordan_chevalley requires a rational spectrum");
    // Incremental CRT over Q[x].
    Poly p = {};        // current solution
    Poly modulus = {Rat(1)};
    for (const auto& [r, mult] : *roots) {
        // q_i = (x - r)^mult
        Poly qi = {Rat(1)};
        Poly lin = {-r, Rat(1)};
        for (std::size_t k = 0; k < mult; ++k)
            qi = poly_mul(qi, lin);
        auto [g, u, v] = poly_ext_gcd(modulus, qi);
        (void)v;
        // g == 1 since the moduli are coprime; new p adds the correction
        // modulus * u * (r - p) so that p = r mod q_i while unchanged mod
        // the accumulated modulus.
        Poly target = {r};
        Poly corr = poly_mul(poly_mul(modulus, u), poly_sub(target, p));
        modulus = poly_mul(modulus, qi);
        p = poly_mod(poly_add(p, corr), modulus);
    }
    Mat s = poly_eval_mat(p, m);
    Mat nil = mat_sub(m, s);

    // Certify the output: the parts commute, N is nilpotent, and S is killed
    // by the squarefree product of (x - r_i), hence diagonalizable.
    if (mat_mul(s, nil) != mat_mul(nil, s))
        throw SlaError("jordan_chevalley: parts do not commute");
    if (!is_nilpotent_mat(nil))
        throw SlaError("jordan_chevalley: nilpotent part is not nilpotent");
    Mat probe = mat_identity(n);
    for (const auto& [r, mult] : *roots) {
        Mat shifted = s;
        for (std::size_t d = 0; d < n; ++d)
            shifted[d][d] -= r;
        probe = mat_mul(probe, shifted);
    }
    if (!mat_is_zero(probe))
        throw SlaError("jordan_chevalley: semisimple part fails its certificate");
    return {s, nil};
}

// Simultaneous eigenbasis of a commuting family of diagonalizable matrices.
// Returns the change-of-basis matrix whose columns are the new basis vectors.
//
// The space is refined one matrix at a time: each current block is split into
// eigenspaces of the restriction, eigenvalues taken in descending order, and
// every new block is put into canonical reduced row form. At the end the
// blocks are ordered by their leading coordinate (stable), so diagonal input
// yields the identity.
inline Mat simultaneous_eigenbasis(const std::vector<Mat>& mats) {
    if (mats.empty())
        throw SlaError("simultaneous_eigenbasis: empty family");
    const std::size_t n = mat_rows(mats[0]);
    // Blocks as lists of basis vectors (rows of canonical form).
    std::vector<Mat> blocks = {mat_identity(n)};
    for (const auto& m : mats) {
        std::vector<Mat> next;
        for (const auto& block : blocks) {
            // Columns of B span the block; X is the restriction of m.
            Mat b_cols = mat_transpose(block);
            Mat mb = mat_mul(m, b_cols);
            auto x = solve_matrix(b_cols, mb);
            if (!x)
                throw SlaError("simultaneous_eigenbasis: family does not commute");
            auto roots = rational_eigenvalues(*x);
            if (!roots)
                throw IrrationalSpectrum("simultaneous_eigenbasis: irrational eigenvalue");
            std::size_t found = 0;
            for (const auto& [lambda, mult] : *roots) {
                Mat shifted = *x;
                for (std::size_t d = 0; d < mat_rows(shifted); ++d)
                    shifted[d][d] -= lambda;
                RrefResult rr = rref(shifted);
                if (rr.nullspace.empty())
                    continue;
                // Lift eigenvectors of the restriction back to ambient coords.
                Mat lifted;
                for (const auto& coeff : rr.nullspace) {
                    Vec v(n, Rat(0));
                    for (std::size_t t = 0; t < coeff.size(); ++t)
                        if (coeff[t] != 0)
                            vec_add_scaled(v, coeff[t], block[t]);
                    lifted.push_back(std::move(v));
                }
                found += lifted.size();
                next.push_back(subspace_from_rows(lifted, n).rows);
            }
            if (found != block.size())
                throw NotSemisimple("simultaneous_eigenbasis: restriction not diagonalizable");
        }
        blocks = std::move(next);
    }
    auto leading = [](const Mat& block) {
        std::size_t p = 0;
        const Vec& v = block[0];
        while (p < v.size() && v[p] == 0)
            ++p;
        return p;
    };
    std::stable_sort(blocks.begin(), blocks.end(),
                     [&](const Mat& a, const Mat& b) { return leading(a) < leading(b); });
    Mat cols;
    for (const auto& block : blocks)
        for (const auto& v : block)
            cols.push_back(v);
    return mat_transpose(cols); // vectors become columns
}

} // namespace sla
