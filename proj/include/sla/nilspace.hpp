#pragma once

#include <cstdint>
#include <vector>

#include "sla/poly.hpp"

namespace sla {

namespace detail {

// Dense integer matrices in two flavours: a fast fixed-width path used when
// an a-priori bound shows no intermediate entry can overflow, and a big-int
// fallback. Both are only used internally by all_nilpotent_space.
using I128Mat = std::vector<std::vector<__int128>>;
using IntMat = std::vector<std::vector<Int>>;

inline I128Mat i128_mul(const I128Mat& a, const I128Mat& b) {
    const std::size_t n = a.size();
    I128Mat out(n, std::vector<__int128>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < n; ++t) {
            const __int128 v = a[i][t];
            if (v == 0)
                continue;
            for (std::size_t j = 0; j < n; ++j)
                out[i][j] += v * b[t][j];
        }
    return out;
}

inline IntMat int_mul(const IntMat& a, const IntMat& b) {
    const std::size_t n = a.size();
    IntMat out(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < n; ++t) {
            const Int& v = a[i][t];
            if (v == 0)
                continue;
            for (std::size_t j = 0; j < n; ++j)
                out[i][j] += v * b[t][j];
        }
    return out;
}

// Enumerates all t in Z_{>=0}^v with sum(t) == total, invoking fn on each.
template <typename Fn>
inline bool for_each_composition(std::size_t v, std::size_t total, std::vector<std::size_t>& t,
                                 std::size_t pos, std::size_t left, Fn&& fn) {
    if (pos + 1 == v) {
        t[pos] = left;
        return fn(t);
    }
    for (std::size_t x = 0; x <= left; ++x) {
        t[pos] = x;
        if (!for_each_composition(v, total, t, pos + 1, left - x, fn))
            return false;
    }
    return true;
}

} // namespace detail

// Decides whether *every* element of the span of the given matrices is
// nilpotent. The basis matrices must be square of equal size.
//
// Certificate: M(t) = sum t_i B_i is nilpotent iff tr(M(t)^k) = 0 for
// k = 1..d (Newton's identities turn vanishing power sums into a vanishing
// characteristic polynomial below the leading term). Each trace is a
// homogeneous polynomial of degree k in t, so it vanishes identically iff it
// vanishes on the integer simplex slice { t >= 0 : sum t_i = d }: on the
// affine hyperplane the restriction is a polynomial of total degree <= d,
// which the principal lattice of that degree determines uniquely, and
// homogeneity spreads the vanishing along every ray through the hyperplane.
// The slice has C(d+v-1, v-1) points — exponentially smaller than a full
// degree-d grid — and all arithmetic is integer after clearing denominators.
inline bool all_nilpotent_space(const std::vector<Mat>& basis) {
    if (basis.empty())
        return true;
    const std::size_t d = mat_rows(basis[0]);
    if (d == 0)
        return true;
    // Quick reject: every basis matrix itself must be nilpotent.
    for (const auto& b : basis)
        if (!is_nilpotent_mat(b))
            return false;

    // Clear denominators per basis matrix; rescaling a spanning set does not
    // change its span, hence not the property either.
    std::vector<detail::IntMat> ints;
    Int max_abs = 0;
    for (const auto& b : basis) {
        auto [bi, scale] = mat_integerize(b);
        (void)scale;
        detail::IntMat m(d, std::vector<Int>(d));
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                m[i][j] = rat_num(bi[i][j]);
                max_abs = std::max(max_abs, int_abs(m[i][j]));
            }
        ints.push_back(std::move(m));
    }
    const std::size_t v = ints.size();

    // Entry bound for M(t)^k with sum t = d: |M(t)| <= d*A entrywise, and a
    // k-fold product grows by a factor d*(d*A) per step. Fits __int128 when
    // the bound stays under 2^126.
    Int bound = 1;
    const Int entry = Int(d) * max_abs;
    for (std::size_t k = 0; k < d; ++k)
        bound *= Int(d) * entry;
    // Extra factor d leaves room for the final trace accumulation.
    const bool fits_i128 = Int(d) * bound < (Int(1) << 126);

    std::vector<std::size_t> t(v, 0);
    bool ok = true;
    auto test_point = [&](const std::vector<std::size_t>& pt) {
        if (fits_i128) {
            detail::I128Mat m(d, std::vector<__int128>(d, 0));
            for (std::size_t b = 0; b < v; ++b) {
                if (pt[b] == 0)
                    continue;
                const auto c = static_cast<__int128>(pt[b]);
                for (std::size_t i = 0; i < d; ++i)
                    for (std::size_t j = 0; j < d; ++j)
                        m[i][j] += c * static_cast<__int128>(ints[b][i][j].convert_to<std::int64_t>());
            }
            detail::I128Mat p = m;
            for (std::size_t k = 1; k <= d; ++k) {
                __int128 tr = 0;
                for (std::size_t i = 0; i < d; ++i)
                    tr += p[i][i];
                if (tr != 0) {
                    ok = false;
                    return false;
                }
                if (k < d)
                    p = detail::i128_mul(p, m);
            }
        } else {
            detail::IntMat m(d, std::vector<Int>(d, 0));
            for (std::size_t b = 0; b < v; ++b) {
                if (pt[b] == 0)
                    continue;
                const Int c = pt[b];
                for (std::size_t i = 0; i < d; ++i)
                    for (std::size_t j = 0; j < d; ++j)
                        m[i][j] += c * ints[b][i][j];
            }
            detail::IntMat p = m;
            for (std::size_t k = 1; k <= d; ++k) {
                Int tr = 0;
                for (std::size_t i = 0; i < d; ++i)
                    tr += p[i][i];
                if (tr != 0) {
                    ok = false;
                    return false;
                }
                if (k < d)
                    p = detail::int_mul(p, m);
            }
        }
        return true;
    };
    detail::for_each_composition(v, d, t, 0, d, test_point);
    return ok;
}

} // namespace sla
