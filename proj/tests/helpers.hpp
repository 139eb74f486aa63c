#pragma once

#include <cstdlib>
#include <random>
#include <string>

#include "sla/format.hpp"

namespace test_helpers {

inline std::string corpus_dir() {
    if (const char* env = std::getenv("SLA_CORPUS_DIR"))
        return env;
    return "corpus";
}

inline sla::AlgebraFile load(const std::string& stem) {
    return sla::parse_algebra_file(corpus_dir() + "/" + stem + ".sla");
}

inline sla::SuperAlgebra corpus(const std::string& stem) {
    return load(stem).parsed;
}

// Deterministic rational fuzz values: numerators in [-max, max], small
// denominators; never depends on global state.
struct RatGen {
    std::mt19937_64 rng;
    explicit RatGen(std::uint64_t seed) : rng(seed) {}

    sla::Rat rat(int max_num = 6, int max_den = 3) {
        std::uniform_int_distribution<int> num(-max_num, max_num);
        std::uniform_int_distribution<int> den(1, max_den);
        return sla::Rat(num(rng), den(rng));
    }

    sla::Rat nonzero_rat(int max_num = 6, int max_den = 3) {
        while (true) {
            sla::Rat r = rat(max_num, max_den);
            if (r != 0)
                return r;
        }
    }

    int integer(int lo, int hi) {
        std::uniform_int_distribution<int> d(lo, hi);
        return d(rng);
    }

    sla::Vec vec(std::size_t len, int max_num = 6, int max_den = 3) {
        sla::Vec v(len);
        for (auto& e : v)
            e = rat(max_num, max_den);
        return v;
    }

    sla::Mat mat(std::size_t r, std::size_t c, int max_num = 6, int max_den = 3) {
        sla::Mat m(r);
        for (auto& row : m)
            row = vec(c, max_num, max_den);
        return m;
    }

    // Random invertible matrix: unit lower times unit upper triangular with
    // a shuffled diagonal of nonzero scalars.
    sla::Mat invertible(std::size_t n) {
        sla::Mat l = sla::mat_identity(n), u = sla::mat_identity(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < i; ++j) {
                l[i][j] = rat(3, 2);
                u[j][i] = rat(3, 2);
            }
        for (std::size_t i = 0; i < n; ++i)
            u[i][i] = nonzero_rat(3, 2);
        return sla::mat_mul(l, u);
    }
};

} // namespace test_helpers
