#pragma once

// Seeded random generators for the property tests.

#include "ringrank/latcore.hpp"

#include <random>

namespace gen {

using ringrank::Int;
using ringrank::IntMat;
using ringrank::IntVec;

struct Source {
    explicit Source(std::uint64_t seed) : rng(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }
    std::size_t index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

    IntMat matrix(std::size_t rows, std::size_t cols, long bound)
    {
        IntMat m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                m(i, j) = integer(-bound, bound);
        return m;
    }

    IntMat nonsingular(std::size_t n, long bound)
    {
        for (;;) {
            IntMat m = matrix(n, n, bound);
            if (ringrank::determinant(m) != 0)
                return m;
        }
    }

    IntVec vector(std::size_t n, long bound)
    {
        IntVec v(n);
        for (auto& x : v)
            x = integer(-bound, bound);
        return v;
    }

    ringrank::Lattice lattice(std::size_t n, long bound)
    {
        return ringrank::Lattice::from_generators(nonsingular(n, bound));
    }

    std::mt19937_64 rng;
};

} // namespace gen
