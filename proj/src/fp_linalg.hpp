#pragma once

// Dense linear algebra and polynomial helpers over a prime field F_p,
// p < 2^62. Internal to the finite-ring code.

#include <cstdint>
#include <vector>

namespace ringrank::fp {

using Vec = std::vector<std::int64_t>;

std::int64_t mul(std::int64_t a, std::int64_t b, std::int64_t p);
std::int64_t inv(std::int64_t a, std::int64_t p);
std::int64_t norm(std::int64_t a, std::int64_t p);

/// Row-reduces `rows` in place (reduced row echelon form, zero rows dropped)
/// and returns the pivot column of each remaining row.
std::vector<std::size_t> rref(std::vector<Vec>& rows, std::size_t ncols, std::int64_t p);

/// Basis of {x : sum_j x_j cols[j] == 0}, for column vectors of length m.
std::vector<Vec> kernel(const std::vector<Vec>& cols, std::size_t m, std::int64_t p);

/// Echelon basis of the span of `vectors` in F_p^n.
std::vector<Vec> span(std::vector<Vec> vectors, std::size_t n, std::int64_t p);

/// {a in F_p^n : M a in W}, where M is given by its n image columns (length m)
/// and W by spanning vectors of length m.
std::vector<Vec> preimage(const std::vector<Vec>& map_cols, const std::vector<Vec>& w, std::size_t m,
                          std::int64_t p);

/// Distinct roots in F_p of a polynomial (coefficients low to high) that
/// splits into distinct linear factors.
std::vector<std::int64_t> split_roots(Vec f, std::int64_t p);

} // namespace ringrank::fp
