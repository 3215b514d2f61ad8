#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ringrank {

using Int = mpz_class;
using IntVec = std::vector<Int>;

inline std::string to_string(const Int& v) { return v.get_str(); }

inline bool fits_int64(const Int& v) { return mpz_fits_slong_p(v.get_mpz_t()) != 0; }

std::int64_t to_int64(const Int& v);

/// Floor division and the matching non-negative remainder (for b > 0).
Int floor_div(const Int& a, const Int& b);
Int mod_floor(const Int& a, const Int& b);

Int ipow(const Int& base, unsigned long exp);

bool is_prime(const Int& p);

/// Distinct prime divisors in increasing order (trial division; n >= 1).
std::vector<Int> prime_divisors(Int n);

/// Returns k with base^k == value, or nullopt when value is not an exact power.
std::optional<unsigned> exact_log(const Int& value, const Int& base);

/// g = gcd(a, b) = s*a + t*b with g >= 0.
void ext_gcd(const Int& a, const Int& b, Int& g, Int& s, Int& t);

} // namespace ringrank
