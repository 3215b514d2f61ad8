#pragma once

// Local invariants of orders at maximal ideals and the rank certificate.

#include "ringrank/finring.hpp"
#include "ringrank/orders.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ringrank {

inline constexpr unsigned kDefaultHilbertCap = 24;

/// A maximal ideal of an order with its residue field F_{p^f}.
struct PrimeSpot {
    OrderIdeal ideal;
    Int p;
    unsigned f;
    Int residue_size() const { return ipow(p, f); }
};

std::vector<PrimeSpot> primes_above(const Order& r, const Int& p);

/// dim_{R/P} I/PI.
unsigned mu_p(const OrderIdeal& i, const PrimeSpot& P);
unsigned z_p(const Order& r, const PrimeSpot& P);

/// d_i = dim_{R/P} P^i/P^{i+1} for i = 1, 2, ... until three consecutive
/// values agree.
std::vector<unsigned> hilbert_values(const Order& r, const PrimeSpot& P, unsigned cap = kDefaultHilbertCap);
unsigned e_p(const Order& r, const PrimeSpot& P, unsigned cap = kDefaultHilbertCap);

/// Maximal ideals of R containing the conductor of R in its ambient order,
/// which the caller asserts is the normalization.
std::vector<PrimeSpot> singular_primes(const EmbeddedOrder& r);

/// Either an exact value (lo == hi) or the interval [lo, hi].
struct RankValue {
    unsigned lo = 0;
    unsigned hi = 0;
    static RankValue exact(unsigned v) { return {v, v}; }
    static RankValue unknown_one_or_two() { return {1, 2}; }
    bool is_exact() const { return lo == hi; }
    bool operator==(const RankValue&) const = default;
};

RankValue mu_ideal(const EmbeddedOrder& r, const OrderIdeal& i);

struct PrimeInvariants {
    PrimeSpot prime;
    unsigned z;
    unsigned e;
    std::vector<unsigned> hilbert;
};

struct RankWitness {
    OrderIdeal ideal;       // P^power for the prime achieving the rank
    std::size_t prime_index; // into RankReport::singular
    unsigned power;
    unsigned mu;            // mu_p(ideal, P)
};

struct RankReport {
    std::string ring_id;
    bool normal = false;
    Int conductor_index; // [R : c]
    std::vector<PrimeInvariants> singular;
    RankValue rank;
    std::optional<RankWitness> witness;
    unsigned ceiling = 0; // degree N bounds mu of every ideal
    std::vector<std::string> notes;
};

RankReport rank_order(const EmbeddedOrder& r, std::string ring_id = {}, unsigned cap = kDefaultHilbertCap);

} // namespace ringrank
