#pragma once

// Finite commutative rings presented as additive groups Z/d_1 + ... + Z/d_k
// (d_1 | d_2 | ... | d_k, each >= 2) with structure constants for the
// products of the generators. Ideals are subgroups, stored as lattices in
// Z^k that contain diag(d_1, ..., d_k).

#include "ringrank/latcore.hpp"
#include "ringrank/orders.hpp"

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

namespace ringrank {

inline constexpr std::uint64_t kDefaultSizeCap = 4096;

class FinRing {
public:
    using Elem = std::vector<std::int64_t>;

    static FinRing zero_ring();
    /// table[(a * k + b) * k + c] is the coefficient of g_c in g_a * g_b.
    /// Ring axioms are verified over all generator triples.
    static FinRing from_table(std::vector<std::int64_t> divisors, std::vector<std::int64_t> table, Elem one);

    std::size_t num_gens() const noexcept { return d_->divisors.size(); }
    const std::vector<std::int64_t>& divisors() const noexcept { return d_->divisors; }
    std::int64_t divisor(std::size_t i) const { return d_->divisors[i]; }
    /// Additive exponent d_k (1 for the zero ring).
    std::int64_t exponent() const noexcept { return num_gens() ? d_->divisors.back() : 1; }
    Int size() const;
    bool is_zero_ring() const noexcept { return num_gens() == 0; }
    std::int64_t structure(std::size_t a, std::size_t b, std::size_t c) const
    {
        const std::size_t k = num_gens();
        return d_->table[(a * k + b) * k + c];
    }
    const std::vector<std::int64_t>& table() const noexcept { return d_->table; }

    const Elem& one() const noexcept { return d_->one; }
    Elem zero() const { return Elem(num_gens(), 0); }
    Elem gen(std::size_t i) const;

    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem scale(const Elem& a, std::int64_t c) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem pow(Elem a, std::uint64_t e) const;
    bool is_zero(const Elem& a) const;

    Elem reduce(const IntVec& v) const;
    IntVec to_int_vec(const Elem& a) const;

    /// Mixed-radix enumeration of elements (coordinate 0 varies fastest).
    std::uint64_t element_count() const;
    Elem element(std::uint64_t index) const;

    bool operator==(const FinRing& other) const
    {
        return d_ == other.d_ || (d_->divisors == other.d_->divisors && d_->table == other.d_->table &&
                                  d_->one == other.d_->one);
    }

private:
    struct Data {
        std::vector<std::int64_t> divisors;
        std::vector<std::int64_t> table;
        Elem one;
    };
    explicit FinRing(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
    std::shared_ptr<const Data> d_;
};

class FinIdeal {
public:
    /// Checks that `lat` contains diag(d) and is closed under the ring generators.
    FinIdeal(const FinRing& r, Lattice lat);

    const Lattice& lattice() const noexcept { return lat_; }
    bool operator==(const FinIdeal& other) const { return lat_ == other.lat_; }

private:
    struct Trusted {};
    FinIdeal(Lattice lat, Trusted) : lat_(std::move(lat)) {}
    friend class IdealOracle;
    friend FinIdeal trusted_fin_ideal(Lattice lat);

    Lattice lat_;
};

FinIdeal fin_zero_ideal(const FinRing& r);
FinIdeal fin_unit_ideal(const FinRing& r);
FinIdeal fin_ideal_from_gens(const FinRing& r, const std::vector<FinRing::Elem>& gens);
FinIdeal fin_ideal_mul(const FinRing& r, const FinIdeal& a, const FinIdeal& b);
FinIdeal fin_ideal_pow(const FinRing& r, const FinIdeal& a, unsigned k);
FinIdeal fin_ideal_sum(const FinRing& r, const FinIdeal& a, const FinIdeal& b);
FinIdeal fin_ideal_intersect(const FinRing& r, const FinIdeal& a, const FinIdeal& b);
bool fin_ideal_contains(const FinRing& r, const FinIdeal& i, const FinRing::Elem& x);
bool fin_ideal_subset(const FinIdeal& a, const FinIdeal& b);
bool fin_ideal_is_zero(const FinRing& r, const FinIdeal& i);
/// [R : I]
Int fin_ideal_index(const FinIdeal& i);
/// |I|
Int fin_ideal_size(const FinRing& r, const FinIdeal& i);
std::vector<FinRing::Elem> fin_ideal_elements(const FinRing& r, const FinIdeal& i,
                                              std::uint64_t cap = kDefaultSizeCap);

/// A finite quotient together with the projection from the presenting
/// lattice: project(x) = (projection * x) mod d, and lifts[i] maps to g_i.
struct FinQuotient {
    FinRing ring;
    IntMat projection;
    std::vector<IntVec> lifts;

    FinRing::Elem project(const IntVec& x) const { return ring.reduce(projection * x); }
    /// Preimage of an ideal of the quotient, in the presenting coordinates.
    Lattice pullback(const FinIdeal& i) const { return lat_preimage_rect(projection, i.lattice()); }
};

FinQuotient quotient_ring(const Order& r, const OrderIdeal& i);
FinQuotient quotient_finring(const FinRing& r, const FinIdeal& i);
FinRing finring_product(const FinRing& a, const FinRing& b);
/// Z^k / diag(orders) with integer structure constants (same layout as
/// FinRing::from_table); orders need not form a divisibility chain, and an
/// order of 1 kills its generator. The result is put in Smith coordinates.
FinQuotient finring_from_presentation(const std::vector<std::int64_t>& orders, const std::vector<Int>& table,
                                      const IntVec& one);

struct MaximalIdeal {
    FinIdeal ideal;
    Int p;       // residue characteristic
    unsigned f;  // residue degree
    Int residue_size() const { return ipow(p, f); }
};

/// All maximal ideals, ordered by residue characteristic.
std::vector<MaximalIdeal> maximal_ideals(const FinRing& r);

/// Composition length of R as a module over itself.
unsigned length(const FinRing& r);

struct LocalFactor {
    MaximalIdeal maximal;
    unsigned length;   // |R_m| = |R/m|^length
    FinIdeal stable_power; // m^t for t large; R/m^t is the local factor R_m
};
std::vector<LocalFactor> local_factors(const FinRing& r);

FinIdeal nilradical(const FinRing& r);

enum class NilMode { Elementwise, Idealwise };
unsigned nilpotency_index(const FinRing& r, NilMode mode, std::uint64_t cap = kDefaultSizeCap);

/// Minimal number of generators via max_m dim_{R/m} I/mI.
unsigned mu_fin(const FinRing& r, const FinIdeal& i);

/// Brute-force ideal lattice: every ideal, found by adding principal ideals
/// one at a time, plus the literal minimal-generator search.
class IdealOracle {
public:
    explicit IdealOracle(FinRing r, std::uint64_t cap = kDefaultSizeCap);

    const FinRing& ring() const noexcept { return r_; }
    const std::vector<FinIdeal>& ideals() const noexcept { return ideals_; }
    /// Least g such that some g elements of I generate I.
    unsigned mu(const FinIdeal& i);
    unsigned rank();

private:
    std::size_t intern(const Lattice& l);
    std::size_t sum(std::size_t a, std::size_t b);
    bool subset(std::size_t a, std::size_t b) const;
    bool search(const std::vector<std::size_t>& cand, std::size_t target, std::size_t start, std::size_t acc,
                unsigned left);

    FinRing r_;
    std::vector<FinIdeal> ideals_;
    std::unordered_map<Lattice, std::size_t> index_;
    std::unordered_map<std::uint64_t, std::size_t> sums_;
    std::vector<std::size_t> principal_; // distinct nonzero principal ideals
    std::size_t zero_id_ = 0;
};

std::vector<FinIdeal> enumerate_ideals(const FinRing& r, std::uint64_t cap = kDefaultSizeCap);
unsigned mu_exhaustive(const FinRing& r, const FinIdeal& i, std::uint64_t cap = kDefaultSizeCap);
unsigned rank_fin_exhaustive(const FinRing& r, std::uint64_t cap = kDefaultSizeCap);

} // namespace ringrank
