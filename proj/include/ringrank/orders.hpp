#pragma once

// Commutative Z-algebras that are free of finite rank N, given by integer
// structure constants with the first basis vector equal to 1, together with
// their full-rank ideals and suborders.

#include "ringrank/latcore.hpp"

#include <memory>
#include <vector>

namespace ringrank {

class Order {
public:
    /// table[(i * N + j) * N + k] is the coefficient of e_k in e_i * e_j.
    /// Commutativity, identity and associativity are verified.
    static Order from_table(std::size_t degree, std::vector<Int> table);

    std::size_t degree() const noexcept { return n_; }
    const Int& structure(std::size_t i, std::size_t j, std::size_t k) const
    {
        return (*table_)[(i * n_ + j) * n_ + k];
    }
    const std::vector<Int>& table() const noexcept { return *table_; }

    IntVec one() const;
    IntVec unit_vector(std::size_t i) const;
    IntVec mul(const IntVec& x, const IntVec& y) const;
    /// Matrix whose j-th column is a * e_j.
    IntMat mult_matrix(const IntVec& a) const;

    bool same_as(const Order& other) const noexcept { return table_ == other.table_; }
    bool operator==(const Order& other) const { return n_ == other.n_ && (same_as(other) || *table_ == *other.table_); }

private:
    Order(std::size_t n, std::shared_ptr<const std::vector<Int>> table) : n_(n), table_(std::move(table)) {}
    std::size_t n_ = 0;
    std::shared_ptr<const std::vector<Int>> table_;
};

/// Power-basis order Z[x]/(f); coeffs are c_0, ..., c_N with c_N == 1.
Order order_from_poly(const std::vector<Int>& coeffs);

IntVec elt_mul(const Order& r, const IntVec& x, const IntVec& y);

/// A suborder R of an ambient order S: R carries its own table, and
/// `lattice` holds R's basis expressed in S-coordinates (the embedding).
struct EmbeddedOrder {
    Order ambient;
    Order order;
    Lattice lattice;

    const IntMat& embedding() const { return lattice.basis(); }
    /// R-coordinates -> S-coordinates.
    IntVec to_ambient(const IntVec& x) const { return lattice.basis() * x; }
    /// S-coordinates of an element of R -> R-coordinates (NotContained otherwise).
    IntVec to_order(const IntVec& y) const;
    /// A sublattice of `lattice` (S-coordinates) re-expressed in R-coordinates.
    Lattice lattice_to_order(const Lattice& in_ambient) const;
    Lattice lattice_to_ambient(const Lattice& in_order) const;
};

EmbeddedOrder trivial_embedding(const Order& s);
EmbeddedOrder suborder_from_lattice(const Order& s, const Lattice& l);

class OrderIdeal {
public:
    /// Checks that `lat` is closed under multiplication by the basis of `owner`.
    OrderIdeal(Order owner, Lattice lat);

    const Order& owner() const noexcept { return owner_; }
    const Lattice& lattice() const noexcept { return lat_; }

    bool operator==(const OrderIdeal& other) const { return owner_ == other.owner_ && lat_ == other.lat_; }

private:
    struct Trusted {};
    OrderIdeal(Order owner, Lattice lat, Trusted) : owner_(std::move(owner)), lat_(std::move(lat)) {}
    friend OrderIdeal ideal_mul(const OrderIdeal&, const OrderIdeal&);
    friend OrderIdeal ideal_from_gens(const Order&, const std::vector<IntVec>&);

    Order owner_;
    Lattice lat_;
};

OrderIdeal unit_ideal(const Order& r);
OrderIdeal ideal_from_gens(const Order& r, const std::vector<IntVec>& gens);
OrderIdeal ideal_mul(const OrderIdeal& i, const OrderIdeal& j);
OrderIdeal ideal_pow(const OrderIdeal& i, unsigned k);
OrderIdeal ideal_sum(const OrderIdeal& i, const OrderIdeal& j);
Int ideal_norm(const OrderIdeal& i);
bool is_unit_ideal(const OrderIdeal& i);

struct Conductor {
    OrderIdeal in_order;   // as an ideal of R
    OrderIdeal in_ambient; // the same set as an ideal of S
};

/// {x in S : x S is contained in R}.
Conductor conductor(const EmbeddedOrder& r);

} // namespace ringrank
