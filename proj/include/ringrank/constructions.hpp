#pragma once

// Builders for the concrete families: A + xS suborders, the Matson orders,
// pullback orders, and finite rings from truncated polynomial rings.

#include "ringrank/finring.hpp"
#include "ringrank/orders.hpp"

#include <vector>

namespace ringrank {

/// R(S, x) = Z + xS.
EmbeddedOrder build_axs(const Order& s, const Int& x);
/// Z + 2 Z[2^(1/n)] inside Z[x]/(x^n - 2).
EmbeddedOrder build_matson(unsigned n);
/// Preimage in S of the prime subfields of S/P_p, one inert P_p per p.
EmbeddedOrder build_pullback(const Order& s, const std::vector<Int>& ps);

/// build_matson(n) modulo the square of its prime over 2.
FinRing build_matson_quotient(unsigned n);

/// (Z/p^n)[t]/(t^D); generator i is t^i.
FinRing build_trunc_poly(const Int& p, unsigned n, unsigned D);

struct TruncWitness {
    FinRing ring;
    FinIdeal ideal; // (p, t)^(n-1)
    unsigned mu;
};
TruncWitness witness_mn1(const Int& p, unsigned n, unsigned D);

/// F_p + t^n F_p[t]/(t^D); generator 0 is 1 and generator j >= 1 is t^(n+j-1).
FinRing build_semigroup_trunc(const Int& p, unsigned n, unsigned D);
/// The maximal ideal (t^n, ..., t^(D-1)) of build_semigroup_trunc.
FinIdeal semigroup_maximal_ideal(const FinRing& r);

} // namespace ringrank
