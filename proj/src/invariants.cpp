#include "ringrank/invariants.hpp"

#include "ringrank/error.hpp"

#include <algorithm>

namespace ringrank {

namespace {

unsigned log_index(const Int& index, const Int& q, const char* what)
{
    const auto d = exact_log(index, q);
    if (!d)
        throw Error(Errc::NonIntegralLog, std::string(what) + ": index " + to_string(index) +
                                              " is not a power of " + to_string(q));
    return *d;
}

std::vector<PrimeSpot> pull_back_maximals(const Order& r, const FinQuotient& q)
{
    std::vector<PrimeSpot> out;
    if (q.ring.is_zero_ring())
        return out;
    for (const auto& m : maximal_ideals(q.ring))
        out.push_back(PrimeSpot{OrderIdeal(r, q.pullback(m.ideal)), m.p, m.f});
    return out;
}

} // namespace

std::vector<PrimeSpot> primes_above(const Order& r, const Int& p)
{
    if (p < 2 || !is_prime(p))
        throw Error(Errc::NotPrime, to_string(p) + " is not prime");
    IntVec gen = r.one();
    gen[0] = p;
    return pull_back_maximals(r, quotient_ring(r, ideal_from_gens(r, {gen})));
}

unsigned mu_p(const OrderIdeal& i, const PrimeSpot& P)
{
    if (!(i.owner() == P.ideal.owner()))
        throw Error(Errc::OwnerMismatch, "ideal and prime belong to different orders");
    const OrderIdeal pi = ideal_mul(P.ideal, i);
    return log_index(ideal_norm(pi) / ideal_norm(i), P.residue_size(), "mu_p");
}

unsigned z_p(const Order& r, const PrimeSpot& P)
{
    if (!(P.ideal.owner() == r))
        throw Error(Errc::OwnerMismatch, "prime belongs to a different order");
    return mu_p(P.ideal, P);
}

std::vector<unsigned> hilbert_values(const Order& r, const PrimeSpot& P, unsigned cap)
{
    if (!(P.ideal.owner() == r))
        throw Error(Errc::OwnerMismatch, "prime belongs to a different order");
    std::vector<unsigned> d;
    OrderIdeal power = P.ideal;
    const Int q = P.residue_size();
    for (unsigned i = 1; i <= cap; ++i) {
        OrderIdeal next = ideal_mul(power, P.ideal);
        d.push_back(log_index(ideal_norm(next) / ideal_norm(power), q, "Hilbert value"));
        const std::size_t s = d.size();
        if (s >= 3 && d[s - 1] == d[s - 2] && d[s - 2] == d[s - 3])
            return d;
        power = std::move(next);
    }
    throw Error(Errc::NoStabilization, "Hilbert values did not stabilize within " + std::to_string(cap) + " steps");
}

unsigned e_p(const Order& r, const PrimeSpot& P, unsigned cap)
{
    return hilbert_values(r, P, cap).back();
}

std::vector<PrimeSpot> singular_primes(const EmbeddedOrder& r)
{
    const Conductor c = conductor(r);
    if (is_unit_ideal(c.in_order))
        return {};
    return pull_back_maximals(r.order, quotient_ring(r.order, c.in_order));
}

RankValue mu_ideal(const EmbeddedOrder& r, const OrderIdeal& i)
{
    if (!(i.owner() == r.order))
        throw Error(Errc::OwnerMismatch, "ideal belongs to a different order");
    unsigned local = 1;
    for (const auto& P : singular_primes(r))
        local = std::max(local, mu_p(i, P));
    if (local >= 2)
        return RankValue::exact(local);
    for (std::size_t j = 0; j < r.order.degree(); ++j)
        if (ideal_from_gens(r.order, {i.lattice().column(j)}) == i)
            return RankValue::exact(1);
    return RankValue::unknown_one_or_two();
}

RankReport rank_order(const EmbeddedOrder& r, std::string ring_id, unsigned cap)
{
    RankReport rep;
    rep.ring_id = std::move(ring_id);
    rep.ceiling = static_cast<unsigned>(r.order.degree());
    const Conductor c = conductor(r);
    rep.conductor_index = ideal_norm(c.in_order);
    rep.normal = rep.conductor_index == 1;
    rep.notes.push_back("normality is relative to the supplied ambient order");
    if (rep.normal) {
        rep.rank = RankValue::unknown_one_or_two();
        rep.notes.push_back("conductor is the unit ideal; principal and non-principal cases are not separated");
        return rep;
    }
    for (auto& P : pull_back_maximals(r.order, quotient_ring(r.order, c.in_order))) {
        const unsigned z = z_p(r.order, P);
        std::vector<unsigned> h = hilbert_values(r.order, P, cap);
        const unsigned e = h.back();
        rep.singular.push_back(PrimeInvariants{std::move(P), z, e, std::move(h)});
    }
    std::size_t best = 0;
    for (std::size_t k = 1; k < rep.singular.size(); ++k)
        if (rep.singular[k].e > rep.singular[best].e)
            best = k;
    const PrimeInvariants& w = rep.singular[best];
    rep.rank = RankValue::exact(w.e);

    // The first power of P whose Hilbert value already equals e needs e
    // generators locally.
    unsigned power = 1;
    while (w.hilbert[power - 1] != w.e)
        ++power;
    OrderIdeal ideal = ideal_pow(w.prime.ideal, power);
    const unsigned mu = mu_p(ideal, w.prime);
    rep.witness = RankWitness{std::move(ideal), best, power, mu};

    rep.notes.push_back("rank is the largest multiplicity over singular primes");
    if (w.e > rep.ceiling)
        throw Error(Errc::InvalidArgument, "multiplicity " + std::to_string(w.e) + " exceeds the degree " +
                                               std::to_string(rep.ceiling));
    return rep;
}

} // namespace ringrank
