#include "ringrank/constructions.hpp"

#include "ringrank/error.hpp"
#include "ringrank/invariants.hpp"

#include <set>

namespace ringrank {

namespace {

void require_prime(const Int& p)
{
    if (p < 2 || !is_prime(p))
        throw Error(Errc::NotPrime, to_string(p) + " is not prime");
}

std::int64_t small_prime_power(const Int& p, unsigned n)
{
    const Int q = ipow(p, n);
    if (q >= Int("4611686018427387904"))
        throw Error(Errc::Overflow, to_string(p) + "^" + std::to_string(n) + " is too large");
    return to_int64(q);
}

} // namespace

EmbeddedOrder build_axs(const Order& s, const Int& x)
{
    if (x == 0 || x == 1 || x == -1)
        throw Error(Errc::UnitOrZeroX, "x must be a nonzero non-unit, got " + to_string(x));
    const std::size_t n = s.degree();
    std::vector<IntVec> cols{s.one()};
    for (std::size_t j = 0; j < n; ++j) {
        IntVec v(n);
        v[j] = x;
        cols.push_back(std::move(v));
    }
    return suborder_from_lattice(s, Lattice::from_generators(IntMat::from_columns(cols, n), abs(x)));
}

EmbeddedOrder build_matson(unsigned n)
{
    if (n < 2)
        throw Error(Errc::BadDegree, "Matson order needs n >= 2, got " + std::to_string(n));
    std::vector<Int> f(n + 1);
    f[0] = -2;
    f[n] = 1;
    return build_axs(order_from_poly(f), 2);
}

EmbeddedOrder build_pullback(const Order& s, const std::vector<Int>& ps)
{
    if (ps.empty())
        throw Error(Errc::InvalidArgument, "need at least one prime");
    const std::size_t n = s.degree();
    std::set<Int> seen;
    std::optional<Lattice> l;
    for (const Int& p : ps) {
        require_prime(p);
        if (!seen.insert(p).second)
            throw Error(Errc::InvalidArgument, "prime " + to_string(p) + " listed twice");
        auto spots = primes_above(s, p);
        if (spots.size() != 1)
            throw Error(Errc::SplitPrime, to_string(p) + " has " + std::to_string(spots.size()) + " primes above it");
        if (spots[0].f == 1)
            throw Error(Errc::DegreeOne, "the prime above " + to_string(p) + " has residue degree 1");
        const Lattice& P = spots[0].ideal.lattice();
        std::vector<IntVec> cols{s.one()};
        for (std::size_t j = 0; j < n; ++j)
            cols.push_back(P.column(j));
        Lattice lp = Lattice::from_generators(IntMat::from_columns(cols, n), P.determinant());
        l = l ? lat_intersect(*l, lp) : std::move(lp);
    }
    return suborder_from_lattice(s, *l);
}

FinRing build_matson_quotient(unsigned n)
{
    const EmbeddedOrder r = build_matson(n);
    const auto spots = primes_above(r.order, 2);
    if (spots.size() != 1)
        throw Error(Errc::SplitPrime, "expected a single prime over 2");
    return quotient_ring(r.order, ideal_pow(spots[0].ideal, 2)).ring;
}

FinRing build_trunc_poly(const Int& p, unsigned n, unsigned D)
{
    require_prime(p);
    if (n < 1 || D < 1)
        throw Error(Errc::InvalidArgument, "need n >= 1 and D >= 1");
    const std::int64_t q = small_prime_power(p, n);
    std::vector<std::int64_t> table(std::size_t{D} * D * D, 0);
    for (unsigned a = 0; a < D; ++a)
        for (unsigned b = 0; a + b < D; ++b)
            table[(std::size_t{a} * D + b) * D + a + b] = 1;
    FinRing::Elem one(D, 0);
    one[0] = 1;
    return FinRing::from_table(std::vector<std::int64_t>(D, q), std::move(table), std::move(one));
}

TruncWitness witness_mn1(const Int& p, unsigned n, unsigned D)
{
    if (n < 1)
        throw Error(Errc::InvalidArgument, "need n >= 1");
    if (D <= n)
        throw Error(Errc::TruncationTooShort, "need D > n, got D = " + std::to_string(D));
    FinRing r = build_trunc_poly(p, n, D);
    const FinIdeal m = fin_ideal_from_gens(r, {r.scale(r.one(), to_int64(p)), r.gen(1)});
    FinIdeal i = fin_ideal_pow(r, m, n - 1);
    const unsigned mu = mu_fin(r, i);
    return TruncWitness{std::move(r), std::move(i), mu};
}

FinRing build_semigroup_trunc(const Int& p, unsigned n, unsigned D)
{
    require_prime(p);
    if (n < 2)
        throw Error(Errc::InvalidArgument, "need n >= 2");
    if (D < 2 * n + 1)
        throw Error(Errc::TruncationTooShort, "need D >= 2n + 1, got D = " + std::to_string(D));
    const std::int64_t pp = small_prime_power(p, 1);
    const std::size_t k = D - n + 1;
    auto degree = [&](std::size_t g) { return g == 0 ? 0U : n + static_cast<unsigned>(g) - 1; };
    std::vector<std::int64_t> table(k * k * k, 0);
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) {
            const unsigned d = degree(a) + degree(b);
            if (d >= D)
                continue;
            const std::size_t c = d == 0 ? 0 : d - n + 1;
            table[(a * k + b) * k + c] = 1;
        }
    FinRing::Elem one(k, 0);
    one[0] = 1;
    return FinRing::from_table(std::vector<std::int64_t>(k, pp), std::move(table), std::move(one));
}

FinIdeal semigroup_maximal_ideal(const FinRing& r)
{
    std::vector<FinRing::Elem> gens;
    for (std::size_t j = 1; j < r.num_gens(); ++j)
        gens.push_back(r.gen(j));
    return fin_ideal_from_gens(r, gens);
}

} // namespace ringrank
