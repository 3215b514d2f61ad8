#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "generators.hpp"
#include "ringrank/constructions.hpp"
#include "ringrank/error.hpp"
#include "ringrank/invariants.hpp"

using namespace ringrank;

namespace {

Errc code_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error raised");
    return Errc::InvalidArgument;
}

Order poly(std::initializer_list<long> c)
{
    std::vector<Int> v;
    for (long x : c)
        v.emplace_back(x);
    return order_from_poly(v);
}

// Z[2 * 2^(1/3)] inside Z[2^(1/3)].
EmbeddedOrder two_theta()
{
    return suborder_from_lattice(poly({-2, 0, 0, 1}), Lattice::from_generators(IntMat::diagonal({1, 2, 4})));
}

// Product of two ideals from pairwise products of basis columns.
Lattice naive_product(const Order& r, const Lattice& a, const Lattice& b)
{
    const std::size_t n = r.degree();
    IntMat gens(n, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            gens.set_column(i * n + j, elt_mul(r, a.column(i), b.column(j)));
    return Lattice::from_generators(gens);
}

// The stable value of log_q [P^i : P^(i+1)], from naive products.
unsigned naive_multiplicity(const Order& r, const PrimeSpot& P)
{
    Lattice cur = P.ideal.lattice();
    unsigned last = 0, same = 0;
    for (int i = 0; i < 40; ++i) {
        const Lattice next = naive_product(r, cur, P.ideal.lattice());
        const auto k = exact_log(lat_index(cur, next), P.residue_size());
        REQUIRE(k);
        same = *k == last ? same + 1 : 0;
        last = *k;
        if (same == 3)
            return last;
        cur = next;
    }
    FAIL("no stable value");
    return 0;
}

Order random_order(gen::Source& g)
{
    const std::size_t n = 2 + g.index(2);
    std::vector<Int> c;
    for (std::size_t i = 0; i < n; ++i)
        c.emplace_back(g.integer(-4, 4));
    if (c[0] == 0)
        c[0] = 1;
    c.emplace_back(1);
    return order_from_poly(c);
}

} // namespace

TEST_CASE("primes above")
{
    const Order gauss = poly({1, 0, 1});
    const auto five = primes_above(gauss, 5);
    REQUIRE(five.size() == 2);
    CHECK(five[0].residue_size() == 5);
    CHECK(five[1].residue_size() == 5);
    const auto three = primes_above(gauss, 3);
    REQUIRE(three.size() == 1);
    CHECK(three[0].f == 2);
    CHECK(ideal_norm(three[0].ideal) == 9);
    const auto two = primes_above(gauss, 2);
    REQUIRE(two.size() == 1);
    CHECK(two[0].f == 1);
    CHECK(code_of([&] { primes_above(gauss, 4); }) == Errc::NotPrime);
}

TEST_CASE("local invariants of the Matson orders")
{
    for (unsigned n = 2; n <= 5; ++n) {
        const EmbeddedOrder m = build_matson(n);
        const auto ps = primes_above(m.order, 2);
        REQUIRE(ps.size() == 1);
        CHECK(z_p(m.order, ps[0]) == n);
        CHECK(e_p(m.order, ps[0]) == n);
        CHECK(mu_p(ps[0].ideal, ps[0]) == n);
    }
}

TEST_CASE("an order with embedding dimension below the multiplicity")
{
    const EmbeddedOrder r = two_theta();
    const auto ps = primes_above(r.order, 2);
    REQUIRE(ps.size() == 1);
    CHECK(z_p(r.order, ps[0]) == 2);
    CHECK(hilbert_values(r.order, ps[0]) == std::vector<unsigned>{2, 3, 3, 3});
    CHECK(e_p(r.order, ps[0]) == 3);

    const RankReport rep = rank_order(r);
    CHECK(rep.rank == RankValue::exact(3));
    REQUIRE(rep.witness);
    CHECK(rep.witness->power == 2);
    CHECK(rep.witness->mu == 3);
    CHECK(rep.witness->ideal == ideal_pow(ps[0].ideal, 2));

    CHECK(code_of([&] { hilbert_values(r.order, ps[0], 3); }) == Errc::NoStabilization);
    CHECK(code_of([&] { rank_order(r, "", 3); }) == Errc::NoStabilization);
}

TEST_CASE("rank reports of the sample orders")
{
    const Order cube = poly({-2, 0, 0, 1});
    const RankReport axs = rank_order(build_axs(cube, 6), "axs");
    CHECK(axs.ring_id == "axs");
    CHECK_FALSE(axs.normal);
    CHECK(axs.conductor_index == 6);
    CHECK(axs.rank == RankValue::exact(3));
    REQUIRE(axs.singular.size() == 2);
    for (const auto& s : axs.singular) {
        CHECK(s.z == 3);
        CHECK(s.e == 3);
    }
    CHECK(axs.ceiling == 3);

    const RankReport pb = rank_order(build_pullback(poly({1, 0, 1}), {3, 7}));
    CHECK(pb.rank == RankValue::exact(2));
    REQUIRE(pb.singular.size() == 2);
    CHECK(pb.singular[0].e == 2);
    CHECK(pb.singular[1].e == 2);

    const RankReport normal = rank_order(trivial_embedding(poly({-2, 0, 1})));
    CHECK(normal.normal);
    CHECK(normal.rank == RankValue::unknown_one_or_two());
    CHECK_FALSE(normal.witness);
    CHECK(normal.singular.empty());
}

TEST_CASE("mu of individual ideals")
{
    const EmbeddedOrder m = build_matson(3);
    const auto P = singular_primes(m);
    REQUIRE(P.size() == 1);
    CHECK(mu_ideal(m, P[0].ideal) == RankValue::exact(3));
    CHECK(mu_ideal(m, unit_ideal(m.order)) == RankValue::exact(1));
    CHECK(mu_ideal(m, ideal_from_gens(m.order, {{5, 0, 0}})) == RankValue::exact(1));
    const EmbeddedOrder other = build_matson(2);
    CHECK(code_of([&] { mu_ideal(other, P[0].ideal); }) == Errc::OwnerMismatch);
    CHECK(code_of([&] { mu_p(unit_ideal(other.order), P[0]); }) == Errc::OwnerMismatch);
}

TEST_CASE("reports stay within the degree")
{
    gen::Source g(201);
    for (int t = 0; t < 20; ++t) {
        const EmbeddedOrder r = build_axs(random_order(g), g.integer(2, 6));
        const RankReport rep = rank_order(r);
        CHECK(rep.rank.hi <= r.order.degree());
        for (const auto& s : rep.singular)
            CHECK(s.z <= s.e);
    }
}

TEST_CASE("multiplicities agree with naive products")
{
    gen::Source g(202);
    for (int t = 0; t < 20; ++t) {
        const EmbeddedOrder r = build_axs(random_order(g), g.integer(2, 6));
        for (const auto& P : singular_primes(r)) {
            CHECK(e_p(r.order, P) == naive_multiplicity(r.order, P));
            CHECK(hilbert_values(r.order, P).front() == z_p(r.order, P));
        }
    }
    const EmbeddedOrder tt = two_theta();
    for (const auto& P : singular_primes(tt))
        CHECK(e_p(tt.order, P) == naive_multiplicity(tt.order, P));
}

TEST_CASE("primes away from the conductor are regular")
{
    gen::Source g(203);
    const long primes[] = {5, 7, 11, 13};
    // maximal orders, so every prime outside the conductor is regular
    const Order maximal[] = {poly({1, 0, 1}), poly({-2, 0, 1}), poly({2, 0, 1}), poly({1, -1, 1}),
                             poly({-2, 0, 0, 1}), poly({-1, -1, 0, 1})};
    for (int t = 0; t < 30; ++t) {
        const Order& s = maximal[g.index(6)];
        const EmbeddedOrder r = build_axs(s, g.integer(2, 3));
        const Int p = primes[g.index(4)];
        const Int cond = rank_order(r).conductor_index;
        if (cond % p == 0)
            continue;
        for (const auto& P : primes_above(r.order, p)) {
            CHECK(z_p(r.order, P) == 1);
            CHECK(e_p(r.order, P) == 1);
        }
    }
}

TEST_CASE("A + xS has a single prime over each prime factor of x")
{
    gen::Source g(204);
    for (int t = 0; t < 30; ++t) {
        const long x = g.integer(2, 12);
        const EmbeddedOrder r = build_axs(random_order(g), x);
        for (const auto& p : prime_divisors(x)) {
            const auto ps = primes_above(r.order, p);
            REQUIRE(ps.size() == 1);
            CHECK(ps[0].f == 1);
        }
    }
}

TEST_CASE("local mu bounds generator counts")
{
    gen::Source g(205);
    for (int t = 0; t < 30; ++t) {
        const EmbeddedOrder r = build_axs(random_order(g), g.integer(2, 6));
        const std::size_t n = r.order.degree();
        const unsigned k = 1 + static_cast<unsigned>(g.index(3));
        std::vector<IntVec> gens;
        IntVec base(n, 0);
        base[0] = g.integer(1, 12);
        gens.push_back(base);
        for (unsigned i = 1; i < k; ++i)
            gens.push_back(g.vector(n, 8));
        const OrderIdeal I = ideal_from_gens(r.order, gens);
        const RankValue v = mu_ideal(r, I);
        CHECK(v.lo <= k);
        for (const auto& P : singular_primes(r))
            CHECK(mu_p(I, P) <= k);
    }
}

TEST_CASE("embedding dimension from the finite quotient")
{
    gen::Source g(206);
    for (int t = 0; t < 20; ++t) {
        const EmbeddedOrder r = build_axs(random_order(g), g.integer(2, 6));
        for (const auto& P : singular_primes(r)) {
            const FinQuotient q = quotient_ring(r.order, ideal_pow(P.ideal, 2));
            std::vector<FinRing::Elem> gens;
            for (std::size_t j = 0; j < r.order.degree(); ++j)
                gens.push_back(q.project(P.ideal.lattice().column(j)));
            CHECK(mu_fin(q.ring, fin_ideal_from_gens(q.ring, gens)) == z_p(r.order, P));
        }
    }
}
