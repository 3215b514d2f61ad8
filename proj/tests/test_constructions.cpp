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

} // namespace

TEST_CASE("A + xS")
{
    const Order s = poly({-2, 0, 0, 1});
    const EmbeddedOrder r = build_axs(s, 6);
    CHECK(lat_index(Lattice::standard(3), r.lattice) == 36);
    CHECK(lat_contains(r.lattice, {1, 0, 0}));
    CHECK(lat_contains(r.lattice, {0, 6, 0}));
    CHECK_FALSE(lat_contains(r.lattice, {0, 3, 0}));
    CHECK(build_axs(s, -6).lattice == r.lattice);
    for (long x : {0, 1, -1})
        CHECK(code_of([&] { build_axs(s, x); }) == Errc::UnitOrZeroX);
}

TEST_CASE("A + xS has index |x|^(N-1)")
{
    gen::Source g(301);
    for (int t = 0; t < 40; ++t) {
        const std::size_t n = 2 + g.index(3);
        std::vector<Int> c;
        for (std::size_t i = 0; i < n; ++i)
            c.emplace_back(g.integer(-5, 5));
        c.emplace_back(1);
        const long x = g.integer(2, 9) * (g.index(2) ? 1 : -1);
        const EmbeddedOrder r = build_axs(order_from_poly(c), x);
        CHECK(lat_index(Lattice::standard(n), r.lattice) == ipow(std::abs(x), static_cast<unsigned long>(n - 1)));
    }
}

TEST_CASE("Matson orders")
{
    const EmbeddedOrder m2 = build_matson(2);
    CHECK(m2.lattice == Lattice::from_generators(IntMat::diagonal({1, 2})));
    CHECK(m2.order.mul({0, 1}, {0, 1}) == IntVec{8, 0});
    const EmbeddedOrder m4 = build_matson(4);
    CHECK(lat_index(Lattice::standard(4), m4.lattice) == 8);
    CHECK(code_of([] { build_matson(1); }) == Errc::BadDegree);
    CHECK(code_of([] { build_matson(0); }) == Errc::BadDegree);
}

TEST_CASE("pullback orders")
{
    const Order gauss = poly({1, 0, 1});
    const EmbeddedOrder r = build_pullback(gauss, {3, 7});
    CHECK(lat_index(Lattice::standard(2), r.lattice) == 21);
    CHECK(build_pullback(gauss, {3}).lattice == build_axs(gauss, 3).lattice);
    CHECK(build_pullback(gauss, {7, 3}).lattice == r.lattice);
    CHECK(code_of([&] { build_pullback(gauss, {5}); }) == Errc::SplitPrime);
    CHECK(code_of([&] { build_pullback(gauss, {2}); }) == Errc::DegreeOne);
    CHECK(code_of([&] { build_pullback(gauss, {4}); }) == Errc::NotPrime);
    CHECK(code_of([&] { build_pullback(gauss, {3, 3}); }) == Errc::InvalidArgument);

    // Z[2^(1/3)] has 5 = P1 * P2 with residue degrees 1 and 2
    CHECK(code_of([] { build_pullback(poly({-2, 0, 0, 1}), {5}); }) == Errc::SplitPrime);
}

TEST_CASE("Matson quotients by the square of their prime")
{
    const FinRing r2 = build_matson_quotient(2);
    CHECK(r2.size() == 8);
    CHECK(length(r2) == 3);
    CHECK(rank_fin_exhaustive(r2) == 2);
    const FinRing r3 = build_matson_quotient(3);
    CHECK(r3.size() == 16);
    CHECK(length(r3) == 4);
    CHECK(code_of([] { build_matson_quotient(1); }) == Errc::BadDegree);
}

TEST_CASE("truncated polynomial rings")
{
    const FinRing r = build_trunc_poly(2, 2, 3);
    CHECK(r.size() == 64);
    CHECK(r.divisors() == std::vector<std::int64_t>{4, 4, 4});
    CHECK(r.mul(r.gen(1), r.gen(2)) == r.zero());
    CHECK(r.mul(r.gen(1), r.gen(1)) == r.gen(2));
    CHECK(length(r) == 6);
    CHECK(code_of([] { build_trunc_poly(4, 1, 2); }) == Errc::NotPrime);
    CHECK(code_of([] { build_trunc_poly(3, 40, 2); }) == Errc::Overflow);
}

TEST_CASE("(p, t)^(n-1) needs n generators for every truncation past n")
{
    for (long p : {2, 3})
        for (unsigned n = 1; n <= 4; ++n)
            for (unsigned D = n + 1; D <= n + 3; ++D) {
                CAPTURE(p);
                CAPTURE(n);
                CAPTURE(D);
                const TruncWitness w = witness_mn1(p, n, D);
                CHECK(w.mu == n);
                CHECK(mu_fin(w.ring, w.ideal) == n);
            }
    CHECK(code_of([] { witness_mn1(2, 3, 3); }) == Errc::TruncationTooShort);
    // small enough for the exhaustive search
    IdealOracle o(build_trunc_poly(2, 2, 3));
    CHECK(o.mu(witness_mn1(2, 2, 3).ideal) == 2);
}

TEST_CASE("semigroup truncations")
{
    const FinRing r = build_semigroup_trunc(2, 2, 5);
    CHECK(r.size() == 16);
    const FinIdeal m = semigroup_maximal_ideal(r);
    CHECK(fin_ideal_index(m) == 2);
    CHECK(mu_fin(r, m) == 2);
    CHECK(maximal_ideals(r).size() == 1);
    CHECK(maximal_ideals(r)[0].ideal == m);
    CHECK(code_of([] { build_semigroup_trunc(2, 3, 6); }) == Errc::TruncationTooShort);
    CHECK(code_of([] { build_semigroup_trunc(6, 2, 5); }) == Errc::NotPrime);

    for (long p : {2, 3})
        for (unsigned n = 2; n <= 4; ++n)
            for (unsigned D = 2 * n + 1; D <= 4 * n; ++D) {
                const FinRing s = build_semigroup_trunc(p, n, D);
                const FinIdeal mm = semigroup_maximal_ideal(s);
                for (unsigned i = 1; (i + 1) * n <= D; ++i) {
                    CAPTURE(p);
                    CAPTURE(n);
                    CAPTURE(D);
                    CAPTURE(i);
                    CHECK(mu_fin(s, fin_ideal_pow(s, mm, i)) == n);
                }
            }

    IdealOracle o(build_semigroup_trunc(2, 2, 6));
    CHECK(o.mu(fin_ideal_pow(o.ring(), semigroup_maximal_ideal(o.ring()), 2)) == 2);
}
