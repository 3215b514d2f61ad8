#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "generators.hpp"
#include "ringrank/constructions.hpp"
#include "ringrank/error.hpp"
#include "ringrank/orders.hpp"

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

Order random_order(gen::Source& g)
{
    const std::size_t n = 2 + g.index(2);
    std::vector<Int> c;
    for (std::size_t i = 0; i < n; ++i)
        c.emplace_back(g.integer(-5, 5));
    if (c[0] == 0)
        c[0] = 3;
    c.emplace_back(1);
    return order_from_poly(c);
}

// A full-rank ideal: k*1 plus a couple of random elements.
OrderIdeal random_ideal(gen::Source& g, const Order& r, long k)
{
    IntVec base(r.degree(), 0);
    base[0] = k;
    std::vector<IntVec> gens{base};
    for (int i = 0, m = 1 + static_cast<int>(g.index(2)); i < m; ++i)
        gens.push_back(g.vector(r.degree(), 6));
    return ideal_from_gens(r, gens);
}

} // namespace

TEST_CASE("order_from_poly tables")
{
    const Order s = poly({-2, 0, 1});
    CHECK(s.degree() == 2);
    CHECK(s.mul({0, 1}, {0, 1}) == IntVec{2, 0});
    CHECK(poly({3, 0, 1}).mul({0, 1}, {0, 1}) == IntVec{-3, 0});

    const Order t = poly({-2, 0, 0, 1});
    CHECK(t.mul(t.unit_vector(1), t.unit_vector(2)) == IntVec{2, 0, 0});
    CHECK(t.mul(t.unit_vector(2), t.unit_vector(2)) == IntVec{0, 2, 0});
    CHECK(t.one() == IntVec{1, 0, 0});

    CHECK(code_of([] { poly({1, 0, 2}); }) == Errc::NotMonic);
}

TEST_CASE("from_table validates the axioms")
{
    // e1 * e1 = e0 + e1 with e0 the identity is fine
    CHECK_NOTHROW(Order::from_table(2, {1, 0, 0, 1, 0, 1, 1, 1}));
    // identity missing
    CHECK(code_of([] { Order::from_table(2, {0, 1, 0, 1, 0, 1, 1, 1}); }) == Errc::InvalidTable);
    // not commutative
    CHECK(code_of([] { Order::from_table(2, {1, 0, 0, 1, 0, 2, 1, 1}); }) == Errc::InvalidTable);
}

TEST_CASE("elt_mul examples")
{
    CHECK(elt_mul(poly({-2, 0, 1}), {1, 1}, {1, 1}) == IntVec{3, 2});
    CHECK(elt_mul(poly({1, 0, 1}), {0, 1}, {0, 1}) == IntVec{-1, 0});
    CHECK_THROWS_AS(elt_mul(poly({1, 0, 1}), {0, 1}, {0, 1, 0}), Error);
}

TEST_CASE("suborder_from_lattice")
{
    const Order s = poly({-2, 0, 1});
    const EmbeddedOrder r = suborder_from_lattice(s, Lattice::from_generators(IntMat::diagonal({1, 2})));
    CHECK(r.order.mul({0, 1}, {0, 1}) == IntVec{8, 0});
    CHECK(r.to_ambient({0, 1}) == IntVec{0, 2});
    CHECK(r.to_order({4, 6}) == IntVec{4, 3});
    CHECK(code_of([&] { r.to_order({0, 1}); }) == Errc::NotContained);

    CHECK(code_of([&] { suborder_from_lattice(s, Lattice::from_generators(IntMat::diagonal({2, 1}))); }) ==
          Errc::MissingIdentity);
    CHECK(code_of([&] { suborder_from_lattice(s, Lattice::from_generators(IntMat::diagonal({3, 1}))); }) ==
          Errc::NotClosed);

    const EmbeddedOrder triv = trivial_embedding(s);
    CHECK(triv.lattice == Lattice::standard(2));
    CHECK(triv.order == s);
}

TEST_CASE("ideal_from_gens examples")
{
    const EmbeddedOrder m2 = build_matson(2);
    const OrderIdeal p = ideal_from_gens(m2.order, {{2, 0}, {0, 1}});
    CHECK(p.lattice() == Lattice::from_generators(IntMat::diagonal({2, 1})));
    CHECK(ideal_norm(p) == 2);

    const Order s = poly({-2, 0, 1});
    CHECK(ideal_norm(ideal_from_gens(s, {{0, 1}})) == 2);
    CHECK(is_unit_ideal(ideal_from_gens(s, {{1, 1}})));
    CHECK(code_of([&] { ideal_from_gens(s, {{0, 0}}); }) == Errc::ZeroIdeal);
}

TEST_CASE("ideal_mul examples")
{
    const EmbeddedOrder m2 = build_matson(2);
    const OrderIdeal p = ideal_from_gens(m2.order, {{2, 0}, {0, 1}});
    CHECK(ideal_mul(p, p).lattice() == Lattice::from_generators(IntMat::diagonal({4, 2})));
    CHECK(ideal_pow(p, 2) == ideal_mul(p, p));
    CHECK(is_unit_ideal(ideal_pow(p, 0)));

    const Order s = poly({-2, 0, 1});
    const OrderIdeal r2 = ideal_from_gens(s, {{0, 1}});
    CHECK(ideal_mul(r2, r2) == ideal_from_gens(s, {{2, 0}}));
    CHECK(code_of([&] { ideal_mul(p, r2); }) == Errc::OwnerMismatch);
}

TEST_CASE("ideal_norm examples")
{
    CHECK(ideal_norm(ideal_from_gens(poly({1, 0, 1}), {{3, 0}})) == 9);
    CHECK(ideal_norm(unit_ideal(poly({1, 0, 1}))) == 1);
}

TEST_CASE("OrderIdeal rejects non-ideals")
{
    const Order s = poly({-2, 0, 1});
    CHECK(code_of([&] { OrderIdeal(s, Lattice::from_generators(IntMat::diagonal({1, 2}))); }) ==
          Errc::NotClosed);
}

TEST_CASE("conductor examples")
{
    const Order s = poly({-2, 0, 1});
    const EmbeddedOrder r = suborder_from_lattice(s, Lattice::from_generators(IntMat::diagonal({1, 2})));
    const Conductor c = conductor(r);
    CHECK(c.in_ambient.lattice() == Lattice::scaled(2, 2));
    CHECK(lat_index(Lattice::standard(2), c.in_order.lattice()) == 2);

    const Order w = poly({1, -1, 1});
    const Conductor cw = conductor(suborder_from_lattice(w, Lattice::from_generators(IntMat::diagonal({1, 2}))));
    CHECK(cw.in_ambient.lattice() == Lattice::scaled(2, 2));

    CHECK(is_unit_ideal(conductor(trivial_embedding(s)).in_order));
}

TEST_CASE("ideal products are commutative, associative and inside intersections")
{
    gen::Source g(101);
    for (int t = 0; t < 100; ++t) {
        const Order r = random_order(g);
        const OrderIdeal a = random_ideal(g, r, g.integer(1, 12));
        const OrderIdeal b = random_ideal(g, r, g.integer(1, 12));
        const OrderIdeal c = random_ideal(g, r, g.integer(1, 12));
        CHECK(ideal_mul(a, b) == ideal_mul(b, a));
        CHECK(ideal_mul(ideal_mul(a, b), c) == ideal_mul(a, ideal_mul(b, c)));
        const Lattice meet = lat_intersect(a.lattice(), b.lattice());
        CHECK(lat_subset(ideal_mul(a, b).lattice(), meet));
        const OrderIdeal s = ideal_sum(a, b);
        CHECK(lat_subset(a.lattice(), s.lattice()));
        CHECK(lat_subset(b.lattice(), s.lattice()));
    }
}

TEST_CASE("norms of coprime ideals multiply")
{
    gen::Source g(102);
    const long pairs[][2] = {{2, 3}, {4, 9}, {5, 6}, {7, 10}, {8, 15}};
    for (int t = 0; t < 100; ++t) {
        const Order r = random_order(g);
        const auto& pr = pairs[g.index(5)];
        const OrderIdeal a = random_ideal(g, r, pr[0]);
        const OrderIdeal b = random_ideal(g, r, pr[1]);
        const OrderIdeal ab = ideal_mul(a, b);
        CHECK(ideal_norm(ab) == ideal_norm(a) * ideal_norm(b));
        CHECK(ab.lattice() == lat_intersect(a.lattice(), b.lattice()));
        CHECK(is_unit_ideal(ideal_sum(a, b)));
    }
}

TEST_CASE("conductor agrees with its defining property")
{
    gen::Source g(103);
    for (int t = 0; t < 40; ++t) {
        const Order s = random_order(g);
        const EmbeddedOrder r = build_axs(s, g.integer(2, 6));
        const Conductor c = conductor(r);
        CHECK(lat_subset(c.in_ambient.lattice(), r.lattice));
        CHECK(r.lattice_to_order(c.in_ambient.lattice()) == c.in_order.lattice());
        for (int k = 0; k < 30; ++k) {
            const IntVec x = g.vector(s.degree(), 12);
            bool maps_into = true;
            for (std::size_t j = 0; j < s.degree(); ++j)
                maps_into = maps_into && lat_contains(r.lattice, s.mul(x, s.unit_vector(j)));
            CHECK(lat_contains(c.in_ambient.lattice(), x) == maps_into);
        }
    }
}

TEST_CASE("suborder tables match ambient products")
{
    gen::Source g(104);
    for (int t = 0; t < 40; ++t) {
        const Order s = random_order(g);
        const EmbeddedOrder r = build_axs(s, g.integer(2, 5));
        for (int k = 0; k < 10; ++k) {
            const IntVec x = g.vector(s.degree(), 5);
            const IntVec y = g.vector(s.degree(), 5);
            CHECK(r.to_ambient(r.order.mul(x, y)) == s.mul(r.to_ambient(x), r.to_ambient(y)));
        }
    }
}
