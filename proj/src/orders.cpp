#include "ringrank/orders.hpp"

#include "ringrank/error.hpp"

#include <string>

namespace ringrank {

namespace {

void check_dim(const IntVec& v, std::size_t n)
{
    if (v.size() != n)
        throw Error(Errc::DimensionMismatch,
                    "vector of length " + std::to_string(v.size()) + " in an order of degree " + std::to_string(n));
}

} // namespace

Order Order::from_table(std::size_t n, std::vector<Int> table)
{
    if (n == 0)
        throw Error(Errc::InvalidTable, "degree must be positive");
    if (table.size() != n * n * n)
        throw Error(Errc::InvalidTable, "structure table must have N^3 entries");
    auto g = [&](std::size_t i, std::size_t j, std::size_t k) -> const Int& { return table[(i * n + j) * n + k]; };

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            if (g(0, i, k) != (i == k ? 1 : 0))
                throw Error(Errc::InvalidTable, "first basis vector is not the identity");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (g(i, j, k) != g(j, i, k))
                    throw Error(Errc::InvalidTable, "table is not commutative");
    Int lhs, rhs;
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 1; j < n; ++j)
            for (std::size_t k = 1; k < n; ++k)
                for (std::size_t m = 0; m < n; ++m) {
                    lhs = 0;
                    rhs = 0;
                    for (std::size_t l = 0; l < n; ++l) {
                        lhs += g(i, j, l) * g(l, k, m);
                        rhs += g(j, k, l) * g(i, l, m);
                    }
                    if (lhs != rhs)
                        throw Error(Errc::InvalidTable, "table is not associative");
                }
    return Order(n, std::make_shared<const std::vector<Int>>(std::move(table)));
}

IntVec Order::one() const
{
    return unit_vector(0);
}

IntVec Order::unit_vector(std::size_t i) const
{
    IntVec v(n_);
    v.at(i) = 1;
    return v;
}

IntVec Order::mul(const IntVec& x, const IntVec& y) const
{
    check_dim(x, n_);
    check_dim(y, n_);
    IntVec out(n_);
    Int c;
    for (std::size_t i = 0; i < n_; ++i) {
        if (x[i] == 0)
            continue;
        for (std::size_t j = 0; j < n_; ++j) {
            if (y[j] == 0)
                continue;
            c = x[i] * y[j];
            for (std::size_t k = 0; k < n_; ++k)
                out[k] += c * structure(i, j, k);
        }
    }
    return out;
}

IntMat Order::mult_matrix(const IntVec& a) const
{
    IntMat m(n_, n_);
    for (std::size_t j = 0; j < n_; ++j)
        m.set_column(j, mul(a, unit_vector(j)));
    return m;
}

Order order_from_poly(const std::vector<Int>& coeffs)
{
    if (coeffs.size() < 2)
        throw Error(Errc::BadDegree, "polynomial must have degree at least 1");
    if (coeffs.back() != 1)
        throw Error(Errc::NotMonic, "leading coefficient must be 1");
    const std::size_t n = coeffs.size() - 1;

    // powers[t] = x^t reduced modulo f, for t < 2n - 1
    std::vector<IntVec> powers;
    IntVec cur(n);
    cur[0] = 1;
    for (std::size_t t = 0; t + 1 < 2 * n; ++t) {
        powers.push_back(cur);
        IntVec next(n);
        for (std::size_t i = 0; i + 1 < n; ++i)
            next[i + 1] = cur[i];
        const Int top = cur[n - 1];
        for (std::size_t i = 0; i < n; ++i)
            next[i] -= top * coeffs[i];
        cur = std::move(next);
    }
    std::vector<Int> table(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                table[(i * n + j) * n + k] = powers[i + j][k];
    return Order::from_table(n, std::move(table));
}

IntVec elt_mul(const Order& r, const IntVec& x, const IntVec& y)
{
    return r.mul(x, y);
}

// ---------------------------------------------------------------- suborders

IntVec EmbeddedOrder::to_order(const IntVec& y) const
{
    auto c = lattice.coordinates(y);
    if (!c)
        throw Error(Errc::NotContained, "element does not lie in the suborder");
    return *c;
}

Lattice EmbeddedOrder::lattice_to_order(const Lattice& in_ambient) const
{
    const std::size_t n = in_ambient.dim();
    IntMat cols(n, n);
    for (std::size_t j = 0; j < n; ++j)
        cols.set_column(j, to_order(in_ambient.column(j)));
    return Lattice::from_generators(cols);
}

Lattice EmbeddedOrder::lattice_to_ambient(const Lattice& in_order) const
{
    return Lattice::from_generators(lattice.basis() * in_order.basis());
}

EmbeddedOrder trivial_embedding(const Order& s)
{
    return EmbeddedOrder{s, s, Lattice::standard(s.degree())};
}

EmbeddedOrder suborder_from_lattice(const Order& s, const Lattice& l)
{
    const std::size_t n = s.degree();
    if (l.dim() != n)
        throw Error(Errc::DimensionMismatch, "suborder lattice dimension differs from the order degree");
    std::vector<Int> table(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            auto c = l.coordinates(s.mul(l.column(i), l.column(j)));
            if (!c)
                throw Error(Errc::NotClosed, "product of basis vectors " + std::to_string(i) + " and " +
                                                 std::to_string(j) + " leaves the lattice");
            for (std::size_t k = 0; k < n; ++k) {
                table[(i * n + j) * n + k] = (*c)[k];
                table[(j * n + i) * n + k] = (*c)[k];
            }
        }
    if (!lat_contains(l, s.one()))
        throw Error(Errc::MissingIdentity, "lattice does not contain 1");
    // e_1 in L forces the first Hermite column to be e_1 itself.
    return EmbeddedOrder{s, Order::from_table(n, std::move(table)), l};
}

// ---------------------------------------------------------------- ideals

OrderIdeal::OrderIdeal(Order owner, Lattice lat) : owner_(std::move(owner)), lat_(std::move(lat))
{
    const std::size_t n = owner_.degree();
    if (lat_.dim() != n)
        throw Error(Errc::DimensionMismatch, "ideal lattice dimension differs from the order degree");
    for (std::size_t i = 0; i < n; ++i) {
        const IntVec v = lat_.column(i);
        for (std::size_t j = 1; j < n; ++j)
            if (!lat_contains(lat_, owner_.mul(v, owner_.unit_vector(j))))
                throw Error(Errc::NotClosed, "lattice is not closed under multiplication by the order");
    }
}

OrderIdeal unit_ideal(const Order& r)
{
    return OrderIdeal(r, Lattice::standard(r.degree()));
}

OrderIdeal ideal_from_gens(const Order& r, const std::vector<IntVec>& gens)
{
    const std::size_t n = r.degree();
    std::vector<IntVec> cols;
    bool any = false;
    for (const auto& g : gens) {
        check_dim(g, n);
        bool nonzero = false;
        for (const auto& x : g)
            nonzero = nonzero || x != 0;
        if (!nonzero)
            continue;
        any = true;
        for (std::size_t j = 0; j < n; ++j)
            cols.push_back(r.mul(g, r.unit_vector(j)));
    }
    if (!any)
        throw Error(Errc::ZeroIdeal, "all generators are zero");
    return OrderIdeal(r, Lattice::from_generators(IntMat::from_columns(cols, n)), OrderIdeal::Trusted{});
}

OrderIdeal ideal_mul(const OrderIdeal& a, const OrderIdeal& b)
{
    if (!(a.owner() == b.owner()))
        throw Error(Errc::OwnerMismatch, "ideals belong to different orders");
    const Order& r = a.owner();
    const std::size_t n = r.degree();
    std::vector<IntVec> cols;
    cols.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        const IntVec x = a.lattice().column(i);
        for (std::size_t j = 0; j < n; ++j)
            cols.push_back(r.mul(x, b.lattice().column(j)));
    }
    // [R:I][R:J] R lies in [R:I] J, which lies in IJ.
    const Int modulus = a.lattice().determinant() * b.lattice().determinant();
    return OrderIdeal(r, Lattice::from_generators(IntMat::from_columns(cols, n), modulus), OrderIdeal::Trusted{});
}

OrderIdeal ideal_pow(const OrderIdeal& i, unsigned k)
{
    OrderIdeal result = unit_ideal(i.owner());
    OrderIdeal base = i;
    while (k > 0) {
        if (k & 1U)
            result = ideal_mul(result, base);
        k >>= 1U;
        if (k > 0)
            base = ideal_mul(base, base);
    }
    return result;
}

OrderIdeal ideal_sum(const OrderIdeal& a, const OrderIdeal& b)
{
    if (!(a.owner() == b.owner()))
        throw Error(Errc::OwnerMismatch, "ideals belong to different orders");
    return OrderIdeal(a.owner(), lat_sum(a.lattice(), b.lattice()));
}

Int ideal_norm(const OrderIdeal& i)
{
    return i.lattice().determinant();
}

bool is_unit_ideal(const OrderIdeal& i)
{
    return ideal_norm(i) == 1;
}

Conductor conductor(const EmbeddedOrder& r)
{
    const Order& s = r.ambient;
    Lattice c = r.lattice;
    for (std::size_t j = 1; j < s.degree(); ++j)
        c = lat_intersect(c, lat_preimage_rect(s.mult_matrix(s.unit_vector(j)), r.lattice));
    OrderIdeal in_ambient(s, c);
    OrderIdeal in_order(r.order, r.lattice_to_order(c));
    return Conductor{std::move(in_order), std::move(in_ambient)};
}

} // namespace ringrank
