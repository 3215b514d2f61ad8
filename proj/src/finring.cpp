#include "ringrank/finring.hpp"

#include "fp_linalg.hpp"
#include "ringrank/error.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <string>

namespace ringrank {

FinIdeal trusted_fin_ideal(Lattice lat);

FinIdeal trusted_fin_ideal(Lattice lat)
{
    return FinIdeal(std::move(lat), FinIdeal::Trusted{});
}

namespace {

constexpr std::int64_t kMaxDivisor = std::int64_t{1} << 62;

std::int64_t mod64(std::int64_t a, std::int64_t d)
{
    a %= d;
    return a < 0 ? a + d : a;
}

IntVec column_of_diag(const FinRing& r, std::size_t i)
{
    IntVec v(r.num_gens());
    v[i] = r.divisor(i);
    return v;
}

std::vector<IntVec> diag_columns(const FinRing& r)
{
    std::vector<IntVec> cols;
    for (std::size_t i = 0; i < r.num_gens(); ++i)
        cols.push_back(column_of_diag(r, i));
    return cols;
}

Lattice ideal_lattice(const FinRing& r, std::vector<IntVec> cols)
{
    return Lattice::from_generators(IntMat::from_columns(cols, r.num_gens()), Int(r.exponent()));
}

using MulFn = std::function<IntVec(const IntVec&, const IntVec&)>;

// Quotient of Z^n (with a bilinear product compatible with l) by the
// full-rank lattice l, put into Smith form coordinates.
FinQuotient present_quotient(std::size_t n, const MulFn& mulfn, const IntVec& one, const Lattice& l)
{
    const SmithForm s = smith_form(l.basis());
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
        if (s.d[i] != 1)
            idx.push_back(i);
    const std::size_t k = idx.size();

    IntMat proj(k, n);
    std::vector<IntVec> lifts(k);
    std::vector<std::int64_t> divisors(k);
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t j = 0; j < n; ++j)
            proj(a, j) = s.u(idx[a], j);
        lifts[a] = s.u_inv.column(idx[a]);
        if (s.d[idx[a]] >= kMaxDivisor)
            throw Error(Errc::Overflow, "additive invariant " + to_string(s.d[idx[a]]) + " is too large");
        divisors[a] = to_int64(s.d[idx[a]]);
    }
    auto reduce = [&](const IntVec& v) {
        FinRing::Elem e(k);
        for (std::size_t a = 0; a < k; ++a)
            e[a] = to_int64(mod_floor(v[a], Int(divisors[a])));
        return e;
    };
    std::vector<std::int64_t> table(k * k * k);
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a; b < k; ++b) {
            const FinRing::Elem c = reduce(proj * mulfn(lifts[a], lifts[b]));
            for (std::size_t t = 0; t < k; ++t) {
                table[(a * k + b) * k + t] = c[t];
                table[(b * k + a) * k + t] = c[t];
            }
        }
    FinRing ring = k == 0 ? FinRing::zero_ring()
                          : FinRing::from_table(std::move(divisors), std::move(table), reduce(proj * one));
    return FinQuotient{std::move(ring), std::move(proj), std::move(lifts)};
}

IntVec table_mul(std::size_t k, const std::vector<std::int64_t>& table, const IntVec& x, const IntVec& y)
{
    IntVec out(k);
    for (std::size_t a = 0; a < k; ++a) {
        if (x[a] == 0)
            continue;
        for (std::size_t b = 0; b < k; ++b) {
            if (y[b] == 0)
                continue;
            const Int c = x[a] * y[b];
            for (std::size_t t = 0; t < k; ++t) {
                const std::int64_t g = table[(a * k + b) * k + t];
                if (g != 0)
                    out[t] += c * g;
            }
        }
    }
    return out;
}

} // namespace

// ---------------------------------------------------------------- FinRing

FinRing FinRing::zero_ring()
{
    return FinRing(std::make_shared<const Data>());
}

FinRing FinRing::from_table(std::vector<std::int64_t> divisors, std::vector<std::int64_t> table, Elem one)
{
    const std::size_t k = divisors.size();
    for (std::size_t i = 0; i < k; ++i) {
        if (divisors[i] < 2 || divisors[i] >= kMaxDivisor)
            throw Error(Errc::InvalidTable, "divisors must lie in [2, 2^62)");
        if (i + 1 < k && divisors[i + 1] % divisors[i] != 0)
            throw Error(Errc::InvalidTable, "divisors must form a divisibility chain");
    }
    if (table.size() != k * k * k)
        throw Error(Errc::InvalidTable, "structure table must have k^3 entries");
    if (one.size() != k)
        throw Error(Errc::InvalidTable, "identity vector has the wrong length");
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b)
            for (std::size_t c = 0; c < k; ++c) {
                auto& g = table[(a * k + b) * k + c];
                g = mod64(g, divisors[c]);
                if (static_cast<__int128>(divisors[a]) * g % divisors[c] != 0)
                    throw Error(Errc::InvalidTable, "structure constants are incompatible with the additive orders");
            }
    for (std::size_t i = 0; i < k; ++i)
        one[i] = mod64(one[i], divisors[i]);

    FinRing r(std::make_shared<const Data>(Data{std::move(divisors), std::move(table), std::move(one)}));
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a + 1; b < k; ++b)
            for (std::size_t c = 0; c < k; ++c)
                if (r.structure(a, b, c) != r.structure(b, a, c))
                    throw Error(Errc::InvalidTable, "table is not commutative");
    for (std::size_t a = 0; a < k; ++a)
        if (r.mul(r.one(), r.gen(a)) != r.gen(a))
            throw Error(Errc::InvalidTable, "identity vector does not act as 1");
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a; b < k; ++b) {
            const Elem ab = r.mul(r.gen(a), r.gen(b));
            for (std::size_t c = 0; c < k; ++c)
                if (r.mul(ab, r.gen(c)) != r.mul(r.gen(a), r.mul(r.gen(b), r.gen(c))))
                    throw Error(Errc::InvalidTable, "table is not associative");
        }
    return r;
}

Int FinRing::size() const
{
    Int s = 1;
    for (auto d : divisors())
        s *= Int(static_cast<long>(d));
    return s;
}

FinRing::Elem FinRing::gen(std::size_t i) const
{
    Elem e(num_gens(), 0);
    e.at(i) = 1;
    return e;
}

FinRing::Elem FinRing::add(const Elem& a, const Elem& b) const
{
    Elem out(num_gens());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = mod64(a[i] + b[i], divisor(i));
    return out;
}

FinRing::Elem FinRing::sub(const Elem& a, const Elem& b) const
{
    Elem out(num_gens());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = mod64(a[i] - b[i], divisor(i));
    return out;
}

FinRing::Elem FinRing::scale(const Elem& a, std::int64_t c) const
{
    Elem out(num_gens());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = static_cast<std::int64_t>(static_cast<__int128>(a[i]) * mod64(c, divisor(i)) % divisor(i));
    return out;
}

FinRing::Elem FinRing::mul(const Elem& x, const Elem& y) const
{
    const std::size_t k = num_gens();
    std::vector<__int128> acc(k, 0);
    for (std::size_t a = 0; a < k; ++a) {
        if (x[a] == 0)
            continue;
        for (std::size_t b = 0; b < k; ++b) {
            if (y[b] == 0)
                continue;
            const __int128 xy = static_cast<__int128>(x[a]) * y[b];
            const std::int64_t* g = &d_->table[(a * k + b) * k];
            for (std::size_t c = 0; c < k; ++c) {
                if (g[c] == 0)
                    continue;
                const __int128 d = divisor(c);
                acc[c] = (acc[c] + (xy % d) * g[c]) % d;
            }
        }
    }
    Elem out(k);
    for (std::size_t c = 0; c < k; ++c)
        out[c] = static_cast<std::int64_t>(acc[c]);
    return out;
}

FinRing::Elem FinRing::pow(Elem a, std::uint64_t e) const
{
    Elem r = one();
    while (e > 0) {
        if (e & 1U)
            r = mul(r, a);
        e >>= 1U;
        if (e > 0)
            a = mul(a, a);
    }
    return r;
}

bool FinRing::is_zero(const Elem& a) const
{
    return std::all_of(a.begin(), a.end(), [](std::int64_t x) { return x == 0; });
}

FinRing::Elem FinRing::reduce(const IntVec& v) const
{
    if (v.size() != num_gens())
        throw Error(Errc::DimensionMismatch, "vector length differs from the number of generators");
    Elem e(num_gens());
    for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = to_int64(mod_floor(v[i], Int(static_cast<long>(divisor(i)))));
    return e;
}

IntVec FinRing::to_int_vec(const Elem& a) const
{
    IntVec v(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        v[i] = static_cast<long>(a[i]);
    return v;
}

std::uint64_t FinRing::element_count() const
{
    const Int s = size();
    if (s > Int("4611686018427387904"))
        throw Error(Errc::Overflow, "ring too large to enumerate");
    return static_cast<std::uint64_t>(to_int64(s));
}

FinRing::Elem FinRing::element(std::uint64_t index) const
{
    Elem e(num_gens());
    for (std::size_t i = 0; i < e.size(); ++i) {
        const auto d = static_cast<std::uint64_t>(divisor(i));
        e[i] = static_cast<std::int64_t>(index % d);
        index /= d;
    }
    return e;
}

// ---------------------------------------------------------------- ideals

FinIdeal::FinIdeal(const FinRing& r, Lattice lat) : lat_(std::move(lat))
{
    if (lat_.dim() != r.num_gens())
        throw Error(Errc::DimensionMismatch, "ideal lattice dimension differs from the number of generators");
    for (std::size_t i = 0; i < r.num_gens(); ++i)
        if (!lat_contains(lat_, column_of_diag(r, i)))
            throw Error(Errc::InvalidArgument, "ideal lattice must contain the relation lattice");
    for (std::size_t j = 0; j < r.num_gens(); ++j) {
        const FinRing::Elem v = r.reduce(lat_.column(j));
        for (std::size_t g = 0; g < r.num_gens(); ++g)
            if (!lat_contains(lat_, r.to_int_vec(r.mul(v, r.gen(g)))))
                throw Error(Errc::NotClosed, "subgroup is not closed under multiplication");
    }
}

FinIdeal fin_zero_ideal(const FinRing& r)
{
    return trusted_fin_ideal(ideal_lattice(r, diag_columns(r)));
}

FinIdeal fin_unit_ideal(const FinRing& r)
{
    return trusted_fin_ideal(Lattice::standard(r.num_gens()));
}

FinIdeal fin_ideal_from_gens(const FinRing& r, const std::vector<FinRing::Elem>& gens)
{
    std::vector<IntVec> cols = diag_columns(r);
    for (const auto& s : gens) {
        if (s.size() != r.num_gens())
            throw Error(Errc::DimensionMismatch, "generator length differs from the number of generators");
        if (r.is_zero(s))
            continue;
        for (std::size_t j = 0; j < r.num_gens(); ++j)
            cols.push_back(r.to_int_vec(r.mul(s, r.gen(j))));
    }
    return trusted_fin_ideal(ideal_lattice(r, std::move(cols)));
}

FinIdeal fin_ideal_mul(const FinRing& r, const FinIdeal& a, const FinIdeal& b)
{
    std::vector<IntVec> cols = diag_columns(r);
    const std::size_t k = r.num_gens();
    std::vector<FinRing::Elem> bs;
    for (std::size_t j = 0; j < k; ++j)
        bs.push_back(r.reduce(b.lattice().column(j)));
    for (std::size_t i = 0; i < k; ++i) {
        const FinRing::Elem x = r.reduce(a.lattice().column(i));
        if (r.is_zero(x))
            continue;
        for (const auto& y : bs)
            cols.push_back(r.to_int_vec(r.mul(x, y)));
    }
    return trusted_fin_ideal(ideal_lattice(r, std::move(cols)));
}

FinIdeal fin_ideal_pow(const FinRing& r, const FinIdeal& a, unsigned k)
{
    FinIdeal out = fin_unit_ideal(r);
    for (unsigned i = 0; i < k; ++i)
        out = fin_ideal_mul(r, out, a);
    return out;
}

FinIdeal fin_ideal_sum(const FinRing&, const FinIdeal& a, const FinIdeal& b)
{
    return trusted_fin_ideal(lat_sum(a.lattice(), b.lattice()));
}

FinIdeal fin_ideal_intersect(const FinRing&, const FinIdeal& a, const FinIdeal& b)
{
    return trusted_fin_ideal(lat_intersect(a.lattice(), b.lattice()));
}

bool fin_ideal_contains(const FinRing& r, const FinIdeal& i, const FinRing::Elem& x)
{
    return lat_contains(i.lattice(), r.to_int_vec(x));
}

bool fin_ideal_subset(const FinIdeal& a, const FinIdeal& b)
{
    return lat_subset(a.lattice(), b.lattice());
}

bool fin_ideal_is_zero(const FinRing& r, const FinIdeal& i)
{
    return i.lattice().determinant() == r.size();
}

Int fin_ideal_index(const FinIdeal& i)
{
    return i.lattice().determinant();
}

Int fin_ideal_size(const FinRing& r, const FinIdeal& i)
{
    return r.size() / i.lattice().determinant();
}

std::vector<FinRing::Elem> fin_ideal_elements(const FinRing& r, const FinIdeal& i, std::uint64_t cap)
{
    if (r.size() > Int(static_cast<unsigned long>(cap)))
        throw Error(Errc::SizeCapExceeded, "ring has " + to_string(r.size()) + " elements, cap is " +
                                               std::to_string(cap));
    std::vector<FinRing::Elem> out;
    const std::uint64_t n = r.element_count();
    for (std::uint64_t t = 0; t < n; ++t) {
        FinRing::Elem x = r.element(t);
        if (fin_ideal_contains(r, i, x))
            out.push_back(std::move(x));
    }
    return out;
}

// ---------------------------------------------------------------- quotients

FinQuotient quotient_ring(const Order& r, const OrderIdeal& i)
{
    if (!(i.owner() == r))
        throw Error(Errc::OwnerMismatch, "ideal belongs to a different order");
    return present_quotient(
        r.degree(), [&](const IntVec& x, const IntVec& y) { return r.mul(x, y); }, r.one(), i.lattice());
}

FinQuotient quotient_finring(const FinRing& r, const FinIdeal& i)
{
    const std::size_t k = r.num_gens();
    return present_quotient(
        k, [&](const IntVec& x, const IntVec& y) { return table_mul(k, r.table(), x, y); },
        r.to_int_vec(r.one()), i.lattice());
}

FinRing finring_product(const FinRing& a, const FinRing& b)
{
    const std::size_t ka = a.num_gens();
    const std::size_t kb = b.num_gens();
    const std::size_t k = ka + kb;
    std::vector<std::int64_t> table(k * k * k, 0);
    for (std::size_t x = 0; x < ka; ++x)
        for (std::size_t y = 0; y < ka; ++y)
            for (std::size_t z = 0; z < ka; ++z)
                table[(x * k + y) * k + z] = a.structure(x, y, z);
    for (std::size_t x = 0; x < kb; ++x)
        for (std::size_t y = 0; y < kb; ++y)
            for (std::size_t z = 0; z < kb; ++z)
                table[((ka + x) * k + ka + y) * k + ka + z] = b.structure(x, y, z);
    IntVec one(k);
    IntVec diag(k);
    for (std::size_t x = 0; x < ka; ++x) {
        one[x] = static_cast<long>(a.one()[x]);
        diag[x] = static_cast<long>(a.divisor(x));
    }
    for (std::size_t x = 0; x < kb; ++x) {
        one[ka + x] = static_cast<long>(b.one()[x]);
        diag[ka + x] = static_cast<long>(b.divisor(x));
    }
    return present_quotient(
               k, [&](const IntVec& x, const IntVec& y) { return table_mul(k, table, x, y); }, one,
               Lattice::from_generators(IntMat::diagonal(diag)))
        .ring;
}

FinQuotient finring_from_presentation(const std::vector<std::int64_t>& orders, const std::vector<Int>& table,
                                      const IntVec& one)
{
    const std::size_t k = orders.size();
    if (table.size() != k * k * k)
        throw Error(Errc::InvalidTable, "structure table must have k^3 entries");
    if (one.size() != k)
        throw Error(Errc::InvalidTable, "identity vector has the wrong length");
    IntVec diag(k);
    for (std::size_t i = 0; i < k; ++i) {
        if (orders[i] < 1 || orders[i] >= kMaxDivisor)
            throw Error(Errc::InvalidTable, "additive orders must lie in [1, 2^62)");
        diag[i] = static_cast<long>(orders[i]);
    }
    std::vector<std::int64_t> reduced(k * k * k);
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b)
            for (std::size_t c = 0; c < k; ++c) {
                const Int g = mod_floor(table[(a * k + b) * k + c], diag[c]);
                if ((diag[a] * g) % diag[c] != 0)
                    throw Error(Errc::InvalidTable, "structure constants are incompatible with the additive orders");
                reduced[(a * k + b) * k + c] = to_int64(g);
            }
    if (k == 0)
        return FinQuotient{FinRing::zero_ring(), IntMat(0, 0), {}};
    return present_quotient(
        k, [&](const IntVec& x, const IntVec& y) { return table_mul(k, reduced, x, y); }, one,
        Lattice::from_generators(IntMat::diagonal(diag)));
}

// ---------------------------------------------------------------- maximal ideals

namespace {

// R/pR as an F_p-algebra on the generators whose order is divisible by p.
struct ModP {
    const FinRing& r;
    std::int64_t p;
    std::vector<std::size_t> idx;

    std::size_t dim() const { return idx.size(); }

    FinRing::Elem lift(const fp::Vec& a) const
    {
        FinRing::Elem e = r.zero();
        for (std::size_t i = 0; i < idx.size(); ++i)
            e[idx[i]] = a[i];
        return e;
    }
    fp::Vec down(const FinRing::Elem& x) const
    {
        fp::Vec a(idx.size());
        for (std::size_t i = 0; i < idx.size(); ++i)
            a[i] = x[idx[i]] % p;
        return a;
    }
    fp::Vec mul(const fp::Vec& a, const fp::Vec& b) const { return down(r.mul(lift(a), lift(b))); }
    fp::Vec one() const { return down(r.one()); }
    fp::Vec unit(std::size_t j) const
    {
        fp::Vec v(idx.size(), 0);
        v[j] = 1;
        return v;
    }
    fp::Vec pow(fp::Vec a, std::uint64_t e) const
    {
        fp::Vec out = one();
        while (e > 0) {
            if (e & 1U)
                out = mul(out, a);
            e >>= 1U;
            if (e > 0)
                a = mul(a, a);
        }
        return out;
    }
    fp::Vec axpy(const fp::Vec& x, std::int64_t c, const fp::Vec& y) const
    {
        fp::Vec out(x.size());
        for (std::size_t i = 0; i < x.size(); ++i)
            out[i] = fp::norm(x[i] + fp::mul(c, y[i], p), p);
        return out;
    }
};

fp::Vec apply_linear(const std::vector<fp::Vec>& cols, const fp::Vec& v, std::int64_t p)
{
    fp::Vec out(cols.empty() ? 0 : cols[0].size(), 0);
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (v[j] == 0)
            continue;
        for (std::size_t i = 0; i < out.size(); ++i)
            out[i] = fp::norm(out[i] + fp::mul(v[j], cols[j][i], p), p);
    }
    return out;
}

// Monic minimal polynomial (low to high) of x over the piece with identity e,
// modulo the subspace j.
fp::Vec min_poly(const ModP& a, const fp::Vec& e, const fp::Vec& x, const std::vector<fp::Vec>& j)
{
    const std::int64_t p = a.p;
    std::vector<fp::Vec> powers{e};
    for (;;) {
        powers.push_back(a.mul(powers.back(), x));
        std::vector<fp::Vec> cols = j;
        cols.insert(cols.end(), powers.begin(), powers.end());
        for (const auto& k : fp::kernel(cols, a.dim(), p)) {
            const std::int64_t lam = k.back();
            if (lam == 0)
                continue;
            const std::int64_t li = fp::inv(lam, p);
            const std::size_t d = powers.size() - 1;
            fp::Vec f(d + 1);
            for (std::size_t i = 0; i < d; ++i)
                f[i] = fp::mul(k[j.size() + i], li, p);
            f[d] = 1;
            return f;
        }
        if (powers.size() > a.dim() + 2)
            throw Error(Errc::InvalidArgument, "minimal polynomial search did not terminate");
    }
}

std::vector<MaximalIdeal> maximal_ideals_over(const FinRing& r, std::int64_t p)
{
    ModP a{r, p, {}};
    for (std::size_t i = 0; i < r.num_gens(); ++i)
        if (r.divisor(i) % p == 0)
            a.idx.push_back(i);
    const std::size_t n = a.dim();

    std::vector<fp::Vec> frob(n);
    for (std::size_t j = 0; j < n; ++j)
        frob[j] = a.pow(a.unit(j), static_cast<std::uint64_t>(p));

    // Nilradical of R/pR: kernel of a high enough power of Frobenius.
    std::vector<fp::Vec> power = frob;
    std::vector<fp::Vec> nil = fp::kernel(power, n, p);
    for (;;) {
        std::vector<fp::Vec> next(n);
        for (std::size_t j = 0; j < n; ++j)
            next[j] = apply_linear(frob, power[j], p);
        auto k = fp::kernel(next, n, p);
        power = std::move(next);
        if (k.size() == nil.size())
            break;
        nil = std::move(k);
    }
    nil = fp::span(std::move(nil), n, p);

    // Elements fixed by Frobenius modulo the nilradical: a copy of F_p^r.
    std::vector<fp::Vec> fixed_cols(n);
    for (std::size_t j = 0; j < n; ++j)
        fixed_cols[j] = a.axpy(frob[j], -1, a.unit(j));
    const std::vector<fp::Vec> fixed = fp::preimage(fixed_cols, nil, n, p);
    const std::size_t fields = fixed.size() - nil.size();

    std::vector<fp::Vec> pieces{a.one()};
    for (const auto& b : fixed) {
        if (pieces.size() == fields)
            break;
        std::vector<fp::Vec> next;
        for (const auto& e : pieces) {
            const fp::Vec be = a.mul(b, e);
            const fp::Vec f = min_poly(a, e, be, nil);
            if (f.size() <= 2) {
                next.push_back(e);
                continue;
            }
            const auto roots = fp::split_roots(f, p);
            if (roots.size() + 1 != f.size())
                throw Error(Errc::InvalidArgument, "splitting element has a non-split minimal polynomial");
            for (auto c : roots) {
                fp::Vec ec = e;
                for (auto c2 : roots) {
                    if (c2 == c)
                        continue;
                    ec = a.mul(ec, a.axpy(be, -c2, e));
                    const std::int64_t s = fp::inv(fp::norm(c - c2, p), p);
                    for (auto& x : ec)
                        x = fp::mul(x, s, p);
                }
                next.push_back(std::move(ec));
            }
        }
        pieces = std::move(next);
    }
    if (pieces.size() != fields)
        throw Error(Errc::InvalidArgument, "idempotent splitting found " + std::to_string(pieces.size()) +
                                               " fields, expected " + std::to_string(fields));

    std::vector<MaximalIdeal> out;
    for (const auto& e : pieces) {
        std::vector<fp::Vec> mult(n);
        for (std::size_t j = 0; j < n; ++j)
            mult[j] = a.mul(e, a.unit(j));
        const std::vector<fp::Vec> m = fp::preimage(mult, nil, n, p);

        std::vector<IntVec> cols = diag_columns(r);
        std::vector<bool> divisible(r.num_gens(), false);
        for (auto i : a.idx)
            divisible[i] = true;
        for (std::size_t i = 0; i < r.num_gens(); ++i) {
            IntVec v(r.num_gens());
            v[i] = divisible[i] ? p : 1;
            cols.push_back(std::move(v));
        }
        for (const auto& v : m)
            cols.push_back(r.to_int_vec(a.lift(v)));
        out.push_back(MaximalIdeal{trusted_fin_ideal(ideal_lattice(r, std::move(cols))), Int(static_cast<long>(p)),
                                   static_cast<unsigned>(n - m.size())});
    }
    std::sort(out.begin(), out.end(),
              [](const MaximalIdeal& x, const MaximalIdeal& y) { return x.ideal.lattice() < y.ideal.lattice(); });
    return out;
}

} // namespace

std::vector<MaximalIdeal> maximal_ideals(const FinRing& r)
{
    if (r.is_zero_ring())
        throw Error(Errc::ZeroRing, "the zero ring has no maximal ideals");
    std::vector<MaximalIdeal> out;
    for (const Int& p : prime_divisors(Int(static_cast<long>(r.exponent())))) {
        auto part = maximal_ideals_over(r, to_int64(p));
        out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return out;
}

std::vector<LocalFactor> local_factors(const FinRing& r)
{
    std::vector<LocalFactor> out;
    if (r.is_zero_ring())
        return out;
    for (auto& m : maximal_ideals(r)) {
        FinIdeal power = m.ideal;
        for (;;) {
            FinIdeal next = fin_ideal_mul(r, power, m.ideal);
            if (next == power)
                break;
            power = std::move(next);
        }
        const auto l = exact_log(fin_ideal_index(power), m.residue_size());
        if (!l)
            throw Error(Errc::NonIntegralLog, "local factor size is not a power of the residue field size");
        out.push_back(LocalFactor{std::move(m), *l, std::move(power)});
    }
    return out;
}

unsigned length(const FinRing& r)
{
    unsigned total = 0;
    for (const auto& f : local_factors(r))
        total += f.length;
    return total;
}

FinIdeal nilradical(const FinRing& r)
{
    if (r.is_zero_ring())
        return fin_zero_ideal(r);
    const auto maxes = maximal_ideals(r);
    FinIdeal n = maxes.front().ideal;
    for (std::size_t i = 1; i < maxes.size(); ++i)
        n = fin_ideal_intersect(r, n, maxes[i].ideal);
    return n;
}

unsigned nilpotency_index(const FinRing& r, NilMode mode, std::uint64_t cap)
{
    if (r.is_zero_ring())
        throw Error(Errc::ZeroRing, "nilpotency index of the zero ring");
    if (mode == NilMode::Idealwise) {
        const FinIdeal nil = nilradical(r);
        FinIdeal power = nil;
        unsigned n = 1;
        while (!fin_ideal_is_zero(r, power)) {
            power = fin_ideal_mul(r, power, nil);
            ++n;
        }
        return n;
    }
    if (r.size() > Int(static_cast<unsigned long>(cap)))
        throw Error(Errc::SizeCapExceeded, "ring has " + to_string(r.size()) + " elements, cap is " +
                                               std::to_string(cap));
    // A nilpotent x has x^t == 0 for some t <= log2 |R|.
    const unsigned limit = static_cast<unsigned>(mpz_sizeinbase(r.size().get_mpz_t(), 2)) + 1;
    unsigned best = 1;
    const std::uint64_t count = r.element_count();
    for (std::uint64_t t = 0; t < count; ++t) {
        const FinRing::Elem x = r.element(t);
        FinRing::Elem pw = x;
        for (unsigned e = 1; e <= limit; ++e) {
            if (r.is_zero(pw)) {
                best = std::max(best, e);
                break;
            }
            pw = r.mul(pw, x);
        }
    }
    return best;
}

unsigned mu_fin(const FinRing& r, const FinIdeal& i)
{
    if (r.is_zero_ring() || fin_ideal_is_zero(r, i))
        return 0;
    unsigned best = 0;
    for (const auto& m : maximal_ideals(r)) {
        const FinIdeal mi = fin_ideal_mul(r, m.ideal, i);
        const auto d = exact_log(fin_ideal_index(mi) / fin_ideal_index(i), m.residue_size());
        if (!d)
            throw Error(Errc::NonIntegralLog, "I/mI is not a vector space over R/m");
        best = std::max(best, *d);
    }
    return best;
}

// ---------------------------------------------------------------- oracle

IdealOracle::IdealOracle(FinRing r, std::uint64_t cap) : r_(std::move(r))
{
    if (r_.size() > Int(static_cast<unsigned long>(cap)))
        throw Error(Errc::SizeCapExceeded, "ring has " + to_string(r_.size()) + " elements, cap is " +
                                               std::to_string(cap));
    zero_id_ = intern(fin_zero_ideal(r_).lattice());
    if (r_.is_zero_ring())
        return;

    const std::uint64_t count = r_.element_count();
    std::vector<bool> seen;
    for (std::uint64_t t = 0; t < count; ++t) {
        const std::size_t id = intern(fin_ideal_from_gens(r_, {r_.element(t)}).lattice());
        if (id == zero_id_)
            continue;
        if (id >= seen.size())
            seen.resize(id + 1, false);
        if (!seen[id]) {
            seen[id] = true;
            principal_.push_back(id);
        }
    }

    // Every ideal is a finite sum of principal ideals.
    std::vector<bool> visited(ideals_.size(), false);
    std::deque<std::size_t> queue{zero_id_};
    visited[zero_id_] = true;
    while (!queue.empty()) {
        const std::size_t cur = queue.front();
        queue.pop_front();
        for (const std::size_t pid : principal_) {
            if (subset(pid, cur))
                continue;
            const std::size_t next = sum(cur, pid);
            if (next >= visited.size())
                visited.resize(next + 1, false);
            if (!visited[next]) {
                visited[next] = true;
                queue.push_back(next);
            }
        }
    }
}

std::size_t IdealOracle::intern(const Lattice& l)
{
    auto [it, inserted] = index_.try_emplace(l, ideals_.size());
    if (inserted)
        ideals_.push_back(trusted_fin_ideal(l));
    return it->second;
}

bool IdealOracle::subset(std::size_t a, std::size_t b) const
{
    return lat_subset(ideals_[a].lattice(), ideals_[b].lattice());
}

std::size_t IdealOracle::sum(std::size_t a, std::size_t b)
{
    if (a > b)
        std::swap(a, b);
    const std::uint64_t key = (static_cast<std::uint64_t>(a) << 32U) | b;
    if (auto it = sums_.find(key); it != sums_.end())
        return it->second;
    const std::size_t id = intern(lat_sum(ideals_[a].lattice(), ideals_[b].lattice()));
    sums_.emplace(key, id);
    return id;
}

bool IdealOracle::search(const std::vector<std::size_t>& cand, std::size_t target, std::size_t start,
                         std::size_t acc, unsigned left)
{
    if (left == 0)
        return acc == target;
    for (std::size_t i = start; i + left <= cand.size(); ++i) {
        const std::size_t s = sum(acc, cand[i]);
        if (s == acc)
            continue;
        if (search(cand, target, i + 1, s, left - 1))
            return true;
    }
    return false;
}

unsigned IdealOracle::mu(const FinIdeal& i)
{
    auto it = index_.find(i.lattice());
    const std::size_t target = it != index_.end() ? it->second : intern(FinIdeal(r_, i.lattice()).lattice());
    if (target == zero_id_)
        return 0;
    std::vector<std::size_t> cand;
    for (const std::size_t pid : principal_)
        if (subset(pid, target))
            cand.push_back(pid);
    for (unsigned g = 1; g <= cand.size(); ++g)
        if (search(cand, target, 0, zero_id_, g))
            return g;
    throw Error(Errc::InvalidArgument, "ideal is not generated by its elements");
}

unsigned IdealOracle::rank()
{
    unsigned best = 0;
    const std::vector<FinIdeal> all = ideals_;
    for (const auto& i : all)
        best = std::max(best, mu(i));
    return best;
}

std::vector<FinIdeal> enumerate_ideals(const FinRing& r, std::uint64_t cap)
{
    return IdealOracle(r, cap).ideals();
}

unsigned mu_exhaustive(const FinRing& r, const FinIdeal& i, std::uint64_t cap)
{
    return IdealOracle(r, cap).mu(i);
}

unsigned rank_fin_exhaustive(const FinRing& r, std::uint64_t cap)
{
    return IdealOracle(r, cap).rank();
}

} // namespace ringrank
