#include "ringrank/catalog.hpp"

#include "ringrank/constructions.hpp"
#include "ringrank/error.hpp"
#include "ringrank/invariants.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

namespace ringrank {

namespace {

std::string str(unsigned v)
{
    return std::to_string(v);
}

CheckResult result(bool pass, std::string expected, std::string actual)
{
    return CheckResult{pass, std::move(expected), std::move(actual)};
}

CheckResult compare(const std::string& expected, const std::string& actual)
{
    return result(expected == actual, expected, actual);
}

FinRing zmod(std::int64_t n)
{
    return FinRing::from_table({n}, {1}, {1});
}

// (Z/q)[x_1..x_v] modulo everything outside the given monomial basis, which
// must be closed under division.
FinRing monomial_ring(std::int64_t q, const std::vector<std::vector<unsigned>>& basis)
{
    const std::size_t k = basis.size();
    std::map<std::vector<unsigned>, std::size_t> where;
    for (std::size_t i = 0; i < k; ++i)
        where[basis[i]] = i;
    std::vector<std::int64_t> table(k * k * k, 0);
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) {
            std::vector<unsigned> m = basis[a];
            for (std::size_t v = 0; v < m.size(); ++v)
                m[v] += basis[b][v];
            if (auto it = where.find(m); it != where.end())
                table[(a * k + b) * k + it->second] = 1;
        }
    FinRing::Elem one(k, 0);
    one[where.at(std::vector<unsigned>(basis[0].size(), 0))] = 1;
    return FinRing::from_table(std::vector<std::int64_t>(k, q), std::move(table), std::move(one));
}

FinRing order_quotient(const std::vector<Int>& minpoly, const std::vector<IntVec>& gens)
{
    const Order s = order_from_poly(minpoly);
    return quotient_ring(s, ideal_from_gens(s, gens)).ring;
}

std::string describe_rank(const RankReport& rep)
{
    std::ostringstream os;
    if (rep.rank.is_exact())
        os << "rank " << rep.rank.lo;
    else
        os << "rank in [" << rep.rank.lo << "," << rep.rank.hi << "]";
    os << ", singular";
    for (const auto& s : rep.singular)
        os << " (p=" << s.prime.p << " z=" << s.z << " e=" << s.e << ")";
    return os.str();
}

// ---------------------------------------------------------------- criterion 1-3

Check matson_check(unsigned n)
{
    return Check{"matson-rank-n" + str(n), 1,
                 "Z + 2 Z[2^(1/" + str(n) + ")] has rank " + str(n) + ", with z = e = " + str(n) +
                     " at its only singular prime, which lies over 2",
                 "theorem", [n] {
                     const RankReport rep = rank_order(build_matson(n));
                     const std::string want = "rank " + str(n) + ", singular (p=2 z=" + str(n) + " e=" + str(n) + ")";
                     return compare(want, describe_rank(rep));
                 }};
}

EmbeddedOrder cube_root_two_x6()
{
    return build_axs(order_from_poly({-2, 0, 0, 1}), 6);
}

std::vector<Check> axs_checks()
{
    std::vector<Check> out;
    out.push_back({"axs-cuberoot2-x6-index", 2, "[S : Z + 6S] = 6^2 for S = Z[2^(1/3)]", "theorem", [] {
                       return compare("36", to_string(cube_root_two_x6().lattice.determinant()));
                   }});
    out.push_back({"axs-cuberoot2-x6-primes", 2, "Z + 6S has exactly one prime over each of 2 and 3", "theorem", [] {
                       const EmbeddedOrder r = cube_root_two_x6();
                       const auto a = primes_above(r.order, 2).size();
                       const auto b = primes_above(r.order, 3).size();
                       return compare("1 over 2, 1 over 3", std::to_string(a) + " over 2, " + std::to_string(b) + " over 3");
                   }});
    out.push_back({"axs-cuberoot2-x6-z", 2, "the embedding dimension of Z + 6S is 3 at the primes over 2 and 3",
                   "theorem", [] {
                       const EmbeddedOrder r = cube_root_two_x6();
                       std::string got;
                       for (int p : {2, 3}) {
                           const auto ps = primes_above(r.order, p);
                           got += (got.empty() ? "" : ", ") + std::string("z") + std::to_string(p) + "=" +
                                  str(z_p(r.order, ps.at(0)));
                       }
                       return compare("z2=3, z3=3", got);
                   }});
    out.push_back({"axs-cuberoot2-x6-rank", 2, "Z + 6S has rank 3", "theorem", [] {
                       return compare("rank 3, singular (p=2 z=3 e=3) (p=3 z=3 e=3)",
                                      describe_rank(rank_order(cube_root_two_x6())));
                   }});
    return out;
}

std::vector<Check> pullback_checks()
{
    std::vector<Check> out;
    out.push_back({"pullback-gaussian-3-7", 3,
                   "the pullback of F_3 x F_7 along Z[i] -> F_9 x F_49 has two singular primes with e = 2 and rank 2",
                   "theorem", [] {
                       const RankReport rep = rank_order(build_pullback(order_from_poly({1, 0, 1}), {3, 7}));
                       return compare("rank 2, singular (p=3 z=2 e=2) (p=7 z=2 e=2)", describe_rank(rep));
                   }});
    out.push_back({"pullback-gaussian-3-equals-axs", 3, "the pullback of F_3 inside Z[i] is Z + 3Z[i]", "definition",
                   [] {
                       const Order zi = order_from_poly({1, 0, 1});
                       const bool same = build_pullback(zi, {3}).lattice == build_axs(zi, 3).lattice;
                       return compare("equal lattices", same ? "equal lattices" : "different lattices");
                   }});
    return out;
}

// ---------------------------------------------------------------- criterion 4-6

std::vector<Check> matson_quotient_checks()
{
    std::vector<Check> out;
    out.push_back({"matson-quotient-n2-oracle", 4, "Matson_2 modulo P^2 has 8 elements, length 3 and rank 2", "oracle", [] {
                       const FinRing r = build_matson_quotient(2);
                       IdealOracle o(r);
                       return compare("size 8, length 3, rank 2", "size " + to_string(r.size()) + ", length " +
                                                                      str(length(r)) + ", rank " + str(o.rank()));
                   }});
    out.push_back({"matson-quotient-n3-nakayama", 4, "Matson_3 modulo P^2 has length 4 and Nakayama rank 3", "theorem", [] {
                       const FinRing r = build_matson_quotient(3);
                       unsigned best = 0;
                       for (const auto& i : enumerate_ideals(r))
                           best = std::max(best, mu_fin(r, i));
                       return compare("length 4, rank 3", "length " + str(length(r)) + ", rank " + str(best));
                   }});
    out.push_back({"matson-quotient-n3-oracle", 4, "Matson_3 modulo P^2 has 16 elements and exhaustive rank 3", "oracle", [] {
                       const FinRing r = build_matson_quotient(3);
                       return compare("size 16, rank 3",
                                      "size " + to_string(r.size()) + ", rank " + str(rank_fin_exhaustive(r)));
                   }});
    return out;
}

std::vector<Check> trunc_checks()
{
    std::vector<Check> out;
    for (unsigned p : {2U, 3U})
        for (unsigned n = 1; n <= 5; ++n)
            out.push_back({"trunc-witness-p" + str(p) + "-n" + str(n), 5,
                           "(p, t)^" + str(n - 1) + " in (Z/" + str(p) + "^" + str(n) + ")[t]/(t^D) needs " + str(n) +
                               " generators for D = " + str(n + 1) + ".." + str(n + 3),
                           "theorem", [p, n] {
                               std::string want, got;
                               for (unsigned d = n + 1; d <= n + 3; ++d) {
                                   want += (want.empty() ? "" : " ") + std::string("D") + str(d) + ":" + str(n);
                                   got += (got.empty() ? "" : " ") + std::string("D") + str(d) + ":" +
                                          str(witness_mn1(p, n, d).mu);
                               }
                               return compare(want, got);
                           }});
    out.push_back({"trunc-z4-t3-oracle-rank", 5, "Z/4[t]/(t^3) has exhaustive rank 2", "oracle", [] {
                       return compare("2", str(rank_fin_exhaustive(build_trunc_poly(2, 2, 3))));
                   }});
    return out;
}

std::vector<Check> semigroup_checks()
{
    std::vector<Check> out;
    for (unsigned n : {2U, 3U}) {
        const unsigned d = 3 * n;
        out.push_back({"semigroup-p2-n" + str(n) + "-D" + str(d), 6,
                       "in F_2 + t^" + str(n) + "F_2[t]/(t^" + str(d) + "), every power m^i with (i+1)" + str(n) +
                           " <= " + str(d) + " needs " + str(n) + " generators",
                       "theorem", [n, d] {
                           const FinRing r = build_semigroup_trunc(2, n, d);
                           const FinIdeal m = semigroup_maximal_ideal(r);
                           std::string want, got;
                           for (unsigned i = 1; (i + 1) * n <= d; ++i) {
                               want += (want.empty() ? "" : " ") + std::string("i") + str(i) + ":" + str(n);
                               got += (got.empty() ? "" : " ") + std::string("i") + str(i) + ":" +
                                      str(mu_fin(r, fin_ideal_pow(r, m, i)));
                           }
                           return compare(want, got);
                       }});
    }
    return out;
}

// ---------------------------------------------------------------- criterion 7-8

std::vector<Check> oracle_checks(const std::vector<NamedRing>& corpus)
{
    std::vector<Check> out;
    out.push_back({"oracle-corpus-size", 7, "the oracle corpus has at least 20 rings of size at most 512", "definition",
                   [corpus] {
                       std::size_t ok = 0;
                       for (const auto& c : corpus)
                           ok += c.ring.size() <= 512 ? 1 : 0;
                       const bool pass = ok == corpus.size() && ok >= 20;
                       return result(pass, ">= 20 rings, all of size <= 512",
                                     std::to_string(corpus.size()) + " rings, " + std::to_string(ok) + " of size <= 512");
                   }});
    for (const auto& c : corpus)
        out.push_back({"oracle-equivalence/" + c.name, 7,
                       "max_m dim I/mI equals the literal minimal generator count for every ideal of " + c.name,
                       "oracle", [r = c.ring] {
                           IdealOracle o(r);
                           std::size_t bad = 0;
                           std::string first;
                           for (const auto& i : o.ideals()) {
                               const unsigned a = mu_fin(r, i);
                               const unsigned b = o.mu(i);
                               if (a != b && bad++ == 0)
                                   first = " (first: nakayama " + str(a) + ", exhaustive " + str(b) + ")";
                           }
                           return result(bad == 0, "0 discrepancies",
                                         std::to_string(bad) + " discrepancies over " +
                                             std::to_string(o.ideals().size()) + " ideals" + first);
                       }});
    return out;
}

std::vector<std::string> ring_inequalities(const FinRing& r)
{
    std::vector<std::string> bad;
    IdealOracle o(r);
    const unsigned rank = o.rank();
    if (r.is_zero_ring()) {
        if (rank != 0)
            bad.push_back("zero ring has rank " + str(rank));
        return bad;
    }
    const unsigned len = length(r);
    if (rank > len)
        bad.push_back("rank " + str(rank) + " > length " + str(len));
    if (len > 1 && rank + 1 > len)
        bad.push_back("rank " + str(rank) + " > length-1 for a non-field");
    const unsigned en = nilpotency_index(r, NilMode::Elementwise);
    const unsigned in = nilpotency_index(r, NilMode::Idealwise);
    if (en > in || in > len)
        bad.push_back("nilpotency " + str(en) + " <= " + str(in) + " <= " + str(len) + " fails");
    Int product = 1;
    unsigned total = 0;
    for (const auto& f : local_factors(r)) {
        product *= ipow(f.maximal.residue_size(), f.length);
        total += f.length;
    }
    if (product != r.size() || total != len)
        bad.push_back("local factors do not multiply out to the ring");
    for (const auto& i : o.ideals()) {
        const FinRing q = quotient_finring(r, i).ring;
        const unsigned qr = rank_fin_exhaustive(q);
        if (qr > rank)
            bad.push_back("quotient of size " + to_string(q.size()) + " has rank " + str(qr) + " > " + str(rank));
    }
    return bad;
}

std::vector<Check> inequality_checks(const std::vector<NamedRing>& corpus)
{
    std::vector<Check> out;
    for (const auto& c : corpus)
        out.push_back({"inequality/" + c.name, 8,
                       "rank <= length - 1 off fields, elementwise <= idealwise nilpotency <= length, and quotients of " +
                           c.name + " have no larger rank",
                       "theorem", [r = c.ring] {
                           const auto bad = ring_inequalities(r);
                           return result(bad.empty(), "0 violations",
                                         std::to_string(bad.size()) + " violations" + (bad.empty() ? "" : ": " + bad[0]));
                       }});
    out.push_back({"inequality-product-law", 8,
                   "the rank of a product is the larger rank, over all corpus pairs with |R1 x R2| <= 512", "theorem",
                   [corpus] {
                       std::vector<unsigned> ranks;
                       for (const auto& c : corpus)
                           ranks.push_back(rank_fin_exhaustive(c.ring));
                       std::size_t pairs = 0, bad = 0;
                       std::string first;
                       for (std::size_t a = 0; a < corpus.size(); ++a)
                           for (std::size_t b = a; b < corpus.size(); ++b) {
                               if (corpus[a].ring.size() * corpus[b].ring.size() > 512)
                                   continue;
                               ++pairs;
                               const unsigned got = rank_fin_exhaustive(finring_product(corpus[a].ring, corpus[b].ring));
                               if (got != std::max(ranks[a], ranks[b]) && bad++ == 0)
                                   first = ": " + corpus[a].name + " x " + corpus[b].name + " has rank " + str(got);
                           }
                       return result(bad == 0, "0 violations",
                                     std::to_string(bad) + " violations over " + std::to_string(pairs) + " pairs" + first);
                   }});
    out.push_back({"inequality-order-z-le-e", 8, "z_p <= e_p at every computed singular prime of the sample orders",
                   "theorem", [] {
                       const Order zi = order_from_poly({1, 0, 1});
                       std::vector<EmbeddedOrder> orders;
                       for (unsigned n = 2; n <= 5; ++n)
                           orders.push_back(build_matson(n));
                       orders.push_back(cube_root_two_x6());
                       orders.push_back(build_pullback(zi, {3, 7}));
                       orders.push_back(build_axs(zi, 5));
                       orders.push_back(build_axs(zi, 12));
                       orders.push_back(build_axs(order_from_poly({-1, -1, 0, 1}), 2));
                       const Order eis = order_from_poly({1, -1, 1});
                       orders.push_back(suborder_from_lattice(eis, Lattice::from_hnf(IntMat::from_rows({{1, 0}, {0, 2}}))));
                       std::size_t primes = 0, bad = 0;
                       for (const auto& r : orders)
                           for (const auto& s : rank_order(r).singular) {
                               ++primes;
                               bad += s.z <= s.e && s.e >= 2 ? 0 : 1;
                           }
                       return result(bad == 0, "0 violations",
                                     std::to_string(bad) + " violations over " + std::to_string(primes) + " primes");
                   }});
    return out;
}

// ---------------------------------------------------------------- criterion 9

IntMat random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long bound)
{
    std::uniform_int_distribution<long> dist(-bound, bound);
    IntMat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = dist(rng);
    return m;
}

IntMat random_nonsingular(std::mt19937_64& rng, std::size_t n, long bound)
{
    for (;;) {
        IntMat m = random_matrix(rng, n, n, bound);
        if (determinant(m) != 0)
            return m;
    }
}

IntMat random_unimodular(std::mt19937_64& rng, std::size_t n)
{
    IntMat u = IntMat::identity(n);
    if (n < 2)
        return u;
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::uniform_int_distribution<long> coef(-3, 3);
    for (int step = 0; step < 12; ++step) {
        const std::size_t i = pick(rng);
        std::size_t j = pick(rng);
        if (i == j)
            j = (j + 1) % n;
        const long c = coef(rng);
        for (std::size_t r = 0; r < n; ++r)
            u(r, j) += c * u(r, i);
        if (step % 5 == 4)
            for (std::size_t r = 0; r < n; ++r)
                u(r, i) = -u(r, i);
    }
    return u;
}

constexpr int kLatticeTrials = 1000;

CheckResult latcore_suite(int which)
{
    std::mt19937_64 rng(0x5eed0000ULL + static_cast<unsigned>(which));
    std::uniform_int_distribution<std::size_t> dim(1, 5);
    int bad = 0;
    for (int t = 0; t < kLatticeTrials; ++t) {
        const std::size_t n = dim(rng);
        switch (which) {
        case 0: {
            std::uniform_int_distribution<std::size_t> extra(0, 3);
            const IntMat m = random_matrix(rng, n, n + extra(rng), 12);
            const IntMat h = hnf(m, false);
            bad += hnf(h, false) == h ? 0 : 1;
            break;
        }
        case 1: {
            const IntMat m = random_matrix(rng, n, n, 12);
            bad += hnf(m * random_unimodular(rng, n), false) == hnf(m, false) ? 0 : 1;
            break;
        }
        case 2: {
            const Lattice l1 = Lattice::from_generators(random_nonsingular(rng, n, 6));
            const IntMat a = random_nonsingular(rng, n, 4);
            const IntMat b = random_nonsingular(rng, n, 4);
            const Lattice l2 = Lattice::from_generators(l1.basis() * a);
            const Lattice l3 = Lattice::from_generators(l2.basis() * b);
            const Int i12 = lat_index(l1, l2);
            const Int i23 = lat_index(l2, l3);
            const Int i13 = lat_index(l1, l3);
            bad += i13 == i12 * i23 && i12 == abs(determinant(a)) && i23 == abs(determinant(b)) ? 0 : 1;
            break;
        }
        default: {
            const IntMat m = random_nonsingular(rng, n, 12);
            const IntVec d = snf_diag(m);
            Int prod = 1;
            bool chain = true;
            for (std::size_t i = 0; i < d.size(); ++i) {
                prod *= d[i];
                chain = chain && d[i] > 0 && (i == 0 || d[i] % d[i - 1] == 0);
            }
            const SmithForm s = smith_form(m);
            bad += prod == abs(determinant(m)) && chain && s.u * m * s.v == IntMat::diagonal(s.d) &&
                           s.u * s.u_inv == IntMat::identity(n)
                       ? 0
                       : 1;
            break;
        }
        }
    }
    return result(bad == 0, "0 violations over " + std::to_string(kLatticeTrials) + " matrices",
                  std::to_string(bad) + " violations over " + std::to_string(kLatticeTrials) + " matrices");
}

} // namespace

std::vector<NamedRing> oracle_corpus()
{
    std::vector<NamedRing> c;
    for (std::int64_t n : {2, 4, 8, 9, 27, 6, 12})
        c.push_back({"Z/" + std::to_string(n), zmod(n)});
    c.push_back({"F_4", order_quotient({1, 1, 1}, {{2, 0}})});
    c.push_back({"Z[i]/(3)", order_quotient({1, 0, 1}, {{3, 0}})});
    c.push_back({"Z[i]/(2)", order_quotient({1, 0, 1}, {{2, 0}})});
    c.push_back({"Z[i]/(2+2i)", order_quotient({1, 0, 1}, {{2, 2}})});
    c.push_back({"F_2[x,y]/(x,y)^2", monomial_ring(2, {{0, 0}, {1, 0}, {0, 1}})});
    c.push_back({"F_3[x,y]/(x,y)^2", monomial_ring(3, {{0, 0}, {1, 0}, {0, 1}})});
    c.push_back({"F_2[x,y]/(x^2,y^2)", monomial_ring(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}})});
    c.push_back({"F_2[x,y,z]/(x,y,z)^2", monomial_ring(2, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}})});
    c.push_back({"matson(2)/P^2", build_matson_quotient(2)});
    c.push_back({"matson(3)/P^2", build_matson_quotient(3)});
    c.push_back({"matson(3)/(2)", quotient_ring(build_matson(3).order, ideal_from_gens(build_matson(3).order, {{2, 0, 0}})).ring});
    c.push_back({"Z/4[t]/(t^3)", build_trunc_poly(2, 2, 3)});
    c.push_back({"F_2[t]/(t^4)", build_trunc_poly(2, 1, 4)});
    c.push_back({"F_3[t]/(t^3)", build_trunc_poly(3, 1, 3)});
    c.push_back({"Z/9[t]/(t^2)", build_trunc_poly(3, 2, 2)});
    c.push_back({"Z/8[t]/(t^3)", build_trunc_poly(2, 3, 3)});
    c.push_back({"semigroup(2,2,5)", build_semigroup_trunc(2, 2, 5)});
    c.push_back({"semigroup(2,3,7)", build_semigroup_trunc(2, 3, 7)});
    c.push_back({"semigroup(3,2,5)", build_semigroup_trunc(3, 2, 5)});
    c.push_back({"F_2[x,y]/(x,y)^2 x Z/8", finring_product(monomial_ring(2, {{0, 0}, {1, 0}, {0, 1}}), zmod(8))});
    c.push_back({"Z/4 x F_4", finring_product(zmod(4), order_quotient({1, 1, 1}, {{2, 0}}))});
    c.push_back({"Z/2 x Z/2", finring_product(zmod(2), zmod(2))});
    c.push_back({"zero", FinRing::zero_ring()});
    return c;
}

std::string criterion_title(int criterion)
{
    switch (criterion) {
    case 1: return "Matson orders have rank n";
    case 2: return "Z + 6Z[2^(1/3)]: index, unique primes, z and rank";
    case 3: return "pullback orders over Z[i]";
    case 4: return "Matson orders modulo P^2";
    case 5: return "(p, t)^(n-1) witnesses in truncated polynomial rings";
    case 6: return "semigroup truncations";
    case 7: return "Nakayama count equals the exhaustive count";
    case 8: return "inequality suite";
    case 9: return "lattice canonical forms";
    default: return "unknown";
    }
}

std::vector<Check> catalog_checks()
{
    std::vector<Check> out;
    for (unsigned n = 2; n <= 5; ++n)
        out.push_back(matson_check(n));
    for (auto* part : {&axs_checks, &pullback_checks, &matson_quotient_checks, &trunc_checks, &semigroup_checks})
        for (auto& c : (*part)())
            out.push_back(std::move(c));
    const auto corpus = oracle_corpus();
    for (auto& c : oracle_checks(corpus))
        out.push_back(std::move(c));
    for (auto& c : inequality_checks(corpus))
        out.push_back(std::move(c));
    const char* names[] = {"latcore-hnf-idempotent", "latcore-hnf-unimodular-invariance",
                           "latcore-index-multiplicative", "latcore-smith-det"};
    const char* claims[] = {"hnf(hnf(M)) = hnf(M) on random matrices",
                            "hnf(M U) = hnf(M) for random unimodular U",
                            "[L1 : L3] = [L1 : L2][L2 : L3] on random lattice chains",
                            "the Smith invariant factors multiply to |det M| and form a divisibility chain"};
    for (int k = 0; k < 4; ++k)
        out.push_back({names[k], 9, claims[k], "definition", [k] { return latcore_suite(k); }});
    return out;
}

} // namespace ringrank
