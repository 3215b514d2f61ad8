#include "ringrank/integer.hpp"

#include "ringrank/error.hpp"

namespace ringrank {

std::string_view errc_name(Errc code)
{
    switch (code) {
    case Errc::RankDeficient: return "RankDeficient";
    case Errc::Singular: return "Singular";
    case Errc::NotContained: return "NotContained";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NotMonic: return "NotMonic";
    case Errc::MissingIdentity: return "MissingIdentity";
    case Errc::NotClosed: return "NotClosed";
    case Errc::InvalidTable: return "InvalidTable";
    case Errc::ZeroIdeal: return "ZeroIdeal";
    case Errc::OwnerMismatch: return "OwnerMismatch";
    case Errc::ZeroRing: return "ZeroRing";
    case Errc::SizeCapExceeded: return "SizeCapExceeded";
    case Errc::NotPrime: return "NotPrime";
    case Errc::NonIntegralLog: return "NonIntegralLog";
    case Errc::NoStabilization: return "NoStabilization";
    case Errc::UnitOrZeroX: return "UnitOrZeroX";
    case Errc::BadDegree: return "BadDegree";
    case Errc::SplitPrime: return "SplitPrime";
    case Errc::DegreeOne: return "DegreeOne";
    case Errc::TruncationTooShort: return "TruncationTooShort";
    case Errc::Overflow: return "Overflow";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::SchemaError: return "SchemaError";
    }
    return "Unknown";
}

std::int64_t to_int64(const Int& v)
{
    if (!fits_int64(v))
        throw Error(Errc::Overflow, "integer " + v.get_str() + " does not fit in 64 bits");
    return v.get_si();
}

Int floor_div(const Int& a, const Int& b)
{
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Int mod_floor(const Int& a, const Int& b)
{
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Int ipow(const Int& base, unsigned long exp)
{
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

bool is_prime(const Int& p)
{
    if (p < 2)
        return false;
    return mpz_probab_prime_p(p.get_mpz_t(), 40) != 0;
}

std::vector<Int> prime_divisors(Int n)
{
    std::vector<Int> out;
    if (n < 0)
        n = -n;
    for (Int d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0)
                n /= d;
        }
    }
    if (n > 1)
        out.push_back(n);
    return out;
}

std::optional<unsigned> exact_log(const Int& value, const Int& base)
{
    if (base < 2 || value < 1)
        return std::nullopt;
    unsigned k = 0;
    Int v = value;
    while (v % base == 0) {
        v /= base;
        ++k;
    }
    if (v != 1)
        return std::nullopt;
    return k;
}

void ext_gcd(const Int& a, const Int& b, Int& g, Int& s, Int& t)
{
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

} // namespace ringrank
