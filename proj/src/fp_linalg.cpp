#include "fp_linalg.hpp"

#include "ringrank/error.hpp"

#include <algorithm>
#include <utility>

namespace ringrank::fp {

std::int64_t norm(std::int64_t a, std::int64_t p)
{
    a %= p;
    return a < 0 ? a + p : a;
}

std::int64_t mul(std::int64_t a, std::int64_t b, std::int64_t p)
{
    return static_cast<std::int64_t>(static_cast<__int128>(a) * b % p);
}

std::int64_t inv(std::int64_t a, std::int64_t p)
{
    std::int64_t t = 0, nt = 1, r = p, nr = norm(a, p);
    while (nr != 0) {
        const std::int64_t q = r / nr;
        t -= q * nt;
        std::swap(t, nt);
        r -= q * nr;
        std::swap(r, nr);
    }
    if (r != 1)
        throw Error(Errc::InvalidArgument, "element is not invertible modulo p");
    return norm(t, p);
}

std::vector<std::size_t> rref(std::vector<Vec>& rows, std::size_t ncols, std::int64_t p)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
        std::size_t sel = r;
        while (sel < rows.size() && rows[sel][c] == 0)
            ++sel;
        if (sel == rows.size())
            continue;
        std::swap(rows[r], rows[sel]);
        const std::int64_t iv = inv(rows[r][c], p);
        for (auto& x : rows[r])
            x = mul(x, iv, p);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0)
                continue;
            const std::int64_t f = rows[i][c];
            for (std::size_t j = 0; j < ncols; ++j)
                rows[i][j] = norm(rows[i][j] - mul(f, rows[r][j], p), p);
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

std::vector<Vec> kernel(const std::vector<Vec>& cols, std::size_t m, std::int64_t p)
{
    const std::size_t n = cols.size();
    std::vector<Vec> rows(m, Vec(n));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < m; ++i)
            rows[i][j] = norm(cols[j][i], p);
    const auto pivots = rref(rows, n, p);
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots)
        is_pivot[c] = true;
    std::vector<Vec> out;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f])
            continue;
        Vec x(n, 0);
        x[f] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            x[pivots[r]] = norm(-rows[r][f], p);
        out.push_back(std::move(x));
    }
    return out;
}

std::vector<Vec> span(std::vector<Vec> vectors, std::size_t n, std::int64_t p)
{
    for (auto& v : vectors)
        for (auto& x : v)
            x = norm(x, p);
    rref(vectors, n, p);
    return vectors;
}

std::vector<Vec> preimage(const std::vector<Vec>& map_cols, const std::vector<Vec>& w, std::size_t m,
                          std::int64_t p)
{
    const std::size_t n = map_cols.size();
    std::vector<Vec> cols = map_cols;
    for (const auto& v : w) {
        Vec neg(m);
        for (std::size_t i = 0; i < m; ++i)
            neg[i] = norm(-v[i], p);
        cols.push_back(std::move(neg));
    }
    std::vector<Vec> proj;
    for (auto& k : kernel(cols, m, p))
        proj.emplace_back(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(n));
    return span(std::move(proj), n, p);
}

namespace {

using Poly = Vec; // low to high, trimmed

void trim(Poly& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

Poly poly_mod(Poly a, const Poly& f, std::int64_t p)
{
    trim(a);
    const std::int64_t lead_inv = inv(f.back(), p);
    while (a.size() >= f.size()) {
        const std::int64_t c = mul(a.back(), lead_inv, p);
        const std::size_t shift = a.size() - f.size();
        for (std::size_t i = 0; i < f.size(); ++i)
            a[shift + i] = norm(a[shift + i] - mul(c, f[i], p), p);
        trim(a);
    }
    return a;
}

Poly poly_div(Poly a, const Poly& f, std::int64_t p)
{
    trim(a);
    const std::int64_t lead_inv = inv(f.back(), p);
    Poly q(a.size() >= f.size() ? a.size() - f.size() + 1 : 0, 0);
    while (a.size() >= f.size()) {
        const std::int64_t c = mul(a.back(), lead_inv, p);
        const std::size_t shift = a.size() - f.size();
        q[shift] = c;
        for (std::size_t i = 0; i < f.size(); ++i)
            a[shift + i] = norm(a[shift + i] - mul(c, f[i], p), p);
        trim(a);
    }
    trim(q);
    return q;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::int64_t p)
{
    if (a.empty() || b.empty())
        return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = norm(c[i + j] + mul(a[i], b[j], p), p);
    return poly_mod(std::move(c), f, p);
}

Poly poly_gcd(Poly a, Poly b, std::int64_t p)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        const std::int64_t li = inv(a.back(), p);
        for (auto& x : a)
            x = mul(x, li, p);
    }
    return a;
}

void split_rec(const Poly& f, std::int64_t p, std::vector<std::int64_t>& out)
{
    if (f.size() <= 1)
        return;
    if (f.size() == 2) {
        out.push_back(norm(-mul(f[0], inv(f[1], p), p), p));
        return;
    }
    const std::uint64_t e = static_cast<std::uint64_t>(p - 1) / 2;
    for (std::int64_t a = 0; a < p; ++a) {
        Poly base = poly_mod(Poly{a, 1}, f, p);
        Poly acc{1};
        for (std::uint64_t k = e; k > 0; k >>= 1U) {
            if (k & 1U)
                acc = poly_mulmod(acc, base, f, p);
            base = poly_mulmod(base, base, f, p);
        }
        if (acc.empty())
            acc = {0};
        acc[0] = norm(acc[0] - 1, p);
        Poly g = poly_gcd(f, acc, p);
        if (g.size() > 1 && g.size() < f.size()) {
            split_rec(g, p, out);
            split_rec(poly_div(f, g, p), p, out);
            return;
        }
    }
    throw Error(Errc::InvalidArgument, "polynomial does not split into distinct linear factors");
}

} // namespace

std::vector<std::int64_t> split_roots(Vec f, std::int64_t p)
{
    for (auto& x : f)
        x = norm(x, p);
    trim(f);
    std::vector<std::int64_t> roots;
    if (p < 4096) {
        for (std::int64_t c = 0; c < p; ++c) {
            std::int64_t v = 0;
            for (std::size_t i = f.size(); i-- > 0;)
                v = norm(mul(v, c, p) + f[i], p);
            if (v == 0)
                roots.push_back(c);
        }
        return roots;
    }
    if (!f.empty() && f[0] == 0) {
        roots.push_back(0);
        f.erase(f.begin());
    }
    split_rec(f, p, roots);
    std::sort(roots.begin(), roots.end());
    return roots;
}

} // namespace ringrank::fp
