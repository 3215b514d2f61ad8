#include "ringrank/latcore.hpp"

#include "ringrank/error.hpp"

#include <algorithm>
#include <ostream>
#include <utility>

namespace ringrank {

namespace {

using Cols = std::vector<IntVec>;

Cols to_cols(const IntMat& m)
{
    Cols out(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j)
        out[j] = m.column(j);
    return out;
}

IntMat from_cols(const Cols& cols, std::size_t rows)
{
    return IntMat::from_columns(cols, rows);
}

// dst -= q * src
void sub_mul(IntVec& dst, const Int& q, const IntVec& src)
{
    for (std::size_t k = 0; k < dst.size(); ++k)
        dst[k] -= q * src[k];
}

void negate(IntVec& v)
{
    for (auto& x : v)
        x = -x;
}

// (a, b) <- (s a + t b, u a + v b)
void combine(IntVec& a, IntVec& b, const Int& s, const Int& t, const Int& u, const Int& v)
{
    Int x, y;
    for (std::size_t k = 0; k < a.size(); ++k) {
        x = a[k];
        y = b[k];
        a[k] = s * x + t * y;
        b[k] = u * x + v * y;
    }
}

// Clears row `row` of column c using the pivot column p (which must have a
// nonzero entry there); the pivot afterwards holds the gcd. The same unimodular
// step is applied to the transform columns when present.
void eliminate(Cols& w, Cols* t, std::size_t p, std::size_t c, std::size_t row)
{
    const Int a = w[p][row];
    const Int b = w[c][row];
    if (b % a == 0) {
        const Int q = b / a;
        sub_mul(w[c], q, w[p]);
        if (t)
            sub_mul((*t)[c], q, (*t)[p]);
        return;
    }
    Int g, s, tt;
    ext_gcd(a, b, g, s, tt);
    const Int u = -(b / g);
    const Int v = a / g;
    combine(w[p], w[c], s, tt, u, v);
    if (t)
        combine((*t)[p], (*t)[c], s, tt, u, v);
}

struct Echelon {
    Cols pivots;                  // pivot rows increasing left to right
    std::vector<std::size_t> rows; // pivot row of each pivot column
    Cols kernel;                  // transform columns mapped to zero
};

// Reduces entries right of each pivot into [0, pivot).
void reduce_above(Cols& piv, const std::vector<std::size_t>& rows, Cols* t)
{
    for (std::size_t j = 1; j < piv.size(); ++j) {
        for (std::size_t c = j; c-- > 0;) {
            const std::size_t r = rows[c];
            const Int q = floor_div(piv[j][r], piv[c][r]);
            if (q != 0) {
                sub_mul(piv[j], q, piv[c]);
                if (t)
                    sub_mul((*t)[j], q, (*t)[c]);
            }
        }
    }
}

Echelon echelon(Cols w, std::size_t nrows, bool track)
{
    const std::size_t m = w.size();
    Cols t;
    if (track) {
        t.assign(m, IntVec(m));
        for (std::size_t j = 0; j < m; ++j)
            t[j][j] = 1;
    }
    Cols* tp = track ? &t : nullptr;

    std::size_t active = m;
    std::vector<std::size_t> rows_at(m);
    for (std::size_t row = nrows; row-- > 0;) {
        std::size_t piv = active;
        for (std::size_t c = 0; c < active; ++c) {
            if (w[c][row] == 0)
                continue;
            if (piv == active) {
                piv = c;
                continue;
            }
            eliminate(w, tp, piv, c, row);
        }
        if (piv == active)
            continue;
        --active;
        std::swap(w[piv], w[active]);
        if (tp)
            std::swap(t[piv], t[active]);
        if (w[active][row] < 0) {
            negate(w[active]);
            if (tp)
                negate(t[active]);
        }
        rows_at[active] = row;
    }

    Echelon out;
    out.pivots.assign(std::make_move_iterator(w.begin() + static_cast<std::ptrdiff_t>(active)),
                      std::make_move_iterator(w.end()));
    out.rows.assign(rows_at.begin() + static_cast<std::ptrdiff_t>(active), rows_at.end());
    Cols tpiv;
    if (tp) {
        tpiv.assign(t.begin() + static_cast<std::ptrdiff_t>(active), t.end());
        out.kernel.assign(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(active));
    }
    reduce_above(out.pivots, out.rows, tp ? &tpiv : nullptr);
    return out;
}

// Hermite form of a full-rank span known to contain modulus * Z^n.
Cols hnf_modular(Cols work, std::size_t n, const Int& modulus)
{
    const Int D = abs(modulus);
    for (auto& c : work)
        for (auto& x : c)
            x = mod_floor(x, D);
    Cols piv(n);
    std::vector<std::size_t> rows(n);
    for (std::size_t row = n; row-- > 0;) {
        IntVec de(n);
        de[row] = D;
        work.push_back(std::move(de));
        std::size_t p = work.size();
        for (std::size_t c = 0; c < work.size(); ++c) {
            if (work[c][row] == 0)
                continue;
            if (p == work.size()) {
                p = c;
                continue;
            }
            eliminate(work, nullptr, p, c, row);
        }
        IntVec pc = std::move(work[p]);
        work.erase(work.begin() + static_cast<std::ptrdiff_t>(p));
        if (pc[row] < 0)
            negate(pc);
        for (std::size_t i = 0; i < row; ++i)
            pc[i] = mod_floor(pc[i], D);
        piv[row] = std::move(pc);
        rows[row] = row;
        Cols kept;
        kept.reserve(work.size());
        for (auto& c : work) {
            bool nonzero = false;
            for (std::size_t i = 0; i < row; ++i) {
                c[i] = mod_floor(c[i], D);
                nonzero = nonzero || c[i] != 0;
            }
            if (nonzero)
                kept.push_back(std::move(c));
        }
        work = std::move(kept);
    }
    reduce_above(piv, rows, nullptr);
    return piv;
}

} // namespace

// ---------------------------------------------------------------- IntMat

IntMat IntMat::identity(std::size_t n)
{
    IntMat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntMat IntMat::diagonal(const IntVec& diag)
{
    IntMat m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i)
        m(i, i) = diag[i];
    return m;
}

IntMat IntMat::from_rows(std::initializer_list<std::initializer_list<long>> rows)
{
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows.begin()->size() : 0;
    IntMat m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c)
            throw Error(Errc::DimensionMismatch, "ragged matrix literal");
        std::size_t j = 0;
        for (long v : row)
            m(i, j++) = v;
        ++i;
    }
    return m;
}

IntMat IntMat::from_columns(const std::vector<IntVec>& cols, std::size_t rows)
{
    IntMat m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows)
            throw Error(Errc::DimensionMismatch, "column length differs from row count");
        for (std::size_t i = 0; i < rows; ++i)
            m(i, j) = cols[j][i];
    }
    return m;
}

IntVec IntMat::column(std::size_t j) const
{
    IntVec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        v[i] = (*this)(i, j);
    return v;
}

IntVec IntMat::row(std::size_t i) const
{
    return IntVec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

void IntMat::set_column(std::size_t j, const IntVec& v)
{
    if (v.size() != rows_)
        throw Error(Errc::DimensionMismatch, "set_column length");
    for (std::size_t i = 0; i < rows_; ++i)
        (*this)(i, j) = v[i];
}

IntMat IntMat::transpose() const
{
    IntMat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

IntMat IntMat::hconcat(const IntMat& other) const
{
    if (other.rows_ != rows_)
        throw Error(Errc::DimensionMismatch, "hconcat row counts differ");
    IntMat m(rows_, cols_ + other.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j)
            m(i, j) = (*this)(i, j);
        for (std::size_t j = 0; j < other.cols_; ++j)
            m(i, cols_ + j) = other(i, j);
    }
    return m;
}

IntMat operator*(const IntMat& a, const IntMat& b)
{
    if (a.cols() != b.rows())
        throw Error(Errc::DimensionMismatch, "matrix product shapes");
    IntMat c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

IntVec operator*(const IntMat& a, const IntVec& v)
{
    if (a.cols() != v.size())
        throw Error(Errc::DimensionMismatch, "matrix-vector shapes");
    IntVec out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            out[i] += a(i, k) * v[k];
    return out;
}

std::ostream& operator<<(std::ostream& os, const IntMat& m)
{
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < m.cols(); ++j)
            os << (j ? ", " : "") << m(i, j);
        os << ']';
    }
    return os << ']';
}

Int determinant(const IntMat& m)
{
    if (m.rows() != m.cols())
        throw Error(Errc::DimensionMismatch, "determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0)
        return 1;
    IntMat a = m;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t r = k + 1;
            while (r < n && a(r, k) == 0)
                ++r;
            if (r == n)
                return 0;
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a(k, j), a(r, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

// ---------------------------------------------------------------- normal forms

IntMat hnf(const IntMat& m, bool full_rank_required)
{
    Echelon e = echelon(to_cols(m), m.rows(), false);
    if (full_rank_required && e.pivots.size() < m.rows())
        throw Error(Errc::RankDeficient, "column span has rank " + std::to_string(e.pivots.size()) +
                                             " < " + std::to_string(m.rows()));
    return from_cols(e.pivots, m.rows());
}

IntMat integer_kernel(const IntMat& m)
{
    Echelon e = echelon(to_cols(m), m.rows(), true);
    return from_cols(e.kernel, m.cols());
}

SmithForm smith_form(const IntMat& m)
{
    if (m.rows() != m.cols())
        throw Error(Errc::DimensionMismatch, "Smith form needs a square matrix");
    const std::size_t n = m.rows();
    IntMat a = m;
    SmithForm out{IntMat::identity(n), IntMat::identity(n), IntMat::identity(n), IntVec(n)};
    IntMat& u = out.u;
    IntMat& ui = out.u_inv;
    IntMat& v = out.v;

    // Elementary operations, each mirrored on the transforms.
    auto swap_rows = [&](std::size_t i, std::size_t j) {
        for (std::size_t c = 0; c < n; ++c) {
            std::swap(a(i, c), a(j, c));
            std::swap(u(i, c), u(j, c));
            std::swap(ui(c, i), ui(c, j));
        }
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        for (std::size_t r = 0; r < n; ++r) {
            std::swap(a(r, i), a(r, j));
            std::swap(v(r, i), v(r, j));
        }
    };
    // row_i -= q row_t
    auto row_sub = [&](std::size_t i, std::size_t t, const Int& q) {
        for (std::size_t c = 0; c < n; ++c) {
            a(i, c) -= q * a(t, c);
            u(i, c) -= q * u(t, c);
            ui(c, t) += q * ui(c, i);
        }
    };
    // col_j -= q col_t
    auto col_sub = [&](std::size_t j, std::size_t t, const Int& q) {
        for (std::size_t r = 0; r < n; ++r) {
            a(r, j) -= q * a(r, t);
            v(r, j) -= q * v(r, t);
        }
    };

    for (std::size_t t = 0; t < n; ++t) {
        for (;;) {
            std::size_t bi = n, bj = n;
            for (std::size_t i = t; i < n; ++i)
                for (std::size_t j = t; j < n; ++j)
                    if (a(i, j) != 0 && (bi == n || abs(a(i, j)) < abs(a(bi, bj))))
                        bi = i, bj = j;
            if (bi == n)
                throw Error(Errc::Singular, "Smith form of a singular matrix");
            if (bi != t)
                swap_rows(t, bi);
            if (bj != t)
                swap_cols(t, bj);

            bool clean = true;
            for (std::size_t i = t + 1; i < n; ++i) {
                if (a(i, t) == 0)
                    continue;
                row_sub(i, t, floor_div(a(i, t), a(t, t)));
                clean = clean && a(i, t) == 0;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (a(t, j) == 0)
                    continue;
                col_sub(j, t, floor_div(a(t, j), a(t, t)));
                clean = clean && a(t, j) == 0;
            }
            if (!clean)
                continue;

            std::size_t bad = n;
            for (std::size_t i = t + 1; i < n && bad == n; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (a(i, j) % a(t, t) != 0) {
                        bad = i;
                        break;
                    }
            if (bad == n)
                break;
            // row_t += row_bad
            row_sub(t, bad, Int(-1));
        }
        if (a(t, t) < 0) {
            for (std::size_t c = 0; c < n; ++c) {
                a(t, c) = -a(t, c);
                u(t, c) = -u(t, c);
                ui(c, t) = -ui(c, t);
            }
        }
        out.d[t] = a(t, t);
    }
    return out;
}

IntVec snf_diag(const IntMat& m)
{
    return smith_form(m).d;
}

// ---------------------------------------------------------------- Lattice

Lattice Lattice::from_generators(const IntMat& gens)
{
    return Lattice(hnf(gens, true));
}

Lattice Lattice::from_generators(const IntMat& gens, const Int& modulus)
{
    if (modulus == 0)
        return from_generators(gens);
    return Lattice(from_cols(hnf_modular(to_cols(gens), gens.rows(), modulus), gens.rows()));
}

Lattice Lattice::standard(std::size_t n)
{
    return Lattice(IntMat::identity(n));
}

Lattice Lattice::scaled(std::size_t n, const Int& s)
{
    if (s == 0)
        throw Error(Errc::RankDeficient, "zero scaling");
    IntMat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = abs(s);
    return Lattice(std::move(m));
}

Lattice Lattice::from_hnf(IntMat basis)
{
    const std::size_t n = basis.rows();
    if (basis.cols() != n)
        throw Error(Errc::DimensionMismatch, "lattice basis must be square");
    for (std::size_t i = 0; i < n; ++i) {
        if (basis(i, i) <= 0)
            throw Error(Errc::InvalidArgument, "basis is not in canonical form (diagonal)");
        for (std::size_t j = 0; j < n; ++j) {
            if (j < i && basis(i, j) != 0)
                throw Error(Errc::InvalidArgument, "basis is not upper triangular");
            if (j > i && (basis(i, j) < 0 || basis(i, j) >= basis(i, i)))
                throw Error(Errc::InvalidArgument, "basis is not reduced");
        }
    }
    return Lattice(std::move(basis));
}

Int Lattice::determinant() const
{
    Int d = 1;
    for (std::size_t i = 0; i < dim(); ++i)
        d *= basis_(i, i);
    return d;
}

std::optional<IntVec> Lattice::coordinates(const IntVec& v) const
{
    const std::size_t n = dim();
    if (v.size() != n)
        throw Error(Errc::DimensionMismatch, "vector length differs from lattice dimension");
    IntVec c(n);
    Int r;
    for (std::size_t i = n; i-- > 0;) {
        r = v[i];
        for (std::size_t j = i + 1; j < n; ++j)
            r -= basis_(i, j) * c[j];
        if (r % basis_(i, i) != 0)
            return std::nullopt;
        c[i] = r / basis_(i, i);
    }
    return c;
}

bool Lattice::operator<(const Lattice& other) const
{
    if (dim() != other.dim())
        return dim() < other.dim();
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = i; j < dim(); ++j) {
            const int c = cmp(basis_(i, j), other.basis_(i, j));
            if (c != 0)
                return c < 0;
        }
    return false;
}

std::size_t hash_value(const Lattice& l)
{
    std::size_t h = l.dim();
    for (std::size_t i = 0; i < l.dim(); ++i)
        for (std::size_t j = i; j < l.dim(); ++j) {
            const Int& x = l.basis()(i, j);
            const std::size_t v = mpz_fdiv_ui(x.get_mpz_t(), 4294967291UL);
            h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
    return h;
}

bool lat_contains(const Lattice& l, const IntVec& v)
{
    return l.coordinates(v).has_value();
}

bool lat_subset(const Lattice& inner, const Lattice& outer)
{
    if (inner.dim() != outer.dim())
        throw Error(Errc::DimensionMismatch, "lattice dimensions differ");
    for (std::size_t j = 0; j < inner.dim(); ++j)
        if (!lat_contains(outer, inner.column(j)))
            return false;
    return true;
}

Int lat_index(const Lattice& outer, const Lattice& inner)
{
    if (!lat_subset(inner, outer))
        throw Error(Errc::NotContained, "inner lattice is not contained in outer");
    return inner.determinant() / outer.determinant();
}

Lattice lat_sum(const Lattice& a, const Lattice& b)
{
    if (a.dim() != b.dim())
        throw Error(Errc::DimensionMismatch, "lattice dimensions differ");
    return Lattice::from_generators(a.basis().hconcat(b.basis()), a.determinant());
}

Lattice lat_intersect(const Lattice& a, const Lattice& b)
{
    const std::size_t n = a.dim();
    if (b.dim() != n)
        throw Error(Errc::DimensionMismatch, "lattice dimensions differ");
    IntMat neg_b = b.basis();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            neg_b(i, j) = -neg_b(i, j);
    const IntMat k = integer_kernel(a.basis().hconcat(neg_b));
    IntMat top(n, k.cols());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < k.cols(); ++j)
            top(i, j) = k(i, j);
    Int modulus;
    mpz_lcm(modulus.get_mpz_t(), a.determinant().get_mpz_t(), b.determinant().get_mpz_t());
    return Lattice::from_generators(a.basis() * top, modulus);
}

Lattice lat_preimage_rect(const IntMat& p, const Lattice& l)
{
    if (p.rows() != l.dim())
        throw Error(Errc::DimensionMismatch, "map codomain differs from lattice dimension");
    const std::size_t n = p.cols();
    IntMat neg_b = l.basis();
    for (std::size_t i = 0; i < neg_b.rows(); ++i)
        for (std::size_t j = 0; j < neg_b.cols(); ++j)
            neg_b(i, j) = -neg_b(i, j);
    const IntMat k = integer_kernel(p.hconcat(neg_b));
    IntMat top(n, k.cols());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < k.cols(); ++j)
            top(i, j) = k(i, j);
    // p (det L) z lies in det(L) Z^k, which is inside L.
    return Lattice::from_generators(top, l.determinant());
}

Lattice lat_preimage(const IntMat& m, const Lattice& l)
{
    if (m.rows() != m.cols() || m.rows() != l.dim())
        throw Error(Errc::DimensionMismatch, "preimage needs a square map of the lattice dimension");
    if (determinant(m) == 0)
        throw Error(Errc::Singular, "preimage under a singular map");
    return lat_preimage_rect(m, l);
}

std::ostream& operator<<(std::ostream& os, const Lattice& l)
{
    return os << l.basis();
}

} // namespace ringrank
