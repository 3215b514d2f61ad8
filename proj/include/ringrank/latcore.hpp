#pragma once

// Exact integer matrices and full-rank lattices in Z^N.
//
// A Lattice keeps its basis as the columns of a canonical column Hermite
// form: upper triangular, positive diagonal, and every entry to the right of
// a diagonal entry h_ii reduced into [0, h_ii). Equality of lattices is
// therefore entrywise equality of the stored bases.

#include "ringrank/integer.hpp"

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <vector>

namespace ringrank {

class IntMat {
public:
    IntMat() = default;
    IntMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntMat identity(std::size_t n);
    static IntMat diagonal(const IntVec& diag);
    /// Row-major literal, mostly for tests: {{1, 2}, {3, 4}}.
    static IntMat from_rows(std::initializer_list<std::initializer_list<long>> rows);
    static IntMat from_columns(const std::vector<IntVec>& cols, std::size_t rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntVec column(std::size_t j) const;
    IntVec row(std::size_t i) const;
    void set_column(std::size_t j, const IntVec& v);
    IntMat transpose() const;

    /// Columns of *this followed by the columns of other (same row count).
    IntMat hconcat(const IntMat& other) const;

    bool operator==(const IntMat& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> data_;
};

IntMat operator*(const IntMat& a, const IntMat& b);
IntVec operator*(const IntMat& a, const IntVec& v);
std::ostream& operator<<(std::ostream& os, const IntMat& m);

/// Fraction-free (Bareiss) determinant of a square matrix.
Int determinant(const IntMat& m);

/// Canonical column Hermite form of the column span of m. For a full-rank
/// span the result is N x N upper triangular; otherwise it is the N x r
/// column echelon form with pivot rows increasing left to right.
IntMat hnf(const IntMat& m, bool full_rank_required);

/// Smith invariant factors d_1 | d_2 | ... | d_N of a square nonsingular matrix.
IntVec snf_diag(const IntMat& m);

/// Smith form with transforms: u * m * v == diag(d), u_inv == u^{-1}.
struct SmithForm {
    IntMat u;
    IntMat u_inv;
    IntMat v;
    IntVec d;
};
SmithForm smith_form(const IntMat& m);

/// Basis (as columns) of the integer kernel {x : m x = 0}.
IntMat integer_kernel(const IntMat& m);

class Lattice {
public:
    /// Full-rank lattice spanned by the columns of gens (RankDeficient otherwise).
    static Lattice from_generators(const IntMat& gens);
    /// Same, when modulus * Z^N is known to lie in the span; keeps entries small.
    static Lattice from_generators(const IntMat& gens, const Int& modulus);
    static Lattice standard(std::size_t n);
    static Lattice scaled(std::size_t n, const Int& s);
    /// Wraps a basis already in canonical form; checked.
    static Lattice from_hnf(IntMat basis);

    std::size_t dim() const noexcept { return basis_.rows(); }
    const IntMat& basis() const noexcept { return basis_; }
    IntVec column(std::size_t j) const { return basis_.column(j); }
    /// |det| of the basis, i.e. the index in Z^N.
    Int determinant() const;

    /// Coordinates c with basis * c == v, or nullopt when v is not in the lattice.
    std::optional<IntVec> coordinates(const IntVec& v) const;

    bool operator==(const Lattice& other) const { return basis_ == other.basis_; }
    bool operator<(const Lattice& other) const;

private:
    explicit Lattice(IntMat basis) : basis_(std::move(basis)) {}
    IntMat basis_;
};

std::size_t hash_value(const Lattice& l);

Int lat_index(const Lattice& outer, const Lattice& inner);
Lattice lat_sum(const Lattice& a, const Lattice& b);
Lattice lat_intersect(const Lattice& a, const Lattice& b);
/// {x in Z^N : m x in l} for square nonsingular m.
Lattice lat_preimage(const IntMat& m, const Lattice& l);
/// {x in Z^cols : p x in l} for a rectangular p; the result must be full rank.
Lattice lat_preimage_rect(const IntMat& p, const Lattice& l);
bool lat_contains(const Lattice& l, const IntVec& v);
bool lat_subset(const Lattice& inner, const Lattice& outer);

std::ostream& operator<<(std::ostream& os, const Lattice& l);

} // namespace ringrank

template <>
struct std::hash<ringrank::Lattice> {
    std::size_t operator()(const ringrank::Lattice& l) const noexcept { return ringrank::hash_value(l); }
};
