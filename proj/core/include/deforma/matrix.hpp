#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "deforma/rational.hpp"

namespace deforma {

/// Dense matrix over the rationals, row-major.
class RatMatrix {
  public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static RatMatrix identity(std::size_t n) {
        RatMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const {
        return entries_[r * cols_ + c];
    }

    Vec row(std::size_t r) const {
        return Vec(entries_.begin() + r * cols_, entries_.begin() + (r + 1) * cols_);
    }

    RatMatrix transposed() const {
        RatMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Vec apply(const Vec& x) const;

    friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

  private:
    std::size_t rows_, cols_;
    std::vector<Rational> entries_;
};

/// Echelonized basis of a subspace of Q^ambient_dim. Vectors are the rows of a
/// reduced row-echelon matrix; pivot columns are strictly increasing and the
/// pivot entries equal 1.
struct SubspaceBasis {
    std::size_t ambient_dim = 0;
    std::vector<Vec> vectors;
    std::vector<std::size_t> pivot_cols;

    std::size_t dim() const { return vectors.size(); }
    bool contains(const Vec& v) const;
};

/// Canonicalizes a spanning set into a SubspaceBasis (rref, zero rows dropped).
SubspaceBasis make_subspace(std::size_t ambient_dim, const std::vector<Vec>& spanning);

/// Reduced row-echelon form; pivots are chosen in the leftmost nonzero column,
/// topmost row. The pair is (rref matrix, pivot column indices).
std::pair<RatMatrix, std::vector<std::size_t>> rref(RatMatrix m);

std::size_t rank(const RatMatrix& m);

/// Basis of { x : m x = 0 }.
SubspaceBasis kernel(const RatMatrix& m);

/// Echelon basis of the column space.
SubspaceBasis image(const RatMatrix& m);

/// Some x with m x = b, absent when the system is inconsistent. The returned
/// solution has zeros in all non-pivot coordinates.
std::optional<Vec> solve_particular(const RatMatrix& m, const Vec& b);

/// Completion of `sub` to a basis of `super` together with the induced
/// coordinate map onto the quotient super/sub.
struct QuotientBasis {
    std::vector<Vec> representatives;
    /// Quotient coordinates of a vector of `super`; length = representatives.size().
    /// Throws SubspaceNotContained when v lies outside `super`.
    std::function<Vec(const Vec&)> coords_of;
    std::size_t dim() const { return representatives.size(); }
};

/// Requires sub contained in super (membership-tested; throws SubspaceNotContained).
QuotientBasis quotient_basis(const SubspaceBasis& sub, const SubspaceBasis& super);

} // namespace deforma
