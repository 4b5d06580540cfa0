#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "deforma/rational.hpp"

namespace deforma {

/// Bilinear multiplication on Q^d given by structure constants:
/// mult(e_i, e_j) = sum_l gamma(i,j,l) e_l. Associativity is not enforced at
/// construction; a point of the structure-constant variety may well fail it.
class AlgebraStructure {
  public:
    AlgebraStructure() : dim_(0) {}
    explicit AlgebraStructure(std::size_t dim, std::vector<std::string> labels = {})
        : dim_(dim), gamma_(dim * dim * dim), labels_(std::move(labels)) {
        if (labels_.empty())
            for (std::size_t i = 0; i < dim_; ++i)
                labels_.push_back("e" + std::to_string(i + 1));
    }

    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& labels() const { return labels_; }

    Rational& gamma(std::size_t i, std::size_t j, std::size_t l) {
        return gamma_[(i * dim_ + j) * dim_ + l];
    }
    const Rational& gamma(std::size_t i, std::size_t j, std::size_t l) const {
        return gamma_[(i * dim_ + j) * dim_ + l];
    }

    /// mult of two coordinate vectors.
    Vec mult(const Vec& a, const Vec& b) const;
    /// mult(e_i, e_j) as a coordinate vector.
    Vec mult_basis(std::size_t i, std::size_t j) const;
    /// e_i * v and v * e_i.
    Vec mult_basis_left(std::size_t i, const Vec& v) const;
    Vec mult_basis_right(const Vec& v, std::size_t i) const;

    bool is_commutative() const;

    friend bool operator==(const AlgebraStructure& a, const AlgebraStructure& b) {
        return a.dim_ == b.dim_ && a.gamma_ == b.gamma_;
    }

  private:
    std::size_t dim_;
    std::vector<Rational> gamma_;
    std::vector<std::string> labels_;
};

/// Index quadruple witnessing a failed associativity equation:
/// sum_l gamma(i,l,r) gamma(j,k,l) != sum_l gamma(i,j,l) gamma(l,k,r).
struct AssociativityWitness {
    std::size_t i, j, k, r;
};

struct AssociativityReport {
    bool associative;
    std::optional<AssociativityWitness> witness;
    explicit operator bool() const { return associative; }
};

/// Checks all d^4 polynomial equations; on failure reports the
/// lexicographically first violated (i, j, k, r).
AssociativityReport is_associative(const AlgebraStructure& a);

} // namespace deforma
