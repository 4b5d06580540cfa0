#pragma once

#include <cstddef>
#include <vector>

#include "deforma/algebra.hpp"
#include "deforma/rational.hpp"

namespace deforma {

/// Multilinear map V^{tensor n} -> V on a d-dimensional space, stored as a
/// dense coefficient array indexed by (i_1,...,i_n; j). Arity 0 means an
/// element of V. With the Lie grading used throughout, a cochain of arity
/// n+1 sits in degree n.
class Cochain {
  public:
    Cochain() : arity_(0), dim_(0) {}
    Cochain(std::size_t arity, std::size_t dim)
        : arity_(arity), dim_(dim), coeffs_(pow_dim(arity + 1)) {}

    std::size_t arity() const { return arity_; }
    std::size_t dim() const { return dim_; }
    int lie_degree() const { return static_cast<int>(arity_) - 1; }

    /// Coefficient of e_j in the value on (e_{inputs[0]},...,e_{inputs[n-1]}).
    Rational& coeff(const std::vector<std::size_t>& inputs, std::size_t j) {
        return coeffs_[flat(inputs) * dim_ + j];
    }
    const Rational& coeff(const std::vector<std::size_t>& inputs, std::size_t j) const {
        return coeffs_[flat(inputs) * dim_ + j];
    }

    /// Value on a basis tuple.
    Vec on_basis(const std::vector<std::size_t>& inputs) const {
        std::size_t base = flat(inputs) * dim_;
        return Vec(coeffs_.begin() + base, coeffs_.begin() + base + dim_);
    }
    void set_on_basis(const std::vector<std::size_t>& inputs, const Vec& value);

    /// Value on a basis tuple with the slot at `pos` replaced by a coordinate
    /// vector (multilinear in that slot).
    Vec on_basis_with_combo(std::vector<std::size_t> inputs, std::size_t pos,
                            const Vec& combo) const;

    bool is_zero() const { return deforma::is_zero(coeffs_); }

    /// Flat view of all coefficients (used to assemble matrices of linear maps
    /// between cochain spaces).
    const Vec& flat_coeffs() const { return coeffs_; }
    Vec& flat_coeffs() { return coeffs_; }
    static Cochain from_flat(std::size_t arity, std::size_t dim, Vec coeffs);

    Cochain& operator+=(const Cochain& o);
    Cochain& operator-=(const Cochain& o);
    Cochain& operator*=(const Rational& c);
    friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
    friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
    friend Cochain operator*(const Rational& c, Cochain a) { return a *= c; }
    friend Cochain operator-(Cochain a) { return a *= Rational(-1); }
    friend bool operator==(const Cochain& a, const Cochain& b) {
        return a.arity_ == b.arity_ && a.dim_ == b.dim_ && a.coeffs_ == b.coeffs_;
    }

    static Cochain identity_map(std::size_t dim); // arity 1, e_i -> e_i
    static Cochain from_element(const Vec& element); // arity 0
    static Cochain multiplication(const AlgebraStructure& a); // arity 2

  private:
    std::size_t pow_dim(std::size_t n) const {
        std::size_t p = 1;
        for (std::size_t k = 0; k < n; ++k) p *= dim_;
        return p;
    }
    std::size_t flat(const std::vector<std::size_t>& inputs) const;

    std::size_t arity_, dim_;
    Vec coeffs_;
};

/// The coboundary of f: the arity-(n+1) cochain
///   (a_0,...,a_n) -> (-1)^{n+1} a_0 f(a_1,...,a_n) + f(a_0,...,a_{n-1}) a_n
///                    + sum_{i=0}^{n-1} (-1)^{i+n} f(a_0,...,a_i a_{i+1},...,a_n).
/// For arity 0 the formula degenerates to m -> (a_0 -> m a_0 - a_0 m), whose
/// kernel is the usual centre-like H^0.
Cochain hochschild_differential(const AlgebraStructure& a, const Cochain& f);

/// Insertion f o_i g = f(id^{(i-1)} ox g ox id^{(m-i+1)}), 1 <= i <= arity(f),
/// where f has arity m+1 and g arity n+1; the result has arity m+n+1.
Cochain circ_i(const Cochain& f, const Cochain& g, std::size_t i);

/// f o g = sum_i (-1)^{n(i+1)} f o_i g with n = arity(g) - 1.
Cochain circ(const Cochain& f, const Cochain& g);

/// [f,g] = f o g - (-1)^{mn} g o f with m = arity(f) - 1, n = arity(g) - 1.
/// This convention makes delta(f) = [mu, f] hold on the nose.
Cochain gerstenhaber_bracket(const Cochain& f, const Cochain& g);

/// Whether [kappa, kappa] = 0 for an arity-2 cochain; equivalent to the
/// associativity of the bilinear map kappa.
bool bracket_square_test(const Cochain& kappa);

/// The structure constants of an arity-2 cochain viewed as a multiplication.
AlgebraStructure as_algebra(const Cochain& kappa);

/// All basis tuples (i_1..i_n) for arity n over dimension d, lexicographic.
std::vector<std::vector<std::size_t>> cochain_tuples(std::size_t arity, std::size_t dim);

} // namespace deforma
