#pragma once

#include <map>
#include <string>
#include <vector>

#include "deforma/rational.hpp"

namespace deforma {

/// Finite-dimensional Z-graded vector space with a chosen homogeneous basis.
/// Degrees not listed have dimension zero.
class GradedSpace {
  public:
    GradedSpace() = default;
    explicit GradedSpace(std::map<int, std::size_t> dims) : dims_(std::move(dims)) {
        for (auto it = dims_.begin(); it != dims_.end();)
            it = it->second == 0 ? dims_.erase(it) : std::next(it);
    }

    std::size_t dim(int degree) const {
        auto it = dims_.find(degree);
        return it == dims_.end() ? 0 : it->second;
    }
    const std::map<int, std::size_t>& components() const { return dims_; }
    std::size_t total_dim() const {
        std::size_t t = 0;
        for (auto& [d, n] : dims_) t += n;
        return t;
    }

    void set_label(int degree, std::size_t index, std::string label) {
        labels_[{degree, index}] = std::move(label);
    }
    std::string label(int degree, std::size_t index) const {
        auto it = labels_.find({degree, index});
        if (it != labels_.end()) return it->second;
        return "v(" + std::to_string(degree) + "," + std::to_string(index) + ")";
    }

    friend bool operator==(const GradedSpace& a, const GradedSpace& b) {
        return a.dims_ == b.dims_;
    }

  private:
    std::map<int, std::size_t> dims_;
    std::map<std::pair<int, std::size_t>, std::string> labels_;
};

/// Basis slot of a graded space.
struct BasisRef {
    int degree = 0;
    std::size_t index = 0;
    friend auto operator<=>(const BasisRef&, const BasisRef&) = default;
};

/// Homogeneous element: a degree plus coordinates in that degree's component.
/// The zero element of any degree is an empty coordinate vector or all zeros.
struct GradedElement {
    int degree = 0;
    Vec coords;

    bool is_zero() const { return deforma::is_zero(coords); }

    static GradedElement zero(const GradedSpace& space, int degree) {
        return {degree, Vec(space.dim(degree))};
    }
    static GradedElement basis(const GradedSpace& space, BasisRef ref) {
        GradedElement e = zero(space, ref.degree);
        e.coords.at(ref.index) = Rational(1);
        return e;
    }

    GradedElement& add_scaled(const Rational& c, const GradedElement& other);
    friend bool operator==(const GradedElement& a, const GradedElement& b);
};

/// Permutation of {1..n}, stored 0-based: images[i] = sigma(i+1) - 1.
struct Permutation {
    std::vector<std::size_t> images;

    std::size_t size() const { return images.size(); }
    static Permutation identity(std::size_t n) {
        Permutation p;
        p.images.resize(n);
        for (std::size_t i = 0; i < n; ++i) p.images[i] = i;
        return p;
    }
    bool is_valid() const;
    int parity_sign() const; // sgn(sigma)
};

/// Koszul sign eps(sigma) defined by w_1 ^ ... ^ w_n = eps(sigma) w_sigma(1) ^ ... ^ w_sigma(n),
/// for homogeneous w_i of the given degrees.
int koszul_sign(const Permutation& sigma, const std::vector<int>& degrees);

/// chi(sigma) = sgn(sigma) * eps(sigma).
int antisym_koszul_sign(const Permutation& sigma, const std::vector<int>& degrees);

/// All (i, n-i)-unshuffles: sigma with sigma(1)<...<sigma(i) and
/// sigma(i+1)<...<sigma(n), in lexicographic order of the first block.
std::vector<Permutation> unshuffles(std::size_t i, std::size_t n);

/// (-1)^{n(n-1)/2}, the sign picked up by collapsing n suspensions against
/// n desuspensions.
int suspension_power_sign(std::size_t n);

/// Direction marker for the degree shift of a graded space.
enum class SuspensionDirection { up, down };

/// (up V)^i has the dimension of V^{i-1}; (down V)^i that of V^{i+1}.
GradedSpace suspend(const GradedSpace& space, SuspensionDirection dir);

/// Multilinear map between graded spaces, homogeneous of a fixed degree:
/// inputs of degrees g_1..g_k land in the component of degree g_1+...+g_k+degree.
/// Coefficients are stored sparsely on basis tuples; missing tuples are zero.
class GradedMultilinearMap {
  public:
    GradedMultilinearMap() = default;
    GradedMultilinearMap(std::size_t arity, int degree, GradedSpace domain,
                         GradedSpace codomain)
        : arity_(arity), degree_(degree), domain_(std::move(domain)),
          codomain_(std::move(codomain)) {}

    std::size_t arity() const { return arity_; }
    int degree() const { return degree_; }
    const GradedSpace& domain() const { return domain_; }
    const GradedSpace& codomain() const { return codomain_; }

    int output_degree(const std::vector<BasisRef>& inputs) const {
        int d = degree_;
        for (const auto& r : inputs) d += r.degree;
        return d;
    }

    /// Stores the value on a basis tuple. Zero vectors are erased from the table.
    void set(const std::vector<BasisRef>& inputs, Vec value);
    void add_to(const std::vector<BasisRef>& inputs, const Rational& coeff,
                std::size_t out_index);

    /// Value on a basis tuple: a homogeneous element of the forced degree.
    GradedElement on_basis(const std::vector<BasisRef>& inputs) const;

    /// Multilinear extension to homogeneous-element inputs.
    GradedElement evaluate(const std::vector<GradedElement>& inputs) const;

    const std::map<std::vector<BasisRef>, Vec>& entries() const { return entries_; }
    bool is_zero() const;

    friend bool operator==(const GradedMultilinearMap& a, const GradedMultilinearMap& b);

  private:
    std::size_t arity_ = 0;
    int degree_ = 0;
    GradedSpace domain_, codomain_;
    std::map<std::vector<BasisRef>, Vec> entries_;
};

/// Graded-antisymmetric projection (1/k!) sum_sigma chi(sigma) (map o sigma).
GradedMultilinearMap antisymmetrize(const GradedMultilinearMap& map);

/// Whether map(sigma(tuple)) = chi(sigma) map(tuple) for all sigma and tuples.
bool is_chi_antisymmetric(const GradedMultilinearMap& map);

/// All basis tuples of the given length, ordered lexicographically
/// (degree-major, then index).
std::vector<std::vector<BasisRef>> basis_tuples(const GradedSpace& space, std::size_t length);

} // namespace deforma
