#include "deforma/algebra.hpp"

namespace deforma {

Vec AlgebraStructure::mult(const Vec& a, const Vec& b) const {
    Vec out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (b[j].is_zero()) continue;
            Rational c = a[i] * b[j];
            for (std::size_t l = 0; l < dim_; ++l) {
                const Rational& g = gamma(i, j, l);
                if (!g.is_zero()) out[l] += c * g;
            }
        }
    }
    return out;
}

Vec AlgebraStructure::mult_basis(std::size_t i, std::size_t j) const {
    Vec out(dim_);
    for (std::size_t l = 0; l < dim_; ++l) out[l] = gamma(i, j, l);
    return out;
}

Vec AlgebraStructure::mult_basis_left(std::size_t i, const Vec& v) const {
    Vec out(dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
        if (v[j].is_zero()) continue;
        for (std::size_t l = 0; l < dim_; ++l) {
            const Rational& g = gamma(i, j, l);
            if (!g.is_zero()) out[l] += v[j] * g;
        }
    }
    return out;
}

Vec AlgebraStructure::mult_basis_right(const Vec& v, std::size_t i) const {
    Vec out(dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
        if (v[j].is_zero()) continue;
        for (std::size_t l = 0; l < dim_; ++l) {
            const Rational& g = gamma(j, i, l);
            if (!g.is_zero()) out[l] += v[j] * g;
        }
    }
    return out;
}

bool AlgebraStructure::is_commutative() const {
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j)
            for (std::size_t l = 0; l < dim_; ++l)
                if (gamma(i, j, l) != gamma(j, i, l)) return false;
    return true;
}

AssociativityReport is_associative(const AlgebraStructure& a) {
    const std::size_t d = a.dim();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k)
                for (std::size_t r = 0; r < d; ++r) {
                    Rational lhs, rhs;
                    for (std::size_t l = 0; l < d; ++l) {
                        lhs += a.gamma(i, l, r) * a.gamma(j, k, l);
                        rhs += a.gamma(i, j, l) * a.gamma(l, k, r);
                    }
                    if (lhs != rhs)
                        return {false, AssociativityWitness{i, j, k, r}};
                }
    return {true, std::nullopt};
}

} // namespace deforma
