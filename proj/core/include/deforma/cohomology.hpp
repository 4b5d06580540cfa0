#pragma once

#include <cstddef>
#include <vector>

#include "deforma/algebra.hpp"
#include "deforma/cochain.hpp"
#include "deforma/matrix.hpp"

namespace deforma {

/// The coboundary C^n -> C^{n+1} as a matrix in the elementary-cochain bases
/// (flat coefficient order). Shape: d^{n+2} x d^{n+1}.
RatMatrix differential_matrix(const AlgebraStructure& a, std::size_t n);

struct CohomologyReport {
    std::size_t degree = 0;
    std::size_t dim_cochains = 0;
    std::size_t dim_cocycles = 0;
    std::size_t dim_coboundaries = 0;
    std::size_t betti = 0;
    std::vector<Cochain> representatives;

    /// Quotient coordinates of a cocycle in H^n; length = betti.
    /// Throws NotACocycle when the input is not a cocycle.
    Vec class_coordinates(const Cochain& cocycle) const;

    // internal quotient data
    SubspaceBasis cocycles;
    QuotientBasis quotient;
    AlgebraStructure algebra;
};

/// Cocycles, coboundaries, betti number and canonical representatives of
/// H^n(A, A). Requires an associative input (throws NotAssociative).
CohomologyReport cohomology(const AlgebraStructure& a, std::size_t n);

} // namespace deforma
