#include "deforma/cohomology.hpp"

#include "deforma/errors.hpp"

namespace deforma {

RatMatrix differential_matrix(const AlgebraStructure& a, std::size_t n) {
    const std::size_t d = a.dim();
    std::size_t dom = 1, codom = 1;
    for (std::size_t k = 0; k < n + 1; ++k) dom *= d;
    for (std::size_t k = 0; k < n + 2; ++k) codom *= d;
    RatMatrix m(codom, dom);
    for (std::size_t col = 0; col < dom; ++col) {
        Vec unit(dom);
        unit[col] = Rational(1);
        Cochain basis_cochain = Cochain::from_flat(n, d, std::move(unit));
        Cochain image = hochschild_differential(a, basis_cochain);
        const Vec& flat = image.flat_coeffs();
        for (std::size_t row = 0; row < codom; ++row)
            if (!flat[row].is_zero()) m(row, col) = flat[row];
    }
    return m;
}

Vec CohomologyReport::class_coordinates(const Cochain& cocycle) const {
    if (cocycle.arity() != degree || cocycle.dim() != algebra.dim())
        throw DimMismatch("class_coordinates: cochain of the wrong shape");
    if (!hochschild_differential(algebra, cocycle).is_zero())
        throw NotACocycle("class_coordinates: input is not a cocycle");
    return quotient.coords_of(cocycle.flat_coeffs());
}

CohomologyReport cohomology(const AlgebraStructure& a, std::size_t n) {
    auto assoc = is_associative(a);
    if (!assoc.associative)
        throw NotAssociative("cohomology: the algebra is not associative");

    CohomologyReport report;
    report.degree = n;
    const std::size_t d = a.dim();
    std::size_t dim_cn = 1;
    for (std::size_t k = 0; k < n + 1; ++k) dim_cn *= d;
    report.dim_cochains = dim_cn;

    RatMatrix delta_n = differential_matrix(a, n);
    report.cocycles = kernel(delta_n);
    report.dim_cocycles = report.cocycles.dim();

    SubspaceBasis coboundaries;
    if (n == 0) {
        coboundaries.ambient_dim = dim_cn; // C^{-1} = 0
    } else {
        coboundaries = image(differential_matrix(a, n - 1));
    }
    report.dim_coboundaries = coboundaries.dim();

    report.quotient = quotient_basis(coboundaries, report.cocycles);
    report.betti = report.quotient.dim();
    for (const auto& rep : report.quotient.representatives)
        report.representatives.push_back(Cochain::from_flat(n, d, rep));

    report.algebra = a;
    return report;
}

} // namespace deforma
