#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "deforma/cochain.hpp"
#include "deforma/deformation.hpp"

namespace deforma {

/// Element x_1 t + ... + x_n t^n of the gauge group's Lie algebra: a series of
/// linear maps with no constant term.
struct GaugeElement {
    std::size_t dim = 0;
    std::vector<Cochain> terms; // x_1 .. x_n, each arity 1

    std::size_t order() const { return terms.size(); }
    static GaugeElement zero(std::size_t dim, std::size_t order);
    friend bool operator==(const GaugeElement& a, const GaugeElement& b) {
        return a.dim == b.dim && a.terms == b.terms;
    }
};

/// Formal automorphism id + phi_1 t + ... + phi_n t^n (constant term is the
/// identity, kept implicit).
struct FormalAutomorphism {
    std::size_t dim = 0;
    std::vector<Cochain> phis; // phi_1 .. phi_n, each arity 1

    std::size_t order() const { return phis.size(); }
    /// Coefficient of t^k, including phi_0 = id.
    Cochain coefficient(std::size_t k) const;
    static FormalAutomorphism identity(std::size_t dim, std::size_t order);

    /// Composition (this o other) truncated at min order.
    FormalAutomorphism compose(const FormalAutomorphism& other) const;
    /// Inverse modulo t^{order+1}.
    FormalAutomorphism inverse() const;

    friend bool operator==(const FormalAutomorphism& a, const FormalAutomorphism& b) {
        return a.dim == b.dim && a.phis == b.phis;
    }
};

/// exp of the series modulo t^{order+1}; truncation makes the sum finite.
FormalAutomorphism gauge_exp(const GaugeElement& x, std::size_t order);

/// log(id + a) = a - a^2/2 + a^3/3 - ... truncated; inverse to gauge_exp.
/// Throws BadConstantTerm if invoked through the series interface with a
/// non-identity constant term (the FormalAutomorphism type carries id).
GaugeElement gauge_log(const FormalAutomorphism& u);

/// The transformed deformation u o mu o (u^{-1} ox u^{-1}) truncated at the
/// input's order, where u = gauge_exp(x). Requires d to validate
/// (InvalidDeformation); the output validates again.
TruncatedDeformation gauge_apply(const GaugeElement& x, const TruncatedDeformation& d);
TruncatedDeformation apply_automorphism(const FormalAutomorphism& u,
                                        const TruncatedDeformation& d);

struct GaugeSearchResult {
    std::optional<GaugeElement> element;   // x with gauge_apply(x, d1) = d2
    std::optional<std::size_t> failed_order; // first inconsistent order otherwise
};

/// Order-by-order search for a gauge equivalence from d1 to d2. Requires both
/// to validate with the same base and order (OrderMismatch, BaseMismatch).
GaugeSearchResult gauge_equivalent(const TruncatedDeformation& d1,
                                   const TruncatedDeformation& d2);

} // namespace deforma
