#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "deforma/algebra.hpp"
#include "deforma/cochain.hpp"
#include "deforma/cohomology.hpp"

namespace deforma {

/// Multiplication mu_0 + mu_1 t + ... + mu_n t^n modulo t^{n+1}. Constructors
/// build unvalidated candidates; validate_deformation checks the order-k
/// associativity equations.
struct TruncatedDeformation {
    AlgebraStructure base;
    std::vector<Cochain> terms; // mu_1 .. mu_n, each arity 2

    std::size_t order() const { return terms.size(); }
    /// mu_k with mu_0 = the base multiplication.
    Cochain term(std::size_t k) const {
        return k == 0 ? Cochain::multiplication(base) : terms.at(k - 1);
    }

    static TruncatedDeformation trivial(const AlgebraStructure& base, std::size_t order);
    friend bool operator==(const TruncatedDeformation& a, const TruncatedDeformation& b) {
        return a.base == b.base && a.terms == b.terms;
    }
};

struct DeformationFailure {
    std::size_t order_k;                // first k where the equation fails
    std::vector<std::size_t> triple;    // basis triple witnessing it
};

struct ValidationReport {
    bool valid;
    std::optional<DeformationFailure> failure;
    explicit operator bool() const { return valid; }
};

/// Checks, for 1 <= k <= order, that
///   sum_{i+j=k} mu_i(mu_j(a,b),c) = sum_{i+j=k} mu_i(a,mu_j(b,c))
/// on all basis triples. Throws NotAssociativeBase when mu_0 fails.
ValidationReport validate_deformation(const TruncatedDeformation& d);

/// The order-n obstruction: an arity-3 cocycle whose class in H^3 vanishes
/// exactly when the deformation extends one order further.
struct ObstructionClass {
    Cochain cochain;                       // sum_{i+j=n+1, i,j>0} mu_i(a, mu_j(b,c)) - mu_i(mu_j(a,b), c)
    bool is_cocycle = false;
    Vec class_coords;                      // coordinates in H^3
    bool vanishes_in_cohomology = false;
    std::optional<Cochain> extension_term; // canonical mu_{n+1} when the class vanishes
};

/// Requires a validated deformation (throws InvalidDeformation).
ObstructionClass obstruction(const TruncatedDeformation& d);

/// The order-(n+1) extension with the canonical new term, or absent when the
/// obstruction class is nonzero.
std::optional<TruncatedDeformation> extend(const TruncatedDeformation& d);

/// H^2 coordinates of a 2-cocycle mu_1; two infinitesimal deformations are
/// equivalent exactly when their coordinates agree. Throws NotACocycle.
Vec classify_infinitesimal(const AlgebraStructure& a, const Cochain& mu1);
Vec classify_infinitesimal(const CohomologyReport& h2, const Cochain& mu1);

struct RigidityReport {
    std::size_t betti2 = 0;
    std::size_t betti3 = 0;
    bool infinitesimally_rigid = false; // betti2 == 0
    bool unobstructed = false;          // betti3 == 0: every obstruction vanishes
    std::optional<Cochain> nontrivial_cocycle; // witness when betti2 > 0
};

RigidityReport rigidity_report(const AlgebraStructure& a);

/// The arity-3 cochain delta(mu_k) + 1/2 sum_{i+j=k, i,j>0} [mu_i, mu_j];
/// zero exactly when the order-k equation holds. Throws BadOrder for
/// k < 1 or k > order.
Cochain maurer_cartan_residual(const TruncatedDeformation& d, std::size_t k);

struct PoissonWitness {
    std::vector<std::size_t> tuple;
};

struct PoissonCheckReport {
    Cochain bracket; // (a,b) -> mu_1(a,b) - mu_1(b,a)
    bool antisymmetry_ok = false;
    bool jacobi_ok = false;
    bool leibniz_ok = false;
    std::optional<PoissonWitness> antisymmetry_witness;
    std::optional<PoissonWitness> jacobi_witness;
    std::optional<PoissonWitness> leibniz_witness;
    bool all_ok() const { return antisymmetry_ok && jacobi_ok && leibniz_ok; }
};

/// Builds the antisymmetrized first-order bracket and checks antisymmetry,
/// Jacobi and the Leibniz rule {u, v w} = {u,v} w + v {u,w} exhaustively on
/// basis tuples. Requires a commutative base (BaseNotCommutative) and
/// order >= 2 (OrderTooLow).
PoissonCheckReport poisson_limit(const TruncatedDeformation& d);

} // namespace deforma
