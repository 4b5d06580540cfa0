#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "deforma/graded.hpp"

namespace deforma {

/// Witness of a failed coherence axiom: the axiom index n and the basis tuple
/// on which the defining sum is nonzero (lexicographically least).
struct AxiomFailure {
    std::size_t n;
    std::vector<BasisRef> tuple;
};

struct CheckReport {
    bool ok;
    std::optional<AxiomFailure> failure;
    explicit operator bool() const { return ok; }
};

/// Graded space with chi-antisymmetric operations l_k of degree 2-k. Absent
/// arities are zero. Loading projects each op onto its antisymmetric part and
/// records whether that changed anything.
struct LInfinityStructure {
    GradedSpace space;
    std::map<std::size_t, GradedMultilinearMap> ops; // k -> l_k
    bool projection_changed_input = false;

    const GradedMultilinearMap* op(std::size_t k) const {
        auto it = ops.find(k);
        return it == ops.end() ? nullptr : &it->second;
    }

    /// Validates degrees (l_k must have degree 2-k), projects onto the
    /// chi-antisymmetric part.
    static LInfinityStructure load(GradedSpace space,
                                   std::map<std::size_t, GradedMultilinearMap> ops);

    /// dg-Lie packaging: l_1 = differential, l_2 = bracket, l_k = 0 for k >= 3.
    static LInfinityStructure dg_lie(GradedSpace space, GradedMultilinearMap d,
                                     GradedMultilinearMap bracket);
};

/// Graded space with operations mu_k of degree k-2 (no symmetry constraint).
struct AInfinityStructure {
    GradedSpace space;
    std::map<std::size_t, GradedMultilinearMap> ops; // k -> mu_k

    const GradedMultilinearMap* op(std::size_t k) const {
        auto it = ops.find(k);
        return it == ops.end() ? nullptr : &it->second;
    }

    static AInfinityStructure load(GradedSpace space,
                                   std::map<std::size_t, GradedMultilinearMap> ops);
};

/// Evaluates, for 1 <= n <= max_n and every homogeneous basis tuple,
///   sum_{i+j=n+1} (-1)^i sum_{sigma in unshuffles(i,n)} chi(sigma)
///       l_j(l_i(v_sigma(1..i)), v_sigma(i+1..n)) = 0.
/// Requires chi-antisymmetric ops (NotAntisymmetric).
CheckReport check_l_infinity(const LInfinityStructure& L, std::size_t max_n);

/// Evaluates, for 1 <= n <= max_n and every homogeneous basis tuple,
///   sum_{lambda, k} (-1)^{k + lambda + k lambda + k(|v_1|+...+|v_lambda|)}
///       mu_{n-k+1}(v_1..v_lambda, mu_k(v_{lambda+1}..v_{lambda+k}), ...) = 0.
CheckReport check_a_infinity(const AInfinityStructure& A, std::size_t max_n);

/// Blockwise sum: each l_k acts on matching-side arguments only.
LInfinityStructure direct_sum(const LInfinityStructure& L1, const LInfinityStructure& L2);

/// Component maps f_k of degree 1-k, chi-antisymmetric, from source to target.
struct WeakMorphism {
    LInfinityStructure source;
    LInfinityStructure target;
    std::map<std::size_t, GradedMultilinearMap> components; // k -> f_k

    const GradedMultilinearMap* component(std::size_t k) const {
        auto it = components.find(k);
        return it == components.end() ? nullptr : &it->second;
    }

    static WeakMorphism strict(const LInfinityStructure& source,
                               const LInfinityStructure& target,
                               GradedMultilinearMap f1);
    static WeakMorphism identity(const LInfinityStructure& L);
};

struct MorphismCheckReport {
    bool m1_ok = false;
    bool m2_ok = false;
    std::optional<AxiomFailure> failure;
    bool ok() const { return m1_ok && m2_ok; }
};

/// Verifies (M1): f_1 l'_1 = l''_1 f_1 and (M2): the defect of bracket
/// preservation equals the f_2 homotopy boundary,
///   f_1(l'_2(u,v)) - l''_2(f_1 u, f_1 v)
///     = l''_1(f_2(u,v)) + f_2(l'_1 u, v) + (-1)^{|u|} f_2(u, l'_1 v),
/// on all basis pairs. Higher axioms are out of scope.
MorphismCheckReport check_weak_morphism_linear(const WeakMorphism& f);

/// Degree-1 terms s_1..s_n of a curve s = s_1 t + ... + s_n t^n.
struct MCElementSeries {
    std::vector<GradedElement> terms; // each homogeneous of degree 1

    std::size_t order() const { return terms.size(); }
    static MCElementSeries zero(const GradedSpace& space, std::size_t order);
};

/// The t^k coefficient of sum_m (1/m!) l_m(s,...,s): a degree-2 element.
/// Throws BadOrder for k < 1 or k > order.
GradedElement generalized_mc_residual(const LInfinityStructure& L,
                                      const MCElementSeries& s, std::size_t k);

struct MCPushResult {
    MCElementSeries series;
    bool target_ok = false;                  // target residuals vanish through the order
    std::optional<std::size_t> first_bad_order;
};

/// Pushforward sum_m (1/m!) f_m(s,...,s) per t-order. Requires the source
/// residuals to vanish through the series order (SourceNotMC); the target
/// residuals are recomputed, not assumed.
MCPushResult mc_pushforward(const WeakMorphism& f, const MCElementSeries& s);

} // namespace deforma
