#include "deforma/linfinity.hpp"

#include <functional>

#include "deforma/errors.hpp"

namespace deforma {

LInfinityStructure LInfinityStructure::load(GradedSpace space,
                                            std::map<std::size_t, GradedMultilinearMap> ops) {
    LInfinityStructure L;
    L.space = std::move(space);
    for (auto& [k, op] : ops) {
        if (k < 1) throw BadRange("LInfinityStructure: arity must be >= 1");
        if (op.arity() != k || op.degree() != 2 - static_cast<int>(k))
            throw DegreeMismatch("LInfinityStructure: l_k must have arity k and degree 2-k");
        GradedMultilinearMap projected = antisymmetrize(op);
        if (!(projected == op)) L.projection_changed_input = true;
        if (!projected.is_zero()) L.ops.emplace(k, std::move(projected));
    }
    return L;
}

LInfinityStructure LInfinityStructure::dg_lie(GradedSpace space, GradedMultilinearMap d,
                                              GradedMultilinearMap bracket) {
    std::map<std::size_t, GradedMultilinearMap> ops;
    ops.emplace(1, std::move(d));
    ops.emplace(2, std::move(bracket));
    return load(std::move(space), std::move(ops));
}

AInfinityStructure AInfinityStructure::load(GradedSpace space,
                                            std::map<std::size_t, GradedMultilinearMap> ops) {
    AInfinityStructure A;
    A.space = std::move(space);
    for (auto& [k, op] : ops) {
        if (k < 1) throw BadRange("AInfinityStructure: arity must be >= 1");
        if (op.arity() != k || op.degree() != static_cast<int>(k) - 2)
            throw DegreeMismatch("AInfinityStructure: mu_k must have arity k and degree k-2");
        if (!op.is_zero()) A.ops.emplace(k, op);
    }
    return A;
}

CheckReport check_l_infinity(const LInfinityStructure& L, std::size_t max_n) {
    for (auto& [k, op] : L.ops)
        if (!is_chi_antisymmetric(op))
            throw NotAntisymmetric("check_l_infinity: an operation is not chi-antisymmetric");
    for (std::size_t n = 1; n <= max_n; ++n) {
        for (const auto& tuple : basis_tuples(L.space, n)) {
            std::vector<int> degrees(n);
            for (std::size_t p = 0; p < n; ++p) degrees[p] = tuple[p].degree;
            GradedElement acc; // accumulated across (i, sigma); degree is forced
            for (std::size_t i = 1; i <= n; ++i) {
                std::size_t j = n + 1 - i;
                const GradedMultilinearMap* li = L.op(i);
                const GradedMultilinearMap* lj = L.op(j);
                if (!li || !lj) continue;
                int isign = (i % 2 == 0) ? 1 : -1;
                for (const auto& sigma : unshuffles(i, n)) {
                    int chi = antisym_koszul_sign(sigma, degrees);
                    std::vector<BasisRef> block(i);
                    for (std::size_t p = 0; p < i; ++p) block[p] = tuple[sigma.images[p]];
                    GradedElement inner = li->on_basis(block);
                    if (inner.is_zero()) continue;
                    std::vector<GradedElement> outer;
                    outer.reserve(j);
                    outer.push_back(inner);
                    for (std::size_t p = i; p < n; ++p)
                        outer.push_back(GradedElement::basis(L.space, tuple[sigma.images[p]]));
                    GradedElement val = lj->evaluate(outer);
                    acc.add_scaled(Rational(isign * chi), val);
                }
            }
            if (!acc.is_zero()) return {false, AxiomFailure{n, tuple}};
        }
    }
    return {true, std::nullopt};
}

CheckReport check_a_infinity(const AInfinityStructure& A, std::size_t max_n) {
    for (std::size_t n = 1; n <= max_n; ++n) {
        for (const auto& tuple : basis_tuples(A.space, n)) {
            GradedElement acc;
            for (std::size_t lambda = 0; lambda + 1 <= n; ++lambda) {
                int prefix_deg = 0;
                for (std::size_t p = 0; p < lambda; ++p) prefix_deg += tuple[p].degree;
                for (std::size_t k = 1; k + lambda <= n; ++k) {
                    const GradedMultilinearMap* inner_op = A.op(k);
                    const GradedMultilinearMap* outer_op = A.op(n - k + 1);
                    if (!inner_op || !outer_op) continue;
                    long e = static_cast<long>(k) + static_cast<long>(lambda) +
                             static_cast<long>(k * lambda) +
                             static_cast<long>(k) * prefix_deg;
                    int sign = (e % 2 == 0) ? 1 : -1;
                    std::vector<BasisRef> inner_tuple(tuple.begin() + lambda,
                                                      tuple.begin() + lambda + k);
                    GradedElement inner = inner_op->on_basis(inner_tuple);
                    if (inner.is_zero()) continue;
                    std::vector<GradedElement> outer;
                    outer.reserve(n - k + 1);
                    for (std::size_t p = 0; p < lambda; ++p)
                        outer.push_back(GradedElement::basis(A.space, tuple[p]));
                    outer.push_back(inner);
                    for (std::size_t p = lambda + k; p < n; ++p)
                        outer.push_back(GradedElement::basis(A.space, tuple[p]));
                    GradedElement val = outer_op->evaluate(outer);
                    acc.add_scaled(Rational(sign), val);
                }
            }
            if (!acc.is_zero()) return {false, AxiomFailure{n, tuple}};
        }
    }
    return {true, std::nullopt};
}

namespace {

/// Offsets of the two blocks inside the direct sum per degree: block-1 indices
/// come first, block-2 indices are shifted by dim_1(degree).
GradedSpace sum_space(const GradedSpace& a, const GradedSpace& b) {
    std::map<int, std::size_t> dims;
    for (auto& [deg, n] : a.components()) dims[deg] += n;
    for (auto& [deg, n] : b.components()) dims[deg] += n;
    return GradedSpace(dims);
}

} // namespace

LInfinityStructure direct_sum(const LInfinityStructure& L1, const LInfinityStructure& L2) {
    GradedSpace space = sum_space(L1.space, L2.space);
    std::map<std::size_t, GradedMultilinearMap> ops;
    auto embed = [&](const LInfinityStructure& L, bool second) {
        for (auto& [k, op] : L.ops) {
            auto [it, inserted] = ops.try_emplace(
                k, GradedMultilinearMap(k, 2 - static_cast<int>(k), space, space));
            GradedMultilinearMap& target = it->second;
            for (auto& [tuple, value] : op.entries()) {
                std::vector<BasisRef> shifted = tuple;
                if (second)
                    for (auto& r : shifted) r.index += L1.space.dim(r.degree);
                int out_deg = op.output_degree(tuple);
                Vec out(space.dim(out_deg));
                std::size_t offset = second ? L1.space.dim(out_deg) : 0;
                for (std::size_t p = 0; p < value.size(); ++p) out[offset + p] = value[p];
                GradedElement cur = target.on_basis(shifted);
                add_scaled(cur.coords, Rational(1), out);
                target.set(shifted, cur.coords);
            }
        }
    };
    embed(L1, false);
    embed(L2, true);
    LInfinityStructure out;
    out.space = std::move(space);
    out.ops = std::move(ops);
    return out;
}

WeakMorphism WeakMorphism::strict(const LInfinityStructure& source,
                                  const LInfinityStructure& target,
                                  GradedMultilinearMap f1) {
    if (f1.arity() != 1 || f1.degree() != 0)
        throw DegreeMismatch("WeakMorphism::strict: f_1 must be 1-ary of degree 0");
    WeakMorphism f;
    f.source = source;
    f.target = target;
    f.components.emplace(1, std::move(f1));
    return f;
}

WeakMorphism WeakMorphism::identity(const LInfinityStructure& L) {
    GradedMultilinearMap f1(1, 0, L.space, L.space);
    for (auto& [deg, n] : L.space.components())
        for (std::size_t i = 0; i < n; ++i) {
            Vec v(n);
            v[i] = Rational(1);
            f1.set({BasisRef{deg, i}}, v);
        }
    return strict(L, L, std::move(f1));
}

MorphismCheckReport check_weak_morphism_linear(const WeakMorphism& f) {
    const GradedMultilinearMap* f1 = f.component(1);
    const GradedMultilinearMap* f2 = f.component(2);
    if (!f1) throw DegreeMismatch("check_weak_morphism_linear: f_1 is required");
    for (auto& [k, comp] : f.components) {
        if (comp.arity() != k || comp.degree() != 1 - static_cast<int>(k))
            throw DegreeMismatch("check_weak_morphism_linear: f_k must have degree 1-k");
        if (!is_chi_antisymmetric(comp))
            throw NotAntisymmetric("check_weak_morphism_linear: f_k not chi-antisymmetric");
    }

    MorphismCheckReport rep;
    const GradedMultilinearMap* l1s = f.source.op(1);
    const GradedMultilinearMap* l1t = f.target.op(1);
    const GradedMultilinearMap* l2s = f.source.op(2);
    const GradedMultilinearMap* l2t = f.target.op(2);

    auto eval1 = [&](const GradedMultilinearMap* op, const GradedElement& v) {
        if (!op || v.is_zero())
            return GradedElement::zero(f.target.space, v.degree + (op ? op->degree() : 1));
        return op->evaluate({v});
    };

    rep.m1_ok = true;
    for (const auto& tuple : basis_tuples(f.source.space, 1)) {
        GradedElement v = GradedElement::basis(f.source.space, tuple[0]);
        GradedElement lhs = f1->evaluate({eval1(l1s, v)});
        GradedElement rhs = eval1(l1t, f1->evaluate({v}));
        if (!(lhs == rhs)) {
            rep.m1_ok = false;
            rep.failure = AxiomFailure{1, tuple};
            break;
        }
    }

    rep.m2_ok = true;
    for (const auto& tuple : basis_tuples(f.source.space, 2)) {
        GradedElement u = GradedElement::basis(f.source.space, tuple[0]);
        GradedElement v = GradedElement::basis(f.source.space, tuple[1]);
        GradedElement lhs; // f1(l'2(u,v)) - l''2(f1 u, f1 v)
        if (l2s) lhs.add_scaled(Rational(1), f1->evaluate({l2s->evaluate({u, v})}));
        if (l2t)
            lhs.add_scaled(Rational(-1),
                           l2t->evaluate({f1->evaluate({u}), f1->evaluate({v})}));
        GradedElement rhs; // l''1 f2(u,v) + f2(l'1 u, v) + (-1)^{|u|} f2(u, l'1 v)
        if (f2) {
            rhs.add_scaled(Rational(1), eval1(l1t, f2->evaluate({u, v})));
            if (l1s) {
                rhs.add_scaled(Rational(1), f2->evaluate({l1s->evaluate({u}), v}));
                int su = tuple[0].degree % 2 == 0 ? 1 : -1;
                rhs.add_scaled(Rational(su), f2->evaluate({u, l1s->evaluate({v})}));
            }
        }
        GradedElement diff = lhs;
        diff.add_scaled(Rational(-1), rhs);
        if (!diff.is_zero()) {
            rep.m2_ok = false;
            if (!rep.failure) rep.failure = AxiomFailure{2, tuple};
            break;
        }
    }
    return rep;
}

MCElementSeries MCElementSeries::zero(const GradedSpace& space, std::size_t order) {
    MCElementSeries s;
    s.terms.assign(order, GradedElement::zero(space, 1));
    return s;
}

namespace {

/// sum over m >= 1 of (1/m!) sum_{j_1+...+j_m = k, j_p >= 1} op_m(s_{j_1},...,s_{j_m}).
GradedElement series_evaluate(const std::function<const GradedMultilinearMap*(std::size_t)>& op,
                              const MCElementSeries& s, std::size_t k,
                              const GradedSpace& out_space, int out_degree) {
    GradedElement acc = GradedElement::zero(out_space, out_degree);
    std::vector<std::size_t> composition;
    Rational factorial(1);
    for (std::size_t m = 1; m <= k; ++m) {
        factorial *= Rational((long)m);
        const GradedMultilinearMap* om = op(m);
        if (!om) continue;
        Rational inv = Rational(1) / factorial;
        // ordered compositions of k into m positive parts
        composition.assign(m, 1);
        composition[m - 1] = k - (m - 1);
        std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos,
                                                                std::size_t remaining) {
            if (pos + 1 == m) {
                composition[pos] = remaining;
                std::vector<GradedElement> args;
                args.reserve(m);
                for (auto j : composition) args.push_back(s.terms[j - 1]);
                GradedElement val = om->evaluate(args);
                acc.add_scaled(inv, val);
                return;
            }
            for (std::size_t j = 1; j + (m - pos - 1) <= remaining; ++j) {
                composition[pos] = j;
                rec(pos + 1, remaining - j);
            }
        };
        rec(0, k);
    }
    return acc;
}

} // namespace

GradedElement generalized_mc_residual(const LInfinityStructure& L,
                                      const MCElementSeries& s, std::size_t k) {
    if (k < 1 || k > s.order())
        throw BadOrder("generalized_mc_residual: order outside 1..n");
    for (const auto& t : s.terms)
        if (!t.is_zero() && t.degree != 1)
            throw DegreeMismatch("generalized_mc_residual: series terms must have degree 1");
    return series_evaluate([&L](std::size_t m) { return L.op(m); }, s, k, L.space, 2);
}

MCPushResult mc_pushforward(const WeakMorphism& f, const MCElementSeries& s) {
    for (std::size_t k = 1; k <= s.order(); ++k)
        if (!generalized_mc_residual(f.source, s, k).is_zero())
            throw SourceNotMC("mc_pushforward: source residual nonzero at order " +
                              std::to_string(k));
    MCPushResult out;
    out.series.terms.reserve(s.order());
    for (std::size_t k = 1; k <= s.order(); ++k) {
        GradedElement term = series_evaluate(
            [&f](std::size_t m) { return f.component(m); }, s, k, f.target.space, 1);
        out.series.terms.push_back(std::move(term));
    }
    out.target_ok = true;
    for (std::size_t k = 1; k <= s.order(); ++k)
        if (!generalized_mc_residual(f.target, out.series, k).is_zero()) {
            out.target_ok = false;
            out.first_bad_order = k;
            break;
        }
    return out;
}

} // namespace deforma
