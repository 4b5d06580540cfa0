#include "deforma/deformation.hpp"

#include "deforma/errors.hpp"
#include "deforma/matrix.hpp"

namespace deforma {

TruncatedDeformation TruncatedDeformation::trivial(const AlgebraStructure& base,
                                                   std::size_t order) {
    TruncatedDeformation d;
    d.base = base;
    d.terms.assign(order, Cochain(2, base.dim()));
    return d;
}

namespace {

/// sum_{i+j=k} mu_i(mu_j(a,b),c) - mu_i(a,mu_j(b,c)) on one basis triple,
/// with i, j >= min_ij.
Vec dk_defect(const TruncatedDeformation& d, std::size_t k, std::size_t min_ij,
              const std::vector<std::size_t>& t) {
    const std::size_t dim = d.base.dim();
    Vec acc(dim);
    for (std::size_t i = min_ij; i + min_ij <= k; ++i) {
        std::size_t j = k - i;
        const Cochain mi = d.term(i);
        const Cochain mj = d.term(j);
        Vec inner_left = mj.on_basis({t[0], t[1]});
        Vec left = mi.on_basis_with_combo({0, t[2]}, 0, inner_left);
        Vec inner_right = mj.on_basis({t[1], t[2]});
        Vec right = mi.on_basis_with_combo({t[0], 0}, 1, inner_right);
        add_scaled(acc, Rational(1), left);
        add_scaled(acc, Rational(-1), right);
    }
    return acc;
}

} // namespace

ValidationReport validate_deformation(const TruncatedDeformation& d) {
    if (!is_associative(d.base))
        throw NotAssociativeBase("validate_deformation: base multiplication not associative");
    for (const auto& mu : d.terms)
        if (mu.arity() != 2 || mu.dim() != d.base.dim())
            throw DimMismatch("validate_deformation: terms must be arity-2 cochains over the base");
    const std::size_t dim = d.base.dim();
    auto triples = cochain_tuples(3, dim);
    for (std::size_t k = 1; k <= d.order(); ++k)
        for (const auto& t : triples)
            if (!is_zero(dk_defect(d, k, 0, t)))
                return {false, DeformationFailure{k, t}};
    return {true, std::nullopt};
}

ObstructionClass obstruction(const TruncatedDeformation& d) {
    if (!validate_deformation(d))
        throw InvalidDeformation("obstruction: deformation fails its order equations");
    const std::size_t dim = d.base.dim();
    const std::size_t n = d.order();

    ObstructionClass oc;
    oc.cochain = Cochain(3, dim);
    for (const auto& t : cochain_tuples(3, dim)) {
        // right-association minus left-association, i and j strictly positive
        Vec defect = dk_defect(d, n + 1, 1, t);
        for (auto& x : defect) x = -x;
        oc.cochain.set_on_basis(t, defect);
    }

    oc.is_cocycle = hochschild_differential(d.base, oc.cochain).is_zero();
    auto h3 = cohomology(d.base, 3);
    oc.class_coords = h3.class_coordinates(oc.cochain);
    oc.vanishes_in_cohomology = is_zero(oc.class_coords);
    if (oc.vanishes_in_cohomology) {
        auto x = solve_particular(differential_matrix(d.base, 2), oc.cochain.flat_coeffs());
        if (!x)
            throw Error("obstruction: class vanished but no primitive found");
        oc.extension_term = Cochain::from_flat(2, dim, std::move(*x));
    }
    return oc;
}

std::optional<TruncatedDeformation> extend(const TruncatedDeformation& d) {
    if (!validate_deformation(d))
        throw InvalidDeformation("extend: deformation fails its order equations");
    const std::size_t dim = d.base.dim();
    const std::size_t n = d.order();

    Cochain obstr(3, dim);
    for (const auto& t : cochain_tuples(3, dim)) {
        Vec defect = dk_defect(d, n + 1, 1, t);
        for (auto& x : defect) x = -x;
        obstr.set_on_basis(t, defect);
    }
    // delta(mu_{n+1}) = obstruction is solvable exactly when the class vanishes
    auto x = solve_particular(differential_matrix(d.base, 2), obstr.flat_coeffs());
    if (!x) return std::nullopt;
    TruncatedDeformation out = d;
    out.terms.push_back(Cochain::from_flat(2, dim, std::move(*x)));
    return out;
}

Vec classify_infinitesimal(const AlgebraStructure& a, const Cochain& mu1) {
    return classify_infinitesimal(cohomology(a, 2), mu1);
}

Vec classify_infinitesimal(const CohomologyReport& h2, const Cochain& mu1) {
    if (h2.degree != 2) throw BadOrder("classify_infinitesimal: need the degree-2 report");
    return h2.class_coordinates(mu1); // throws NotACocycle on non-cocycles
}

RigidityReport rigidity_report(const AlgebraStructure& a) {
    auto h2 = cohomology(a, 2);
    auto h3 = cohomology(a, 3);
    RigidityReport r;
    r.betti2 = h2.betti;
    r.betti3 = h3.betti;
    r.infinitesimally_rigid = h2.betti == 0;
    r.unobstructed = h3.betti == 0;
    if (h2.betti > 0) r.nontrivial_cocycle = h2.representatives.front();
    return r;
}

Cochain maurer_cartan_residual(const TruncatedDeformation& d, std::size_t k) {
    if (k < 1 || k > d.order())
        throw BadOrder("maurer_cartan_residual: order outside 1..n");
    Cochain residual = hochschild_differential(d.base, d.term(k));
    Rational half(1, 2);
    for (std::size_t i = 1; i + 1 <= k; ++i) {
        std::size_t j = k - i;
        residual += half * gerstenhaber_bracket(d.term(i), d.term(j));
    }
    return residual;
}

PoissonCheckReport poisson_limit(const TruncatedDeformation& d) {
    if (!d.base.is_commutative())
        throw BaseNotCommutative("poisson_limit: base multiplication must be commutative");
    if (d.order() < 2)
        throw OrderTooLow("poisson_limit: the Jacobi check needs the order-2 term");

    const std::size_t dim = d.base.dim();
    const Cochain& mu1 = d.terms[0];
    PoissonCheckReport rep;
    rep.bracket = Cochain(2, dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            Vec v = mu1.on_basis({i, j});
            add_scaled(v, Rational(-1), mu1.on_basis({j, i}));
            rep.bracket.set_on_basis({i, j}, v);
        }
    const Cochain& br = rep.bracket;

    rep.antisymmetry_ok = true;
    for (const auto& t : cochain_tuples(2, dim)) {
        Vec v = br.on_basis(t);
        add_scaled(v, Rational(1), br.on_basis({t[1], t[0]}));
        if (!is_zero(v)) {
            rep.antisymmetry_ok = false;
            rep.antisymmetry_witness = PoissonWitness{t};
            break;
        }
    }

    rep.jacobi_ok = true;
    for (const auto& t : cochain_tuples(3, dim)) {
        Vec acc(dim);
        // {a,{b,c}} + {b,{c,a}} + {c,{a,b}}
        add_scaled(acc, Rational(1),
                   br.on_basis_with_combo({t[0], 0}, 1, br.on_basis({t[1], t[2]})));
        add_scaled(acc, Rational(1),
                   br.on_basis_with_combo({t[1], 0}, 1, br.on_basis({t[2], t[0]})));
        add_scaled(acc, Rational(1),
                   br.on_basis_with_combo({t[2], 0}, 1, br.on_basis({t[0], t[1]})));
        if (!is_zero(acc)) {
            rep.jacobi_ok = false;
            rep.jacobi_witness = PoissonWitness{t};
            break;
        }
    }

    rep.leibniz_ok = true;
    for (const auto& t : cochain_tuples(3, dim)) {
        // {u, v w} - {u,v} w - v {u,w}
        Vec vw = d.base.mult_basis(t[1], t[2]);
        Vec lhs = br.on_basis_with_combo({t[0], 0}, 1, vw);
        Vec uv = br.on_basis({t[0], t[1]});
        add_scaled(lhs, Rational(-1), d.base.mult_basis_right(uv, t[2]));
        Vec uw = br.on_basis({t[0], t[2]});
        add_scaled(lhs, Rational(-1), d.base.mult_basis_left(t[1], uw));
        if (!is_zero(lhs)) {
            rep.leibniz_ok = false;
            rep.leibniz_witness = PoissonWitness{t};
            break;
        }
    }
    return rep;
}

} // namespace deforma
