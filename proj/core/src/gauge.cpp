#include "deforma/gauge.hpp"

#include "deforma/errors.hpp"
#include "deforma/matrix.hpp"

namespace deforma {

namespace {

/// f after g: (f o g)(e_i) = f(g(e_i)), both arity-1 over the same dim.
Cochain compose_linear(const Cochain& f, const Cochain& g) {
    const std::size_t d = f.dim();
    Cochain out(1, d);
    for (std::size_t i = 0; i < d; ++i)
        out.set_on_basis({i}, f.on_basis_with_combo({0}, 0, g.on_basis({i})));
    return out;
}

/// u o mu: (a,b) -> u(mu(a,b)).
Cochain post_compose(const Cochain& u, const Cochain& mu) {
    const std::size_t d = mu.dim();
    Cochain out(2, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            out.set_on_basis({i, j}, u.on_basis_with_combo({0}, 0, mu.on_basis({i, j})));
    return out;
}

/// mu o (v ox w): (a,b) -> mu(v(a), w(b)).
Cochain pre_compose(const Cochain& mu, const Cochain& v, const Cochain& w) {
    const std::size_t d = mu.dim();
    Cochain out(2, d);
    for (std::size_t i = 0; i < d; ++i) {
        Vec va = v.on_basis({i});
        for (std::size_t j = 0; j < d; ++j) {
            Vec wb = w.on_basis({j});
            Vec acc(d);
            for (std::size_t p = 0; p < d; ++p) {
                if (va[p].is_zero()) continue;
                Vec row = mu.on_basis_with_combo({p, 0}, 1, wb);
                add_scaled(acc, va[p], row);
            }
            out.set_on_basis({i, j}, acc);
        }
    }
    return out;
}

} // namespace

GaugeElement GaugeElement::zero(std::size_t dim, std::size_t order) {
    GaugeElement x;
    x.dim = dim;
    x.terms.assign(order, Cochain(1, dim));
    return x;
}

Cochain FormalAutomorphism::coefficient(std::size_t k) const {
    if (k == 0) return Cochain::identity_map(dim);
    return phis.at(k - 1);
}

FormalAutomorphism FormalAutomorphism::identity(std::size_t dim, std::size_t order) {
    FormalAutomorphism u;
    u.dim = dim;
    u.phis.assign(order, Cochain(1, dim));
    return u;
}

FormalAutomorphism FormalAutomorphism::compose(const FormalAutomorphism& other) const {
    if (dim != other.dim) throw DimMismatch("FormalAutomorphism: dimension mismatch");
    std::size_t n = std::min(order(), other.order());
    FormalAutomorphism out = identity(dim, n);
    for (std::size_t k = 1; k <= n; ++k) {
        Cochain acc(1, dim);
        for (std::size_t i = 0; i <= k; ++i)
            acc += compose_linear(coefficient(i), other.coefficient(k - i));
        out.phis[k - 1] = acc;
    }
    return out;
}

FormalAutomorphism FormalAutomorphism::inverse() const {
    // solve (id + a) o v = id order by order: v_k = - sum_{i=1}^{k} a_i o v_{k-i}
    FormalAutomorphism v = identity(dim, order());
    for (std::size_t k = 1; k <= order(); ++k) {
        Cochain acc(1, dim);
        for (std::size_t i = 1; i <= k; ++i)
            acc += compose_linear(coefficient(i), v.coefficient(k - i));
        v.phis[k - 1] = -acc;
    }
    return v;
}

FormalAutomorphism gauge_exp(const GaugeElement& x, std::size_t order) {
    FormalAutomorphism u = FormalAutomorphism::identity(x.dim, order);
    // powers of x have lowest order equal to the exponent, so the sum is finite
    std::vector<Cochain> power(order + 1, Cochain(1, x.dim)); // x^m coefficients
    auto x_coeff = [&x](std::size_t k) {
        return (k >= 1 && k <= x.order()) ? x.terms[k - 1] : Cochain(1, x.dim);
    };
    for (std::size_t k = 1; k <= order; ++k) power[k] = x_coeff(k);
    Rational factorial(1);
    std::vector<Cochain> current = power; // x^m, coefficient list
    for (std::size_t m = 1; m <= order; ++m) {
        factorial *= Rational((long)m);
        Rational inv = Rational(1) / factorial;
        for (std::size_t k = m; k <= order; ++k)
            u.phis[k - 1] += inv * current[k];
        if (m == order) break;
        // current <- current o x (coefficientwise convolution)
        std::vector<Cochain> next(order + 1, Cochain(1, x.dim));
        for (std::size_t k = m + 1; k <= order; ++k) {
            Cochain acc(1, x.dim);
            for (std::size_t i = m; i + 1 <= k; ++i)
                acc += compose_linear(current[i], x_coeff(k - i));
            next[k] = acc;
        }
        current = std::move(next);
    }
    return u;
}

GaugeElement gauge_log(const FormalAutomorphism& u) {
    const std::size_t n = u.order();
    GaugeElement x = GaugeElement::zero(u.dim, n);
    // a = u - id has no constant term; log(id + a) = sum (-1)^{m+1} a^m / m
    std::vector<Cochain> current(n + 1, Cochain(1, u.dim)); // a^m coefficients
    for (std::size_t k = 1; k <= n; ++k) current[k] = u.phis[k - 1];
    for (std::size_t m = 1; m <= n; ++m) {
        Rational c = Rational(m % 2 == 1 ? 1 : -1) / Rational((long)m);
        for (std::size_t k = m; k <= n; ++k)
            x.terms[k - 1] += c * current[k];
        if (m == n) break;
        std::vector<Cochain> next(n + 1, Cochain(1, u.dim));
        for (std::size_t k = m + 1; k <= n; ++k) {
            Cochain acc(1, u.dim);
            for (std::size_t i = m; i + 1 <= k; ++i)
                acc += compose_linear(current[i], u.phis[k - i - 1]);
            next[k] = acc;
        }
        current = std::move(next);
    }
    return x;
}

TruncatedDeformation apply_automorphism(const FormalAutomorphism& u,
                                        const TruncatedDeformation& d) {
    if (u.dim != d.base.dim()) throw DimMismatch("apply_automorphism: dimension mismatch");
    const std::size_t n = d.order();
    FormalAutomorphism uinv = u.inverse();
    auto mu = [&d](std::size_t q) { return d.term(q); };

    TruncatedDeformation out;
    out.base = d.base;
    out.terms.assign(n, Cochain(2, d.base.dim()));
    // coefficient of t^k in u o mu o (u^{-1} ox u^{-1})
    for (std::size_t k = 1; k <= n; ++k) {
        Cochain acc(2, d.base.dim());
        for (std::size_t p = 0; p <= k; ++p)
            for (std::size_t q = 0; q + p <= k; ++q)
                for (std::size_t r = 0; r + p + q <= k; ++r) {
                    std::size_t s = k - p - q - r;
                    Cochain inner = pre_compose(mu(q), uinv.coefficient(r),
                                                uinv.coefficient(s));
                    acc += post_compose(u.coefficient(p), inner);
                }
        out.terms[k - 1] = acc;
    }
    return out;
}

TruncatedDeformation gauge_apply(const GaugeElement& x, const TruncatedDeformation& d) {
    if (!validate_deformation(d))
        throw InvalidDeformation("gauge_apply: deformation fails its order equations");
    return apply_automorphism(gauge_exp(x, d.order()), d);
}

GaugeSearchResult gauge_equivalent(const TruncatedDeformation& d1,
                                   const TruncatedDeformation& d2) {
    if (d1.order() != d2.order())
        throw OrderMismatch("gauge_equivalent: orders differ");
    if (!(d1.base == d2.base))
        throw BaseMismatch("gauge_equivalent: bases differ");
    if (!validate_deformation(d1) || !validate_deformation(d2))
        throw InvalidDeformation("gauge_equivalent: inputs must validate");

    const std::size_t n = d1.order();
    const std::size_t dim = d1.base.dim();
    RatMatrix delta1 = differential_matrix(d1.base, 1);

    FormalAutomorphism total = FormalAutomorphism::identity(dim, n);
    TruncatedDeformation current = d1;
    // At order k the correction id + phi_k t^k shifts mu_k by -delta(phi_k)
    // and leaves lower orders unchanged.
    for (std::size_t k = 1; k <= n; ++k) {
        Cochain diff = current.terms[k - 1] - d2.terms[k - 1];
        auto phi_flat = solve_particular(delta1, diff.flat_coeffs());
        if (!phi_flat) return {std::nullopt, k};
        FormalAutomorphism step = FormalAutomorphism::identity(dim, n);
        step.phis[k - 1] = Cochain::from_flat(1, dim, std::move(*phi_flat));
        total = step.compose(total);
        current = apply_automorphism(step, current);
    }
    if (!(current == d2)) return {std::nullopt, n};
    return {gauge_log(total), std::nullopt};
}

} // namespace deforma
