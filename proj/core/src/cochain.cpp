#include "deforma/cochain.hpp"

#include "deforma/errors.hpp"

namespace deforma {

std::size_t Cochain::flat(const std::vector<std::size_t>& inputs) const {
    if (inputs.size() != arity_) throw ArityMismatch("Cochain: wrong tuple length");
    std::size_t idx = 0;
    for (auto i : inputs) {
        if (i >= dim_) throw BadRange("Cochain: basis index out of range");
        idx = idx * dim_ + i;
    }
    return idx;
}

void Cochain::set_on_basis(const std::vector<std::size_t>& inputs, const Vec& value) {
    if (value.size() != dim_) throw DimMismatch("Cochain: value length != dim");
    std::size_t base = flat(inputs) * dim_;
    for (std::size_t j = 0; j < dim_; ++j) coeffs_[base + j] = value[j];
}

Vec Cochain::on_basis_with_combo(std::vector<std::size_t> inputs, std::size_t pos,
                                 const Vec& combo) const {
    Vec out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (combo[i].is_zero()) continue;
        inputs[pos] = i;
        std::size_t base = flat(inputs) * dim_;
        for (std::size_t j = 0; j < dim_; ++j) {
            const Rational& c = coeffs_[base + j];
            if (!c.is_zero()) out[j] += combo[i] * c;
        }
    }
    return out;
}

Cochain Cochain::from_flat(std::size_t arity, std::size_t dim, Vec coeffs) {
    Cochain f(arity, dim);
    if (coeffs.size() != f.coeffs_.size())
        throw DimMismatch("Cochain::from_flat: wrong coefficient count");
    f.coeffs_ = std::move(coeffs);
    return f;
}

Cochain& Cochain::operator+=(const Cochain& o) {
    if (arity_ != o.arity_ || dim_ != o.dim_)
        throw DimMismatch("Cochain: shape mismatch in addition");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

Cochain& Cochain::operator-=(const Cochain& o) {
    if (arity_ != o.arity_ || dim_ != o.dim_)
        throw DimMismatch("Cochain: shape mismatch in subtraction");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

Cochain& Cochain::operator*=(const Rational& c) {
    for (auto& x : coeffs_) x *= c;
    return *this;
}

Cochain Cochain::identity_map(std::size_t dim) {
    Cochain f(1, dim);
    for (std::size_t i = 0; i < dim; ++i) f.coeff({i}, i) = Rational(1);
    return f;
}

Cochain Cochain::from_element(const Vec& element) {
    Cochain f(0, element.size());
    f.set_on_basis({}, element);
    return f;
}

Cochain Cochain::multiplication(const AlgebraStructure& a) {
    Cochain f(2, a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            f.set_on_basis({i, j}, a.mult_basis(i, j));
    return f;
}

std::vector<std::vector<std::size_t>> cochain_tuples(std::size_t arity, std::size_t dim) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> tuple(arity, 0);
    while (true) {
        out.push_back(tuple);
        std::size_t pos = arity;
        while (pos > 0) {
            if (++tuple[pos - 1] < dim) break;
            tuple[pos - 1] = 0;
            --pos;
        }
        if (pos == 0) break;
    }
    if (arity == 0) out.assign(1, {});
    return out;
}

Cochain hochschild_differential(const AlgebraStructure& a, const Cochain& f) {
    if (f.dim() != a.dim())
        throw DimMismatch("hochschild_differential: cochain dimension != algebra dimension");
    const std::size_t n = f.arity();
    const std::size_t d = a.dim();
    Cochain out(n + 1, d);
    int lead = ((n + 1) % 2 == 0) ? 1 : -1; // (-1)^{n+1}
    for (const auto& tuple : cochain_tuples(n + 1, d)) {
        Vec value(d);
        // (-1)^{n+1} a_0 f(a_1..a_n)
        {
            std::vector<std::size_t> rest(tuple.begin() + 1, tuple.end());
            Vec v = a.mult_basis_left(tuple[0], f.on_basis(rest));
            add_scaled(value, Rational(lead), v);
        }
        // f(a_0..a_{n-1}) a_n
        {
            std::vector<std::size_t> head(tuple.begin(), tuple.end() - 1);
            Vec v = a.mult_basis_right(f.on_basis(head), tuple[n]);
            add_scaled(value, Rational(1), v);
        }
        // sum_i (-1)^{i+n} f(a_0 .. a_i a_{i+1} .. a_n)
        for (std::size_t i = 0; i + 1 <= n && n >= 1; ++i) {
            std::vector<std::size_t> contracted;
            contracted.reserve(n);
            for (std::size_t k = 0; k < i; ++k) contracted.push_back(tuple[k]);
            contracted.push_back(0); // combo slot
            for (std::size_t k = i + 2; k <= n; ++k) contracted.push_back(tuple[k]);
            Vec prod = a.mult_basis(tuple[i], tuple[i + 1]);
            Vec v = f.on_basis_with_combo(contracted, i, prod);
            int sign = ((i + n) % 2 == 0) ? 1 : -1;
            add_scaled(value, Rational(sign), v);
        }
        out.set_on_basis(tuple, value);
    }
    return out;
}

Cochain circ_i(const Cochain& f, const Cochain& g, std::size_t i) {
    if (f.dim() != g.dim()) throw DimMismatch("circ_i: base dimensions differ");
    if (f.arity() < 1 || i < 1 || i > f.arity())
        throw BadPosition("circ_i: insertion position out of range");
    const std::size_t d = f.dim();
    const std::size_t res_arity = f.arity() + g.arity() - 1;
    Cochain out(res_arity, d);
    for (const auto& tuple : cochain_tuples(res_arity, d)) {
        // inputs i-1 .. i-2+arity(g) feed g; the rest feed f directly
        std::vector<std::size_t> gin(tuple.begin() + (i - 1),
                                     tuple.begin() + (i - 1) + g.arity());
        Vec gval = g.on_basis(gin);
        std::vector<std::size_t> fin;
        fin.reserve(f.arity());
        for (std::size_t k = 0; k < i - 1; ++k) fin.push_back(tuple[k]);
        fin.push_back(0); // combo slot
        for (std::size_t k = i - 1 + g.arity(); k < res_arity; ++k) fin.push_back(tuple[k]);
        out.set_on_basis(tuple, f.on_basis_with_combo(fin, i - 1, gval));
    }
    return out;
}

Cochain circ(const Cochain& f, const Cochain& g) {
    if (f.dim() != g.dim()) throw DimMismatch("circ: base dimensions differ");
    const std::size_t d = f.dim();
    if (f.arity() == 0) {
        // no insertion slots; the sum is empty
        if (g.arity() == 0) throw BadPosition("circ: both factors have arity 0");
        return Cochain(g.arity() - 1, d);
    }
    int n = static_cast<int>(g.arity()) - 1;
    Cochain acc(f.arity() + g.arity() - 1, d);
    for (std::size_t i = 1; i <= f.arity(); ++i) {
        int sign = (n * static_cast<int>(i + 1)) % 2 == 0 ? 1 : -1;
        acc += Rational(sign) * circ_i(f, g, i);
    }
    return acc;
}

Cochain gerstenhaber_bracket(const Cochain& f, const Cochain& g) {
    if (f.dim() != g.dim())
        throw DimMismatch("gerstenhaber_bracket: base dimensions differ");
    if (f.arity() + g.arity() == 0)
        throw BadPosition("gerstenhaber_bracket: undefined on two arity-0 cochains");
    int m = static_cast<int>(f.arity()) - 1;
    int n = static_cast<int>(g.arity()) - 1;
    int sign = (m * n) % 2 == 0 ? 1 : -1;
    return circ(f, g) - Rational(sign) * circ(g, f);
}

bool bracket_square_test(const Cochain& kappa) {
    if (kappa.arity() != 2) throw ArityMismatch("bracket_square_test: arity 2 required");
    return gerstenhaber_bracket(kappa, kappa).is_zero();
}

AlgebraStructure as_algebra(const Cochain& kappa) {
    if (kappa.arity() != 2) throw ArityMismatch("as_algebra: arity 2 required");
    AlgebraStructure a(kappa.dim());
    for (std::size_t i = 0; i < kappa.dim(); ++i)
        for (std::size_t j = 0; j < kappa.dim(); ++j)
            for (std::size_t l = 0; l < kappa.dim(); ++l)
                a.gamma(i, j, l) = kappa.coeff({i, j}, l);
    return a;
}

} // namespace deforma
