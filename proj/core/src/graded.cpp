#include "deforma/graded.hpp"

#include <algorithm>

#include "deforma/errors.hpp"

namespace deforma {

GradedElement& GradedElement::add_scaled(const Rational& c, const GradedElement& other) {
    if (other.is_zero()) return *this;
    if (coords.empty()) {
        degree = other.degree;
        coords.assign(other.coords.size(), Rational(0));
    }
    if (degree != other.degree || coords.size() != other.coords.size())
        throw DegreeMismatch("GradedElement: adding elements of different degrees");
    deforma::add_scaled(coords, c, other.coords);
    return *this;
}

bool operator==(const GradedElement& a, const GradedElement& b) {
    if (a.is_zero() && b.is_zero()) return true;
    return a.degree == b.degree && a.coords == b.coords;
}

bool Permutation::is_valid() const {
    std::vector<bool> seen(images.size(), false);
    for (auto v : images) {
        if (v >= images.size() || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

int Permutation::parity_sign() const {
    int sign = 1;
    for (std::size_t i = 0; i < images.size(); ++i)
        for (std::size_t j = i + 1; j < images.size(); ++j)
            if (images[i] > images[j]) sign = -sign;
    return sign;
}

int koszul_sign(const Permutation& sigma, const std::vector<int>& degrees) {
    if (sigma.images.size() != degrees.size())
        throw LengthMismatch("koszul_sign: permutation and degree list differ in length");
    if (!sigma.is_valid()) throw BadRange("koszul_sign: not a permutation");
    // Bubble the permuted word [sigma(1)..sigma(n)] back to [1..n]; each swap of
    // adjacent letters p, q contributes (-1)^{|w_p||w_q|}.
    std::vector<std::size_t> word = sigma.images;
    int sign = 1;
    for (std::size_t pass = 0; pass + 1 < word.size(); ++pass)
        for (std::size_t i = 0; i + 1 < word.size(); ++i)
            if (word[i] > word[i + 1]) {
                if ((degrees[word[i]] % 2 != 0) && (degrees[word[i + 1]] % 2 != 0))
                    sign = -sign;
                std::swap(word[i], word[i + 1]);
            }
    return sign;
}

int antisym_koszul_sign(const Permutation& sigma, const std::vector<int>& degrees) {
    return sigma.parity_sign() * koszul_sign(sigma, degrees);
}

std::vector<Permutation> unshuffles(std::size_t i, std::size_t n) {
    if (i < 1 || i > n) throw BadRange("unshuffles: need 1 <= i <= n");
    std::vector<Permutation> out;
    std::vector<std::size_t> first(i);
    for (std::size_t k = 0; k < i; ++k) first[k] = k;
    while (true) {
        Permutation p;
        p.images.reserve(n);
        std::vector<bool> used(n, false);
        for (auto v : first) {
            p.images.push_back(v);
            used[v] = true;
        }
        for (std::size_t v = 0; v < n; ++v)
            if (!used[v]) p.images.push_back(v);
        out.push_back(std::move(p));
        // next combination in lexicographic order
        std::size_t k = i;
        while (k > 0 && first[k - 1] == n - i + k - 1) --k;
        if (k == 0) break;
        ++first[k - 1];
        for (std::size_t j = k; j < i; ++j) first[j] = first[j - 1] + 1;
    }
    return out;
}

int suspension_power_sign(std::size_t n) {
    return (n * (n - 1) / 2) % 2 == 0 ? 1 : -1;
}

GradedSpace suspend(const GradedSpace& space, SuspensionDirection dir) {
    std::map<int, std::size_t> dims;
    int shift = dir == SuspensionDirection::up ? 1 : -1;
    for (auto& [deg, n] : space.components()) dims[deg + shift] = n;
    return GradedSpace(dims);
}

void GradedMultilinearMap::set(const std::vector<BasisRef>& inputs, Vec value) {
    if (inputs.size() != arity_) throw ArityMismatch("set: wrong tuple length");
    int out_deg = output_degree(inputs);
    for (const auto& r : inputs)
        if (r.index >= domain_.dim(r.degree))
            throw DegreeMismatch("set: basis index outside the component");
    if (value.size() != codomain_.dim(out_deg))
        throw DegreeMismatch("set: value length differs from the forced component");
    if (deforma::is_zero(value))
        entries_.erase(inputs);
    else
        entries_[inputs] = std::move(value);
}

void GradedMultilinearMap::add_to(const std::vector<BasisRef>& inputs,
                                  const Rational& coeff, std::size_t out_index) {
    GradedElement cur = on_basis(inputs);
    cur.coords.at(out_index) += coeff;
    set(inputs, cur.coords);
}

GradedElement GradedMultilinearMap::on_basis(const std::vector<BasisRef>& inputs) const {
    if (inputs.size() != arity_) throw ArityMismatch("on_basis: wrong tuple length");
    int out_deg = output_degree(inputs);
    auto it = entries_.find(inputs);
    if (it == entries_.end()) return GradedElement{out_deg, Vec(codomain_.dim(out_deg))};
    return GradedElement{out_deg, it->second};
}

GradedElement GradedMultilinearMap::evaluate(const std::vector<GradedElement>& inputs) const {
    if (inputs.size() != arity_) throw ArityMismatch("evaluate: wrong input count");
    int out_deg = degree_;
    for (const auto& e : inputs) {
        if (e.coords.size() != domain_.dim(e.degree))
            throw DegreeMismatch("evaluate: input does not match a component");
        out_deg += e.degree;
    }
    GradedElement acc{out_deg, Vec(codomain_.dim(out_deg))};
    // expand multilinearly over the supports of the inputs
    std::vector<BasisRef> tuple(arity_);
    Rational one(1);
    std::function<void(std::size_t, const Rational&)> rec =
        [&](std::size_t pos, const Rational& coeff) {
            if (pos == arity_) {
                auto it = entries_.find(tuple);
                if (it != entries_.end())
                    deforma::add_scaled(acc.coords, coeff, it->second);
                return;
            }
            const GradedElement& in = inputs[pos];
            for (std::size_t i = 0; i < in.coords.size(); ++i) {
                if (in.coords[i].is_zero()) continue;
                tuple[pos] = BasisRef{in.degree, i};
                rec(pos + 1, coeff * in.coords[i]);
            }
        };
    rec(0, one);
    return acc;
}

bool GradedMultilinearMap::is_zero() const {
    for (auto& [k, v] : entries_)
        if (!deforma::is_zero(v)) return false;
    return true;
}

bool operator==(const GradedMultilinearMap& a, const GradedMultilinearMap& b) {
    if (a.arity_ != b.arity_ || a.degree_ != b.degree_ || !(a.domain_ == b.domain_) ||
        !(a.codomain_ == b.codomain_))
        return false;
    // entries are pruned of zeros on insertion
    return a.entries_ == b.entries_;
}

namespace {

std::vector<Permutation> all_permutations(std::size_t n) {
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    std::vector<Permutation> out;
    do {
        Permutation p;
        p.images = idx;
        out.push_back(std::move(p));
    } while (std::next_permutation(idx.begin(), idx.end()));
    return out;
}

std::vector<int> tuple_degrees(const std::vector<BasisRef>& tuple) {
    std::vector<int> degs(tuple.size());
    for (std::size_t i = 0; i < tuple.size(); ++i) degs[i] = tuple[i].degree;
    return degs;
}

std::vector<BasisRef> permute_tuple(const std::vector<BasisRef>& tuple,
                                    const Permutation& sigma) {
    std::vector<BasisRef> out(tuple.size());
    for (std::size_t i = 0; i < tuple.size(); ++i) out[i] = tuple[sigma.images[i]];
    return out;
}

} // namespace

GradedMultilinearMap antisymmetrize(const GradedMultilinearMap& map) {
    GradedMultilinearMap out(map.arity(), map.degree(), map.domain(), map.codomain());
    if (map.arity() <= 1) return map;
    auto perms = all_permutations(map.arity());
    Rational factorial(1);
    for (std::size_t k = 2; k <= map.arity(); ++k) factorial *= Rational((long)k);
    Rational inv = Rational(1) / factorial;

    // targets: every permutation of every support tuple can receive a value
    std::map<std::vector<BasisRef>, bool> targets;
    for (auto& [tuple, value] : map.entries())
        for (const auto& sigma : perms) targets[permute_tuple(tuple, sigma)] = true;

    for (auto& [tuple, unused] : targets) {
        auto degs = tuple_degrees(tuple);
        GradedElement acc = GradedElement::zero(map.codomain(), map.output_degree(tuple));
        for (const auto& sigma : perms) {
            int chi = antisym_koszul_sign(sigma, degs);
            GradedElement v = map.on_basis(permute_tuple(tuple, sigma));
            acc.add_scaled(Rational(chi), v);
        }
        for (auto& c : acc.coords) c *= inv;
        out.set(tuple, acc.coords);
    }
    return out;
}

bool is_chi_antisymmetric(const GradedMultilinearMap& map) {
    if (map.arity() <= 1) return true;
    auto perms = all_permutations(map.arity());
    std::map<std::vector<BasisRef>, bool> tuples;
    for (auto& [tuple, value] : map.entries())
        for (const auto& sigma : perms) tuples[permute_tuple(tuple, sigma)] = true;
    for (auto& [tuple, unused] : tuples) {
        auto degs = tuple_degrees(tuple);
        GradedElement base = map.on_basis(tuple);
        for (const auto& sigma : perms) {
            int chi = antisym_koszul_sign(sigma, degs);
            GradedElement lhs = map.on_basis(permute_tuple(tuple, sigma));
            GradedElement rhs = GradedElement::zero(map.codomain(), base.degree);
            rhs.add_scaled(Rational(chi), base);
            if (!(lhs == rhs)) return false;
        }
    }
    return true;
}

std::vector<std::vector<BasisRef>> basis_tuples(const GradedSpace& space, std::size_t length) {
    std::vector<BasisRef> slots;
    for (auto& [deg, n] : space.components())
        for (std::size_t i = 0; i < n; ++i) slots.push_back(BasisRef{deg, i});
    std::vector<std::vector<BasisRef>> out;
    std::vector<BasisRef> tuple(length);
    std::function<void(std::size_t)> rec = [&](std::size_t pos) {
        if (pos == length) {
            out.push_back(tuple);
            return;
        }
        for (const auto& s : slots) {
            tuple[pos] = s;
            rec(pos + 1);
        }
    };
    rec(0);
    return out;
}

} // namespace deforma
