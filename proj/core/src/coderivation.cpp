#include "deforma/coderivation.hpp"

#include <algorithm>
#include <functional>

#include "deforma/errors.hpp"

namespace deforma {

namespace {

std::vector<BasisRef> flatten_basis(const GradedSpace& space) {
    std::vector<BasisRef> out;
    for (auto& [deg, n] : space.components())
        for (std::size_t i = 0; i < n; ++i) out.push_back(BasisRef{deg, i});
    return out;
}

void add_combo(WordCombo& acc, const Word& w, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = acc.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) acc.erase(it);
    }
}

bool combo_is_zero(const WordCombo& c) {
    for (auto& [w, x] : c)
        if (!x.is_zero()) return false;
    return true;
}

int pow_sign(long e) { return (e % 2 == 0) ? 1 : -1; }

} // namespace

int CoderivationTable::word_degree(const Word& w) const {
    int d = 0;
    for (auto s : w) d += slot_degrees[s];
    return d;
}

bool CoderivationTable::is_zero() const {
    for (auto& [s, table] : corestrictions)
        for (auto& [w, v] : table)
            if (!deforma::is_zero(v)) return false;
    return true;
}

std::pair<Word, int> symmetric_canonical(Word w, const std::vector<int>& slot_degrees) {
    int sign = 1;
    for (std::size_t pass = 0; pass + 1 < w.size(); ++pass)
        for (std::size_t i = 0; i + 1 < w.size(); ++i)
            if (w[i] > w[i + 1]) {
                if (slot_degrees[w[i]] % 2 != 0 && slot_degrees[w[i + 1]] % 2 != 0)
                    sign = -sign;
                std::swap(w[i], w[i + 1]);
            }
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] == w[i + 1] && slot_degrees[w[i]] % 2 != 0) return {w, 0};
    return {w, sign};
}

WordCombo CoderivationTable::apply(const Word& w) const {
    WordCombo acc;
    const std::size_t n = w.size();
    if (flavor == CoalgebraFlavor::tensor) {
        // sum over corestriction arity s and insertion position, with the sign
        // of moving a degree-d map past the prefix
        for (auto& [s, table] : corestrictions) {
            if (s > n) continue;
            for (std::size_t i = 0; i + s <= n; ++i) {
                int prefix_deg = 0;
                for (std::size_t p = 0; p < i; ++p) prefix_deg += slot_degrees[w[p]];
                int sign = pow_sign(static_cast<long>(degree) * prefix_deg);
                Word block(w.begin() + i, w.begin() + i + s);
                auto it = table.find(block);
                if (it == table.end()) continue;
                for (std::size_t j = 0; j < it->second.size(); ++j) {
                    if (it->second[j].is_zero()) continue;
                    Word out;
                    out.reserve(n - s + 1);
                    out.insert(out.end(), w.begin(), w.begin() + i);
                    out.push_back(j);
                    out.insert(out.end(), w.begin() + i + s, w.end());
                    add_combo(acc, out, Rational(sign) * it->second[j]);
                }
            }
        }
    } else {
        std::vector<int> degs(n);
        for (std::size_t p = 0; p < n; ++p) degs[p] = slot_degrees[w[p]];
        for (auto& [s, table] : corestrictions) {
            if (s > n) continue;
            for (const auto& sigma : unshuffles(s, n)) {
                int eps = koszul_sign(sigma, degs);
                Word block(s);
                for (std::size_t p = 0; p < s; ++p) block[p] = w[sigma.images[p]];
                // w canonical + ascending block positions => block canonical
                auto it = table.find(block);
                if (it == table.end()) continue;
                Word rest(n - s);
                for (std::size_t p = s; p < n; ++p) rest[p - s] = w[sigma.images[p]];
                for (std::size_t j = 0; j < it->second.size(); ++j) {
                    if (it->second[j].is_zero()) continue;
                    Word out;
                    out.reserve(n - s + 1);
                    out.push_back(j);
                    out.insert(out.end(), rest.begin(), rest.end());
                    auto [canon, csign] = symmetric_canonical(out, slot_degrees);
                    if (csign == 0) continue;
                    add_combo(acc, canon, Rational(eps * csign) * it->second[j]);
                }
            }
        }
    }
    return acc;
}

WordCombo CoderivationTable::apply(const WordCombo& c) const {
    WordCombo acc;
    for (auto& [w, coeff] : c)
        for (auto& [w2, coeff2] : apply(w)) add_combo(acc, w2, coeff * coeff2);
    return acc;
}

bool operator==(const CoderivationTable& a, const CoderivationTable& b) {
    if (a.flavor != b.flavor || a.truncation != b.truncation || a.degree != b.degree ||
        a.slot_degrees != b.slot_degrees)
        return false;
    auto normalized = [](const CoderivationTable& t) {
        std::map<std::size_t, std::map<Word, Vec>> out;
        for (auto& [s, table] : t.corestrictions)
            for (auto& [w, v] : table)
                if (!deforma::is_zero(v)) out[s][w] = v;
        return out;
    };
    return normalized(a) == normalized(b);
}

std::vector<Word> enumerate_words(const CoderivationTable& t) {
    std::vector<Word> out;
    const std::size_t m = t.slot_count();
    for (std::size_t len = 1; len <= t.truncation; ++len) {
        Word w(len, 0);
        while (true) {
            if (t.flavor == CoalgebraFlavor::tensor) {
                out.push_back(w);
            } else {
                auto [canon, sign] = symmetric_canonical(w, t.slot_degrees);
                if (sign != 0 && canon == w) out.push_back(w);
            }
            std::size_t pos = len;
            while (pos > 0) {
                if (++w[pos - 1] < m) break;
                w[pos - 1] = 0;
                --pos;
            }
            if (pos == 0) break;
        }
    }
    return out;
}

namespace {

/// Sign transporting an operation value on the unshifted space onto the
/// corestriction on shifted-word inputs: collapses the stack of suspensions
/// (suspension_power_sign) and the Koszul cost of evaluating them against the
/// word's letters. The symmetric dictionary carries the extra per-arity twist
/// that matches the homotopy-Lie axiom convention.
int dictionary_sign(CoalgebraFlavor flavor, const std::vector<int>& word_degrees) {
    const std::size_t k = word_degrees.size();
    long e = (k * (k - 1) / 2) % 2; // suspension collapse
    for (std::size_t p = 0; p < k; ++p)
        e += static_cast<long>(k - 1 - p) * word_degrees[p]; // Koszul evaluation
    if (flavor == CoalgebraFlavor::symmetric) e += (k * (k + 1) / 2) % 2;
    return pow_sign(e);
}

CoderivationTable make_table(const GradedSpace& space, CoalgebraFlavor flavor,
                             std::size_t truncation, int degree) {
    CoderivationTable t;
    t.flavor = flavor;
    t.truncation = truncation;
    t.degree = degree;
    t.original_space = space;
    for (const auto& ref : flatten_basis(space)) {
        t.origin.push_back(ref);
        t.slot_degrees.push_back(flavor == CoalgebraFlavor::tensor ? -ref.degree - 1
                                                                   : ref.degree - 1);
    }
    return t;
}

/// Extracts the corestrictions of a composed action.
CoderivationTable corestrictions_of(const CoderivationTable& shape, int degree,
                                    const std::function<WordCombo(const Word&)>& action) {
    CoderivationTable out = shape;
    out.degree = degree;
    out.corestrictions.clear();
    for (const auto& w : enumerate_words(shape)) {
        WordCombo img = action(w);
        Vec value(shape.slot_count());
        bool nonzero = false;
        for (auto& [word, c] : img)
            if (word.size() == 1 && !c.is_zero()) {
                value[word[0]] = c;
                nonzero = true;
            }
        if (nonzero) out.corestrictions[w.size()][w] = std::move(value);
    }
    return out;
}

} // namespace

LiftResult lift_to_coderivation(const std::map<std::size_t, GradedMultilinearMap>& ops,
                                const GradedSpace& space, CoalgebraFlavor flavor,
                                std::size_t truncation) {
    if (truncation < 2)
        throw TruncationTooSmall("lift_to_coderivation: truncation must be >= 2");
    CoderivationTable t = make_table(space, flavor, truncation, 1);

    for (auto& [k, op] : ops) {
        if (k < 1 || op.arity() != k)
            throw ArityMismatch("lift_to_coderivation: arity key mismatch");
        int want = flavor == CoalgebraFlavor::tensor ? static_cast<int>(k) - 2
                                                     : 2 - static_cast<int>(k);
        if (op.degree() != want)
            throw DegreeMismatch("lift_to_coderivation: operation degree does not "
                                 "yield a degree-1 coderivation");
        if (flavor == CoalgebraFlavor::symmetric && !is_chi_antisymmetric(op))
            throw NotAntisymmetric("lift_to_coderivation: symmetric flavor needs "
                                   "chi-antisymmetric operations");
    }

    // slot lookup per original basis ref
    std::map<BasisRef, std::size_t> slot_of;
    for (std::size_t s = 0; s < t.origin.size(); ++s) slot_of[t.origin[s]] = s;

    for (const auto& w : enumerate_words(t)) {
        const std::size_t k = w.size();
        auto it = ops.find(k);
        if (it == ops.end()) continue;
        const GradedMultilinearMap& op = it->second;
        std::vector<BasisRef> tuple(k);
        std::vector<int> wdegs(k);
        for (std::size_t p = 0; p < k; ++p) {
            tuple[p] = t.origin[w[p]];
            wdegs[p] = t.slot_degrees[w[p]];
        }
        GradedElement val = op.on_basis(tuple);
        if (val.is_zero()) continue;
        int sign = dictionary_sign(flavor, wdegs);
        Vec out(t.slot_count());
        for (std::size_t j = 0; j < val.coords.size(); ++j) {
            if (val.coords[j].is_zero()) continue;
            out[slot_of.at(BasisRef{val.degree, j})] = Rational(sign) * val.coords[j];
        }
        t.corestrictions[k][w] = std::move(out);
    }

    LiftResult res;
    res.square = corestrictions_of(t, 2, [&t](const Word& w) { return t.apply(t.apply(w)); });
    res.square_is_zero = true;
    for (const auto& w : enumerate_words(t))
        if (!combo_is_zero(t.apply(t.apply(w)))) {
            res.square_is_zero = false;
            break;
        }
    res.coderivation = std::move(t);
    return res;
}

namespace {

/// Fills a map given on ascending-sorted basis tuples out to all permutations
/// by chi-antisymmetry.
GradedMultilinearMap chi_symmetrize_from_canonical(const GradedMultilinearMap& op) {
    GradedMultilinearMap out(op.arity(), op.degree(), op.domain(), op.codomain());
    std::vector<std::size_t> idx(op.arity());
    for (auto& [tuple, value] : op.entries()) {
        std::vector<int> degs(tuple.size());
        for (std::size_t p = 0; p < tuple.size(); ++p) degs[p] = tuple[p].degree;
        for (std::size_t p = 0; p < idx.size(); ++p) idx[p] = p;
        do {
            Permutation sigma;
            sigma.images = idx;
            std::vector<BasisRef> permuted(tuple.size());
            for (std::size_t p = 0; p < tuple.size(); ++p)
                permuted[p] = tuple[sigma.images[p]];
            int chi = antisym_koszul_sign(sigma, degs);
            Vec v = value;
            if (chi < 0)
                for (auto& x : v) x = -x;
            out.set(permuted, v);
        } while (std::next_permutation(idx.begin(), idx.end()));
    }
    return out;
}

} // namespace

std::map<std::size_t, GradedMultilinearMap> extract_operations(const CoderivationTable& t) {
    std::map<std::size_t, GradedMultilinearMap> ops;
    for (auto& [k, table] : t.corestrictions) {
        // a degree-d corestriction of arity k encodes an operation of degree
        // k - 1 - d (tensor dictionary) or d + 1 - k (symmetric dictionary)
        int op_degree = t.flavor == CoalgebraFlavor::tensor
                            ? static_cast<int>(k) - 1 - t.degree
                            : t.degree + 1 - static_cast<int>(k);
        GradedMultilinearMap op(k, op_degree, t.original_space, t.original_space);
        for (auto& [w, value] : table) {
            std::vector<BasisRef> tuple(k);
            std::vector<int> wdegs(k);
            for (std::size_t p = 0; p < k; ++p) {
                tuple[p] = t.origin[w[p]];
                wdegs[p] = t.slot_degrees[w[p]];
            }
            int sign = dictionary_sign(t.flavor, wdegs);
            int out_deg = op.output_degree(tuple);
            Vec coords(t.original_space.dim(out_deg));
            bool nonzero = false;
            for (std::size_t s = 0; s < value.size(); ++s) {
                if (value[s].is_zero()) continue;
                const BasisRef& ref = t.origin[s];
                if (ref.degree != out_deg)
                    throw DegreeMismatch("extract_operations: corestriction is not "
                                         "homogeneous of the coderivation degree");
                coords[ref.index] = Rational(sign) * value[s];
                nonzero = true;
            }
            if (nonzero) op.set(tuple, coords);
        }
        if (t.flavor == CoalgebraFlavor::symmetric) op = chi_symmetrize_from_canonical(op);
        if (!op.is_zero()) ops.emplace(k, std::move(op));
    }
    return ops;
}

CoderivationTable coderivation_bracket(const CoderivationTable& t1,
                                       const CoderivationTable& t2) {
    if (t1.flavor != t2.flavor || t1.truncation != t2.truncation ||
        t1.slot_degrees != t2.slot_degrees)
        throw FlavorMismatch("coderivation_bracket: flavor/truncation/space mismatch");
    int sign = pow_sign(static_cast<long>(t1.degree) * t2.degree);
    auto commutator = [&](const Word& w) {
        WordCombo acc = t1.apply(t2.apply(w));
        for (auto& [word, c] : t2.apply(t1.apply(w)))
            add_combo(acc, word, Rational(-sign) * c);
        return acc;
    };
    CoderivationTable out =
        corestrictions_of(t1, t1.degree + t2.degree, commutator);
    // the commutator of coderivations is again a coderivation: its re-extended
    // corestrictions must reproduce the composed action on every word
    for (const auto& w : enumerate_words(t1)) {
        WordCombo direct = commutator(w);
        WordCombo ext = out.apply(w);
        for (auto& [word, c] : ext) add_combo(direct, word, -c);
        if (!combo_is_zero(direct))
            throw Error("coderivation_bracket: commutator failed the coderivation "
                        "closure check");
    }
    return out;
}

bool coderivation_property_holds(const CoderivationTable& t) {
    using PairCombo = std::map<std::pair<Word, Word>, Rational>;
    auto add_pair = [](PairCombo& acc, const Word& a, const Word& b, const Rational& c) {
        if (c.is_zero()) return;
        auto key = std::make_pair(a, b);
        auto [it, inserted] = acc.try_emplace(key, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) acc.erase(it);
        }
    };
    auto comultiply = [&t](const Word& w) {
        PairCombo out;
        const std::size_t n = w.size();
        if (t.flavor == CoalgebraFlavor::tensor) {
            for (std::size_t i = 1; i + 1 <= n; ++i)
                out[{Word(w.begin(), w.begin() + i), Word(w.begin() + i, w.end())}] =
                    Rational(1);
        } else {
            std::vector<int> degs(n);
            for (std::size_t p = 0; p < n; ++p) degs[p] = t.slot_degrees[w[p]];
            for (std::size_t i = 1; i + 1 <= n; ++i)
                for (const auto& sigma : unshuffles(i, n)) {
                    int eps = koszul_sign(sigma, degs);
                    Word a(i), b(n - i);
                    for (std::size_t p = 0; p < i; ++p) a[p] = w[sigma.images[p]];
                    for (std::size_t p = i; p < n; ++p) b[p - i] = w[sigma.images[p]];
                    out[{a, b}] = out.count({a, b}) ? out[{a, b}] + Rational(eps)
                                                    : Rational(eps);
                }
        }
        return out;
    };

    for (const auto& w : enumerate_words(t)) {
        PairCombo lhs; // Delta theta(w)
        for (auto& [word, c] : t.apply(w))
            for (auto& [pair, c2] : comultiply(word))
                add_pair(lhs, pair.first, pair.second, c * c2);
        PairCombo rhs; // (theta ox id + id ox theta) Delta(w)
        for (auto& [pair, c] : comultiply(w)) {
            for (auto& [word, c2] : t.apply(pair.first))
                add_pair(rhs, word, pair.second, c * c2);
            int sign = pow_sign(static_cast<long>(t.degree) * t.word_degree(pair.first));
            for (auto& [word, c2] : t.apply(pair.second))
                add_pair(rhs, pair.first, word, Rational(sign) * c * c2);
        }
        for (auto& [pair, c] : rhs) add_pair(lhs, pair.first, pair.second, -c);
        if (!lhs.empty()) return false;
    }
    return true;
}

} // namespace deforma
