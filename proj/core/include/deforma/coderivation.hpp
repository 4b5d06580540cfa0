#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "deforma/graded.hpp"

namespace deforma {

enum class CoalgebraFlavor { tensor, symmetric };

/// Word in the truncated (co)algebra on the shifted space: a sequence of slot
/// ids. Symmetric-flavor words are kept canonical (ascending slots, no
/// repeated odd slot).
using Word = std::vector<std::size_t>;
using WordCombo = std::map<Word, Rational>;

/// Coderivation on the length-truncated tensor or symmetric coalgebra of the
/// shifted space, stored through its corestrictions. The slot list is the
/// flattened homogeneous basis of the shifted space; `origin` ties each slot
/// back to the unshifted basis vector it came from.
struct CoderivationTable {
    CoalgebraFlavor flavor = CoalgebraFlavor::tensor;
    std::size_t truncation = 0;
    int degree = 1;
    std::vector<int> slot_degrees;           // degrees in the shifted space
    std::vector<BasisRef> origin;            // unshifted basis refs per slot
    GradedSpace original_space;
    // s -> (word of length s -> value as a coefficient vector over slots)
    std::map<std::size_t, std::map<Word, Vec>> corestrictions;

    std::size_t slot_count() const { return slot_degrees.size(); }
    int word_degree(const Word& w) const;
    bool is_zero() const;

    /// The coderivation's action on a basis word, by the extension formula.
    WordCombo apply(const Word& w) const;
    /// Action extended linearly to combinations.
    WordCombo apply(const WordCombo& c) const;

    friend bool operator==(const CoderivationTable& a, const CoderivationTable& b);
};

/// Canonical form of a symmetric word: sorts the slots and accumulates the
/// Koszul sign; a repeated odd slot collapses to zero (sign 0).
std::pair<Word, int> symmetric_canonical(Word w, const std::vector<int>& slot_degrees);

/// All basis words of length 1..truncation (canonical ones for the symmetric
/// flavor), lexicographic within each length.
std::vector<Word> enumerate_words(const CoderivationTable& t);

struct LiftResult {
    CoderivationTable coderivation;
    CoderivationTable square; // theta^2 restricted to words of length <= N
    bool square_is_zero = false;
};

/// Builds the degree-1 coderivation encoding the given structure operations.
/// Tensor flavor expects ops of degree k-2 (associative data); symmetric
/// flavor expects chi-antisymmetric ops of degree 2-k (Lie data). Throws
/// TruncationTooSmall for N < 2, DegreeMismatch on wrong op degrees and
/// NotAntisymmetric for non-antisymmetric symmetric input.
LiftResult lift_to_coderivation(const std::map<std::size_t, GradedMultilinearMap>& ops,
                                const GradedSpace& space, CoalgebraFlavor flavor,
                                std::size_t truncation);

/// Inverse of the lift dictionary: recovers the structure operations from the
/// corestrictions (chi-symmetrized over all permutations for the symmetric
/// flavor).
std::map<std::size_t, GradedMultilinearMap> extract_operations(const CoderivationTable& t);

/// [t1, t2] = t1 t2 - (-1)^{|t1||t2|} t2 t1 composed on words of length <= N.
/// The result's corestrictions are extracted from the composition and
/// re-extended; closure of the commutator is verified along the way.
/// Throws FlavorMismatch on flavor or truncation disagreement.
CoderivationTable coderivation_bracket(const CoderivationTable& t1,
                                       const CoderivationTable& t2);

/// Co-Leibniz property Delta theta = (theta ox id) Delta + (id ox theta) Delta
/// checked on every word of length <= N.
bool coderivation_property_holds(const CoderivationTable& t);

} // namespace deforma
