#ifndef VARKIT_MONOID_HPP_
#define VARKIT_MONOID_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "varkit/families.hpp"
#include "varkit/identities.hpp"
#include "varkit/verdict.hpp"
#include "varkit/words.hpp"

namespace varkit {

// Finite monoid given by its multiplication table.  Element ids are row/column
// indices; labels are display-only.
class FiniteMonoid {
 public:
  FiniteMonoid() = default;
  FiniteMonoid(int size, std::vector<int> table, int one, int zero,
               std::vector<std::string> labels);

  int size() const { return size_; }
  int mul(int a, int b) const {
    return table_[static_cast<std::size_t>(a) * static_cast<std::size_t>(size_) +
                  static_cast<std::size_t>(b)];
  }
  int one() const { return one_; }
  bool has_zero() const { return zero_ >= 0; }
  int zero() const { return zero_; }
  const std::string& label(int a) const {
    return labels_[static_cast<std::size_t>(a)];
  }
  const std::vector<std::string>& labels() const { return labels_; }

  bool is_associative() const;

  friend bool operator==(const FiniteMonoid&, const FiniteMonoid&) = default;

 private:
  int size_ = 0;
  std::vector<int> table_;
  int one_ = 0;
  int zero_ = -1;
  std::vector<std::string> labels_;
};

// The monoid of all factors of a word set plus an identity and a zero, with
// concatenation when the result is again a factor.  Element ids: 0 is the
// zero, 1 the empty word, factors follow sorted by (length, lexicographic).
struct FactorMonoid {
  FiniteMonoid monoid;
  std::vector<Word> words;                // generating word set, sorted
  std::vector<Word> element_words;        // id -> factor (ids >= 1)
  std::map<Word, int> element_of_factor;  // factor -> id (includes empty)

  int id_of(const Word& w) const;  // -1 when w is not an element
};

FactorMonoid factor_monoid(const std::vector<Word>& ws);

// Canonical single-block text form, bit-exact for golden files.
std::string serialize(const FiniteMonoid& m);
FiniteMonoid parse_monoid(const std::string& text);

enum class Strategy { automatic, exhaustive, factor_matching };

// Whether every substitution of elements for letters equates both sides.
// The exhaustive route enumerates assignments; the factor-matching route
// enumerates embeddings of either side into the generating words and is only
// available for factor monoids.
Verdict satisfies(const FiniteMonoid& m, const Identity& id,
                  const Budget& budget = {});
Verdict satisfies(const FactorMonoid& fm, const Identity& id,
                  Strategy strategy = Strategy::automatic,
                  const Budget& budget = {});

Verdict satisfies_basis(const FiniteMonoid& m, const VarietyBasis& b,
                        const Budget& budget = {});
Verdict satisfies_basis(const FactorMonoid& fm, const VarietyBasis& b,
                        Strategy strategy = Strategy::automatic,
                        const Budget& budget = {});

struct Classification {
  bool aperiodic = false;
  int index = 0;  // least n >= 1 with a^n = a^(n+1) for all a, when aperiodic
  bool central_idempotents = false;
};

Classification classify(const FiniteMonoid& m);

// Closure of gens (plus the identity) under the table, re-indexed in the
// order of the original ids.
FiniteMonoid submonoid(const FiniteMonoid& m, const std::vector<int>& gens);

bool isomorphic(const FiniteMonoid& a, const FiniteMonoid& b);

// Transposed multiplication.
FiniteMonoid reverse_monoid(const FiniteMonoid& m);
FactorMonoid reverse_monoid(const FactorMonoid& fm);

// True when a is isomorphic to a quotient of a submonoid of b.  Sound but
// bounded: congruence enumeration only runs on submonoids of at most
// max_congruence_size elements, so a false return is not conclusive.
bool divides(const FiniteMonoid& a, const FiniteMonoid& b,
             int max_congruence_size = 10);

// Smallest identity (by letter count, then side lengths, then order) that
// holds in b but fails in a; evidence that Var(a) is not contained in Var(b).
std::optional<Identity> separating_identity(const FiniteMonoid& a,
                                            const FiniteMonoid& b,
                                            int max_letters = 2,
                                            int max_side_len = 4);

}  // namespace varkit

#endif  // VARKIT_MONOID_HPP_
