#ifndef VARKIT_DEDUCTION_HPP_
#define VARKIT_DEDUCTION_HPP_

#include <cstddef>
#include <set>
#include <vector>

#include "varkit/families.hpp"
#include "varkit/identities.hpp"
#include "varkit/monoid.hpp"
#include "varkit/verdict.hpp"
#include "varkit/words.hpp"

namespace varkit {

struct Caps {
  std::size_t max_word_length = 16;
  std::size_t max_orbit_size = 1000000;
  std::size_t max_candidate_length = 8;

  static Caps for_seed(const Word& seed) {
    Caps c;
    c.max_word_length = 2 * seed.size() + 3;
    c.max_candidate_length = seed.size() + 3;
    return c;
  }
};

struct OrbitResult {
  std::set<Word> words;
  bool closed = true;
};

// All single rewriting steps from u using either side of the identity as the
// pattern.  Letters occurring only in the replacement side have no image
// forced by the match; their images are then enumerated over short words in
// the given alphabet, and *complete (if non-null) is cleared because that
// enumeration cannot be exhaustive.
std::set<Word> direct_deductions(const Word& u, const Identity& id,
                                 const std::vector<Letter>& extra_alphabet = {},
                                 bool* complete = nullptr);

// Breadth-first closure of direct_deductions.  Words longer than the cap are
// discarded and the result is marked not closed; a closed result is exactly
// the set of words reachable from the seed.
OrbitResult orbit(const Word& seed, const std::vector<Identity>& ids,
                  const Caps& caps,
                  const std::vector<Letter>& extra_alphabet = {});

// Reachability search; sets *decisively_not when the target is absent from a
// closed orbit.  Steps out of the chain from seed to target are written to
// *chain when requested.
bool deducible(const Word& seed, const Word& target,
               const std::vector<Identity>& ids, const Caps& caps,
               bool* decisively_not = nullptr,
               std::vector<Word>* chain = nullptr);

// Whether no identity instance of the basis rewrites w into a different
// word.  Fails carries the reachable word as a witness identity w = w'.
Verdict isoterm_basis(const Word& w, const VarietyBasis& b, const Caps& caps);

// Sweeps candidate words over the content of w up to the candidate-length
// cap; never answers holds, since no candidate-length bound justifies one.
Verdict isoterm_monoid(const Word& w, const FactorMonoid& m, const Caps& caps,
                       Strategy strategy = Strategy::automatic);
Verdict isoterm_monoid(const Word& w, const FiniteMonoid& m, const Caps& caps);

// Factor-monoid membership through per-word isoterm checks.
Verdict member(const std::vector<Word>& ws, const VarietyBasis& b,
               const Caps& caps);
Verdict member(const std::vector<Word>& ws, const FactorMonoid& m,
               const Caps& caps);

// The class of w under the fully invariant congruence generated by the
// identities, computed as an orbit and exact when closed.
OrbitResult fic_class(const Word& w, const std::vector<Identity>& ids,
                      const Caps& caps);
OrbitResult fic_class(const Word& w, const VarietyBasis& b, const Caps& caps);

}  // namespace varkit

#endif  // VARKIT_DEDUCTION_HPP_
