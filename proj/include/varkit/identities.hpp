#ifndef VARKIT_IDENTITIES_HPP_
#define VARKIT_IDENTITIES_HPP_

#include <compare>
#include <cstddef>
#include <optional>
#include <string>

#include "varkit/words.hpp"

namespace varkit {

struct Identity {
  Word lhs;
  Word rhs;

  bool trivial() const { return lhs == rhs; }
  Identity swapped() const { return {rhs, lhs}; }
  std::string str() const { return lhs.str() + " = " + rhs.str(); }

  friend auto operator<=>(const Identity&, const Identity&) = default;
};

enum class IdentityCompare { ordered, unordered };

// Unordered comparison treats the two sides as the set {lhs, rhs}.
bool same_identity(const Identity& a, const Identity& b,
                   IdentityCompare mode = IdentityCompare::unordered);

// Renames letters to a fixed alphabet in order of first appearance, so two
// words (or identities) agree up to renaming iff their canonical forms are
// equal.
Word canonical_word(const Word& w);
Identity canonical_form(const Identity& id);

// Reverses both sides.
Identity dual_identity(const Identity& id);

// Both sides share the simple-letter sequence and every multiple letter
// occurs equally often, and at most once, in corresponding blocks.
bool is_linear_balanced(const Identity& id);

// Length of the shortest chain of adjacent-swap steps from u to v where the
// two swapped letters both occur in the surrounding context.  0 iff u == v;
// empty when v is unreachable (or the search exceeds max_nodes).
std::optional<std::size_t> inversion_distance(const Word& u, const Word& v,
                                              std::size_t max_nodes = 1000000);

}  // namespace varkit

#endif  // VARKIT_IDENTITIES_HPP_
