#ifndef VARKIT_TEXT_HPP_
#define VARKIT_TEXT_HPP_

#include <optional>
#include <string>
#include <vector>

#include "varkit/families.hpp"
#include "varkit/identities.hpp"
#include "varkit/monoid.hpp"
#include "varkit/words.hpp"

namespace varkit {

// Word grammar: whitespace-separated tokens, token = [a-z]+ with optional
// decimal index and up to two apostrophes, optional ^n repetition.  The empty
// word is spelled 1.
Letter parse_letter(const std::string& token);
Word parse_word(const std::string& text);

// "<word> = <word>"
Identity parse_identity(const std::string& text);

// "M(<word>[;<word>]*)"
std::vector<Word> parse_m_literal(const std::string& text);

// "sub(<M-literal>; <word>[, <word>]*)": the named factor monoid restricted
// to the submonoid its generators produce.
FiniteMonoid parse_monoid_literal(const std::string& text);

Perm parse_perm(const std::string& text);

// Generator spec results; exactly one field is set.
struct GenResult {
  std::optional<Word> word;
  std::optional<Identity> identity;
  std::optional<VarietyBasis> basis;
  std::optional<std::vector<Perm>> perms;
};

// Family spec grammar, e.g. a(1,0;perm=1), a'(1,0;perm=1), ahat(1,0;perm=1),
// apq(1,1;perm=1,2;p=0;q=2), c(0,0,3;perm=2,1,3), d'(0,0,1;perm=1),
// vst(4;perm=...;s=0;t=24), vxieta(0,0;xi=1,2;eta=1,2), alpha, beta,
// delta(2,1), apair(1,0;perm=1), cpair(...), dpair(...), id(<tag>),
// nmperms(2,1), basis(P,2;bound=3), dual(basis(Q,2)).
GenResult generate(const std::string& spec);

// Accepts basis(...) and dual(...) forms.
VarietyBasis parse_basis_spec(const std::string& text);

// A word, or gen:<family-spec> naming a generated word.
Word parse_word_or_gen(const std::string& text);
// An identity whose sides may each be gen:<family-spec>.
Identity parse_identity_or_gen(const std::string& text);

}  // namespace varkit

#endif  // VARKIT_TEXT_HPP_
