#ifndef VARKIT_MATCHING_HPP_
#define VARKIT_MATCHING_HPP_

#include <cstdint>
#include <functional>
#include <map>

#include "varkit/verdict.hpp"
#include "varkit/words.hpp"

namespace varkit {

// Enumerates substitutions phi, images possibly empty, with phi(pattern)
// equal to a contiguous piece of target beginning at start (the end is
// free).  Bindings are tried with shorter images first, so the enumeration
// order is canonical.  The callback returns false to stop early; the
// function returns false iff it stopped because the budget ran out.
//
// The caller promises to consume a match only through the matched span and
// phi(other).  Runs of letters without further pattern occurrences that sit
// in the same epsilon-separated order inside `other` are therefore
// enumerated with one canonical split instead of all of them.
bool for_each_match(
    const Word& pattern, const Word& target, std::size_t start,
    const Word& other,
    const std::function<bool(const std::map<Letter, Word>&, std::size_t)>& cb,
    const Budget& budget, std::uint64_t& steps);

}  // namespace varkit

#endif  // VARKIT_MATCHING_HPP_
