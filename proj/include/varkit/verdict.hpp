#ifndef VARKIT_VERDICT_HPP_
#define VARKIT_VERDICT_HPP_

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "varkit/identities.hpp"
#include "varkit/words.hpp"

namespace varkit {

// Three-valued answer for bounded procedures.  A fails verdict always carries
// concrete, replayable evidence; unknown carries the reason the search gave
// up.  Which evidence field is filled depends on the operation.
struct Verdict {
  enum class Kind { holds, fails, unknown };

  Kind kind = Kind::unknown;
  std::optional<std::map<Letter, int>> assignment;  // letter -> element id
  std::optional<Identity> violated;
  std::optional<Word> witness_word;
  std::string note;

  bool holds() const { return kind == Kind::holds; }
  bool fails() const { return kind == Kind::fails; }
  bool unknown() const { return kind == Kind::unknown; }
  bool decisive() const { return kind != Kind::unknown; }

  // 0 holds / 1 fails / 2 unknown.
  int exit_code() const { return kind == Kind::holds ? 0 : kind == Kind::fails ? 1 : 2; }
  const char* name() const {
    return kind == Kind::holds ? "holds" : kind == Kind::fails ? "fails" : "unknown";
  }

  static Verdict make_holds(std::string note = {}) {
    return {Kind::holds, std::nullopt, std::nullopt, std::nullopt,
            std::move(note)};
  }
  static Verdict make_unknown(std::string note) {
    return {Kind::unknown, std::nullopt, std::nullopt, std::nullopt,
            std::move(note)};
  }
  static Verdict make_fails(std::string note = {}) {
    return {Kind::fails, std::nullopt, std::nullopt, std::nullopt,
            std::move(note)};
  }
};

// Work limits for long-running checks; zero means unlimited.
struct Budget {
  std::uint64_t max_steps = 0;
  std::optional<std::chrono::steady_clock::time_point> deadline;

  bool spend(std::uint64_t& counter) const {
    ++counter;
    if (max_steps != 0 && counter > max_steps) {
      return false;
    }
    if (deadline && (counter & 0x3ff) == 0 &&
        std::chrono::steady_clock::now() > *deadline) {
      return false;
    }
    return true;
  }
};

}  // namespace varkit

#endif  // VARKIT_VERDICT_HPP_
