#include "varkit/deduction.hpp"

#include <deque>
#include <functional>
#include <map>
#include <unordered_map>

#include "varkit/matching.hpp"

namespace varkit {

namespace {

void one_direction(const Word& u, const Word& pattern, const Word& replacement,
                   const std::vector<Letter>& alphabet, std::set<Word>& out,
                   bool* complete) {
  // Letters of the replacement that the pattern does not bind.
  std::set<Letter> pattern_letters(pattern.begin(), pattern.end());
  std::vector<Letter> free_letters;
  {
    std::set<Letter> seen;
    for (const Letter& l : replacement) {
      if (!pattern_letters.count(l) && seen.insert(l).second) {
        free_letters.push_back(l);
      }
    }
  }
  Budget unlimited;
  std::uint64_t steps = 0;
  for (std::size_t start = 0; start <= u.size(); ++start) {
    for_each_match(
        pattern, u, start, replacement,
        [&](const std::map<Letter, Word>& bound, std::size_t end) {
          Word prefix = factor_at(u, 0, start);
          Word suffix = factor_at(u, end, u.size() - end);
          Substitution sub;
          for (const auto& [l, w] : bound) {
            sub.set(l, w);
          }
          if (free_letters.empty()) {
            out.insert(prefix + sub.apply(replacement) + suffix);
            return true;
          }
          // The free images range over the whole free monoid; a bounded
          // enumeration over the working alphabet stands in for it.
          if (complete != nullptr) {
            *complete = false;
          }
          std::function<void(std::size_t)> expand = [&](std::size_t i) {
            if (i == free_letters.size()) {
              out.insert(prefix + sub.apply(replacement) + suffix);
              return;
            }
            sub.set(free_letters[i], Word());
            expand(i + 1);
            for (const Letter& l : alphabet) {
              sub.set(free_letters[i], Word::single(l));
              expand(i + 1);
            }
          };
          expand(0);
          return true;
        },
        unlimited, steps);
  }
}

std::vector<Letter> working_alphabet(const Word& u, const Identity& id,
                                     const std::vector<Letter>& extra) {
  std::set<Letter> set(u.begin(), u.end());
  set.insert(id.lhs.begin(), id.lhs.end());
  set.insert(id.rhs.begin(), id.rhs.end());
  set.insert(extra.begin(), extra.end());
  return {set.begin(), set.end()};
}

}  // namespace

std::set<Word> direct_deductions(const Word& u, const Identity& id,
                                 const std::vector<Letter>& extra_alphabet,
                                 bool* complete) {
  std::set<Word> out;
  std::vector<Letter> alphabet = working_alphabet(u, id, extra_alphabet);
  one_direction(u, id.lhs, id.rhs, alphabet, out, complete);
  one_direction(u, id.rhs, id.lhs, alphabet, out, complete);
  return out;
}

namespace {

struct OrbitSearch {
  OrbitResult result;
  std::map<Word, Word> parent;

  // Runs BFS until exhaustion or until visit() returns false.
  void run(const Word& seed, const std::vector<Identity>& ids,
           const Caps& caps, const std::vector<Letter>& extra,
           const std::function<bool(const Word&)>& visit) {
    result.words.insert(seed);
    if (visit && !visit(seed)) {
      return;
    }
    std::deque<Word> queue{seed};
    while (!queue.empty()) {
      Word w = queue.front();
      queue.pop_front();
      for (const Identity& id : ids) {
        bool complete = true;
        std::set<Word> next = direct_deductions(w, id, extra, &complete);
        if (!complete) {
          result.closed = false;
        }
        for (const Word& v : next) {
          if (v.size() > caps.max_word_length) {
            result.closed = false;
            continue;
          }
          if (result.words.count(v)) {
            continue;
          }
          if (result.words.size() >= caps.max_orbit_size) {
            result.closed = false;
            return;
          }
          result.words.insert(v);
          parent.emplace(v, w);
          if (visit && !visit(v)) {
            return;
          }
          queue.push_back(v);
        }
      }
    }
  }

  std::vector<Word> chain_to(const Word& target, const Word& seed) const {
    std::vector<Word> chain{target};
    Word cur = target;
    while (cur != seed) {
      cur = parent.at(cur);
      chain.push_back(cur);
    }
    std::reverse(chain.begin(), chain.end());
    return chain;
  }
};

}  // namespace

OrbitResult orbit(const Word& seed, const std::vector<Identity>& ids,
                  const Caps& caps, const std::vector<Letter>& extra_alphabet) {
  OrbitSearch search;
  search.run(seed, ids, caps, extra_alphabet, nullptr);
  return search.result;
}

bool deducible(const Word& seed, const Word& target,
               const std::vector<Identity>& ids, const Caps& caps,
               bool* decisively_not, std::vector<Word>* chain) {
  if (decisively_not != nullptr) {
    *decisively_not = false;
  }
  Caps adjusted = caps;
  adjusted.max_word_length =
      std::max(caps.max_word_length, target.size());
  std::vector<Letter> extra(target.begin(), target.end());
  OrbitSearch search;
  bool found = false;
  search.run(seed, ids, adjusted, extra, [&](const Word& w) {
    if (w == target) {
      found = true;
      return false;
    }
    return true;
  });
  if (found) {
    if (chain != nullptr) {
      *chain = search.chain_to(target, seed);
    }
    return true;
  }
  if (decisively_not != nullptr) {
    *decisively_not = search.result.closed;
  }
  return false;
}

Verdict isoterm_basis(const Word& w, const VarietyBasis& b, const Caps& caps) {
  std::vector<Identity> ids = b.instantiate();
  OrbitSearch search;
  Word other;
  bool found = false;
  search.run(w, ids, caps, {}, [&](const Word& v) {
    if (v != w) {
      other = v;
      found = true;
      return false;
    }
    return true;
  });
  if (found) {
    Verdict out = Verdict::make_fails("the identities rewrite the word");
    out.violated = Identity{w, other};
    out.witness_word = other;
    return out;
  }
  if (!search.result.closed) {
    return Verdict::make_unknown("orbit exceeded the caps");
  }
  if (b.truncated()) {
    return Verdict::make_unknown(
        "orbit is the singleton, but the basis has schema families truncated "
        "at bound " +
        std::to_string(b.bound));
  }
  return Verdict::make_holds();
}

namespace {

template <typename CheckIdentity>
Verdict isoterm_candidate_sweep(const Word& w, const Caps& caps,
                                CheckIdentity&& check) {
  WordAnalysis a = analyze(w);
  std::vector<Letter> alphabet(a.content.begin(), a.content.end());
  bool truncated = false;
  std::size_t emitted = 0;
  std::vector<Word> frontier{Word()};
  for (std::size_t len = 0; len <= caps.max_candidate_length; ++len) {
    for (const Word& cand : frontier) {
      if (cand == w) {
        continue;
      }
      if (++emitted > caps.max_orbit_size) {
        truncated = true;
        break;
      }
      Identity id{w, cand};
      Verdict v = check(id);
      if (v.holds()) {
        Verdict out = Verdict::make_fails(
            "the monoid satisfies a non-trivial identity over the word");
        out.violated = id;
        out.witness_word = cand;
        return out;
      }
      if (v.unknown()) {
        truncated = true;
      }
    }
    if (truncated || len == caps.max_candidate_length) {
      break;
    }
    std::vector<Word> next;
    next.reserve(frontier.size() * alphabet.size());
    for (const Word& cand : frontier) {
      for (const Letter& l : alphabet) {
        next.push_back(cand + l);
      }
    }
    frontier = std::move(next);
  }
  return Verdict::make_unknown(
      truncated ? "candidate sweep truncated"
                : "no witness up to candidate length " +
                      std::to_string(caps.max_candidate_length));
}

}  // namespace

Verdict isoterm_monoid(const Word& w, const FactorMonoid& m, const Caps& caps,
                       Strategy strategy) {
  return isoterm_candidate_sweep(w, caps, [&](const Identity& id) {
    return satisfies(m, id, strategy);
  });
}

Verdict isoterm_monoid(const Word& w, const FiniteMonoid& m, const Caps& caps) {
  return isoterm_candidate_sweep(
      w, caps, [&](const Identity& id) { return satisfies(m, id); });
}

namespace {

template <typename PerWord>
Verdict member_loop(const std::vector<Word>& ws, PerWord&& per_word) {
  bool any_unknown = false;
  std::string note;
  for (const Word& w : ws) {
    Verdict v = per_word(w);
    if (v.fails()) {
      v.note = "word " + w.compact() + " is not an isoterm: " + v.note;
      return v;
    }
    if (v.unknown()) {
      any_unknown = true;
      note = "word " + w.compact() + ": " + v.note;
    }
  }
  if (any_unknown) {
    return Verdict::make_unknown(note);
  }
  return Verdict::make_holds();
}

}  // namespace

Verdict member(const std::vector<Word>& ws, const VarietyBasis& b,
               const Caps& caps) {
  return member_loop(ws, [&](const Word& w) {
    Caps c = Caps::for_seed(w);
    c.max_orbit_size = caps.max_orbit_size;
    return isoterm_basis(w, b, c);
  });
}

Verdict member(const std::vector<Word>& ws, const FactorMonoid& m,
               const Caps& caps) {
  return member_loop(ws, [&](const Word& w) {
    Caps c = Caps::for_seed(w);
    c.max_orbit_size = caps.max_orbit_size;
    return isoterm_monoid(w, m, c);
  });
}

OrbitResult fic_class(const Word& w, const std::vector<Identity>& ids,
                      const Caps& caps) {
  return orbit(w, ids, caps);
}

OrbitResult fic_class(const Word& w, const VarietyBasis& b, const Caps& caps) {
  return orbit(w, b.instantiate(), caps);
}

}  // namespace varkit
