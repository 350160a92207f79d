#include "varkit/identities.hpp"

#include <deque>
#include <map>
#include <unordered_map>

namespace varkit {

namespace {

Letter canonical_letter(std::size_t i) {
  std::string name(1, static_cast<char>('a' + i % 26));
  int index = i < 26 ? -1 : static_cast<int>(i / 26);
  return Letter(std::move(name), index);
}

Substitution renaming_by_first_appearance(const Word& w) {
  Substitution sub;
  std::size_t next = 0;
  std::map<Letter, bool> seen;
  for (const Letter& l : w) {
    if (!seen[l]) {
      seen[l] = true;
      sub.set(l, Word::single(canonical_letter(next++)));
    }
  }
  return sub;
}

}  // namespace

bool same_identity(const Identity& a, const Identity& b,
                   IdentityCompare mode) {
  if (a == b) {
    return true;
  }
  return mode == IdentityCompare::unordered && a == b.swapped();
}

Word canonical_word(const Word& w) {
  return renaming_by_first_appearance(w).apply(w);
}

Identity canonical_form(const Identity& id) {
  Substitution sub = renaming_by_first_appearance(id.lhs + id.rhs);
  return {sub.apply(id.lhs), sub.apply(id.rhs)};
}

Identity dual_identity(const Identity& id) {
  return {reverse(id.lhs), reverse(id.rhs)};
}

bool is_linear_balanced(const Identity& id) {
  WordAnalysis au = analyze(id.lhs);
  WordAnalysis av = analyze(id.rhs);
  if (au.multiple.empty() && av.multiple.empty()) {
    // No letter is constrained by the per-block condition; balance reduces
    // to both sides carrying the same letters.
    return au.content == av.content;
  }
  Decomposition du = decompose(id.lhs);
  Decomposition dv = decompose(id.rhs);
  if (du.simple_seq != dv.simple_seq) {
    return false;
  }
  for (std::size_t i = 0; i < du.blocks.size(); ++i) {
    std::map<Letter, std::size_t> occ_u;
    std::map<Letter, std::size_t> occ_v;
    for (const Letter& l : du.blocks[i]) {
      if (++occ_u[l] > 1) {
        return false;
      }
    }
    for (const Letter& l : dv.blocks[i]) {
      if (++occ_v[l] > 1) {
        return false;
      }
    }
    if (occ_u != occ_v) {
      return false;
    }
  }
  return true;
}

std::optional<std::size_t> inversion_distance(const Word& u, const Word& v,
                                              std::size_t max_nodes) {
  if (u == v) {
    return 0;
  }
  if (u.size() != v.size()) {
    return std::nullopt;
  }
  std::unordered_map<Word, std::size_t, WordHash> dist;
  std::deque<Word> queue;
  dist.emplace(u, 0);
  queue.push_back(u);
  while (!queue.empty()) {
    Word w = queue.front();
    queue.pop_front();
    std::size_t d = dist.at(w);
    for (std::size_t p = 0; p + 1 < w.size(); ++p) {
      const Letter& x = w[p];
      const Letter& y = w[p + 1];
      if (x == y) {
        continue;
      }
      // Both swapped letters must occur in the surrounding context.
      bool x_in_ctx = false;
      bool y_in_ctx = false;
      for (std::size_t q = 0; q < w.size(); ++q) {
        if (q == p || q == p + 1) {
          continue;
        }
        x_in_ctx = x_in_ctx || w[q] == x;
        y_in_ctx = y_in_ctx || w[q] == y;
      }
      if (!x_in_ctx || !y_in_ctx) {
        continue;
      }
      std::vector<Letter> next(w.begin(), w.end());
      std::swap(next[p], next[p + 1]);
      Word nw(std::move(next));
      if (nw == v) {
        return d + 1;
      }
      if (dist.emplace(nw, d + 1).second) {
        if (dist.size() > max_nodes) {
          return std::nullopt;
        }
        queue.push_back(std::move(nw));
      }
    }
  }
  return std::nullopt;
}

}  // namespace varkit
