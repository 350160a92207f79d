#include "varkit/matching.hpp"

#include <vector>

namespace varkit {

namespace {

struct Matcher {
  const std::vector<Letter>& pat;
  const Word& target;
  const Word& other;
  const std::function<bool(const std::map<Letter, Word>&, std::size_t)>& cb;
  const Budget& budget;
  std::uint64_t& steps;

  // Occurrences of pat[i] strictly after position i.
  std::vector<std::size_t> later;
  std::map<Letter, Word> bound;
  bool budget_ok = true;
  bool keep_going = true;

  void init() {
    later.assign(pat.size(), 0);
    for (std::size_t i = 0; i < pat.size(); ++i) {
      for (std::size_t j = i + 1; j < pat.size(); ++j) {
        later[i] += pat[j] == pat[i];
      }
    }
  }

  bool image_fits(const Word& img, std::size_t ti) const {
    if (ti + img.size() > target.size()) {
      return false;
    }
    for (std::size_t k = 0; k < img.size(); ++k) {
      if (target[ti + k] != img[k]) {
        return false;
      }
    }
    return true;
  }

  // Whether target[from..] still contains `times` disjoint copies of
  // target[ti, ti+len).  A letter with later pattern occurrences can only
  // take an image that reappears accordingly.
  bool recurs(std::size_t ti, std::size_t len, std::size_t from,
              std::size_t times) const {
    std::size_t found = 0;
    for (std::size_t p = from; p + len <= target.size() && found < times;
         ++p) {
      bool match = true;
      for (std::size_t k = 0; k < len; ++k) {
        if (target[p + k] != target[ti + k]) {
          match = false;
          break;
        }
      }
      if (match) {
        ++found;
        p += len - 1;
      }
    }
    return found >= times;
  }

  bool bound_to_empty(const Letter& l) const {
    auto it = bound.find(l);
    return it != bound.end() && it->second.empty();
  }

  // Collapsible run starting at pi: consecutive slots holding either
  // letters bound to the empty word or fresh letters with no later
  // occurrence.  The fresh letters must appear in `other` at most once, in
  // the same order, separated only by letters currently bound to the empty
  // word.  Splitting the absorbed block among them then never changes the
  // span or phi(other), so one canonical split is enough.
  std::vector<std::size_t> collapsible_run(std::size_t pi) const {
    std::vector<std::size_t> fresh;
    std::size_t j = pi;
    for (; j < pat.size(); ++j) {
      const Letter& l = pat[j];
      if (bound_to_empty(l)) {
        continue;
      }
      if (bound.count(l) || later[j] != 0) {
        break;
      }
      bool duplicate = false;
      for (std::size_t f : fresh) {
        if (pat[f] == l) {
          duplicate = true;
          break;
        }
      }
      if (duplicate) {
        break;
      }
      fresh.push_back(j);
    }
    if (fresh.size() < 2) {
      return {};
    }
    // Order and separation inside the other side.  A run mixing letters the
    // other side uses with letters it does not is split-sensitive.
    std::size_t cursor = 0;
    std::size_t present = 0;
    std::size_t absent = 0;
    for (std::size_t f : fresh) {
      const Letter& l = pat[f];
      std::size_t occ = 0;
      std::size_t pos = 0;
      for (std::size_t k = 0; k < other.size(); ++k) {
        if (other[k] == l) {
          ++occ;
          pos = k;
        }
      }
      if (occ > 1) {
        return {};
      }
      if (occ == 0) {
        ++absent;
        continue;
      }
      if (present > 0) {
        if (pos <= cursor) {
          return {};
        }
        for (std::size_t k = cursor + 1; k < pos; ++k) {
          if (!bound_to_empty(other[k])) {
            return {};
          }
        }
      }
      cursor = pos;
      ++present;
    }
    if (present > 0 && absent > 0) {
      return {};
    }
    return fresh;
  }

  // needed: total image length already committed to pattern positions >= pi.
  void dfs(std::size_t pi, std::size_t ti, std::size_t needed) {
    if (!keep_going) {
      return;
    }
    if (!budget.spend(steps)) {
      budget_ok = false;
      keep_going = false;
      return;
    }
    if (ti + needed > target.size()) {
      return;
    }
    if (pi == pat.size()) {
      if (!cb(bound, ti)) {
        keep_going = false;
      }
      return;
    }
    const Letter& l = pat[pi];
    auto it = bound.find(l);
    if (it != bound.end()) {
      const Word& img = it->second;
      if (image_fits(img, ti)) {
        dfs(pi + 1, ti + img.size(), needed - img.size());
      }
      return;
    }

    std::vector<std::size_t> run = collapsible_run(pi);
    if (!run.empty()) {
      std::size_t next = run.back() + 1;
      for (std::size_t f : run) {
        bound[pat[f]] = Word();
      }
      for (std::size_t len = 0; ti + len + needed <= target.size(); ++len) {
        if (len > 0) {
          std::vector<Letter> block(
              target.begin() + static_cast<std::ptrdiff_t>(ti),
              target.begin() + static_cast<std::ptrdiff_t>(ti + len));
          bound[pat[run.front()]] = Word(std::move(block));
        }
        dfs(next, ti + len, needed);
        if (!keep_going) {
          return;
        }
      }
      for (std::size_t f : run) {
        bound.erase(pat[f]);
      }
      return;
    }

    std::size_t times = later[pi];
    bound[l] = Word();  // empty image first
    dfs(pi + 1, ti, needed);
    if (!keep_going) {
      return;
    }
    bound.erase(l);
    for (std::size_t len = 1; ti + len + needed + times * len <= target.size();
         ++len) {
      if (times > 0 && !recurs(ti, len, ti + len, times)) {
        continue;
      }
      std::vector<Letter> img(target.begin() + static_cast<std::ptrdiff_t>(ti),
                              target.begin() +
                                  static_cast<std::ptrdiff_t>(ti + len));
      bound[l] = Word(std::move(img));
      dfs(pi + 1, ti + len, needed + times * len);
      if (!keep_going) {
        return;
      }
      bound.erase(l);
    }
  }
};

}  // namespace

bool for_each_match(
    const Word& pattern, const Word& target, std::size_t start,
    const Word& other,
    const std::function<bool(const std::map<Letter, Word>&, std::size_t)>& cb,
    const Budget& budget, std::uint64_t& steps) {
  if (start > target.size()) {
    return true;
  }
  Matcher m{pattern.letters(), target, other, cb, budget, steps,
            {},      {},     true,  true};
  m.init();
  m.dfs(0, start, 0);
  return m.budget_ok;
}

}  // namespace varkit
