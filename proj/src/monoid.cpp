#include "varkit/monoid.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "varkit/matching.hpp"

namespace varkit {

FiniteMonoid::FiniteMonoid(int size, std::vector<int> table, int one, int zero,
                           std::vector<std::string> labels)
    : size_(size),
      table_(std::move(table)),
      one_(one),
      zero_(zero),
      labels_(std::move(labels)) {
  if (size_ <= 0) {
    throw std::invalid_argument("monoid must have at least one element");
  }
  if (table_.size() != static_cast<std::size_t>(size_) * size_) {
    throw std::invalid_argument("multiplication table has wrong shape");
  }
  for (int v : table_) {
    if (v < 0 || v >= size_) {
      throw std::invalid_argument("table entry out of range");
    }
  }
  if (labels_.empty()) {
    for (int i = 0; i < size_; ++i) {
      labels_.push_back("e" + std::to_string(i));
    }
  }
  if (labels_.size() != static_cast<std::size_t>(size_)) {
    throw std::invalid_argument("label count does not match size");
  }
  if (one_ < 0 || one_ >= size_) {
    throw std::invalid_argument("identity id out of range");
  }
  for (int a = 0; a < size_; ++a) {
    if (mul(one_, a) != a || mul(a, one_) != a) {
      throw std::invalid_argument("designated identity is not two-sided");
    }
  }
  if (zero_ >= 0) {
    if (zero_ >= size_) {
      throw std::invalid_argument("zero id out of range");
    }
    for (int a = 0; a < size_; ++a) {
      if (mul(zero_, a) != zero_ || mul(a, zero_) != zero_) {
        throw std::invalid_argument("designated zero is not absorbing");
      }
    }
  }
}

bool FiniteMonoid::is_associative() const {
  for (int a = 0; a < size_; ++a) {
    for (int b = 0; b < size_; ++b) {
      int ab = mul(a, b);
      for (int c = 0; c < size_; ++c) {
        if (mul(ab, c) != mul(a, mul(b, c))) {
          return false;
        }
      }
    }
  }
  return true;
}

int FactorMonoid::id_of(const Word& w) const {
  auto it = element_of_factor.find(w);
  return it == element_of_factor.end() ? -1 : it->second;
}

FactorMonoid factor_monoid(const std::vector<Word>& ws) {
  if (ws.empty()) {
    throw std::invalid_argument("factor_monoid: word set must be non-empty");
  }
  for (const Word& w : ws) {
    if (w.empty()) {
      throw std::invalid_argument("factor_monoid: words must be non-empty");
    }
  }
  FactorMonoid fm;
  std::set<Word> word_set(ws.begin(), ws.end());
  fm.words.assign(word_set.begin(), word_set.end());

  std::set<Word> fs = factors(fm.words);
  std::vector<Word> sorted(fs.begin(), fs.end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const Word& a, const Word& b) {
                     if (a.size() != b.size()) {
                       return a.size() < b.size();
                     }
                     return a < b;
                   });

  int size = static_cast<int>(sorted.size()) + 2;
  fm.element_words.resize(static_cast<std::size_t>(size));
  fm.element_words[1] = Word();
  fm.element_of_factor[Word()] = 1;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    int id = static_cast<int>(i) + 2;
    fm.element_words[static_cast<std::size_t>(id)] = sorted[i];
    fm.element_of_factor[sorted[i]] = id;
  }

  std::vector<int> table(static_cast<std::size_t>(size) * size, 0);
  std::vector<std::string> labels(static_cast<std::size_t>(size));
  labels[0] = "0";
  labels[1] = "1";
  for (int id = 2; id < size; ++id) {
    labels[static_cast<std::size_t>(id)] =
        fm.element_words[static_cast<std::size_t>(id)].compact();
  }
  auto at = [&table, size](int a, int b) -> int& {
    return table[static_cast<std::size_t>(a) * size + b];
  };
  for (int a = 1; a < size; ++a) {
    for (int b = 1; b < size; ++b) {
      Word prod = fm.element_words[static_cast<std::size_t>(a)] +
                  fm.element_words[static_cast<std::size_t>(b)];
      auto it = fm.element_of_factor.find(prod);
      at(a, b) = it == fm.element_of_factor.end() ? 0 : it->second;
    }
  }
  fm.monoid = FiniteMonoid(size, std::move(table), 1, 0, std::move(labels));
  return fm;
}

std::string serialize(const FiniteMonoid& m) {
  std::ostringstream out;
  out << "monoid " << m.size() << " one=" << m.one() << " zero=";
  if (m.has_zero()) {
    out << m.zero();
  } else {
    out << "-";
  }
  out << "\n";
  for (int a = 0; a < m.size(); ++a) {
    for (int b = 0; b < m.size(); ++b) {
      if (b > 0) {
        out << ' ';
      }
      out << m.mul(a, b);
    }
    out << "\n";
  }
  for (int a = 0; a < m.size(); ++a) {
    out << a << ' ' << m.label(a) << "\n";
  }
  return out.str();
}

FiniteMonoid parse_monoid(const std::string& text) {
  std::istringstream in(text);
  std::string tag;
  int size = 0;
  std::string one_field;
  std::string zero_field;
  if (!(in >> tag >> size >> one_field >> zero_field) || tag != "monoid") {
    throw std::invalid_argument("parse_monoid: bad header");
  }
  auto field_value = [](const std::string& f, const char* name) {
    std::string prefix = std::string(name) + "=";
    if (f.rfind(prefix, 0) != 0) {
      throw std::invalid_argument("parse_monoid: expected " + prefix);
    }
    std::string v = f.substr(prefix.size());
    if (v == "-") {
      return -1;
    }
    return std::stoi(v);
  };
  int one = field_value(one_field, "one");
  int zero = field_value(zero_field, "zero");
  std::vector<int> table(static_cast<std::size_t>(size) * size);
  for (int& v : table) {
    if (!(in >> v)) {
      throw std::invalid_argument("parse_monoid: truncated table");
    }
  }
  std::vector<std::string> labels(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) {
    int id = 0;
    std::string label;
    if (!(in >> id >> label) || id != i) {
      throw std::invalid_argument("parse_monoid: bad label line");
    }
    labels[static_cast<std::size_t>(i)] = label;
  }
  return FiniteMonoid(size, std::move(table), one, zero, std::move(labels));
}

namespace {

std::vector<Letter> letters_in_order(const Identity& id) {
  std::vector<Letter> out;
  std::set<Letter> seen;
  for (const Word* side : {&id.lhs, &id.rhs}) {
    for (const Letter& l : *side) {
      if (seen.insert(l).second) {
        out.push_back(l);
      }
    }
  }
  return out;
}

// Fails-witness when the two sides do not use the same letters: the first
// one-sided letter goes to zero, everything else to the identity.
Verdict content_mismatch_verdict(const FiniteMonoid& m, const Identity& id) {
  WordAnalysis au = analyze(id.lhs);
  WordAnalysis av = analyze(id.rhs);
  Verdict v = Verdict::make_fails("sides use different letters");
  v.violated = id;
  std::map<Letter, int> assignment;
  bool zero_placed = false;
  for (const Letter& l : letters_in_order(id)) {
    bool asymmetric =
        (au.content.count(l) > 0) != (av.content.count(l) > 0);
    if (asymmetric && !zero_placed) {
      assignment[l] = m.zero();
      zero_placed = true;
    } else {
      assignment[l] = m.one();
    }
  }
  v.assignment = std::move(assignment);
  return v;
}

int eval_word(const FiniteMonoid& m, const Word& w,
              const std::map<Letter, int>& assignment) {
  int acc = m.one();
  for (const Letter& l : w) {
    acc = m.mul(acc, assignment.at(l));
  }
  return acc;
}

struct ExhaustiveSearch {
  const FiniteMonoid& m;
  const Identity& id;
  const Budget& budget;
  std::uint64_t steps = 0;

  std::vector<Letter> letters;
  std::map<Letter, int> assignment;
  Verdict result = Verdict::make_holds();
  bool done = false;

  // Product of the images of the longest prefix whose letters are all
  // assigned; -1 when the first unassigned letter comes before a zero.
  int prefix_value(const Word& w) const {
    int acc = m.one();
    for (const Letter& l : w) {
      auto it = assignment.find(l);
      if (it == assignment.end()) {
        return -1;
      }
      acc = m.mul(acc, it->second);
      if (m.has_zero() && acc == m.zero()) {
        return acc;
      }
    }
    return acc;
  }

  void dfs(std::size_t i) {
    if (done) {
      return;
    }
    if (!budget.spend(steps)) {
      result = Verdict::make_unknown("assignment budget exhausted");
      done = true;
      return;
    }
    if (i == letters.size()) {
      int lv = eval_word(m, id.lhs, assignment);
      int rv = eval_word(m, id.rhs, assignment);
      if (lv != rv) {
        result = Verdict::make_fails("distinguishing assignment found");
        result.violated = id;
        result.assignment = assignment;
        done = true;
      }
      return;
    }
    if (m.has_zero()) {
      // Once both sides already hit the zero, no extension can tell them
      // apart.
      int lp = prefix_value(id.lhs);
      int rp = prefix_value(id.rhs);
      if (lp == m.zero() && rp == m.zero()) {
        return;
      }
    }
    for (int e = 0; e < m.size(); ++e) {
      if (m.has_zero() && e == m.zero()) {
        continue;
      }
      assignment[letters[i]] = e;
      dfs(i + 1);
      if (done) {
        return;
      }
    }
    assignment.erase(letters[i]);
  }
};

Verdict satisfies_exhaustive(const FiniteMonoid& m, const Identity& id,
                             const Budget& budget) {
  if (m.size() == 1) {
    return Verdict::make_holds();
  }
  WordAnalysis au = analyze(id.lhs);
  WordAnalysis av = analyze(id.rhs);
  if (m.has_zero() && m.zero() != m.one() && au.content != av.content) {
    return content_mismatch_verdict(m, id);
  }
  ExhaustiveSearch search{m, id, budget, 0, {}, {},
                          Verdict::make_holds(), false};
  search.letters = letters_in_order(id);
  search.dfs(0);
  return search.result;
}

Verdict satisfies_matching(const FactorMonoid& fm, const Identity& id,
                           const Budget& budget) {
  WordAnalysis au = analyze(id.lhs);
  WordAnalysis av = analyze(id.rhs);
  if (au.content != av.content) {
    return content_mismatch_verdict(fm.monoid, id);
  }
  std::uint64_t steps = 0;
  Verdict result = Verdict::make_holds();
  bool found = false;
  for (int side = 0; side < 2 && !found; ++side) {
    const Word& u = side == 0 ? id.lhs : id.rhs;
    const Word& v = side == 0 ? id.rhs : id.lhs;
    for (const Word& host : fm.words) {
      if (found) {
        break;
      }
      for (std::size_t start = 0; start <= host.size() && !found; ++start) {
        bool ok = for_each_match(
            u, host, start, v,
            [&](const std::map<Letter, Word>& bound, std::size_t end) {
              Word img_u = factor_at(host, start, end - start);
              Substitution sub;
              for (const auto& [l, w] : bound) {
                sub.set(l, w);
              }
              Word img_v = sub.apply(v);
              if (img_v != img_u) {
                result = Verdict::make_fails(
                    "one side embeds as " + img_u.compact() +
                    " but the other evaluates to " +
                    (fm.id_of(img_v) >= 0 ? img_v.compact() : "0"));
                result.violated = id;
                std::map<Letter, int> assignment;
                for (const auto& [l, w] : bound) {
                  assignment[l] = fm.id_of(w);
                }
                result.assignment = std::move(assignment);
                found = true;
                return false;
              }
              return true;
            },
            budget, steps);
        if (!ok && !found) {
          return Verdict::make_unknown("matching budget exhausted");
        }
      }
    }
  }
  return result;
}

}  // namespace

Verdict satisfies(const FiniteMonoid& m, const Identity& id,
                  const Budget& budget) {
  return satisfies_exhaustive(m, id, budget);
}

Verdict satisfies(const FactorMonoid& fm, const Identity& id,
                  Strategy strategy, const Budget& budget) {
  if (strategy == Strategy::automatic) {
    double combos = 1;
    std::size_t letters = letters_in_order(id).size();
    for (std::size_t i = 0; i < letters; ++i) {
      combos *= fm.monoid.size() - 1;
    }
    strategy =
        combos <= 250000 ? Strategy::exhaustive : Strategy::factor_matching;
  }
  if (strategy == Strategy::exhaustive) {
    return satisfies_exhaustive(fm.monoid, id, budget);
  }
  return satisfies_matching(fm, id, budget);
}

namespace {

template <typename Fn>
Verdict basis_loop(const VarietyBasis& b, Fn&& check_one) {
  bool any_unknown = false;
  std::string unknown_note;
  for (const Identity& id : b.instantiate()) {
    Verdict v = check_one(id);
    if (v.fails()) {
      if (!v.violated) {
        v.violated = id;
      }
      return v;
    }
    if (v.unknown()) {
      any_unknown = true;
      unknown_note = v.note;
    }
  }
  if (any_unknown) {
    return Verdict::make_unknown(unknown_note);
  }
  if (b.truncated()) {
    return Verdict::make_unknown(
        "all instances up to the bound hold, but the basis has schema "
        "families truncated at bound " +
        std::to_string(b.bound));
  }
  return Verdict::make_holds();
}

}  // namespace

Verdict satisfies_basis(const FiniteMonoid& m, const VarietyBasis& b,
                        const Budget& budget) {
  return basis_loop(
      b, [&](const Identity& id) { return satisfies(m, id, budget); });
}

Verdict satisfies_basis(const FactorMonoid& fm, const VarietyBasis& b,
                        Strategy strategy, const Budget& budget) {
  return basis_loop(b, [&](const Identity& id) {
    return satisfies(fm, id, strategy, budget);
  });
}

Classification classify(const FiniteMonoid& m) {
  Classification out;
  out.aperiodic = true;
  out.index = 1;
  for (int a = 0; a < m.size(); ++a) {
    std::vector<int> seen_at(static_cast<std::size_t>(m.size()), -1);
    int cur = a;
    int step = 1;
    while (seen_at[static_cast<std::size_t>(cur)] < 0) {
      seen_at[static_cast<std::size_t>(cur)] = step;
      cur = m.mul(cur, a);
      ++step;
    }
    int first = seen_at[static_cast<std::size_t>(cur)];
    int period = step - first;
    if (period != 1) {
      out.aperiodic = false;
    } else {
      out.index = std::max(out.index, first);
    }
  }
  if (!out.aperiodic) {
    out.index = 0;
  }
  out.central_idempotents = true;
  for (int e = 0; e < m.size() && out.central_idempotents; ++e) {
    if (m.mul(e, e) != e) {
      continue;
    }
    for (int b = 0; b < m.size(); ++b) {
      if (m.mul(e, b) != m.mul(b, e)) {
        out.central_idempotents = false;
        break;
      }
    }
  }
  return out;
}

FiniteMonoid submonoid(const FiniteMonoid& m, const std::vector<int>& gens) {
  for (int g : gens) {
    if (g < 0 || g >= m.size()) {
      throw std::invalid_argument("submonoid: generator id out of range");
    }
  }
  std::set<int> closure{m.one()};
  closure.insert(gens.begin(), gens.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> members(closure.begin(), closure.end());
    for (int a : members) {
      for (int b : members) {
        if (closure.insert(m.mul(a, b)).second) {
          grew = true;
        }
      }
    }
  }
  std::vector<int> members(closure.begin(), closure.end());
  std::map<int, int> new_id;
  for (std::size_t i = 0; i < members.size(); ++i) {
    new_id[members[i]] = static_cast<int>(i);
  }
  int size = static_cast<int>(members.size());
  std::vector<int> table(static_cast<std::size_t>(size) * size);
  std::vector<std::string> labels;
  for (int a = 0; a < size; ++a) {
    labels.push_back(m.label(members[static_cast<std::size_t>(a)]));
    for (int b = 0; b < size; ++b) {
      table[static_cast<std::size_t>(a) * size + b] =
          new_id.at(m.mul(members[static_cast<std::size_t>(a)],
                          members[static_cast<std::size_t>(b)]));
    }
  }
  int one = new_id.at(m.one());
  int zero = m.has_zero() && closure.count(m.zero()) ? new_id.at(m.zero()) : -1;
  return FiniteMonoid(size, std::move(table), one, zero, std::move(labels));
}

namespace {

// Iterated invariant refinement; comparable across monoids because colors
// are value hashes, not class indices.
std::vector<std::uint64_t> element_colors(const FiniteMonoid& m) {
  auto mix = [](std::uint64_t h, std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  };
  std::vector<std::uint64_t> color(static_cast<std::size_t>(m.size()));
  for (int a = 0; a < m.size(); ++a) {
    std::vector<int> seen_at(static_cast<std::size_t>(m.size()), -1);
    int cur = a;
    int step = 1;
    while (seen_at[static_cast<std::size_t>(cur)] < 0) {
      seen_at[static_cast<std::size_t>(cur)] = step;
      cur = m.mul(cur, a);
      ++step;
    }
    int first = seen_at[static_cast<std::size_t>(cur)];
    int period = step - first;
    std::uint64_t h = 0x12345;
    h = mix(h, a == m.one() ? 2 : 3);
    h = mix(h, m.mul(a, a) == a ? 5 : 7);
    h = mix(h, static_cast<std::uint64_t>(first));
    h = mix(h, static_cast<std::uint64_t>(period));
    color[static_cast<std::size_t>(a)] = h;
  }
  for (int round = 0; round < m.size(); ++round) {
    std::vector<std::uint64_t> next(color.size());
    for (int a = 0; a < m.size(); ++a) {
      std::vector<std::uint64_t> row;
      row.reserve(static_cast<std::size_t>(m.size()));
      for (int b = 0; b < m.size(); ++b) {
        std::uint64_t h = 0x777;
        h = mix(h, color[static_cast<std::size_t>(b)]);
        h = mix(h, color[static_cast<std::size_t>(m.mul(a, b))]);
        h = mix(h, color[static_cast<std::size_t>(m.mul(b, a))]);
        row.push_back(h);
      }
      std::sort(row.begin(), row.end());
      std::uint64_t h = color[static_cast<std::size_t>(a)];
      for (std::uint64_t v : row) {
        h = mix(h, v);
      }
      next[static_cast<std::size_t>(a)] = h;
    }
    if (next == color) {
      break;
    }
    color = std::move(next);
  }
  return color;
}

struct IsoSearch {
  const FiniteMonoid& a;
  const FiniteMonoid& b;
  std::vector<int> image;     // a-id -> b-id or -1
  std::vector<int> preimage;  // b-id -> a-id or -1
  std::vector<std::uint64_t> ca;
  std::vector<std::uint64_t> cb;

  bool assign(int x, int y, std::vector<std::pair<int, int>>& log) {
    std::deque<std::pair<int, int>> todo{{x, y}};
    while (!todo.empty()) {
      auto [p, q] = todo.front();
      todo.pop_front();
      if (image[static_cast<std::size_t>(p)] == q) {
        continue;
      }
      if (image[static_cast<std::size_t>(p)] != -1 ||
          preimage[static_cast<std::size_t>(q)] != -1 ||
          ca[static_cast<std::size_t>(p)] != cb[static_cast<std::size_t>(q)]) {
        return false;
      }
      image[static_cast<std::size_t>(p)] = q;
      preimage[static_cast<std::size_t>(q)] = p;
      log.emplace_back(p, q);
      for (int r = 0; r < a.size(); ++r) {
        if (image[static_cast<std::size_t>(r)] == -1) {
          continue;
        }
        int ri = image[static_cast<std::size_t>(r)];
        todo.emplace_back(a.mul(p, r), b.mul(q, ri));
        todo.emplace_back(a.mul(r, p), b.mul(ri, q));
      }
    }
    return true;
  }

  void undo(std::vector<std::pair<int, int>>& log, std::size_t from) {
    while (log.size() > from) {
      auto [p, q] = log.back();
      log.pop_back();
      image[static_cast<std::size_t>(p)] = -1;
      preimage[static_cast<std::size_t>(q)] = -1;
    }
  }

  bool search(std::vector<std::pair<int, int>>& log) {
    int next = -1;
    for (int p = 0; p < a.size(); ++p) {
      if (image[static_cast<std::size_t>(p)] == -1) {
        next = p;
        break;
      }
    }
    if (next == -1) {
      return true;
    }
    for (int q = 0; q < b.size(); ++q) {
      if (preimage[static_cast<std::size_t>(q)] != -1 ||
          cb[static_cast<std::size_t>(q)] !=
              ca[static_cast<std::size_t>(next)]) {
        continue;
      }
      std::size_t mark = log.size();
      if (assign(next, q, log) && search(log)) {
        return true;
      }
      undo(log, mark);
    }
    return false;
  }
};

}  // namespace

bool isomorphic(const FiniteMonoid& a, const FiniteMonoid& b) {
  if (a.size() != b.size()) {
    return false;
  }
  IsoSearch s{a, b, {}, {}, {}, {}};
  s.ca = element_colors(a);
  s.cb = element_colors(b);
  std::vector<std::uint64_t> sa = s.ca;
  std::vector<std::uint64_t> sb = s.cb;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) {
    return false;
  }
  s.image.assign(static_cast<std::size_t>(a.size()), -1);
  s.preimage.assign(static_cast<std::size_t>(b.size()), -1);
  std::vector<std::pair<int, int>> log;
  if (!s.assign(a.one(), b.one(), log)) {
    return false;
  }
  return s.search(log);
}

FiniteMonoid reverse_monoid(const FiniteMonoid& m) {
  int size = m.size();
  std::vector<int> table(static_cast<std::size_t>(size) * size);
  for (int a = 0; a < size; ++a) {
    for (int b = 0; b < size; ++b) {
      table[static_cast<std::size_t>(a) * size + b] = m.mul(b, a);
    }
  }
  return FiniteMonoid(size, std::move(table), m.one(), m.zero(), m.labels());
}

FactorMonoid reverse_monoid(const FactorMonoid& fm) {
  std::vector<Word> reversed;
  for (const Word& w : fm.words) {
    reversed.push_back(reverse(w));
  }
  return factor_monoid(reversed);
}

namespace {

using Partition = std::vector<int>;  // element -> class id (canonical)

Partition canonical_partition(std::vector<int> cls) {
  std::map<int, int> renumber;
  for (int& c : cls) {
    auto it = renumber.find(c);
    if (it == renumber.end()) {
      int id = static_cast<int>(renumber.size());
      renumber[c] = id;
      c = id;
    } else {
      c = it->second;
    }
  }
  return cls;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      x = parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    }
    return x;
  }
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) {
      return false;
    }
    parent[static_cast<std::size_t>(std::max(x, y))] = std::min(x, y);
    return true;
  }
};

// Smallest congruence containing the given pairs.
Partition congruence_closure(const FiniteMonoid& m,
                             const std::vector<std::pair<int, int>>& pairs) {
  UnionFind uf(m.size());
  std::deque<std::pair<int, int>> todo(pairs.begin(), pairs.end());
  while (!todo.empty()) {
    auto [x, y] = todo.front();
    todo.pop_front();
    if (!uf.unite(x, y)) {
      continue;
    }
    for (int s = 0; s < m.size(); ++s) {
      todo.emplace_back(m.mul(s, x), m.mul(s, y));
      todo.emplace_back(m.mul(x, s), m.mul(y, s));
    }
  }
  std::vector<int> cls(static_cast<std::size_t>(m.size()));
  for (int i = 0; i < m.size(); ++i) {
    cls[static_cast<std::size_t>(i)] = uf.find(i);
  }
  return canonical_partition(std::move(cls));
}

std::vector<Partition> all_congruences(const FiniteMonoid& m,
                                       std::size_t cap = 20000) {
  std::vector<Partition> principal;
  std::set<Partition> seen;
  for (int x = 0; x < m.size(); ++x) {
    for (int y = x + 1; y < m.size(); ++y) {
      Partition p = congruence_closure(m, {{x, y}});
      if (seen.insert(p).second) {
        principal.push_back(p);
      }
    }
  }
  std::deque<Partition> queue(principal.begin(), principal.end());
  while (!queue.empty() && seen.size() < cap) {
    Partition cur = queue.front();
    queue.pop_front();
    for (const Partition& p : principal) {
      // Join: union of the two partitions' pairs, re-closed.
      std::vector<std::pair<int, int>> pairs;
      auto add_pairs = [&pairs, &m](const Partition& part) {
        std::map<int, int> rep;
        for (int i = 0; i < m.size(); ++i) {
          auto it = rep.find(part[static_cast<std::size_t>(i)]);
          if (it == rep.end()) {
            rep[part[static_cast<std::size_t>(i)]] = i;
          } else {
            pairs.emplace_back(it->second, i);
          }
        }
      };
      add_pairs(cur);
      add_pairs(p);
      Partition j = congruence_closure(m, pairs);
      if (seen.insert(j).second) {
        queue.push_back(std::move(j));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

FiniteMonoid quotient(const FiniteMonoid& m, const Partition& part) {
  int classes = *std::max_element(part.begin(), part.end()) + 1;
  std::vector<int> rep(static_cast<std::size_t>(classes), -1);
  for (int i = 0; i < m.size(); ++i) {
    int c = part[static_cast<std::size_t>(i)];
    if (rep[static_cast<std::size_t>(c)] < 0) {
      rep[static_cast<std::size_t>(c)] = i;
    }
  }
  std::vector<int> table(static_cast<std::size_t>(classes) * classes);
  std::vector<std::string> labels;
  for (int a = 0; a < classes; ++a) {
    labels.push_back(m.label(rep[static_cast<std::size_t>(a)]) + "~");
    for (int b = 0; b < classes; ++b) {
      int prod = m.mul(rep[static_cast<std::size_t>(a)],
                       rep[static_cast<std::size_t>(b)]);
      table[static_cast<std::size_t>(a) * classes + b] =
          part[static_cast<std::size_t>(prod)];
    }
  }
  int one = part[static_cast<std::size_t>(m.one())];
  int zero = m.has_zero() ? part[static_cast<std::size_t>(m.zero())] : -1;
  if (zero == one) {
    zero = classes == 1 ? zero : -1;
  }
  return FiniteMonoid(classes, std::move(table), one, zero, std::move(labels));
}

std::vector<std::vector<int>> all_submonoid_member_sets(const FiniteMonoid& m) {
  std::set<std::vector<int>> seen;
  int n = m.size();
  std::vector<std::vector<int>> out;
  for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
    std::vector<int> gens;
    for (int i = 0; i < n; ++i) {
      if (mask & (1ull << i)) {
        gens.push_back(i);
      }
    }
    std::set<int> closure{m.one()};
    closure.insert(gens.begin(), gens.end());
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<int> members(closure.begin(), closure.end());
      for (int a : members) {
        for (int b : members) {
          if (closure.insert(m.mul(a, b)).second) {
            grew = true;
          }
        }
      }
    }
    std::vector<int> members(closure.begin(), closure.end());
    if (seen.insert(members).second) {
      out.push_back(std::move(members));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return out;
}

}  // namespace

bool divides(const FiniteMonoid& a, const FiniteMonoid& b,
             int max_congruence_size) {
  if (a.size() > b.size()) {
    return false;
  }
  if (b.size() > 14) {
    return a.size() == b.size() && isomorphic(a, b);
  }
  for (const std::vector<int>& members : all_submonoid_member_sets(b)) {
    if (static_cast<int>(members.size()) < a.size()) {
      continue;
    }
    FiniteMonoid s = submonoid(b, members);
    if (s.size() == a.size()) {
      if (isomorphic(a, s)) {
        return true;
      }
      continue;
    }
    if (s.size() > max_congruence_size) {
      continue;
    }
    for (const Partition& p : all_congruences(s)) {
      int classes = *std::max_element(p.begin(), p.end()) + 1;
      if (classes != a.size()) {
        continue;
      }
      if (isomorphic(a, quotient(s, p))) {
        return true;
      }
    }
  }
  return false;
}

std::optional<Identity> separating_identity(const FiniteMonoid& a,
                                            const FiniteMonoid& b,
                                            int max_letters, int max_side_len) {
  std::vector<Letter> alphabet{Letter("x"), Letter("y"), Letter("z")};
  max_letters = std::min<int>(max_letters, static_cast<int>(alphabet.size()));
  for (int n = 1; n <= max_letters; ++n) {
    std::vector<Word> words;
    std::vector<Word> frontier{Word()};
    words.push_back(Word());
    for (int len = 1; len <= max_side_len; ++len) {
      std::vector<Word> next;
      for (const Word& w : frontier) {
        for (int i = 0; i < n; ++i) {
          next.push_back(w + alphabet[static_cast<std::size_t>(i)]);
        }
      }
      words.insert(words.end(), next.begin(), next.end());
      frontier = std::move(next);
    }
    for (std::size_t i = 0; i < words.size(); ++i) {
      for (std::size_t j = i + 1; j < words.size(); ++j) {
        Identity id{words[i], words[j]};
        if (satisfies(b, id).holds() && satisfies(a, id).fails()) {
          return id;
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace varkit
