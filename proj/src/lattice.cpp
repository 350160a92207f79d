#include "varkit/lattice.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace varkit {

FinitePoset::FinitePoset(std::vector<std::string> labels,
                         std::vector<std::vector<bool>> leq)
    : labels_(std::move(labels)), leq_(std::move(leq)) {
  std::size_t n = labels_.size();
  if (leq_.size() != n) {
    throw std::invalid_argument("poset: relation has wrong shape");
  }
  for (const auto& row : leq_) {
    if (row.size() != n) {
      throw std::invalid_argument("poset: relation has wrong shape");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!leq_[i][i]) {
      throw std::invalid_argument("poset: relation is not reflexive");
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && leq_[i][j] && leq_[j][i]) {
        throw std::invalid_argument("poset: relation is not antisymmetric");
      }
      for (std::size_t k = 0; k < n; ++k) {
        if (leq_[i][j] && leq_[j][k] && !leq_[i][k]) {
          throw std::invalid_argument("poset: relation is not transitive");
        }
      }
    }
  }
}

bool FinitePoset::covers(int j, int i) const {
  if (i == j || !leq(i, j)) {
    return false;
  }
  for (int k = 0; k < size(); ++k) {
    if (k != i && k != j && leq(i, k) && leq(k, j)) {
      return false;
    }
  }
  return true;
}

MeetJoin lattice_ops(const FinitePoset& p) {
  int n = p.size();
  MeetJoin out;
  out.is_lattice = true;
  out.meet.assign(static_cast<std::size_t>(n),
                  std::vector<int>(static_cast<std::size_t>(n), -1));
  out.join = out.meet;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      int glb = -1;
      int lub = -1;
      for (int g = 0; g < n; ++g) {
        if (p.leq(g, i) && p.leq(g, j)) {
          bool greatest = true;
          for (int k = 0; k < n; ++k) {
            if (p.leq(k, i) && p.leq(k, j) && !p.leq(k, g)) {
              greatest = false;
              break;
            }
          }
          if (greatest) {
            glb = g;
            break;
          }
        }
      }
      for (int g = 0; g < n; ++g) {
        if (p.leq(i, g) && p.leq(j, g)) {
          bool least = true;
          for (int k = 0; k < n; ++k) {
            if (p.leq(i, k) && p.leq(j, k) && !p.leq(g, k)) {
              least = false;
              break;
            }
          }
          if (least) {
            lub = g;
            break;
          }
        }
      }
      out.meet[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = glb;
      out.join[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = lub;
      if (glb < 0 || lub < 0) {
        out.is_lattice = false;
        if (!out.witness) {
          out.witness = std::make_pair(i, j);
        }
      }
    }
  }
  return out;
}

namespace {

// Classifies closed 5-element subsets.  Such a subset has a least and a
// greatest element; it is a pentagon exactly when its three middle elements
// contain one comparable pair, and a diamond when they contain none (the
// remaining meets and joins are then forced by closure).
std::optional<std::array<int, 5>> find_closed_five(const FinitePoset& p,
                                                   const MeetJoin& mj,
                                                   int comparable_pairs) {
  int n = p.size();
  auto meet = [&mj](int x, int y) {
    return mj.meet[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
  };
  auto join = [&mj](int x, int y) {
    return mj.join[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
  };
  std::array<int, 5> pick{};
  std::function<std::optional<std::array<int, 5>>(int, int)> rec =
      [&](int depth, int from) -> std::optional<std::array<int, 5>> {
    if (depth == 5) {
      auto inside = [&pick](int v) {
        for (int s : pick) {
          if (s == v) {
            return true;
          }
        }
        return false;
      };
      int bottom = pick[0];
      int top = pick[0];
      for (int a : pick) {
        bottom = meet(bottom, a);
        top = join(top, a);
      }
      if (!inside(bottom) || !inside(top)) {
        return std::nullopt;
      }
      for (int a : pick) {
        for (int b : pick) {
          if (!inside(meet(a, b)) || !inside(join(a, b))) {
            return std::nullopt;
          }
        }
      }
      std::array<int, 3> mid{};
      int k = 0;
      for (int a : pick) {
        if (a != bottom && a != top) {
          if (k == 3) {
            return std::nullopt;  // bottom or top coincides with a middle
          }
          mid[static_cast<std::size_t>(k++)] = a;
        }
      }
      if (k != 3) {
        return std::nullopt;
      }
      int comparable = 0;
      int ca = -1;
      int cc = -1;
      for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
          if (p.leq(mid[static_cast<std::size_t>(i)],
                    mid[static_cast<std::size_t>(j)])) {
            ++comparable;
            ca = mid[static_cast<std::size_t>(i)];
            cc = mid[static_cast<std::size_t>(j)];
          } else if (p.leq(mid[static_cast<std::size_t>(j)],
                           mid[static_cast<std::size_t>(i)])) {
            ++comparable;
            ca = mid[static_cast<std::size_t>(j)];
            cc = mid[static_cast<std::size_t>(i)];
          }
        }
      }
      if (comparable != comparable_pairs) {
        return std::nullopt;
      }
      if (comparable_pairs == 1) {
        int side = -1;
        for (int a : mid) {
          if (a != ca && a != cc) {
            side = a;
          }
        }
        return std::array<int, 5>{bottom, ca, cc, side, top};
      }
      return std::array<int, 5>{bottom, mid[0], mid[1], mid[2], top};
    }
    for (int v = from; v < n; ++v) {
      pick[static_cast<std::size_t>(depth)] = v;
      if (auto got = rec(depth + 1, v + 1)) {
        return got;
      }
    }
    return std::nullopt;
  };
  return rec(0, 0);
}

}  // namespace

std::optional<std::array<int, 5>> find_sublattice_pentagon(
    const FinitePoset& p, const MeetJoin& mj) {
  return find_closed_five(p, mj, 1);
}

std::optional<std::array<int, 5>> find_sublattice_diamond(
    const FinitePoset& p, const MeetJoin& mj) {
  return find_closed_five(p, mj, 0);
}

LawReport check_laws(const FinitePoset& p, const MeetJoin& mj) {
  if (!mj.is_lattice) {
    throw std::invalid_argument("check_laws: poset is not a lattice");
  }
  int n = p.size();
  auto meet = [&mj](int x, int y) {
    return mj.meet[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
  };
  auto join = [&mj](int x, int y) {
    return mj.join[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
  };
  LawReport out;
  out.modular = true;
  out.distributive = true;
  for (int a = 0; a < n && out.modular; ++a) {
    for (int c = 0; c < n && out.modular; ++c) {
      if (!p.leq(a, c)) {
        continue;
      }
      for (int b = 0; b < n; ++b) {
        if (join(a, meet(b, c)) != meet(join(a, b), c)) {
          out.modular = false;
          out.modular_witness = {a, b, c};
          break;
        }
      }
    }
  }
  for (int a = 0; a < n && out.distributive; ++a) {
    for (int b = 0; b < n && out.distributive; ++b) {
      for (int c = 0; c < n; ++c) {
        if (meet(a, join(b, c)) != join(meet(a, b), meet(a, c))) {
          out.distributive = false;
          out.distributive_witness = {a, b, c};
          break;
        }
      }
    }
  }
  if (!out.modular) {
    out.pentagon = find_sublattice_pentagon(p, mj);
  }
  if (!out.distributive) {
    out.diamond = find_sublattice_diamond(p, mj);
  }
  return out;
}

PosetBuild build_poset(const std::vector<Descriptor>& descriptors,
                       const MembershipOracle& oracle) {
  int n = static_cast<int>(descriptors.size());
  std::vector<std::vector<Verdict>> verdicts(
      static_cast<std::size_t>(n),
      std::vector<Verdict>(static_cast<std::size_t>(n)));
  std::vector<std::vector<bool>> holds(
      static_cast<std::size_t>(n),
      std::vector<bool>(static_cast<std::size_t>(n), false));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) {
        verdicts[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            Verdict::make_holds();
        holds[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
        continue;
      }
      Verdict v = oracle(descriptors[static_cast<std::size_t>(i)],
                         descriptors[static_cast<std::size_t>(j)]);
      holds[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          v.holds();
      verdicts[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          std::move(v);
    }
  }
  // Containment is transitive, so decisive holds verdicts close up.
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (holds[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] &&
            holds[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]) {
          holds[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
              true;
        }
      }
    }
  }
  std::vector<std::string> labels;
  for (const Descriptor& d : descriptors) {
    labels.push_back(d.label);
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) {
        continue;
      }
      if (holds[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] &&
          verdicts[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
              .fails()) {
        throw std::runtime_error(
            "build_poset: contradictory decisive verdicts between " +
            labels[static_cast<std::size_t>(i)] + " and " +
            labels[static_cast<std::size_t>(j)]);
      }
      if (holds[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] &&
          holds[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]) {
        throw std::runtime_error(
            "build_poset: descriptors " + labels[static_cast<std::size_t>(i)] +
            " and " + labels[static_cast<std::size_t>(j)] +
            " define the same variety");
      }
    }
  }
  FinitePoset poset(labels, holds);
  return PosetBuild{std::move(poset), std::move(verdicts)};
}

namespace {

const FiniteMonoid* monoid_of(const Descriptor& d) {
  if (const auto* fm = std::get_if<FactorMonoid>(&d.object)) {
    return &fm->monoid;
  }
  if (const auto* m = std::get_if<FiniteMonoid>(&d.object)) {
    return m;
  }
  return nullptr;
}

Verdict check_identity_in(const Descriptor& d, const Identity& id) {
  if (const auto* fm = std::get_if<FactorMonoid>(&d.object)) {
    return satisfies(*fm, id);
  }
  return satisfies(*monoid_of(d), id);
}

// Plain-table countermodels cover laws no factor monoid can satisfy, like
// idempotency.
const std::vector<FiniteMonoid>& plain_countermodels() {
  static const std::vector<FiniteMonoid> models{two_element_semilattice()};
  return models;
}

bool refutes(const VarietyBasis& sub, const Identity& id,
             const std::vector<FactorMonoid>& countermodels) {
  for (const FiniteMonoid& m : plain_countermodels()) {
    if (satisfies_basis(m, sub).holds() && satisfies(m, id).fails()) {
      return true;
    }
  }
  for (const FactorMonoid& cm : countermodels) {
    if (satisfies_basis(cm, sub).holds() && satisfies(cm, id).fails()) {
      return true;
    }
  }
  return false;
}

Verdict basis_in_basis(const VarietyBasis& sub, const VarietyBasis& super,
                       const Caps& caps,
                       const std::vector<FactorMonoid>& countermodels) {
  std::vector<Identity> axioms = sub.instantiate();
  bool all_derived = true;
  bool any_unknown = false;
  for (const Identity& id : super.instantiate()) {
    Caps c = Caps::for_seed(id.lhs);
    c.max_word_length = std::max(c.max_word_length, 2 * id.rhs.size() + 3);
    c.max_orbit_size = caps.max_orbit_size;
    if (deducible(id.lhs, id.rhs, axioms, c)) {
      continue;
    }
    all_derived = false;
    // A model of the full basis that violates the identity certifies
    // underivability; truncated bases never reach a decisive model check.
    if (refutes(sub, id, countermodels)) {
      Verdict out = Verdict::make_fails(
          "identity not derived and a countermodel violates it");
      out.violated = id;
      return out;
    }
    any_unknown = true;
  }
  if (!all_derived || any_unknown) {
    return Verdict::make_unknown("some identities could not be derived "
                                 "within the caps");
  }
  if (super.truncated()) {
    return Verdict::make_unknown(
        "all instantiated identities derivable, but the target basis is "
        "truncated");
  }
  return Verdict::make_holds("every identity of the target basis is "
                             "derivable");
}

Verdict basis_in_monoid(const VarietyBasis& sub, const Descriptor& super,
                        const Caps& caps,
                        const std::vector<FactorMonoid>& countermodels) {
  std::vector<Identity> axioms = sub.instantiate();
  // A basis that collapses everything presents the trivial variety, which is
  // contained in every variety.
  bool decisively_not = false;
  Caps c = caps;
  c.max_word_length = std::max<std::size_t>(c.max_word_length, 4);
  if (deducible(Word({Letter("x")}), Word(), axioms, c, &decisively_not)) {
    return Verdict::make_holds("the basis derives x = 1, so it presents the "
                               "trivial variety");
  }
  // Difference search: an identity of the monoid that the basis cannot
  // derive refutes containment.
  std::vector<Letter> alphabet{Letter("x"), Letter("y")};
  std::vector<Word> words{Word()};
  std::vector<Word> frontier{Word()};
  for (int len = 1; len <= 4; ++len) {
    std::vector<Word> next;
    for (const Word& w : frontier) {
      for (const Letter& l : alphabet) {
        next.push_back(w + l);
      }
    }
    words.insert(words.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      Identity id{words[i], words[j]};
      if (!check_identity_in(super, id).holds()) {
        continue;
      }
      Caps cc = Caps::for_seed(id.lhs);
      cc.max_word_length = std::max(cc.max_word_length, 2 * id.rhs.size() + 3);
      if (deducible(id.lhs, id.rhs, axioms, cc)) {
        continue;
      }
      if (refutes(sub, id, countermodels)) {
        Verdict out = Verdict::make_fails(
            "the monoid satisfies an identity the basis does not derive");
        out.violated = id;
        return out;
      }
    }
  }
  return Verdict::make_unknown(
      "no refuting identity found; containment in a generated variety is not "
      "confirmable from a basis");
}

Verdict monoid_in_basis(const Descriptor& sub, const VarietyBasis& super,
                        const Caps& caps) {
  if (const auto* fm = std::get_if<FactorMonoid>(&sub.object)) {
    // Per-word isoterm route, cross-checked against direct satisfaction.
    Verdict via_member = member(fm->words, super, caps);
    Verdict via_satisfies = satisfies_basis(*fm, super);
    if (via_member.decisive() && via_satisfies.decisive() &&
        via_member.kind != via_satisfies.kind) {
      throw std::runtime_error(
          "membership routes disagree for " + sub.label +
          ": isoterm route says " + via_member.name() +
          ", satisfaction route says " + via_satisfies.name());
    }
    return via_member.decisive() ? via_member : via_satisfies;
  }
  return satisfies_basis(*monoid_of(sub), super);
}

Verdict monoid_in_monoid(const Descriptor& sub, const Descriptor& super,
                         const Caps& caps) {
  const FiniteMonoid& a = *monoid_of(sub);
  const FiniteMonoid& b = *monoid_of(super);
  if (divides(a, b)) {
    return Verdict::make_holds("divides the target monoid");
  }
  if (const auto* fm = std::get_if<FactorMonoid>(&sub.object)) {
    for (const Word& w : fm->words) {
      Caps c = Caps::for_seed(w);
      c.max_orbit_size = caps.max_orbit_size;
      Verdict v;
      if (const auto* sfm = std::get_if<FactorMonoid>(&super.object)) {
        v = isoterm_monoid(w, *sfm, c);
      } else {
        v = isoterm_monoid(w, b, c);
      }
      if (v.fails()) {
        v.note = "word " + w.compact() +
                 " is not an isoterm for the target variety: " + v.note;
        return v;
      }
    }
  }
  if (auto id = separating_identity(a, b)) {
    Verdict out = Verdict::make_fails(
        "the target monoid satisfies an identity this one violates");
    out.violated = *id;
    return out;
  }
  return Verdict::make_unknown("no division witness and no separating "
                               "identity within the bounds");
}

std::vector<FactorMonoid> standard_countermodels() {
  auto w = [](std::initializer_list<const char*> names) {
    std::vector<Letter> ls;
    for (const char* n : names) {
      ls.emplace_back(n);
    }
    return Word(std::move(ls));
  };
  std::vector<std::vector<Word>> sets = {
      {w({"x"})},
      {w({"x", "x"})},
      {w({"x", "y"})},
      {w({"x", "y", "x"})},
      {w({"x", "x", "y"})},
      {w({"y", "x", "x"})},
      {w({"x", "x", "y"}), w({"y", "x", "x"})},
      {w({"x", "z", "x", "y", "t", "y"})},
      {w({"x", "y", "z", "x", "y"})},
      {w({"x", "y", "t", "x", "y"})},
      {w({"x", "t", "y", "z", "x", "y"})},
      {w({"x", "y", "z", "x", "t", "y"})},
  };
  std::vector<FactorMonoid> out;
  for (const auto& s : sets) {
    out.push_back(factor_monoid(s));
  }
  return out;
}

}  // namespace

MembershipOracle default_oracle(const Caps& caps,
                                std::vector<FactorMonoid> countermodels) {
  auto models = countermodels.empty() ? standard_countermodels()
                                      : std::move(countermodels);
  return [caps, models](const Descriptor& sub,
                        const Descriptor& super) -> Verdict {
    const auto* sub_basis = std::get_if<VarietyBasis>(&sub.object);
    const auto* super_basis = std::get_if<VarietyBasis>(&super.object);
    if (sub_basis && super_basis) {
      return basis_in_basis(*sub_basis, *super_basis, caps, models);
    }
    if (sub_basis) {
      return basis_in_monoid(*sub_basis, super, caps, models);
    }
    if (super_basis) {
      return monoid_in_basis(sub, *super_basis, caps);
    }
    return monoid_in_monoid(sub, super, caps);
  };
}

FiniteMonoid trivial_monoid() {
  return FiniteMonoid(1, {0}, 0, -1, {"1"});
}

FiniteMonoid two_element_semilattice() {
  return FiniteMonoid(2, {0, 1, 1, 1}, 0, 1, {"1", "e"});
}

std::vector<Descriptor> fig1_descriptors() {
  auto w = [](std::initializer_list<const char*> names) {
    std::vector<Letter> ls;
    for (const char* n : names) {
      ls.emplace_back(n);
    }
    return Word(std::move(ls));
  };
  std::vector<Descriptor> out;
  out.push_back({"T", trivial_monoid()});
  out.push_back({"SL", two_element_semilattice()});
  out.push_back({"M(x)", factor_monoid({w({"x"})})});
  out.push_back({"M(xy)", factor_monoid({w({"x", "y"})})});
  out.push_back({"M(x^2)", factor_monoid({w({"x", "x"})})});
  out.push_back({"M(xyx)", factor_monoid({w({"x", "y", "x"})})});
  out.push_back({"M(x^2y)", factor_monoid({w({"x", "x", "y"})})});
  out.push_back({"M(yx^2)", factor_monoid({w({"y", "x", "x"})})});
  out.push_back(
      {"M(x^2y,yx^2)", factor_monoid({w({"x", "x", "y"}), w({"y", "x", "x"})})});
  return out;
}

FinitePoset fig1_reference_lattice() {
  // 0 T, 1 SL, 2 M(x), 3 M(xy), 4 M(x^2), 5 M(xyx), 6 M(x^2y), 7 M(yx^2),
  // 8 M(x^2y,yx^2), 9 and 10 the two unnamed joins of the diagram.
  std::vector<std::string> labels{"T",      "SL",      "M(x)",   "M(xy)",
                                  "M(x^2)", "M(xyx)",  "M(x^2y)", "M(yx^2)",
                                  "M(x^2y,yx^2)", "J1", "J2"};
  std::vector<std::pair<int, int>> covers{{0, 1}, {1, 2},  {2, 3},  {2, 4},
                                          {3, 5}, {3, 9},  {4, 9},  {9, 7},
                                          {9, 10}, {5, 10}, {10, 8}, {9, 6},
                                          {6, 8}, {7, 8}};
  std::size_t n = labels.size();
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    leq[i][i] = true;
  }
  for (auto [a, b] : covers) {
    leq[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = true;
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (leq[i][k] && leq[k][j]) {
          leq[i][j] = true;
        }
      }
    }
  }
  return FinitePoset(std::move(labels), std::move(leq));
}

bool fig1_expected_leq(int i, int j) {
  static const FinitePoset ref = fig1_reference_lattice();
  return ref.leq(i, j);
}

std::string to_dot(const FinitePoset& p) {
  std::ostringstream out;
  out << "digraph poset {\n  rankdir=BT;\n";
  for (int i = 0; i < p.size(); ++i) {
    out << "  n" << i << " [label=\"" << p.label(i) << "\"];\n";
  }
  for (int i = 0; i < p.size(); ++i) {
    for (int j = 0; j < p.size(); ++j) {
      if (p.covers(j, i)) {
        out << "  n" << i << " -> n" << j << ";\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

std::string to_adjacency(const FinitePoset& p) {
  std::ostringstream out;
  for (int i = 0; i < p.size(); ++i) {
    out << p.label(i) << " <=";
    for (int j = 0; j < p.size(); ++j) {
      if (i != j && p.leq(i, j)) {
        out << ' ' << p.label(j);
      }
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace varkit
