// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Criterion 5 may report UNKNOWN when its time budget runs out; that does
// not fail the run.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "varkit/claims.hpp"
#include "varkit/deduction.hpp"
#include "varkit/lattice.hpp"
#include "varkit/monoid.hpp"
#include "varkit/text.hpp"

using namespace varkit;
using Clock = std::chrono::steady_clock;

namespace {

Word W(const std::string& spaced) { return parse_word(spaced); }
Identity I(const std::string& text) { return parse_identity(text); }

FactorMonoid M(const std::string& lit) {
  return factor_monoid(parse_m_literal(lit));
}

struct Outcome {
  std::string status = "PASS";  // PASS, FAIL, UNKNOWN
  std::string note;

  void fail(const std::string& why) {
    status = "FAIL";
    if (!note.empty()) {
      note += "; ";
    }
    note += why;
  }
  void require(bool ok, const std::string& why) {
    if (!ok) {
      fail(why);
    }
  }
};

int failures = 0;

void run(int number, const std::string& title, double budget_seconds,
         const std::function<void(Outcome&)>& body) {
  Outcome out;
  auto start = Clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.fail(std::string("exception: ") + e.what());
  }
  double elapsed =
      std::chrono::duration<double>(Clock::now() - start).count();
  if (out.status == "PASS" && elapsed > budget_seconds) {
    out.fail("runtime budget exceeded");
  }
  if (out.status == "FAIL") {
    ++failures;
  }
  std::printf("criterion %d: %-7s (%8.2fs/%gs) %s%s%s\n", number,
              out.status.c_str(), elapsed, budget_seconds, title.c_str(),
              out.note.empty() ? "" : " -- ", out.note.c_str());
  std::fflush(stdout);
}

std::size_t oracle_size(const std::vector<Word>& ws) {
  std::set<std::string> spans;
  for (const Word& w : ws) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      std::string cur;
      for (std::size_t j = i; j < w.size(); ++j) {
        cur += w[j].str() + ".";
        spans.insert(cur);
      }
    }
  }
  return spans.size() + 2;
}

void criterion_1(Outcome& out) {
  out.require(M("M(x y)").monoid.size() == 5, "|M(xy)| != 5");
  out.require(M("M(x y x)").monoid.size() == 7, "|M(xyx)| != 7");
  out.require(M("M(x)").monoid.size() == 3, "|M(x)| != 3");
  for (const char* lit : {"M(x y)", "M(x y x)", "M(x)"}) {
    FactorMonoid fm = M(lit);
    out.require(fm.monoid.size() == static_cast<int>(oracle_size(fm.words)),
                std::string(lit) + " disagrees with the span oracle");
  }
}

void criterion_2(Outcome& out) {
  FactorMonoid fm = M("M(x y s x z y t z)");
  Identity two = I("x y z x y = y x z x y");
  Verdict matching = satisfies(fm, two, Strategy::factor_matching);
  out.require(matching.holds(), "matching strategy does not confirm the "
                                "identity in M(xysxzytz)");
  Verdict exhaustive = satisfies(fm, two, Strategy::exhaustive);
  out.require(exhaustive.holds(), "exhaustive strategy disagrees");

  // The nilpotent-style basis does not derive the identity.
  std::vector<Identity> n_basis = variety_basis("N").instantiate();
  bool decisively_not = false;
  bool derived = deducible(two.lhs, two.rhs, n_basis,
                           Caps::for_seed(two.lhs), &decisively_not);
  out.require(!derived, "the identity is unexpectedly derivable");
  out.require(decisively_not, "orbit did not close, derivability open");

  // And some tested factor monoid refutes the identity outright.
  bool countermodel = false;
  for (const char* lit :
       {"M(x y z x y)", "M(x y t x y)", "M(x y)", "M(x y x)"}) {
    if (satisfies(M(lit), two).fails()) {
      countermodel = true;
      break;
    }
  }
  out.require(countermodel, "no factor-monoid countermodel found");
}

void criterion_3(Outcome& out) {
  FactorMonoid fm = M("M(x y s x z y t z)");
  std::vector<int> gens{fm.monoid.one()};
  for (const char* gen : {"x", "z", "y s", "y t"}) {
    int id = fm.id_of(W(gen));
    out.require(id >= 0, std::string("generator missing: ") + gen);
    gens.push_back(id);
  }
  FiniteMonoid sub = submonoid(fm.monoid, gens);
  out.require(isomorphic(sub, M("M(x z x y t y)").monoid),
              "submonoid is not isomorphic to the target");
}

void criterion_4(Outcome& out) {
  PosetBuild build = build_poset(fig1_descriptors(), default_oracle(Caps{}));
  int n = build.poset.size();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) {
        continue;
      }
      const Verdict& v = build.verdicts[static_cast<std::size_t>(i)]
                                       [static_cast<std::size_t>(j)];
      bool expected = fig1_expected_leq(i, j);
      bool computed = build.poset.leq(i, j);
      if (computed && !expected) {
        out.fail("computed order claims " + build.poset.label(i) +
                 " <= " + build.poset.label(j) + " against the diagram");
      }
      if (v.fails() && expected) {
        out.fail("decisive refutation of the diagram edge " +
                 build.poset.label(i) + " <= " + build.poset.label(j));
      }
    }
  }
  FinitePoset reference = fig1_reference_lattice();
  MeetJoin mj = lattice_ops(reference);
  out.require(mj.is_lattice, "reference diagram is not a lattice");
  LawReport laws = check_laws(reference, mj);
  out.require(laws.modular, "reference lattice not modular");
  out.require(!laws.distributive, "reference lattice unexpectedly distributive");
  out.require(laws.diamond.has_value(), "no diamond witness reported");
}

void criterion_5(Outcome& out) {
  FactorMonoid host = M("M(gen:c(0,0,3;perm=3,2,1))");
  std::vector<Perm> s2 = all_perms(2);
  std::vector<Word> words;
  for (const Perm& xi : s2) {
    for (const Perm& eta : s2) {
      words.push_back(make_word_v_xieta(0, 0, default_v_rho(0, 0), xi, eta));
    }
  }
  Budget budget;
  budget.deadline = Clock::now() + std::chrono::minutes(30);
  bool timed_out = false;
  for (std::size_t i = 0; i < words.size() && !timed_out; ++i) {
    for (std::size_t j = 0; j < words.size(); ++j) {
      if (i == j) {
        continue;
      }
      Verdict v = satisfies(host, Identity{words[i], words[j]},
                            Strategy::factor_matching, budget);
      if (v.unknown()) {
        timed_out = true;
        break;
      }
      if (!v.holds()) {
        out.fail("pair " + std::to_string(i) + "," + std::to_string(j) +
                 " fails");
        return;
      }
    }
  }
  if (timed_out) {
    out.status = "UNKNOWN";
    out.note = "time budget exhausted before all pairs were checked";
  }
}

void criterion_6(Outcome& out) {
  for (int n = 0; n <= 2; ++n) {
    for (int m = 0; m <= 2; ++m) {
      for (int k = 0; k <= 2; ++k) {
        for (const Perm& tau : all_perms(n + m + k)) {
          if (make_word_d(n, m, k, tau) !=
                  reverse(make_word_c(n, m, k, tau)) ||
              make_word_d(n, m, k, tau, CVariant::prime) !=
                  reverse(make_word_c(n, m, k, tau, CVariant::prime))) {
            out.fail("reversal mismatch in the three-block family");
            return;
          }
        }
      }
      for (const Perm& rho : all_perms(n + m)) {
        if (make_word_a(n, m, rho, AVariant::hat) !=
            delete_letters(make_word_a(n, m, rho), {Letter("x")})) {
          out.fail("deleting the doubled letter disagrees with the hat form");
          return;
        }
      }
    }
  }
  for (int n = 0; n <= 6; ++n) {
    for (int m = 0; n + m <= 6; ++m) {
      std::vector<Perm> fast = enum_nm_perms(n, m);
      std::vector<Perm> slow;
      if (n + m == 0) {
        slow.push_back(Perm{});
      } else {
        for (const Perm& p : all_perms(n + m)) {
          if (alternates(p, n, m)) {
            slow.push_back(p);
          }
        }
      }
      std::sort(slow.begin(), slow.end());
      if (fast != slow) {
        out.fail("alternating enumeration disagrees with the filter oracle");
        return;
      }
      if (std::abs(n - m) > 1 && !fast.empty()) {
        out.fail("non-adjacent class sizes admit no alternating permutation");
        return;
      }
    }
  }
}

void criterion_7(Outcome& out) {
  OrbitResult orb = orbit(W("x x y"), {I("x x y = y x x")},
                          Caps::for_seed(W("x x y")));
  out.require(orb.closed, "orbit of x^2 y did not close");
  out.require(orb.words == std::set<Word>{W("x x y"), W("y x x")},
              "orbit of x^2 y has unexpected contents");

  out.require(isoterm_basis(W("x y x"), variety_basis("A"),
                            Caps::for_seed(W("x y x")))
                  .holds(),
              "x y x should be rigid under the one-identity basis");

  Verdict v = isoterm_monoid(W("x y x"), M("M(x y)"),
                             Caps::for_seed(W("x y x")));
  out.require(v.fails(), "no witness identity found over M(xy)");
  if (v.violated) {
    out.require(satisfies(M("M(x y)"), *v.violated).holds(),
                "witness identity does not replay");
  } else {
    out.fail("missing witness identity");
  }
}

void criterion_8(Outcome& out) {
  std::vector<std::vector<Word>> sets;
  for (const char* lit :
       {"M(x)", "M(x x)", "M(x y)", "M(x y x)", "M(x x y)", "M(y x x)",
        "M(x x y; y x x)", "M(x z x y t y)", "M(x y s x z y t z)",
        "M(x y z x y)", "M(x y t x y)", "M(x y x z x)", "M(x z y t x y)",
        "M(x t y z x y)", "M(x y z x t y)", "M(x y; x x)", "M(x y x; x x y)",
        "M(x y z y x)", "M(x x x)", "M(x y y x)"}) {
    sets.push_back(parse_m_literal(lit));
  }
  std::vector<VarietyBasis> bases{variety_basis("A"), variety_basis("N"),
                                  variety_basis("Q", 2),
                                  variety_basis("R", 2),
                                  variety_basis("Aprime", 1, 2)};
  int decisive_pairs = 0;
  for (const auto& ws : sets) {
    FactorMonoid fm = factor_monoid(ws);
    for (const VarietyBasis& b : bases) {
      Verdict via_member = member(ws, b, Caps{});
      Verdict via_satisfies = satisfies_basis(fm, b);
      if (via_member.decisive() && via_satisfies.decisive()) {
        ++decisive_pairs;
        if (via_member.kind != via_satisfies.kind) {
          out.fail("routes disagree on " + fm.words[0].compact() +
                   " versus basis " + b.name);
          return;
        }
      }
    }
  }
  out.require(decisive_pairs >= 50,
              "too few decisive pairs to make the cross-check meaningful");
}

void criterion_9(Outcome& out) {
  // Associativity of every constructed monoid up to the exhaustive bound.
  for (const char* lit :
       {"M(x)", "M(x x)", "M(x y)", "M(x y x)", "M(x x y)", "M(y x x)",
        "M(x x y; y x x)", "M(x z x y t y)", "M(x y s x z y t z)",
        "M(x y z x y)", "M(x y t x y)", "M(x y z y x)"}) {
    FactorMonoid fm = M(lit);
    if (fm.monoid.size() <= 60 && !fm.monoid.is_associative()) {
      out.fail(std::string("non-associative table for ") + lit);
      return;
    }
  }

  // Duality over 200 seeded random cases.
  unsigned state = 777;
  auto rnd = [&state](unsigned mod) {
    state = state * 1664525u + 1013904223u;
    return (state >> 16) % mod;
  };
  const Letter alphabet[3] = {Letter("x"), Letter("y"), Letter("z")};
  auto random_word = [&](unsigned lo, unsigned hi) {
    std::vector<Letter> ls;
    unsigned len = lo + rnd(hi - lo + 1);
    for (unsigned i = 0; i < len; ++i) {
      ls.push_back(alphabet[rnd(3)]);
    }
    return Word(std::move(ls));
  };
  for (int trial = 0; trial < 200; ++trial) {
    Word host = random_word(1, 6);
    Identity id{random_word(0, 4), random_word(0, 4)};
    Verdict direct = satisfies(factor_monoid({host}), id);
    Verdict mirrored =
        satisfies(factor_monoid({reverse(host)}), dual_identity(id));
    if (direct.kind != mirrored.kind) {
      out.fail("duality violated at trial " + std::to_string(trial));
      return;
    }
  }

  // Strategy agreement grid: every tested identity has at most 5 letters and
  // every generating word at most 8 letters.
  std::vector<const char*> identities = {
      "x z y t x y = x z y t y x", "x z x y t y = x z y x t y",
      "x y z x y = y x z x y",     "x y z x y = x y z y x",
      "z t x z x = x z x t z",     "x x y = y x x",
      "x x y = x y x",             "x x = x x x",
      "x y = y x",                 "x = 1",
      "x y x z x = x x y z",       "x s y t z = z s y t x"};
  std::vector<const char*> hosts = {
      "M(x)",         "M(x y)",          "M(x y x)",
      "M(x x y)",     "M(x x y; y x x)", "M(x z x y t y)",
      "M(x y t x y)", "M(x y z x y)",    "M(x y s x z y t z)"};
  for (const char* lit : hosts) {
    FactorMonoid fm = M(lit);
    for (const char* id_text : identities) {
      Identity id = I(id_text);
      Verdict a = satisfies(fm, id, Strategy::exhaustive);
      Verdict b = satisfies(fm, id, Strategy::factor_matching);
      if (!a.decisive() || !b.decisive() || a.kind != b.kind) {
        out.fail(std::string("strategy disagreement: ") + id_text + " in " +
                 lit);
        return;
      }
    }
  }

  // Law checks against forbidden-configuration search on every lattice with
  // at most 8 points (all bounded posets over up to 6 labeled middle points).
  long lattices = 0;
  std::function<void(int, std::vector<std::vector<bool>>&)> extend =
      [&](int m, std::vector<std::vector<bool>>& mid) {
        int k = static_cast<int>(mid.size());
        if (k == m) {
          int n = m + 2;
          std::vector<std::vector<bool>> leq(
              static_cast<std::size_t>(n),
              std::vector<bool>(static_cast<std::size_t>(n), false));
          for (int i = 0; i < n; ++i) {
            leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] =
                true;
            leq[0][static_cast<std::size_t>(i)] = true;
            leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(n - 1)] =
                true;
          }
          for (int i = 0; i < m; ++i) {
            for (int j = 0; j < m; ++j) {
              if (mid[static_cast<std::size_t>(i)]
                     [static_cast<std::size_t>(j)]) {
                leq[static_cast<std::size_t>(i + 1)]
                   [static_cast<std::size_t>(j + 1)] = true;
              }
            }
          }
          std::vector<std::string> labels;
          for (int i = 0; i < n; ++i) {
            labels.push_back("p" + std::to_string(i));
          }
          FinitePoset poset(labels, leq);
          MeetJoin mj = lattice_ops(poset);
          if (!mj.is_lattice) {
            return;
          }
          ++lattices;
          LawReport laws = check_laws(poset, mj);
          bool has_n5 = find_sublattice_pentagon(poset, mj).has_value();
          bool has_m3 = find_sublattice_diamond(poset, mj).has_value();
          if (laws.modular != !has_n5 ||
              laws.distributive != (!has_n5 && !has_m3) ||
              (laws.distributive && !laws.modular)) {
            out.fail("law/sublattice disagreement on a lattice of size " +
                     std::to_string(n));
            return;
          }
          return;
        }
        for (unsigned down = 0; down < (1u << k); ++down) {
          bool ok = true;
          for (int i = 0; i < k && ok; ++i) {
            if (!(down & (1u << i))) {
              continue;
            }
            for (int j = 0; j < k; ++j) {
              if (mid[static_cast<std::size_t>(j)]
                     [static_cast<std::size_t>(i)] &&
                  !(down & (1u << j))) {
                ok = false;
                break;
              }
            }
          }
          if (!ok) {
            continue;
          }
          for (unsigned up = 0; up < (1u << k); ++up) {
            if ((down & up) != 0) {
              continue;
            }
            bool fine = true;
            for (int i = 0; i < k && fine; ++i) {
              if (!(up & (1u << i))) {
                continue;
              }
              for (int j = 0; j < k; ++j) {
                if (mid[static_cast<std::size_t>(i)]
                       [static_cast<std::size_t>(j)] &&
                    !(up & (1u << j))) {
                  fine = false;
                  break;
                }
              }
            }
            for (int d = 0; d < k && fine; ++d) {
              if (!(down & (1u << d))) {
                continue;
              }
              for (int u = 0; u < k; ++u) {
                if ((up & (1u << u)) &&
                    !mid[static_cast<std::size_t>(d)]
                        [static_cast<std::size_t>(u)]) {
                  fine = false;
                  break;
                }
              }
            }
            if (!fine) {
              continue;
            }
            std::vector<std::vector<bool>> next = mid;
            for (auto& row : next) {
              row.push_back(false);
            }
            next.emplace_back(static_cast<std::size_t>(k + 1), false);
            next[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] =
                true;
            for (int i = 0; i < k; ++i) {
              if (down & (1u << i)) {
                next[static_cast<std::size_t>(i)]
                    [static_cast<std::size_t>(k)] = true;
              }
              if (up & (1u << i)) {
                next[static_cast<std::size_t>(k)]
                    [static_cast<std::size_t>(i)] = true;
              }
            }
            extend(m, next);
            if (out.status == "FAIL") {
              return;
            }
          }
        }
      };
  for (int m = 0; m <= 6 && out.status != "FAIL"; ++m) {
    std::vector<std::vector<bool>> empty;
    extend(m, empty);
  }
  out.require(lattices > 1000, "lattice enumeration came up short");
}

}  // namespace

int main(int argc, char** argv) {
  std::string claims_path;
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--claims") {
      claims_path = argv[i + 1];
    }
  }

  run(1, "factor-monoid sizes against the span oracle", 1.0, criterion_1);
  run(2, "key identity holds; no derivation from the nilpotent basis", 60.0,
      criterion_2);
  run(3, "submonoid isomorphism", 10.0, criterion_3);
  run(4, "subvariety diagram reproduction and laws", 300.0, criterion_4);
  run(5, "swap-family identities hold in the three-block monoid", 1800.0,
      criterion_5);
  run(6, "family generators against independent oracles", 10.0, criterion_6);
  run(7, "deduction engine basics", 1.0, criterion_7);
  run(8, "membership versus satisfaction cross-check", 600.0, criterion_8);
  run(9, "property suites", 600.0, criterion_9);

  if (!claims_path.empty()) {
    auto start = Clock::now();
    std::ifstream in(claims_path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    std::string status = "PASS";
    std::string note;
    try {
      std::vector<Claim> claims = parse_manifest(buffer.str());
      std::vector<ClaimOutcome> outcomes = run_claims(claims, RunOptions{});
      int bad = 0;
      for (const ClaimOutcome& o : outcomes) {
        if (o.status != ClaimOutcome::Status::pass) {
          ++bad;
          note += (note.empty() ? "" : "; ") + std::string(o.status_name()) +
                  " line " + std::to_string(o.claim.line);
        }
      }
      if (bad > 0) {
        status = "FAIL";
        ++failures;
      } else {
        note = std::to_string(outcomes.size()) + " claims";
      }
    } catch (const std::exception& e) {
      status = "FAIL";
      note = e.what();
      ++failures;
    }
    double elapsed =
        std::chrono::duration<double>(Clock::now() - start).count();
    std::printf("claims manifest: %-7s (%8.2fs) %s\n", status.c_str(), elapsed,
                note.c_str());
  }

  std::printf("%s\n", failures == 0 ? "acceptance: all criteria satisfied"
                                    : "acceptance: FAILURES PRESENT");
  return failures == 0 ? 0 : 1;
}
