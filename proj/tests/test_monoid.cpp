#include "doctest.h"

#include <random>
#include <stdexcept>
#include <set>
#include <string>

#include "varkit/monoid.hpp"
#include "varkit/text.hpp"

using namespace varkit;

namespace {

Word W(const std::string& spaced) { return parse_word(spaced); }
Identity I(const std::string& text) { return parse_identity(text); }
Letter L(const std::string& token) { return parse_letter(token); }

FactorMonoid M(const std::string& m_literal) {
  return factor_monoid(parse_m_literal(m_literal));
}

// Independent size oracle: distinct span renderings plus identity and zero.
std::size_t expected_size(const std::vector<Word>& ws) {
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

int eval(const FiniteMonoid& m, const Word& w,
         const std::map<Letter, int>& assignment) {
  int acc = m.one();
  for (const Letter& l : w) {
    acc = m.mul(acc, assignment.at(l));
  }
  return acc;
}

}  // namespace

TEST_SUITE("monoid") {

TEST_CASE("factor monoid sizes") {
  CHECK(M("M(x y)").monoid.size() == 5);
  CHECK(M("M(x y x)").monoid.size() == 7);
  CHECK(M("M(x)").monoid.size() == 3);
  CHECK(M("M(x y)").monoid.size() == expected_size({W("x y")}));
  CHECK(M("M(x y x)").monoid.size() == expected_size({W("x y x")}));
  CHECK(M("M(x y s x z y t z)").monoid.size() ==
        expected_size({W("x y s x z y t z")}));
  CHECK(M("M(x x y; y x x)").monoid.size() ==
        expected_size({W("x x y"), W("y x x")}));
}

TEST_CASE("single letter squares to zero") {
  FactorMonoid fm = M("M(x)");
  int x = fm.id_of(W("x"));
  REQUIRE(x >= 0);
  CHECK(fm.monoid.mul(x, x) == fm.monoid.zero());
  CHECK(fm.monoid.mul(fm.monoid.one(), x) == x);
}

TEST_CASE("factor monoid construction validates input") {
  CHECK_THROWS_AS(factor_monoid({}), std::invalid_argument);
  CHECK_THROWS_AS(factor_monoid({Word()}), std::invalid_argument);
}

TEST_CASE("canonical serialization is frozen") {
  // Derived by hand from the construction rules: ids sorted by length then
  // lexicographic order, zero row and column, concatenation elsewhere.
  const char* expected =
      "monoid 5 one=1 zero=0\n"
      "0 0 0 0 0\n"
      "0 1 2 3 4\n"
      "0 2 0 4 0\n"
      "0 3 0 0 0\n"
      "0 4 0 0 0\n"
      "0 0\n"
      "1 1\n"
      "2 x\n"
      "3 y\n"
      "4 xy\n";
  CHECK(serialize(M("M(x y)").monoid) == expected);
  FiniteMonoid round = parse_monoid(expected);
  CHECK(round == M("M(x y)").monoid);
}

TEST_CASE("every constructed monoid is associative") {
  for (const char* lit :
       {"M(x)", "M(x x)", "M(x y)", "M(x y x)", "M(x x y)", "M(y x x)",
        "M(x x y; y x x)", "M(x z x y t y)", "M(x y s x z y t z)",
        "M(x y z x y)"}) {
    FactorMonoid fm = M(lit);
    if (fm.monoid.size() <= 60) {
      CAPTURE(lit);
      CHECK(fm.monoid.is_associative());
    }
  }
}

TEST_CASE("satisfaction basics") {
  FactorMonoid fm = M("M(x y)");
  Verdict v = satisfies(fm, I("x y = y x"), Strategy::exhaustive);
  REQUIRE(v.fails());
  REQUIRE(v.assignment.has_value());
  // The identity assignment is the canonical first witness.
  CHECK(v.assignment->at(L("x")) == fm.id_of(W("x")));
  CHECK(v.assignment->at(L("y")) == fm.id_of(W("y")));
  CHECK(satisfies(fm, I("x = x")).holds());
  CHECK(satisfies(M("M(x y x)").monoid, I("x = x")).holds());
}

TEST_CASE("failure witnesses replay") {
  for (const char* id_text :
       {"x y = y x", "x x = x", "x = 1", "x y x = x x y"}) {
    for (const char* lit : {"M(x y)", "M(x y x)", "M(x x y)"}) {
      FactorMonoid fm = M(lit);
      Identity id = I(id_text);
      for (Strategy s : {Strategy::exhaustive, Strategy::factor_matching}) {
        Verdict v = satisfies(fm, id, s);
        if (v.fails()) {
          REQUIRE(v.assignment.has_value());
          CHECK(eval(fm.monoid, id.lhs, *v.assignment) !=
                eval(fm.monoid, id.rhs, *v.assignment));
        }
      }
    }
  }
}

TEST_CASE("routine check of the key identity") {
  FactorMonoid fm = M("M(x y s x z y t z)");
  CHECK(satisfies(fm, I("x y z x y = y x z x y"),
                  Strategy::factor_matching).holds());
  CHECK(satisfies(fm, I("x y z x y = y x z x y"),
                  Strategy::exhaustive).holds());
}

TEST_CASE("strategies agree") {
  std::vector<const char*> identities = {
      "x z y t x y = x z y t y x",
      "x z x y t y = x z y x t y",
      "x y z x y = y x z x y",
      "x y z x y = x y z y x",
      "z t x z x = x z x t z",
      "x x y = y x x",
      "x x y = x y x",
      "x x = x x x",
      "x y = y x",
      "x = 1",
      "x y x z x = x x y z",
      "x s t y = x t s y",
      "x s t y = x s t y x",
  };
  std::vector<const char*> monoids = {
      "M(x)",         "M(x x)",       "M(x y)",           "M(x y x)",
      "M(x x y)",     "M(y x x)",     "M(x x y; y x x)",  "M(x z x y t y)",
      "M(x y t x y)", "M(x y z x y)", "M(x y s x z y t z)", "M(x s t y)",
  };
  for (const char* lit : monoids) {
    FactorMonoid fm = M(lit);
    for (const char* id_text : identities) {
      Identity id = I(id_text);
      Verdict a = satisfies(fm, id, Strategy::exhaustive);
      Verdict b = satisfies(fm, id, Strategy::factor_matching);
      CAPTURE(lit);
      CAPTURE(id_text);
      REQUIRE(a.decisive());
      REQUIRE(b.decisive());
      CHECK(a.kind == b.kind);
    }
  }
}

TEST_CASE("swap-family words against the three-block monoid") {
  FactorMonoid host = M("M(gen:c(0,0,3;perm=3,2,1))");
  Perm eps = parse_perm("1,2");
  Perm swap = parse_perm("2,1");
  Word base = make_word_v_xieta(0, 0, default_v_rho(0, 0), eps, eps);
  Word swapped = make_word_v_xieta(0, 0, default_v_rho(0, 0), swap, eps);
  CHECK(satisfies(host, Identity{base, swapped}, Strategy::factor_matching)
            .holds());

  // Mutations outside the family are refuted by a concrete embedding.
  auto mutate = [&base](std::size_t i, std::size_t j) {
    std::vector<Letter> ls(base.begin(), base.end());
    std::swap(ls[i], ls[j]);
    return Word(std::move(ls));
  };
  for (auto [i, j] : {std::pair<std::size_t, std::size_t>{6, 7},  // b2 a2
                      std::pair<std::size_t, std::size_t>{0, 1}}) {  // a1 b1
    Verdict v = satisfies(host, Identity{base, mutate(i, j)},
                          Strategy::factor_matching);
    REQUIRE(v.fails());
    REQUIRE(v.assignment.has_value());
    CHECK(eval(host.monoid, base, *v.assignment) !=
          eval(host.monoid, mutate(i, j), *v.assignment));
  }
}

TEST_CASE("duality bridges satisfaction and reversal") {
  std::mt19937 rng(2024);
  const Letter alphabet[3] = {L("x"), L("y"), L("z")};
  auto random_word = [&](std::size_t lo, std::size_t hi) {
    std::uniform_int_distribution<std::size_t> len(lo, hi);
    std::uniform_int_distribution<int> pick(0, 2);
    std::vector<Letter> ls;
    std::size_t n = len(rng);
    for (std::size_t i = 0; i < n; ++i) {
      ls.push_back(alphabet[static_cast<std::size_t>(pick(rng))]);
    }
    return Word(std::move(ls));
  };
  int decisive = 0;
  for (int trial = 0; trial < 200; ++trial) {
    Word host = random_word(1, 6);
    Identity id{random_word(0, 4), random_word(0, 4)};
    FactorMonoid fm = factor_monoid({host});
    FactorMonoid rev = reverse_monoid(fm);
    Verdict direct = satisfies(fm, id);
    Verdict mirrored = satisfies(rev, dual_identity(id));
    REQUIRE(direct.decisive());
    CHECK(direct.kind == mirrored.kind);
    ++decisive;
    // The transposed table gives the same answer as the reversed generator.
    Verdict transposed =
        satisfies(reverse_monoid(fm.monoid), dual_identity(id));
    CHECK(direct.kind == transposed.kind);
  }
  CHECK(decisive == 200);
}

TEST_CASE("basis satisfaction") {
  CHECK(satisfies_basis(M("M(x y)"), variety_basis("A")).holds());
  Verdict t = satisfies_basis(M("M(x y x)"), variety_basis("T"));
  REQUIRE(t.fails());
  CHECK(t.violated == I("x = 1"));

  Verdict p2 = satisfies_basis(M("M(x y)"), variety_basis("P", 2, 2));
  CHECK(p2.unknown());  // truncated schema families

  // A violated identity is reported as the witness.
  Verdict q2 = satisfies_basis(M("M(x x)"), variety_basis("Q", 2));
  REQUIRE(q2.fails());
  CHECK(q2.violated == I("x x = x x x"));
}

TEST_CASE("classification") {
  Classification c = classify(M("M(x y x)").monoid);
  CHECK(c.aperiodic);
  CHECK(c.index == 2);
  CHECK(c.central_idempotents);

  Classification cx = classify(M("M(x)").monoid);
  CHECK(cx.aperiodic);
  CHECK(cx.index == 2);

  Classification ct = classify(FiniteMonoid(1, {0}, 0, -1, {"1"}));
  CHECK(ct.aperiodic);
  CHECK(ct.index == 1);
  CHECK(ct.central_idempotents);

  // A two-element group is not aperiodic.
  FiniteMonoid z2(2, {0, 1, 1, 0}, 0, -1, {"1", "g"});
  CHECK_FALSE(classify(z2).aperiodic);
}

TEST_CASE("factor monoids are aperiodic with central idempotents") {
  for (const char* lit :
       {"M(x)", "M(x y)", "M(x y x)", "M(x x y; y x x)",
        "M(x y s x z y t z)", "M(x z x y t y)"}) {
    FactorMonoid fm = M(lit);
    Classification c = classify(fm.monoid);
    CAPTURE(lit);
    CHECK(c.aperiodic);
    std::size_t longest = 0;
    for (const Word& w : fm.words) {
      longest = std::max(longest, w.size());
    }
    CHECK(c.index <= static_cast<int>(longest) + 1);
    CHECK(c.central_idempotents);
    // The only idempotents are the identity and the zero: no non-empty
    // factor equals its own square.
    for (int e = 0; e < fm.monoid.size(); ++e) {
      if (fm.monoid.mul(e, e) == e) {
        CHECK((e == fm.monoid.one() || e == fm.monoid.zero()));
      }
    }
  }
}

TEST_CASE("classification index yields satisfied power identities") {
  // An aperiodic monoid with central idempotents satisfies x^n = x^(n+1)
  // and x^n y = y x^n at its index.
  for (const char* lit :
       {"M(x y)", "M(x y x)", "M(x x y; y x x)", "M(x z x y t y)",
        "M(x y s x z y t z)"}) {
    FactorMonoid fm = M(lit);
    Classification c = classify(fm.monoid);
    REQUIRE(c.aperiodic);
    std::string xs;
    for (int i = 0; i < c.index; ++i) {
      xs += "x ";
    }
    CAPTURE(lit);
    CHECK(satisfies(fm, I(xs + "= " + xs + "x")).holds());
    CHECK(satisfies(fm, I(xs + "y = y " + xs)).holds());
  }
}

TEST_CASE("submonoids") {
  FactorMonoid fm = M("M(x y)");
  FiniteMonoid t = submonoid(fm.monoid, {fm.monoid.one()});
  CHECK(t.size() == 1);

  FiniteMonoid s = submonoid(fm.monoid, {fm.id_of(W("x")), fm.id_of(W("y"))});
  CHECK(s.size() == 5);  // products reach xy and the zero
  CHECK_THROWS_AS(submonoid(fm.monoid, {99}), std::invalid_argument);
}

TEST_CASE("isomorphism") {
  CHECK(isomorphic(M("M(x y)").monoid, M("M(y x)").monoid));
  CHECK(isomorphic(M("M(x y)").monoid, M("M(a b)").monoid));
  CHECK_FALSE(isomorphic(M("M(x y)").monoid, M("M(x x)").monoid));
  CHECK_FALSE(isomorphic(M("M(x y)").monoid, M("M(x y x)").monoid));
  // Mirror images are opposite monoids, not isomorphic ones.
  CHECK_FALSE(isomorphic(M("M(x x y)").monoid, M("M(y x x)").monoid));
  CHECK(isomorphic(reverse_monoid(M("M(x x y)").monoid),
                   M("M(y x x)").monoid));
  CHECK_FALSE(isomorphic(M("M(x x y)").monoid, M("M(x y x)").monoid));
}

TEST_CASE("the published submonoid isomorphism") {
  FactorMonoid fm = M("M(x y s x z y t z)");
  std::vector<int> gens;
  for (const char* g : {"x", "z", "y s", "y t"}) {
    int id = fm.id_of(W(g));
    REQUIRE(id >= 0);
    gens.push_back(id);
  }
  gens.push_back(fm.monoid.one());
  FiniteMonoid sub = submonoid(fm.monoid, gens);
  FiniteMonoid target = M("M(x z x y t y)").monoid;
  CHECK(sub.size() == target.size());
  CHECK(isomorphic(sub, target));
}

TEST_CASE("reversal") {
  CHECK(isomorphic(reverse_monoid(M("M(x y)").monoid), M("M(y x)").monoid));
  FiniteMonoid mx = M("M(x)").monoid;
  CHECK(reverse_monoid(mx) == mx);  // commutative table is fixed
  FiniteMonoid m = M("M(x y x)").monoid;
  CHECK(reverse_monoid(reverse_monoid(m)) == m);
}

TEST_CASE("division") {
  FiniteMonoid trivial(1, {0}, 0, -1, {"1"});
  CHECK(divides(trivial, M("M(x y)").monoid));
  CHECK(divides(M("M(x)").monoid, M("M(x y)").monoid));
  CHECK(divides(M("M(x y)").monoid, M("M(x y x)").monoid));
  CHECK(divides(M("M(x x y)").monoid, M("M(x x y; y x x)").monoid));
  CHECK_FALSE(divides(M("M(x y)").monoid, M("M(x)").monoid));
}

TEST_CASE("separating identities") {
  auto sep = separating_identity(M("M(x y)").monoid, M("M(x)").monoid);
  REQUIRE(sep.has_value());
  CHECK(satisfies(M("M(x)").monoid, *sep).holds());
  CHECK(satisfies(M("M(x y)").monoid, *sep).fails());
  // Nothing separates a monoid from itself.
  CHECK_FALSE(separating_identity(M("M(x y)").monoid, M("M(x y)").monoid)
                  .has_value());
}

}  // TEST_SUITE
