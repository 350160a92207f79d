#include "doctest.h"

#include <set>
#include <stdexcept>
#include <string>

#include "varkit/text.hpp"
#include "varkit/words.hpp"

using namespace varkit;

namespace {

Word W(const std::string& spaced) { return parse_word(spaced); }

Letter L(const std::string& token) { return parse_letter(token); }

// Independent factor oracle: render every span to a string and count the
// distinct renderings.
std::set<std::string> factor_strings(const Word& w) {
  std::set<std::string> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    std::string cur;
    for (std::size_t j = i; j < w.size(); ++j) {
      cur += w[j].str();
      cur += '.';
      out.insert(cur);
    }
  }
  return out;
}

}  // namespace

TEST_SUITE("words") {

TEST_CASE("letter invariants") {
  CHECK(Letter("z", 3, 1).str() == "z3'");
  CHECK(Letter("t", 12, 2).str() == "t12''");
  CHECK(Letter("x").str() == "x");
  CHECK_THROWS_AS(Letter(""), std::invalid_argument);
  CHECK_THROWS_AS(Letter("x1"), std::invalid_argument);
  CHECK_THROWS_AS(Letter("x", 0, 3), std::invalid_argument);
  CHECK(Letter("x") < Letter("y"));
  CHECK(Letter("z", 1) < Letter("z", 2));
  CHECK(Letter("z", 1) < Letter("z", 1, 1));
}

TEST_CASE("analyze counts occurrences") {
  WordAnalysis a = analyze(W("x y x"));
  CHECK(a.content == std::set<Letter>{L("x"), L("y")});
  CHECK(a.occ.at(L("x")) == 2);
  CHECK(a.occ.at(L("y")) == 1);
  CHECK(a.simple == std::set<Letter>{L("y")});
  CHECK(a.multiple == std::set<Letter>{L("x")});
  CHECK_FALSE(a.is_linear);
}

TEST_CASE("analyze of the long witness word") {
  WordAnalysis a = analyze(W("x y s x z y t z"));
  CHECK(a.simple == std::set<Letter>{L("s"), L("t")});
  CHECK(a.multiple == std::set<Letter>{L("x"), L("y"), L("z")});
}

TEST_CASE("analyze of the empty word") {
  WordAnalysis a = analyze(Word());
  CHECK(a.content.empty());
  CHECK_FALSE(a.is_linear);
  CHECK(analyze(W("x y z")).is_linear);
}

TEST_CASE("length equals the sum of occurrence counts") {
  Word w = W("x y s x z y t z");
  WordAnalysis a = analyze(w);
  std::size_t total = 0;
  for (const auto& [l, n] : a.occ) {
    total += n;
  }
  CHECK(total == w.size());
}

TEST_CASE("decompose splits at simple letters") {
  Decomposition d = decompose(W("x y s x z y t z"));
  REQUIRE(d.simple_seq == std::vector<Letter>{L("s"), L("t")});
  REQUIRE(d.blocks.size() == 3);
  CHECK(d.blocks[0] == W("x y"));
  CHECK(d.blocks[1] == W("x z y"));
  CHECK(d.blocks[2] == W("z"));
}

TEST_CASE("decompose with trailing empty block") {
  Decomposition d = decompose(W("x x y"));
  CHECK(d.simple_seq == std::vector<Letter>{L("y")});
  REQUIRE(d.blocks.size() == 2);
  CHECK(d.blocks[0] == W("x x"));
  CHECK(d.blocks[1].empty());

  Decomposition d2 = decompose(W("x y x"));
  CHECK(d2.simple_seq == std::vector<Letter>{L("y")});
  CHECK(d2.blocks[0] == W("x"));
  CHECK(d2.blocks[1] == W("x"));
}

TEST_CASE("decompose round-trips exhaustively over a 4-letter alphabet") {
  // Counter-based enumeration of all words up to length 12.
  const Letter alphabet[4] = {L("a"), L("b"), L("c"), L("d")};
  std::vector<int> digits;
  long checked = 0;
  for (std::size_t len = 0; len <= 12; ++len) {
    digits.assign(len, 0);
    while (true) {
      std::vector<Letter> ls;
      ls.reserve(len);
      for (int d : digits) {
        ls.push_back(alphabet[d]);
      }
      Word w(std::move(ls));
      if (decompose(w).reassemble() != w) {
        CAPTURE(w.str());
        REQUIRE(false);
      }
      ++checked;
      std::size_t i = 0;
      while (i < len && digits[i] == 3) {
        digits[i++] = 0;
      }
      if (i == len) {
        break;
      }
      ++digits[i];
    }
  }
  CHECK(checked == (1L + 4 + 16 + 64 + 256 + 1024 + 4096 + 16384 + 65536 +
                    262144 + 1048576 + 4194304 + 16777216));
}

TEST_CASE("restrict keeps letters in order") {
  CHECK(restrict_to(W("x y s x z y t z"),
                    {L("x"), L("z"), L("s"), L("t")}) == W("x s x z t z"));
  CHECK(restrict_to(W("x y"), {}) == Word());
  CHECK(delete_letters(W("x y s x z y t z"), {L("y")}) == W("x s x z t z"));
}

TEST_CASE("delete is restrict to the complement") {
  Word w = W("x y s x z y t z");
  std::set<Letter> x{L("x"), L("y")};
  std::set<Letter> complement{L("s"), L("z"), L("t")};
  CHECK(delete_letters(w, x) == restrict_to(w, complement));
}

TEST_CASE("restrict and delete interleave back to the original") {
  for (const char* text : {"x y x", "x y s x z y t z", "a b a b c", "x"}) {
    Word w = W(text);
    std::set<Letter> x{L("x"), L("z")};
    Word kept = restrict_to(w, x);
    Word dropped = delete_letters(w, x);
    std::size_t ik = 0;
    std::size_t id = 0;
    std::vector<Letter> merged;
    for (const Letter& l : w) {
      if (x.count(l)) {
        CHECK(kept[ik] == l);
        merged.push_back(kept[ik++]);
      } else {
        CHECK(dropped[id] == l);
        merged.push_back(dropped[id++]);
      }
    }
    CHECK(Word(merged) == w);
    WordAnalysis wa = analyze(w);
    WordAnalysis ka = analyze(kept);
    for (const Letter& l : x) {
      if (wa.occ.count(l)) {
        CHECK(ka.occ.at(l) == wa.occ.at(l));
      }
    }
  }
}

TEST_CASE("reverse") {
  CHECK(reverse(W("x y t x y")) == W("y x t y x"));
  CHECK(reverse(Word()) == Word());
  CHECK(reverse(reverse(W("x y s x z y t z"))) == W("x y s x z y t z"));
}

TEST_CASE("factors deduplicate by word equality") {
  CHECK(factors(W("x y")).size() == 3);
  std::set<Word> f = factors(W("x y x"));
  CHECK(f.size() == factor_strings(W("x y x")).size());
  CHECK(f.size() == 5);
  CHECK(f.count(W("x y")) == 1);
  CHECK(f.count(W("y x")) == 1);
  CHECK(f.count(W("x y x")) == 1);
}

TEST_CASE("factors of the reverse are the reversed factors") {
  for (const char* text : {"x y x", "x y s x z y t z", "a a b a"}) {
    Word w = W(text);
    std::set<Word> direct;
    for (const Word& f : factors(reverse(w))) {
      direct.insert(f);
    }
    std::set<Word> mirrored;
    for (const Word& f : factors(w)) {
      mirrored.insert(reverse(f));
    }
    CHECK(direct == mirrored);
  }
}

TEST_CASE("factor_at") {
  CHECK(factor_at(W("x y z w"), 1, 2) == W("y z"));
  CHECK(factor_at(W("x y"), 0, 0) == Word());
  CHECK_THROWS_AS(factor_at(W("x y"), 1, 2), std::out_of_range);
}

TEST_CASE("occurrence positions") {
  CHECK(occurrence_position(W("x y x"), L("x"), 2) == 2);
  CHECK(occurrence_position(W("x y x"), L("y"), 1) == 1);
  CHECK(precedes(W("x y x"), L("x"), 1, L("y"), 1));
  CHECK_FALSE(precedes(W("x y x"), L("x"), 2, L("y"), 1));
  CHECK_THROWS_AS(occurrence_position(W("x y"), L("y"), 2), std::out_of_range);
}

TEST_CASE("substitution is homomorphic") {
  Substitution phi;
  phi.set(L("x"), W("y z"));
  CHECK(phi.apply(W("x t x")) == W("y z t y z"));

  Substitution erase_x;
  erase_x.set(L("x"), Word());
  CHECK(erase_x.apply(W("x x y")) == W("y"));

  Substitution empty;
  CHECK(empty.apply(W("x y")) == W("x y"));
}

TEST_CASE("substitution distributes over concatenation") {
  // Deterministic pseudo-random words.
  unsigned state = 12345;
  auto rnd = [&state](unsigned mod) {
    state = state * 1664525u + 1013904223u;
    return (state >> 16) % mod;
  };
  const Letter alphabet[3] = {L("x"), L("y"), L("z")};
  auto random_word = [&](std::size_t max_len) {
    std::vector<Letter> ls;
    std::size_t len = rnd(static_cast<unsigned>(max_len + 1));
    for (std::size_t i = 0; i < len; ++i) {
      ls.push_back(alphabet[rnd(3)]);
    }
    return Word(std::move(ls));
  };
  for (int trial = 0; trial < 200; ++trial) {
    Substitution phi;
    phi.set(L("x"), random_word(3));
    phi.set(L("y"), random_word(3));
    Word u = random_word(5);
    Word v = random_word(5);
    CHECK(phi.apply(u + v) == phi.apply(u) + phi.apply(v));
  }
}

TEST_CASE("word text round trip") {
  CHECK(W("x^3").str() == "x x x");
  CHECK(W("1") == Word());
  CHECK(W("z1' t12''").str() == "z1' t12''");
  CHECK(parse_word(W("x y s x z y t z").str()) == W("x y s x z y t z"));
}

}  // TEST_SUITE
