#include "doctest.h"

#include <map>
#include <vector>

#include "varkit/identities.hpp"
#include "varkit/text.hpp"

using namespace varkit;

namespace {

Word W(const std::string& spaced) { return parse_word(spaced); }
Identity I(const std::string& text) { return parse_identity(text); }

}  // namespace

TEST_SUITE("identities") {

TEST_CASE("triviality and duality") {
  CHECK(I("x = x").trivial());
  CHECK_FALSE(I("x y = y x").trivial());
  CHECK(dual_identity(dual_identity(I("x x y = y x x"))) ==
        I("x x y = y x x"));
  CHECK(dual_identity(I("x x y = y x x")) == I("y x x = x x y"));
  CHECK(dual_identity(I("x = x")) == I("x = x"));
  CHECK(dual_identity(I("x y t x y = y x t x y")) ==
        I("y x t y x = y x t x y"));
}

TEST_CASE("unordered comparison") {
  CHECK(same_identity(I("x y = y x"), I("y x = x y")));
  CHECK_FALSE(same_identity(I("x y = y x"), I("y x = x y"),
                            IdentityCompare::ordered));
  CHECK(same_identity(I("x y = y x"), I("x y = y x"),
                      IdentityCompare::ordered));
}

TEST_CASE("canonical form identifies renamings") {
  CHECK(canonical_form(I("a b = b a")) == canonical_form(I("x y = y x")));
  CHECK(canonical_form(I("x = x")) == canonical_form(I("y = y")));
  CHECK(canonical_form(I("z t x z x = x z x t z")) !=
        canonical_form(I("x z x y t y = x z y x t y")));
  Identity id = I("q p q = p q p");
  CHECK(canonical_form(canonical_form(id)) == canonical_form(id));
  CHECK(canonical_word(W("b a b")) == canonical_word(W("y x y")));
  CHECK(canonical_word(W("b a b")) != canonical_word(W("x x y")));
}

TEST_CASE("linear-balanced identities") {
  CHECK(is_linear_balanced(I("x z y t x y = x z y t y x")));
  CHECK_FALSE(is_linear_balanced(I("x x y = y x x")));
  CHECK(is_linear_balanced(I("x y = y x")));
  CHECK_FALSE(is_linear_balanced(I("x y = x z")));
  CHECK(is_linear_balanced(I("x = x")));
  CHECK_FALSE(is_linear_balanced(I("x y x y = x x y y")));
}

TEST_CASE("linear-balanced is stable under canonical form and duality") {
  for (const char* text :
       {"x z y t x y = x z y t y x", "x x y = y x x", "x y = y x",
        "x z x y t y = x z y x t y", "x y x = x y", "x t y x y = x t x y y"}) {
    Identity id = I(text);
    bool base = is_linear_balanced(id);
    CHECK(is_linear_balanced(canonical_form(id)) == base);
    CHECK(is_linear_balanced(dual_identity(id)) == base);
  }
}

TEST_CASE("inversion distance base cases") {
  CHECK(inversion_distance(W("x y x"), W("x y x")) == 0);
  CHECK(inversion_distance(W("x y x y"), W("y x x y")) == 1);
  CHECK_FALSE(inversion_distance(W("x y"), W("y x")).has_value());
  CHECK_FALSE(inversion_distance(W("x"), W("x x")).has_value());
}

TEST_CASE("inversion distance is a metric on each reachability class") {
  // All words of length 6 over three letters, grouped by letter multiset;
  // within each class the distance matrix must be symmetric and satisfy the
  // triangle inequality.
  const Letter ls[3] = {Letter("x"), Letter("y"), Letter("z")};
  std::map<std::vector<int>, std::vector<Word>> classes;
  for (int code = 0; code < 729; ++code) {
    int c = code;
    std::vector<Letter> w;
    std::vector<int> counts(3, 0);
    for (int i = 0; i < 6; ++i) {
      w.push_back(ls[c % 3]);
      ++counts[static_cast<std::size_t>(c % 3)];
      c /= 3;
    }
    classes[counts].push_back(Word(std::move(w)));
  }
  for (const auto& [counts, words] : classes) {
    std::size_t n = words.size();
    std::vector<std::vector<std::optional<std::size_t>>> d(
        n, std::vector<std::optional<std::size_t>>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        d[i][j] = inversion_distance(words[i], words[j]);
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(d[i][i] == 0);
      for (std::size_t j = 0; j < n; ++j) {
        CHECK(d[i][j] == d[j][i]);
        if (!d[i][j]) {
          continue;
        }
        for (std::size_t k = 0; k < n; ++k) {
          if (d[i][k] && d[k][j]) {
            CHECK(*d[i][j] <= *d[i][k] + *d[k][j]);
          }
        }
      }
    }
  }
}

}  // TEST_SUITE
