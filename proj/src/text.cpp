#include "varkit/text.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace varkit {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) {
    return "";
  }
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

// Splits on a separator at paren depth zero.
std::vector<std::string> split_top_level(const std::string& s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(') {
      ++depth;
    } else if (c == ')') {
      --depth;
    }
    if (c == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

struct SpecCall {
  std::string name;
  std::vector<std::string> positional;
  std::map<std::string, std::string> kv;
};

SpecCall parse_call(const std::string& spec) {
  SpecCall out;
  std::string s = trim(spec);
  std::size_t open = s.find('(');
  if (open == std::string::npos) {
    out.name = s;
    return out;
  }
  if (s.back() != ')') {
    throw std::invalid_argument("spec: missing closing parenthesis in " + s);
  }
  out.name = trim(s.substr(0, open));
  std::string inner = s.substr(open + 1, s.size() - open - 2);
  std::vector<std::string> segments = split_top_level(inner, ';');
  for (std::size_t i = 0; i < segments.size(); ++i) {
    std::string seg = trim(segments[i]);
    std::size_t eq = seg.find('=');
    bool looks_kv = i > 0 && eq != std::string::npos;
    if (!looks_kv) {
      if (i == 0) {
        for (const std::string& p : split_top_level(seg, ',')) {
          if (!trim(p).empty()) {
            out.positional.push_back(trim(p));
          }
        }
      } else {
        throw std::invalid_argument("spec: expected key=value, got " + seg);
      }
    } else {
      out.kv[trim(seg.substr(0, eq))] = trim(seg.substr(eq + 1));
    }
  }
  return out;
}

int to_int(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) {
      throw std::invalid_argument(s);
    }
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("spec: " + what + " is not an integer: " + s);
  }
}

int positional_int(const SpecCall& c, std::size_t i, const std::string& what) {
  if (i >= c.positional.size()) {
    throw std::invalid_argument("spec: " + c.name + " needs argument " + what);
  }
  return to_int(c.positional[i], what);
}

Perm kv_perm(const SpecCall& c, const std::string& key, bool required) {
  auto it = c.kv.find(key);
  if (it == c.kv.end()) {
    if (required) {
      throw std::invalid_argument("spec: " + c.name + " needs " + key + "=");
    }
    return Perm{};
  }
  return parse_perm(it->second);
}

int kv_int(const SpecCall& c, const std::string& key, int fallback) {
  auto it = c.kv.find(key);
  return it == c.kv.end() ? fallback : to_int(it->second, key);
}

}  // namespace

Letter parse_letter(const std::string& token) {
  std::size_t i = 0;
  std::string name;
  while (i < token.size() && std::islower(static_cast<unsigned char>(token[i]))) {
    name += token[i++];
  }
  std::string digits;
  while (i < token.size() && std::isdigit(static_cast<unsigned char>(token[i]))) {
    digits += token[i++];
  }
  int primes = 0;
  while (i < token.size() && token[i] == '\'') {
    ++primes;
    ++i;
  }
  if (i != token.size() || name.empty()) {
    throw std::invalid_argument("bad letter token: " + token);
  }
  return Letter(name, digits.empty() ? -1 : to_int(digits, "letter index"),
                primes);
}

Word parse_word(const std::string& text) {
  std::istringstream in(text);
  std::string token;
  std::vector<Letter> letters;
  while (in >> token) {
    int reps = 1;
    std::size_t caret = token.find('^');
    if (caret != std::string::npos) {
      reps = to_int(token.substr(caret + 1), "exponent");
      if (reps < 0) {
        throw std::invalid_argument("negative exponent in " + token);
      }
      token = token.substr(0, caret);
    }
    if (token == "1") {
      continue;  // the empty word contributes nothing
    }
    Letter l = parse_letter(token);
    for (int r = 0; r < reps; ++r) {
      letters.push_back(l);
    }
  }
  return Word(std::move(letters));
}

Identity parse_identity(const std::string& text) {
  std::vector<std::string> sides = split_top_level(text, '=');
  if (sides.size() != 2) {
    throw std::invalid_argument("identity must have exactly one '=': " + text);
  }
  return {parse_word(sides[0]), parse_word(sides[1])};
}

std::vector<Word> parse_m_literal(const std::string& text) {
  std::string s = trim(text);
  if (s.rfind("M(", 0) != 0 || s.back() != ')') {
    throw std::invalid_argument("monoid literal must look like M(...): " + s);
  }
  std::string inner = s.substr(2, s.size() - 3);
  std::vector<Word> words;
  for (const std::string& part : split_top_level(inner, ';')) {
    words.push_back(parse_word_or_gen(part));
  }
  return words;
}

FiniteMonoid parse_monoid_literal(const std::string& text) {
  std::string s = trim(text);
  if (s.rfind("sub(", 0) == 0 && s.back() == ')') {
    std::string inner = s.substr(4, s.size() - 5);
    std::vector<std::string> parts = split_top_level(inner, ';');
    if (parts.size() < 2) {
      throw std::invalid_argument(
          "sub(...) needs a monoid literal and a generator list");
    }
    FactorMonoid fm = factor_monoid(parse_m_literal(parts[0]));
    std::vector<int> gens;
    // remaining parts re-joined: generator list is comma separated
    std::string gen_text = parts[1];
    for (std::size_t i = 2; i < parts.size(); ++i) {
      gen_text += ";" + parts[i];
    }
    for (const std::string& g : split_top_level(gen_text, ',')) {
      Word w = parse_word_or_gen(g);
      int id = fm.id_of(w);
      if (id < 0) {
        throw std::invalid_argument("generator " + trim(g) +
                                    " is not an element of the monoid");
      }
      gens.push_back(id);
    }
    return submonoid(fm.monoid, gens);
  }
  return factor_monoid(parse_m_literal(s)).monoid;
}

Perm parse_perm(const std::string& text) {
  std::string s = trim(text);
  Perm p;
  if (s.empty() || s == "()") {
    return p;
  }
  for (const std::string& part : split_top_level(s, ',')) {
    p.images.push_back(to_int(trim(part), "permutation image"));
  }
  if (!p.valid()) {
    throw std::invalid_argument("not a permutation: " + text);
  }
  return p;
}

namespace {

GenResult generate_call(const SpecCall& c) {
  GenResult out;
  const std::string& n = c.name;
  if (n == "alpha") {
    out.identity = make_alpha();
  } else if (n == "beta") {
    out.identity = make_beta();
  } else if (n == "id") {
    if (c.positional.size() != 1) {
      throw std::invalid_argument("id(<tag>) needs one tag");
    }
    out.identity = named_identity(c.positional[0]);
  } else if (n == "delta") {
    out.identity = make_delta(positional_int(c, 0, "n"),
                              positional_int(c, 1, "m"));
  } else if (n == "a" || n == "a'" || n == "ahat") {
    AVariant v = n == "a" ? AVariant::plain
                          : n == "a'" ? AVariant::prime : AVariant::hat;
    out.word = make_word_a(positional_int(c, 0, "n"), positional_int(c, 1, "m"),
                           kv_perm(c, "perm", false), v);
  } else if (n == "apq") {
    out.word = make_word_a_pq(positional_int(c, 0, "n"),
                              positional_int(c, 1, "m"),
                              kv_perm(c, "perm", false), kv_int(c, "p", 0),
                              kv_int(c, "q", 0));
  } else if (n == "c" || n == "c'" || n == "d" || n == "d'") {
    CVariant v = (n == "c" || n == "d") ? CVariant::plain : CVariant::prime;
    int nn = positional_int(c, 0, "n");
    int mm = positional_int(c, 1, "m");
    int kk = positional_int(c, 2, "k");
    Perm tau = kv_perm(c, "perm", false);
    out.word = (n[0] == 'c') ? make_word_c(nn, mm, kk, tau, v)
                             : make_word_d(nn, mm, kk, tau, v);
  } else if (n == "vst") {
    int nn = positional_int(c, 0, "n");
    out.word = make_word_v_st(nn, kv_perm(c, "perm", true), kv_int(c, "s", 0),
                              kv_int(c, "t", 0));
  } else if (n == "vxieta") {
    int nn = positional_int(c, 0, "n");
    int mm = positional_int(c, 1, "m");
    Perm rho = c.kv.count("perm") ? kv_perm(c, "perm", true)
                                  : default_v_rho(nn, mm);
    out.word = make_word_v_xieta(nn, mm, rho, kv_perm(c, "xi", true),
                                 kv_perm(c, "eta", true));
  } else if (n == "apair") {
    out.identity = make_pair_a(positional_int(c, 0, "n"),
                               positional_int(c, 1, "m"),
                               kv_perm(c, "perm", false));
  } else if (n == "cpair" || n == "dpair") {
    int nn = positional_int(c, 0, "n");
    int mm = positional_int(c, 1, "m");
    int kk = positional_int(c, 2, "k");
    Perm tau = kv_perm(c, "perm", false);
    out.identity = n == "cpair" ? make_pair_c(nn, mm, kk, tau)
                                : make_pair_d(nn, mm, kk, tau);
  } else if (n == "nmperms") {
    out.perms = enum_nm_perms(positional_int(c, 0, "n"),
                              positional_int(c, 1, "m"));
  } else if (n == "basis") {
    if (c.positional.empty()) {
      throw std::invalid_argument("basis(<name>[,n][;bound=B])");
    }
    int arg = c.positional.size() > 1 ? to_int(c.positional[1], "n") : 1;
    out.basis =
        variety_basis(c.positional[0], arg, kv_int(c, "bound", 3));
  } else if (n == "dual") {
    if (c.positional.size() != 1) {
      throw std::invalid_argument("dual(<basis-spec>)");
    }
    GenResult inner = generate(c.positional[0]);
    if (inner.basis) {
      out.basis = dual_basis(*inner.basis);
    } else if (inner.identity) {
      out.identity = dual_identity(*inner.identity);
    } else if (inner.word) {
      out.word = reverse(*inner.word);
    } else {
      throw std::invalid_argument("dual(...) needs a basis, identity or word");
    }
  } else {
    throw std::invalid_argument("unknown generator: " + n);
  }
  return out;
}

}  // namespace

GenResult generate(const std::string& spec) {
  return generate_call(parse_call(spec));
}

VarietyBasis parse_basis_spec(const std::string& text) {
  GenResult r = generate(text);
  if (!r.basis) {
    throw std::invalid_argument("expected a basis spec: " + text);
  }
  return *r.basis;
}

Word parse_word_or_gen(const std::string& text) {
  std::string s = trim(text);
  if (s.rfind("gen:", 0) == 0) {
    GenResult r = generate(s.substr(4));
    if (!r.word) {
      throw std::invalid_argument("gen: spec does not name a word: " + s);
    }
    return *r.word;
  }
  return parse_word(s);
}

Identity parse_identity_or_gen(const std::string& text) {
  std::vector<std::string> sides = split_top_level(text, '=');
  if (sides.size() == 1 && trim(text).rfind("gen:", 0) == 0) {
    GenResult r = generate(trim(text).substr(4));
    if (!r.identity) {
      throw std::invalid_argument("gen: spec does not name an identity: " +
                                  text);
    }
    return *r.identity;
  }
  if (sides.size() == 2 && trim(sides[0]).rfind("gen:", 0) != 0 &&
      trim(sides[1]).rfind("gen:", 0) != 0) {
    return parse_identity(text);
  }
  if (sides.size() != 2) {
    throw std::invalid_argument("identity must have exactly one '=': " + text);
  }
  return {parse_word_or_gen(sides[0]), parse_word_or_gen(sides[1])};
}

}  // namespace varkit
