#include "varkit/claims.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "varkit/lattice.hpp"
#include "varkit/text.hpp"

namespace varkit {

const char* Claim::kind_name(Kind k) {
  switch (k) {
    case Kind::check: return "check";
    case Kind::isoterm: return "isoterm";
    case Kind::member: return "member";
    case Kind::orbit_closed: return "orbit_closed";
    case Kind::lattice_law: return "lattice_law";
    case Kind::isomorphic: return "isomorphic";
  }
  return "?";
}

std::string Claim::str() const {
  return std::string(kind_name(kind)) + " " + subject + " :: " + object +
         " ; expect " + expectation;
}

const char* ClaimOutcome::status_name() const {
  switch (status) {
    case Status::pass: return "PASS";
    case Status::fail: return "FAIL";
    case Status::unknown: return "UNKNOWN";
    case Status::error: return "ERROR";
  }
  return "?";
}

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) {
    return "";
  }
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::optional<Claim::Kind> kind_from(const std::string& s) {
  using K = Claim::Kind;
  static const std::map<std::string, K> table{
      {"check", K::check},       {"isoterm", K::isoterm},
      {"member", K::member},     {"orbit_closed", K::orbit_closed},
      {"lattice_law", K::lattice_law}, {"isomorphic", K::isomorphic}};
  auto it = table.find(s);
  if (it == table.end()) {
    return std::nullopt;
  }
  return it->second;
}

}  // namespace

std::vector<Claim> parse_manifest(const std::string& text) {
  std::vector<Claim> out;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) {
      continue;
    }
    auto fail = [line_no, &raw](const std::string& why) {
      throw std::invalid_argument("manifest line " + std::to_string(line_no) +
                                  ": " + why + " in: " + trim(raw));
    };
    std::size_t sep = line.find("::");
    if (sep == std::string::npos) {
      fail("missing '::'");
    }
    // The expectation separator sits outside any parenthesized spec.
    std::size_t semi = std::string::npos;
    int depth = 0;
    for (std::size_t k = sep; k < line.size(); ++k) {
      if (line[k] == '(') {
        ++depth;
      } else if (line[k] == ')') {
        --depth;
      } else if (line[k] == ';' && depth == 0) {
        semi = k;
        break;
      }
    }
    if (semi == std::string::npos) {
      fail("missing '; expect'");
    }
    std::string head = trim(line.substr(0, sep));
    std::size_t space = head.find_first_of(" \t");
    if (space == std::string::npos) {
      fail("missing subject");
    }
    std::string kind_word = head.substr(0, space);
    auto kind = kind_from(kind_word);
    if (!kind) {
      fail("unknown claim kind '" + kind_word + "'");
    }
    std::string expect_part = trim(line.substr(semi + 1));
    if (expect_part.rfind("expect", 0) != 0) {
      fail("expected 'expect <expectation>'");
    }
    Claim c;
    c.kind = *kind;
    c.subject = trim(head.substr(space + 1));
    c.object = trim(line.substr(sep + 2, semi - sep - 2));
    c.expectation = trim(expect_part.substr(6));
    c.line = line_no;
    if (c.expectation.empty()) {
      fail("empty expectation");
    }
    out.push_back(std::move(c));
  }
  return out;
}

namespace {

struct Expectation {
  std::string verdict;  // holds/fails/unknown/yes/no
  std::optional<std::size_t> size;
};

Expectation parse_expectation(const std::string& text) {
  Expectation out;
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    if (token.rfind("size=", 0) == 0) {
      out.size = static_cast<std::size_t>(std::stoul(token.substr(5)));
    } else if (out.verdict.empty()) {
      out.verdict = token;
    } else {
      throw std::invalid_argument("bad expectation: " + text);
    }
  }
  if (out.verdict.empty()) {
    throw std::invalid_argument("bad expectation: " + text);
  }
  return out;
}

// Maps yes/no onto holds/fails so both spellings work.
Verdict::Kind expected_kind(const std::string& v) {
  if (v == "holds" || v == "yes" || v == "closed") {
    return Verdict::Kind::holds;
  }
  if (v == "fails" || v == "no" || v == "open") {
    return Verdict::Kind::fails;
  }
  if (v == "unknown") {
    return Verdict::Kind::unknown;
  }
  throw std::invalid_argument("unknown expectation verdict: " + v);
}

ClaimOutcome against_expectation(const Claim& claim, const Verdict& verdict,
                                 std::string detail, std::string replay) {
  Expectation exp = parse_expectation(claim.expectation);
  Verdict::Kind want = expected_kind(exp.verdict);
  ClaimOutcome out;
  out.claim = claim;
  out.detail = std::move(detail);
  out.replay = std::move(replay);
  if (verdict.kind == want) {
    out.status = ClaimOutcome::Status::pass;
  } else if (verdict.unknown()) {
    out.status = ClaimOutcome::Status::unknown;
    out.detail += out.detail.empty() ? "" : "; ";
    out.detail += verdict.note;
  } else {
    out.status = ClaimOutcome::Status::fail;
  }
  return out;
}

Caps caps_for(const Word& seed, const RunOptions& opt) {
  Caps c = Caps::for_seed(seed);
  if (opt.max_len) {
    c.max_word_length = *opt.max_len;
    c.max_candidate_length = *opt.max_len;
  }
  if (opt.max_orbit) {
    c.max_orbit_size = *opt.max_orbit;
  }
  return c;
}

VarietyBasis basis_with_bound(const std::string& spec, const RunOptions& opt) {
  VarietyBasis b = parse_basis_spec(spec);
  if (opt.bound) {
    b.bound = *opt.bound;
  }
  return b;
}

std::string verdict_detail(const Verdict& v) {
  std::string out = v.name();
  if (v.violated) {
    out += " [" + v.violated->str() + "]";
  }
  if (!v.note.empty()) {
    out += " (" + v.note + ")";
  }
  return out;
}

ClaimOutcome eval_claim(const Claim& claim, const RunOptions& opt) {
  using K = Claim::Kind;
  switch (claim.kind) {
    case K::check: {
      FactorMonoid fm = factor_monoid(parse_m_literal(claim.subject));
      Identity id = parse_identity_or_gen(claim.object);
      Verdict v = satisfies(fm, id, opt.strategy);
      return against_expectation(
          claim, v, verdict_detail(v),
          "varkit check '" + claim.subject + "' '" + claim.object + "'");
    }
    case K::isoterm: {
      Word w = parse_word_or_gen(claim.subject);
      Caps caps = caps_for(w, opt);
      Verdict v;
      std::string flag;
      if (trim(claim.object).rfind("M(", 0) == 0) {
        v = isoterm_monoid(w, factor_monoid(parse_m_literal(claim.object)),
                           caps, opt.strategy);
        flag = "--monoid '" + claim.object + "'";
      } else {
        v = isoterm_basis(w, basis_with_bound(claim.object, opt), caps);
        flag = "--basis '" + claim.object + "'";
      }
      return against_expectation(claim, v, verdict_detail(v),
                                 "varkit isoterm '" + claim.subject + "' " +
                                     flag);
    }
    case K::member: {
      std::vector<Word> ws = parse_m_literal(claim.subject);
      Caps caps;
      if (opt.max_orbit) {
        caps.max_orbit_size = *opt.max_orbit;
      }
      Verdict v;
      if (trim(claim.object).rfind("M(", 0) == 0) {
        v = member(ws, factor_monoid(parse_m_literal(claim.object)), caps);
      } else {
        v = member(ws, basis_with_bound(claim.object, opt), caps);
      }
      return against_expectation(claim, v, verdict_detail(v),
                                 "varkit member '" + claim.subject +
                                     "' --in '" + claim.object + "'");
    }
    case K::orbit_closed: {
      std::string subj = claim.subject;
      std::size_t arrow = subj.find("->");
      std::optional<Word> target;
      if (arrow != std::string::npos) {
        target = parse_word_or_gen(subj.substr(arrow + 2));
        subj = subj.substr(0, arrow);
      }
      Word seed = parse_word_or_gen(subj);
      Caps caps = caps_for(seed, opt);
      std::vector<Identity> ids;
      std::string obj = trim(claim.object);
      if (obj.rfind("basis(", 0) == 0 || obj.rfind("dual(", 0) == 0) {
        ids = basis_with_bound(obj, opt).instantiate();
      } else {
        ids.push_back(parse_identity_or_gen(obj));
      }
      Verdict v;
      std::string detail;
      if (target) {
        bool decisively_not = false;
        bool reached = deducible(seed, *target, ids, caps, &decisively_not);
        if (reached) {
          v = Verdict::make_holds();
          detail = "target reachable";
        } else if (decisively_not) {
          v = Verdict::make_fails();
          detail = "target not reachable (orbit closed)";
        } else {
          v = Verdict::make_unknown("orbit not closed within caps");
          detail = "target not seen, orbit not closed";
        }
      } else {
        OrbitResult orb = orbit(seed, ids, caps);
        Expectation exp = parse_expectation(claim.expectation);
        bool size_ok = !exp.size || orb.words.size() == *exp.size;
        v = orb.closed && size_ok ? Verdict::make_holds()
            : !orb.closed ? Verdict::make_fails("orbit not closed")
                          : Verdict::make_fails("orbit size mismatch");
        detail = "orbit size " + std::to_string(orb.words.size()) +
                 (orb.closed ? ", closed" : ", not closed");
      }
      return against_expectation(claim, v, detail,
                                 "varkit orbit '" + claim.subject +
                                     "' --against '" + claim.object + "'");
    }
    case K::lattice_law: {
      std::string name = trim(claim.subject);
      std::optional<FinitePoset> poset;
      if (name == "fig1") {
        poset = fig1_reference_lattice();
      } else if (name == "n5") {
        std::vector<std::vector<bool>> leq(5, std::vector<bool>(5, false));
        auto set = [&leq](int a, int b) {
          leq[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = true;
        };
        for (int i = 0; i < 5; ++i) set(i, i);
        // 0 bottom, 1 < 2 chain, 3 side, 4 top
        set(0, 1); set(0, 2); set(0, 3); set(0, 4);
        set(1, 2); set(1, 4); set(2, 4); set(3, 4);
        poset = FinitePoset({"0", "a", "c", "b", "1"}, leq);
      } else if (name == "m3") {
        std::vector<std::vector<bool>> leq(5, std::vector<bool>(5, false));
        auto set = [&leq](int a, int b) {
          leq[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = true;
        };
        for (int i = 0; i < 5; ++i) set(i, i);
        set(0, 1); set(0, 2); set(0, 3); set(0, 4);
        set(1, 4); set(2, 4); set(3, 4);
        poset = FinitePoset({"0", "a", "b", "c", "1"}, leq);
      } else {
        throw std::invalid_argument("unknown lattice name: " + name);
      }
      MeetJoin mj = lattice_ops(*poset);
      if (!mj.is_lattice) {
        throw std::logic_error("named poset is not a lattice");
      }
      LawReport laws = check_laws(*poset, mj);
      std::string law = trim(claim.object);
      bool value = false;
      if (law == "modular") {
        value = laws.modular;
      } else if (law == "distributive") {
        value = laws.distributive;
      } else {
        throw std::invalid_argument("unknown law: " + law);
      }
      Verdict v = value ? Verdict::make_holds() : Verdict::make_fails();
      return against_expectation(claim, v,
                                 law + (value ? " holds" : " fails"),
                                 "varkit lattice " + name);
    }
    case K::isomorphic: {
      FiniteMonoid a = parse_monoid_literal(claim.subject);
      FiniteMonoid b = parse_monoid_literal(claim.object);
      bool iso = isomorphic(a, b);
      Verdict v = iso ? Verdict::make_holds() : Verdict::make_fails();
      return against_expectation(
          claim, v,
          "sizes " + std::to_string(a.size()) + " and " +
              std::to_string(b.size()) + (iso ? ", isomorphic" : ", distinct"),
          "varkit iso '" + claim.subject + "' '" + claim.object + "'");
    }
  }
  throw std::logic_error("unhandled claim kind");
}

}  // namespace

ClaimOutcome run_claim(const Claim& claim, const RunOptions& options) {
  try {
    return eval_claim(claim, options);
  } catch (const std::exception& e) {
    ClaimOutcome out;
    out.claim = claim;
    out.status = ClaimOutcome::Status::error;
    out.detail = e.what();
    return out;
  }
}

std::vector<ClaimOutcome> run_claims(const std::vector<Claim>& claims,
                                     const RunOptions& options) {
  std::vector<ClaimOutcome> out(claims.size());
  if (options.jobs <= 1) {
    for (std::size_t i = 0; i < claims.size(); ++i) {
      out[i] = run_claim(claims[i], options);
    }
    return out;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= claims.size()) {
        return;
      }
      out[i] = run_claim(claims[i], options);
    }
  };
  std::vector<std::thread> pool;
  int jobs = std::min<int>(options.jobs, static_cast<int>(claims.size()));
  for (int j = 0; j < jobs; ++j) {
    pool.emplace_back(worker);
  }
  for (std::thread& t : pool) {
    t.join();
  }
  return out;
}

}  // namespace varkit
