#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "varkit/claims.hpp"
#include "varkit/deduction.hpp"
#include "varkit/lattice.hpp"
#include "varkit/monoid.hpp"
#include "varkit/text.hpp"

using namespace varkit;
using nlohmann::json;

namespace {

struct GlobalOptions {
  std::optional<std::size_t> max_len;
  std::optional<std::size_t> max_orbit;
  std::optional<int> bound;
  std::string strategy = "auto";
  int jobs = 1;
  std::string format = "text";
};

Strategy strategy_of(const std::string& name) {
  if (name == "auto") {
    return Strategy::automatic;
  }
  if (name == "exhaustive") {
    return Strategy::exhaustive;
  }
  if (name == "matching" || name == "factor_matching") {
    return Strategy::factor_matching;
  }
  throw CLI::ValidationError("--strategy must be auto, exhaustive or matching");
}

Caps caps_for(const Word& seed, const GlobalOptions& g) {
  Caps caps = Caps::for_seed(seed);
  if (g.max_len) {
    caps.max_word_length = *g.max_len;
    caps.max_candidate_length = *g.max_len;
  }
  if (g.max_orbit) {
    caps.max_orbit_size = *g.max_orbit;
  }
  return caps;
}

VarietyBasis basis_of(const std::string& spec, const GlobalOptions& g) {
  VarietyBasis b = parse_basis_spec(spec);
  if (g.bound) {
    b.bound = *g.bound;
  }
  return b;
}

void emit(const GlobalOptions& g, const json& payload,
          const std::string& text) {
  if (g.format == "json-lines") {
    std::cout << payload.dump() << "\n";
  } else {
    std::cout << text << "\n";
  }
}

int report_verdict(const GlobalOptions& g, const std::string& op,
                   const Verdict& v) {
  json payload{{"op", op}, {"verdict", v.name()}};
  std::string text = op + ": " + v.name();
  if (v.violated) {
    payload["witness_identity"] = v.violated->str();
    text += "\n  witness identity: " + v.violated->str();
  }
  if (v.witness_word) {
    payload["witness_word"] = v.witness_word->str();
    text += "\n  witness word: " + v.witness_word->str();
  }
  if (v.assignment) {
    json a = json::object();
    std::string atext;
    for (const auto& [l, e] : *v.assignment) {
      a[l.str()] = e;
      if (!atext.empty()) {
        atext += ", ";
      }
      atext += l.str() + " -> #" + std::to_string(e);
    }
    payload["assignment"] = a;
    text += "\n  assignment: " + atext;
  }
  if (!v.note.empty()) {
    payload["note"] = v.note;
    text += "\n  note: " + v.note;
  }
  emit(g, payload, text);
  return v.exit_code();
}

int cmd_gen(const GlobalOptions& g, const std::vector<std::string>& specs) {
  for (const std::string& spec : specs) {
    if (spec.rfind("M(", 0) == 0 || spec.rfind("sub(", 0) == 0) {
      FiniteMonoid m = parse_monoid_literal(spec);
      emit(g, json{{"spec", spec}, {"monoid", serialize(m)}}, serialize(m));
      continue;
    }
    GenResult r = generate(spec);
    if (r.word) {
      emit(g, json{{"spec", spec}, {"word", r.word->str()}}, r.word->str());
    } else if (r.identity) {
      emit(g, json{{"spec", spec}, {"identity", r.identity->str()}},
           r.identity->str());
    } else if (r.perms) {
      json list = json::array();
      std::string text;
      for (const Perm& p : *r.perms) {
        list.push_back(p.str());
        text += p.str() + "\n";
      }
      if (!text.empty()) {
        text.pop_back();
      }
      emit(g, json{{"spec", spec}, {"perms", list}}, text);
    } else if (r.basis) {
      VarietyBasis b = *r.basis;
      if (g.bound) {
        b.bound = *g.bound;
      }
      json list = json::array();
      std::string text = "basis " + b.name +
                         (b.truncated()
                              ? " (schemas instantiated to bound " +
                                    std::to_string(b.bound) + ")"
                              : "");
      for (const Identity& id : b.instantiate()) {
        list.push_back(id.str());
        text += "\n  " + id.str();
      }
      emit(g, json{{"spec", spec}, {"basis", b.name}, {"identities", list}},
           text);
    }
  }
  return 0;
}

int cmd_lattice(const GlobalOptions& g, const std::string& dot_path,
                const std::string& adjacency_path) {
  Caps caps;
  if (g.max_orbit) {
    caps.max_orbit_size = *g.max_orbit;
  }
  PosetBuild build = build_poset(fig1_descriptors(), default_oracle(caps));
  const FinitePoset& computed = build.poset;

  int unknowns = 0;
  int contradictions = 0;
  std::ostringstream text;
  text << "computed decisive order:\n" << to_adjacency(computed);
  for (int i = 0; i < computed.size(); ++i) {
    for (int j = 0; j < computed.size(); ++j) {
      if (i == j) {
        continue;
      }
      const Verdict& v = build.verdicts[static_cast<std::size_t>(i)]
                                       [static_cast<std::size_t>(j)];
      bool expected = fig1_expected_leq(i, j);
      if (v.unknown() && !computed.leq(i, j)) {
        ++unknowns;
      } else if ((computed.leq(i, j) || v.holds()) != expected) {
        ++contradictions;
        text << "MISMATCH " << computed.label(i) << " <= " << computed.label(j)
             << ": computed " << v.name() << ", diagram says "
             << (expected ? "yes" : "no") << "\n";
      }
    }
  }
  text << "verdicts undecided within caps: " << unknowns << "\n";
  text << "contradictions with the reference diagram: " << contradictions
       << "\n";

  FinitePoset reference = fig1_reference_lattice();
  MeetJoin mj = lattice_ops(reference);
  LawReport laws = check_laws(reference, mj);
  text << "reference lattice: "
       << (mj.is_lattice ? "lattice" : "not a lattice") << ", modular "
       << (laws.modular ? "yes" : "no") << ", distributive "
       << (laws.distributive ? "yes" : "no") << "\n";
  if (laws.diamond) {
    text << "diamond witness:";
    for (int e : *laws.diamond) {
      text << ' ' << reference.label(e);
    }
    text << "\n";
  }

  if (!dot_path.empty()) {
    std::ofstream out(dot_path);
    out << to_dot(computed);
  }
  if (!adjacency_path.empty()) {
    std::ofstream out(adjacency_path);
    out << to_adjacency(computed);
  }

  json payload{{"op", "lattice"},
               {"unknowns", unknowns},
               {"contradictions", contradictions},
               {"modular", laws.modular},
               {"distributive", laws.distributive}};
  emit(g, payload, text.str());
  return contradictions == 0 ? 0 : 1;
}

int cmd_verify(const GlobalOptions& g, const std::string& path,
               bool unknown_as_fail) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "cannot open manifest: " << path << "\n";
    return 3;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::vector<Claim> claims;
  try {
    claims = parse_manifest(buffer.str());
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 3;
  }
  RunOptions opt;
  opt.max_len = g.max_len;
  opt.max_orbit = g.max_orbit;
  opt.bound = g.bound;
  opt.strategy = strategy_of(g.strategy);
  opt.jobs = g.jobs;
  std::vector<ClaimOutcome> outcomes = run_claims(claims, opt);
  int fails = 0;
  int unknowns = 0;
  int errors = 0;
  for (const ClaimOutcome& o : outcomes) {
    json payload{{"line", o.claim.line},
                 {"kind", Claim::kind_name(o.claim.kind)},
                 {"status", o.status_name()},
                 {"claim", o.claim.str()},
                 {"detail", o.detail},
                 {"replay", o.replay}};
    std::string text = std::string(o.status_name()) + " line " +
                       std::to_string(o.claim.line) + ": " + o.claim.str();
    if (!o.detail.empty()) {
      text += "\n    " + o.detail;
    }
    if (!o.replay.empty()) {
      text += "\n    replay: " + o.replay;
    }
    emit(g, payload, text);
    fails += o.status == ClaimOutcome::Status::fail;
    unknowns += o.status == ClaimOutcome::Status::unknown;
    errors += o.status == ClaimOutcome::Status::error;
  }
  std::string summary = std::to_string(outcomes.size()) + " claims, " +
                        std::to_string(fails) + " failed, " +
                        std::to_string(unknowns) + " unknown, " +
                        std::to_string(errors) + " errors";
  emit(g,
       json{{"op", "summary"},
            {"claims", outcomes.size()},
            {"failed", fails},
            {"unknown", unknowns},
            {"errors", errors}},
       summary);
  if (errors > 0) {
    return 3;
  }
  if (fails > 0) {
    return 1;
  }
  if (unknowns > 0 && unknown_as_fail) {
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"toolkit for words, identities, factor monoids and "
               "subvariety-lattice checks"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--max-len", g.max_len, "cap on rewritten word length");
  app.add_option("--max-orbit", g.max_orbit, "cap on orbit size");
  app.add_option("--bound", g.bound, "schema instantiation weight bound");
  app.add_option("--strategy", g.strategy,
                 "satisfaction strategy: auto, exhaustive, matching");
  app.add_option("--jobs", g.jobs, "parallel claim evaluation");
  app.add_option("--format", g.format, "output format: text or json-lines")
      ->check(CLI::IsMember({"text", "json-lines"}));

  auto* gen = app.add_subcommand("gen", "expand generator specs");
  std::vector<std::string> gen_specs;
  gen->add_option("spec", gen_specs, "family, identity, basis or monoid spec")
      ->required();

  auto* check = app.add_subcommand("check", "evaluate an identity in a monoid");
  std::string check_monoid;
  std::string check_identity;
  check->add_option("monoid", check_monoid, "monoid literal M(...)")
      ->required();
  check->add_option("identity", check_identity, "identity u = v")->required();

  auto* orbit_cmd = app.add_subcommand("orbit", "rewriting orbit of a word");
  std::string orbit_word;
  std::string orbit_basis_spec;
  std::string orbit_identity;
  std::string orbit_target;
  orbit_cmd->add_option("word", orbit_word, "seed word")->required();
  orbit_cmd->add_option("--basis", orbit_basis_spec, "basis spec");
  orbit_cmd->add_option("--id", orbit_identity, "single identity");
  orbit_cmd->add_option("--target", orbit_target, "word to search for");

  auto* isoterm_cmd = app.add_subcommand("isoterm", "isoterm verdict");
  std::string isoterm_word;
  std::string isoterm_basis_spec;
  std::string isoterm_monoid_lit;
  isoterm_cmd->add_option("word", isoterm_word, "the word")->required();
  isoterm_cmd->add_option("--basis", isoterm_basis_spec, "basis spec");
  isoterm_cmd->add_option("--monoid", isoterm_monoid_lit, "monoid literal");

  auto* member_cmd =
      app.add_subcommand("member", "factor-monoid variety membership");
  std::string member_monoid;
  std::string member_in;
  member_cmd->add_option("monoid", member_monoid, "monoid literal M(...)")
      ->required();
  member_cmd->add_option("--in", member_in, "basis spec or monoid literal")
      ->required();

  auto* lattice_cmd =
      app.add_subcommand("lattice", "built-in subvariety diagram scenario");
  bool fig1 = false;
  std::string lattice_name;
  std::string dot_path;
  std::string adjacency_path;
  lattice_cmd->add_flag("--fig1", fig1, "run the published diagram scenario");
  lattice_cmd->add_option("name", lattice_name,
                          "named lattice to report on: fig1, n5, m3");
  lattice_cmd->add_option("--dot", dot_path, "write computed order as DOT");
  lattice_cmd->add_option("--adjacency", adjacency_path,
                          "write computed order as adjacency text");

  auto* iso_cmd = app.add_subcommand("iso", "monoid isomorphism check");
  std::string iso_a;
  std::string iso_b;
  iso_cmd->add_option("first", iso_a, "monoid or sub(...) literal")
      ->required();
  iso_cmd->add_option("second", iso_b, "monoid or sub(...) literal")
      ->required();

  auto* verify_cmd = app.add_subcommand("verify", "run a claims manifest");
  std::string manifest_path;
  bool unknown_as_fail = false;
  verify_cmd->add_option("manifest", manifest_path, "claims file")->required();
  verify_cmd->add_flag("--unknown-as-fail", unknown_as_fail,
                       "treat UNKNOWN outcomes as failures");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      return cmd_gen(g, gen_specs);
    }
    if (check->parsed()) {
      FactorMonoid fm = factor_monoid(parse_m_literal(check_monoid));
      Verdict v = satisfies(fm, parse_identity_or_gen(check_identity),
                            strategy_of(g.strategy));
      return report_verdict(g, "check", v);
    }
    if (orbit_cmd->parsed()) {
      Word seed = parse_word_or_gen(orbit_word);
      Caps caps = caps_for(seed, g);
      std::vector<Identity> ids;
      if (!orbit_basis_spec.empty()) {
        ids = basis_of(orbit_basis_spec, g).instantiate();
      }
      if (!orbit_identity.empty()) {
        ids.push_back(parse_identity_or_gen(orbit_identity));
      }
      if (ids.empty()) {
        std::cerr << "orbit: need --basis or --id\n";
        return 3;
      }
      if (!orbit_target.empty()) {
        Word target = parse_word_or_gen(orbit_target);
        bool decisively_not = false;
        std::vector<Word> chain;
        bool found =
            deducible(seed, target, ids, caps, &decisively_not, &chain);
        Verdict v = found ? Verdict::make_holds()
                    : decisively_not
                        ? Verdict::make_fails("target unreachable")
                        : Verdict::make_unknown("orbit not closed within caps");
        if (found) {
          std::string steps;
          for (const Word& w : chain) {
            steps += (steps.empty() ? "" : " -> ") + w.str();
          }
          v.note = steps;
        }
        return report_verdict(g, "orbit", v);
      }
      OrbitResult orb = orbit(seed, ids, caps);
      json words = json::array();
      std::string text = "orbit size " + std::to_string(orb.words.size()) +
                         (orb.closed ? " (closed)" : " (not closed)");
      for (const Word& w : orb.words) {
        words.push_back(w.str());
        text += "\n  " + w.str();
      }
      emit(g,
           json{{"op", "orbit"},
                {"closed", orb.closed},
                {"size", orb.words.size()},
                {"words", words}},
           text);
      return orb.closed ? 0 : 2;
    }
    if (isoterm_cmd->parsed()) {
      Word w = parse_word_or_gen(isoterm_word);
      Caps caps = caps_for(w, g);
      Verdict v;
      if (!isoterm_basis_spec.empty()) {
        v = isoterm_basis(w, basis_of(isoterm_basis_spec, g), caps);
      } else if (!isoterm_monoid_lit.empty()) {
        v = isoterm_monoid(w,
                           factor_monoid(parse_m_literal(isoterm_monoid_lit)),
                           caps, strategy_of(g.strategy));
      } else {
        std::cerr << "isoterm: need --basis or --monoid\n";
        return 3;
      }
      return report_verdict(g, "isoterm", v);
    }
    if (member_cmd->parsed()) {
      std::vector<Word> ws = parse_m_literal(member_monoid);
      Caps caps;
      if (g.max_orbit) {
        caps.max_orbit_size = *g.max_orbit;
      }
      Verdict v;
      if (member_in.rfind("M(", 0) == 0) {
        v = member(ws, factor_monoid(parse_m_literal(member_in)), caps);
      } else {
        v = member(ws, basis_of(member_in, g), caps);
      }
      return report_verdict(g, "member", v);
    }
    if (lattice_cmd->parsed()) {
      (void)fig1;
      if (lattice_name.empty() || lattice_name == "fig1") {
        return cmd_lattice(g, dot_path, adjacency_path);
      }
      Claim claim;
      claim.kind = Claim::Kind::lattice_law;
      claim.subject = lattice_name;
      claim.object = "modular";
      claim.expectation = "yes";
      RunOptions opt;
      ClaimOutcome modular = run_claim(claim, opt);
      claim.object = "distributive";
      ClaimOutcome distributive = run_claim(claim, opt);
      if (modular.status == ClaimOutcome::Status::error) {
        std::cerr << modular.detail << "\n";
        return 3;
      }
      emit(g,
           json{{"op", "lattice"},
                {"name", lattice_name},
                {"modular", modular.status == ClaimOutcome::Status::pass},
                {"distributive",
                 distributive.status == ClaimOutcome::Status::pass}},
           lattice_name + ": modular " +
               (modular.status == ClaimOutcome::Status::pass ? "yes" : "no") +
               ", distributive " +
               (distributive.status == ClaimOutcome::Status::pass ? "yes"
                                                                  : "no"));
      return 0;
    }
    if (iso_cmd->parsed()) {
      FiniteMonoid a = parse_monoid_literal(iso_a);
      FiniteMonoid b = parse_monoid_literal(iso_b);
      bool same = isomorphic(a, b);
      Verdict v = same ? Verdict::make_holds() : Verdict::make_fails();
      v.note = "sizes " + std::to_string(a.size()) + " and " +
               std::to_string(b.size());
      return report_verdict(g, "iso", v);
    }
    if (verify_cmd->parsed()) {
      return cmd_verify(g, manifest_path, unknown_as_fail);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 3;
}
