#ifndef VARKIT_LATTICE_HPP_
#define VARKIT_LATTICE_HPP_

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "varkit/deduction.hpp"
#include "varkit/monoid.hpp"
#include "varkit/verdict.hpp"

namespace varkit {

// Reflexive, antisymmetric, transitive relation over labelled points;
// validated on construction.
class FinitePoset {
 public:
  FinitePoset(std::vector<std::string> labels, std::vector<std::vector<bool>> leq);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int i) const {
    return labels_[static_cast<std::size_t>(i)];
  }
  bool leq(int i, int j) const {
    return leq_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  bool covers(int j, int i) const;  // j covers i

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<bool>> leq_;
};

struct MeetJoin {
  bool is_lattice = false;
  std::vector<std::vector<int>> meet;  // -1 where undefined
  std::vector<std::vector<int>> join;
  std::optional<std::pair<int, int>> witness;  // pair with no meet or join
};

MeetJoin lattice_ops(const FinitePoset& p);

struct LawReport {
  bool modular = false;
  bool distributive = false;
  std::optional<std::array<int, 3>> modular_witness;      // a, b, c with a<=c
  std::optional<std::array<int, 3>> distributive_witness;  // a, b, c
  // Forbidden configurations as element lists: pentagon {o, a, c, b, i} with
  // o < a < c < i and b incomparable; diamond {o, a, b, c, i}.
  std::optional<std::array<int, 5>> pentagon;
  std::optional<std::array<int, 5>> diamond;
};

LawReport check_laws(const FinitePoset& p, const MeetJoin& mj);

// Exhaustive search over 5-element subsets closed under meet and join.
std::optional<std::array<int, 5>> find_sublattice_pentagon(
    const FinitePoset& p, const MeetJoin& mj);
std::optional<std::array<int, 5>> find_sublattice_diamond(
    const FinitePoset& p, const MeetJoin& mj);

struct Descriptor {
  std::string label;
  std::variant<VarietyBasis, FactorMonoid, FiniteMonoid> object;
};

using MembershipOracle =
    std::function<Verdict(const Descriptor&, const Descriptor&)>;

struct PosetBuild {
  FinitePoset poset;                          // decisive containments, closed
  std::vector<std::vector<Verdict>> verdicts;  // raw pairwise verdicts
};

// Runs the oracle on every ordered pair; decisive holds verdicts, transitively
// closed, become the order.  Contradictory decisive verdicts (i <= j both
// confirmed and refuted through transitivity) abort with std::runtime_error.
PosetBuild build_poset(const std::vector<Descriptor>& descriptors,
                       const MembershipOracle& oracle);

// Containment checks between variety descriptors:
//   basis vs basis      derive one basis from the other; refutations need an
//                       underivable identity plus a countermodel
//   monoid vs basis     evaluate the basis identities in the monoid
//   factor-monoid vs V  every generating word must be an isoterm for V
//   monoid vs monoid    holds via a division witness, fails via a separating
//                       identity
MembershipOracle default_oracle(const Caps& caps,
                                std::vector<FactorMonoid> countermodels = {});

// The scenario reproducing the published subvariety diagram: descriptors for
// the trivial and semilattice varieties plus seven factor monoids, and the
// 11-point reference lattice the diagram draws (two unnamed join points).
std::vector<Descriptor> fig1_descriptors();
FinitePoset fig1_reference_lattice();
// Expected order restricted to the nine named descriptors.
bool fig1_expected_leq(int i, int j);

FiniteMonoid trivial_monoid();
FiniteMonoid two_element_semilattice();

std::string to_dot(const FinitePoset& p);
std::string to_adjacency(const FinitePoset& p);

}  // namespace varkit

#endif  // VARKIT_LATTICE_HPP_
