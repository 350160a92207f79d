#ifndef VARKIT_CLAIMS_HPP_
#define VARKIT_CLAIMS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "varkit/deduction.hpp"
#include "varkit/monoid.hpp"

namespace varkit {

// One line of a claims manifest:
//   <kind> <subject> :: <object> ; expect <expectation> [# comment]
struct Claim {
  enum class Kind { check, isoterm, member, orbit_closed, lattice_law,
                    isomorphic };

  Kind kind;
  std::string subject;
  std::string object;
  std::string expectation;
  int line = 0;

  static const char* kind_name(Kind k);
  std::string str() const;
};

std::vector<Claim> parse_manifest(const std::string& text);

struct ClaimOutcome {
  enum class Status { pass, fail, unknown, error };

  Status status = Status::error;
  Claim claim;
  std::string detail;
  std::string replay;

  const char* status_name() const;
};

struct RunOptions {
  std::optional<std::size_t> max_len;
  std::optional<std::size_t> max_orbit;
  std::optional<int> bound;
  Strategy strategy = Strategy::automatic;
  int jobs = 1;
};

ClaimOutcome run_claim(const Claim& claim, const RunOptions& options);

// Outcomes in manifest order regardless of scheduling.
std::vector<ClaimOutcome> run_claims(const std::vector<Claim>& claims,
                                     const RunOptions& options);

}  // namespace varkit

#endif  // VARKIT_CLAIMS_HPP_
