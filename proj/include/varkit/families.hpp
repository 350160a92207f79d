#ifndef VARKIT_FAMILIES_HPP_
#define VARKIT_FAMILIES_HPP_

#include <compare>
#include <string>
#include <vector>

#include "varkit/identities.hpp"
#include "varkit/words.hpp"

namespace varkit {

// Permutation of {1..n}, stored as the image list (1-based values).
struct Perm {
  std::vector<int> images;

  static Perm identity(int n);

  int degree() const { return static_cast<int>(images.size()); }
  bool valid() const;
  // Image of i, 1-based.
  int map(int i) const { return images[static_cast<std::size_t>(i - 1)]; }

  std::string str() const;  // comma-separated image list, "()" when empty

  friend auto operator<=>(const Perm&, const Perm&) = default;
};

std::vector<Perm> all_perms(int n);

// Consecutive images alternate between {1..n} and {n+1..n+m}.
bool alternates(const Perm& p, int n, int m);

// All alternating permutations of {1..n+m}; empty unless |n - m| <= 1.
// For n + m == 0 the single empty permutation qualifies vacuously.
std::vector<Perm> enum_nm_perms(int n, int m);

// Lifts theta on {1..2k} (odd positions into {1..k}, even into {k+1..2k})
// to an alternating permutation on {1..2k+4}.  Requires k >= 2.
Perm lift_theta_prime(const Perm& theta, int k);

// Inserts a new point: position q maps to r, earlier and later positions
// shift around the inserted value.  Result acts on {1..p+1}.
Perm insert_theta_qr(const Perm& theta, int q, int r);

enum class AVariant { plain, prime, hat };
enum class CVariant { plain, prime };

Word make_word_a(int n, int m, const Perm& rho, AVariant v = AVariant::plain);
Word make_word_a_pq(int n, int m, const Perm& rho, int p, int q);
Word make_word_c(int n, int m, int k, const Perm& tau,
                 CVariant v = CVariant::plain);
Word make_word_d(int n, int m, int k, const Perm& tau,
                 CVariant v = CVariant::plain);

// Two-occurrence window word over a doubled-and-primed alphabet; rho must
// satisfy 2 <= rho(1), rho(2n-1) <= n-1 and n+2 <= rho(2), rho(2n) <= 2n-1,
// and 0 <= s <= t <= 6n.
Word make_word_v_st(int n, const Perm& rho, int s, int t);

// Swap-family word; rho must be an alternating (n+m, n+m+1)-permutation and
// xi, eta lie in S_2.  When n + m == 0 rho may be defaulted.
Word make_word_v_xieta(int n, int m, const Perm& rho, const Perm& xi,
                       const Perm& eta);
Perm default_v_rho(int n, int m);

Identity make_alpha();
Identity make_beta();
Identity make_delta(int n, int m);
Identity make_pair_a(int n, int m, const Perm& rho);
Identity make_pair_c(int n, int m, int k, const Perm& tau);
Identity make_pair_d(int n, int m, int k, const Perm& tau);
// Tags: alpha, beta, xyzxy=yxzxy, xyzxy=xyzyx, ztxzx=xzxtz.
Identity named_identity(const std::string& tag);

// Parametric identity family attached to a basis; instances are generated up
// to a weight bound.
struct Schema {
  enum class Family {
    pair_a,              // all permutations of {1..k+l}
    pair_a_alternating,  // alternating permutations only
    pair_c,
    pair_d,
  };

  Family family;
  bool dualized = false;

  std::vector<Identity> instantiate(int bound) const;

  friend auto operator<=>(const Schema&, const Schema&) = default;
};

struct VarietyBasis {
  std::string name;
  std::vector<Identity> finite_ids;
  std::vector<Schema> schemas;
  int bound = 3;

  bool truncated() const { return !schemas.empty(); }
  // finite_ids plus all schema instances with parameter weight <= bound;
  // trivial instances are dropped.
  std::vector<Identity> instantiate() const;
};

// Names: P, Q, R (take n >= 1), A, Aprime, N, SL, T.
VarietyBasis variety_basis(const std::string& name, int n = 1, int bound = 3);
VarietyBasis dual_basis(const VarietyBasis& b);

}  // namespace varkit

#endif  // VARKIT_FAMILIES_HPP_
