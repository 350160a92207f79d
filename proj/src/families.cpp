#include "varkit/families.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace varkit {

namespace {

const Letter kX("x");
const Letter kY("y");
const Letter kZ("z");
const Letter kT("t");

Letter z(int i, int primes = 0) { return Letter("z", i, primes); }
Letter t(int i, int primes = 0) { return Letter("t", i, primes); }

void append(std::vector<Letter>& out, const Letter& l) { out.push_back(l); }

void append_power(std::vector<Letter>& out, const Letter& l, int n) {
  for (int i = 0; i < n; ++i) {
    out.push_back(l);
  }
}

// Accepts the exact degree, plus the usual convention that the permutation
// groups on zero and one points are identified.
void require_degree(const Perm& p, int dom, const char* what) {
  if (!p.valid()) {
    throw std::invalid_argument(std::string(what) +
                                ": image list is not a permutation");
  }
  if (p.degree() == dom || (dom <= 1 && p.degree() <= 1)) {
    return;
  }
  throw std::invalid_argument(std::string(what) + ": expected degree " +
                              std::to_string(dom) + ", got " +
                              std::to_string(p.degree()));
}

int map_or_fix(const Perm& p, int i) {
  return i <= p.degree() ? p.map(i) : i;
}

}  // namespace

Perm Perm::identity(int n) {
  Perm p;
  p.images.resize(static_cast<std::size_t>(n));
  std::iota(p.images.begin(), p.images.end(), 1);
  return p;
}

bool Perm::valid() const {
  std::vector<bool> seen(images.size(), false);
  for (int v : images) {
    if (v < 1 || v > degree() || seen[static_cast<std::size_t>(v - 1)]) {
      return false;
    }
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
  return true;
}

std::string Perm::str() const {
  if (images.empty()) {
    return "()";
  }
  std::string out;
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (i > 0) {
      out += ',';
    }
    out += std::to_string(images[i]);
  }
  return out;
}

std::vector<Perm> all_perms(int n) {
  Perm p = Perm::identity(n);
  std::vector<Perm> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.images.begin(), p.images.end()));
  return out;
}

bool alternates(const Perm& p, int n, int m) {
  auto low = [n](int v) { return 1 <= v && v <= n; };
  auto high = [n, m](int v) { return n < v && v <= n + m; };
  for (int i = 1; i + 1 <= p.degree(); ++i) {
    int a = p.map(i);
    int b = p.map(i + 1);
    if (!((low(a) && high(b)) || (low(b) && high(a)))) {
      return false;
    }
  }
  return true;
}

std::vector<Perm> enum_nm_perms(int n, int m) {
  if (n < 0 || m < 0) {
    throw std::invalid_argument("enum_nm_perms: negative parameter");
  }
  std::vector<Perm> out;
  if (std::abs(n - m) > 1) {
    return out;
  }
  int total = n + m;
  if (total == 0) {
    out.push_back(Perm{});
    return out;
  }
  // Positions alternate between the two classes; fill each class with every
  // arrangement of its values.
  std::vector<bool> starts_low;
  if (n == m) {
    starts_low = {true, false};
  } else if (n > m) {
    starts_low = {true};
  } else {
    starts_low = {false};
  }
  std::vector<int> lows(static_cast<std::size_t>(n));
  std::iota(lows.begin(), lows.end(), 1);
  std::vector<int> highs(static_cast<std::size_t>(m));
  std::iota(highs.begin(), highs.end(), n + 1);
  for (bool low_first : starts_low) {
    std::vector<int> a = lows;
    do {
      std::vector<int> b = highs;
      do {
        Perm p;
        p.images.resize(static_cast<std::size_t>(total));
        std::size_t ia = 0;
        std::size_t ib = 0;
        for (int pos = 0; pos < total; ++pos) {
          bool take_low = (pos % 2 == 0) == low_first;
          p.images[static_cast<std::size_t>(pos)] =
              take_low ? a[ia++] : b[ib++];
        }
        out.push_back(std::move(p));
      } while (std::next_permutation(b.begin(), b.end()));
    } while (std::next_permutation(a.begin(), a.end()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Perm lift_theta_prime(const Perm& theta, int k) {
  if (k < 2) {
    throw std::invalid_argument(
        "lift_theta_prime: k must be at least 2 (the defining rules collide "
        "below that)");
  }
  if (theta.degree() != 2 * k || !theta.valid()) {
    throw std::invalid_argument("lift_theta_prime: theta must lie in S_2k");
  }
  for (int i = 1; i <= 2 * k - 1; i += 2) {
    if (!(1 <= theta.map(i) && theta.map(i) <= k) ||
        !(k + 1 <= theta.map(i + 1) && theta.map(i + 1) <= 2 * k)) {
      throw std::invalid_argument(
          "lift_theta_prime: theta must send odd positions into {1..k} and "
          "even positions into {k+1..2k}");
    }
  }
  Perm out;
  out.images.assign(static_cast<std::size_t>(2 * k + 4), 0);
  auto set = [&out](int i, int v) {
    out.images[static_cast<std::size_t>(i - 1)] = v;
  };
  set(1, theta.map(1) + 1);
  set(2, theta.map(2) + 3);
  set(3, k + 2);
  set(4, 2 * k + 4);
  for (int i = 5; i <= 2 * k - 1; i += 2) {
    set(i, theta.map(i - 2) + 1);
  }
  for (int i = 6; i <= 2 * k; i += 2) {
    set(i, theta.map(i - 2) + 3);
  }
  set(2 * k + 1, 1);
  set(2 * k + 2, k + 3);
  set(2 * k + 3, theta.map(2 * k - 1) + 1);
  set(2 * k + 4, theta.map(2 * k) + 3);
  if (!out.valid()) {
    throw std::logic_error("lift_theta_prime: result is not a permutation");
  }
  return out;
}

Perm insert_theta_qr(const Perm& theta, int q, int r) {
  int p = theta.degree();
  if (!theta.valid()) {
    throw std::invalid_argument("insert_theta_qr: not a permutation");
  }
  if (q < 1 || q > p + 1 || r < 1 || r > p + 1) {
    throw std::invalid_argument("insert_theta_qr: q, r must lie in 1..p+1");
  }
  Perm out;
  out.images.assign(static_cast<std::size_t>(p + 1), 0);
  auto set = [&out](int i, int v) {
    out.images[static_cast<std::size_t>(i - 1)] = v;
  };
  set(q, r);
  for (int i = 1; i <= q - 1; ++i) {
    set(i, theta.map(i) < r ? theta.map(i) : theta.map(i) + 1);
  }
  for (int i = q + 1; i <= p + 1; ++i) {
    set(i, theta.map(i - 1) < r ? theta.map(i - 1) : theta.map(i - 1) + 1);
  }
  if (!out.valid()) {
    throw std::logic_error("insert_theta_qr: result is not a permutation");
  }
  return out;
}

Word make_word_a(int n, int m, const Perm& rho, AVariant v) {
  if (n < 0 || m < 0) {
    throw std::invalid_argument("make_word_a: negative parameter");
  }
  require_degree(rho, n + m, "make_word_a");
  std::vector<Letter> w;
  for (int i = 1; i <= n; ++i) {
    append(w, z(i));
    append(w, t(i));
  }
  if (v == AVariant::plain) {
    append(w, kX);
  } else if (v == AVariant::prime) {
    append_power(w, kX, 2);
  }
  for (int i = 1; i <= n + m; ++i) {
    append(w, z(map_or_fix(rho, i)));
  }
  if (v == AVariant::plain) {
    append(w, kX);
  }
  for (int i = n + 1; i <= n + m; ++i) {
    append(w, t(i));
    append(w, z(i));
  }
  return Word(std::move(w));
}

Word make_word_a_pq(int n, int m, const Perm& rho, int p, int q) {
  if (n < 0 || m < 0) {
    throw std::invalid_argument("make_word_a_pq: negative parameter");
  }
  if (!(0 <= p && p <= q && q <= n + m)) {
    throw std::invalid_argument("make_word_a_pq: need 0 <= p <= q <= n+m");
  }
  require_degree(rho, n + m, "make_word_a_pq");
  std::vector<Letter> w;
  for (int i = 1; i <= n; ++i) {
    append(w, z(i));
    append(w, t(i));
  }
  for (int i = 1; i <= p; ++i) {
    append(w, z(map_or_fix(rho, i)));
  }
  append(w, kX);
  for (int i = p + 1; i <= q; ++i) {
    append(w, z(map_or_fix(rho, i)));
  }
  append(w, kX);
  for (int i = q + 1; i <= n + m; ++i) {
    append(w, z(map_or_fix(rho, i)));
  }
  for (int i = n + 1; i <= n + m; ++i) {
    append(w, t(i));
    append(w, z(i));
  }
  return Word(std::move(w));
}

Word make_word_c(int n, int m, int k, const Perm& tau, CVariant v) {
  if (n < 0 || m < 0 || k < 0) {
    throw std::invalid_argument("make_word_c: negative parameter");
  }
  require_degree(tau, n + m + k, "make_word_c");
  std::vector<Letter> w;
  for (int i = 1; i <= n; ++i) {
    append(w, z(i));
    append(w, t(i));
  }
  if (v == CVariant::plain) {
    append(w, kX);
    append(w, kY);
  } else {
    append(w, kY);
    append(w, kX);
  }
  append(w, kT);
  for (int i = n + 1; i <= n + m; ++i) {
    append(w, z(i));
    append(w, t(i));
  }
  append(w, kX);
  for (int i = 1; i <= n + m + k; ++i) {
    append(w, z(map_or_fix(tau, i)));
  }
  append(w, kY);
  for (int i = n + m + 1; i <= n + m + k; ++i) {
    append(w, t(i));
    append(w, z(i));
  }
  return Word(std::move(w));
}

Word make_word_d(int n, int m, int k, const Perm& tau, CVariant v) {
  return reverse(make_word_c(n, m, k, tau, v));
}

Word make_word_v_st(int n, const Perm& rho, int s, int t_end) {
  if (n < 3) {
    throw std::invalid_argument("make_word_v_st: n must be at least 3");
  }
  require_degree(rho, 2 * n, "make_word_v_st");
  int r1 = rho.map(1);
  int r2 = rho.map(2);
  int r2n1 = rho.map(2 * n - 1);
  int r2n = rho.map(2 * n);
  if (!(2 <= r1 && r1 <= n - 1) || !(2 <= r2n1 && r2n1 <= n - 1) ||
      !(n + 2 <= r2 && r2 <= 2 * n - 1) || !(n + 2 <= r2n && r2n <= 2 * n - 1)) {
    throw std::invalid_argument(
        "make_word_v_st: rho must satisfy 2 <= rho(1), rho(2n-1) <= n-1 and "
        "n+2 <= rho(2), rho(2n) <= 2n-1");
  }
  if (!(0 <= s && s <= t_end && t_end <= 6 * n)) {
    throw std::invalid_argument("make_word_v_st: need 0 <= s <= t <= 6n");
  }

  std::vector<Letter> p;
  for (int i = 1; i <= r1; ++i) {
    append(p, z(i, 2));
    append(p, t(i, 2));
  }
  for (int i = 1; i <= r2n1; ++i) {
    append(p, z(i, 1));
    append(p, t(i, 1));
  }
  for (int i = 1; i <= n; ++i) {
    append(p, z(i));
    append(p, t(i));
  }
  for (int i = r2n1 + 1; i <= n; ++i) {
    append(p, z(i, 1));
    append(p, t(i, 1));
  }
  for (int i = r1 + 1; i <= n; ++i) {
    append(p, z(i, 2));
    append(p, t(i, 2));
  }

  std::vector<Letter> q;
  append(q, z(r1));
  append(q, z(r2));
  for (int i = 1; i <= 2 * n; ++i) {
    append(q, z(rho.map(i), 1));
  }
  for (int i = 3; i <= 2 * n - 2; ++i) {
    append(q, z(rho.map(i)));
  }
  for (int i = 1; i <= 2 * n; ++i) {
    append(q, z(rho.map(i), 2));
  }
  append(q, z(r2n1));
  append(q, z(r2n));

  std::vector<Letter> r;
  for (int i = n + 1; i <= r2; ++i) {
    append(r, t(i, 2));
    append(r, z(i, 2));
  }
  for (int i = n + 1; i <= r2n; ++i) {
    append(r, t(i, 1));
    append(r, z(i, 1));
  }
  for (int i = n + 1; i <= 2 * n; ++i) {
    append(r, t(i));
    append(r, z(i));
  }
  for (int i = r2n + 1; i <= 2 * n; ++i) {
    append(r, z(i, 1));
    append(r, t(i, 1));
  }
  for (int i = r2 + 1; i <= 2 * n; ++i) {
    append(r, z(i, 2));
    append(r, t(i, 2));
  }

  Word qw{Word(std::move(q))};
  Word out = Word(std::move(p));
  out = out + factor_at(qw, 0, static_cast<std::size_t>(s)) + kX;
  out = out + factor_at(qw, static_cast<std::size_t>(s),
                        static_cast<std::size_t>(t_end - s)) +
        kX;
  out = out + factor_at(qw, static_cast<std::size_t>(t_end),
                        static_cast<std::size_t>(6 * n - t_end));
  return out + Word(std::move(r));
}

Perm default_v_rho(int n, int m) {
  if (n + m == 0) {
    return Perm{{1}};
  }
  throw std::invalid_argument(
      "v_xieta: the alternating permutation must be supplied when n+m > 0");
}

Word make_word_v_xieta(int n, int m, const Perm& rho, const Perm& xi,
                       const Perm& eta) {
  if (n < 0 || m < 0) {
    throw std::invalid_argument("make_word_v_xieta: negative parameter");
  }
  int k = n + m + 1;
  require_degree(rho, 2 * (n + m) + 1, "make_word_v_xieta");
  if (!alternates(rho, n + m, n + m + 1)) {
    throw std::invalid_argument(
        "make_word_v_xieta: rho must alternate between {1..n+m} and "
        "{n+m+1..2(n+m)+1}");
  }
  require_degree(xi, 2, "make_word_v_xieta(xi)");
  require_degree(eta, 2, "make_word_v_xieta(eta)");

  Perm pi = insert_theta_qr(insert_theta_qr(rho, 1, k), 2 * k + 1, 2 * k + 1);
  Perm tau = insert_theta_qr(insert_theta_qr(rho, 1, 2 * k), 2 * k + 1, k);

  auto xi_of = [&xi](int i) { return map_or_fix(xi, i); };
  auto eta_of = [&eta](int i) { return map_or_fix(eta, i); };

  std::vector<Letter> w;
  for (int primes = 0; primes <= 2; ++primes) {
    for (int i = 1; i <= n; ++i) {
      append(w, z(i, primes));
      append(w, t(i, primes));
    }
  }
  append(w, Letter("a", 1));
  append(w, Letter("b", 1));
  append(w, Letter("x", xi_of(1)));
  append(w, Letter("x", xi_of(2)));
  append(w, Letter("y", eta_of(1)));
  append(w, Letter("y", eta_of(2)));
  append(w, Letter("b", 2));
  append(w, Letter("a", 2));
  append(w, kT);
  for (int primes = 0; primes <= 2; ++primes) {
    for (int i = n + 1; i <= k - 1; ++i) {
      append(w, z(i, primes));
      append(w, t(i, primes));
    }
  }
  append(w, Letter("x", 1));
  append(w, z(pi.map(1), 1));
  append(w, Letter("a", 1));
  for (int i = 2; i <= 2 * k; ++i) {
    append(w, z(pi.map(i), 1));
  }
  append(w, Letter("b", 2));
  append(w, z(pi.map(2 * k + 1), 1));
  append(w, Letter("x", 2));
  for (int i = 1; i <= 2 * k + 1; ++i) {
    append(w, z(tau.map(i)));
  }
  append(w, Letter("y", 1));
  append(w, z(pi.map(1), 2));
  append(w, Letter("b", 1));
  for (int i = 2; i <= 2 * k; ++i) {
    append(w, z(pi.map(i), 2));
  }
  append(w, Letter("a", 2));
  append(w, z(pi.map(2 * k + 1), 2));
  append(w, Letter("y", 2));
  for (int primes = 0; primes <= 2; ++primes) {
    for (int i = k; i <= 2 * k + 1; ++i) {
      append(w, t(i, primes));
      append(w, z(i, primes));
    }
  }
  return Word(std::move(w));
}

Identity make_alpha() {
  return {Word({kX, kZ, kY, kT, kX, kY}), Word({kX, kZ, kY, kT, kY, kX})};
}

Identity make_beta() {
  return {Word({kX, kZ, kX, kY, kT, kY}), Word({kX, kZ, kY, kX, kT, kY})};
}

Identity make_delta(int n, int m) {
  if (n < 0 || m < 0) {
    throw std::invalid_argument("make_delta: negative parameter");
  }
  std::vector<Letter> lhs;
  append_power(lhs, kX, m);
  for (int i = 1; i <= n; ++i) {
    append(lhs, t(i));
    append(lhs, kX);
  }
  std::vector<Letter> rhs;
  append_power(rhs, kX, m + n);
  for (int i = 1; i <= n; ++i) {
    append(rhs, t(i));
  }
  return {Word(std::move(lhs)), Word(std::move(rhs))};
}

Identity make_pair_a(int n, int m, const Perm& rho) {
  return {make_word_a(n, m, rho, AVariant::plain),
          make_word_a(n, m, rho, AVariant::prime)};
}

Identity make_pair_c(int n, int m, int k, const Perm& tau) {
  return {make_word_c(n, m, k, tau, CVariant::plain),
          make_word_c(n, m, k, tau, CVariant::prime)};
}

Identity make_pair_d(int n, int m, int k, const Perm& tau) {
  return {make_word_d(n, m, k, tau, CVariant::plain),
          make_word_d(n, m, k, tau, CVariant::prime)};
}

Identity named_identity(const std::string& tag) {
  if (tag == "alpha") {
    return make_alpha();
  }
  if (tag == "beta") {
    return make_beta();
  }
  if (tag == "xyzxy=yxzxy") {
    return {Word({kX, kY, kZ, kX, kY}), Word({kY, kX, kZ, kX, kY})};
  }
  if (tag == "xyzxy=xyzyx") {
    return {Word({kX, kY, kZ, kX, kY}), Word({kX, kY, kZ, kY, kX})};
  }
  if (tag == "ztxzx=xzxtz") {
    return {Word({kZ, kT, kX, kZ, kX}), Word({kX, kZ, kX, kT, kZ})};
  }
  throw std::invalid_argument("unknown identity tag: " + tag);
}

std::vector<Identity> Schema::instantiate(int bound) const {
  std::vector<Identity> out;
  auto push = [this, &out](Identity id) {
    if (dualized) {
      id = dual_identity(id);
    }
    if (!id.trivial()) {
      out.push_back(std::move(id));
    }
  };
  for (int w = 0; w <= bound; ++w) {
    switch (family) {
      case Family::pair_a:
        for (int n = 0; n <= w; ++n) {
          for (const Perm& rho : all_perms(w)) {
            push(make_pair_a(n, w - n, rho));
          }
        }
        break;
      case Family::pair_a_alternating:
        for (int n = 0; n <= w; ++n) {
          int m = w - n;
          if (std::abs(n - m) > 1) {
            continue;
          }
          for (const Perm& rho : enum_nm_perms(n, m)) {
            push(make_pair_a(n, m, rho));
          }
        }
        break;
      case Family::pair_c:
      case Family::pair_d:
        for (int n = 0; n <= w; ++n) {
          for (int m = 0; n + m <= w; ++m) {
            int k = w - n - m;
            for (const Perm& tau : all_perms(w)) {
              push(family == Family::pair_c ? make_pair_c(n, m, k, tau)
                                            : make_pair_d(n, m, k, tau));
            }
          }
        }
        break;
    }
  }
  return out;
}

std::vector<Identity> VarietyBasis::instantiate() const {
  std::vector<Identity> out;
  std::set<Identity> seen;
  auto push = [&out, &seen](const Identity& id) {
    if (seen.insert(id).second) {
      out.push_back(id);
    }
  };
  for (const Identity& id : finite_ids) {
    push(id);
  }
  for (const Schema& s : schemas) {
    for (const Identity& id : s.instantiate(bound)) {
      push(id);
    }
  }
  return out;
}

VarietyBasis variety_basis(const std::string& name, int n, int bound) {
  auto power_id = [](int a, int b) -> Identity {
    std::vector<Letter> lhs;
    append_power(lhs, kX, a);
    std::vector<Letter> rhs;
    append_power(rhs, kX, b);
    return {Word(std::move(lhs)), Word(std::move(rhs))};
  };
  auto central_power = [](int a) -> Identity {
    std::vector<Letter> lhs;
    append_power(lhs, kX, a);
    append(lhs, kY);
    std::vector<Letter> rhs;
    append(rhs, kY);
    append_power(rhs, kX, a);
    return {Word(std::move(lhs)), Word(std::move(rhs))};
  };

  VarietyBasis b;
  b.bound = bound;
  if (name == "P" || name == "Q" || name == "R") {
    if (n < 1) {
      throw std::invalid_argument("variety_basis: " + name + " needs n >= 1");
    }
    b.name = name + std::to_string(n);
    b.finite_ids.push_back(power_id(n, n + 1));
    if (name == "P") {
      b.finite_ids.push_back(central_power(2));
      b.schemas = {Schema{Schema::Family::pair_a},
                   Schema{Schema::Family::pair_c},
                   Schema{Schema::Family::pair_d}};
    } else if (name == "Q") {
      b.finite_ids.push_back(central_power(n));
      b.finite_ids.push_back(
          {Word({kX, kX, kY}), Word({kX, kY, kX})});
    } else {
      b.finite_ids.push_back(central_power(2));
      b.finite_ids.push_back(make_alpha());
      b.finite_ids.push_back(make_beta());
    }
    return b;
  }
  if (name == "A") {
    b.name = "A";
    b.finite_ids.push_back(central_power(2));
    return b;
  }
  if (name == "Aprime") {
    b.name = "A'";
    b.finite_ids.push_back(central_power(2));
    b.schemas = {Schema{Schema::Family::pair_a_alternating}};
    return b;
  }
  if (name == "N") {
    b.name = "N";
    b.finite_ids.push_back(power_id(2, 3));
    b.finite_ids.push_back(central_power(2));
    b.finite_ids.push_back({Word({kX, kY, kX, kZ, kX}),
                            Word({kX, kX, kY, kZ})});
    b.finite_ids.push_back(make_alpha());
    b.finite_ids.push_back(make_beta());
    return b;
  }
  if (name == "SL") {
    b.name = "SL";
    b.finite_ids.push_back(power_id(2, 1));
    b.finite_ids.push_back({Word({kX, kY}), Word({kY, kX})});
    return b;
  }
  if (name == "T") {
    b.name = "T";
    b.finite_ids.push_back({Word({kX}), Word()});
    return b;
  }
  throw std::invalid_argument("variety_basis: unknown name " + name);
}

VarietyBasis dual_basis(const VarietyBasis& b) {
  VarietyBasis out;
  out.name = "dual(" + b.name + ")";
  out.bound = b.bound;
  for (const Identity& id : b.finite_ids) {
    out.finite_ids.push_back(dual_identity(id));
  }
  for (Schema s : b.schemas) {
    s.dualized = !s.dualized;
    out.schemas.push_back(s);
  }
  return out;
}

}  // namespace varkit
