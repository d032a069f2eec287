#include "ybe/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <string>

#include "ybe/errors.hpp"

namespace ybe {

Group::Group(int order, std::vector<int> table) : order_(order), table_(std::move(table)) {
  if (order <= 0) throw FormatError("group order must be positive");
  if (table_.size() != static_cast<std::size_t>(order) * static_cast<std::size_t>(order))
    throw FormatError("group table has wrong size");
  for (int v : table_)
    if (v < 0 || v >= order) throw FormatError("group table entry out of range");
  for (int a = 0; a < order; ++a)
    if (mul(0, a) != a || mul(a, 0) != a)
      throw ConsistencyError("element 0 is not the identity of the table");

  inverse_.assign(static_cast<std::size_t>(order), -1);
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      if (mul(a, b) == 0 && mul(b, a) == 0) {
        inverse_[static_cast<std::size_t>(a)] = b;
        break;
      }
    }
    if (inverse_[static_cast<std::size_t>(a)] < 0)
      throw ConsistencyError("element " + std::to_string(a) + " has no inverse");
  }

  orders_.assign(static_cast<std::size_t>(order), 0);
  for (int a = 0; a < order; ++a) {
    int k = 1;
    for (int x = a; x != 0; x = mul(x, a)) {
      ++k;
      if (k > order + 1) throw ConsistencyError("element order exceeds group order");
    }
    orders_[static_cast<std::size_t>(a)] = k;
  }
}

int Group::power(int a, long long k) const {
  const int o = element_order(a);
  k %= o;
  if (k < 0) k += o;
  int r = 0;
  for (long long i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

bool Group::is_abelian() const {
  for (int a = 0; a < order_; ++a)
    for (int b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::vector<int> Group::order_profile() const {
  std::vector<int> h(static_cast<std::size_t>(order_) + 1, 0);
  for (int o : orders_) ++h[static_cast<std::size_t>(o)];
  return h;
}

Group cyclic_group(int n) {
  std::vector<int> t(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a * n + b)] = (a + b) % n;
  return Group(n, std::move(t));
}

Group dihedral_group(int order) {
  if (order < 2 || order % 2 != 0) throw InvalidArgument("dihedral group needs even order");
  const int n = order / 2;
  // element (k, s) = r^k s^s encoded as k + n*s; r^a s^x * r^b s^y = r^(a + (-1)^x b) s^(x+y)
  std::vector<int> t(static_cast<std::size_t>(order) * static_cast<std::size_t>(order));
  for (int e1 = 0; e1 < order; ++e1) {
    for (int e2 = 0; e2 < order; ++e2) {
      const int a = e1 % n, x = e1 / n, b = e2 % n, y = e2 / n;
      const int k = ((a + (x ? -b : b)) % n + n) % n;
      t[static_cast<std::size_t>(e1 * order + e2)] = k + n * ((x + y) % 2);
    }
  }
  return Group(order, std::move(t));
}

Group quaternion_group() {
  // Elements +-1, +-i, +-j, +-k encoded as sign*4 + unit with unit 1,i,j,k = 0..3.
  static constexpr int unit_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int sign_mul[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<int> t(64);
  for (int e1 = 0; e1 < 8; ++e1)
    for (int e2 = 0; e2 < 8; ++e2) {
      const int u1 = e1 % 4, s1 = e1 / 4, u2 = e2 % 4, s2 = e2 / 4;
      const int s = (s1 + s2 + sign_mul[u1][u2]) % 2;
      t[static_cast<std::size_t>(e1 * 8 + e2)] = s * 4 + unit_mul[u1][u2];
    }
  return Group(8, std::move(t));
}

Group direct_product(const Group& a, const Group& b) {
  const int m = a.order() * b.order();
  std::vector<int> t(static_cast<std::size_t>(m) * static_cast<std::size_t>(m));
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      const int p = a.mul(x / b.order(), y / b.order());
      const int q = b.mul(x % b.order(), y % b.order());
      t[static_cast<std::size_t>(x * m + y)] = p * b.order() + q;
    }
  return Group(m, std::move(t));
}

Subgroup generated_subgroup(const Group& g, std::span<const int> generators) {
  std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
  std::vector<int> members{0};
  in[0] = 1;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (int s : generators) {
      const int h = g.mul(members[i], s);
      if (!in[static_cast<std::size_t>(h)]) {
        in[static_cast<std::size_t>(h)] = 1;
        members.push_back(h);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

bool is_subgroup(const Group& g, std::span<const int> elements) {
  if (elements.empty()) return false;
  std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
  for (int e : elements) {
    if (e < 0 || e >= g.order()) return false;
    in[static_cast<std::size_t>(e)] = 1;
  }
  if (!in[0]) return false;
  for (int a : elements)
    for (int b : elements)
      if (!in[static_cast<std::size_t>(g.mul(a, g.inv(b)))]) return false;
  return true;
}

Subgroup conjugate(const Group& g, const Subgroup& h, int x) {
  Subgroup out;
  out.reserve(h.size());
  const int xi = g.inv(x);
  for (int e : h) out.push_back(g.mul(g.mul(x, e), xi));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_normal(const Group& g, const Subgroup& h) {
  for (int x = 0; x < g.order(); ++x)
    if (conjugate(g, h, x) != h) return false;
  return true;
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  Subgroup out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<Subgroup> subgroups(const Group& g, int bound) {
  if (g.order() > bound) throw BoundError("subgroup enumeration", static_cast<std::size_t>(g.order()),
                                         static_cast<std::size_t>(bound));
  struct Entry {
    Subgroup elements;
    std::vector<int> gens;
  };
  std::set<Subgroup> seen;
  std::vector<Entry> all;
  std::vector<int> cyclic_gens;
  for (int x = 0; x < g.order(); ++x) {
    const int gens[1] = {x};
    Subgroup c = generated_subgroup(g, gens);
    if (seen.insert(c).second) {
      all.push_back({c, {x}});
      cyclic_gens.push_back(x);
    }
  }
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (int c : cyclic_gens) {
      if (std::binary_search(all[i].elements.begin(), all[i].elements.end(), c)) continue;
      std::vector<int> gens = all[i].gens;
      gens.push_back(c);
      Subgroup j = generated_subgroup(g, gens);
      if (seen.insert(j).second) all.push_back({std::move(j), std::move(gens)});
    }
  }
  std::vector<Subgroup> out;
  out.reserve(all.size());
  for (auto& e : all) out.push_back(std::move(e.elements));
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

Subgroup core(const Group& g, const Subgroup& h) {
  Subgroup c = h;
  for (int x = 0; x < g.order() && c.size() > 1; ++x) c = intersect(c, conjugate(g, h, x));
  return c;
}

std::vector<int> small_generating_set(const Group& g) {
  std::vector<int> gens;
  std::vector<char> covered(static_cast<std::size_t>(g.order()), 0);
  covered[0] = 1;
  Subgroup current{0};
  while (static_cast<int>(current.size()) < g.order()) {
    int best = -1;
    for (int x = 0; x < g.order(); ++x) {
      if (covered[static_cast<std::size_t>(x)]) continue;
      if (best < 0 || g.element_order(x) > g.element_order(best)) best = x;
    }
    gens.push_back(best);
    current = generated_subgroup(g, gens);
    for (int e : current) covered[static_cast<std::size_t>(e)] = 1;
  }
  return gens;
}

namespace {

// Extends a partial assignment of generator images to the subgroup generated
// by the first `k` generators. Returns false if the assignment is not a
// well-defined injective homomorphism on that subgroup.
bool extend_hom(const Group& g1, const Group& g2, std::span<const int> gens,
                std::span<const int> images, std::vector<int>& map) {
  std::fill(map.begin(), map.end(), -1);
  std::vector<char> used(static_cast<std::size_t>(g2.order()), 0);
  map[0] = 0;
  used[0] = 1;
  std::vector<int> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const int x = queue[i];
    for (std::size_t k = 0; k < images.size(); ++k) {
      const int y = g1.mul(x, gens[k]);
      const int fy = g2.mul(map[static_cast<std::size_t>(x)], images[k]);
      int& slot = map[static_cast<std::size_t>(y)];
      if (slot < 0) {
        if (used[static_cast<std::size_t>(fy)]) return false;
        slot = fy;
        used[static_cast<std::size_t>(fy)] = 1;
        queue.push_back(y);
      } else if (slot != fy) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Group& g1, const Group& g2, int bound) {
  if (g1.order() > bound || g2.order() > bound)
    throw BoundError("group isomorphism", static_cast<std::size_t>(std::max(g1.order(), g2.order())),
                     static_cast<std::size_t>(bound));
  if (g1.order() != g2.order()) return std::nullopt;
  if (g1.order_profile() != g2.order_profile()) return std::nullopt;
  if (g1.is_abelian() != g2.is_abelian()) return std::nullopt;

  const std::vector<int> gens = small_generating_set(g1);
  std::vector<std::vector<int>> candidates(gens.size());
  for (std::size_t k = 0; k < gens.size(); ++k)
    for (int y = 0; y < g2.order(); ++y)
      if (g2.element_order(y) == g1.element_order(gens[k])) candidates[k].push_back(y);

  std::vector<int> images;
  std::vector<int> map(static_cast<std::size_t>(g1.order()));
  std::optional<std::vector<int>> found;

  auto search = [&](auto&& self, std::size_t k) -> bool {
    if (k == gens.size()) {
      found = map;
      return true;
    }
    for (int y : candidates[k]) {
      images.push_back(y);
      if (extend_hom(g1, g2, std::span(gens).first(k + 1), images, map)) {
        if (k + 1 == gens.size()) {
          if (std::find(map.begin(), map.end(), -1) == map.end()) {
            found = map;
            return true;
          }
        } else if (self(self, k + 1)) {
          return true;
        }
      }
      images.pop_back();
    }
    return false;
  };
  search(search, 0);
  return found;
}

bool is_isomorphic(const Group& g1, const Group& g2) { return find_isomorphism(g1, g2).has_value(); }

bool is_cyclic(const Group& g) {
  for (int o : g.element_orders())
    if (o == g.order()) return true;
  return false;
}

bool is_dihedral(const Group& g) {
  if (g.order() < 6 || g.order() % 2 != 0) return false;
  const int n = g.order() / 2;
  for (int r = 0; r < g.order(); ++r) {
    if (g.element_order(r) != n) continue;
    const int gens[1] = {r};
    const Subgroup rot = generated_subgroup(g, gens);
    for (int s = 0; s < g.order(); ++s) {
      if (std::binary_search(rot.begin(), rot.end(), s)) continue;
      if (g.element_order(s) != 2) continue;
      return g.mul(g.mul(s, r), s) == g.inv(r);
    }
    return false;
  }
  return false;
}

bool is_generalized_dihedral(const Group& g) {
  if (g.order() % 2 != 0) return false;
  std::vector<int> non_involutions;
  for (int x = 1; x < g.order(); ++x)
    if (g.element_order(x) != 2) non_involutions.push_back(x);
  const Subgroup a0 = generated_subgroup(g, non_involutions);
  auto works = [&](const Subgroup& a) {
    if (2 * static_cast<int>(a.size()) != g.order()) return false;
    for (int x : a)
      for (int y : a)
        if (g.mul(x, y) != g.mul(y, x)) return false;
    for (int x = 0; x < g.order(); ++x)
      if (!std::binary_search(a.begin(), a.end(), x) && g.element_order(x) != 2) return false;
    return true;
  };
  if (2 * static_cast<int>(a0.size()) == g.order()) return works(a0);
  if (2 * static_cast<int>(a0.size()) > g.order()) return false;
  // Every element outside a0 is an involution; look for an index-2 abelian
  // subgroup containing a0.
  for (const Subgroup& a : subgroups(g, std::max(g.order(), kDefaultGroupBound)))
    if (2 * static_cast<int>(a.size()) == g.order() &&
        std::includes(a.begin(), a.end(), a0.begin(), a0.end()) && works(a))
      return true;
  return false;
}

bool is_generalized_quaternion(const Group& g) {
  const int m = g.order();
  if (m < 8 || (m & (m - 1)) != 0) return false;
  if (is_cyclic(g)) return false;
  int involutions = 0;
  for (int o : g.element_orders()) involutions += (o == 2);
  return involutions == 1;
}

bool is_dedekind(const Group& g, int bound) {
  for (const Subgroup& h : subgroups(g, bound))
    if (!is_normal(g, h)) return false;
  return true;
}

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::pair<int, int>> factorize(int n) {
  std::vector<std::pair<int, int>> f;
  for (int p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) f.emplace_back(p, e);
  }
  if (n > 1) f.emplace_back(n, 1);
  return f;
}

std::optional<MinimalNonCyclic> minimal_non_cyclic_type(const Group& g, int bound) {
  if (is_cyclic(g)) return std::nullopt;
  for (const Subgroup& h : subgroups(g, bound)) {
    if (static_cast<int>(h.size()) == g.order()) continue;
    bool cyc = false;
    for (int x : h) {
      const int gens[1] = {x};
      if (generated_subgroup(g, gens).size() == h.size()) {
        cyc = true;
        break;
      }
    }
    if (!cyc) return std::nullopt;
  }
  const auto f = factorize(g.order());
  MinimalNonCyclic t;
  if (g.is_abelian()) {
    t.type = 'a';
    t.p = f.front().first;
    return t;
  }
  if (f.size() == 1) {
    t.type = 'b';
    return t;
  }
  // Type c: the prime with a normal subgroup of prime order is p.
  t.type = 'c';
  for (auto [prime, e] : f) {
    if (e != 1) continue;
    int count = 0;
    for (int o : g.element_orders()) count += (o == prime);
    if (count == prime - 1) {  // unique subgroup of order prime
      t.p = prime;
      break;
    }
  }
  for (auto [prime, e] : f)
    if (prime != t.p) {
      t.q = prime;
      t.n = e;
    }
  return t;
}

std::vector<int> abelian_invariants(const Group& g) {
  if (!g.is_abelian()) throw InvalidArgument("abelian_invariants: group is not abelian");
  // For each prime p, |{x : x^(p^j) = 1}| = p^(sum_i min(j, e_i)) determines the
  // exponents e_i of the cyclic p-factors.
  std::vector<std::vector<int>> prime_parts;  // exponent lists, one per prime
  std::vector<int> primes;
  for (auto [p, e] : factorize(g.order())) {
    std::vector<int> counts;  // counts[j] = log_p |G[p^j]|
    long long pj = 1;
    for (int j = 0; j <= e; ++j) {
      int c = 0;
      for (int o : g.element_orders()) c += (pj % o == 0);
      int l = 0;
      for (int v = c; v > 1; v /= p) ++l;
      counts.push_back(l);
      pj *= p;
    }
    // Number of cyclic factors with exponent >= j is counts[j] - counts[j-1].
    std::vector<int> exps;
    for (int j = 1; j <= e; ++j) {
      const int ge_j = counts[static_cast<std::size_t>(j)] - counts[static_cast<std::size_t>(j - 1)];
      const int ge_next =
          (j < e) ? counts[static_cast<std::size_t>(j + 1)] - counts[static_cast<std::size_t>(j)] : 0;
      for (int k = 0; k < ge_j - ge_next; ++k) exps.push_back(j);
    }
    std::sort(exps.begin(), exps.end(), std::greater<>());
    primes.push_back(p);
    prime_parts.push_back(exps);
  }
  std::size_t rank = 0;
  for (const auto& e : prime_parts) rank = std::max(rank, e.size());
  std::vector<int> factors(rank, 1);  // factors[0] is the largest
  for (std::size_t i = 0; i < primes.size(); ++i)
    for (std::size_t k = 0; k < prime_parts[i].size(); ++k)
      for (int j = 0; j < prime_parts[i][k]; ++j) factors[k] *= primes[i];
  std::reverse(factors.begin(), factors.end());
  return factors;
}

std::string describe(const Group& g) {
  const int m = g.order();
  if (m == 1) return "1";
  if (is_cyclic(g)) return "C" + std::to_string(m);
  if (g.is_abelian()) {
    std::string s;
    for (int d : abelian_invariants(g)) s += (s.empty() ? "C" : "xC") + std::to_string(d);
    return s;
  }
  if (is_dihedral(g)) return "D" + std::to_string(m);
  if (is_generalized_quaternion(g)) return "Q" + std::to_string(m);
  if (m <= kDefaultGroupBound) {
    if (auto t = minimal_non_cyclic_type(g); t && t->type == 'c') {
      int qn = 1;
      for (int i = 0; i < t->n; ++i) qn *= t->q;
      return "C" + std::to_string(t->p) + ":C" + std::to_string(qn);
    }
  }
  return "G" + std::to_string(m);
}

}  // namespace ybe
