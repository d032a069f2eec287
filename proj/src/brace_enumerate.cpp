// Braces with additive group A are the regular subgroups of Hol(A) = A x| Aut(A)
// acting on A: the subgroup element g_a with g_a(0) = a gives a o b = g_a(b)
// and lambda_a = g_a - a. Holomorph elements are stored as image arrays on A.

#include <algorithm>
#include <map>
#include <set>

#include "ybe/brace.hpp"
#include "ybe/errors.hpp"

namespace ybe {

namespace {

using Map = std::vector<int>;

struct Holomorph {
  Brace a;                 // trivial brace on A
  std::vector<Map> autos;  // Aut(A)
  int m;

  explicit Holomorph(const std::vector<int>& factors)
      : a(trivial_brace(factors)), autos(additive_automorphisms(a, 1 << 12)), m(a.order()) {}

  Map identity() const {
    Map h(static_cast<std::size_t>(m));
    for (int x = 0; x < m; ++x) h[static_cast<std::size_t>(x)] = x;
    return h;
  }

  Map element(int t, const Map& phi) const {
    Map h(static_cast<std::size_t>(m));
    for (int x = 0; x < m; ++x) h[static_cast<std::size_t>(x)] = a.add(t, phi[static_cast<std::size_t>(x)]);
    return h;
  }
};

Map compose_maps(const Map& p, const Map& q) {
  Map r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[static_cast<std::size_t>(q[i])];
  return r;
}

Map invert_map(const Map& p) {
  Map r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
  return r;
}

int map_order(const Map& p) { return Permutation(p).order(); }

// In a regular subgroup the orbit of 0 under h has length ord(h).
bool regular_compatible(const Map& h) {
  int len = 1;
  for (int x = h[0]; x != 0; x = h[static_cast<std::size_t>(x)]) ++len;
  return len == map_order(h);
}

// One representative per orbit of `cands` under conjugation by `group`.
std::vector<Map> conjugacy_representatives(const std::vector<Map>& cands, const std::vector<Map>& group) {
  std::set<Map> seen;
  std::vector<Map> reps;
  std::vector<Map> group_inv;
  for (const auto& g : group) group_inv.push_back(invert_map(g));
  for (const auto& c : cands) {
    if (seen.contains(c)) continue;
    reps.push_back(c);
    for (std::size_t i = 0; i < group.size(); ++i) seen.insert(compose_maps(group[i], compose_maps(c, group_inv[i])));
  }
  return reps;
}

Brace brace_from_regular(const Holomorph& hol, const std::vector<Map>& g) {
  const int m = hol.m;
  std::vector<int> mul(static_cast<std::size_t>(m) * static_cast<std::size_t>(m));
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) mul[static_cast<std::size_t>(x * m + y)] = g[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
  return Brace(m, std::vector<int>(hol.a.add_table().begin(), hol.a.add_table().end()), std::move(mul));
}

// Invariant key that isomorphic braces share.
std::vector<int> brace_key(const Brace& b) {
  std::vector<int> key = additive_invariants(b);
  key.push_back(-1);
  const auto prof = b.multiplicative_group().order_profile();
  key.insert(key.end(), prof.begin(), prof.end());
  key.push_back(-1);
  key.push_back(static_cast<int>(socle(b).size()));
  std::vector<int> lambda_orders;
  for (int a = 0; a < b.order(); ++a) {
    Map la(static_cast<std::size_t>(b.order()));
    for (int x = 0; x < b.order(); ++x) la[static_cast<std::size_t>(x)] = b.lambda(a, x);
    lambda_orders.push_back(map_order(la) * 1000 + multiplicative_order(b, a));
  }
  std::sort(lambda_orders.begin(), lambda_orders.end());
  key.insert(key.end(), lambda_orders.begin(), lambda_orders.end());
  return key;
}

void add_up_to_isomorphism(std::vector<Brace>& out, std::map<std::vector<int>, std::vector<std::size_t>>& buckets,
                           Brace b) {
  auto key = brace_key(b);
  auto& bucket = buckets[key];
  for (std::size_t i : bucket)
    if (brace_isomorphic(out[i], b, 1 << 12)) return;
  bucket.push_back(out.size());
  out.push_back(std::move(b));
}

// Regular subgroups of Hol(A), one or more per conjugacy class, as o tables.
std::vector<Brace> regular_subgroups(const Holomorph& hol) {
  const int m = hol.m;
  std::vector<Brace> found;
  if (m == 1) {
    found.push_back(hol.a);
    return found;
  }
  // Allowed g_a per point a.
  std::vector<std::vector<Map>> allowed(static_cast<std::size_t>(m));
  for (int t = 1; t < m; ++t)
    for (const auto& phi : hol.autos) {
      Map h = hol.element(t, phi);
      if (regular_compatible(h)) allowed[static_cast<std::size_t>(t)].push_back(std::move(h));
    }
  {
    std::vector<Map> stab;
    for (const auto& psi : hol.autos)
      if (psi[1] == 1) stab.push_back(psi);
    allowed[1] = conjugacy_representatives(allowed[1], stab);
  }

  std::vector<Map> g(static_cast<std::size_t>(m));
  g[0] = hol.identity();
  std::vector<int> assigned{0};
  std::set<std::vector<int>> tables;

  // Assigns g_t = h and closes under products; returns false on a clash.
  auto close = [&](int t, Map h) -> bool {
    std::vector<int> pending{t};
    g[static_cast<std::size_t>(t)] = std::move(h);
    assigned.push_back(t);
    while (!pending.empty()) {
      const int c = pending.back();
      pending.pop_back();
      const std::size_t count = assigned.size();
      for (std::size_t i = 0; i < count; ++i) {
        const int d = assigned[i];
        for (int side = 0; side < 2; ++side) {
          const Map& l = g[static_cast<std::size_t>(side ? d : c)];
          const Map& r = g[static_cast<std::size_t>(side ? c : d)];
          const int key = l[static_cast<std::size_t>(r[0])];
          Map prod = compose_maps(l, r);
          Map& slot = g[static_cast<std::size_t>(key)];
          if (slot.empty()) {
            slot = std::move(prod);
            assigned.push_back(key);
            pending.push_back(key);
          } else if (slot != prod) {
            return false;
          }
        }
      }
    }
    return true;
  };
  auto search = [&](auto&& self) -> void {
    int t = 1;
    while (t < m && !g[static_cast<std::size_t>(t)].empty()) ++t;
    if (t == m) {
      std::vector<int> key;
      for (const auto& row : g) key.insert(key.end(), row.begin(), row.end());
      if (tables.insert(key).second) found.push_back(brace_from_regular(hol, g));
      return;
    }
    for (const auto& h : allowed[static_cast<std::size_t>(t)]) {
      const auto saved_assigned = assigned;
      const auto saved_g = g;
      if (close(t, h)) self(self);
      assigned = saved_assigned;
      g = saved_g;
    }
  };
  search(search);
  return found;
}

}  // namespace

std::vector<Brace> enumerate_braces(int m, int bound) {
  if (m < 1) throw InvalidArgument("enumerate_braces: order must be positive");
  if (m > bound) throw BoundError("enumerate_braces", static_cast<std::size_t>(m), static_cast<std::size_t>(bound));
  std::vector<Brace> out;
  for (const auto& factors : abelian_groups(m)) {
    Holomorph hol(factors);
    std::vector<Brace> mine;
    std::map<std::vector<int>, std::vector<std::size_t>> buckets;
    for (auto& b : regular_subgroups(hol)) add_up_to_isomorphism(mine, buckets, std::move(b));
    for (auto& b : mine) out.push_back(std::move(b));
  }
  return out;
}

std::vector<Brace> enumerate_braces_with_multiplicative_group(const Group& grp, int bound) {
  const int m = grp.order();
  if (m > bound)
    throw BoundError("enumerate_braces_with_multiplicative_group", static_cast<std::size_t>(m),
                     static_cast<std::size_t>(bound));
  std::vector<Brace> out;
  if (m == 1) {
    out.push_back(trivial_brace(std::vector<int>{1}));
    return out;
  }
  const std::vector<int> gens = small_generating_set(grp);
  for (const auto& factors : abelian_groups(m)) {
    Holomorph hol(factors);
    std::vector<Brace> mine;
    std::map<std::vector<int>, std::vector<std::size_t>> buckets;

    // Holomorph elements by order, restricted to those compatible with regularity.
    std::map<int, std::vector<Map>> by_order;
    for (int t = 0; t < m; ++t)
      for (const auto& phi : hol.autos) {
        Map h = hol.element(t, phi);
        if (!regular_compatible(h)) continue;
        by_order[map_order(h)].push_back(std::move(h));
      }
    std::vector<std::vector<Map>> candidates;
    for (int gen : gens) candidates.push_back(by_order[grp.element_order(gen)]);
    candidates[0] = conjugacy_representatives(candidates[0], hol.autos);

    std::vector<Map> images;
    std::vector<Map> img(static_cast<std::size_t>(m));
    std::set<std::vector<int>> tables;

    // Extends images of the first k generators along the Cayley graph; the
    // translation parts h(0) must stay distinct.
    auto extend = [&](std::size_t k) -> bool {
      for (auto& x : img) x.clear();
      std::vector<char> used(static_cast<std::size_t>(m), 0);
      img[0] = hol.identity();
      used[0] = 1;
      std::vector<int> queue{0};
      for (std::size_t i = 0; i < queue.size(); ++i) {
        const int x = queue[i];
        for (std::size_t j = 0; j < k; ++j) {
          const int y = grp.mul(x, gens[j]);
          Map fy = compose_maps(img[static_cast<std::size_t>(x)], images[j]);
          Map& slot = img[static_cast<std::size_t>(y)];
          if (slot.empty()) {
            if (used[static_cast<std::size_t>(fy[0])]) return false;
            used[static_cast<std::size_t>(fy[0])] = 1;
            slot = std::move(fy);
            queue.push_back(y);
          } else if (slot != fy) {
            return false;
          }
        }
      }
      return true;
    };
    auto search = [&](auto&& self, std::size_t k) -> void {
      for (const auto& h : candidates[k]) {
        images.push_back(h);
        if (extend(k + 1)) {
          if (k + 1 == gens.size()) {
            std::vector<Map> g(static_cast<std::size_t>(m));
            for (const auto& e : img) g[static_cast<std::size_t>(e[0])] = e;
            std::vector<int> key;
            for (const auto& row : g) key.insert(key.end(), row.begin(), row.end());
            if (tables.insert(key).second) add_up_to_isomorphism(mine, buckets, brace_from_regular(hol, g));
          } else {
            self(self, k + 1);
          }
        }
        images.pop_back();
      }
    };
    search(search, 0);
    for (auto& b : mine) out.push_back(std::move(b));
  }
  return out;
}

}  // namespace ybe
