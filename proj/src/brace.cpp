#include "ybe/brace.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

#include "ybe/errors.hpp"

namespace ybe {

namespace {

std::vector<int> inverses_in(int m, std::span<const int> table) {
  std::vector<int> out(static_cast<std::size_t>(m), -1);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (table[static_cast<std::size_t>(a * m + b)] == 0) {
        out[static_cast<std::size_t>(a)] = b;
        break;
      }
  return out;
}

}  // namespace

Brace::Brace(int order, std::vector<int> add, std::vector<int> mul)
    : m_(order), add_(std::move(add)), mul_(std::move(mul)) {
  if (m_ < 1) throw FormatError("brace order must be positive");
  const auto cells = static_cast<std::size_t>(m_) * static_cast<std::size_t>(m_);
  if (add_.size() != cells) throw FormatError("addition table has " + std::to_string(add_.size()) + " cells");
  if (mul_.size() != cells) throw FormatError("multiplication table has " + std::to_string(mul_.size()) + " cells");
  for (std::size_t i = 0; i < cells; ++i) {
    if (add_[i] < 0 || add_[i] >= m_) throw FormatError("addition table entry out of range at cell " + std::to_string(i));
    if (mul_[i] < 0 || mul_[i] >= m_)
      throw FormatError("multiplication table entry out of range at cell " + std::to_string(i));
  }
  neg_ = inverses_in(m_, add_);
  inv_ = inverses_in(m_, mul_);
}

BraceReport validate_brace(const Brace& b) {
  BraceReport rep;
  const int m = b.order();
  auto fail = [&](std::string why, int x, int y, int z) {
    rep.ok = false;
    rep.failure = std::move(why);
    rep.witness = std::array<int, 3>{x, y, z};
    return rep;
  };
  for (int op = 0; op < 2; ++op) {
    const char* name = op == 0 ? "+" : "o";
    auto f = [&](int x, int y) { return op == 0 ? b.add(x, y) : b.mul(x, y); };
    for (int x = 0; x < m; ++x) {
      if (f(0, x) != x || f(x, 0) != x) return fail(std::string("0 is not the identity of ") + name, x, -1, -1);
      bool has_inverse = false;
      for (int y = 0; y < m && !has_inverse; ++y) has_inverse = f(x, y) == 0 && f(y, x) == 0;
      if (!has_inverse) return fail(std::to_string(x) + " has no inverse for " + name, x, -1, -1);
    }
    for (int x = 0; x < m; ++x)
      for (int y = 0; y < m; ++y)
        for (int z = 0; z < m; ++z)
          if (f(f(x, y), z) != f(x, f(y, z))) return fail(std::string(name) + " is not associative", x, y, z);
  }
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      if (b.add(x, y) != b.add(y, x)) return fail("+ is not commutative", x, y, -1);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      for (int z = 0; z < m; ++z)
        if (b.mul(x, b.add(y, z)) != b.add(b.add(b.mul(x, y), b.neg(x)), b.mul(x, z)))
          return fail("brace law a o (b + c) = a o b - a + a o c fails", x, y, z);
  rep.ok = true;
  return rep;
}

Brace trivial_brace(std::span<const int> factors) {
  int m = 1;
  for (int f : factors) {
    if (f < 1) throw InvalidArgument("trivial_brace: factors must be positive");
    m *= f;
  }
  std::vector<int> table(static_cast<std::size_t>(m) * static_cast<std::size_t>(m));
  std::vector<int> da(factors.size()), db(factors.size());
  auto digits = [&](int x, std::vector<int>& d) {
    for (std::size_t i = factors.size(); i-- > 0;) {
      d[i] = x % factors[i];
      x /= factors[i];
    }
  };
  for (int a = 0; a < m; ++a) {
    digits(a, da);
    for (int b = 0; b < m; ++b) {
      digits(b, db);
      int c = 0;
      for (std::size_t i = 0; i < factors.size(); ++i) c = c * factors[i] + (da[i] + db[i]) % factors[i];
      table[static_cast<std::size_t>(a * m + b)] = c;
    }
  }
  return Brace(m, table, table);
}

Brace cyclic_brace(int p, int n, int t) {
  if (!is_prime(p) || n < 1 || t < 1 || t > n)
    throw InvalidArgument("cyclic_brace: need p prime and 1 <= t <= n");
  long long m = 1, pt = 1;
  for (int i = 0; i < n; ++i) m *= p;
  for (int i = 0; i < t; ++i) pt *= p;
  if (m > 4096) throw BoundError("cyclic_brace", static_cast<std::size_t>(m), 4096);
  const int mi = static_cast<int>(m);
  std::vector<int> add(static_cast<std::size_t>(m * m)), mul(add.size());
  for (long long a = 0; a < m; ++a)
    for (long long b = 0; b < m; ++b) {
      add[static_cast<std::size_t>(a * m + b)] = static_cast<int>((a + b) % m);
      mul[static_cast<std::size_t>(a * m + b)] = static_cast<int>((a + b + pt * a * b) % m);
    }
  return Brace(mi, std::move(add), std::move(mul));
}

Brace direct_product(const Brace& b1, const Brace& b2) {
  const int m1 = b1.order(), m2 = b2.order(), m = m1 * m2;
  std::vector<int> add(static_cast<std::size_t>(m) * static_cast<std::size_t>(m)), mul(add.size());
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      const int a1 = a / m2, a2 = a % m2, c1 = b / m2, c2 = b % m2;
      add[static_cast<std::size_t>(a * m + b)] = b1.add(a1, c1) * m2 + b2.add(a2, c2);
      mul[static_cast<std::size_t>(a * m + b)] = b1.mul(a1, c1) * m2 + b2.mul(a2, c2);
    }
  return Brace(m, std::move(add), std::move(mul));
}

Brace semidirect_product(const Brace& ap, const Brace& aq, const std::vector<std::vector<int>>& alpha) {
  const int mp = ap.order(), mq = aq.order(), m = mp * mq;
  if (static_cast<int>(alpha.size()) != mq) throw InvalidArgument("semidirect_product: alpha needs one map per element");
  for (int y = 0; y < mq; ++y) {
    const auto& f = alpha[static_cast<std::size_t>(y)];
    if (static_cast<int>(f.size()) != mp) throw InvalidArgument("semidirect_product: alpha map has wrong length");
    std::vector<int> sorted = f;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < mp; ++i)
      if (sorted[static_cast<std::size_t>(i)] != i) throw InvalidArgument("semidirect_product: alpha map is not a bijection");
    for (int a = 0; a < mp; ++a)
      for (int c = 0; c < mp; ++c) {
        const auto fa = f[static_cast<std::size_t>(a)], fc = f[static_cast<std::size_t>(c)];
        if (f[static_cast<std::size_t>(ap.add(a, c))] != ap.add(fa, fc) ||
            f[static_cast<std::size_t>(ap.mul(a, c))] != ap.mul(fa, fc))
          throw InvalidArgument("semidirect_product: alpha_" + std::to_string(y) + " is not a brace automorphism");
      }
  }
  for (int y = 0; y < mq; ++y)
    for (int z = 0; z < mq; ++z) {
      const auto& fyz = alpha[static_cast<std::size_t>(aq.mul(y, z))];
      const auto& fy = alpha[static_cast<std::size_t>(y)];
      const auto& fz = alpha[static_cast<std::size_t>(z)];
      for (int a = 0; a < mp; ++a)
        if (fyz[static_cast<std::size_t>(a)] != fy[static_cast<std::size_t>(fz[static_cast<std::size_t>(a)])])
          throw InvalidArgument("semidirect_product: alpha is not a homomorphism at (" + std::to_string(y) + ", " +
                                std::to_string(z) + ")");
    }
  std::vector<int> add(static_cast<std::size_t>(m) * static_cast<std::size_t>(m)), mul(add.size());
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      const int a1 = a / mq, a2 = a % mq, b1 = b / mq, b2 = b % mq;
      add[static_cast<std::size_t>(a * m + b)] = ap.add(a1, b1) * mq + aq.add(a2, b2);
      const int acted = alpha[static_cast<std::size_t>(a2)][static_cast<std::size_t>(b1)];
      mul[static_cast<std::size_t>(a * m + b)] = ap.mul(a1, acted) * mq + aq.mul(a2, b2);
    }
  return Brace(m, std::move(add), std::move(mul));
}

std::vector<std::vector<int>> action_from_spec(const Brace& ap, const Brace& aq, const std::string& spec) {
  const int mp = ap.order();
  for (int a = 0; a < mp; ++a)
    for (int c = 0; c < mp; ++c)
      if (ap.add(a, c) != (a + c) % mp)
        throw InvalidArgument("action spec '" + spec + "' needs a left factor labeled as Z/" + std::to_string(mp));
  long long k;
  if (spec == "triv") {
    k = 1;
  } else if (spec == "inv") {
    k = mp - 1;
  } else if (spec.rfind("pow:", 0) == 0) {
    try {
      k = std::stoll(spec.substr(4));
    } catch (const std::exception&) {
      throw FormatError("bad action spec '" + spec + "'");
    }
    k = ((k % mp) + mp) % mp;
  } else {
    throw FormatError("unknown action spec '" + spec + "' (expected triv, inv or pow:k)");
  }
  std::vector<std::vector<int>> alpha;
  for (int y = 0; y < aq.order(); ++y) {
    long long ky = 1;
    for (int i = 0; i < y; ++i) ky = ky * k % mp;
    std::vector<int> f(static_cast<std::size_t>(mp));
    for (int x = 0; x < mp; ++x) f[static_cast<std::size_t>(x)] = static_cast<int>(x * ky % mp);
    alpha.push_back(std::move(f));
  }
  return alpha;
}

std::vector<std::vector<int>> lambda_table(const Brace& b) {
  const int m = b.order();
  std::vector<std::vector<int>> t(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m)));
  for (int a = 0; a < m; ++a)
    for (int x = 0; x < m; ++x) t[static_cast<std::size_t>(a)][static_cast<std::size_t>(x)] = b.lambda(a, x);
  return t;
}

std::vector<int> socle(const Brace& b) {
  std::vector<int> s;
  for (int a = 0; a < b.order(); ++a) {
    bool id = true;
    for (int x = 0; x < b.order() && id; ++x) id = b.add(a, x) == b.mul(a, x);
    if (id) s.push_back(a);
  }
  return s;
}

int additive_order(const Brace& b, int x) {
  int k = 1;
  for (int y = x; y != 0; y = b.add(y, x)) ++k;
  return k;
}

int multiplicative_order(const Brace& b, int x) {
  int k = 1;
  for (int y = x; y != 0; y = b.mul(y, x)) ++k;
  return k;
}

int additive_exponent(const Brace& b) {
  int e = 1;
  for (int x = 0; x < b.order(); ++x) e = std::lcm(e, additive_order(b, x));
  return e;
}

std::vector<int> additive_invariants(const Brace& b) { return abelian_invariants(b.additive_group()); }

namespace {

// Iso-invariant per-element data used to restrict generator images.
using Signature = std::array<int, 5>;

std::vector<Signature> element_signatures(const Brace& b) {
  const int m = b.order();
  std::vector<Signature> out(static_cast<std::size_t>(m));
  for (int a = 0; a < m; ++a) {
    std::vector<int> la(static_cast<std::size_t>(m));
    int fixed = 0;
    for (int x = 0; x < m; ++x) {
      la[static_cast<std::size_t>(x)] = b.lambda(a, x);
      fixed += la[static_cast<std::size_t>(x)] == x;
    }
    out[static_cast<std::size_t>(a)] = {additive_order(b, a), multiplicative_order(b, a), fixed,
                                        Permutation(la).order(), 0};
  }
  // Last slot: number of elements sharing this element's two orders.
  for (int a = 0; a < m; ++a) {
    int same = 0;
    for (int c = 0; c < m; ++c)
      same += out[static_cast<std::size_t>(c)][0] == out[static_cast<std::size_t>(a)][0] &&
              out[static_cast<std::size_t>(c)][1] == out[static_cast<std::size_t>(a)][1];
    out[static_cast<std::size_t>(a)][4] = same;
  }
  return out;
}

// Extends the generator images along the Cayley graph of table t1 and checks
// every edge against t2. `map` receives the partial homomorphism.
bool extend_on_tables(int m, std::span<const int> t1, std::span<const int> t2, std::span<const int> gens,
                      std::span<const int> images, std::vector<int>& map) {
  std::fill(map.begin(), map.end(), -1);
  std::vector<char> used(static_cast<std::size_t>(m), 0);
  map[0] = 0;
  used[0] = 1;
  std::vector<int> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const int x = queue[i];
    for (std::size_t k = 0; k < images.size(); ++k) {
      const int y = t1[static_cast<std::size_t>(x * m + gens[k])];
      const int fy = t2[static_cast<std::size_t>(map[static_cast<std::size_t>(x)] * m + images[k])];
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

// Brace homomorphisms b1 -> b2 that are bijective. Multiplicative generators
// are mapped first; addition is checked once the map is complete.
std::vector<std::vector<int>> brace_morphisms(const Brace& b1, const Brace& b2, bool first_only) {
  std::vector<std::vector<int>> found;
  const int m = b1.order();
  if (m != b2.order()) return found;
  const auto s1 = element_signatures(b1);
  const auto s2 = element_signatures(b2);
  {
    auto a = s1, c = s2;
    std::sort(a.begin(), a.end());
    std::sort(c.begin(), c.end());
    if (a != c) return found;
  }
  const std::vector<int> gens = small_generating_set(b1.multiplicative_group());
  std::vector<std::vector<int>> candidates(gens.size());
  for (std::size_t k = 0; k < gens.size(); ++k)
    for (int y = 0; y < m; ++y)
      if (s2[static_cast<std::size_t>(y)] == s1[static_cast<std::size_t>(gens[k])]) candidates[k].push_back(y);

  std::vector<int> images;
  std::vector<int> map(static_cast<std::size_t>(m));
  auto additive_ok = [&] {
    for (int x = 0; x < m; ++x)
      for (int y = x; y < m; ++y)
        if (map[static_cast<std::size_t>(b1.add(x, y))] !=
            b2.add(map[static_cast<std::size_t>(x)], map[static_cast<std::size_t>(y)]))
          return false;
    return true;
  };
  auto search = [&](auto&& self, std::size_t k) -> bool {
    for (int y : candidates[k]) {
      images.push_back(y);
      if (extend_on_tables(m, b1.mul_table(), b2.mul_table(), std::span(gens).first(k + 1), images, map)) {
        if (k + 1 == gens.size()) {
          if (std::find(map.begin(), map.end(), -1) == map.end() && additive_ok()) {
            found.push_back(map);
            if (first_only) return true;
          }
        } else if (self(self, k + 1)) {
          return true;
        }
      }
      images.pop_back();
    }
    return false;
  };
  if (gens.empty()) {
    found.push_back({0});
  } else {
    search(search, 0);
  }
  return found;
}

void check_bound(const char* what, int m, int bound) {
  if (m > bound) throw BoundError(what, static_cast<std::size_t>(m), static_cast<std::size_t>(bound));
}

}  // namespace

std::vector<std::vector<int>> automorphisms(const Brace& b, int bound) {
  check_bound("brace automorphisms", b.order(), bound);
  auto out = brace_morphisms(b, b, false);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> additive_automorphisms(const Brace& b, int bound) {
  check_bound("additive automorphisms", b.order(), bound);
  const int m = b.order();
  const Group a = b.additive_group();
  const std::vector<int> gens = small_generating_set(a);
  std::vector<std::vector<int>> out;
  if (gens.empty()) return {{0}};
  std::vector<int> images;
  std::vector<int> map(static_cast<std::size_t>(m));
  auto search = [&](auto&& self, std::size_t k) -> void {
    for (int y = 0; y < m; ++y) {
      if (a.element_order(y) != a.element_order(gens[k])) continue;
      images.push_back(y);
      if (extend_on_tables(m, b.add_table(), b.add_table(), std::span(gens).first(k + 1), images, map)) {
        if (k + 1 == gens.size()) {
          if (std::find(map.begin(), map.end(), -1) == map.end()) out.push_back(map);
        } else {
          self(self, k + 1);
        }
      }
      images.pop_back();
    }
  };
  search(search, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> automorphisms_by_additive_filter(const Brace& b, int bound) {
  std::vector<std::vector<int>> out;
  const int m = b.order();
  for (auto& f : additive_automorphisms(b, bound)) {
    bool ok = true;
    for (int x = 0; x < m && ok; ++x)
      for (int y = 0; y < m && ok; ++y)
        ok = f[static_cast<std::size_t>(b.mul(x, y))] == b.mul(f[static_cast<std::size_t>(x)], f[static_cast<std::size_t>(y)]);
    if (ok) out.push_back(std::move(f));
  }
  return out;
}

std::optional<std::vector<int>> find_brace_isomorphism(const Brace& b1, const Brace& b2, int bound) {
  check_bound("brace isomorphism", std::max(b1.order(), b2.order()), bound);
  auto found = brace_morphisms(b1, b2, true);
  if (found.empty()) return std::nullopt;
  return found.front();
}

Brace relabel_brace(const Brace& b, std::span<const int> f) {
  const int m = b.order();
  if (static_cast<int>(f.size()) != m || f[0] != 0) throw InvalidArgument("relabel_brace: need a bijection fixing 0");
  std::vector<int> add(static_cast<std::size_t>(m) * static_cast<std::size_t>(m)), mul(add.size());
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      const auto cell = static_cast<std::size_t>(f[static_cast<std::size_t>(x)] * m + f[static_cast<std::size_t>(y)]);
      add[cell] = f[static_cast<std::size_t>(b.add(x, y))];
      mul[cell] = f[static_cast<std::size_t>(b.mul(x, y))];
    }
  return Brace(m, std::move(add), std::move(mul));
}

namespace {

bool is_additive_subgroup(const Brace& b, std::span<const int> s) {
  std::vector<char> in(static_cast<std::size_t>(b.order()), 0);
  for (int x : s) in[static_cast<std::size_t>(x)] = 1;
  if (!in[0]) return false;
  for (int x : s)
    for (int y : s)
      if (!in[static_cast<std::size_t>(b.add(x, y))]) return false;
  return true;
}

}  // namespace

bool is_left_ideal(const Brace& b, std::span<const int> subset) {
  if (!is_additive_subgroup(b, subset)) return false;
  std::vector<char> in(static_cast<std::size_t>(b.order()), 0);
  for (int x : subset) in[static_cast<std::size_t>(x)] = 1;
  for (int a = 0; a < b.order(); ++a)
    for (int x : subset)
      if (!in[static_cast<std::size_t>(b.lambda(a, x))]) return false;
  return true;
}

bool is_ideal(const Brace& b, std::span<const int> subset) {
  if (!is_left_ideal(b, subset)) return false;
  std::vector<char> in(static_cast<std::size_t>(b.order()), 0);
  for (int x : subset) in[static_cast<std::size_t>(x)] = 1;
  for (int a = 0; a < b.order(); ++a)
    for (int x : subset)
      if (!in[static_cast<std::size_t>(b.mul(b.mul(a, x), b.inv(a)))]) return false;
  return true;
}

Brace quotient(const Brace& b, std::span<const int> ideal) {
  if (!is_ideal(b, ideal)) throw InvalidArgument("quotient: subset is not an ideal");
  const int m = b.order();
  std::vector<int> coset(static_cast<std::size_t>(m), -1);
  std::vector<int> reps;
  for (int x = 0; x < m; ++x) {
    if (coset[static_cast<std::size_t>(x)] >= 0) continue;
    const int id = static_cast<int>(reps.size());
    reps.push_back(x);
    for (int s : ideal) coset[static_cast<std::size_t>(b.add(x, s))] = id;
  }
  const int q = static_cast<int>(reps.size());
  std::vector<int> add(static_cast<std::size_t>(q) * static_cast<std::size_t>(q)), mul(add.size());
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) {
      const int x = reps[static_cast<std::size_t>(i)], y = reps[static_cast<std::size_t>(j)];
      add[static_cast<std::size_t>(i * q + j)] = coset[static_cast<std::size_t>(b.add(x, y))];
      mul[static_cast<std::size_t>(i * q + j)] = coset[static_cast<std::size_t>(b.mul(x, y))];
    }
  return Brace(q, std::move(add), std::move(mul));
}

Brace quotient_by_socle(const Brace& b) {
  const auto s = socle(b);
  return quotient(b, s);
}

std::vector<std::vector<int>> abelian_groups(int m) {
  if (m < 1) throw InvalidArgument("abelian_groups: order must be positive");
  // Partitions of each prime exponent, largest parts first.
  std::vector<std::pair<int, std::vector<std::vector<int>>>> per_prime;
  for (auto [p, e] : factorize(m)) {
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int max_part) -> void {
      if (rest == 0) {
        parts.push_back(cur);
        return;
      }
      for (int k = std::min(rest, max_part); k >= 1; --k) {
        cur.push_back(k);
        self(self, rest - k, k);
        cur.pop_back();
      }
    };
    rec(rec, e, e);
    per_prime.emplace_back(p, std::move(parts));
  }
  std::vector<std::vector<int>> out;
  std::vector<std::size_t> choice(per_prime.size(), 0);
  while (true) {
    std::size_t rank = 0;
    for (std::size_t i = 0; i < per_prime.size(); ++i) rank = std::max(rank, per_prime[i].second[choice[i]].size());
    std::vector<int> factors(rank, 1);  // largest first
    for (std::size_t i = 0; i < per_prime.size(); ++i) {
      const auto& part = per_prime[i].second[choice[i]];
      for (std::size_t k = 0; k < part.size(); ++k)
        for (int j = 0; j < part[k]; ++j) factors[k] *= per_prime[i].first;
    }
    std::reverse(factors.begin(), factors.end());
    out.push_back(std::move(factors));
    std::size_t i = per_prime.size();
    while (i > 0) {
      --i;
      if (++choice[i] < per_prime[i].second.size()) break;
      choice[i] = 0;
      if (i == 0) {
        i = per_prime.size() + 1;
        break;
      }
    }
    if (i == per_prime.size() + 1 || per_prime.empty()) break;
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return out;
}

Brace canonical_brace(const Brace& b) {
  const int m = b.order();
  if (m == 1) return b;
  const Group g = b.multiplicative_group();
  std::optional<std::pair<std::vector<int>, std::vector<int>>> best;
  std::vector<int> tuple;
  std::vector<int> label(static_cast<std::size_t>(m));
  bool any = false;
  // BFS labeling of (b, o) from the generator tuple; the relabeled tables
  // depend only on the tuple's isomorphism-invariant position.
  auto try_tuple = [&] {
    std::fill(label.begin(), label.end(), -1);
    std::vector<int> order{0};
    label[0] = 0;
    for (std::size_t i = 0; i < order.size(); ++i)
      for (int gen : tuple) {
        const int y = g.mul(order[i], gen);
        if (label[static_cast<std::size_t>(y)] < 0) {
          label[static_cast<std::size_t>(y)] = static_cast<int>(order.size());
          order.push_back(y);
        }
      }
    if (static_cast<int>(order.size()) != m) return;
    any = true;
    std::vector<int> add(static_cast<std::size_t>(m) * static_cast<std::size_t>(m)), mul(add.size());
    bool decided = !best.has_value();
    bool worse = false;
    for (int i = 0; i < m && !worse; ++i)
      for (int j = 0; j < m; ++j) {
        const auto cell = static_cast<std::size_t>(i * m + j);
        add[cell] = label[static_cast<std::size_t>(b.add(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]))];
        if (!decided) {
          if (add[cell] < best->first[cell]) decided = true;
          else if (add[cell] > best->first[cell]) {
            worse = true;
            break;
          }
        }
      }
    if (worse) return;
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        const auto cell = static_cast<std::size_t>(i * m + j);
        mul[cell] = label[static_cast<std::size_t>(b.mul(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]))];
      }
    if (!decided && mul >= best->second) return;
    best.emplace(std::move(add), std::move(mul));
  };
  for (int k = 1; !any; ++k) {
    tuple.assign(static_cast<std::size_t>(k), 1);
    while (true) {
      try_tuple();
      std::size_t i = 0;
      while (i < tuple.size() && ++tuple[i] == m) tuple[i++] = 1;
      if (i == tuple.size()) break;
    }
  }
  return Brace(m, std::move(best->first), std::move(best->second));
}

}  // namespace ybe
