#include "ybe/solution.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <tuple>

#include "ybe/errors.hpp"

namespace ybe {

struct Solution::GroupCache {
  std::once_flag once;
  std::optional<PermGroup> group;
};

Solution::Solution(const std::vector<std::vector<Point>>& rows) : n_(static_cast<int>(rows.size())) {
  if (n_ == 0) throw FormatError("solution must have at least one point");
  sigma_.reserve(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_));
  for (std::size_t x = 0; x < rows.size(); ++x) {
    if (static_cast<int>(rows[x].size()) != n_)
      throw FormatError("sigma row " + std::to_string(x) + " has length " + std::to_string(rows[x].size()) +
                        ", expected " + std::to_string(n_));
    for (Point v : rows[x]) {
      if (v < 0 || v >= n_)
        throw FormatError("sigma row " + std::to_string(x) + " has out-of-range entry " + std::to_string(v));
      sigma_.push_back(v);
    }
  }
  init();
}

Solution::Solution(std::span<const Permutation> sigma) : n_(static_cast<int>(sigma.size())) {
  if (n_ == 0) throw FormatError("solution must have at least one point");
  for (const auto& p : sigma) {
    if (p.degree() != n_) throw FormatError("sigma permutation has wrong degree");
    sigma_.insert(sigma_.end(), p.image().begin(), p.image().end());
  }
  init();
}

void Solution::init() {
  sigma_inv_.assign(sigma_.size(), -1);
  rows_bijective_ = true;
  for (Point x = 0; x < n_; ++x)
    for (Point y = 0; y < n_; ++y) {
      Point& slot = sigma_inv_[idx(x, sigma(x, y))];
      if (slot >= 0) rows_bijective_ = false;
      slot = y;
    }
  group_ = std::make_shared<GroupCache>();
}

Permutation Solution::sigma_perm(Point x) const {
  auto r = row(x);
  return Permutation(std::vector<Point>(r.begin(), r.end()));
}

std::vector<std::vector<Point>> Solution::table() const {
  std::vector<std::vector<Point>> t;
  for (Point x = 0; x < n_; ++x) {
    auto r = row(x);
    t.emplace_back(r.begin(), r.end());
  }
  return t;
}

const PermGroup& Solution::permutation_group() const {
  std::call_once(group_->once, [this] {
    std::vector<Permutation> gens;
    for (Point x = 0; x < n_; ++x) gens.push_back(sigma_perm(x));
    group_->group.emplace(PermGroup::closure(gens));
  });
  return *group_->group;
}

ValidationReport validate(const Solution& s) {
  ValidationReport rep;
  const int n = s.size();
  rep.nondegenerate = s.rows_bijective();
  if (!rep.nondegenerate) {
    for (Point x = 0; x < n && !rep.witness; ++x) {
      auto r = s.row(x);
      std::vector<Point> sorted(r.begin(), r.end());
      std::sort(sorted.begin(), sorted.end());
      for (Point i = 1; i < n; ++i)
        if (sorted[static_cast<std::size_t>(i)] == sorted[static_cast<std::size_t>(i - 1)]) {
          rep.witness = std::array<Point, 3>{x, sorted[static_cast<std::size_t>(i)], -1};
          rep.failure = "sigma_" + std::to_string(x) + " is not a bijection";
          break;
        }
    }
    return rep;
  }
  for (Point y = 0; y < n && rep.nondegenerate; ++y) {
    std::vector<char> hit(static_cast<std::size_t>(n), 0);
    for (Point x = 0; x < n; ++x) {
      const Point t = s.tau(y, x);
      if (hit[static_cast<std::size_t>(t)]) {
        rep.nondegenerate = false;
        rep.witness = std::array<Point, 3>{y, x, -1};
        rep.failure = "tau_" + std::to_string(y) + " is not a bijection";
        break;
      }
      hit[static_cast<std::size_t>(t)] = 1;
    }
  }

  auto r = [&](Point x, Point y) { return std::pair{s.sigma(x, y), s.tau(y, x)}; };

  rep.involutive = true;
  for (Point x = 0; x < n && rep.involutive; ++x)
    for (Point y = 0; y < n; ++y) {
      auto [u, v] = r(x, y);
      if (r(u, v) != std::pair{x, y}) {
        rep.involutive = false;
        if (!rep.witness) {
          rep.witness = std::array<Point, 3>{x, y, -1};
          rep.failure = "r^2 != id at (" + std::to_string(x) + ", " + std::to_string(y) + ")";
        }
        break;
      }
    }

  rep.braid = true;
  for (Point x = 0; x < n && rep.braid; ++x)
    for (Point y = 0; y < n && rep.braid; ++y)
      for (Point z = 0; z < n; ++z) {
        // (r x id)(id x r)(r x id)
        auto [a1, b1] = r(x, y);
        auto [b2, c2] = r(b1, z);
        auto [a3, b3] = r(a1, b2);
        // (id x r)(r x id)(id x r)
        auto [q1, r1] = r(y, z);
        auto [p2, q2] = r(x, q1);
        auto [q3, r3] = r(q2, r1);
        if (std::tuple{a3, b3, c2} != std::tuple{p2, q3, r3}) {
          rep.braid = false;
          if (!rep.witness) {
            rep.witness = std::array<Point, 3>{x, y, z};
            rep.failure = "braid relation fails at (" + std::to_string(x) + ", " + std::to_string(y) + ", " +
                          std::to_string(z) + ")";
          }
          break;
        }
      }
  return rep;
}

Solution trivial_solution(int n) { return shift_solution(Permutation::identity(n)); }

Solution shift_solution(const Permutation& gamma) {
  std::vector<Permutation> rows(static_cast<std::size_t>(gamma.degree()), gamma);
  return Solution(rows);
}

Solution relabel(const Solution& s, const Permutation& f) {
  const int n = s.size();
  if (f.degree() != n) throw InvalidArgument("relabel: degree mismatch");
  std::vector<std::vector<Point>> rows(static_cast<std::size_t>(n), std::vector<Point>(static_cast<std::size_t>(n)));
  for (Point x = 0; x < n; ++x)
    for (Point y = 0; y < n; ++y) rows[static_cast<std::size_t>(f(x))][static_cast<std::size_t>(f(y))] = f(s.sigma(x, y));
  return Solution(rows);
}

bool is_indecomposable(const Solution& s) { return s.permutation_group().is_transitive(); }

bool is_uniconnected(const Solution& s) { return s.permutation_group().is_regular(); }

Retraction retraction(const Solution& s) {
  const int n = s.size();
  std::map<std::vector<Point>, int> class_id;
  std::vector<int> class_of(static_cast<std::size_t>(n));
  std::vector<Point> first_member;
  for (Point x = 0; x < n; ++x) {
    auto r = s.row(x);
    auto [it, inserted] = class_id.emplace(std::vector<Point>(r.begin(), r.end()), static_cast<int>(first_member.size()));
    if (inserted) first_member.push_back(x);
    class_of[static_cast<std::size_t>(x)] = it->second;
  }
  const int m = static_cast<int>(first_member.size());
  std::vector<std::vector<Point>> rows(static_cast<std::size_t>(m), std::vector<Point>(static_cast<std::size_t>(m), -1));
  for (int c = 0; c < m; ++c) {
    const Point x = first_member[static_cast<std::size_t>(c)];
    for (Point y = 0; y < n; ++y) {
      const int cy = class_of[static_cast<std::size_t>(y)];
      const int image = class_of[static_cast<std::size_t>(s.sigma(x, y))];
      Point& slot = rows[static_cast<std::size_t>(c)][static_cast<std::size_t>(cy)];
      if (slot >= 0 && slot != image) throw ConsistencyError("retraction: sigma is not compatible with the retract relation");
      slot = image;
    }
  }
  return Retraction{Solution(rows), std::move(class_of)};
}

std::optional<int> multipermutation_level(const Solution& s) {
  Solution current = s;
  for (int level = 0;; ++level) {
    if (current.size() == 1) return level;
    Retraction next = retraction(current);
    if (next.solution.size() == current.size()) return std::nullopt;
    current = std::move(next.solution);
  }
}

namespace {

// Per-point invariants preserved by solution isomorphisms.
std::vector<std::vector<int>> point_signatures(const Solution& s) {
  const int n = s.size();
  const auto orbits = s.permutation_group().orbits();
  std::vector<int> orbit_size(static_cast<std::size_t>(n));
  for (const auto& o : orbits)
    for (Point x : o) orbit_size[static_cast<std::size_t>(x)] = static_cast<int>(o.size());
  std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
  for (Point x = 0; x < n; ++x) {
    const Permutation p = s.sigma_perm(x);
    auto& v = sig[static_cast<std::size_t>(x)];
    v = p.cycle_type();
    v.push_back(-1);
    v.push_back(p.cycle_length(x));
    v.push_back(orbit_size[static_cast<std::size_t>(x)]);
    int same_row = 0, fixers = 0;
    for (Point y = 0; y < n; ++y) {
      same_row += std::equal(s.row(x).begin(), s.row(x).end(), s.row(y).begin());
      fixers += (s.sigma(y, x) == x);
    }
    v.push_back(same_row);
    v.push_back(fixers);
  }
  return sig;
}

}  // namespace

std::optional<Permutation> find_isomorphism(const Solution& a, const Solution& b, int bound) {
  const int n = a.size();
  if (n > bound || b.size() > bound)
    throw BoundError("solution isomorphism", static_cast<std::size_t>(std::max(n, b.size())),
                     static_cast<std::size_t>(bound));
  if (n != b.size()) return std::nullopt;
  if (a.permutation_group().order() != b.permutation_group().order()) return std::nullopt;

  const auto sa = point_signatures(a);
  const auto sb = point_signatures(b);
  {
    auto ma = sa, mb = sb;
    std::sort(ma.begin(), ma.end());
    std::sort(mb.begin(), mb.end());
    if (ma != mb) return std::nullopt;
  }

  std::vector<Point> f(static_cast<std::size_t>(n), -1), finv(static_cast<std::size_t>(n), -1);
  std::vector<Point> trail;
  std::vector<Point> assigned;

  // Assigns f(x) = y and closes under the homomorphism condition.
  auto assign = [&](Point x0, Point y0) -> bool {
    std::vector<std::pair<Point, Point>> pending{{x0, y0}};
    while (!pending.empty()) {
      auto [x, y] = pending.back();
      pending.pop_back();
      const auto ux = static_cast<std::size_t>(x), uy = static_cast<std::size_t>(y);
      if (f[ux] >= 0) {
        if (f[ux] != y) return false;
        continue;
      }
      if (finv[uy] >= 0 || sa[ux] != sb[uy]) return false;
      f[ux] = y;
      finv[uy] = x;
      trail.push_back(x);
      assigned.push_back(x);
      for (Point u : assigned) {
        const Point fu = f[static_cast<std::size_t>(u)];
        pending.emplace_back(a.sigma(x, u), b.sigma(y, fu));
        pending.emplace_back(a.sigma(u, x), b.sigma(fu, y));
      }
    }
    return true;
  };
  auto undo_to = [&](std::size_t mark) {
    while (trail.size() > mark) {
      const Point x = trail.back();
      trail.pop_back();
      finv[static_cast<std::size_t>(f[static_cast<std::size_t>(x)])] = -1;
      f[static_cast<std::size_t>(x)] = -1;
    }
    assigned.resize(mark);
  };

  auto search = [&](auto&& self) -> bool {
    Point x = 0;
    while (x < n && f[static_cast<std::size_t>(x)] >= 0) ++x;
    if (x == n) return true;
    for (Point y = 0; y < n; ++y) {
      if (finv[static_cast<std::size_t>(y)] >= 0 || sa[static_cast<std::size_t>(x)] != sb[static_cast<std::size_t>(y)])
        continue;
      const std::size_t mark = trail.size();
      if (assign(x, y) && self(self)) return true;
      undo_to(mark);
    }
    return false;
  };
  if (!search(search)) return std::nullopt;
  return Permutation(f);
}

Point omega(const Solution& s, std::span<const Point> args) {
  if (args.empty()) throw InvalidArgument("omega needs at least one argument");
  const int n = s.size();
  // F_k(y) = Omega_k(x_1, ..., x_{k-1}, y); F_1(y) = y and
  // F_k(y) = F_{k-1}(x_{k-1}) . F_{k-1}(y).
  std::vector<Point> f(static_cast<std::size_t>(n));
  std::iota(f.begin(), f.end(), 0);
  std::vector<Point> next(f.size());
  for (std::size_t k = 1; k < args.size(); ++k) {
    const Point head = f[static_cast<std::size_t>(args[k - 1])];
    for (Point y = 0; y < n; ++y) next[static_cast<std::size_t>(y)] = s.dot(head, f[static_cast<std::size_t>(y)]);
    f.swap(next);
  }
  return f[static_cast<std::size_t>(args.back())];
}

int dehornoy_class_direct(const Solution& s) {
  const int n = s.size();
  const int cap = s.permutation_group().order();
  // g[x][y] = Omega_k(x, ..., x, y) with k-1 copies of x.
  std::vector<Point> g(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (Point x = 0; x < n; ++x)
    for (Point y = 0; y < n; ++y) g[static_cast<std::size_t>(x * n + y)] = y;
  std::vector<Point> next(g.size());
  for (int d = 1; d <= cap; ++d) {
    bool identity = true;
    for (Point x = 0; x < n; ++x) {
      const Point head = g[static_cast<std::size_t>(x * n + x)];
      for (Point y = 0; y < n; ++y) {
        const Point v = s.dot(head, g[static_cast<std::size_t>(x * n + y)]);
        next[static_cast<std::size_t>(x * n + y)] = v;
        identity = identity && (v == y);
      }
    }
    g.swap(next);
    if (identity) return d;
  }
  throw ConsistencyError("Dehornoy class not reached within the permutation group order");
}

namespace {

struct CanonSearch {
  const Solution& s;
  int n;
  std::vector<Point> label_to_point;  // g
  std::vector<Point> point_to_label;  // f
  std::vector<Point> best;            // full table, row-major
  std::vector<Point> best_labeling;   // f of best
  int labeled = 0;

  void set(Point point, int label) {
    label_to_point[static_cast<std::size_t>(label)] = point;
    point_to_label[static_cast<std::size_t>(point)] = label;
  }
  void unset(Point point, int label) {
    label_to_point[static_cast<std::size_t>(label)] = -1;
    point_to_label[static_cast<std::size_t>(point)] = -1;
  }

  // True when the partially labeled table can no longer beat `best`. Only the
  // determined prefix of row 1 can be compared before labeling completes.
  bool dominated() const {
    if (best.empty() || labeled < 2) return false;
    const Point g1 = label_to_point[1];
    for (int j = 0; j < labeled; ++j) {
      const Point pt = s.sigma(g1, label_to_point[static_cast<std::size_t>(j)]);
      const int v = point_to_label[static_cast<std::size_t>(pt)];
      const Point b = best[static_cast<std::size_t>(n + j)];
      if (v < 0) return b < labeled;
      if (v != b) return v > b;
    }
    return false;
  }

  void finish() {
    // Row 0 is equal for every candidate by construction; compare rows 1..n-1.
    bool better = best.empty();
    std::size_t pos = 0;
    if (!better) {
      for (Point i = 1; i < n && !better; ++i)
        for (Point j = 0; j < n; ++j) {
          pos = static_cast<std::size_t>(i * n + j);
          const Point v =
              point_to_label[static_cast<std::size_t>(s.sigma(label_to_point[static_cast<std::size_t>(i)],
                                                              label_to_point[static_cast<std::size_t>(j)]))];
          if (v < best[pos]) {
            better = true;
            break;
          }
          if (v > best[pos]) return;
        }
      if (!better) return;  // equal table
    }
    best.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    for (Point i = 0; i < n; ++i)
      for (Point j = 0; j < n; ++j)
        best[static_cast<std::size_t>(i * n + j)] =
            point_to_label[static_cast<std::size_t>(s.sigma(label_to_point[static_cast<std::size_t>(i)],
                                                            label_to_point[static_cast<std::size_t>(j)]))];
    best_labeling = point_to_label;
  }

  // Labels the remaining cycles of sigma_{x0}: shorter cycles first, any
  // order among equal lengths, any starting point.
  void place(const std::vector<std::vector<Point>>& cycles, std::vector<char>& used) {
    if (labeled == n) {
      finish();
      return;
    }
    if (dominated()) return;
    std::size_t shortest = 0;
    bool found = false;
    for (std::size_t c = 0; c < cycles.size(); ++c)
      if (!used[c] && (!found || cycles[c].size() < cycles[shortest].size())) {
        shortest = c;
        found = true;
      }
    const std::size_t len = cycles[shortest].size();
    for (std::size_t c = 0; c < cycles.size(); ++c) {
      if (used[c] || cycles[c].size() != len) continue;
      used[c] = 1;
      for (std::size_t start = 0; start < len; ++start) {
        const int base = labeled;
        for (std::size_t k = 0; k < len; ++k) set(cycles[c][(start + k) % len], base + static_cast<int>(k));
        labeled += static_cast<int>(len);
        place(cycles, used);
        labeled -= static_cast<int>(len);
        for (std::size_t k = 0; k < len; ++k) unset(cycles[c][(start + k) % len], base + static_cast<int>(k));
      }
      used[c] = 0;
    }
  }
};

// Row 0 of the best relabeling with sigma_{x0} as row 0: the cycle of x0 first,
// then the other cycles by increasing length.
std::vector<int> row0_pattern(const Permutation& p, Point x0) {
  std::vector<int> lengths = p.cycle_type();
  const int l0 = p.cycle_length(x0);
  lengths.erase(std::find(lengths.begin(), lengths.end(), l0));
  std::vector<int> row;
  auto emit = [&](int len) {
    const int base = static_cast<int>(row.size());
    for (int k = 1; k < len; ++k) row.push_back(base + k);
    row.push_back(base);
  };
  emit(l0);
  for (int len : lengths) emit(len);
  return row;
}

}  // namespace

CanonicalForm canonical_form(const Solution& s) {
  const int n = s.size();
  std::vector<std::vector<int>> patterns;
  for (Point x = 0; x < n; ++x) patterns.push_back(row0_pattern(s.sigma_perm(x), x));
  const auto min_pattern = *std::min_element(patterns.begin(), patterns.end());

  CanonSearch search{s, n, std::vector<Point>(static_cast<std::size_t>(n), -1),
                     std::vector<Point>(static_cast<std::size_t>(n), -1), {}, {}, 0};
  for (Point x0 = 0; x0 < n; ++x0) {
    if (patterns[static_cast<std::size_t>(x0)] != min_pattern) continue;
    const Permutation p = s.sigma_perm(x0);
    std::vector<std::vector<Point>> cycles;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    int label = 0;
    for (Point y = x0; !seen[static_cast<std::size_t>(y)]; y = p(y)) {
      seen[static_cast<std::size_t>(y)] = 1;
      search.set(y, label++);
    }
    for (Point y = 0; y < n; ++y) {
      if (seen[static_cast<std::size_t>(y)]) continue;
      std::vector<Point> c;
      for (Point z = y; !seen[static_cast<std::size_t>(z)]; z = p(z)) {
        seen[static_cast<std::size_t>(z)] = 1;
        c.push_back(z);
      }
      cycles.push_back(std::move(c));
    }
    search.labeled = label;
    std::vector<char> used(cycles.size(), 0);
    search.place(cycles, used);
    for (Point y = 0; y < n; ++y) {
      const int l = search.point_to_label[static_cast<std::size_t>(y)];
      if (l >= 0) search.unset(y, l);
    }
    search.labeled = 0;
  }

  std::vector<std::vector<Point>> rows(static_cast<std::size_t>(n));
  for (Point i = 0; i < n; ++i)
    rows[static_cast<std::size_t>(i)].assign(search.best.begin() + i * n, search.best.begin() + (i + 1) * n);
  return CanonicalForm{Solution(rows), Permutation(search.best_labeling)};
}

}  // namespace ybe
