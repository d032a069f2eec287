#include "ybe/permbrace.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "ybe/errors.hpp"

namespace ybe {

PermutationBrace permutation_brace(const Solution& s, std::optional<std::uint64_t> shuffle_seed, int bound) {
  const PermGroup& g = s.permutation_group();
  const int m = g.order();
  const int n = s.size();
  if (m > bound) throw BoundError("permutation brace", static_cast<std::size_t>(m), static_cast<std::size_t>(bound));
  const Group& table = g.table();

  std::vector<int> gen(static_cast<std::size_t>(n));
  for (Point x = 0; x < n; ++x) gen[static_cast<std::size_t>(x)] = g.generator_index(x);

  // a + sigma_y = a o sigma_{a^-1(y)}
  std::vector<Permutation> inverse;
  inverse.reserve(static_cast<std::size_t>(m));
  for (int a = 0; a < m; ++a) inverse.push_back(g.element(a).inverse());
  auto plus_generator = [&](int a, Point y) {
    return table.mul(a, gen[static_cast<std::size_t>(inverse[static_cast<std::size_t>(a)](y))]);
  };

  std::vector<std::vector<Point>> decomposition(static_cast<std::size_t>(m));
  std::vector<char> reached(static_cast<std::size_t>(m), 0);
  std::vector<int> queue{0};
  reached[0] = 1;
  std::vector<Point> points(static_cast<std::size_t>(n));
  std::iota(points.begin(), points.end(), 0);
  std::mt19937_64 rng(shuffle_seed.value_or(0));
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const int a = queue[i];
    if (shuffle_seed) std::shuffle(points.begin(), points.end(), rng);
    for (Point y : points) {
      const int c = plus_generator(a, y);
      if (reached[static_cast<std::size_t>(c)]) continue;
      reached[static_cast<std::size_t>(c)] = 1;
      decomposition[static_cast<std::size_t>(c)] = decomposition[static_cast<std::size_t>(a)];
      decomposition[static_cast<std::size_t>(c)].push_back(y);
      queue.push_back(c);
    }
  }
  if (static_cast<int>(queue.size()) != m)
    throw ConsistencyError("permutation brace: generators reach only " + std::to_string(queue.size()) + " of " +
                           std::to_string(m) + " elements additively");

  std::vector<int> add(static_cast<std::size_t>(m) * static_cast<std::size_t>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      int c = a;
      for (Point y : decomposition[static_cast<std::size_t>(b)]) c = plus_generator(c, y);
      add[static_cast<std::size_t>(a * m + b)] = c;
    }
  Brace brace(m, std::move(add), std::vector<int>(table.table().begin(), table.table().end()));

  const BraceReport rep = validate_brace(brace);
  if (!rep.ok) throw ConsistencyError("permutation brace: " + rep.failure);
  for (int h = 0; h < m; ++h)
    for (Point x = 0; x < n; ++x) {
      const int lhs = brace.lambda(h, gen[static_cast<std::size_t>(x)]);
      const int rhs = gen[static_cast<std::size_t>(g.element(h)(x))];
      if (lhs != rhs)
        throw ConsistencyError("permutation brace: lambda_g(sigma_x) != sigma_{g(x)} for g = " + std::to_string(h) +
                               ", x = " + std::to_string(x));
    }
  return PermutationBrace{g, std::move(brace), std::move(gen)};
}

int dehornoy_class_via_exponent(const Solution& s) { return additive_exponent(permutation_brace(s).brace); }

int dehornoy_class_via_lcm(const Solution& s) {
  const PermutationBrace pb = permutation_brace(s);
  int l = 1;
  for (int idx : pb.generator_map) l = std::lcm(l, additive_order(pb.brace, idx));
  return l;
}

bool omega_closed_form_check(const Brace& b, const ConstructedSolution& cs, int max_n) {
  const Solution& s = cs.solution;
  const int n = s.size();
  if (max_n <= 0) max_n = dehornoy_class_direct(s) + 1;
  const auto& reps = cs.datum.representatives;
  std::vector<Point> f(static_cast<std::size_t>(n)), next(f.size());
  for (Point p = 0; p < n; ++p) {
    const PointLabel& lp = cs.labels[static_cast<std::size_t>(p)];
    const int la = b.lambda(lp.rep, reps[static_cast<std::size_t>(lp.orbit)]);
    // f[y] = Omega_k(p, ..., p, y); k = 1 is the identity.
    std::iota(f.begin(), f.end(), 0);
    int multiple = 0;  // (k-1) lambda_x(a)
    for (int k = 1; k <= max_n; ++k) {
      if (k > 1) {
        const Point head = f[static_cast<std::size_t>(p)];
        for (Point y = 0; y < n; ++y) next[static_cast<std::size_t>(y)] = s.dot(head, f[static_cast<std::size_t>(y)]);
        f.swap(next);
        multiple = b.add(multiple, la);
      }
      const int left = b.inv(multiple);
      for (Point q = 0; q < n; ++q) {
        const PointLabel& lq = cs.labels[static_cast<std::size_t>(q)];
        const int elem = b.mul(left, lq.rep);
        const int closed = cs.coset_of[static_cast<std::size_t>(lq.orbit)][static_cast<std::size_t>(lq.family)]
                                      [static_cast<std::size_t>(elem)];
        if (closed != f[static_cast<std::size_t>(q)]) return false;
      }
    }
  }
  return true;
}

}  // namespace ybe
