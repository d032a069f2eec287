#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "ybe/errors.hpp"
#include "ybe/perm.hpp"

using namespace ybe;

namespace {

Permutation random_perm(int n, std::mt19937& rng) {
  std::vector<Point> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation(img);
}

// <a, b | a^7 = b^3 = 1, b^-1 a b = a^2> acting on itself (21 points).
PermGroup group_21() {
  // element a^i b^j at index 3i + j; left multiplication by a and by b
  auto idx = [](int i, int j) { return 3 * (((i % 7) + 7) % 7) + j % 3; };
  std::vector<Point> la(21), lb(21);
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 3; ++j) {
      la[static_cast<std::size_t>(idx(i, j))] = idx(i + 1, j);
      // b^-1 a b = a^2 gives b a^i = a^(4i) b
      lb[static_cast<std::size_t>(idx(i, j))] = idx(4 * i, j + 1);
    }
  const std::vector<Permutation> gens{Permutation(la), Permutation(lb)};
  return PermGroup::closure(gens);
}

}  // namespace

TEST_SUITE("perm") {
  TEST_CASE("compose follows (p q)(i) = p(q(i))") {
    const auto t = Permutation::from_cycles(2, "(1 2)");
    CHECK((t * t).is_identity());
    const auto p = Permutation::from_cycles(3, "(1 2 3)");
    CHECK(p * Permutation::identity(3) == p);
    CHECK_THROWS_AS(compose(p, t), InvalidArgument);
  }

  TEST_CASE("sigma_2 sigma_1 of the four-point example matches cycle arithmetic") {
    const auto s1 = Permutation::from_cycles(4, "(3 4)");
    const auto s2 = Permutation::from_cycles(4, "(1 3 2 4)");
    const std::vector<Point> expected{2, 3, 0, 1};  // frozen: 1->3, 2->4, 3->1, 4->2
    const auto prod = s2 * s1;
    CHECK(std::vector<Point>(prod.image().begin(), prod.image().end()) == expected);
    CHECK(oracle::cycle_product(4, "(1 3 2 4)", "(3 4)") == expected);
  }

  TEST_CASE("cycle notation round trip") {
    const auto p = Permutation::from_cycles(6, "(1 3 2 4)(5,6)");
    CHECK(p.to_cycles() == "(1 3 2 4)(5 6)");
    CHECK(Permutation::from_cycles(6, p.to_cycles()) == p);
    CHECK(p.cycle_type() == std::vector<int>{2, 4});
    CHECK(p.order() == 4);
    CHECK_THROWS_AS(Permutation(std::vector<Point>{0, 0}), FormatError);
  }

  TEST_CASE("closure orders") {
    const std::vector<Permutation> c3{Permutation::from_cycles(3, "(1 2 3)")};
    CHECK(PermGroup::closure(c3).order() == 3);
    const std::vector<Permutation> four{Permutation::from_cycles(4, "(3 4)"), Permutation::from_cycles(4, "(1 3 2 4)"),
                                        Permutation::from_cycles(4, "(1 4 2 3)"), Permutation::from_cycles(4, "(1 2)")};
    const PermGroup g = PermGroup::closure(four);
    CHECK(g.order() == 8);
    CHECK(g.is_transitive());
    CHECK_FALSE(g.is_regular());
    CHECK(is_dihedral(g.table()));
    CHECK(is_isomorphic(g.table(), dihedral_group(8)));
    for (int i = 0; i < g.order(); ++i) {
      Permutation w = Permutation::identity(4);
      for (int k : g.word(i)) w = w * g.generators()[static_cast<std::size_t>(k)];
      CHECK(w == g.element(i));
    }
  }

  TEST_CASE("orbits and regularity") {
    const std::vector<Permutation> id{Permutation::identity(3)};
    const PermGroup t = PermGroup::closure(id);
    CHECK(t.orbits() == std::vector<std::vector<Point>>{{0}, {1}, {2}});
    CHECK_FALSE(t.is_transitive());
    const std::vector<Permutation> c5{Permutation::from_cycles(5, "(1 2 3 4 5)")};
    CHECK(PermGroup::closure(c5).is_regular());
  }

  TEST_CASE("subgroups, cores, stabilizers") {
    CHECK(subgroups(cyclic_group(6)).size() == 4);
    const Group d6 = dihedral_group(6);
    for (const auto& h : subgroups(d6))
      if (h.size() == 2) CHECK(core(d6, h).size() == 1);
    const Group q = quaternion_group();
    for (const auto& h : subgroups(q)) CHECK(core(q, h) == h);
    CHECK(is_dedekind(q));
    CHECK_THROWS_AS(subgroups(cyclic_group(128)), BoundError);

    const std::vector<Permutation> s3{Permutation::from_cycles(3, "(1 2)"), Permutation::from_cycles(3, "(1 2 3)")};
    const PermGroup g = PermGroup::closure(s3);
    CHECK(g.stabilizer(2).size() == 2);
  }

  TEST_CASE("Klein four is not cyclic of order 4") {
    CHECK_FALSE(is_isomorphic(direct_product(cyclic_group(2), cyclic_group(2)), cyclic_group(4)));
  }

  TEST_CASE("group of order 21 is minimal non-cyclic of type c (7, 3, 1)") {
    const PermGroup g = group_21();
    REQUIRE(g.order() == 21);
    CHECK(g.is_regular());
    // oracle: every proper subgroup cyclic, by exhaustive enumeration
    for (const auto& h : subgroups(g.table())) {
      if (static_cast<int>(h.size()) == g.order()) continue;
      bool cyclic = false;
      for (int x : h) cyclic = cyclic || static_cast<std::size_t>(g.table().element_order(x)) == h.size();
      CHECK(cyclic);
    }
    const auto t = minimal_non_cyclic_type(g.table());
    REQUIRE(t.has_value());
    CHECK(*t == MinimalNonCyclic{'c', 7, 3, 1});
    CHECK_FALSE(minimal_non_cyclic_type(cyclic_group(12)).has_value());
    CHECK(minimal_non_cyclic_type(quaternion_group())->type == 'b');
    CHECK(minimal_non_cyclic_type(direct_product(cyclic_group(3), cyclic_group(3)))->type == 'a');
  }

  TEST_CASE("cosets partition the group") {
    const Group d8 = dihedral_group(8);
    for (const auto& h : subgroups(d8)) {
      const CosetSpace cs = left_cosets(d8, h);
      CHECK(cs.representatives.front() == 0);
      std::size_t total = 0;
      for (const auto& c : cs.cosets) {
        CHECK(c.size() == h.size());
        total += c.size();
      }
      CHECK(total == 8);
    }
  }

  TEST_CASE("properties on random permutations and groups") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
      const int n = 1 + trial % 7;
      const auto p = random_perm(n, rng), q = random_perm(n, rng), r = random_perm(n, rng);
      CHECK((p * q) * r == p * (q * r));
      CHECK((p * p.inverse()).is_identity());
    }
    for (int trial = 0; trial < 40; ++trial) {
      const int n = 2 + trial % 3;
      std::vector<Permutation> gens{random_perm(n, rng)};
      if (trial % 2) gens.push_back(random_perm(n, rng));
      const PermGroup g = PermGroup::closure(gens);
      long long fact = 1;
      for (int k = 2; k <= n; ++k) fact *= k;
      CHECK(fact % g.order() == 0);
      CHECK(PermGroup::closure(g.elements()).order() == g.order());
      CHECK(g.is_regular() == (g.is_transitive() && g.order() == n));
      for (const auto& h : subgroups(g.table())) {
        CHECK(g.order() % static_cast<int>(h.size()) == 0);
        CHECK(generated_subgroup(g.table(), h) == h);
        const Subgroup c = core(g.table(), h);
        CHECK(is_normal(g.table(), c));
        CHECK(std::includes(h.begin(), h.end(), c.begin(), c.end()));
        CHECK(core(g.table(), c) == c);
      }
    }
  }
}
