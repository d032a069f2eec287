#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "ybe/census.hpp"
#include "ybe/errors.hpp"
#include "ybe/fixtures.hpp"
#include "ybe/solution.hpp"

using namespace ybe;

namespace {

Permutation random_perm(int n, std::mt19937& rng) {
  std::vector<Point> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation(img);
}

std::vector<Solution> small_corpus(int max_n) {
  std::vector<Solution> out;
  CensusOptions o;
  o.with_classes = false;
  for (int n = 1; n <= max_n; ++n)
    for (auto& s : solution_forms(n, o)) out.push_back(std::move(s));
  return out;
}

}  // namespace

TEST_SUITE("solution") {
  TEST_CASE("four-point example validates with tau_y(x) = sigma^-1_{sigma_x(y)}(x)") {
    const Solution s = size4_d8_example();
    const ValidationReport v = validate(s);
    CHECK(v.nondegenerate);
    CHECK(v.involutive);
    CHECK(v.braid);
    CHECK(oracle::is_solution(s.table()));
  }

  TEST_CASE("the tau variant sigma^-1_{sigma_x(y)}(y) breaks the fixtures") {
    // r'(x, y) = (sigma_x(y), sigma^-1_{sigma_x(y)}(y)); check r'^2 = id directly
    for (const Solution& s : {size4_d8_example(), size8_example()}) {
      bool involutive = true;
      for (int x = 0; x < s.size(); ++x)
        for (int y = 0; y < s.size(); ++y) {
          const int u = s.sigma(x, y), v = s.sigma_inv(u, y);
          const int u2 = s.sigma(u, v), v2 = s.sigma_inv(u2, v);
          involutive = involutive && u2 == x && v2 == y;
        }
      CHECK_FALSE(involutive);
    }
  }

  TEST_CASE("trivial solution and a broken table") {
    CHECK(validate(trivial_solution(3)).ok());
    // sigma_1 = (1 2), sigma_2 = id on two points
    const Solution bad(std::vector<std::vector<Point>>{{1, 0}, {0, 1}});
    const ValidationReport v = validate(bad);
    CHECK_FALSE(v.ok());
    CHECK(v.witness.has_value());
    CHECK_FALSE(v.failure.empty());
    CHECK_THROWS_AS(Solution(std::vector<std::vector<Point>>{{0, 2}, {0, 1}}), FormatError);
    CHECK_THROWS_AS(Solution(std::vector<std::vector<Point>>{{0, 1}, {0}}), FormatError);
  }

  TEST_CASE("validate agrees with the direct relation check on every 2x2 and 3x3 table") {
    for (int n = 2; n <= 3; ++n) {
      int total = 0, valid = 0;
      std::vector<int> cells(static_cast<std::size_t>(n * n), 0);
      while (true) {
        std::vector<std::vector<Point>> rows(static_cast<std::size_t>(n));
        for (int x = 0; x < n; ++x) rows[x].assign(cells.begin() + x * n, cells.begin() + (x + 1) * n);
        const Solution s(rows);
        const bool direct = oracle::is_solution(rows);
        CHECK(validate(s).ok() == direct);
        ++total;
        valid += direct;
        std::size_t k = 0;
        while (k < cells.size() && ++cells[k] == n) cells[k++] = 0;
        if (k == cells.size()) break;
      }
      CHECK(total == (n == 2 ? 16 : 19683));
      CHECK(valid == (n == 2 ? 2 : 12));  // frozen from the direct check
    }
  }

  TEST_CASE("permutation groups") {
    CHECK(size4_d8_example().permutation_group().order() == 8);
    CHECK(is_dihedral(size4_d8_example().permutation_group().table()));
    CHECK(trivial_solution(4).permutation_group().order() == 1);
    const Solution shift = shift_example(4);
    CHECK(is_cyclic(shift.permutation_group().table()));
    CHECK(shift.permutation_group().order() == 4);
  }

  TEST_CASE("indecomposable and uniconnected") {
    CHECK(is_indecomposable(size4_d8_example()));
    CHECK_FALSE(is_uniconnected(size4_d8_example()));
    CHECK(is_uniconnected(size8_example()));
    CHECK_FALSE(is_indecomposable(trivial_solution(2)));
  }

  TEST_CASE("retraction") {
    const Retraction t = retraction(trivial_solution(5));
    CHECK(t.solution.size() == 1);
    const Retraction r8 = retraction(size8_example());
    CHECK(r8.solution.size() == 4);
    CHECK(validate(r8.solution).ok());
    CHECK_FALSE(is_uniconnected(r8.solution));
    CHECK(retraction(size4_d8_example()).solution.size() == 4);
  }

  TEST_CASE("multipermutation level") {
    CHECK(multipermutation_level(trivial_solution(1)) == 0);
    CHECK(multipermutation_level(trivial_solution(3)) == 1);
    for (int k = 2; k <= 6; ++k) CHECK(multipermutation_level(shift_example(k)) == 1);
    CHECK_FALSE(multipermutation_level(size4_d8_example()).has_value());
  }

  TEST_CASE("isomorphism") {
    const Solution s = size4_d8_example();
    CHECK(isomorphic(s, s));
    const Permutation f = Permutation::from_cycles(4, "(1 4 2)");
    const Solution t = relabel(s, f);
    const auto w = find_isomorphism(s, t);
    REQUIRE(w.has_value());
    for (int x = 0; x < 4; ++x)
      for (int y = 0; y < 4; ++y) CHECK(t.sigma((*w)(x), (*w)(y)) == (*w)(s.sigma(x, y)));
    CHECK_FALSE(isomorphic(s, shift_example(4)));
    CHECK_THROWS_AS(find_isomorphism(trivial_solution(13), trivial_solution(13)), BoundError);
  }

  TEST_CASE("Dehornoy class by the direct recursion") {
    CHECK(dehornoy_class_direct(trivial_solution(3)) == 1);
    CHECK(dehornoy_class_direct(shift_example(4)) == 4);
    CHECK(dehornoy_class_direct(size4_d8_example()) == 2);
  }

  TEST_CASE("omega matches the definition on small arguments") {
    std::mt19937 rng(11);
    for (const Solution& s : {size4_d8_example(), size8_example(), shift_example(5)}) {
      for (int trial = 0; trial < 60; ++trial) {
        const int k = 1 + trial % 6;
        std::vector<Point> args(static_cast<std::size_t>(k));
        for (auto& a : args) a = static_cast<Point>(rng() % static_cast<unsigned>(s.size()));
        CHECK(omega(s, args) == oracle::naive_omega(s, args));
      }
      CHECK(dehornoy_class_direct(s) == oracle::naive_class(s, 10));
    }
  }

  TEST_CASE("corpus properties up to five points") {
    const auto corpus = small_corpus(5);
    std::mt19937 rng(3);
    for (const Solution& s : corpus) {
      for (int x = 0; x < s.size(); ++x)
        for (int y = 0; y < s.size(); ++y) {
          const int u = s.sigma(x, y), v = s.tau(y, x);
          CHECK(s.sigma(u, v) == x);
          CHECK(s.tau(v, u) == y);
        }
      const Retraction r = retraction(s);
      CHECK(validate(r.solution).ok());
      std::set<std::vector<Point>> rows;
      for (int x = 0; x < s.size(); ++x) rows.emplace(s.row(x).begin(), s.row(x).end());
      CHECK((r.solution.size() == s.size()) == (static_cast<int>(rows.size()) == s.size()));

      const Solution t = relabel(s, random_perm(s.size(), rng));
      CHECK(isomorphic(s, t));
      CHECK(t.permutation_group().order() == s.permutation_group().order());
      CHECK(is_indecomposable(t) == is_indecomposable(s));
      CHECK(is_uniconnected(t) == is_uniconnected(s));
      CHECK(multipermutation_level(t) == multipermutation_level(s));
      CHECK(dehornoy_class_direct(t) == dehornoy_class_direct(s));
    }
  }

  TEST_CASE("canonical form is the least table over all relabelings") {
    const auto corpus = small_corpus(5);
    std::mt19937 rng(5);
    for (const Solution& s : corpus) {
      const CanonicalForm c = canonical_form(s);
      CHECK(c.form.table() == oracle::brute_canonical(s.table()));
      CHECK(relabel(s, c.labeling) == c.form);
      CHECK(canonical_form(c.form).form == c.form);
      CHECK(canonical_form(relabel(s, random_perm(s.size(), rng))).form == c.form);
    }
  }
}
