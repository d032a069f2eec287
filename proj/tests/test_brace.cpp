#include <doctest.h>

#include "oracles.hpp"
#include "ybe/brace.hpp"
#include "ybe/errors.hpp"
#include "ybe/fixtures.hpp"

using namespace ybe;

namespace {

std::vector<Brace> braces_up_to(int m) {
  std::vector<Brace> out;
  for (int k = 1; k <= m; ++k)
    for (auto& b : enumerate_braces(k)) out.push_back(std::move(b));
  return out;
}

}  // namespace

TEST_SUITE("brace") {
  TEST_CASE("validate_brace") {
    const std::vector<int> z4{4};
    CHECK(validate_brace(trivial_brace(z4)).ok);
    CHECK(validate_brace(cyclic_brace(3, 2, 1)).ok);
    // a o b = a + b + ab on Z/4: 1 o b = 1 + 2b never hits 0
    std::vector<int> add(16), mul(16);
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) {
        add[a * 4 + b] = (a + b) % 4;
        mul[a * 4 + b] = (a + b + a * b) % 4;
      }
    const BraceReport r = validate_brace(Brace(4, add, mul));
    CHECK_FALSE(r.ok);
    CHECK_FALSE(r.failure.empty());
    CHECK_THROWS_AS(Brace(2, {0, 1, 1}, {0, 1, 1, 0}), FormatError);
  }

  TEST_CASE("C(3,2,1)") {
    const Brace b = cyclic_brace(3, 2, 1);
    std::vector<int> powers;
    int x = 1;
    for (int k = 0; k < 9; ++k) {
      powers.push_back(x);
      x = b.mul(x, 1);
    }
    CHECK(powers == std::vector<int>{1, 5, 3, 4, 8, 6, 7, 2, 0});
    CHECK(multiplicative_order(b, 1) == 9);
    CHECK(socle(b) == std::vector<int>{0, 3, 6});
    CHECK(additive_exponent(b) == 9);
    // oracle: lambda_a(b) = b (1 + 3a) mod 9
    const auto lt = lambda_table(b);
    for (int a = 0; a < 9; ++a)
      for (int c = 0; c < 9; ++c) CHECK(lt[a][c] == c * (1 + 3 * a) % 9);
    const Brace q = quotient_by_socle(b);
    CHECK(q.order() == 3);
    CHECK(brace_isomorphic(q, enumerate_braces(3).front()));
  }

  TEST_CASE("C(p,n,n) is trivial and trivial braces have trivial lambda") {
    const std::vector<int> z8{8}, k4{2, 2};
    CHECK(cyclic_brace(2, 3, 3) == trivial_brace(z8));
    const Brace k = trivial_brace(k4);
    for (int a = 0; a < 4; ++a)
      for (int c = 0; c < 4; ++c) CHECK(k.lambda(a, c) == c);
    CHECK(socle(k).size() == 4);
    CHECK(quotient_by_socle(k).order() == 1);
    CHECK_THROWS_AS(cyclic_brace(4, 2, 1), InvalidArgument);
    CHECK_THROWS_AS(cyclic_brace(3, 2, 3), InvalidArgument);
  }

  TEST_CASE("C(2,2,1)") {
    const Brace b = cyclic_brace(2, 2, 1);
    CHECK(additive_exponent(b) == 4);
    for (int a = 0; a < 4; ++a) CHECK(multiplicative_order(b, a) <= 2);
    CHECK(describe(b.multiplicative_group()) == "C2xC2");
  }

  TEST_CASE("semidirect and direct products") {
    const Brace s6 = brace_from_spec("sd:triv3,triv2,inv");
    CHECK(validate_brace(s6).ok);
    CHECK(is_dihedral(s6.multiplicative_group()));

    const Brace s21 = brace_from_spec("sd:triv7,triv3,pow:2");
    CHECK(validate_brace(s21).ok);
    CHECK(minimal_non_cyclic_type(s21.multiplicative_group()) == MinimalNonCyclic{'c', 7, 3, 1});

    const std::vector<int> z2{2}, z3{3}, z6{6};
    const Brace d = direct_product(trivial_brace(z2), trivial_brace(z3));
    CHECK(validate_brace(d).ok);
    CHECK(brace_isomorphic(d, trivial_brace(z6)));
    CHECK(semidirect_product(trivial_brace(z2), trivial_brace(z3),
                             action_from_spec(trivial_brace(z2), trivial_brace(z3), "triv")) == d);
    CHECK_THROWS_AS(brace_from_spec("sd:triv7,triv3,pow:3"), InvalidArgument);
    CHECK_THROWS_AS(brace_from_spec("sd:triv7,triv3,frob"), FormatError);
  }

  TEST_CASE("automorphisms") {
    for (int p : {2, 3, 5, 7}) {
      const std::vector<int> zp{p};
      CHECK(automorphisms(trivial_brace(zp)).size() == static_cast<std::size_t>(p - 1));
    }
    const Brace c = cyclic_brace(3, 2, 1);
    auto a1 = automorphisms(c), a2 = automorphisms_by_additive_filter(c);
    std::sort(a1.begin(), a1.end());
    std::sort(a2.begin(), a2.end());
    CHECK(a1 == a2);
    // x -> ux preserves o iff 3u = 3u^2 mod 9, i.e. u = 1 mod 3
    CHECK(a1.size() == 3);

    // psi(x, y) = (beta x, y) on Z/3 x| Z/2 with beta = -1
    const Brace s6 = brace_from_spec("sd:triv3,triv2,inv");
    std::vector<int> psi(6);
    for (int x = 0; x < 3; ++x)
      for (int y = 0; y < 2; ++y) psi[x * 2 + y] = ((3 - x) % 3) * 2 + y;
    const auto autos = automorphisms(s6);
    CHECK(std::find(autos.begin(), autos.end(), psi) != autos.end());
  }

  TEST_CASE("left ideals") {
    for (const Brace& b : braces_up_to(12)) {
      // Sylow subgroups of (B, +): elements whose additive order is a p-power
      for (const auto& [p, e] : factorize(b.order())) {
        std::vector<int> sylow;
        for (int x = 0; x < b.order(); ++x) {
          int o = additive_order(b, x);
          while (o % p == 0) o /= p;
          if (o == 1) sylow.push_back(x);
        }
        CHECK(is_left_ideal(b, sylow));
      }
      const auto soc = socle(b);
      CHECK(is_ideal(b, soc));
      CHECK(validate_brace(quotient_by_socle(b)).ok);
    }
  }

  TEST_CASE("enumeration counts") {
    const std::vector<std::size_t> expected{1, 1, 1, 4, 1, 2, 1, 27, 4, 2, 1, 10};
    for (int m = 1; m <= 12; ++m) CHECK(enumerate_braces(m).size() == expected[static_cast<std::size_t>(m - 1)]);
    CHECK_THROWS_AS(enumerate_braces(17), BoundError);
  }

  TEST_CASE("holomorph enumeration matches the brute-force table search up to order 6") {
    for (int m = 1; m <= 6; ++m) {
      const auto fast = enumerate_braces(m);
      const auto slow = oracle::brute_braces(m);
      CHECK(fast.size() == slow.size());
      for (const Brace& s : slow) {
        int matches = 0;
        for (const Brace& f : fast) matches += oracle::brute_brace_isomorphic(f, s);
        CHECK(matches == 1);
      }
    }
  }

  TEST_CASE("braces with a prescribed multiplicative group") {
    CHECK(enumerate_braces_with_multiplicative_group(quaternion_group()).size() == 3);
    int q8 = 0;
    for (const Brace& b : enumerate_braces(8)) q8 += is_isomorphic(b.multiplicative_group(), quaternion_group());
    CHECK(q8 == 3);
    for (int order : {6, 10, 12}) {
      int dihedral = 0;
      for (const Brace& b : enumerate_braces(order)) dihedral += is_dihedral(b.multiplicative_group());
      CHECK(enumerate_braces_with_multiplicative_group(dihedral_group(order)).size() ==
            static_cast<std::size_t>(dihedral));
    }
  }

  TEST_CASE("canonical braces separate isomorphism classes") {
    const auto all = braces_up_to(8);
    for (std::size_t i = 0; i < all.size(); ++i) {
      std::vector<int> f(static_cast<std::size_t>(all[i].order()));
      std::iota(f.begin(), f.end(), 0);
      if (f.size() > 2) std::reverse(f.begin() + 1, f.end());
      CHECK(canonical_brace(relabel_brace(all[i], f)) == canonical_brace(all[i]));
      for (std::size_t j = i + 1; j < all.size(); ++j)
        if (all[i].order() == all[j].order()) CHECK_FALSE(canonical_brace(all[i]) == canonical_brace(all[j]));
    }
  }

  TEST_CASE("brace identities on every brace up to order 12") {
    for (const Brace& b : braces_up_to(12)) {
      const int m = b.order();
      CHECK(validate_brace(b).ok);
      int max_order = 1;
      for (int a = 0; a < m; ++a) {
        max_order = std::max(max_order, additive_order(b, a));
        CHECK(b.lambda(a, 0) == 0);
        for (int c = 0; c < m; ++c) {
          CHECK(b.mul(a, c) == b.add(a, b.lambda(a, c)));
          CHECK(b.add(a, c) == b.mul(a, b.lambda(b.inv(a), c)));
          for (int d = 0; d < m; ++d) CHECK(b.lambda(b.mul(a, c), d) == b.lambda(a, b.lambda(c, d)));
        }
      }
      CHECK(additive_exponent(b) == max_order);
      const auto soc = socle(b);
      CHECK(is_normal(b.multiplicative_group(), soc));
      for (int s : soc)
        for (int c = 0; c < m; ++c) CHECK(b.add(s, c) == b.mul(s, c));
    }
  }
}
