#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "cyctope/errors.hpp"
#include "cyctope/paracycle.hpp"
#include "oracles.hpp"

using namespace cyctope;

namespace {
Rat rat(long long p, long long q) { return Rat(p, q); }
}  // namespace

TEST_CASE("paracycle embedding validation") {
  CHECK_THROWS_AS(ParaEmbedding::make(2, 2, {rat(0, 1)}), InputError);
  CHECK_THROWS_AS(ParaEmbedding::make(2, 2, {rat(1, 2), rat(0, 1)}), InputError);
  CHECK_THROWS_AS(ParaEmbedding::make(2, 2, {rat(0, 1), rat(1, 3)}), InputError);   // off-lattice
  CHECK_THROWS_AS(ParaEmbedding::make(2, 2, {rat(0, 1), rat(3, 2)}), InputError);   // window
  CHECK_THROWS_AS(ParaEmbedding::make(0, 2, {}), InputError);

  auto f = ParaEmbedding::make(2, 4, {rat(0, 1), rat(1, 4)});
  CHECK(f.eval(rat(0, 1)) == rat(0, 1));
  CHECK(f.eval(rat(1, 2)) == rat(1, 4));
  CHECK(f.eval(rat(3, 2)) == rat(5, 4));
  CHECK(f.eval(rat(-1, 2)) == rat(-3, 4));
  CHECK_THROWS_AS(f.eval(rat(1, 3)), InputError);
}

TEST_CASE("shift action") {
  auto f = ParaEmbedding::make(2, 2, {rat(0, 1), rat(1, 2)});
  CHECK(shift_action(f, 1).images() == std::vector<Rat>{rat(1, 1), rat(3, 2)});
  CHECK(shift_action(f, 0) == f);

  auto g = ParaEmbedding::make(1, 3, {rat(1, 3)});
  CHECK(shift_action(g, -1).images() == std::vector<Rat>{rat(-2, 3)});

  // group action laws and freeness
  for (long long j : {-2ll, 0ll, 3ll})
    for (long long k : {-1ll, 2ll})
      CHECK(shift_action(shift_action(f, j), k) == shift_action(f, j + k));
  for (const auto& orbit : enumerate_canonical(2, 4))
    for (long long k = -5; k <= 5; ++k) {
      if (k == 0) continue;
      CHECK_FALSE(shift_action(orbit.canonical, k) == orbit.canonical);
    }
}

TEST_CASE("canonical orbit enumeration") {
  auto one_two = enumerate_canonical(1, 2);
  REQUIRE(one_two.size() == 2);
  CHECK(one_two[0].canonical.images() == std::vector<Rat>{rat(0, 1)});
  CHECK(one_two[1].canonical.images() == std::vector<Rat>{rat(1, 2)});

  auto two_two = enumerate_canonical(2, 2);
  REQUIRE(two_two.size() == 2);
  CHECK(two_two[0].canonical.images() == std::vector<Rat>{rat(0, 1), rat(1, 2)});
  CHECK(two_two[1].canonical.images() == std::vector<Rat>{rat(1, 2), rat(1, 1)});

  CHECK(enumerate_canonical(2, 4).size() == 12);
  CHECK(enumerate_canonical(3, 2).empty());

  for (const auto& orbit : enumerate_canonical(3, 5)) {
    CHECK(rat(0, 1) <= orbit.canonical.images().front());
    CHECK(orbit.canonical.images().front() < rat(1, 1));
  }
}

TEST_CASE("orbit normalization") {
  auto f = ParaEmbedding::make(2, 2, {rat(5, 2), rat(3, 1)});
  CHECK(orbit_of(f).canonical.images() == std::vector<Rat>{rat(1, 2), rat(1, 1)});
  auto g = ParaEmbedding::make(1, 1, {rat(-3, 1)});
  CHECK(orbit_of(g).canonical.images() == std::vector<Rat>{rat(0, 1)});
}

TEST_CASE("projection to cyclic orders") {
  auto ident = project_to_cyclic(ParaEmbedding::make(2, 2, {rat(0, 1), rat(1, 2)}));
  CHECK(ident.index_map() == std::vector<int>{0, 1});

  auto swap = project_to_cyclic(ParaEmbedding::make(2, 2, {rat(1, 2), rat(1, 1)}));
  CHECK(swap.index_map() == std::vector<int>{1, 0});

  auto incl = project_to_cyclic(ParaEmbedding::make(3, 4, {rat(0, 1), rat(1, 4), rat(1, 2)}));
  CHECK(incl.index_map() == std::vector<int>{0, 1, 2});

  // constant on orbits
  auto f = ParaEmbedding::make(2, 4, {rat(3, 4), rat(5, 4)});
  for (long long k : {-3ll, 0ll, 7ll})
    CHECK(project_to_cyclic(shift_action(f, k)) == project_to_cyclic(f));
}

TEST_CASE("projection is functorial") {
  for (int a = 1; a <= 4; ++a)
    for (int b = a; b <= 4; ++b)
      for (int c = b; c <= 4; ++c)
        for (const auto& og : enumerate_canonical(a, b))
          for (const auto& of : enumerate_canonical(b, c)) {
            const auto g = shift_action(og.canonical, 1);  // include non-canonical reps
            const auto& f = of.canonical;
            CHECK(project_to_cyclic(compose_para(f, g)) ==
                  compose(project_to_cyclic(f), project_to_cyclic(g)));
          }
  CHECK(project_to_cyclic(identity_para(3)) == identity_embedding(standard_cycle(3)));
  CHECK_THROWS_AS(compose_para(identity_para(3), identity_para(2)), InputError);
}

TEST_CASE("hom-set quotient bijection") {
  auto r22 = verify_horb(2, 2);
  CHECK(r22.pass);
  CHECK(r22.orbit_count == 2);
  CHECK(r22.matches.size() == 2);

  auto r13 = verify_horb(1, 3);
  CHECK(r13.pass);
  CHECK(r13.orbit_count == 3);

  for (int m = 1; m <= 6; ++m)
    for (int n = m; n <= 6; ++n) {
      CAPTURE(m);
      CAPTURE(n);
      auto r = verify_horb(m, n);
      CHECK(r.pass);
      CHECK(r.orbit_count == static_cast<std::size_t>(m) * oracles::binomial(n, m));
    }
}

TEST_CASE("slice poset construction") {
  auto s = slice_poset(2, rat(0, 1), rat(1, 1), 2);
  REQUIRE(s.objects.size() == 3);
  auto top = s.poset.maximum();
  REQUIRE(top.has_value());
  CHECK(s.objects[static_cast<std::size_t>(*top)].images() ==
        std::vector<Rat>{rat(0, 1), rat(1, 2)});

  CHECK(slice_poset(1, rat(0, 1), rat(1, 1), 1).objects.size() == 1);

  auto wide = slice_poset(2, rat(0, 1), rat(2, 1), 4);
  CHECK(wide.objects.size() == 7);  // 4 singletons + 3 adjacent pairs
  CHECK(wide.poset.is_partial_order());
  CHECK_FALSE(wide.poset.maximum().has_value());

  CHECK_THROWS_AS(slice_poset(2, rat(1, 1), rat(1, 1), 2), InputError);
  CHECK_THROWS_AS(slice_poset(2, rat(1, 1), rat(0, 1), 2), InputError);
  CHECK_THROWS_AS(slice_poset(2, rat(0, 1), rat(1, 3), 2), InputError);
  CHECK_THROWS_AS(slice_poset(2, rat(0, 1), rat(1, 1), 0), InputError);
}

TEST_CASE("slice posets are posets") {
  for (int n = 1; n <= 3; ++n)
    for (int k_max = 1; k_max <= 4; ++k_max)
      for (int num = 0; num < n; ++num)
        for (int len = 1; len <= 2 * n; ++len) {
          const Rat lo(num, n);
          const Rat hi = lo + Rat(len, n);
          CAPTURE(n);
          CAPTURE(k_max);
          std::string witness;
          auto s = slice_poset(n, lo, hi, k_max);
          CHECK_MESSAGE(s.poset.is_partial_order(&witness), witness);
        }
}

TEST_CASE("base case has a top object") {
  for (int n = 1; n <= 4; ++n)
    for (int num = 0; num < n; ++num)
      for (int len = 1; len <= n; ++len) {
        const Rat lo(num, n);
        const Rat hi = lo + Rat(len, n);  // window of length <= 1
        auto s = slice_poset(n, lo, hi, len);
        CAPTURE(n);
        CAPTURE(num);
        CAPTURE(len);
        auto top = s.poset.maximum();
        REQUIRE(top.has_value());
        // the top is the full window inclusion
        CHECK(s.objects[static_cast<std::size_t>(*top)].source_order() == len);
      }
}

TEST_CASE("pushout/pullback square decomposition") {
  CHECK(verify_square(1, rat(0, 1), rat(2, 1), 2).pass);
  CHECK(verify_square(2, rat(0, 1), rat(5, 2), 3).pass);
  CHECK(verify_square(2, rat(0, 1), rat(2, 1), 4).pass);
  CHECK(verify_square(2, rat(0, 1), rat(3, 2), 2).pass);
  CHECK_THROWS_AS(verify_square(2, rat(0, 1), rat(1, 1), 2), InputError);
  CHECK_THROWS_AS(verify_square(2, rat(0, 1), rat(1, 4), 2), InputError);
}
