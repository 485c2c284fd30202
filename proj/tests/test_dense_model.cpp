#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "cyctope/dense_model.hpp"
#include "cyctope/errors.hpp"
#include "oracles.hpp"

using namespace cyctope;

namespace {

QZPoint qz(long long p, long long q) { return QZPoint::make(Rat(p, q)); }

QZPoint random_qz(std::mt19937& rng) {
  std::uniform_int_distribution<long long> den(1, 60);
  const long long q = den(rng);
  std::uniform_int_distribution<long long> num(0, q - 1);
  return QZPoint::make(Rat(num(rng), q));
}

bool isomorphic(const CyclicOrder& a, const CyclicOrder& b) {
  return a.size() == b.size() && !enumerate_embeddings(a, b).empty();
}

// Definitional type comparison: positions carry the same equality pattern
// and the same induced relation.
bool same_type_brute(const CyclicOrder& m1, const std::vector<ElemId>& t1, const CyclicOrder& m2,
                     const std::vector<ElemId>& t2) {
  if (t1.size() != t2.size()) return false;
  const std::size_t k = t1.size();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if ((t1[i] == t1[j]) != (t2[i] == t2[j])) return false;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t l = 0; l < k; ++l) {
        const bool d1 = t1[i] != t1[j] && t1[j] != t1[l] && t1[i] != t1[l];
        if (!d1) continue;
        if (m1.rel(t1[i], t1[j], t1[l]) != m2.rel(t2[i], t2[j], t2[l])) return false;
      }
  return true;
}

}  // namespace

TEST_CASE("R on Q/Z examples") {
  CHECK(r_qz(qz(1, 10), qz(1, 2), qz(9, 10)));
  CHECK(r_qz(qz(1, 2), qz(9, 10), qz(1, 10)));
  CHECK_FALSE(r_qz(qz(1, 2), qz(1, 10), qz(9, 10)));
  CHECK_FALSE(r_qz(qz(0, 1), qz(0, 1), qz(1, 2)));
  CHECK_THROWS_AS(QZPoint::make(Rat(3, 2)), InputError);
  CHECK(QZPoint::wrap(Rat(3, 2)).value == Rat(1, 2));
  CHECK(QZPoint::wrap(Rat(-1, 4)).value == Rat(3, 4));
}

TEST_CASE("R on Q/Z satisfies the cyclic-order axioms on random samples") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 10000; ++trial) {
    const auto a = random_qz(rng), b = random_qz(rng), c = random_qz(rng), d = random_qz(rng);
    if (r_qz(a, b, c)) {
      CHECK_FALSE(r_qz(a, c, b));  // asymmetry
      CHECK(r_qz(b, c, a));        // cyclicity
      if (r_qz(a, c, d) && !(d == b)) CHECK(r_qz(a, b, d));  // transitivity
    }
    if (!(a == b) && !(b == c) && !(a == c)) CHECK((r_qz(a, b, c) || r_qz(c, b, a)));
  }
}

TEST_CASE("arc midpoints witness density of Q/Z") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto a = random_qz(rng), b = random_qz(rng);
    if (a == b) continue;
    const auto mid = QZPoint::make(qz_arc_midpoint(a.value, b.value));
    CHECK(r_qz(a, mid, b));
  }
}

TEST_CASE("doubling") {
  CHECK(double_structure(CyclicOrder()).doubled.size() == 0);

  auto single = double_structure(from_linear({{"a"}}));
  CHECK(single.doubled.size() == 2);
  CHECK(single.doubled.triple_count() == 0);
  CHECK(single.iota.apply_id("a") == "a|0");

  auto two = double_structure(standard_cycle(2));
  CHECK(two.doubled.elements() == std::vector<ElemId>{"0|0", "0|1", "1|0", "1|1"});
  CHECK(isomorphic(two.doubled, standard_cycle(4)));

  for (int n = 1; n <= 5; ++n) {
    auto c = standard_cycle(n);
    auto d = double_structure(c);
    CHECK(d.doubled.size() == 2 * n);
    if (n >= 1) CHECK(d.doubled.size() >= 2);
    // the defining cut property: R((x,0),(x,1),y) for every distinct y
    for (const auto& x : c.elements())
      for (const auto& y : d.doubled.elements()) {
        if (y == child_id(x, 0) || y == child_id(x, 1)) continue;
        CAPTURE(n);
        CHECK(d.doubled.rel(child_id(x, 0), child_id(x, 1), y));
      }
    CHECK(check_axioms({d.doubled.elements(), d.doubled.sorted_triples()}).all_pass());
  }
}

TEST_CASE("doubling is functorial and iota is natural") {
  for (int m = 1; m <= 3; ++m) {
    auto cm = standard_cycle(m);
    CHECK(map_double(identity_embedding(cm)) ==
          identity_embedding(double_structure(cm).doubled));
    for (int n = m; n <= 3; ++n) {
      auto cn = standard_cycle(n);
      for (const auto& f : enumerate_embeddings(cm, cn)) {
        const auto tf = map_double(f);
        // naturality square
        CHECK(compose(double_structure(cn).iota, f) == compose(tf, double_structure(cm).iota));
        // functoriality against every composable follower
        for (const auto& g : enumerate_embeddings(cn, standard_cycle(3))) {
          CHECK(map_double(compose(g, f)) == compose(map_double(g), tf));
        }
      }
    }
  }
}

TEST_CASE("stage towers") {
  auto c2 = standard_cycle(2);
  auto s0 = t_stage(c2, 0);
  CHECK(s0.structure == c2);
  CHECK(s0.inclusions.empty());

  auto lone = t_stage(from_linear({{"a"}}), 3);
  CHECK(lone.structure.size() == 8);

  auto s2 = t_stage(c2, 2);
  CHECK(s2.structure.size() == 8);
  REQUIRE(s2.inclusions.size() == 2);
  // iota is literal bit extension by zero
  for (const auto& [from, to] : s2.inclusions[1].id_map()) CHECK(to == from + "0");

  // the union of the inclusion chain is the top stage
  auto chain = union_chain({s2.base, s2.inclusions[0].target(), s2.structure}, s2.inclusions);
  CHECK(chain.colimit == s2.structure);

  CHECK_THROWS_AS(t_stage(c2, 2, 7), TruncationError);
  CHECK_THROWS_AS(t_stage(c2, -1), InputError);
}

TEST_CASE("density defects") {
  auto two = density_defect(standard_cycle(2));
  CHECK(two.size() == 2);

  auto five = density_defect(standard_cycle(5));
  std::set<std::pair<ElemId, ElemId>> got(five.begin(), five.end());
  std::set<std::pair<ElemId, ElemId>> expected;
  for (int i = 0; i < 5; ++i)
    expected.emplace(std::to_string(i), std::to_string((i + 1) % 5));
  CHECK(got == expected);

  CHECK(density_defect(from_linear({{"a"}})).empty());
}

TEST_CASE("defects are witnessed one stage up") {
  auto r2 = verify_density_step(standard_cycle(2));
  CHECK(r2.pass);
  CHECK(r2.defects.size() == 2);
  CHECK(r2.witnesses.size() == 2);

  auto r4 = verify_density_step(standard_cycle(4));
  CHECK(r4.pass);
  CHECK(r4.defects.size() == 4);

  auto lone = verify_density_step(from_linear({{"a"}}));
  CHECK(lone.pass);
  CHECK(lone.defects.empty());

  CHECK_THROWS_AS(verify_density_step(CyclicOrder()), InputError);

  // every defect of a stage is witnessed at the next stage
  for (int base = 1; base <= 3; ++base)
    for (int k = 0; k <= 2; ++k) {
      auto stage = t_stage(standard_cycle(base), k);
      CAPTURE(base);
      CAPTURE(k);
      CHECK(verify_density_step(stage.structure).pass);
    }
}

TEST_CASE("quantifier-free types") {
  const auto t1 = qf_type_qz({qz(0, 1), qz(1, 4), qz(1, 2)});
  const auto t2 = qf_type_qz({qz(0, 1), qz(1, 3), qz(2, 3)});
  const auto t3 = qf_type_qz({qz(0, 1), qz(1, 2), qz(1, 4)});
  CHECK(same_type(t1, t2));
  CHECK_FALSE(same_type(t1, t3));
  CHECK(same_type(t1, t1));

  const auto rep = qf_type_qz({qz(0, 1), qz(1, 2), qz(0, 1)});
  CHECK(rep.pattern == std::vector<int>{0, 1, 0});
  CHECK(rep.induced.size() == 2);

  CHECK_THROWS_AS(qf_type(standard_cycle(3), {"0", "7"}), InputError);

  // invariant under embeddings
  auto c4 = standard_cycle(4);
  auto c6 = standard_cycle(6);
  for (const auto& f : enumerate_embeddings(c4, c6)) {
    const std::vector<ElemId> tuple{"2", "0", "3", "0"};
    std::vector<ElemId> mapped;
    for (const auto& e : tuple) mapped.push_back(f.apply_id(e));
    CHECK(same_type(qf_type(c4, tuple), qf_type(c6, mapped)));
  }
}

TEST_CASE("same_type agrees with the definitional comparison") {
  std::mt19937 rng(31337);
  auto c5 = standard_cycle(5);
  auto c7 = standard_cycle(7);
  std::uniform_int_distribution<int> len(0, 4);
  for (int trial = 0; trial < 400; ++trial) {
    std::vector<ElemId> t1, t2;
    const int k = len(rng);
    for (int i = 0; i < k; ++i) {
      t1.push_back(std::to_string(rng() % 5));
      t2.push_back(std::to_string(rng() % 7));
    }
    CAPTURE(trial);
    CHECK(same_type(qf_type(c5, t1), qf_type(c7, t2)) == same_type_brute(c5, t1, c7, t2));
  }
}

TEST_CASE("back and forth on Q/Z: frozen canonical choices") {
  BfSession session(BfSide::qz(), BfSide::qz());
  CHECK(session.extend(Side::Left, "0/1") == "0/1");

  BfSession cut(BfSide::qz(), BfSide::qz());
  cut.add_pair("0/1", "0/1");
  cut.add_pair("1/2", "1/3");
  CHECK(cut.extend(Side::Left, "1/4") == "1/6");
  CHECK(cut.pairs().size() == 3);

  CHECK_THROWS_AS(cut.extend(Side::Left, "1/4"), InputError);   // already matched
  CHECK_THROWS_AS(cut.extend(Side::Left, "5/3"), InputError);   // not a Q/Z point
  CHECK_THROWS_AS(cut.add_pair("1/8", "1/3"), InternalError);   // breaks injectivity
}

TEST_CASE("back and forth between stage towers") {
  BfSession session(BfSide::stage_tower(standard_cycle(1)),
                    BfSide::stage_tower(standard_cycle(2)));
  session.run_alternating(10);
  CHECK(session.pairs().size() == 10);
  session.verify();

  // replay the log against fresh sides and compare states
  auto again = replay(BfSide::stage_tower(standard_cycle(1)),
                      BfSide::stage_tower(standard_cycle(2)), session.log());
  CHECK(again.pairs().size() == session.pairs().size());
  for (std::size_t i = 0; i < session.pairs().size(); ++i) {
    CHECK(again.pairs()[i].left == session.pairs()[i].left);
    CHECK(again.pairs()[i].right == session.pairs()[i].right);
  }
  CHECK(again.side(Side::Left).stage() == session.side(Side::Left).stage());
  CHECK(again.side(Side::Right).stage() == session.side(Side::Right).stage());
}

TEST_CASE("stage raising renames matched elements") {
  BfSession session(BfSide::stage_tower(standard_cycle(2)), BfSide::qz());
  session.extend(Side::Left, "0");
  session.raise(Side::Left);
  CHECK(session.pairs()[0].left == "0|0");
  CHECK(session.side(Side::Left).stage() == 1);
  CHECK_THROWS_AS(session.raise(Side::Right), InputError);  // Q/Z is not a tower
}

TEST_CASE("fixed sides refuse instead of raising") {
  BfSession session(BfSide::qz(), BfSide::fixed(standard_cycle(2)));
  session.extend(Side::Left, "0/1");
  session.extend(Side::Left, "1/2");
  CHECK_THROWS_AS(session.extend(Side::Left, "1/4"), NoWitnessError);
}

TEST_CASE("element caps stop runaway raising") {
  BfSession session(BfSide::stage_tower(standard_cycle(2), 4), BfSide::qz());
  session.raise(Side::Left);  // 4 elements, at the cap
  CHECK_THROWS_AS(session.raise(Side::Left), TruncationError);
}
