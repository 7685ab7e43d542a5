#include <doctest.h>

#include "axial/projections.hpp"

using namespace axial;

namespace {

struct PFixture {
  ModelPtr f2 = GroupModel::free_group(2);
  BallCache cache{f2};
  ActionModel act = ActionModel::left_regular(f2, parse_word("a", f2));
  TruncationParams trunc;
  WildnessEngine eng{act, cache, trunc};
  ProjectionSystem ps{eng, 4};

  GroupElement w(const std::string& s) { return parse_word(s, f2); }
};

}  // namespace

TEST_CASE("pi on F2: g-power singletons") {
  PFixture fx;
  auto pb = fx.ps.pi_hat(fx.w("b"));
  REQUIRE(pb.size() == 1);
  CHECK(is_identity(pb.front()));

  auto pa3b = fx.ps.pi_hat(fx.w("a^3 b"));
  REQUIRE(pa3b.size() == 1);
  CHECK(equal(pa3b.front(), fx.w("a^3")));

  CHECK_THROWS_AS(fx.ps.pi_hat(fx.w("a^2")), NotWild);
}

TEST_CASE("pi is invariant on right g-cosets") {
  PFixture fx;
  for (const auto& w : fx.cache.get(3)) {
    if (fx.eng.classify(w) != WildStatus::WildWitnessed) continue;
    auto p1 = fx.ps.pi_hat(w);
    auto p2 = fx.ps.pi_hat(multiply(w, power(fx.act.g, 2)));
    REQUIRE(p1.size() == p2.size());
    for (std::size_t i = 0; i < p1.size(); ++i) CHECK(equal(p1[i], p2[i]));
  }
}

TEST_CASE("T metric") {
  PFixture fx;
  CHECK(fx.ps.t_norm(fx.w("a^3")) == 3);
  CHECK(fx.ps.t_distance(fx.w("a"), fx.w("a^4")) == 3);
  CHECK(fx.ps.set_diameter({fx.w("a"), fx.w("A^2")}) == 3);
}

TEST_CASE("cosets: 81 of them at radius 4, shortlex reps") {
  PFixture fx;
  CHECK(fx.ps.cosets().size() == 81);
  CHECK(is_identity(fx.ps.cosets().front().rep));
  CHECK(equal(fx.ps.coset_of(fx.w("a^2 b a")).rep,
              fx.ps.coset_of(fx.w("a^2 b a^3")).rep));
}

TEST_CASE("coset projections and distances") {
  PFixture fx;
  CosetId eT = fx.ps.coset_of(identity(fx.f2));
  CosetId bT = fx.ps.coset_of(fx.w("b"));
  CosetId a3bT = fx.ps.coset_of(fx.w("a^3 b"));

  auto pi_b = fx.ps.coset_projection(eT, bT);
  REQUIRE(pi_b.size() == 1);
  CHECK(is_identity(pi_b.front()));
  auto pi_a3b = fx.ps.coset_projection(eT, a3bT);
  REQUIRE(pi_a3b.size() == 1);
  CHECK(equal(pi_a3b.front(), fx.w("a^3")));

  // d_eT(bT, a^3 bT) = 3 in the T word metric.
  std::size_t ye = 0, xb = 0, xa3b = 0;
  for (std::size_t i = 0; i < fx.ps.cosets().size(); ++i) {
    const auto& rep = fx.ps.cosets()[i].rep;
    if (is_identity(rep)) ye = i;
    if (equal(rep, fx.w("b"))) xb = i;
    if (equal(rep, fx.w("a^3 b"))) xa3b = i;
  }
  CHECK(fx.ps.proj_distance(ye, xb, xa3b) == 3);
}

TEST_CASE("axiom report on F2") {
  PFixture fx;
  ConstantEstimates c = fx.eng.constants();
  AxiomReport ax = fx.ps.check_axioms(c.M_hat, c.N_hat);
  CHECK(ax.theta_hat == 0);
  CHECK(ax.theta_stable);
  CHECK(ax.p1_max <= ax.p1_bound);
  CHECK(ax.p1_violations == 0);
  CHECK(ax.p2_stable);
}

TEST_CASE("p1 scan: serial equals parallel") {
  PFixture fx;
  P1Scan s = fx.ps.p1_scan(0, false);
  P1Scan p = fx.ps.p1_scan(0, true);
  CHECK(s.max == p.max);
  CHECK(s.violations == p.violations);
  CHECK(s.worst == p.worst);
}

TEST_CASE("large projection census") {
  PFixture fx;
  CensusRecord none = fx.ps.large_projection_census(fx.w("b"), 0);
  CHECK(none.size == 0);
  CHECK(none.delta == 0);

  CensusRecord one = fx.ps.large_projection_census(fx.w("b a b"), 0);
  CHECK(one.size == 1);
  CHECK(one.size_prev == 1);
  REQUIRE(one.members.size() == 1);
  CHECK(equal(one.members.front(), fx.w("B")));
}

TEST_CASE("projection table is tab separated with header") {
  PFixture fx;
  std::string tsv = fx.ps.projection_table_tsv();
  CHECK(tsv.rfind("target\tsource\t", 0) == 0);
  CHECK(tsv.find('\n') != std::string::npos);
}
