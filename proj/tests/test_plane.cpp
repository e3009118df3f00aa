#include <doctest.h>

#include <random>

#include "tfloer/plane.hpp"

using namespace tf;

namespace {

LaurentSeries c(long long v) { return LaurentSeries::constant(v); }

PlaneElem random_plane(std::mt19937_64& rng, int g) {
  std::uniform_int_distribution<int> co(-3, 3), lv(-3, 2);
  std::uniform_int_distribution<Mask> mk(0, top_mask(g));
  PlaneElem x(g);
  for (int i = 0; i < 5; ++i) x.add_term({mk(rng), lv(rng)}, LaurentSeries::poly({co(rng), co(rng)}));
  return x;
}

}  // namespace

TEST_CASE("positions and projections") {
  CHECK(position({0, 1}, 1).i == -1);
  CHECK(position({0, 1}, 1).j == -2);
  PlaneElem x = PlaneElem::slot(1, {0, 1}, c(3)) + PlaneElem::slot(1, {bit(1), 0}, c(2));
  CHECK(project(x, Region::whole()) == x);
  CHECK(project(PlaneElem::slot(1, {0, 1}), Region::i_ge0()).is_zero());
  CHECK(project(PlaneElem::slot(2, {bit(1), 0}), Region::j_ge(0)).is_zero());
  CHECK(project(PlaneElem::slot(2, {bit(1), 0}), Region::j_ge(-1)) == PlaneElem::slot(2, {bit(1), 0}));
  Region r = Region::i_ge0() & Region::j_lt(0);
  CHECK(r.contains({0, -1}));
  CHECK_FALSE(r.contains({-1, -1}));
  CHECK_FALSE(r.contains({0, 0}));
  CHECK(Region::max_eq0(0).contains({0, -3}));
  CHECK(Region::max_eq0(0).contains({-2, 0}));
  CHECK_FALSE(Region::max_eq0(0).contains({1, -1}));
  CHECK(Region::min_ge0(0).contains({0, 0}));
  CHECK_FALSE(Region::min_ge0(0).contains({0, -1}));
  CHECK(Region::min_eq0(0).contains({3, 0}));
}

TEST_CASE("U translation") {
  std::mt19937_64 rng(5);
  for (int it = 0; it < 50; ++it) {
    int g = 1 + it % 3;
    PlaneElem x = random_plane(rng, g);
    CHECK(u_act(x, 0) == x);
    CHECK(u_act(u_act(x, 2), -2) == x);
    PlaneElem y = u_act(x, 3);
    for (const auto& [t, v] : x.terms()) {
      Slot s{t.s, t.l + 3};
      CHECK(y.coeff(s) == v);
      CHECK(grading(s, g) == grading(t, g) - 6);
      CHECK(position(s, g).i == position(t, g).i - 3);
      CHECK(position(s, g).j == position(t, g).j - 3);
    }
  }
}

TEST_CASE("standard action") {
  // e1 on e1⊗U^0: contraction gives 1, PD(e1) = e2 so e2∧e1 = -e1e2 at U^1
  PlaneElem x = PlaneElem::slot(1, {bit(1), 0});
  PlaneElem expect = PlaneElem::slot(1, {0, 0}) + PlaneElem::slot(1, {bit(1) | bit(2), 1}, c(-1));
  CHECK(standard_action(ExtElem::basis(1, 1), x) == expect);
  CHECK(standard_action(ExtElem::basis(1, 1), PlaneElem(1)).is_zero());
  CHECK_THROWS_AS(standard_action(ExtElem::monomial(1, bit(1) | bit(2)), x), InputError);

  std::mt19937_64 rng(99);
  for (int it = 0; it < 60; ++it) {
    int g = 1 + it % 3;
    PlaneElem y = random_plane(rng, g);
    for (int i = 1; i <= 2 * g; ++i) {
      ExtElem gi = ExtElem::basis(g, i);
      CHECK(standard_action(gi, standard_action(gi, y)).is_zero());
      for (int j = i + 1; j <= 2 * g; ++j) {
        ExtElem gj = ExtElem::basis(g, j);
        CHECK((standard_action(gi, standard_action(gj, y)) + standard_action(gj, standard_action(gi, y))).is_zero());
      }
      // lowers grading by one
      PlaneElem img = standard_action(gi, PlaneElem::slot(g, {bit(1), 0}));
      for (const auto& [t, v] : img.terms())
        CHECK(grading(t, g) == grading(Slot{bit(1), 0}, g) - 1);
    }
  }
}

TEST_CASE("monomial action order") {
  int g = 2;
  PlaneElem x = PlaneElem::slot(g, {bit(1) | bit(3), -2});
  AlgMonomial m{bit(1) | bit(3), 1};
  PlaneElem manual = standard_action(ExtElem::basis(g, 1), standard_action(ExtElem::basis(g, 3), u_act(x, 1)));
  CHECK(mono_action(m, x) == manual);
  CHECK(degree(m) == 4);
  CHECK(to_text(AlgMonomial{0, 0}) == "1");
  AlgElem a{{m, 2}, {AlgMonomial{0, 1}, -1}};
  CHECK(alg_action(a, x) == manual.scaled(c(2)) - u_act(x, 1));
}

TEST_CASE("region ranks") {
  for (int g = 1; g <= 5; ++g) {
    CHECK(region_rank(xgd_region(g, 0), g).rank == 1);
    CHECK_FALSE(region_rank(xgd_region(g, 0), g).infinite);
    for (int d = 0; d <= g - 1; ++d) {
      long long expect = 0;
      for (int i = 0; i <= d; ++i) expect += binom(2 * g, i) * (d + 1 - i);
      CHECK(region_rank(xgd_region(g, d), g).rank == expect);
    }
  }
  CHECK(region_rank(xgd_region(2, 1), 2).rank == 6);
  CHECK(region_rank(Region::i_ge0(), 2).infinite);
}

TEST_CASE("knot Floer ranks") {
  CHECK(hfk_rank(1, 0) == 2);
  CHECK(hfk_rank(3, 1) == 15);
  for (int g = 1; g <= 6; ++g) {
    CHECK(hfk_rank(g, g) == 1);
    CHECK(hfk_rank(g, g + 1) == 0);
    long long total = 0;
    for (int j = -g; j <= g; ++j) total += hfk_rank(g, j);
    CHECK(total == (1LL << (2 * g)));
  }
}

TEST_CASE("windows and dumps") {
  PlaneElem x = PlaneElem::slot(1, {0, 0}, LaurentSeries::poly({1, 2, 3}).with_trunc(2));
  CHECK(common_window(x) == Window{0, 2});
  CHECK(restricted(x, Window{0, 2}).coeff({0, 0}).terms().size() == 2);
  CHECK_FALSE(common_window(PlaneElem::slot(1, {0, 0})).has_value());
  CHECK(dump(PlaneElem::slot(1, {bit(1), -1}, c(-2))) == "e1 -1 (1,1) -2\n");
  CHECK(coeff_text(c(5)) == "5");
  CHECK(coeff_text(LaurentSeries::poly({1, 1})) == "[0:1 1:1]");
}
