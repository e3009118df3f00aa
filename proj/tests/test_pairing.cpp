#include <doctest.h>

#include <random>

#include "tfloer/pairing.hpp"

using namespace tf;

namespace {

XgdElem std_alg(const AlgElem& a, const XgdElem& x) {
  XgdElem out(x.genus(), x.k());
  for (const auto& [m, c] : a) out += standard_action(m, x).scaled(LaurentSeries::constant(c));
  return out;
}

}  // namespace

TEST_CASE("base pairing") {
  CHECK(base_pair(3, 0, 3, -1) == 1);
  CHECK(base_pair(3, 0, 4, -1) == 0);
  CHECK(base_pair(3, 1, 3, -1) == 0);
}

TEST_CASE("module pairing") {
  for (int g = 1; g <= 3; ++g)
    for (int k = -(g - 1); k <= g - 1; ++k) {
      const KroneckerFamily& f = kronecker_family(g, k);
      XgdElem bottom = XgdElem::generator(g, k, {0, 0});
      CHECK(module_pair(bottom, f.top()) == LaurentSeries::constant(1));
      if (f.d > 0) CHECK(module_pair(bottom, bottom).is_zero());
      // complementary heights only
      for (std::size_t a = 0; a < f.basis.size(); ++a)
        for (const auto& [b, w] : f.gram[a])
          CHECK(grading(f.basis[a], g) + grading(f.basis[b], g) == grading(Slot{0, 0}, g) + grading(Slot{0, -f.d}, g));
      // the pairing matrix against the Poincaré-dual family is the identity
      for (std::size_t a = 0; a < f.basis.size(); ++a)
        for (std::size_t j = 0; j < f.basis.size(); ++j)
          CHECK(module_pair(XgdElem::generator(g, k, f.basis[a]), f.poin[j]) == LaurentSeries::constant(a == j ? 1 : 0));
    }

  std::mt19937_64 rng(17);
  const KroneckerFamily& f = kronecker_family(3, 0);
  auto rnd = [&] {
    XgdElem x(3, 0);
    for (int i = 0; i < 4; ++i)
      x.add_term(f.basis[rng() % f.basis.size()], LaurentSeries::poly({static_cast<long long>(rng() % 5) - 2, 1}, -1));
    return x;
  };
  LaurentSeries t = LaurentSeries::monomial(1, 1), tinv = LaurentSeries::monomial(1, -1);
  for (int i = 0; i < 30; ++i) {
    XgdElem a = rnd(), b = rnd(), c = rnd();
    CHECK(module_pair(a.scaled(t), b) == module_pair(a, b) * t);
    CHECK(module_pair(a, b.scaled(tinv)) == module_pair(a, b) * t);
    CHECK(module_pair(a, b + c) == module_pair(a, b) + module_pair(a, c));
    CHECK(module_pair(a, b.scaled(t), false) == module_pair(a, b, false) * t);
  }
  CHECK_THROWS_AS(module_pair(XgdElem(2, 0), XgdElem(2, 1)), InputError);
}

TEST_CASE("dual bases") {
  for (int g = 1; g <= 3; ++g)
    for (int k = -(g - 1); k <= g - 1; ++k) {
      DualBasisData db = dual_basis(g, k);
      const KroneckerFamily& f = db.family;
      REQUIRE(f.kron.size() == f.basis.size());
      for (std::size_t i = 0; i < f.basis.size(); ++i) {
        for (const auto& [m, c] : f.kron[i]) CHECK(degree(m) <= 2 * f.d);
        for (std::size_t j = 0; j < f.basis.size(); ++j) {
          // Kronecker duality is read at the lowest height
          LaurentSeries delta = LaurentSeries::constant(i == j ? 1 : 0);
          CHECK(lowest_height_projection(std_alg(f.kron[i], XgdElem::generator(g, k, f.basis[j]))) == delta);
          CHECK(lowest_height_projection(std_alg(f.kron_poin[i], f.poin[j])) == delta);
        }
        CHECK(f.poin[i] == std_alg(f.kron[i], f.top()));
        CHECK(db.units[i].coeff(0) == 1);
        if (k != 0) CHECK(db.units[i] == LaurentSeries::constant(1));
      }
    }
  DualBasisData d0 = dual_basis(3, 2);
  REQUIRE(d0.family.kron.size() == 1);
  CHECK(d0.family.kron[0] == AlgElem{{AlgMonomial{0, 0}, 1}});
}

TEST_CASE("relative invariants of the standard pieces") {
  LaurentSeries r = rel_inv_torus_disk(4);
  CHECK(eq_up_to_unit(r.without_trunc(), LaurentSeries::poly({-1, -1, -1, -1})));
  LaurentSeries prod = (LaurentSeries::poly({-1, 1}) * rel_inv_torus_disk(16)).restricted(Window{0, 16});
  CHECK(eq_up_to_unit(prod.without_trunc(), LaurentSeries::constant(1)));
  CHECK(rel_inv_torus_disk(2, 16).is_zero());
  CHECK(rel_inv_torus_disk(0, 16) == rel_inv_torus_disk(16));

  const KroneckerFamily& f = kronecker_family(3, 0);
  CHECK((rel_inv_sigma_disk(AlgMonomial{}, 3, 0) - f.top()).is_zero());
  CHECK(rel_inv_sigma_disk(AlgMonomial{0, f.d + 1}, 3, 0).is_zero());
  CHECK(rel_inv_sigma_disk(AlgMonomial{bit(1), 0}, 3, 2).is_zero());
  CHECK(rel_inv_sigma_disk(AlgMonomial{0, 1}, 3, 2).is_zero());
  CHECK(rel_inv_sigma_disk(AlgMonomial{}, 3, 2) == XgdElem::generator(3, 2, {0, 0}));
}

TEST_CASE("T3 reduction") {
  auto m = [](long long c, std::vector<int> e) { return GroupRingElem::monomial(c, std::move(e)); };
  GroupRingElem one = m(1, {0, 0, 0});
  CHECK(t3_reduce(m(1, {0, 0, 1}) - one) == LaurentSeries::constant(1));
  CHECK(t3_reduce(m(1, {1, 0, 0}) - one).is_zero());
  CHECK(t3_reduce(m(1, {1, 0, 1}) - one) == LaurentSeries::constant(1));
  CHECK_THROWS_AS(t3_reduce(one), InputError);
  CHECK_THROWS_AS(t3_reduce(m(1, {1, 0}) - m(1, {0, 0})), InputError);
}
