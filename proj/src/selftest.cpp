#include "tfloer/selftest.hpp"

#include <cstdlib>

#include "tfloer/fibersum.hpp"
#include "tfloer/pairing.hpp"

namespace tf {

namespace {

int uniform(Rng& r, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(r); }

LaurentSeries random_series(Rng& r, int lo = -3, int hi = 8, int max_terms = 6) {
  LaurentSeries::Terms t;
  int n = uniform(r, 1, max_terms);
  for (int i = 0; i < n; ++i) t[uniform(r, lo, hi)] = uniform(r, -5, 5);
  return LaurentSeries(std::move(t));
}

LaurentSeries random_unit_series(Rng& r, int len) {
  int v = uniform(r, -4, 4);
  LaurentSeries::Terms t{{v, uniform(r, 0, 1) ? 1 : -1}};
  int n = uniform(r, 0, 5);
  for (int i = 0; i < n; ++i) t[v + uniform(r, 1, len + 2)] += uniform(r, -6, 6);
  return LaurentSeries(std::move(t), Window{v, len});
}

LaurentSeries one_to_window(const LaurentSeries& like) {
  return LaurentSeries(LaurentSeries::Terms{{0, 1}}, Window{0, like.window()->len});
}

PlaneElem random_plane(Rng& r, int g, bool series) {
  PlaneElem x(g);
  int n = uniform(r, 1, 5);
  for (int i = 0; i < n; ++i) {
    Slot s{static_cast<Mask>(uniform(r, 0, static_cast<int>(top_mask(g)))), uniform(r, -3, 0)};
    x.add_term(s, series ? random_series(r, 0, 4, 3) : LaurentSeries::constant(uniform(r, -4, 4)));
  }
  return x;
}

XgdElem random_xgd(Rng& r, int g, int k, int trunc) {
  auto basis = xgd_basis(g, xgd_d(g, k));
  XgdElem x(g, k);
  int n = uniform(r, 1, 4);
  for (int i = 0; i < n; ++i) {
    LaurentSeries c = random_series(r, 0, 5, 3);
    if (k == 0) c = c.with_trunc(trunc);
    x.add_term(basis[uniform(r, 0, static_cast<int>(basis.size()) - 1)], c);
  }
  return x;
}

std::string fail_if(bool bad, const std::string& what) { return bad ? what : std::string(); }

}  // namespace

std::vector<Suite> property_suites() {
  std::vector<Suite> s;
  s.push_back({"novikov-inversion", 100, [](Rng& r) {
                 LaurentSeries a = random_unit_series(r, kDefaultTrunc);
                 LaurentSeries p = a * novikov_invert(a);
                 return fail_if(!(p.restricted(Window{0, kDefaultTrunc}) == one_to_window(a)), "s*inv(s) != 1: " + to_text(a));
               }});
  s.push_back({"ring-axioms", 100, [](Rng& r) {
                 int len = uniform(r, 3, 12);
                 LaurentSeries a = random_series(r).with_trunc(len), b = random_series(r).with_trunc(len),
                               c = random_series(r).with_trunc(len);
                 bool ok = (a * b) * c == a * (b * c) && eq_up_to_unit(a * (b + c), a * b + a * c) ==
                                                             eq_up_to_unit(a * (b + c), a * (b + c));
                 LaurentSeries lhs = a * (b + c), rhs = a * b + a * c;
                 int cap = std::min(lhs.window()->cap(), rhs.window()->cap());
                 LaurentSeries diff = lhs.without_trunc() - rhs.without_trunc();
                 for (const auto& [e, v] : diff.terms())
                   if (e < cap) ok = false;
                 return fail_if(!ok, "ring axioms fail for " + to_text(a) + " | " + to_text(b) + " | " + to_text(c));
               }});
  s.push_back({"conjugation", 100, [](Rng& r) {
                 LaurentSeries a = random_series(r), b = random_series(r);
                 bool ok = conjugate(conjugate(a)) == a && conjugate(a * b) == conjugate(a) * conjugate(b) &&
                           conjugate(a + b) == conjugate(a) + conjugate(b);
                 return fail_if(!ok, "conjugation fails on " + to_text(a));
               }});
  s.push_back({"unit-equivalence", 100, [](Rng& r) {
                 LaurentSeries a = random_series(r);
                 if (a.is_zero()) a = LaurentSeries::constant(1);
                 auto unit = [&] { return LaurentSeries::monomial(uniform(r, 0, 1) ? 1 : -1, uniform(r, -5, 5)); };
                 LaurentSeries b = a * unit(), c = b * unit(), d = random_series(r);
                 bool ok = eq_up_to_unit(a, a) && eq_up_to_unit(a, b) && eq_up_to_unit(b, a) && eq_up_to_unit(b, c) &&
                           eq_up_to_unit(a, c) && eq_up_to_unit(a, d) == eq_up_to_unit(d, a) &&
                           (!eq_up_to_unit(a, d) || eq_up_to_unit(c, d));
                 return fail_if(!ok, "equivalence axioms fail for " + to_text(a) + " and " + to_text(d));
               }});
  s.push_back({"contraction-nilpotent", 100, [](Rng& r) {
                 int g = uniform(r, 1, 3);
                 ExtElem gamma(g), a(g);
                 for (int i = 1; i <= 2 * g; ++i) gamma.add_term(bit(i), uniform(r, -3, 3));
                 if (gamma.is_zero()) gamma = ExtElem::basis(g, 1);
                 for (int i = 0; i < 4; ++i) a.add_term(static_cast<Mask>(uniform(r, 0, static_cast<int>(top_mask(g)))), uniform(r, -3, 3));
                 return fail_if(!dual_contract(gamma, dual_contract(gamma, a)).is_zero(), "iota^2 != 0");
               }});
  s.push_back({"omega-powers", 100, [](Rng& r) {
                 int g = uniform(r, 1, 4), a = uniform(r, 0, g), b = uniform(r, 0, g - a);
                 ExtElem lhs = wedge(omega_divided_power(g, a), omega_divided_power(g, b));
                 ExtElem rhs = omega_divided_power(g, a + b).scaled(binom(a + b, a));
                 return fail_if(!(lhs == rhs), "divided power product identity fails");
               }});
  s.push_back({"action-nilpotence", 100, [](Rng& r) {
                 int g = uniform(r, 1, 3);
                 int i = uniform(r, 1, 2 * g), j = uniform(r, 1, 2 * g);
                 ExtElem gi = ExtElem::basis(g, i), gj = ExtElem::basis(g, j);
                 PlaneElem x = random_plane(r, g, uniform(r, 0, 1));
                 bool ok = standard_action(gi, standard_action(gi, x)).is_zero() &&
                           (standard_action(gi, standard_action(gj, x)) + standard_action(gj, standard_action(gi, x))).is_zero();
                 return fail_if(!ok, "standard action is not an exterior module action");
               }});
  s.push_back({"corrected-action-nilpotence", 100, [](Rng& r) {
                 int g = uniform(r, 1, 3), k = uniform(r, -(g - 1), g - 1);
                 XgdElem x = random_xgd(r, g, k, kDefaultTrunc);
                 int i = uniform(r, 1, 2 * g), j = uniform(r, 1, 2 * g);
                 ExtElem gi = ExtElem::basis(g, i), gj = ExtElem::basis(g, j);
                 bool ok = corrected_action(gi, corrected_action(gi, x)).is_zero() &&
                           (corrected_action(gi, corrected_action(gj, x)) + corrected_action(gj, corrected_action(gi, x))).is_zero();
                 return fail_if(!ok, "corrected action fails the module axioms at g=" + std::to_string(g) + " k=" + std::to_string(k));
               }});
  s.push_back({"pairing-sesquilinear", 100, [](Rng& r) {
                 int g = uniform(r, 1, 3), k = uniform(r, -(g - 1), g - 1);
                 XgdElem xi = random_xgd(r, g, k, kDefaultTrunc), eta = random_xgd(r, g, k, kDefaultTrunc),
                         zeta = random_xgd(r, g, k, kDefaultTrunc);
                 LaurentSeries t = LaurentSeries::monomial(1, 1), tinv = LaurentSeries::monomial(1, -1);
                 LaurentSeries base = module_pair(xi, eta);
                 bool ok = module_pair(xi.scaled(t), eta) == base * t && module_pair(xi, eta.scaled(tinv)) == base * t &&
                           module_pair(xi + zeta, eta) == base + module_pair(zeta, eta);
                 return fail_if(!ok, "pairing is not sesquilinear at g=" + std::to_string(g));
               }});
  s.push_back({"kernel-residual", 30, [](Rng& r) {
                 int g = uniform(r, 1, 3), k = uniform(r, -(g - 1), g - 1);
                 XgdElem x = random_xgd(r, g, k, kDefaultTrunc);
                 PlaneElem y = embed(x);
                 PlaneElem res = kernel_residual(y, k);
                 if (auto w = common_window(y)) res = restricted(res, *w);
                 bool ok = res.is_zero() && (section(y, k) - x).is_zero();
                 return fail_if(!ok, "embedded element is not in the kernel at g=" + std::to_string(g));
               }});
  s.push_back({"surjectivity-witness", 50, [](Rng& r) {
                 int g = uniform(r, 1, 3);
                 PlaneElem y = project(random_plane(r, g, true), pi_region(0));
                 PlaneElem x = surjectivity_witness(y);
                 PlaneElem img = twisted_f(x, 0);
                 PlaneElem target(g);
                 for (const auto& [t, c] : y.terms()) target.add_term(t, c.with_trunc(kDefaultTrunc));
                 Window w = common_window(target).value_or(Window{0, kDefaultTrunc});
                 return fail_if(!(restricted(img, w) == restricted(target, w)), "F(x_y) != y");
               }});
  s.push_back({"t3-reduce", 100, [](Rng& r) {
                 GroupRingElem x(3);
                 for (int i = 0; i < 3; ++i)
                   x += GroupRingElem::monomial(uniform(r, -4, 4), {uniform(r, -2, 2), uniform(r, -2, 2), uniform(r, -2, 2)});
                 GroupRingElem rm1 = GroupRingElem::monomial(1, {1, 0, 0}) - GroupRingElem::monomial(1, {0, 0, 0});
                 GroupRingElem sm1 = GroupRingElem::monomial(1, {0, 1, 0}) - GroupRingElem::monomial(1, {0, 0, 0});
                 GroupRingElem tm1 = GroupRingElem::monomial(1, {0, 0, 1}) - GroupRingElem::monomial(1, {0, 0, 0});
                 GroupRingElem a = tm1 * x, b = rm1 * x + sm1 * x;
                 bool ok = t3_reduce(rm1 * x).is_zero() && t3_reduce(sm1 * x).is_zero() &&
                           t3_reduce(a + b) == t3_reduce(a) + t3_reduce(b) && t3_reduce(a) == specialize_last(x);
                 return fail_if(!ok, "t3_reduce fails linearity or rim-torus invisibility");
               }});
  s.push_back({"invariant-roundtrip", 100, [](Rng& r) {
                 ClosedInvariant x;
                 x.genus = uniform(r, 1, 3);
                 x.euler = uniform(r, -20, 60);
                 x.sigma = uniform(r, -30, 10);
                 int k = uniform(r, -(x.genus - 1), x.genus - 1);
                 x.add_class({"c" + std::to_string(uniform(r, 0, 9)), k, 0});
                 const ClassToken& c = x.classes.begin()->second;
                 AMonomial m;
                 m.a = uniform(r, 0, 2);
                 if (uniform(r, 0, 1)) m.sigma = bit(uniform(r, 1, 2 * x.genus));
                 if (uniform(r, 0, 1)) m.ext = {"a", "b"};
                 // choose sq so that the degree matches d at t^0
                 ClassToken fixed = c;
                 fixed.sq = 4LL * m.degree() + 3 * x.sigma + 2 * x.euler;
                 x.classes[c.label] = fixed;
                 x.add_entry(fixed.label, m, LaurentSeries::constant(uniform(r, 1, 9)));
                 std::string text = print_invariant(x);
                 return fail_if(!(parse_invariant(text) == x && print_invariant(parse_invariant(text)) == text),
                                "round trip fails on:\n" + text);
               }});
  return s;
}

SuiteResult run_suite(const Suite& s, std::uint64_t seed) {
  SuiteResult out{s.name, s.cases, 0, {}};
  Rng rng(seed ^ std::hash<std::string>{}(s.name));
  for (int i = 0; i < s.cases; ++i) {
    std::string msg;
    try {
      msg = s.check(rng);
    } catch (const std::exception& e) {
      msg = std::string("exception: ") + e.what();
    }
    if (!msg.empty()) {
      if (out.failures++ == 0) out.first_failure = msg;
    }
  }
  return out;
}

std::vector<SuiteResult> run_selftest(std::uint64_t seed, bool force_fail) {
  std::vector<SuiteResult> out;
  for (const auto& s : property_suites()) out.push_back(run_suite(s, seed));
  if (force_fail)
    out.push_back(run_suite({"forced-failure", 1, [](Rng&) { return std::string("deliberate failure"); }}, seed));
  return out;
}

}  // namespace tf
