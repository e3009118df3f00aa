#include "tfloer/demo.hpp"

#include <cstdlib>

#include "tfloer/pairing.hpp"

namespace tf {

ClosedInvariant elliptic_e1(int trunc) {
  ClosedInvariant x;
  x.genus = 1;
  x.euler = 12;
  x.sigma = -8;
  x.add_class({"c0", 0, 0});
  x.add_entry("c0", AMonomial{}, rel_inv_torus_disk(trunc));
  return x;
}

ClosedInvariant elliptic_en(int n, int trunc) {
  if (n < 2) throw InputError("E(n) needs n >= 2");
  ClosedInvariant e1 = elliptic_e1(trunc);
  ClosedInvariant x = fibersum_genus1(e1, e1, trunc);
  for (int i = 3; i <= n; ++i) x = fibersum_genus1(x, e1, trunc);
  return x;
}

ClosedInvariant elliptic_en_genus(int n, int trunc) {
  if (n < 3) throw InputError("the genus n-1 marking needs n >= 3");
  ClosedInvariant en = elliptic_en(n, trunc);
  if (en.entries.size() != 1) throw InternalError("E(n) should have a single entry");
  LaurentSeries q = chern_series(en.entries.begin()->second);
  ClosedInvariant x;
  x.genus = n - 1;
  x.euler = en.euler;
  x.sigma = en.sigma;
  for (const auto& [m, c] : q.terms()) {
    if (c == 0) continue;
    std::string label = "F^" + std::to_string(m);
    x.add_class({label, m, 0});
    x.add_entry(label, AMonomial{}, LaurentSeries::constant(c));
  }
  if (auto bad = x.validate(); !bad.empty()) throw InternalError("E(n) with genus marking: " + bad.front());
  return x;
}

namespace {

// (T - T^{-1})^m by the binomial theorem
LaurentSeries closed_form_en(int m) {
  LaurentSeries::Terms t;
  for (int j = 0; j <= m; ++j) t[m - 2 * j] = Integer(binom(m, j)) * (j % 2 ? -1 : 1);
  return LaurentSeries(std::move(t));
}

}  // namespace

DemoResult demo_en(int n, int trunc) {
  if (n < 2) throw InputError("demo en needs N >= 2");
  ClosedInvariant x = elliptic_en(n, trunc);
  DemoResult r;
  LaurentSeries expected = closed_form_en(n - 2);
  r.expected = render(expected, "T");
  if (x.entries.size() != 1) {
    r.computed = std::to_string(x.entries.size()) + " entries";
    return r;
  }
  const auto& [key, s] = *x.entries.begin();
  LaurentSeries q = chern_series(s);
  r.computed = render(q, "T");
  const ClassToken& c = x.classes.at(key.first);
  r.notes.push_back("euler=" + std::to_string(x.euler) + " sigma=" + std::to_string(x.sigma) + " sq=" +
                    std::to_string(c.sq) + " d=" + d_invariant(c.sq, x.sigma, x.euler).str());
  r.pass = q == expected && key.second == AMonomial{} && x.euler == 12 * n && x.sigma == -8 * n &&
           torus_ideal_vanishing(x) && simple_type_check(x).simple_type;
  return r;
}

DemoResult demo_xn(int n, int trunc) {
  if (n < 3) throw InputError("demo xn needs N >= 3");
  int g = n - 1;
  ClosedInvariant en = elliptic_en_genus(n, trunc);
  ClosedInvariant x = fibersum_genusg(en, en, identity_map(g), trunc);
  DemoResult r;
  r.expected = "K + K^-1";
  std::string text;
  bool ok = x.entries.size() == 2;
  for (const auto& [key, s] : x.entries) {
    const ClassToken& c = x.classes.at(key.first);
    bool extreme = std::abs(c.k) == g - 1;
    bool unit = s == LaurentSeries::constant(1).with_trunc(trunc) || s == LaurentSeries::constant(1);
    ok = ok && extreme && unit && key.second == AMonomial{} && c.sq == 8LL * (n - 2) &&
         d_invariant(c.sq, x.sigma, x.euler) == 0;
    std::string sym = c.k == g - 1 ? "K" : c.k == -(g - 1) ? "K^-1" : "(k=" + std::to_string(c.k) + ")";
    std::string coef = s.terms().size() == 1 && s.valuation() == 0 ? s.coeff(0).str() : "[" + to_text(s) + "]";
    r.notes.push_back(key.first + " k=" + std::to_string(c.k) + " sq=" + std::to_string(c.sq) + " coef=" + coef);
    std::string term = coef == "1" ? sym : coef == "-1" ? "-" + sym : coef + "*" + sym;
    if (text.empty())
      text = term;
    else
      text += term[0] == '-' ? " - " + term.substr(1) : " + " + term;
  }
  // the K-term first
  if (x.entries.size() == 2 && text.rfind("K^-1", 0) == 0) {
    auto p = text.find(" + ");
    if (p != std::string::npos) text = text.substr(p + 3) + " + " + text.substr(0, p);
  }
  r.computed = text.empty() ? "0" : text;
  r.notes.push_back("euler=" + std::to_string(x.euler) + " sigma=" + std::to_string(x.sigma));
  r.pass = ok;
  return r;
}

}  // namespace tf
