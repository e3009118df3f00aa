#include "tfloer/fibersum.hpp"

#include <algorithm>
#include <cstdlib>

#include "tfloer/pairing.hpp"

namespace tf {

namespace {

// Sorts labels, returning the permutation sign, 0 on a repeat.
int sort_labels(std::vector<std::string>& v) {
  int sign = 1;
  for (std::size_t i = 1; i < v.size(); ++i)
    for (std::size_t j = i; j > 0 && v[j] < v[j - 1]; --j) {
      std::swap(v[j], v[j - 1]);
      sign = -sign;
    }
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] == v[i - 1]) return 0;
  return sign;
}

LaurentSeries coerce(const LaurentSeries& s, int trunc) { return s.truncated() ? s : s.with_trunc(trunc); }

}  // namespace

std::pair<AMonomial, int> multiply(const AMonomial& x, const AMonomial& y) {
  AMonomial r;
  r.a = x.a + y.a;
  int sign = wedge_sign(x.sigma, y.sigma);
  if (!sign) return {r, 0};
  if ((x.ext.size() * degree(y.sigma)) % 2) sign = -sign;
  r.sigma = x.sigma | y.sigma;
  r.ext = x.ext;
  r.ext.insert(r.ext.end(), y.ext.begin(), y.ext.end());
  int s2 = sort_labels(r.ext);
  return {r, sign * s2};
}

void ClosedInvariant::add_class(const ClassToken& c) {
  auto [it, fresh] = classes.emplace(c.label, c);
  if (!fresh && !(it->second == c)) throw InputError("class '" + c.label + "' declared twice");
}

void ClosedInvariant::add_entry(const std::string& token, const AMonomial& m, const LaurentSeries& s) {
  Key key{token, m};
  auto it = entries.find(key);
  if (it == entries.end()) {
    if (!s.is_zero()) entries.emplace(key, s);
    return;
  }
  it->second += s;
  if (it->second.is_zero()) entries.erase(it);
}

std::vector<std::string> ClosedInvariant::validate() const {
  std::vector<std::string> bad;
  if (genus < 1 || genus > kMaxGenus) bad.push_back("genus out of range");
  for (const auto& [label, c] : classes)
    if (std::abs(c.k) > genus - 1) bad.push_back("class " + label + " violates adjunction (|k| > g-1)");
  for (const auto& [key, s] : entries) {
    const auto& [token, m] = key;
    auto it = classes.find(token);
    if (it == classes.end()) {
      bad.push_back("entry for undeclared class " + token);
      continue;
    }
    if (m.sigma & ~top_mask(genus)) bad.push_back("entry " + token + " " + to_text(m) + " uses a class beyond 2g");
    for (const auto& [n, c] : s.terms()) {
      long long sq = it->second.sq + 8LL * it->second.k * n;
      Rational d = d_invariant(sq, sigma, euler);
      if (d != m.degree()) {
        bad.push_back("entry " + token + " " + to_text(m) + " at t^" + std::to_string(n) + " has degree " +
                      std::to_string(m.degree()) + " but d = " + d.str());
        break;
      }
    }
  }
  return bad;
}

Rational d_invariant(long long sq, long long sigma, long long euler) {
  return Rational(Integer(sq) - 3 * Integer(sigma) - 2 * Integer(euler), 4);
}

std::pair<long long, long long> sum_topology(long long e1, long long s1, long long e2, long long s2, int g) {
  if (g < 1) throw InputError("genus must be positive");
  return {e1 + e2 + 4LL * g - 4, s1 + s2};
}

ClassToken patch(const ClassToken& c1, const ClassToken& c2) {
  if (c1.k != c2.k) throw InputError("cannot patch classes with different k");
  return {c1.label + "*" + c2.label, c1.k, c1.sq + c2.sq + 8LL * std::abs(c1.k)};
}

ClosedInvariant normalize(const ClosedInvariant& x) {
  ClosedInvariant out;
  out.genus = x.genus;
  out.euler = x.euler;
  out.sigma = x.sigma;
  for (const auto& [label, c] : x.classes) {
    auto first = x.entries.lower_bound({label, AMonomial{}});
    std::optional<int> low;
    int sign = 0;
    for (auto it = first; it != x.entries.end() && it->first.first == label; ++it) {
      int v = *it->second.valuation();
      if (!low || v < *low) low = v;
      if (!sign) sign = it->second.coeff(v) < 0 ? -1 : 1;
    }
    if (!low) continue;
    ClassToken nc = c;
    nc.sq += 8LL * c.k * *low;
    out.add_class(nc);
    for (auto it = first; it != x.entries.end() && it->first.first == label; ++it)
      out.add_entry(label, it->first.second, it->second.shifted(-*low).scaled(sign));
  }
  return out;
}

ClosedInvariant fibersum_genus1(const ClosedInvariant& a, const ClosedInvariant& b, int trunc) {
  if (a.genus != 1 || b.genus != 1) throw InputError("genus-1 sum needs two genus-1 invariants");
  ClosedInvariant out;
  out.genus = 1;
  std::tie(out.euler, out.sigma) = sum_topology(a.euler, a.sigma, b.euler, b.sigma, 1);
  LaurentSeries factor = LaurentSeries::poly({1, -2, 1});
  for (const auto& [ka, sa] : a.entries) {
    const ClassToken& ca = a.classes.at(ka.first);
    for (const auto& [kb, sb] : b.entries) {
      const ClassToken& cb = b.classes.at(kb.first);
      if (ca.k != 0 || cb.k != 0) throw InputError("genus-1 invariants only carry k = 0");
      auto [m, sign] = multiply(ka.second, kb.second);
      if (!sign) continue;
      ClassToken c = patch(ca, cb);
      out.add_class(c);
      out.add_entry(c.label, m, (coerce(sa, trunc) * coerce(sb, trunc) * factor).scaled(sign));
    }
  }
  out = normalize(out);
  if (auto bad = out.validate(); !bad.empty()) throw InternalError("genus-1 sum output: " + bad.front());
  return out;
}

IntMatrix identity_map(int g) {
  IntMatrix f(2 * g, std::vector<long long>(2 * g, 0));
  for (int i = 0; i < 2 * g; ++i) f[i][i] = 1;
  return f;
}

bool is_symplectic(const IntMatrix& f) {
  int n = static_cast<int>(f.size());
  if (n == 0 || n % 2) return false;
  for (const auto& row : f)
    if (static_cast<int>(row.size()) != n) return false;
  // ω(f e_a, f e_b) = ω(e_a, e_b)
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      long long s = 0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) s += f[i][a] * f[j][b] * omega(i + 1, j + 1);
      if (s != omega(a + 1, b + 1)) return false;
    }
  return true;
}

IntMatrix symplectic_inverse(const IntMatrix& f) {
  if (!is_symplectic(f)) throw InputError("gluing map does not preserve the symplectic form");
  int n = static_cast<int>(f.size());
  // f^{-1} = -Ω f^T Ω
  IntMatrix inv(n, std::vector<long long>(n, 0));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      long long s = 0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) s += omega(r + 1, i + 1) * f[j][i] * omega(j + 1, c + 1);
      inv[r][c] = -s;
    }
  return inv;
}

namespace {

AlgElem transform(const AlgElem& x, const IntMatrix& f, int g) {
  AlgElem out;
  for (const auto& [m, c] : x) {
    ExtElem img = apply_linear(f, ExtElem::monomial(g, m.t, c));
    for (const auto& [t, v] : img.terms()) {
      Integer& slot = out[{t, m.a}];
      slot += v;
      if (slot == 0) out.erase({t, m.a});
    }
  }
  return out;
}

// Values of one side on α ⊗ x for every α without Σ-part; with exact_u, α carries no U-power.
std::map<AMonomial, LaurentSeries> evaluate(const ClosedInvariant& inv, const std::string& token, const AlgElem& x,
                                            bool exact_u, int trunc) {
  std::map<AMonomial, LaurentSeries> out;
  auto first = inv.entries.lower_bound({token, AMonomial{}});
  for (auto it = first; it != inv.entries.end() && it->first.first == token; ++it) {
    const AMonomial& mu = it->first.second;
    for (const auto& [m, c] : x) {
      if (m.t != mu.sigma || m.a > mu.a || (exact_u && m.a != mu.a)) continue;
      AMonomial alpha{mu.a - m.a, 0, mu.ext};
      // α ⊗ e_T reordered to e_T ⊗ α
      int sign = (alpha.ext.size() * degree(m.t)) % 2 ? -1 : 1;
      LaurentSeries& v = out[alpha];
      v += coerce(it->second, trunc).scaled(c * sign);
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

}  // namespace

ClosedInvariant fibersum_genusg(const ClosedInvariant& a, const ClosedInvariant& b, const IntMatrix& f, int trunc) {
  if (a.genus != b.genus) throw InputError("genus mismatch between the summands");
  int g = a.genus;
  if (g < 2) throw InputError("higher-genus sum needs genus >= 2");
  if (static_cast<int>(f.size()) != 2 * g) throw InputError("gluing map must be 2g x 2g");
  IntMatrix finv = symplectic_inverse(f);
  ClosedInvariant out;
  out.genus = g;
  std::tie(out.euler, out.sigma) = sum_topology(a.euler, a.sigma, b.euler, b.sigma, g);
  for (const auto& [la, ca] : a.classes) {
    if (std::abs(ca.k) > g - 1) continue;
    for (const auto& [lb, cb] : b.classes) {
      if (cb.k != ca.k) continue;
      const KroneckerFamily& fam = kronecker_family(g, ca.k);
      ClassToken c = patch(ca, cb);
      for (std::size_t beta = 0; beta < fam.basis.size(); ++beta) {
        auto va = evaluate(a, la, fam.kron[beta], false, trunc);
        if (va.empty()) continue;
        auto vb = evaluate(b, lb, transform(fam.kron_poin[beta], finv, g), true, trunc);
        if (vb.empty()) continue;
        LaurentSeries u = unit(fam, beta, trunc);
        for (const auto& [a1, s1] : va)
          for (const auto& [a2, s2] : vb) {
            auto [m, sign] = multiply(a1, a2);
            if (!sign) continue;
            out.add_class(c);
            out.add_entry(c.label, m, (s1 * s2 * u).scaled(sign));
          }
      }
    }
  }
  out = normalize(out);
  if (auto bad = out.validate(); !bad.empty()) throw InternalError("higher-genus sum output: " + bad.front());
  return out;
}

SimpleTypeReport simple_type_check(const ClosedInvariant& x) {
  SimpleTypeReport r;
  for (const auto& [key, s] : x.entries) {
    const auto& [token, m] = key;
    std::string where = token + " " + to_text(m);
    if (m.degree() != 0) {
      r.simple_type = false;
      r.flagged.push_back(where + ": nonzero degree");
    }
    if (m.a > 0 || m.sigma) {
      r.sigma_simple_type = false;
      r.flagged.push_back(where + ": in the ideal of U and H_1(Sigma)");
    }
  }
  return r;
}

bool torus_ideal_vanishing(const ClosedInvariant& x) {
  return std::all_of(x.entries.begin(), x.entries.end(),
                     [](const auto& kv) { return kv.first.second.a == 0 && kv.first.second.sigma == 0; });
}

LaurentSeries chern_series(const LaurentSeries& s) {
  if (s.is_zero()) return s;
  LaurentSeries::Terms t;
  int centre = *s.valuation() + *s.top_exponent();
  for (const auto& [e, c] : s.terms()) t[2 * e - centre] = c;
  LaurentSeries q(std::move(t));
  bool sym = true, anti = true;
  for (const auto& [e, c] : q.terms()) {
    Integer mirror = q.coeff(-e);
    sym = sym && mirror == c;
    anti = anti && mirror == -c;
  }
  if (!sym && !anti) throw InputError("no symmetric representative up to units");
  return q.coeff(*q.top_exponent()) < 0 ? -q : q;
}

std::vector<DisplayRow> chern_display(const ClosedInvariant& x) {
  std::vector<DisplayRow> rows;
  for (const auto& [key, s] : x.entries)
    rows.push_back({key.first, to_text(key.second), render(chern_series(s), "T")});
  return rows;
}

}  // namespace tf
