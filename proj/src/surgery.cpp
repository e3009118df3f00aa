#include "tfloer/surgery.hpp"

#include <cstdlib>
#include <mutex>
#include <tuple>

namespace tf {

namespace {

struct JTerm {
  Mask t;
  int dl;
  long long c;
};

// J(e_S ⊗ U^0) before projection; J(e_S ⊗ U^l) is this list shifted by l.
const std::vector<JTerm>& j_terms(int g, Mask s) {
  static std::mutex mu;
  static std::map<std::pair<int, Mask>, std::vector<JTerm>> cache;
  std::lock_guard lock(mu);
  auto key = std::pair{g, s};
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  std::vector<JTerm> out;
  auto st = symp_contract_monomial(s, top_mask(g));
  int m = degree(s);
  long long sign = (g - 1 + m) % 2 ? -1 : 1;
  for (int n = 0; n <= g; ++n) {
    ExtElem wn = omega_divided_power(g, n);
    for (const auto& [p, one] : wn.terms()) {
      for (auto [sm, ss] : st)
        for (auto [tm, ts] : symp_contract_monomial(p, sm)) out.push_back({tm, g - m - n, sign * (1LL << n) * ss * ts});
    }
  }
  return cache.emplace(key, std::move(out)).first->second;
}

using SlotVec = std::map<Slot, Integer>;

void add_to(SlotVec& v, Slot t, const Integer& c) {
  auto [it, fresh] = v.emplace(t, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) v.erase(it);
  }
}

// π_{i>=0, j>=-|k|} U^{|k|} J
SlotVec apply_a(int g, int k, const SlotVec& v) {
  int ak = std::abs(k);
  SlotVec out;
  for (const auto& [s, c] : v) {
    for (auto [t, jc] : j_map_basis(g, s)) {
      Slot u{t.s, t.l + ak};
      Pos p = position(u, g);
      if (p.i >= 0 && p.j >= -ak) add_to(out, u, c * jc);
    }
  }
  return out;
}

// Orders v_0 = s, v_l = A v_{l-1} until zero (k != 0) or up to trunc orders (k = 0).
const std::vector<SlotVec>& tail_orders(int g, int k, Slot s, int trunc) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, int, Slot>, std::vector<SlotVec>> cache;
  int limit = k == 0 ? trunc : 0;
  auto key = std::tuple{g, std::abs(k), limit, s};
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  std::vector<SlotVec> orders{SlotVec{{s, 1}}};
  while (true) {
    if (k == 0 && static_cast<int>(orders.size()) >= trunc) break;
    SlotVec next = apply_a(g, k, orders.back());
    if (next.empty()) break;
    if (k != 0 && orders.size() > 64) throw InternalError("embedding tail failed to terminate");
    orders.push_back(std::move(next));
  }
  std::lock_guard lock(mu);
  return cache.emplace(key, std::move(orders)).first->second;
}

LaurentSeries coerce(const LaurentSeries& c, int k, int trunc) {
  if (k != 0 || c.truncated()) return c;
  return c.with_trunc(trunc);
}

PlaneElem conj_plane(const PlaneElem& y) {
  PlaneElem out(y.genus());
  for (const auto& [t, c] : y.terms()) out.add_term(t, conjugate(c));
  return out;
}

void check_k(int g, int k) {
  if (std::abs(k) > g - 1) throw InputError("|k| must be at most g-1");
}

}  // namespace

std::vector<std::pair<Slot, long long>> j_map_basis(int g, Slot t) {
  std::vector<std::pair<Slot, long long>> out;
  for (const auto& jt : j_terms(g, t.s)) {
    Slot u{jt.t, t.l + jt.dl};
    if (position(u, g).j >= 0) out.emplace_back(u, jt.c);
  }
  return out;
}

PlaneElem j_map(const PlaneElem& x) {
  int g = x.genus();
  PlaneElem out(g);
  for (const auto& [t, c] : x.terms()) {
    if (position(t, g).i < 0) throw InputError("j_map input must lie in H{i >= 0}");
    for (auto [u, jc] : j_map_basis(g, t)) out.add_term(u, c.scaled(jc));
  }
  return out;
}

Region pi_region(int k) { return Region::i_ge0() & Region::j_ge(k); }

std::pair<PlaneElem, PlaneElem> f0_f1(const PlaneElem& x, int k) {
  PlaneElem p = project(x, pi_region(k));
  PlaneElem a = project(u_act(j_map(x), -k), pi_region(k));
  if (k <= 0) return {p, a};
  return {a, p};
}

Rational degree_shift(int l, int k, int n) {
  if (n <= 0) throw InputError("degree_shift needs n > 0");
  Integer q = Integer(2 * k) - Integer(2 * l - 1) * n;
  return Rational(1, 4) * (Rational(1) - Rational(q * q, Integer(n)));
}

PlaneElem twisted_f(const PlaneElem& x, int k) {
  auto [f0, f1] = f0_f1(x, k);
  return f0 + f1.scaled(LaurentSeries::monomial(1, 1));
}

int xgd_d(int g, int k) { return g - 1 - std::abs(k); }

long long xgd_rank(int g, int d) {
  long long r = 0;
  for (int i = 0; i <= d; ++i) r += binom(2 * g, i) * (d + 1 - i);
  return r;
}

std::vector<Slot> xgd_basis(int g, int d) {
  std::vector<Mask> subsets;
  for (Mask s = 0; s <= top_mask(g); ++s)
    if (degree(s) <= d) subsets.push_back(s);
  std::sort(subsets.begin(), subsets.end(), mask_less);
  std::vector<Slot> out;
  for (int m = 0; m <= d; ++m)
    for (Mask s : subsets)
      if (degree(s) + m <= d) out.push_back({s, -m});
  return out;
}

XgdElem::XgdElem(int g, int k) : g_(g), k_(k) {
  if (g < 1 || g > kMaxGenus) throw InputError("genus out of range");
  check_k(g, k);
}

XgdElem XgdElem::generator(int g, int k, Slot t, const LaurentSeries& c) {
  XgdElem x(g, k);
  x.add_term(t, c);
  return x;
}

LaurentSeries XgdElem::coeff(Slot t) const {
  auto it = coords_.find(t);
  return it == coords_.end() ? LaurentSeries() : it->second;
}

void XgdElem::add_term(Slot t, const LaurentSeries& c) {
  if (!xgd_region(g_, d()).contains(position(t, g_))) throw InputError("coordinate outside X(g,d)");
  auto it = coords_.find(t);
  if (it == coords_.end()) {
    if (!c.is_zero()) coords_.emplace(t, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) coords_.erase(it);
}

XgdElem& XgdElem::operator+=(const XgdElem& o) {
  if (g_ != o.g_ || k_ != o.k_) throw InputError("X(g,d) shape mismatch");
  for (const auto& [t, c] : o.coords_) add_term(t, c);
  return *this;
}

XgdElem& XgdElem::operator-=(const XgdElem& o) { return *this += o.scaled(LaurentSeries::constant(-1)); }

XgdElem XgdElem::scaled(const LaurentSeries& c) const {
  XgdElem r(g_, k_);
  for (const auto& [t, v] : coords_) r.add_term(t, v * c);
  return r;
}

PlaneElem XgdElem::plane() const {
  PlaneElem y(g_);
  for (const auto& [t, c] : coords_) y.add_term(t, c);
  return y;
}

namespace {

PlaneElem restricted_coerced(const XgdElem& x, int trunc) {
  PlaneElem y(x.genus());
  for (const auto& [t, c] : x.coords()) y.add_term(t, coerce(c, x.k(), trunc));
  return y;
}

}  // namespace

PlaneElem embed(const XgdElem& x, int trunc) {
  int g = x.genus(), k = x.k();
  PlaneElem y(g);
  std::optional<Window> w;
  if (k == 0) w = common_window(restricted_coerced(x, trunc));
  for (const auto& [s, c0] : x.coords()) {
    LaurentSeries c = coerce(c0, k, trunc);
    const auto& orders = tail_orders(g, k, s, w ? w->len : trunc);
    for (std::size_t l = 0; l < orders.size(); ++l) {
      int e = static_cast<int>(l);
      LaurentSeries unit = LaurentSeries::monomial(l % 2 ? -1 : 1, k > 0 ? -e : e);
      LaurentSeries cl = c * unit;
      if (w) cl = cl.restricted(*w);
      for (const auto& [t, v] : orders[l]) y.add_term(t, cl.scaled(v));
    }
  }
  return y;
}

XgdElem section(const PlaneElem& y, int k) {
  XgdElem x(y.genus(), k);
  Region r = xgd_region(y.genus(), x.d());
  for (const auto& [t, c] : y.terms())
    if (r.contains(position(t, y.genus()))) x.add_term(t, c);
  return x;
}

std::vector<KernelElement> kernel_basis(int g, int k, int trunc) {
  check_k(g, k);
  std::vector<KernelElement> out;
  LaurentSeries one = coerce(LaurentSeries::constant(1), k, trunc);
  for (Slot s : xgd_basis(g, xgd_d(g, k))) {
    XgdElem x = XgdElem::generator(g, k, s, one);
    PlaneElem y = embed(x, trunc);
    out.push_back({s, std::move(x), std::move(y)});
  }
  return out;
}

PlaneElem kernel_residual(const PlaneElem& y, int k) {
  if (k <= 0) return twisted_f(y, k);
  return conj_plane(twisted_f(conj_plane(y), -k));
}

PlaneElem surjectivity_witness(const PlaneElem& y, int trunc) {
  int g = y.genus();
  PlaneElem cur(g);
  for (const auto& [t, c] : y.terms()) {
    if (!pi_region(0).contains(position(t, g))) throw InputError("target must lie in H{i >= 0, j >= 0}");
    cur.add_term(t, coerce(c, 0, trunc));
  }
  PlaneElem x = cur;
  std::optional<Window> w = common_window(cur);
  LaurentSeries minus_t = LaurentSeries::monomial(-1, 1);
  for (int l = 1; w && l < w->len && !cur.is_zero(); ++l) {
    cur = restricted(project(j_map(cur), Region::i_ge0()).scaled(minus_t), *w);
    x += cur;
  }
  return x;
}

XgdElem corrected_action(const ExtElem& gamma, const XgdElem& x, int trunc) {
  return section(standard_action(gamma, embed(x, trunc)), x.k());
}

XgdElem corrected_action(AlgMonomial m, const XgdElem& x, int trunc) {
  return section(mono_action(m, embed(x, trunc)), x.k());
}

XgdElem corrected_action(const AlgElem& a, const XgdElem& x, int trunc) {
  return section(alg_action(a, embed(x, trunc)), x.k());
}

XgdElem circle_action(const XgdElem& x) { return XgdElem(x.genus(), x.k()); }

XgdElem standard_action(const ExtElem& gamma, const XgdElem& x) {
  return section(standard_action(gamma, x.plane()), x.k());
}

XgdElem standard_action(AlgMonomial m, const XgdElem& x) { return section(mono_action(m, x.plane()), x.k()); }

LaurentSeries lowest_height_projection(const XgdElem& x) { return x.coeff(Slot{0, 0}); }

}  // namespace tf
