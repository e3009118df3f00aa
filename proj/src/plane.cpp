#include "tfloer/plane.hpp"

#include <algorithm>
#include <cstdlib>

namespace tf {

PlaneElem::PlaneElem(int g) : g_(g) {
  if (g < 1 || g > kMaxGenus) throw InputError("genus out of range");
}

PlaneElem PlaneElem::slot(int g, Slot t, const LaurentSeries& c) {
  PlaneElem x(g);
  x.add_term(t, c);
  return x;
}

LaurentSeries PlaneElem::coeff(Slot t) const {
  auto it = terms_.find(t);
  return it == terms_.end() ? LaurentSeries() : it->second;
}

void PlaneElem::add_term(Slot t, const LaurentSeries& c) {
  if (t.s & ~top_mask(g_)) throw InputError("basis index exceeds 2g");
  auto it = terms_.find(t);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(t, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

PlaneElem& PlaneElem::operator+=(const PlaneElem& o) {
  if (g_ != o.g_) throw InputError("genus mismatch");
  for (const auto& [t, c] : o.terms_) add_term(t, c);
  return *this;
}

PlaneElem& PlaneElem::operator-=(const PlaneElem& o) { return *this += -o; }

PlaneElem PlaneElem::scaled(const LaurentSeries& c) const {
  PlaneElem r(g_);
  for (const auto& [t, v] : terms_) r.add_term(t, v * c);
  return r;
}

PlaneElem PlaneElem::operator-() const {
  PlaneElem r(g_);
  for (const auto& [t, v] : terms_) r.terms_.emplace(t, -v);
  return r;
}

bool RegionAtom::contains(Pos p) const {
  switch (kind) {
    case Kind::i_ge0: return p.i >= 0;
    case Kind::i_lt0: return p.i < 0;
    case Kind::j_ge: return p.j >= c;
    case Kind::j_lt: return p.j < c;
    case Kind::max_eq0: return std::max(p.i, p.j - c) == 0;
    case Kind::min_ge0: return std::min(p.i, p.j - c) >= 0;
    case Kind::min_eq0: return std::min(p.i, p.j - c) == 0;
  }
  return false;
}

bool Region::contains(Pos p) const {
  return std::all_of(atoms.begin(), atoms.end(), [&](const RegionAtom& a) { return a.contains(p); });
}

Region operator&(Region a, const Region& b) {
  a.atoms.insert(a.atoms.end(), b.atoms.begin(), b.atoms.end());
  return a;
}

Region xgd_region(int g, int d) { return Region::i_ge0() & Region::j_lt(d + 1 - g); }

PlaneElem project(const PlaneElem& x, const Region& r) {
  PlaneElem out(x.genus());
  for (const auto& [t, c] : x.terms())
    if (r.contains(position(t, x.genus()))) out.add_term(t, c);
  return out;
}

PlaneElem u_act(const PlaneElem& x, int n) {
  PlaneElem out(x.genus());
  for (const auto& [t, c] : x.terms()) out.add_term({t.s, t.l + n}, c);
  return out;
}

std::vector<std::pair<Slot, int>> standard_action_basis(int i, Slot t) {
  std::vector<std::pair<Slot, int>> out;
  if (auto c = contract_basis(i, t.s)) out.push_back({{c->first, t.l}, c->second});
  auto [p, s] = pd_basis(i);
  if (int w = wedge_sign(bit(p), t.s)) out.push_back({{t.s | bit(p), t.l + 1}, s * w});
  return out;
}

PlaneElem standard_action(const ExtElem& gamma, const PlaneElem& x) {
  if (gamma.genus() != x.genus()) throw InputError("genus mismatch");
  if (!gamma.is_zero() && gamma.homogeneous_degree() != 1) throw InputError("action needs a degree-1 class");
  PlaneElem out(x.genus());
  for (const auto& [mg, cg] : gamma.terms()) {
    int i = std::countr_zero(mg) + 1;
    for (const auto& [t, c] : x.terms())
      for (auto [t2, s] : standard_action_basis(i, t)) out.add_term(t2, c.scaled(cg * s));
  }
  return out;
}

long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

RegionRank region_rank(const Region& r, int g) {
  int reach = 2 * g + 4;
  for (const auto& a : r.atoms) reach = std::max(reach, std::abs(a.c) + 2 * g + 4);
  RegionRank out;
  for (int m = 0; m <= 2 * g; ++m) {
    auto inside = [&](int l) { return r.contains({-l, m - g - l}); };
    if (inside(reach + 1) || inside(-reach - 1)) return {true, 0};
    for (int l = -reach; l <= reach; ++l)
      if (inside(l)) out.rank += binom(2 * g, m);
  }
  return out;
}

long long hfk_rank(int g, int j) { return binom(2 * g, g + j); }

std::optional<Window> common_window(const PlaneElem& x) {
  std::optional<Window> w;
  for (const auto& [t, c] : x.terms()) {
    if (!c.window()) continue;
    if (w && w->len != c.window()->len) throw InputError("mismatched truncation lengths");
    if (!w || c.window()->lo < w->lo) w = c.window();
  }
  return w;
}

PlaneElem restricted(const PlaneElem& x, Window w) {
  PlaneElem out(x.genus());
  for (const auto& [t, c] : x.terms()) out.add_term(t, c.restricted(w));
  return out;
}

std::string coeff_text(const LaurentSeries& c) {
  if (!c.truncated() && c.terms().size() == 1 && c.terms().begin()->first == 0) return c.terms().begin()->second.str();
  return "[" + to_text(c) + "]";
}

std::string dump(const PlaneElem& x) {
  std::vector<std::pair<Slot, LaurentSeries>> items(x.terms().begin(), x.terms().end());
  std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    if (a.first.l != b.first.l) return a.first.l > b.first.l;
    return mask_less(a.first.s, b.first.s);
  });
  std::string out;
  for (const auto& [t, c] : items) {
    Pos p = position(t, x.genus());
    out += mask_text(t.s) + " " + std::to_string(t.l) + " (" + std::to_string(p.i) + "," + std::to_string(p.j) + ") " +
           coeff_text(c) + "\n";
  }
  return out;
}

}  // namespace tf

namespace tf {

int degree(AlgMonomial m) { return 2 * m.a + degree(m.t); }

std::string to_text(AlgMonomial m) {
  std::string u = m.a == 0 ? "" : (m.a == 1 ? "U" : "U^" + std::to_string(m.a));
  if (!m.t) return u.empty() ? "1" : u;
  return u.empty() ? mask_text(m.t) : u + "*" + mask_text(m.t);
}

PlaneElem mono_action(AlgMonomial m, const PlaneElem& x) {
  PlaneElem y = u_act(x, m.a);
  std::vector<int> idx;
  for (Mask r = m.t; r; r &= r - 1) idx.push_back(std::countr_zero(r) + 1);
  for (auto it = idx.rbegin(); it != idx.rend(); ++it) y = standard_action(ExtElem::basis(x.genus(), *it), y);
  return y;
}

PlaneElem alg_action(const AlgElem& a, const PlaneElem& x) {
  PlaneElem out(x.genus());
  for (const auto& [m, c] : a) out += mono_action(m, x).scaled(LaurentSeries::constant(c));
  return out;
}

}  // namespace tf
