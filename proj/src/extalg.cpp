#include "tfloer/extalg.hpp"

#include <algorithm>
#include <cctype>

namespace tf {

bool mask_less(Mask a, Mask b) {
  int da = degree(a), db = degree(b);
  if (da != db) return da < db;
  // lexicographic on ascending index lists: the first differing lowest bit decides
  Mask diff = a ^ b;
  if (!diff) return false;
  Mask low = diff & (~diff + 1);
  return (a & low) != 0;
}

int wedge_sign(Mask a, Mask b) {
  if (a & b) return 0;
  int swaps = 0;
  for (Mask r = b; r; r &= r - 1) {
    Mask low = r & (~r + 1);
    swaps += degree(a & ~(low | (low - 1)));
  }
  return swaps % 2 ? -1 : 1;
}

int omega(int a, int b) {
  if (a % 2 == 1 && b == a + 1) return 1;
  if (a % 2 == 0 && b == a - 1) return -1;
  return 0;
}

std::pair<int, int> pd_basis(int i) {
  if (i % 2 == 1) return {i + 1, 1};
  return {i - 1, -1};
}

ExtElem::ExtElem(int g) : g_(g) {
  if (g < 1 || g > kMaxGenus) throw InputError("genus out of range");
}

ExtElem::ExtElem(int g, Terms terms) : ExtElem(g) {
  for (auto& [m, c] : terms) add_term(m, c);
}

ExtElem ExtElem::monomial(int g, Mask m, const Integer& c) {
  ExtElem r(g);
  r.add_term(m, c);
  return r;
}

Integer ExtElem::coeff(Mask m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

std::optional<int> ExtElem::homogeneous_degree() const {
  std::optional<int> d;
  for (const auto& [m, c] : terms_) {
    if (d && *d != degree(m)) return std::nullopt;
    d = degree(m);
  }
  return d;
}

void ExtElem::add_term(Mask m, const Integer& c) {
  if (m & ~top_mask(g_)) throw InputError("basis index exceeds 2g");
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void ExtElem::check(const ExtElem& o) const {
  if (g_ != o.g_) throw InputError("symplectic basis mismatch");
}

ExtElem& ExtElem::operator+=(const ExtElem& o) {
  check(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

ExtElem& ExtElem::operator-=(const ExtElem& o) { return *this += -o; }

ExtElem ExtElem::scaled(const Integer& c) const {
  ExtElem r(g_);
  for (const auto& [m, v] : terms_) r.add_term(m, v * c);
  return r;
}

ExtElem wedge(const ExtElem& a, const ExtElem& b) {
  if (a.genus() != b.genus()) throw InputError("symplectic basis mismatch");
  ExtElem r(a.genus());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms())
      if (int s = wedge_sign(ma, mb)) r.add_term(ma | mb, s * ca * cb);
  return r;
}

std::optional<std::pair<Mask, int>> contract_basis(int i, Mask s) {
  Mask b = bit(i);
  if (!(s & b)) return std::nullopt;
  int before = degree(s & (b - 1));
  return std::pair{s & ~b, before % 2 ? -1 : 1};
}

std::vector<std::pair<Mask, int>> symp_contract_basis(int b, Mask s) {
  // e_b ∠ (α_1 ... α_k) = Σ_ℓ (-1)^ℓ ω(α_ℓ, e_b) α with α_ℓ removed; only the ω-partner of b contributes
  std::vector<std::pair<Mask, int>> out;
  int a = b % 2 ? b + 1 : b - 1;
  int w = omega(a, b);
  if (auto c = contract_basis(a, s)) out.emplace_back(c->first, -c->second * w);
  return out;
}

std::vector<std::pair<Mask, int>> symp_contract_monomial(Mask t, Mask s) {
  std::vector<std::pair<Mask, int>> cur{{s, 1}};
  std::vector<int> idx;
  for (Mask r = t; r; r &= r - 1) idx.push_back(std::countr_zero(r) + 1);
  for (auto it = idx.rbegin(); it != idx.rend(); ++it) {
    std::vector<std::pair<Mask, int>> next;
    for (auto [m, sg] : cur)
      for (auto [m2, s2] : symp_contract_basis(*it, m)) next.emplace_back(m2, sg * s2);
    cur = std::move(next);
    if (cur.empty()) break;
  }
  return cur;
}

ExtElem dual_contract(const ExtElem& gamma, const ExtElem& a) {
  if (gamma.genus() != a.genus()) throw InputError("symplectic basis mismatch");
  if (gamma.homogeneous_degree() != 1) throw InputError("contraction needs a degree-1 class");
  ExtElem r(a.genus());
  for (const auto& [mg, cg] : gamma.terms()) {
    int i = std::countr_zero(mg) + 1;
    for (const auto& [m, c] : a.terms())
      if (auto t = contract_basis(i, m)) r.add_term(t->first, t->second * cg * c);
  }
  return r;
}

ExtElem symp_contract(const ExtElem& beta, const ExtElem& alpha) {
  if (beta.genus() != alpha.genus()) throw InputError("symplectic basis mismatch");
  ExtElem r(alpha.genus());
  for (const auto& [mb, cb] : beta.terms())
    for (const auto& [ma, ca] : alpha.terms())
      for (auto [m, s] : symp_contract_monomial(mb, ma)) r.add_term(m, s * cb * ca);
  return r;
}

ExtElem star(const ExtElem& alpha) {
  if (!alpha.is_zero() && !alpha.homogeneous_degree()) throw InputError("star needs a homogeneous input");
  return symp_contract(alpha, ExtElem::monomial(alpha.genus(), top_mask(alpha.genus())));
}

ExtElem omega_divided_power(int g, int n) {
  ExtElem r(g);
  if (n < 0 || n > g) return r;
  for (Mask pairs = 0; pairs < (Mask{1} << g); ++pairs) {
    if (degree(pairs) != n) continue;
    Mask m = 0;
    for (int i = 0; i < g; ++i)
      if (pairs & (Mask{1} << i)) m |= Mask{3} << (2 * i);
    r.add_term(m, 1);
  }
  return r;
}

ExtElem pd(const ExtElem& gamma) {
  if (!gamma.is_zero() && gamma.homogeneous_degree() != 1) throw InputError("PD needs a degree-1 class");
  ExtElem r(gamma.genus());
  for (const auto& [m, c] : gamma.terms()) {
    auto [j, s] = pd_basis(std::countr_zero(m) + 1);
    r.add_term(bit(j), s * c);
  }
  return r;
}

ExtElem apply_linear(const std::vector<std::vector<long long>>& f, const ExtElem& a) {
  int g = a.genus();
  if (static_cast<int>(f.size()) != 2 * g) throw InputError("map size differs from 2g");
  std::vector<ExtElem> images;
  for (int i = 0; i < 2 * g; ++i) {
    ExtElem v(g);
    for (int j = 0; j < 2 * g; ++j) {
      if (static_cast<int>(f[j].size()) != 2 * g) throw InputError("map is not square");
      v.add_term(bit(j + 1), f[j][i]);
    }
    images.push_back(std::move(v));
  }
  ExtElem r(g);
  for (const auto& [m, c] : a.terms()) {
    ExtElem p = ExtElem::one(g).scaled(c);
    for (Mask rest = m; rest; rest &= rest - 1) p = wedge(p, images[std::countr_zero(rest)]);
    r += p;
  }
  return r;
}

std::string mask_text(Mask m) {
  if (!m) return "1";
  std::string s;
  for (Mask r = m; r; r &= r - 1) s += "e" + std::to_string(std::countr_zero(r) + 1);
  return s;
}

Mask mask_from_text(std::string_view text, int g) {
  if (text == "1") return 0;
  Mask m = 0;
  int last = 0;
  std::size_t p = 0;
  while (p < text.size()) {
    if (text[p] != 'e') throw InputError("bad monomial '" + std::string(text) + "'");
    std::size_t q = p + 1;
    while (q < text.size() && std::isdigit(static_cast<unsigned char>(text[q]))) ++q;
    if (q == p + 1) throw InputError("bad monomial '" + std::string(text) + "'");
    int i = std::stoi(std::string(text.substr(p + 1, q - p - 1)));
    if (i <= last || i > 2 * g) throw InputError("monomial indices must ascend within 1..2g");
    m |= bit(i);
    last = i;
    p = q;
  }
  if (!m) throw InputError("empty monomial");
  return m;
}

std::string to_text(const ExtElem& a) {
  if (a.is_zero()) return "0";
  std::vector<std::pair<Mask, Integer>> items(a.terms().begin(), a.terms().end());
  std::sort(items.begin(), items.end(), [](const auto& x, const auto& y) { return mask_less(x.first, y.first); });
  std::string out;
  for (const auto& [m, c] : items) {
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    Integer mag = abs(c);
    if (mag != 1) out += mag.str() + (m ? "*" : "");
    if (m || mag == 1) out += (mag != 1 || m) ? mask_text(m) : "1";
  }
  return out;
}

}  // namespace tf
