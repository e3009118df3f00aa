#include "tfloer/pairing.hpp"

#include <algorithm>
#include <memory>
#include <mutex>

namespace tf {

int base_pair(int x_id, int i, int y_id, int j) { return x_id == y_id && j == -i - 1 ? 1 : 0; }

int KroneckerFamily::index(Slot s) const {
  auto it = std::lower_bound(basis.begin(), basis.end(), s, [](Slot a, Slot b) {
    if (a.l != b.l) return a.l > b.l;
    return mask_less(a.s, b.s);
  });
  if (it == basis.end() || *it != s) throw InputError("slot is not a basis element of X(g,d)");
  return static_cast<int>(it - basis.begin());
}

XgdElem KroneckerFamily::top() const { return XgdElem::generator(g, k, Slot{0, -d}); }

namespace {

// Standard action of U^a e_T on a single slot, integer coefficients.
std::map<Slot, long long> mono_on_slot(AlgMonomial m, Slot s) {
  std::map<Slot, long long> cur{{{s.s, s.l + m.a}, 1}};
  std::vector<int> idx;
  for (Mask r = m.t; r; r &= r - 1) idx.push_back(std::countr_zero(r) + 1);
  for (auto it = idx.rbegin(); it != idx.rend(); ++it) {
    std::map<Slot, long long> next;
    for (const auto& [t, c] : cur)
      for (auto [u, sg] : standard_action_basis(*it, t)) next[u] += c * sg;
    std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
    cur = std::move(next);
  }
  return cur;
}

std::unique_ptr<KroneckerFamily> build_family(int g, int k) {
  auto f = std::make_unique<KroneckerFamily>();
  f->g = g;
  f->k = k;
  f->d = xgd_d(g, k);
  f->basis = xgd_basis(g, f->d);
  for (Slot s : f->basis) f->monomials.push_back({s.s, -s.l});
  const int n = static_cast<int>(f->basis.size());

  std::vector<IntRow> m(n);
  for (int r = 0; r < n; ++r) {
    int deg = degree(f->monomials[r]);
    for (int c = 0; c < n; ++c) {
      if (grading(f->basis[c], g) + g != deg) continue;
      auto img = mono_on_slot(f->monomials[r], f->basis[c]);
      if (auto it = img.find(Slot{0, 0}); it != img.end()) m[r][c] = it->second;
    }
  }
  auto c = integer_inverse(m);
  if (!c) throw InternalError("Kronecker dual system is singular or not unimodular");
  for (int b = 0; b < n; ++b) {
    AlgElem e;
    for (const auto& [col, v] : (*c)[b]) e[f->monomials[col]] = v;
    f->kron.push_back(std::move(e));
  }

  Slot top{0, -f->d};
  Region xr = xgd_region(g, f->d);
  std::vector<IntRow> p(n);
  for (int b = 0; b < n; ++b) {
    XgdElem x(g, k);
    for (const auto& [mono, v] : f->kron[b])
      for (const auto& [t, sg] : mono_on_slot(mono, top))
        if (xr.contains(position(t, g))) x.add_term(t, LaurentSeries::constant(v * sg));
    for (const auto& [t, v] : x.coords()) p[b][f->index(t)] = v.coeff(0);
    f->poin.push_back(std::move(x));
  }
  auto q = integer_inverse(transpose(p, n));
  if (!q) throw InternalError("Poincare dual system is singular or not unimodular");
  f->gram = *q;
  for (int i = 0; i < n; ++i) {
    AlgElem e;
    for (const auto& [j, v] : f->gram[i])
      for (const auto& [mono, w] : f->kron[j]) {
        Integer& x = e[mono];
        x += v * w;
        if (x == 0) e.erase(mono);
      }
    f->kron_poin.push_back(std::move(e));
  }
  return f;
}

}  // namespace

const KroneckerFamily& kronecker_family(int g, int k) {
  if (g < 1 || g > kMaxGenus) throw InputError("genus out of range");
  if (std::abs(k) > g - 1) throw InputError("|k| must be at most g-1");
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<KroneckerFamily>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{g, k}];
  if (!slot) slot = build_family(g, k);
  return *slot;
}

LaurentSeries unit(const KroneckerFamily& f, std::size_t beta, int trunc) {
  LaurentSeries one = LaurentSeries::constant(1);
  if (f.k == 0) one = one.with_trunc(trunc);
  XgdElem gen = XgdElem::generator(f.g, f.k, f.basis.at(beta), one);
  return lowest_height_projection(corrected_action(f.kron.at(beta), gen, trunc));
}

DualBasisData dual_basis(int g, int k, int trunc) {
  DualBasisData out{kronecker_family(g, k), {}};
  for (std::size_t b = 0; b < out.family.basis.size(); ++b) out.units.push_back(unit(out.family, b, trunc));
  return out;
}

LaurentSeries module_pair(const XgdElem& xi, const XgdElem& eta, bool conj_second) {
  if (xi.genus() != eta.genus() || xi.k() != eta.k()) throw InputError("X(g,d) shape mismatch");
  const KroneckerFamily& f = kronecker_family(xi.genus(), xi.k());
  LaurentSeries out;
  for (const auto& [a, ca] : xi.coords()) {
    for (const auto& [b, w] : f.gram[f.index(a)]) {
      LaurentSeries cb = eta.coeff(f.basis[b]);
      if (cb.is_zero()) continue;
      out += (ca * (conj_second ? conjugate(cb) : cb)).scaled(w);
    }
  }
  return out;
}

LaurentSeries rel_inv_torus_disk(int trunc) {
  LaurentSeries s = LaurentSeries::poly({-1, 1}).with_trunc(trunc);
  return canonical_unit_form(novikov_invert(s));
}

LaurentSeries rel_inv_torus_disk(int alpha_degree, int trunc) {
  if (alpha_degree != 0) return LaurentSeries().with_trunc(trunc);
  return rel_inv_torus_disk(trunc);
}

XgdElem rel_inv_sigma_disk(AlgMonomial alpha, int g, int k, int trunc) {
  const KroneckerFamily& f = kronecker_family(g, k);
  LaurentSeries one = LaurentSeries::constant(1);
  if (k == 0) one = one.with_trunc(trunc);
  XgdElem xi = XgdElem::generator(g, k, Slot{0, -f.d}, one);
  if (alpha == AlgMonomial{}) return xi;
  return corrected_action(alpha, xi, trunc);
}

LaurentSeries t3_reduce(const GroupRingElem& a) {
  if (a.rank() != 3) throw InputError("t3_reduce needs a rank-3 group ring element");
  if (a.augmentation() != 0) throw InputError("t3_reduce needs an element of the augmentation kernel");
  return divide_exact(specialize_last(a), LaurentSeries::poly({-1, 1}));
}

}  // namespace tf
