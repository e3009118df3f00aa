#pragma once

#include <vector>

#include "tfloer/linalg.hpp"
#include "tfloer/surgery.hpp"

namespace tf {

int base_pair(int x_id, int i, int y_id, int j);

// Integer part of the dual-basis data for X(g,d), d = g-1-|k|.
struct KroneckerFamily {
  int g = 1, k = 0, d = 0;
  std::vector<Slot> basis;
  std::vector<AlgMonomial> monomials;  // X̃: |T| + a <= d
  std::vector<AlgElem> kron;           // β̃ with β̃ ∩ β' = δ at the bottom
  std::vector<XgdElem> poin;           // β° = β̃ ∩ Ξ
  std::vector<AlgElem> kron_poin;      // β̃° with β̃° ∩ β'° = δ
  std::vector<IntRow> gram;            // pairing matrix on the basis, (P^T)^{-1}

  int index(Slot s) const;
  XgdElem top() const;
};

struct DualBasisData {
  KroneckerFamily family;
  std::vector<LaurentSeries> units;
};

// Cached per (g, k); the cache is filled once and read-only afterwards.
const KroneckerFamily& kronecker_family(int g, int k);
// u_β: bottom coefficient of β̃ acting on β through the non-standard embedding.
LaurentSeries unit(const KroneckerFamily& f, std::size_t beta, int trunc = kDefaultTrunc);
DualBasisData dual_basis(int g, int k, int trunc = kDefaultTrunc);

LaurentSeries module_pair(const XgdElem& xi, const XgdElem& eta, bool conj_second = true);

LaurentSeries rel_inv_torus_disk(int trunc = kDefaultTrunc);
// Value on an 𝔸 monomial of the given degree: the series above in degree 0, zero otherwise.
LaurentSeries rel_inv_torus_disk(int alpha_degree, int trunc);
XgdElem rel_inv_sigma_disk(AlgMonomial alpha, int g, int k, int trunc = kDefaultTrunc);

LaurentSeries t3_reduce(const GroupRingElem& a);

}  // namespace tf
