#pragma once

#include <map>
#include <utility>
#include <vector>

#include "tfloer/plane.hpp"

namespace tf {

// J(e_S ⊗ U^l), projected to {j >= 0}.
std::vector<std::pair<Slot, long long>> j_map_basis(int g, Slot t);
PlaneElem j_map(const PlaneElem& x);

// π_k = projection onto {i >= 0, j >= k}
Region pi_region(int k);
std::pair<PlaneElem, PlaneElem> f0_f1(const PlaneElem& x, int k);
Rational degree_shift(int l, int k, int n);
PlaneElem twisted_f(const PlaneElem& x, int k);

// d = g-1-|k|
int xgd_d(int g, int k);
long long xgd_rank(int g, int d);
// Monomial basis of X(g,d): tower level ascending, then subset.
std::vector<Slot> xgd_basis(int g, int d);

class XgdElem {
 public:
  using Coords = std::map<Slot, LaurentSeries>;

  XgdElem(int g, int k);
  static XgdElem generator(int g, int k, Slot t, const LaurentSeries& c = LaurentSeries::constant(1));

  int genus() const { return g_; }
  int k() const { return k_; }
  int d() const { return xgd_d(g_, k_); }
  const Coords& coords() const { return coords_; }
  bool is_zero() const { return coords_.empty(); }
  LaurentSeries coeff(Slot t) const;
  int height(Slot t) const { return grading(t, g_); }

  void add_term(Slot t, const LaurentSeries& c);
  XgdElem& operator+=(const XgdElem& o);
  XgdElem& operator-=(const XgdElem& o);
  XgdElem scaled(const LaurentSeries& c) const;
  friend XgdElem operator+(XgdElem a, const XgdElem& b) { return a += b; }
  friend XgdElem operator-(XgdElem a, const XgdElem& b) { return a -= b; }
  friend bool operator==(const XgdElem&, const XgdElem&) = default;

  // Standard embedding as a plane element.
  PlaneElem plane() const;

 private:
  int g_, k_;
  Coords coords_;
};

// Plane-order expansion x + Σ_{l>=1} (-t U^{|k|} J)^l x under π_{-|k|}; t -> 1/t when k > 0.
PlaneElem embed(const XgdElem& x, int trunc = kDefaultTrunc);
XgdElem section(const PlaneElem& y, int k);

struct KernelElement {
  Slot generator;
  XgdElem element;
  PlaneElem embedded;
};
std::vector<KernelElement> kernel_basis(int g, int k, int trunc = kDefaultTrunc);

// Value of the twisted map whose kernel the embedding targets: twisted_f for k <= 0,
// its mirror conj(twisted_f(conj y, -k)) for k > 0.
PlaneElem kernel_residual(const PlaneElem& y, int k);

PlaneElem surjectivity_witness(const PlaneElem& y, int trunc = kDefaultTrunc);

XgdElem corrected_action(const ExtElem& gamma, const XgdElem& x, int trunc = kDefaultTrunc);
XgdElem corrected_action(AlgMonomial m, const XgdElem& x, int trunc = kDefaultTrunc);
XgdElem corrected_action(const AlgElem& a, const XgdElem& x, int trunc = kDefaultTrunc);
// The action of the S^1 class; identically zero.
XgdElem circle_action(const XgdElem& x);
XgdElem standard_action(const ExtElem& gamma, const XgdElem& x);
XgdElem standard_action(AlgMonomial m, const XgdElem& x);
LaurentSeries lowest_height_projection(const XgdElem& x);

}  // namespace tf
