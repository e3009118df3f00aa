#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "tfloer/extalg.hpp"
#include "tfloer/groupring.hpp"

namespace tf {

// Λ^|s| ⊗ U^l, sitting at (i, j) = (-l, |s| - g - l).
struct Slot {
  Mask s = 0;
  int l = 0;
  auto operator<=>(const Slot&) const = default;
};

struct Pos {
  int i, j;
};

inline Pos position(Slot t, int g) { return {-t.l, degree(t.s) - g - t.l}; }
inline int grading(Slot t, int g) { return degree(t.s) - g - 2 * t.l; }

class PlaneElem {
 public:
  using Terms = std::map<Slot, LaurentSeries>;

  explicit PlaneElem(int g = 1);
  static PlaneElem slot(int g, Slot t, const LaurentSeries& c = LaurentSeries::constant(1));

  int genus() const { return g_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  LaurentSeries coeff(Slot t) const;

  void add_term(Slot t, const LaurentSeries& c);
  PlaneElem& operator+=(const PlaneElem& o);
  PlaneElem& operator-=(const PlaneElem& o);
  PlaneElem scaled(const LaurentSeries& c) const;
  PlaneElem operator-() const;
  friend PlaneElem operator+(PlaneElem a, const PlaneElem& b) { return a += b; }
  friend PlaneElem operator-(PlaneElem a, const PlaneElem& b) { return a -= b; }
  friend bool operator==(const PlaneElem&, const PlaneElem&) = default;

 private:
  int g_;
  Terms terms_;
};

struct RegionAtom {
  enum class Kind { i_ge0, i_lt0, j_ge, j_lt, max_eq0, min_ge0, min_eq0 };
  Kind kind;
  int c = 0;  // the threshold for j_ge/j_lt, the shift k for the max/min atoms
  bool contains(Pos p) const;
};

struct Region {
  std::vector<RegionAtom> atoms;  // conjunction; empty means the whole plane

  bool contains(Pos p) const;
  friend Region operator&(Region a, const Region& b);

  static Region whole() { return {}; }
  static Region i_ge0() { return {{{RegionAtom::Kind::i_ge0}}}; }
  static Region i_lt0() { return {{{RegionAtom::Kind::i_lt0}}}; }
  static Region j_ge(int c) { return {{{RegionAtom::Kind::j_ge, c}}}; }
  static Region j_lt(int c) { return {{{RegionAtom::Kind::j_lt, c}}}; }
  static Region max_eq0(int k) { return {{{RegionAtom::Kind::max_eq0, k}}}; }
  static Region min_ge0(int k) { return {{{RegionAtom::Kind::min_ge0, k}}}; }
  static Region min_eq0(int k) { return {{{RegionAtom::Kind::min_eq0, k}}}; }
};

// H{i >= 0 and j < d+1-g}
Region xgd_region(int g, int d);

PlaneElem project(const PlaneElem& x, const Region& r);
PlaneElem u_act(const PlaneElem& x, int n);
PlaneElem standard_action(const ExtElem& gamma, const PlaneElem& x);

// Integer coefficient kernel of the standard action of e_i on one slot.
std::vector<std::pair<Slot, int>> standard_action_basis(int i, Slot t);

struct RegionRank {
  bool infinite = false;
  long long rank = 0;
};
RegionRank region_rank(const Region& r, int g);
long long hfk_rank(int g, int j);
long long binom(int n, int k);

// Common window of all coefficients: lowest lo, shared length; nullopt when nothing is truncated.
std::optional<Window> common_window(const PlaneElem& x);
PlaneElem restricted(const PlaneElem& x, Window w);

std::string coeff_text(const LaurentSeries& c);
// One line per term: "S l (i,j) coef"
std::string dump(const PlaneElem& x);

}  // namespace tf

namespace tf {

// Monomial U^a ⊗ e_T of Λ*V ⊗ Z[U]; acts by U^a first, then the e_i of T from last to first.
struct AlgMonomial {
  Mask t = 0;
  int a = 0;
  auto operator<=>(const AlgMonomial&) const = default;
};

int degree(AlgMonomial m);
std::string to_text(AlgMonomial m);

using AlgElem = std::map<AlgMonomial, Integer>;

PlaneElem mono_action(AlgMonomial m, const PlaneElem& x);
PlaneElem alg_action(const AlgElem& a, const PlaneElem& x);

}  // namespace tf
