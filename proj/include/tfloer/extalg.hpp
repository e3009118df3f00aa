#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tfloer/groupring.hpp"

namespace tf {

// Bit i-1 stands for e_i.
using Mask = std::uint32_t;

inline constexpr int kMaxGenus = 15;

inline int degree(Mask m) { return std::popcount(m); }
inline Mask bit(int i) { return Mask{1} << (i - 1); }
inline Mask top_mask(int g) { return g == 16 ? ~Mask{0} : (Mask{1} << (2 * g)) - 1; }

// Order used for bases and display: by degree, then lexicographic in the index list.
bool mask_less(Mask a, Mask b);

// Sign of e_A ∧ e_B, 0 when A and B overlap.
int wedge_sign(Mask a, Mask b);

// ω(e_a, e_b) for 1-based indices.
int omega(int a, int b);

// Poincaré dual of a basis class: e_{2i-1} -> e_{2i}, e_{2i} -> -e_{2i-1}.
std::pair<int, int> pd_basis(int i);

struct SympBasis {
  int g = 1;
  int rank() const { return 2 * g; }
};

class ExtElem {
 public:
  using Terms = std::map<Mask, Integer>;

  explicit ExtElem(int g = 1);
  ExtElem(int g, Terms terms);
  static ExtElem one(int g) { return monomial(g, 0); }
  static ExtElem basis(int g, int i) { return monomial(g, bit(i)); }
  static ExtElem monomial(int g, Mask m, const Integer& c = 1);

  int genus() const { return g_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coeff(Mask m) const;
  std::optional<int> homogeneous_degree() const;

  void add_term(Mask m, const Integer& c);
  ExtElem& operator+=(const ExtElem& o);
  ExtElem& operator-=(const ExtElem& o);
  ExtElem scaled(const Integer& c) const;
  ExtElem operator-() const { return scaled(-1); }
  friend ExtElem operator+(ExtElem a, const ExtElem& b) { return a += b; }
  friend ExtElem operator-(ExtElem a, const ExtElem& b) { return a -= b; }
  friend bool operator==(const ExtElem&, const ExtElem&) = default;

 private:
  void check(const ExtElem& o) const;

  int g_;
  Terms terms_;
};

ExtElem wedge(const ExtElem& a, const ExtElem& b);
ExtElem dual_contract(const ExtElem& gamma, const ExtElem& a);
ExtElem symp_contract(const ExtElem& beta, const ExtElem& alpha);
ExtElem star(const ExtElem& alpha);
ExtElem omega_divided_power(int g, int n);
ExtElem pd(const ExtElem& gamma);
// Induced map on Λ*V of the matrix f, where f e_i = Σ_j f[j][i] e_j.
ExtElem apply_linear(const std::vector<std::vector<long long>>& f, const ExtElem& a);

// Monomial kernels on masks; each returns (mask, sign) terms.
// ι_{e_i} e_S
std::optional<std::pair<Mask, int>> contract_basis(int i, Mask s);
// e_b ∠ e_S
std::vector<std::pair<Mask, int>> symp_contract_basis(int b, Mask s);
// e_T ∠ e_S, nested from the last factor of T inward
std::vector<std::pair<Mask, int>> symp_contract_monomial(Mask t, Mask s);

std::string mask_text(Mask m);
Mask mask_from_text(std::string_view text, int g);
std::string to_text(const ExtElem& a);

}  // namespace tf
