#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tfloer/groupring.hpp"
#include "tfloer/extalg.hpp"

namespace tf {

struct ClassToken {
  std::string label;
  int k = 0;        // half the pairing of c_1 with the marked surface
  long long sq = 0;  // c_1^2
  friend bool operator==(const ClassToken&, const ClassToken&) = default;
};

// U^a ⊗ e_Σ ⊗ (external 1-classes), factors kept in that order.
struct AMonomial {
  int a = 0;
  Mask sigma = 0;
  std::vector<std::string> ext;  // strictly ascending labels

  int degree() const { return 2 * a + tf::degree(sigma) + static_cast<int>(ext.size()); }
  auto operator<=>(const AMonomial&) const = default;
};

std::string to_text(const AMonomial& m);
AMonomial amonomial_from_text(std::string_view text, int g);
// α ⊗ β as a signed canonical monomial; sign 0 when a class repeats.
std::pair<AMonomial, int> multiply(const AMonomial& x, const AMonomial& y);

struct ClosedInvariant {
  using Key = std::pair<std::string, AMonomial>;

  int genus = 1;
  long long euler = 0;
  long long sigma = 0;
  std::map<std::string, ClassToken> classes;
  std::map<Key, LaurentSeries> entries;

  void add_class(const ClassToken& c);
  // Accumulates; zero results are removed.
  void add_entry(const std::string& token, const AMonomial& m, const LaurentSeries& s);
  bool is_zero() const { return entries.empty(); }
  // Violated invariants, empty when consistent.
  std::vector<std::string> validate() const;
  friend bool operator==(const ClosedInvariant&, const ClosedInvariant&) = default;
};

ClosedInvariant parse_invariant(std::string_view text);
std::string print_invariant(const ClosedInvariant& x);

Rational d_invariant(long long sq, long long sigma, long long euler);
std::pair<long long, long long> sum_topology(long long e1, long long s1, long long e2, long long s2, int g);
ClassToken patch(const ClassToken& c1, const ClassToken& c2);

// Per token: shift every series by the token's lowest exponent (adjusting sq) and fix the
// sign so the first entry's lowest coefficient is positive. Drops unused classes.
ClosedInvariant normalize(const ClosedInvariant& x);

ClosedInvariant fibersum_genus1(const ClosedInvariant& a, const ClosedInvariant& b, int trunc = kDefaultTrunc);

using IntMatrix = std::vector<std::vector<long long>>;
IntMatrix identity_map(int g);
bool is_symplectic(const IntMatrix& f);
IntMatrix symplectic_inverse(const IntMatrix& f);
ClosedInvariant fibersum_genusg(const ClosedInvariant& a, const ClosedInvariant& b, const IntMatrix& f,
                                int trunc = kDefaultTrunc);

struct SimpleTypeReport {
  bool simple_type = true;
  bool sigma_simple_type = true;
  std::vector<std::string> flagged;
};
SimpleTypeReport simple_type_check(const ClosedInvariant& x);
bool torus_ideal_vanishing(const ClosedInvariant& x);

// t -> T^2, centred about 0 using the ±t^n freedom, leading coefficient positive.
LaurentSeries chern_series(const LaurentSeries& s);
struct DisplayRow {
  std::string token;
  std::string alpha;
  std::string rendered;
};
std::vector<DisplayRow> chern_display(const ClosedInvariant& x);

}  // namespace tf
