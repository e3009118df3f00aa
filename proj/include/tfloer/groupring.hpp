#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tfloer/error.hpp"

namespace tf {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline constexpr int kDefaultTrunc = 16;

// Coefficients are known exactly for exponents below lo + len and vanish below lo.
struct Window {
  int lo = 0;
  int len = 0;
  int cap() const { return lo + len; }
  friend bool operator==(const Window&, const Window&) = default;
};

class LaurentSeries {
 public:
  using Terms = std::map<int, Integer>;

  LaurentSeries() = default;
  explicit LaurentSeries(Terms terms, std::optional<Window> window = std::nullopt);

  static LaurentSeries constant(const Integer& c) { return monomial(c, 0); }
  static LaurentSeries monomial(const Integer& c, int exponent);
  // Exact polynomial from coefficients c[0] + c[1] t + ...
  static LaurentSeries poly(const std::vector<long long>& coeffs, int lowest = 0);

  const Terms& terms() const { return terms_; }
  const std::optional<Window>& window() const { return window_; }
  bool is_zero() const { return terms_.empty(); }
  bool truncated() const { return window_.has_value(); }
  std::optional<int> valuation() const;
  std::optional<int> top_exponent() const;
  Integer coeff(int e) const;

  // Attach a window of length len starting at the valuation (0 for the zero series).
  LaurentSeries with_trunc(int len) const;
  LaurentSeries without_trunc() const { return LaurentSeries(terms_); }
  // Keep only the terms inside w and adopt w as the window.
  LaurentSeries restricted(Window w) const;
  LaurentSeries shifted(int n) const;
  LaurentSeries scaled(const Integer& c) const;

  LaurentSeries operator-() const { return scaled(-1); }
  LaurentSeries& operator+=(const LaurentSeries& o);
  LaurentSeries& operator-=(const LaurentSeries& o);
  LaurentSeries& operator*=(const LaurentSeries& o);
  friend LaurentSeries operator+(LaurentSeries a, const LaurentSeries& b) { return a += b; }
  friend LaurentSeries operator-(LaurentSeries a, const LaurentSeries& b) { return a -= b; }
  friend LaurentSeries operator*(LaurentSeries a, const LaurentSeries& b) { return a *= b; }
  friend bool operator==(const LaurentSeries&, const LaurentSeries&) = default;

 private:
  void normalize();

  Terms terms_;
  std::optional<Window> window_;
};

enum class SeriesOp { add, mul };
LaurentSeries series_arith(const LaurentSeries& a, const LaurentSeries& b, SeriesOp op);

LaurentSeries novikov_invert(const LaurentSeries& s);
bool eq_up_to_unit(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries conjugate(const LaurentSeries& s);
// Shift so the lowest exponent is 0 and its coefficient is positive.
LaurentSeries canonical_unit_form(const LaurentSeries& s);
// Exact quotient of polynomials; throws InputError on a nonzero remainder.
LaurentSeries divide_exact(const LaurentSeries& num, const LaurentSeries& den);

std::string to_text(const LaurentSeries& s);
LaurentSeries series_from_text(std::string_view text);
// Human-readable form in the variable `var`, descending exponents: "T^2 - 2 + T^-2".
std::string render(const LaurentSeries& s, std::string_view var);

class GroupRingElem {
 public:
  using Exponents = std::vector<int>;
  using Terms = std::map<Exponents, Integer>;

  explicit GroupRingElem(int rank = 0) : rank_(rank) {}
  GroupRingElem(int rank, Terms terms);
  static GroupRingElem monomial(const Integer& c, Exponents e);

  int rank() const { return rank_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer augmentation() const;

  GroupRingElem& operator+=(const GroupRingElem& o);
  GroupRingElem& operator-=(const GroupRingElem& o);
  friend GroupRingElem operator+(GroupRingElem a, const GroupRingElem& b) { return a += b; }
  friend GroupRingElem operator-(GroupRingElem a, const GroupRingElem& b) { return a -= b; }
  friend GroupRingElem operator*(const GroupRingElem& a, const GroupRingElem& b);
  friend bool operator==(const GroupRingElem&, const GroupRingElem&) = default;

 private:
  void check_rank(const GroupRingElem& o) const;

  int rank_;
  Terms terms_;
};

GroupRingElem conjugate(const GroupRingElem& a);
// Set every generator except the last to 1.
LaurentSeries specialize_last(const GroupRingElem& a);

struct SpincGrading {
  std::vector<int> weights;
};

long long graded_degree(const std::vector<int>& exponents, const SpincGrading& g);

std::string to_string(const Integer& n);

}  // namespace tf
