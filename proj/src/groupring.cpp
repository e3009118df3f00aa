#include "tfloer/groupring.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace tf {

std::string to_string(const Integer& n) { return n.str(); }

LaurentSeries::LaurentSeries(Terms terms, std::optional<Window> window)
    : terms_(std::move(terms)), window_(window) {
  if (window_ && window_->len <= 0) throw InputError("truncation length must be positive");
  normalize();
}

void LaurentSeries::normalize() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    bool outside = window_ && (it->first < window_->lo || it->first >= window_->cap());
    if (it->second == 0 || outside)
      it = terms_.erase(it);
    else
      ++it;
  }
}

LaurentSeries LaurentSeries::monomial(const Integer& c, int exponent) {
  return LaurentSeries(Terms{{exponent, c}});
}

LaurentSeries LaurentSeries::poly(const std::vector<long long>& coeffs, int lowest) {
  Terms t;
  for (std::size_t i = 0; i < coeffs.size(); ++i) t[lowest + static_cast<int>(i)] = coeffs[i];
  return LaurentSeries(std::move(t));
}

std::optional<int> LaurentSeries::valuation() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first;
}

std::optional<int> LaurentSeries::top_exponent() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first;
}

Integer LaurentSeries::coeff(int e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

LaurentSeries LaurentSeries::with_trunc(int len) const {
  return LaurentSeries(terms_, Window{valuation().value_or(0), len});
}

LaurentSeries LaurentSeries::restricted(Window w) const { return LaurentSeries(terms_, w); }

LaurentSeries LaurentSeries::shifted(int n) const {
  Terms t;
  for (const auto& [e, c] : terms_) t.emplace_hint(t.end(), e + n, c);
  std::optional<Window> w = window_;
  if (w) w->lo += n;
  return LaurentSeries(std::move(t), w);
}

LaurentSeries LaurentSeries::scaled(const Integer& c) const {
  LaurentSeries r = *this;
  for (auto& [e, v] : r.terms_) v *= c;
  r.normalize();
  return r;
}

namespace {

int common_len(const std::optional<Window>& a, const std::optional<Window>& b) {
  if (a && b && a->len != b->len) throw InputError("mismatched truncation lengths");
  return a ? a->len : b->len;
}

}  // namespace

LaurentSeries& LaurentSeries::operator+=(const LaurentSeries& o) {
  if (window_ || o.window_) {
    int len = common_len(window_, o.window_);
    auto low = [](const LaurentSeries& s) -> std::optional<int> {
      if (s.window_) return s.window_->lo;
      return s.valuation();
    };
    std::optional<int> la = low(*this), lb = low(o);
    int lo = la && lb ? std::min(*la, *lb) : la ? *la : *lb;
    window_ = Window{lo, len};
  }
  for (const auto& [e, c] : o.terms_) terms_[e] += c;
  normalize();
  return *this;
}

LaurentSeries& LaurentSeries::operator-=(const LaurentSeries& o) { return *this += -o; }

LaurentSeries& LaurentSeries::operator*=(const LaurentSeries& o) {
  std::optional<Window> w;
  if (window_ || o.window_) {
    int len = common_len(window_, o.window_);
    auto low = [](const LaurentSeries& s) { return s.window_ ? s.window_->lo : s.valuation().value_or(0); };
    w = Window{low(*this) + low(o), len};
  }
  Terms t;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      int e = ea + eb;
      if (w && e >= w->cap()) break;
      t[e] += ca * cb;
    }
  }
  terms_ = std::move(t);
  window_ = w;
  normalize();
  return *this;
}

LaurentSeries series_arith(const LaurentSeries& a, const LaurentSeries& b, SeriesOp op) {
  return op == SeriesOp::add ? a + b : a * b;
}

LaurentSeries novikov_invert(const LaurentSeries& s) {
  if (!s.window()) throw InputError("novikov_invert needs a truncation window");
  if (s.is_zero()) throw InputError("cannot invert zero");
  int v = *s.valuation();
  Integer lead = s.coeff(v);
  if (lead != 1 && lead != -1) throw InputError("leading coefficient is not a unit");
  int len = s.window()->len;
  std::vector<Integer> u(len);
  u[0] = lead;
  for (int m = 1; m < len; ++m) {
    Integer acc = 0;
    for (int i = 1; i <= m; ++i) acc += s.coeff(v + i) * u[m - i];
    u[m] = -lead * acc;
  }
  LaurentSeries::Terms t;
  for (int m = 0; m < len; ++m) t[m - v] = u[m];
  return LaurentSeries(std::move(t), Window{-v, len});
}

bool eq_up_to_unit(const LaurentSeries& a, const LaurentSeries& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  int n = *a.valuation() - *b.valuation();
  Integer la = a.coeff(*a.valuation()), lb = b.coeff(*b.valuation());
  int eps;
  if (la == lb)
    eps = 1;
  else if (la == -lb)
    eps = -1;
  else
    return false;
  std::optional<int> cap;
  if (a.window()) cap = a.window()->cap();
  if (b.window()) cap = cap ? std::min(*cap, b.window()->cap() + n) : b.window()->cap() + n;
  LaurentSeries diff = a.without_trunc() - b.without_trunc().shifted(n).scaled(eps);
  for (const auto& [e, c] : diff.terms())
    if (!cap || e < *cap) return false;
  return true;
}

LaurentSeries conjugate(const LaurentSeries& s) {
  LaurentSeries::Terms t;
  for (const auto& [e, c] : s.terms()) t[-e] = c;
  std::optional<Window> w;
  if (s.window()) w = Window{-(s.window()->cap() - 1), s.window()->len};
  return LaurentSeries(std::move(t), w);
}

LaurentSeries canonical_unit_form(const LaurentSeries& s) {
  if (s.is_zero()) return s;
  int v = *s.valuation();
  LaurentSeries r = s.shifted(-v);
  return r.coeff(0) < 0 ? -r : r;
}

LaurentSeries divide_exact(const LaurentSeries& num, const LaurentSeries& den) {
  if (den.is_zero()) throw InputError("division by zero");
  if (num.is_zero()) return LaurentSeries();
  int shift = *num.valuation() - *den.valuation();
  LaurentSeries r = num.without_trunc().shifted(-*num.valuation());
  LaurentSeries d = den.without_trunc().shifted(-*den.valuation());
  int dtop = *d.top_exponent();
  Integer dlead = d.coeff(dtop);
  LaurentSeries::Terms q;
  while (!r.is_zero() && *r.top_exponent() >= dtop) {
    int e = *r.top_exponent();
    Integer c = r.coeff(e);
    if (c % dlead != 0) throw InputError("inexact division");
    Integer qc = c / dlead;
    q[e - dtop] = qc;
    r -= d.shifted(e - dtop).scaled(qc);
  }
  if (!r.is_zero()) throw InputError("inexact division");
  return LaurentSeries(std::move(q)).shifted(shift);
}

std::string to_text(const LaurentSeries& s) {
  std::string out;
  for (const auto& [e, c] : s.terms()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(e) + ':' + c.str();
  }
  return out;
}

LaurentSeries series_from_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string tok;
  LaurentSeries::Terms t;
  std::optional<int> last;
  while (in >> tok) {
    auto colon = tok.find(':');
    if (colon == std::string::npos) throw InputError("bad series term '" + tok + "'");
    int e = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + colon, e);
    if (ec != std::errc() || p != tok.data() + colon) throw InputError("bad exponent in '" + tok + "'");
    Integer c;
    try {
      c = Integer(tok.substr(colon + 1));
    } catch (const std::exception&) {
      throw InputError("bad coefficient in '" + tok + "'");
    }
    if (c == 0) throw InputError("zero coefficient in '" + tok + "'");
    if (last && e <= *last) throw InputError("series exponents must be strictly ascending");
    last = e;
    t[e] = c;
  }
  return LaurentSeries(std::move(t));
}

std::string render(const LaurentSeries& s, std::string_view var) {
  if (s.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = s.terms().rbegin(); it != s.terms().rend(); ++it) {
    auto [e, c] = *it;
    Integer mag = abs(c);
    if (first)
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    first = false;
    std::string mono;
    if (e != 0) mono = std::string(var) + (e == 1 ? "" : "^" + std::to_string(e));
    if (mono.empty() || mag != 1) out += mag.str();
    out += mono;
  }
  return out;
}

GroupRingElem::GroupRingElem(int rank, Terms terms) : rank_(rank) {
  for (auto& [e, c] : terms) {
    if (static_cast<int>(e.size()) != rank) throw InputError("exponent vector length differs from rank");
    if (c != 0) terms_.emplace(e, c);
  }
}

GroupRingElem GroupRingElem::monomial(const Integer& c, Exponents e) {
  int r = static_cast<int>(e.size());
  return GroupRingElem(r, Terms{{std::move(e), c}});
}

Integer GroupRingElem::augmentation() const {
  Integer s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

void GroupRingElem::check_rank(const GroupRingElem& o) const {
  if (rank_ != o.rank_) throw InputError("group ring rank mismatch");
}

GroupRingElem& GroupRingElem::operator+=(const GroupRingElem& o) {
  check_rank(o);
  for (const auto& [e, c] : o.terms_) {
    Integer& v = terms_[e];
    v += c;
    if (v == 0) terms_.erase(e);
  }
  return *this;
}

GroupRingElem& GroupRingElem::operator-=(const GroupRingElem& o) {
  GroupRingElem neg(o.rank_);
  for (const auto& [e, c] : o.terms_) neg.terms_.emplace(e, -c);
  return *this += neg;
}

GroupRingElem operator*(const GroupRingElem& a, const GroupRingElem& b) {
  a.check_rank(b);
  GroupRingElem::Terms t;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      GroupRingElem::Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      t[e] += ca * cb;
    }
  }
  return GroupRingElem(a.rank_, std::move(t));
}

GroupRingElem conjugate(const GroupRingElem& a) {
  GroupRingElem::Terms t;
  for (const auto& [e, c] : a.terms()) {
    GroupRingElem::Exponents n(e);
    for (int& x : n) x = -x;
    t[n] = c;
  }
  return GroupRingElem(a.rank(), std::move(t));
}

LaurentSeries specialize_last(const GroupRingElem& a) {
  if (a.rank() == 0) throw InputError("specialize_last needs rank >= 1");
  LaurentSeries::Terms t;
  for (const auto& [e, c] : a.terms()) t[e.back()] += c;
  return LaurentSeries(std::move(t));
}

long long graded_degree(const std::vector<int>& exponents, const SpincGrading& g) {
  if (exponents.size() != g.weights.size()) throw InputError("grading length mismatch");
  long long d = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) d += static_cast<long long>(exponents[i]) * g.weights[i];
  return d;
}

}  // namespace tf
