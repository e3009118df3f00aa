#include <charconv>
#include <sstream>

#include "tfloer/fibersum.hpp"

namespace tf {

namespace {

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t p = s.find(sep, start);
    out.emplace_back(s.substr(start, p - start));
    if (p == std::string_view::npos) break;
    start = p + 1;
  }
  return out;
}

long long parse_int(std::string_view s, const std::string& what) {
  long long v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty()) throw InputError("bad integer for " + what);
  return v;
}

// "key=value" with the expected key
std::string_view field(std::string_view tok, std::string_view key) {
  if (tok.size() <= key.size() || tok.substr(0, key.size()) != key || tok[key.size()] != '=')
    throw InputError("expected " + std::string(key) + "=...");
  return tok.substr(key.size() + 1);
}

}  // namespace

std::string to_text(const AMonomial& m) {
  std::string s = m.a == 0 ? "1" : "U^" + std::to_string(m.a);
  for (Mask r = m.sigma; r; r &= r - 1) s += "*e" + std::to_string(std::countr_zero(r) + 1);
  for (const auto& x : m.ext) s += "*X:" + x;
  return s;
}

AMonomial amonomial_from_text(std::string_view text, int g) {
  auto parts = split(text, '*');
  AMonomial m;
  const std::string& head = parts[0];
  if (head == "1") {
    m.a = 0;
  } else if (head.rfind("U^", 0) == 0) {
    m.a = static_cast<int>(parse_int(std::string_view(head).substr(2), "U power"));
    if (m.a < 1) throw InputError("U power must be positive; write 1 for U^0");
  } else {
    throw InputError("monomial must start with 1 or U^a: '" + std::string(text) + "'");
  }
  int last_e = 0;
  for (std::size_t i = 1; i < parts.size(); ++i) {
    const std::string& p = parts[i];
    if (p.rfind("X:", 0) == 0) {
      std::string label = p.substr(2);
      if (label.empty()) throw InputError("empty external class label");
      if (!m.ext.empty() && label <= m.ext.back()) throw InputError("external classes must be strictly ascending");
      m.ext.push_back(label);
    } else if (!p.empty() && p[0] == 'e') {
      if (!m.ext.empty()) throw InputError("surface classes must precede external classes");
      int e = static_cast<int>(parse_int(std::string_view(p).substr(1), "surface class index"));
      if (e <= last_e || e > 2 * g) throw InputError("surface class indices must ascend within 1..2g");
      m.sigma |= bit(e);
      last_e = e;
    } else {
      throw InputError("bad monomial factor '" + p + "'");
    }
  }
  return m;
}

ClosedInvariant parse_invariant(std::string_view text) {
  ClosedInvariant x;
  bool have_genus = false, have_topology = false;
  struct Pending {
    std::string token, alpha, poly;
    int line;
  };
  std::vector<Pending> coefs;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& msg) { throw InputError("line " + std::to_string(lineno) + ": " + msg); };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(t);
    try {
      if (kw == "genus") {
        if (have_genus || toks.size() != 1) fail("expected a single 'genus <g>' line");
        x.genus = static_cast<int>(parse_int(toks[0], "genus"));
        if (x.genus < 1 || x.genus > kMaxGenus) fail("genus out of range");
        have_genus = true;
      } else if (kw == "topology") {
        if (have_topology || toks.size() != 2) fail("expected 'topology euler=<int> sigma=<int>'");
        x.euler = parse_int(field(toks[0], "euler"), "euler");
        x.sigma = parse_int(field(toks[1], "sigma"), "sigma");
        have_topology = true;
      } else if (kw == "class") {
        if (toks.size() != 3) fail("expected 'class <token> k=<int> sq=<int>'");
        if (x.classes.count(toks[0])) fail("class '" + toks[0] + "' declared twice");
        x.add_class({toks[0], static_cast<int>(parse_int(field(toks[1], "k"), "k")), parse_int(field(toks[2], "sq"), "sq")});
      } else if (kw == "coef") {
        if (toks.size() < 2) fail("expected 'coef <token> alpha=<monomial> poly=<series>'");
        std::string alpha(field(toks[1], "alpha"));
        if (toks.size() < 3) fail("missing poly=");
        std::string poly(field(toks[2], "poly"));
        for (std::size_t i = 3; i < toks.size(); ++i) poly += " " + toks[i];
        coefs.push_back({toks[0], alpha, poly, lineno});
      } else {
        fail("unknown keyword '" + kw + "'");
      }
    } catch (const InputError& e) {
      std::string msg = e.what();
      if (msg.rfind("line ", 0) == 0) throw;
      fail(msg);
    }
  }
  if (!have_genus) throw InputError("missing 'genus' line");
  if (!have_topology) throw InputError("missing 'topology' line");
  for (const auto& c : coefs) {
    lineno = c.line;
    try {
      if (!x.classes.count(c.token)) fail("coefficient for undeclared class '" + c.token + "'");
      AMonomial m = amonomial_from_text(c.alpha, x.genus);
      if (x.entries.count({c.token, m})) fail("duplicate coefficient entry");
      LaurentSeries s = series_from_text(c.poly);
      if (s.is_zero()) fail("empty series");
      x.add_entry(c.token, m, s);
    } catch (const InputError& e) {
      std::string msg = e.what();
      if (msg.rfind("line ", 0) == 0) throw;
      fail(msg);
    }
  }
  if (auto bad = x.validate(); !bad.empty()) throw InputError(bad.front());
  return x;
}

std::string print_invariant(const ClosedInvariant& x) {
  std::string out = "genus " + std::to_string(x.genus) + "\n";
  out += "topology euler=" + std::to_string(x.euler) + " sigma=" + std::to_string(x.sigma) + "\n";
  for (const auto& [label, c] : x.classes)
    out += "class " + label + " k=" + std::to_string(c.k) + " sq=" + std::to_string(c.sq) + "\n";
  for (const auto& [key, s] : x.entries)
    out += "coef " + key.first + " alpha=" + to_text(key.second) + " poly=" + to_text(s) + "\n";
  return out;
}

}  // namespace tf
