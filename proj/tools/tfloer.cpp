#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "tfloer/demo.hpp"
#include "tfloer/error.hpp"
#include "tfloer/fibersum.hpp"
#include "tfloer/pairing.hpp"
#include "tfloer/selftest.hpp"
#include "tfloer/surgery.hpp"

using json = nlohmann::json;

namespace {

constexpr int kGenusCap = 6;

std::string slot_name(tf::Slot s) { return tf::mask_text(s.s) + " U^" + std::to_string(s.l); }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw tf::InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

tf::IntMatrix parse_map(const std::string& text) {
  tf::IntMatrix m;
  std::stringstream rows(text);
  std::string row;
  while (std::getline(rows, row, ';')) {
    std::vector<long long> r;
    std::stringstream cells(row);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      try {
        std::size_t used = 0;
        r.push_back(std::stoll(cell, &used));
        if (cell.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(cell);
      } catch (const std::logic_error&) {
        throw tf::InputError("bad map entry '" + cell + "'");
      }
    }
    m.push_back(std::move(r));
  }
  for (const auto& r : m)
    if (r.size() != m.size()) throw tf::InputError("gluing map must be square");
  return m;
}

int cmd_hf(int g, int k, int trunc, bool dump_planes, bool as_json) {
  if (g < 1 || g > kGenusCap) throw tf::InputError("genus must lie in [1, " + std::to_string(kGenusCap) + "]");
  if (std::abs(k) > g - 1) throw tf::InputError("|k| must be at most genus - 1");
  if (trunc < 1) throw tf::InputError("trunc must be positive");
  int d = tf::xgd_d(g, k);
  auto basis = tf::xgd_basis(g, d);
  std::map<tf::Slot, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;

  json j;
  j["genus"] = g;
  j["k"] = k;
  j["d"] = d;
  j["trunc"] = trunc;
  j["rank"] = basis.size();
  std::ostringstream out;
  out << "genus " << g << " k " << k << " d " << d << " trunc " << trunc << "\n";
  out << "rank " << basis.size() << "\n";
  out << "basis\n";
  for (std::size_t i = 0; i < basis.size(); ++i) {
    int h = tf::grading(basis[i], g);
    out << "  x" << i << " " << slot_name(basis[i]) << " height " << h << "\n";
    j["basis"].push_back({{"index", i}, {"subset", tf::mask_text(basis[i].s)}, {"u_power", basis[i].l}, {"height", h}});
  }
  for (int e = 1; e <= 2 * g; ++e) {
    std::string name = "e" + std::to_string(e);
    out << "action " << name << "\n";
    json rows = json::array();
    for (std::size_t c = 0; c < basis.size(); ++c) {
      tf::XgdElem img = tf::corrected_action(tf::ExtElem::basis(g, e), tf::XgdElem::generator(g, k, basis[c]), trunc);
      if (img.is_zero()) continue;
      std::string line;
      for (const auto& [t, v] : img.coords()) {
        if (!line.empty()) line += " + ";
        line += tf::coeff_text(v) + "*x" + std::to_string(index.at(t));
        rows.push_back({{"source", c}, {"target", index.at(t)}, {"coef", tf::to_text(v)}});
      }
      out << "  x" << c << " -> " << line << "\n";
    }
    j["actions"][name] = rows;
  }
  if (dump_planes) {
    for (const auto& ke : tf::kernel_basis(g, k, trunc)) {
      std::size_t i = index.at(ke.generator);
      std::string text = tf::dump(ke.embedded);
      out << "embedding x" << i << "\n" << text;
      j["embeddings"].push_back({{"index", i}, {"dump", text}});
    }
  }
  if (as_json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << out.str();
  return 0;
}

int cmd_fibersum(const std::string& fa, const std::string& fb, const std::string& out_path, const std::string& map_text,
                 int trunc, bool as_json) {
  if (trunc < 1) throw tf::InputError("trunc must be positive");
  tf::ClosedInvariant a = tf::parse_invariant(read_file(fa));
  tf::ClosedInvariant b = tf::parse_invariant(read_file(fb));
  if (a.genus != b.genus) throw tf::InputError("genus mismatch between the summands");
  tf::ClosedInvariant r;
  if (a.genus == 1) {
    if (!map_text.empty()) throw tf::InputError("--map only applies to genus >= 2");
    r = tf::fibersum_genus1(a, b, trunc);
  } else {
    tf::IntMatrix f = map_text.empty() ? tf::identity_map(a.genus) : parse_map(map_text);
    r = tf::fibersum_genusg(a, b, f, trunc);
  }
  std::string text = tf::print_invariant(r);
  std::ofstream out(out_path);
  if (!out) throw tf::InputError("cannot write '" + out_path + "'");
  out << text;
  out.close();
  if (!out) throw tf::InputError("cannot write '" + out_path + "'");

  json j;
  j["output"] = out_path;
  j["genus"] = r.genus;
  j["euler"] = r.euler;
  j["sigma"] = r.sigma;
  j["entries"] = json::array();
  for (const auto& [key, s] : r.entries)
    j["entries"].push_back({{"token", key.first}, {"alpha", tf::to_text(key.second)}, {"poly", tf::to_text(s)}});
  if (as_json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "wrote " << out_path << " (" << r.entries.size() << " entries)\n";
    for (const auto& [key, s] : r.entries)
      std::cout << "  " << key.first << " " << tf::to_text(key.second) << " " << tf::render(s, "t") << "\n";
  }
  return 0;
}

int cmd_demo(const std::string& which, int n, int trunc, bool as_json) {
  tf::DemoResult res;
  if (which == "en") {
    if (n < 2) throw tf::InputError("en needs N >= 2");
    res = tf::demo_en(n, trunc);
  } else if (which == "xn") {
    if (n < 3) throw tf::InputError("xn needs N >= 3");
    if (n - 1 > kGenusCap) throw tf::InputError("xn needs N <= " + std::to_string(kGenusCap + 1));
    res = tf::demo_xn(n, trunc);
  } else {
    throw tf::InputError("unknown demo '" + which + "'");
  }
  if (as_json) {
    json j{{"demo", which}, {"n", n}, {"computed", res.computed}, {"expected", res.expected}, {"pass", res.pass},
           {"notes", res.notes}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << res.computed << " " << (res.pass ? "PASS" : "FAIL") << "\n";
    for (const auto& note : res.notes) std::cout << "# " << note << "\n";
  }
  return res.pass ? 0 : 2;
}

int cmd_selftest(std::uint64_t seed, bool force_fail, bool as_json) {
  auto results = tf::run_selftest(seed, force_fail);
  bool ok = true;
  json j;
  j["seed"] = seed;
  j["suites"] = json::array();
  for (const auto& r : results) {
    ok = ok && r.pass();
    if (as_json) {
      j["suites"].push_back({{"name", r.name}, {"cases", r.cases}, {"failures", r.failures}, {"pass", r.pass()},
                             {"first_failure", r.first_failure}});
    } else {
      std::cout << r.name << ": " << (r.pass() ? "PASS" : "FAIL") << " " << (r.cases - r.failures) << "/" << r.cases
                << "\n";
      if (!r.pass()) std::cout << "  " << r.first_failure << "\n";
    }
  }
  j["pass"] = ok;
  if (as_json) std::cout << j.dump(2) << "\n";
  return ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact perturbed Floer homology of a surface times a circle, and fiber-sum products"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "Print a structured report");

  auto* hf = app.add_subcommand("hf", "Report the Floer group for (genus, k)");
  int genus = 0, k = 0, trunc = tf::kDefaultTrunc;
  bool dump_planes = false;
  hf->add_option("--genus", genus)->required();
  hf->add_option("--k", k)->required();
  hf->add_option("--trunc", trunc);
  hf->add_flag("--dump", dump_planes, "Print plane embeddings of the basis");

  auto* fs = app.add_subcommand("fibersum", "Fiber sum of two invariant files");
  std::string fa, fb, out_path, map_text;
  int fs_trunc = tf::kDefaultTrunc;
  fs->add_option("A", fa)->required();
  fs->add_option("B", fb)->required();
  fs->add_option("--out", out_path)->required();
  fs->add_option("--map", map_text, "Gluing map, rows separated by ';', entries by ','");
  fs->add_option("--trunc", fs_trunc);

  auto* demo = app.add_subcommand("demo", "Closed-form examples");
  std::string which;
  int n = 0, demo_trunc = tf::kDefaultTrunc;
  demo->add_option("family", which)->required()->check(CLI::IsMember({"en", "xn"}));
  demo->add_option("N", n)->required();
  demo->add_option("--trunc", demo_trunc);

  auto* st = app.add_subcommand("selftest", "Randomized property suites");
  std::uint64_t seed = tf::kDefaultSeed;
  bool force_fail = false;
  st->add_option("--seed", seed);
  st->add_flag("--force-fail", force_fail)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*hf) return cmd_hf(genus, k, trunc, dump_planes, as_json);
    if (*fs) return cmd_fibersum(fa, fb, out_path, map_text, fs_trunc, as_json);
    if (*demo) return cmd_demo(which, n, demo_trunc, as_json);
    if (*st) return cmd_selftest(seed, force_fail, as_json);
  } catch (const tf::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const tf::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
