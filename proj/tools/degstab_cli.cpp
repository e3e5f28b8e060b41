// Copyright 2026 The degstab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: analyze, enumerate-dd, count, construct, catalog,
// symmetric. Exit status 0 on success, 1 on a verification mismatch, 2 on a
// usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "degstab/degstab.hpp"

namespace {

using namespace degstab;
using Json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { Human, Json, Csv };

struct Common {
  bool json = false;
  bool csv = false;
  unsigned threads = 1;
  Format format() const { return json ? Format::Json : (csv ? Format::Csv : Format::Human); }
};

void add_common(CLI::App* sub, Common& c) {
  auto* j = sub->add_flag("--json", c.json, "JSON output");
  auto* v = sub->add_flag("--csv", c.csv, "CSV output");
  j->excludes(v);
  sub->add_option("--threads", c.threads, "worker threads, 0 = auto")->capture_default_str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  std::string s = ss.str();
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
  return s;
}

struct FunctionInput {
  int n = 0;
  std::string anf;
  std::string anf_file;
};

void add_function_input(CLI::App* sub, FunctionInput& in) {
  sub->add_option("--n", in.n, "number of variables")->required()->check(CLI::Range(1, kMaxVars));
  auto* a = sub->add_option("--anf", in.anf, "ANF text, e.g. \"123+456\" or \"x1*x2+x3\"");
  auto* f = sub->add_option("--anf-file", in.anf_file, "file holding the ANF text");
  a->excludes(f);
}

Anf load_function(const FunctionInput& in) {
  if (in.anf.empty() && in.anf_file.empty()) throw UsageError("one of --anf or --anf-file is required");
  const std::string text = in.anf.empty() ? read_file(in.anf_file) : in.anf;
  return parse_anf(text, in.n);
}

Json profile_json(const DegreeDropProfile& p) {
  Json a = Json::array();
  for (const auto& e : p.entries) a.push_back({{"codim", e.codim}, {"count", e.count}, {"new", e.new_count}});
  return a;
}

std::string tuple_text(const std::vector<std::uint64_t>& t) {
  std::string s;
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return s;
}

const char* verdict(bool b) { return b ? "PASS" : "FAIL"; }

// analyze ------------------------------------------------------------------

struct AnalyzeArgs {
  FunctionInput in;
  int max_codim = -1;
  Common common;
};

int run_analyze(const AnalyzeArgs& args) {
  const Anf f = load_function(args.in);
  const Degree d = f.degree();
  if (d.is_neg_inf() || d.value() == 0) throw UsageError("the function must have degree >= 1");
  const int n = f.num_vars();
  const int r = d.value();
  const Anf top = top_part(f);
  int k_max = args.max_codim < 0 ? std::min(3, n - r) : args.max_codim;
  if (k_max > n - r) throw UsageError("--max-codim must be at most n - deg(f) = " + std::to_string(n - r));

  std::optional<DegreeDropProfile> prof;
  if (k_max >= 1) prof = profile(f, k_max, args.common.threads);
  const int stab = deg_stab(f, args.common.threads);
  const PointSpace hyper = dd_hyperplane_normal_space(f);
  const std::vector<int> rv = r < n ? r_values(top, std::min(k_max < 1 ? 1 : k_max, n - r)) : std::vector<int>{};

  const MonomialSet ms = MonomialSet::from_anf(top);
  const bool c1 = check_c1(ms);
  const bool has_prop4 = r >= 2;
  const bool prop4 = has_prop4 && check_prop4(ms, 1);
  const bool thm5 = check_theorem5(ms).has_value();
  const bool fastpoint = check_fastpoint_sufficient(ms);

  std::optional<PointSpace> comp_fast;
  std::optional<bool> duality;
  if (r <= n - 1) {
    comp_fast = fast_points(complement(top));
    duality = comp_fast->points == hyper.points;
  }
  const std::uint64_t hyper_count = hyper.points.size();
  const bool rk_consistent = rv.empty() || (std::uint64_t{1} << rv[0]) - 1 == hyper_count;
  const bool consistent = rk_consistent && duality.value_or(true) && hyper.closed();

  switch (args.common.format()) {
    case Format::Json: {
      Json j;
      j["input"] = args.in.anf.empty() ? read_file(args.in.anf_file) : args.in.anf;
      j["anf"] = format_anf(f);
      j["n"] = n;
      j["degree"] = r;
      j["profile"] = prof ? profile_json(*prof) : Json::array();
      j["deg_stab"] = stab;
      j["dd_hyperplane_space_dim"] = hyper.dim();
      j["dd_hyperplane_count"] = hyper_count;
      j["r_values"] = rv;
      Json chk;
      chk["c1"] = c1;
      chk["prop4_k1"] = has_prop4 ? Json(prop4) : Json(nullptr);
      chk["theorem5"] = thm5;
      chk["fastpoint_corollary"] = fastpoint;
      j["checkers"] = chk;
      j["complement_fast_point_space_dim"] = comp_fast ? Json(comp_fast->dim()) : Json(nullptr);
      j["consistent"] = consistent;
      std::cout << j.dump(2) << "\n";
      break;
    }
    case Format::Csv: {
      std::cout << "codim,count,new\n";
      if (prof) {
        for (const auto& e : prof->entries) std::cout << e.codim << "," << e.count << "," << e.new_count << "\n";
      }
      break;
    }
    case Format::Human: {
      std::cout << "f = " << format_anf(f) << "\n";
      std::cout << "n = " << n << ", degree = " << r << "\n";
      if (prof) std::cout << "profile = (" << tuple_text(prof->tuple()) << ")\n";
      std::cout << "deg_stab = " << stab << "\n";
      std::cout << "degree-drop hyperplanes = " << hyper_count << " (normal space dim " << hyper.dim() << ")\n";
      if (!rv.empty()) {
        std::cout << "R =";
        for (int v : rv) std::cout << " " << v;
        std::cout << "\n";
      }
      std::cout << "c1: " << verdict(c1);
      if (has_prop4) std::cout << ", prop4(k=1): " << verdict(prop4);
      std::cout << ", theorem5: " << verdict(thm5) << ", fastpoint-corollary: " << verdict(fastpoint) << "\n";
      if (comp_fast) std::cout << "complement fast-point space dim = " << comp_fast->dim() << "\n";
      std::cout << "consistency: " << verdict(consistent) << "\n";
      break;
    }
  }
  return consistent ? kOk : kMismatch;
}

// enumerate-dd -------------------------------------------------------------

struct EnumerateArgs {
  FunctionInput in;
  int k = 1;
  Common common;
};

int run_enumerate(const EnumerateArgs& args) {
  const Anf f = load_function(args.in);
  if (f.degree().is_neg_inf()) throw UsageError("the zero function has no degree");
  if (args.k < 1 || args.k > f.num_vars()) throw UsageError("--k must be in [1, n]");
  const auto spaces = enumerate_degree_drop(f, args.k, args.common.threads);
  switch (args.common.format()) {
    case Format::Json: {
      Json a = Json::array();
      for (const auto& v : spaces) a.push_back({{"forms", v.forms()}, {"equations", format_subspace(v)}});
      Json j;
      j["n"] = f.num_vars();
      j["k"] = args.k;
      j["count"] = spaces.size();
      j["spaces"] = a;
      std::cout << j.dump(2) << "\n";
      break;
    }
    case Format::Csv:
      std::cout << "index,equations\n";
      for (std::size_t i = 0; i < spaces.size(); ++i) std::cout << i << ",\"" << format_subspace(spaces[i]) << "\"\n";
      break;
    case Format::Human:
      for (const auto& v : spaces) std::cout << format_subspace(v) << "\n";
      std::cout << "# " << spaces.size() << " degree-drop subspaces of co-dimension " << args.k << "\n";
      break;
  }
  return kOk;
}

// count --------------------------------------------------------------------

struct CountArgs {
  int r = 0;
  int n = 0;
  Common common;
};

int run_count(const CountArgs& args) {
  if (args.r < 1 || args.r > args.n) throw UsageError("needs 1 <= r <= n");
  const auto hist = dd_hyperplane_histogram(args.r, args.n);
  const BigCount k1 = k1_count(args.r, args.n);
  switch (args.common.format()) {
    case Format::Csv:
      std::cout << "r,n,j,count\n";
      for (std::size_t j = 0; j < hist.size(); ++j) std::cout << args.r << "," << args.n << "," << j << "," << hist[j] << "\n";
      break;
    case Format::Json: {
      const DropProbability p = dd_probability(args.r, args.n);
      const StabBounds b = degstab_bounds(args.r, args.n);
      Json j;
      j["r"] = args.r;
      j["n"] = args.n;
      j["k1_count"] = k1.str();
      j["with_drop_count"] = with_drop_count(args.r, args.n).str();
      Json h = Json::array();
      for (std::size_t i = 0; i < hist.size(); ++i) h.push_back({{"j", i}, {"count", hist[i].str()}});
      j["histogram"] = h;
      j["probability"] = {{"exact", p.exact.str()}, {"value", format_probability(p.value)},
                          {"approximation", format_probability(p.approximation)}};
      if (p.bounds_apply) {
        j["probability"]["lower"] = format_probability(p.lower);
        j["probability"]["upper"] = format_probability(p.upper);
      }
      j["deg_stab_bounds"] = {{"lower", b.lower}, {"upper", b.upper}};
      std::cout << j.dump(2) << "\n";
      break;
    }
    case Format::Human: {
      const DropProbability p = dd_probability(args.r, args.n);
      std::cout << k1 << "\n";
      for (std::size_t j = 1; j < hist.size(); ++j) {
        std::cout << "functions with " << ((std::uint64_t{1} << j) - 1) << " degree-drop hyperplanes: " << hist[j] << "\n";
      }
      std::cout << "probability of a degree-drop hyperplane: " << format_probability(p.value) << "\n";
      break;
    }
  }
  return kOk;
}

// construct ----------------------------------------------------------------

struct ConstructArgs {
  int n = 0;
  int r = 0;
  std::uint64_t seed = 0;
  std::string method = "alg1";
  int k = 1;
  double extend_prob = 0.0;
  Common common;
};

constexpr int kScanLimit = 16;
constexpr int kDegStabLimit = 10;

int run_construct(const ConstructArgs& args) {
  MonomialSet s(1, 0);
  Json report;
  std::vector<std::pair<std::string, bool>> checks;
  try {
    if (args.method == "alg1") {
      const Algorithm1Result res = algorithm1(args.n, args.r, args.seed, args.extend_prob);
      s = res.full;
      std::uint64_t worst = 0;
      for (auto b : res.blocked) worst = std::max(worst, b);
      report["max_blocked"] = worst;
      report["blocked_limit"] = res.blocked_limit;
      checks.emplace_back("theorem5", check_theorem5(s).has_value());
    } else if (args.method == "circular") {
      s = circular_construction(args.n, args.r, args.k);
      checks.emplace_back("prop4(k=" + std::to_string(args.k) + ")", check_prop4(s, args.k));
    } else {
      const int p = args.n / args.r;
      s = direct_sum(args.r, p, args.n);
      report["p"] = p;
    }
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  const Anf f = s.to_anf();
  const bool scanned = args.method == "direct-sum" ? args.n <= kDegStabLimit : args.n <= kScanLimit;
  if (scanned && args.method == "direct-sum") {
    const int want = args.r == 1 ? 0 : args.n / args.r - 1;
    checks.emplace_back("deg_stab=" + std::to_string(want), deg_stab(f, args.common.threads) == want);
  } else if (scanned) {
    checks.emplace_back("exhaustive-hyperplane-scan", !exists_degree_drop(f, 1, args.common.threads));
  }
  bool ok = true;
  for (const auto& [name, pass] : checks) ok = ok && pass;

  if (args.common.format() == Format::Json) {
    Json j;
    j["n"] = args.n;
    j["r"] = args.r;
    j["method"] = args.method;
    j["seed"] = args.seed;
    j["anf"] = format_anf(f);
    j["monomials"] = s.size();
    Json c;
    for (const auto& [name, pass] : checks) c[name] = verdict(pass);
    if (!scanned) c["exhaustive-check"] = "SKIPPED";
    j["checks"] = c;
    for (auto& [key, value] : report.items()) j[key] = value;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << format_anf(f) << "\n";
    std::string line;
    for (const auto& [name, pass] : checks) line += (line.empty() ? "" : ", ") + name + ": " + verdict(pass);
    if (!scanned) line += (line.empty() ? "" : ", ") + std::string("exhaustive-check: SKIPPED");
    std::cout << line << "\n";
  }
  return ok ? kOk : kMismatch;
}

// catalog ------------------------------------------------------------------

struct CatalogArgs {
  std::string table;
  Common common;
};

int run_catalog(const CatalogArgs& args) {
  const Format fmt = args.common.format();
  const unsigned t = args.common.threads;
  bool ok = true;
  if (!catalog::checksum_ok()) {
    std::cerr << "embedded catalog checksum mismatch\n";
    return kMismatch;
  }
  if (args.table == "deg3") {
    const auto tab = catalog::reproduce_table_deg3(t);
    ok = tab.ok();
    Json a = Json::array();
    if (fmt == Format::Csv) std::cout << "id,computed,expected,match\n";
    for (const auto& row : tab.rows) {
      if (fmt == Format::Json) {
        a.push_back({{"id", row.id}, {"computed", row.computed}, {"expected", row.expected}, {"match", row.match()}});
      } else if (fmt == Format::Csv) {
        std::cout << row.id << ",\"" << tuple_text(row.computed) << "\",\"" << tuple_text(row.expected) << "\"," << row.match() << "\n";
      } else {
        std::cout << row.id << "  " << tuple_text(row.computed) << "  " << (row.match() ? "ok" : "MISMATCH expected " + tuple_text(row.expected)) << "\n";
      }
    }
    if (fmt == Format::Json) std::cout << Json{{"rows", a}, {"pairs_coincide", tab.pairs_coincide}, {"ok", ok}}.dump(2) << "\n";
    if (fmt == Format::Human) std::cout << "coinciding rows (f17,f28) (f19,f30) (f23,f32): " << (tab.pairs_coincide ? "ok" : "MISMATCH") << "\n";
  } else if (args.table == "deg5") {
    const auto rows = catalog::reproduce_table_deg5(t);
    Json a = Json::array();
    if (fmt == Format::Csv) std::cout << "id,hyperplanes,codim2,expected,match\n";
    for (const auto& row : rows) {
      ok = ok && row.match();
      if (fmt == Format::Json) {
        a.push_back({{"id", row.id}, {"hyperplanes", row.hyperplanes}, {"codim2", row.computed}, {"expected", row.expected}, {"match", row.match()}});
      } else if (fmt == Format::Csv) {
        std::cout << row.id << "," << row.hyperplanes << "," << row.computed << "," << row.expected << "," << row.match() << "\n";
      } else {
        std::cout << row.id << "  hyperplanes " << row.hyperplanes << "  codim2 " << row.computed
                  << (row.match() ? "  ok" : "  MISMATCH expected " + std::to_string(row.expected)) << "\n";
      }
    }
    if (fmt == Format::Json) std::cout << Json{{"rows", a}, {"ok", ok}}.dump(2) << "\n";
  } else if (args.table == "degstab") {
    const auto entries = catalog::reproduce_degstab_table(t);
    Json a = Json::array();
    if (fmt == Format::Csv) std::cout << "n,r,deg_stab,expected,method\n";
    for (const auto& e : entries) {
      ok = ok && e.match();
      if (fmt == Format::Json) {
        a.push_back({{"n", e.n}, {"r", e.r}, {"deg_stab", e.value}, {"expected", e.expected}, {"method", e.method}});
      } else if (fmt == Format::Csv) {
        std::cout << e.n << "," << e.r << "," << e.value << "," << e.expected << ",\"" << e.method << "\"\n";
      } else {
        std::cout << "n=" << e.n << " r=" << e.r << "  " << e.value << (e.match() ? "" : "  MISMATCH") << "  (" << e.method << ")\n";
      }
    }
    if (fmt == Format::Json) std::cout << Json{{"entries", a}, {"ok", ok}}.dump(2) << "\n";
  } else {
    const auto rep = catalog::verify_k_sets(t);
    ok = rep.ok();
    Json a = Json::array();
    if (fmt == Format::Csv) std::cout << "check,pass,detail\n";
    for (const auto& c : rep.checks) {
      if (fmt == Format::Json) {
        a.push_back({{"check", c.name}, {"pass", c.pass}, {"detail", c.detail}});
      } else if (fmt == Format::Csv) {
        std::cout << "\"" << c.name << "\"," << c.pass << ",\"" << c.detail << "\"\n";
      } else {
        std::cout << verdict(c.pass) << "  " << c.name << "  " << c.detail << "\n";
      }
    }
    if (fmt == Format::Json) std::cout << Json{{"checks", a}, {"ok", ok}}.dump(2) << "\n";
  }
  return ok ? kOk : kMismatch;
}

// symmetric ----------------------------------------------------------------

struct SymmetricArgs {
  int n = 0;
  int r = 0;
  std::string full_anf;
  Common common;
};

constexpr int kSymmetricScanLimit = 14;

int run_symmetric(const SymmetricArgs& args) {
  if (args.full_anf.empty()) {
    if (args.r < 1 || args.r > args.n) throw UsageError("needs 1 <= r <= n");
    const SymmetricVerdict v = symmetric_dd(args.n, args.r);
    std::optional<bool> agree;
    if (args.n <= kSymmetricScanLimit) {
      agree = enumerate_degree_drop(elementary_symmetric(args.n, args.r), 1, args.common.threads).size() == v.hyperplane_count;
    }
    if (args.common.format() == Format::Json) {
      Json j;
      j["n"] = args.n;
      j["r"] = args.r;
      j["drop_weights"] = v.drop_weights;
      j["hyperplane_count"] = v.hyperplane_count;
      j["enumeration_agrees"] = agree ? Json(*agree) : Json(nullptr);
      std::cout << j.dump(2) << "\n";
    } else if (args.common.format() == Format::Csv) {
      std::cout << "n,r,weight\n";
      for (int w : v.drop_weights) std::cout << args.n << "," << args.r << "," << w << "\n";
    } else {
      std::cout << "degree-drop hyperplanes: " << v.hyperplane_count << "\n";
      std::cout << "normal weights:";
      for (int w : v.drop_weights) std::cout << " " << w;
      std::cout << "\n";
      if (agree) std::cout << "exhaustive enumeration: " << verdict(*agree) << "\n";
    }
    return agree.value_or(true) ? kOk : kMismatch;
  }

  const Anf f = parse_anf(read_file(args.full_anf), args.n);
  if (!is_symmetric(f)) throw UsageError("the function in --full-anf is not symmetric");
  if (f.degree() < Degree(2)) throw UsageError("the function must have degree >= 2");
  if (args.r != 0 && Degree(args.r) != f.degree()) throw UsageError("--r differs from the degree of the function");
  if (args.common.format() == Format::Csv) std::cout << "weight,epsilon,drop\n";
  Json rows = Json::array();
  for (int w = 1; w <= args.n; ++w) {
    for (int eps = 0; eps <= 1; ++eps) {
      const DropAmount d = symmetric_drop_amount(f, w, eps);
      if (args.common.format() == Format::Json) {
        rows.push_back({{"weight", w}, {"epsilon", eps}, {"drop", to_string(d)}});
      } else if (args.common.format() == Format::Csv) {
        std::cout << w << "," << eps << "," << to_string(d) << "\n";
      } else {
        std::cout << "weight " << w << " = " << eps << ": " << to_string(d) << "\n";
      }
    }
  }
  if (args.common.format() == Format::Json) {
    std::cout << Json{{"n", args.n}, {"degree", f.degree().value()}, {"drops", rows}}.dump(2) << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Degree drop of Boolean functions under restriction to subspaces"};
  app.require_subcommand(1);
  app.fallthrough(false);

  AnalyzeArgs analyze;
  auto* a = app.add_subcommand("analyze", "degree-drop profile, deg_stab, invariants and checkers of one function");
  add_function_input(a, analyze.in);
  a->add_option("--max-codim", analyze.max_codim, "largest co-dimension in the profile (default min(3, n-deg))");
  add_common(a, analyze.common);

  EnumerateArgs enumerate;
  auto* e = app.add_subcommand("enumerate-dd", "list the degree-drop linear subspaces of co-dimension k");
  add_function_input(e, enumerate.in);
  e->add_option("--k", enumerate.k, "co-dimension")->capture_default_str();
  add_common(e, enumerate.common);

  CountArgs count;
  auto* c = app.add_subcommand("count", "closed-form counts for homogeneous degree-r functions of n variables");
  c->add_option("--r", count.r, "degree")->required();
  c->add_option("--n", count.n, "number of variables")->required()->check(CLI::Range(1, 4096));
  add_common(c, count.common);

  ConstructArgs construct;
  auto* k = app.add_subcommand("construct", "build a homogeneous function without degree-drop spaces");
  k->add_option("--n", construct.n, "number of variables")->required()->check(CLI::Range(1, kMaxVars));
  k->add_option("--r", construct.r, "degree")->required();
  k->add_option("--seed", construct.seed, "random seed")->capture_default_str();
  k->add_option("--method", construct.method, "construction")
      ->check(CLI::IsMember({"alg1", "circular", "direct-sum"}))
      ->capture_default_str();
  k->add_option("--k", construct.k, "co-dimension for the circular construction")->capture_default_str();
  k->add_option("--extend-prob", construct.extend_prob, "probability of adding each allowed extra monomial")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  add_common(k, construct.common);

  CatalogArgs cat;
  auto* t = app.add_subcommand("catalog", "reproduce the tables for the 31 degree-3 representatives");
  t->add_option("--table", cat.table, "deg3, deg5, degstab or ksets")
      ->required()
      ->check(CLI::IsMember({"deg3", "deg5", "degstab", "ksets"}));
  add_common(t, cat.common);

  SymmetricArgs sym;
  auto* s = app.add_subcommand("symmetric", "degree-drop hyperplanes of symmetric functions");
  s->add_option("--n", sym.n, "number of variables")->required()->check(CLI::Range(1, kMaxVars));
  s->add_option("--r", sym.r, "degree");
  s->add_option("--full-anf", sym.full_anf, "file with the full ANF of a symmetric function");
  add_common(s, sym.common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int rc = app.exit(err);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (a->parsed()) return run_analyze(analyze);
    if (e->parsed()) return run_enumerate(enumerate);
    if (c->parsed()) return run_count(count);
    if (k->parsed()) return run_construct(construct);
    if (t->parsed()) return run_catalog(cat);
    if (s->parsed()) return run_symmetric(sym);
  } catch (const UsageError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kUsage;
  } catch (const Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
