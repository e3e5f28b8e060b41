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

#ifndef DEGSTAB_CATALOG_HPP
#define DEGSTAB_CATALOG_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "degstab/anf.hpp"
#include "degstab/catalog_data.hpp"
#include "degstab/counting.hpp"
#include "degstab/degdrop.hpp"
#include "degstab/error.hpp"
#include "degstab/special.hpp"

namespace degstab {

inline std::uint64_t fnv1a64(std::string_view text) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

/// Degree-3 affine class representative (ids f2..f32).
struct Representative {
  std::string id;
  std::string anf;
  int n_native = 0;
  std::optional<BigCount> class_size_n7;
  std::vector<std::uint64_t> expected;  // profile tuple at n = 8
  std::optional<std::uint64_t> complement_codim2_n8;
  std::optional<std::uint64_t> complement_codim2_n7;

  int index() const { return std::stoi(id.substr(1)); }
  Anf at(int n) const { return parse_anf(anf, n); }
};

namespace catalog {

inline bool checksum_ok() { return fnv1a64(catalog_data::kJson) == catalog_data::kChecksum; }

inline std::vector<Representative> parse(std::string_view json_text) {
  const auto doc = nlohmann::json::parse(json_text);
  std::vector<Representative> out;
  for (const auto& e : doc) {
    Representative r;
    r.id = e.at("id").get<std::string>();
    r.anf = e.at("anf").get<std::string>();
    r.n_native = e.at("n_native").get<int>();
    if (e.contains("class_size_n7")) r.class_size_n7 = BigCount(e.at("class_size_n7").get<std::string>());
    r.expected = e.at("expected").get<std::vector<std::uint64_t>>();
    if (e.contains("complement_codim2_n8")) r.complement_codim2_n8 = e.at("complement_codim2_n8").get<std::uint64_t>();
    if (e.contains("complement_codim2_n7")) r.complement_codim2_n7 = e.at("complement_codim2_n7").get<std::uint64_t>();
    out.push_back(std::move(r));
  }
  return out;
}

inline const std::vector<Representative>& representatives() {
  static const std::vector<Representative> reps = [] {
    if (!checksum_ok()) fail(ErrorCode::InternalInvariant, "embedded catalog checksum mismatch");
    return parse(catalog_data::kJson);
  }();
  return reps;
}

inline const Representative& representative(std::string_view id) {
  for (const auto& r : representatives()) {
    if (r.id == id) return r;
  }
  fail(ErrorCode::OutOfRange, "unknown representative " + std::string(id));
}

// Reference membership sets and deg_stab rows.
inline const std::vector<int> kK1_3_7 = {4, 5, 6, 8, 9, 10, 11, 12};
inline const std::vector<int> kK1_3_8 = {4, 5, 6, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22,
                                         23, 24, 25, 26, 27, 28, 29, 30, 31, 32};
inline const std::vector<int> kK2_3_7 = {12};
inline const std::vector<int> kK2_3_8 = {12, 18, 19, 20, 21, 22, 23, 25, 27, 30, 31, 32};
inline const std::map<int, std::vector<int>> kDegStabRows = {
    {6, {0, 2, 1, 1, 0, 0}},
    {7, {0, 2, 2, 1, 0, 0, 0}},
    {8, {0, 3, 2, 2, 1, 1, 0, 0}},
};
inline constexpr std::string_view kCodim2Probability37 = "0.605765343";

struct Deg3Row {
  std::string id;
  std::vector<std::uint64_t> expected;
  std::vector<std::uint64_t> computed;
  bool match() const { return expected == computed; }
};

struct Deg3Table {
  std::vector<Deg3Row> rows;
  bool pairs_coincide = false;  // (f17,f28), (f19,f30), (f23,f32) and no others
  bool ok() const {
    return pairs_coincide && std::all_of(rows.begin(), rows.end(), [](const Deg3Row& r) { return r.match(); });
  }
};

/// Profiles up to co-dimension 3 at n = 8 for every representative.
inline Deg3Table reproduce_table_deg3(unsigned threads = 1) {
  Deg3Table t;
  for (const auto& rep : representatives()) {
    t.rows.push_back({rep.id, rep.expected, profile(rep.at(8), 3, threads).tuple()});
  }
  std::set<std::pair<std::string, std::string>> equal;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    for (std::size_t j = i + 1; j < t.rows.size(); ++j) {
      if (t.rows[i].computed == t.rows[j].computed) equal.insert({t.rows[i].id, t.rows[j].id});
    }
  }
  const std::set<std::pair<std::string, std::string>> want = {{"f17", "f28"}, {"f19", "f30"}, {"f23", "f32"}};
  t.pairs_coincide = equal == want;
  return t;
}

struct Deg5Row {
  std::string id;
  std::uint64_t hyperplanes = 0;
  std::uint64_t expected = 0;
  std::uint64_t computed = 0;
  bool match() const { return hyperplanes == 0 && expected == computed; }
};

/// Complements of f13..f32 at n = 8: no degree-drop hyperplane, and the
/// co-dimension 2 counts.
inline std::vector<Deg5Row> reproduce_table_deg5(unsigned threads = 1) {
  std::vector<Deg5Row> rows;
  for (const auto& rep : representatives()) {
    if (!rep.complement_codim2_n8) continue;
    const Anf fc = complement(rep.at(8));
    const DegreeDropProfile p = profile(fc, 2, threads);
    rows.push_back({rep.id + "c", p.entries[0].count, *rep.complement_codim2_n8, p.entries[1].count});
  }
  return rows;
}

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct KSetReport {
  std::vector<Check> checks;
  bool ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
  }
};

namespace detail {

inline std::string join_ids(const std::vector<int>& ids) {
  std::string s = "{";
  for (std::size_t i = 0; i < ids.size(); ++i) s += (i ? "," : "") + std::string("f") + std::to_string(ids[i]);
  return s + "}";
}

inline std::vector<int> members(int n, int k, bool use_complement, int max_index, unsigned threads) {
  std::vector<int> out;
  for (const auto& rep : representatives()) {
    if (rep.index() > max_index || rep.n_native > n) continue;
    Anf f = rep.at(n);
    if (use_complement) f = complement(f);
    if (k_membership(f, k, threads)) out.push_back(rep.index());
  }
  return out;
}

inline Check compare_set(const std::string& name, const std::vector<int>& got, const std::vector<int>& want) {
  return {name, got == want, "computed " + join_ids(got) + ", expected " + join_ids(want)};
}

}  // namespace detail

/// Membership sets, class-size sums against the counting formulas, and the
/// degree-4 complement checks at n = 7.
inline KSetReport verify_k_sets(unsigned threads = 1) {
  KSetReport rep;
  const auto& reps = representatives();
  rep.checks.push_back(detail::compare_set("K_{1,3,7}", detail::members(7, 1, false, 12, threads), kK1_3_7));
  rep.checks.push_back(detail::compare_set("K_{1,3,8}", detail::members(8, 1, false, 32, threads), kK1_3_8));
  rep.checks.push_back(detail::compare_set("K_{2,3,7}", detail::members(7, 2, false, 12, threads), kK2_3_7));
  rep.checks.push_back(detail::compare_set("K_{2,3,8}", detail::members(8, 2, false, 32, threads), kK2_3_8));
  rep.checks.push_back(detail::compare_set("K_{3,3,7}", detail::members(7, 3, false, 12, threads), {}));
  rep.checks.push_back(detail::compare_set("K_{3,3,8}", detail::members(8, 3, false, 32, threads), {}));

  BigCount k1_sum = 0;
  BigCount all_sum = 0;
  BigCount comp_sum = 0;
  for (const auto& r : reps) {
    if (!r.class_size_n7) continue;
    all_sum += *r.class_size_n7;
    if (std::find(kK1_3_7.begin(), kK1_3_7.end(), r.index()) != kK1_3_7.end()) k1_sum += *r.class_size_n7;
  }
  rep.checks.push_back({"sum of K_{1,3,7} class sizes = k1_count(3,7)", k1_sum == k1_count(3, 7),
                        k1_sum.str() + " vs " + k1_count(3, 7).str()});
  rep.checks.push_back({"sum of all n=7 class sizes = 2^35-1", all_sum == homogeneous_count(3, 7), all_sum.str()});

  // Hyperplane histogram from class sizes.
  std::vector<BigCount> hist(4, 0);
  for (const auto& r : reps) {
    if (!r.class_size_n7) continue;
    hist[static_cast<std::size_t>(dd_hyperplane_normal_space(r.at(7)).dim())] += *r.class_size_n7;
  }
  rep.checks.push_back({"class-size hyperplane histogram = dd_hyperplane_histogram(3,7)",
                        hist == dd_hyperplane_histogram(3, 7), ""});

  const std::vector<int> k147 = detail::members(7, 1, true, 12, threads);
  rep.checks.push_back(detail::compare_set("K_{1,4,7} (complements)", k147, {7, 8, 9, 10, 11, 12}));
  for (const auto& r : reps) {
    if (r.class_size_n7 && r.index() >= 7) comp_sum += *r.class_size_n7;
  }
  rep.checks.push_back({"sum of complement class sizes = k1_count(4,7)", comp_sum == k1_count(4, 7),
                        comp_sum.str() + " vs " + k1_count(4, 7).str()});

  bool codim2_ok = true;
  std::string codim2_detail;
  for (const auto& r : reps) {
    if (!r.complement_codim2_n7) continue;
    const auto got = enumerate_degree_drop(complement(r.at(7)), 2, threads).size();
    codim2_ok = codim2_ok && got == *r.complement_codim2_n7;
    codim2_detail += r.id + "c=" + std::to_string(got) + " ";
  }
  rep.checks.push_back({"co-dim 2 counts of f7c..f12c at n=7", codim2_ok, codim2_detail});

  const BigRational p = 1 - BigRational(*representative("f12").class_size_n7, homogeneous_count(3, 7));
  const std::string ps = format_probability(static_cast<double>(p));
  rep.checks.push_back({"co-dim 2 drop probability at (3,7)", ps == kCodim2Probability37, ps});
  return rep;
}

struct DegStabEntry {
  int n = 0;
  int r = 0;
  int value = 0;
  int expected = 0;
  std::string method;
  bool match() const { return value == expected; }
};

namespace detail {

inline int max_deg_stab(int n, int max_index, bool use_complement, unsigned threads) {
  int best = 0;
  for (const auto& rep : representatives()) {
    if (rep.index() > max_index || rep.n_native > n) continue;
    Anf f = rep.at(n);
    if (use_complement) f = complement(f);
    best = std::max(best, deg_stab(f, threads));
  }
  return best;
}

// Seeded search for a degree-r homogeneous function outside every co-dim k drop.
inline std::optional<Anf> find_k_witness(int n, int r, int k, std::uint64_t seed, int attempts, unsigned threads) {
  std::mt19937_64 rng(seed);
  Anf f(n);
  for (int a = 0; a < attempts; ++a) {
    f = Anf(n);
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t m = 0; m < total; ++m) {
      if (std::popcount(m) == r && (rng() & 1u)) f.toggle(static_cast<Mask>(m));
    }
    if (!f.is_zero() && f.degree() == Degree(r) && k_membership(f, k, threads)) return f;
  }
  return std::nullopt;
}

}  // namespace detail

/// Largest deg_stab over degree-r functions of n variables, n in {6, 7, 8}.
/// Closed forms cover r in {1, 2, n-2, n-1, n}; degree 3 uses the
/// representatives, degree n-3 their complements; (4, 8) combines a searched
/// witness with the upper bound n-6.
inline std::vector<DegStabEntry> reproduce_degstab_table(unsigned threads = 1) {
  std::vector<DegStabEntry> out;
  for (const auto& [n, row] : kDegStabRows) {
    for (int r = 1; r <= n; ++r) {
      DegStabEntry e{n, r, 0, row[static_cast<std::size_t>(r - 1)], ""};
      const StabBounds b = degstab_bounds(r, n);
      if (r == 3) {
        e.value = detail::max_deg_stab(n, n == 6 ? 6 : (n == 7 ? 12 : 32), false, threads);
        e.method = "max over representatives";
      } else if (r == n - 3 && r != 2) {
        e.value = detail::max_deg_stab(n, n == 7 ? 12 : 32, true, threads);
        e.method = "max over complements of representatives";
      } else if (b.exact()) {
        e.value = b.lower;
        e.method = "closed form";
      } else if (n == 8 && r == 4) {
        const auto w = detail::find_k_witness(8, 4, 2, 1, 64, threads);
        const int lower = w ? deg_stab(*w, threads) : 0;
        e.value = lower == b.upper ? lower : -1;
        e.method = "witness " + std::to_string(lower) + " meets upper bound n-6";
      } else {
        e.value = -1;
        e.method = "not determined";
      }
      out.push_back(e);
    }
  }
  return out;
}

}  // namespace catalog
}  // namespace degstab

#endif  // DEGSTAB_CATALOG_HPP
