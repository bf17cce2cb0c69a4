// Copyright 2026 The nilaut Authors
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

// nilaut: Hurwitz genus, ratio bounds, signature sweeps and example checks.
//
// Exit codes: 0 all claims verified, 1 claim mismatch, 2 usage error.

#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "nilaut/admissibility.hpp"
#include "nilaut/errors.hpp"
#include "nilaut/examples.hpp"
#include "nilaut/hurwitz.hpp"
#include "nilaut/ladder.hpp"
#include "nilaut/report_json.hpp"
#include "nilaut/search.hpp"

namespace {

using nilaut::Characteristic;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;

struct Globals {
  bool json = false;
  std::optional<std::int64_t> p;
  std::int64_t max_e = 64;
  std::int64_t max_order = nilaut::kDefaultMaxOrder;
  std::uint64_t seed = 0;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void emit(const Globals& g, const json& doc, const std::string& text) {
  if (g.json) {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

std::string join(const std::vector<std::int64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

// "e" (minimal different exponent) or "e:d".
nilaut::RamifiedPlace parse_place(const std::string& text, Characteristic p) {
  const auto colon = text.find(':');
  try {
    const std::int64_t e = std::stoll(text.substr(0, colon));
    if (colon == std::string::npos) return nilaut::RamifiedPlace::minimal(e, p);
    return nilaut::RamifiedPlace::make(e, std::stoll(text.substr(colon + 1)), p);
  } catch (const std::invalid_argument& ex) {
    throw UsageError("bad place '" + text + "': " + ex.what());
  }
}

int cmd_hurwitz(const Globals& g, std::int64_t order, std::int64_t base_genus,
                const std::vector<std::string>& specs) {
  const Characteristic p(g.p.value_or(0));
  std::vector<nilaut::RamifiedPlace> places;
  for (const auto& s : specs) places.push_back(parse_place(s, p));
  const auto res = nilaut::solve_genus(order, base_genus, places);
  json doc{{"schema", nilaut::kJsonSchema},
           {"order", order},
           {"baseGenus", base_genus},
           {"char", p.value()},
           {"twoGMinus2", nilaut::rational_json(res.two_g_minus_2)},
           {"genus", res.genus ? nilaut::big_json(*res.genus) : json(nullptr)},
           {"status", res.status_text()}};
  json pl = json::array();
  for (const auto& pc : places) pl.push_back({{"e", pc.index}, {"d", *pc.different}, {"wild", pc.wild}});
  doc["places"] = pl;
  std::ostringstream os;
  os << "2g-2 = " << res.two_g_minus_2.str() << "\n";
  if (res.genus) os << "g = " << res.genus->str() << "\n";
  os << "status: " << res.status_text() << "\n";
  emit(g, doc, os.str());
  return kOk;
}

int cmd_bound(const Globals& g, const std::vector<std::int64_t>& indices,
              std::optional<std::int64_t> order, std::optional<std::int64_t> r1_genus) {
  const Characteristic p(g.p.value_or(0));
  if (r1_genus) {
    if (p.is_zero()) throw UsageError("--r1-genus needs --char p > 0");
    const auto exact = nilaut::r1_bound_exact(p.value(), *r1_genus);
    json doc{{"schema", nilaut::kJsonSchema},
             {"char", p.value()},
             {"genus", *r1_genus},
             {"r1Bound", nilaut::big_json(nilaut::r1_bound(p.value(), *r1_genus))},
             {"exact", nilaut::rational_json(exact)}};
    emit(g, doc,
         "single place: N <= floor(4p g^2/(p-1)^2) = " +
             nilaut::r1_bound(p.value(), *r1_genus).str() + " (exact " + exact.str() + ")\n");
    return kOk;
  }
  if (indices.empty()) throw UsageError("bound needs ramification indices or --r1-genus");
  nilaut::Signature sig(p, indices, order);
  std::vector<std::int64_t> orders;
  if (order) {
    orders = {*order};
  } else {
    orders = nilaut::admissible_orders(sig, g.max_order);
  }
  const auto verdict = nilaut::admissible(sig);
  auto rep = nilaut::ratio_sup(sig, orders);
  std::optional<nilaut::Rational> bound;
  if (sig.r() >= 2) {
    bound = nilaut::theorem_bound(static_cast<int>(sig.r()));
    rep.extremal = rep.ratio_sup && *rep.ratio_sup == *bound;
  }
  json doc = nilaut::document("report", nilaut::to_json(rep));
  doc["admissibility"] = nilaut::to_json(verdict);
  doc["admissibleOrders"] = orders;
  doc["theoremBound"] = bound ? nilaut::rational_json(*bound) : json(nullptr);
  std::ostringstream os;
  os << sig.str() << "\n";
  if (rep.ratio_sup) {
    os << "ratio_sup N/(g-1) = " << rep.ratio_sup->str();
    if (rep.attained_by) {
      os << "  (attained at N=" << rep.attained_by->order << ", g=" << rep.attained_by->genus.str()
         << ")";
    }
    os << "\n";
  } else {
    os << "unbounded candidate: bracket " << rep.bracket.str() << " <= 0\n";
    if (rep.slack) {
      os << "  best integral configuration: N=" << rep.slack->order << ", g="
         << rep.slack->genus.str() << ", N/(g-1) = " << rep.slack->ratio.str() << "\n";
    }
  }
  if (bound) os << "theorem bound for r=" << sig.r() << ": " << bound->str() << "(g-1)\n";
  os << "admissible: " << (verdict.admissible() ? "yes" : "no")
     << (verdict.conditional ? " (conditional, no order given)" : "") << "\n";
  for (const auto& v : verdict.violations) {
    os << "  [" << nilaut::rule_id(v.rule) << "] " << v.reason << "\n";
  }
  emit(g, doc, os.str());
  return kOk;
}

int cmd_search(const Globals& g, int r_min, int r_max, std::optional<std::string> threshold,
               unsigned workers, std::size_t top) {
  std::vector<int> rs;
  for (int r = r_min; r <= r_max; ++r) rs.push_back(r);
  nilaut::SearchConfig base;
  base.max_index = g.max_e;
  base.max_order = g.max_order;
  base.workers = workers;
  if (g.p) base.characteristics = {Characteristic(*g.p)};
  json certs = json::array();
  json reports = json::array();
  std::ostringstream os;
  bool all_hold = true;
  if (threshold) {
    // Plain sweep at a custom threshold; no theorem assertions.
    nilaut::SearchConfig cfg = base;
    cfg.r_min = r_min;
    cfg.r_max = r_max;
    const auto slash = threshold->find('/');
    try {
      cfg.threshold = slash == std::string::npos
                          ? nilaut::Rational(std::stoll(*threshold))
                          : nilaut::Rational(nilaut::BigInt(std::stoll(threshold->substr(0, slash))),
                                             nilaut::BigInt(std::stoll(threshold->substr(slash + 1))));
    } catch (const std::exception&) {
      throw UsageError("bad threshold '" + *threshold + "'");
    }
    const auto res = nilaut::sweep(cfg);
    for (const auto& r : res.reports) reports.push_back(nilaut::to_json(r));
    os << res.reports.size() << " signatures with ratio >= " << cfg.threshold.str() << "\n";
    for (std::size_t i = 0; i < res.reports.size() && i < top; ++i) {
      const auto& r = res.reports[i];
      os << "  " << std::left << std::setw(24) << r.signature.str() << " " << r.ratio_sup->str()
         << (r.extremal ? "  extremal" : "") << "\n";
    }
    json doc{{"schema", nilaut::kJsonSchema}, {"reports", reports}};
    json notes = json::array();
    for (const auto& n : res.notes) notes.push_back(nilaut::to_json(n));
    doc["notes"] = notes;
    emit(g, doc, os.str());
    return kOk;
  }
  for (int r : rs) {
    const auto cert = nilaut::theorem_certificate(r, base);
    certs.push_back(nilaut::to_json(cert));
    for (const auto& rep : cert.sweep.reports) reports.push_back(nilaut::to_json(rep));
    all_hold = all_hold && cert.holds();
    os << "r = " << r << ": N <= " << cert.bound.str() << "(g-1)  "
       << (cert.holds() ? "holds" : "VIOLATED") << " within caps";
    os << (cert.holds_beyond_caps() ? ", and on the truncated tails" : ", tails exceed the bound")
       << "\n";
    std::map<std::string, std::vector<std::int64_t>> ext;
    std::map<std::string, std::string> witness;
    for (const auto& e : cert.extremal) {
      const std::string key = "(" + join(e.signature.indices()) + ")";
      ext[key].push_back(e.signature.characteristic().value());
      if (e.attained_by) {
        witness[key] = "N=" + std::to_string(e.attained_by->order) +
                       ", g=" + e.attained_by->genus.str();
      }
    }
    if (ext.empty()) os << "  equality: none within caps\n";
    for (const auto& [k, ps] : ext) {
      os << "  equality: " << k << " at p in {" << join(ps) << "}";
      if (witness.count(k)) os << ", witness " << witness[k];
      os << "\n";
    }
    for (const auto& v : cert.violations) {
      os << "  violation: " << v.signature.str() << " ratio " << v.ratio_sup->str() << "\n";
    }
    for (const auto& v : cert.slack_violations) {
      os << "  violation (raised d): " << v.signature.str() << " ratio " << v.slack->ratio.str()
         << "\n";
    }
    os << "  " << cert.sweep.stats.leaves << " leaves, " << cert.sweep.notes.size()
       << " coverage notes\n";
  }
  json doc{{"schema", nilaut::kJsonSchema}, {"certificates", certs}, {"reports", reports},
           {"seed", g.seed}};
  emit(g, doc, os.str());
  return all_hold ? kOk : kMismatch;
}

int cmd_verify(const Globals& g, const std::string& id, int n) {
  nilaut::ExampleParams params;
  params.p = g.p;
  params.n = n;
  const auto rep = nilaut::verify_example(id, params);
  std::ostringstream os;
  os << id << " over " << rep.field_description << "\n";
  for (const auto& t : rep.tower) os << "  " << t << "\n";
  os << "genus " << rep.genus;
  if (!rep.type.empty()) os << ", type (" << join(rep.type) << ")";
  os << ", N = " << rep.order << ", bound " << rep.bound << ": "
     << (rep.equality ? "equality" : "no equality") << "\n";
  for (const auto& r : rep.relations) {
    os << "  [" << (r.holds ? " ok " : "FAIL") << "] " << r.lhs << "  vs  " << r.rhs << "\n";
  }
  for (const auto& note : rep.notes) os << "  note: " << note << "\n";
  emit(g, nilaut::to_json(rep), os.str());
  if (const auto* bad = rep.first_failure()) {
    std::cerr << "claim mismatch: " << bad->lhs << " (expected " << bad->rhs << ")\n";
    return kMismatch;
  }
  return kOk;
}

int cmd_ladder(const Globals& g, std::int64_t g1, std::int64_t degree, std::size_t steps) {
  const auto rows = nilaut::genus_ladder(g1, degree, steps);
  json arr = json::array();
  std::ostringstream os;
  bool constant = true;
  const auto r0 = nilaut::ladder_ratio(rows.front());
  for (const auto& row : rows) {
    arr.push_back(nilaut::to_json(row));
    const auto ratio = nilaut::ladder_ratio(row);
    constant = constant && ratio == r0;
    const auto gen = row.genus();
    os << "level " << row.level << ": g = "
       << (gen && gen->str().size() <= 40 ? gen->str() : row.genus_minus_one.str() + "+1")
       << ", N = " << row.degree.str() << ", N/(g-1) = " << ratio.str() << "\n";
  }
  json doc{{"schema", nilaut::kJsonSchema}, {"rows", arr}, {"ratioConstant", constant}};
  emit(g, doc, os.str());
  return constant ? kOk : kMismatch;
}

int cmd_group(const Globals& g, const std::string& id, int n) {
  nilaut::ExampleParams params;
  params.p = g.p;
  params.n = n;
  const auto grp = nilaut::example_group(id, params);
  json body = nilaut::group_json(grp.table);
  body["exampleId"] = id;
  body["generators"] = grp.generators;
  std::ostringstream os;
  os << id << ": group of order " << grp.table.order() << "\n";
  for (const auto& s : grp.generators) os << "  " << s << "\n";
  os << "  nilpotent: " << (body["nilpotent"].get<bool>() ? "yes" : "no") << "\n";
  os << "  lower central series orders: " << body["lowerCentralSeries"].dump() << "\n";
  os << "  normal subgroup for every divisor: "
     << (body["divisorNormalSubgroups"].get<bool>() ? "yes" : "no") << "\n";
  os << "  element orders: " << body["elementOrders"].dump() << "\n";
  emit(g, nilaut::document("group", body), os.str());
  return body["nilpotent"].get<bool>() ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact genus and group-order bounds for nilpotent Galois covers of curves"};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json, "Emit JSON (schema 1)");
  app.add_option("--char", g.p, "Characteristic (0 or a prime)");
  app.add_option("--max-e", g.max_e, "Largest ramification index in sweeps")->check(CLI::Range(2, 4096));
  app.add_option("--max-order", g.max_order, "Largest group order for order-dependent filters")
      ->check(CLI::Range(std::int64_t{2}, std::int64_t{1} << 30));
  app.add_option("--seed", g.seed, "Seed for randomized checks (never affects results)");

  auto* hz = app.add_subcommand("hurwitz", "Genus from the Hurwitz formula");
  std::int64_t hz_order = 0, hz_g0 = 0;
  std::vector<std::string> hz_places;
  hz->add_option("--order", hz_order, "Group order N")->required()->check(CLI::PositiveNumber);
  hz->add_option("--base-genus", hz_g0, "Genus of the fixed field")->check(CLI::NonNegativeNumber);
  hz->add_option("places", hz_places, "Places as e (minimal d) or e:d");

  auto* bd = app.add_subcommand("bound", "Supremum of N/(g-1) for a type, or the single-place bound");
  std::vector<std::int64_t> bd_indices;
  std::optional<std::int64_t> bd_order, bd_r1;
  bd->add_option("indices", bd_indices, "Ramification indices");
  bd->add_option("--order", bd_order, "Group order N");
  bd->add_option("--r1-genus", bd_r1, "Evaluate floor(4p g^2/(p-1)^2) at this genus");

  auto* sr = app.add_subcommand("search", "Exhaustive sweep and theorem certificates");
  int sr_rmin = 2, sr_rmax = 8;
  unsigned sr_workers = 0;
  std::size_t sr_top = 20;
  std::optional<std::string> sr_threshold;
  sr->add_option("--r-min", sr_rmin, "Smallest number of ramified places")->check(CLI::Range(2, 16));
  sr->add_option("--r-max", sr_rmax, "Largest number of ramified places")->check(CLI::Range(2, 16));
  sr->add_option("--threshold", sr_threshold, "Plain sweep reporting ratios >= this (e.g. 8 or 32/3)");
  sr->add_option("--workers", sr_workers, "Worker threads (0 = all cores)");
  sr->add_option("--top", sr_top, "Rows to print for a plain sweep");

  auto* vf = app.add_subcommand("verify", "Construct an example and check its claims");
  std::string vf_id;
  int vf_n = 1;
  vf->add_option("id", vf_id, "r3-kummer | r4-kummer | r2-p2 | r2-p5 | r1")
      ->required()
      ->check(CLI::IsMember(nilaut::example_ids()));
  vf->add_option("--n", vf_n, "Exponent n for r1")->check(CLI::Range(1, 8));

  auto* ld = app.add_subcommand("ladder", "Genus ladder of unramified exponent-2 covers");
  std::int64_t ld_g1 = 2, ld_deg = 16;
  std::size_t ld_steps = 3;
  ld->add_option("--g1", ld_g1, "Genus at level 1")->check(CLI::Range(std::int64_t{2}, std::int64_t{1} << 20));
  ld->add_option("--degree", ld_deg, "Degree over the base at level 1")->check(CLI::PositiveNumber);
  ld->add_option("--steps", ld_steps, "Number of steps");

  auto* gp = app.add_subcommand("group", "Automorphism group of an example");
  std::string gp_id;
  int gp_n = 1;
  gp->add_option("id", gp_id, "r3-kummer | r4-kummer | r2-p2 | r2-p5 | r1")
      ->required()
      ->check(CLI::IsMember(nilaut::example_ids()));
  gp->add_option("--n", gp_n, "Exponent n for r1")->check(CLI::Range(1, 8));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (g.p) Characteristic check(*g.p);
    if (*hz) return cmd_hurwitz(g, hz_order, hz_g0, hz_places);
    if (*bd) return cmd_bound(g, bd_indices, bd_order, bd_r1);
    if (*sr) {
      if (sr_rmin > sr_rmax) throw UsageError("--r-min exceeds --r-max");
      return cmd_search(g, sr_rmin, sr_rmax, sr_threshold, sr_workers, sr_top);
    }
    if (*vf) return cmd_verify(g, vf_id, vf_n);
    if (*ld) return cmd_ladder(g, ld_g1, ld_deg, ld_steps);
    if (*gp) return cmd_group(g, gp_id, gp_n);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const nilaut::ClaimMismatch& e) {
    std::cerr << "claim mismatch: " << e.what() << "\n";
    return kMismatch;
  } catch (const nilaut::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMismatch;
  }
  return kUsage;
}
