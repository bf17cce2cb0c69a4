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


// Acceptance checks: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "nilaut/admissibility.hpp"
#include "nilaut/curve.hpp"
#include "nilaut/examples.hpp"
#include "nilaut/group.hpp"
#include "nilaut/hurwitz.hpp"
#include "nilaut/ladder.hpp"
#include "nilaut/search.hpp"
#include "nilaut/tower.hpp"

namespace {

using namespace nilaut;

// Collects failed sub-checks for one criterion.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    ++total_;
    if (!ok) failures_.push_back(what);
  }
  bool ok() const { return failures_.empty(); }
  std::string summary() const {
    std::ostringstream os;
    os << total_ - failures_.size() << "/" << total_ << " checks";
    for (const auto& f : failures_) os << "; failed: " << f;
    return os.str();
  }

 private:
  std::size_t total_ = 0;
  std::vector<std::string> failures_;
};

std::string key_set(const std::set<std::string>& s) {
  std::string out = "{";
  for (const auto& k : s) out += (out.size() > 1 ? ", " : "") + k;
  return out + "}";
}

std::set<std::string> extremal_of(const Certificate& c) {
  std::set<std::string> out;
  for (const auto& r : c.extremal) out.insert(r.signature.str());
  return out;
}

const Relation* find_relation(const ExampleReport& r, const std::string& prefix) {
  for (const auto& rel : r.relations) {
    if (rel.lhs.rfind(prefix, 0) == 0) return &rel;
  }
  return nullptr;
}

void criterion1(Checker& c) {
  const SearchConfig cfg;  // max_index 64, p in {0,2,3,5,7}, max_order 2^14
  c.expect(cfg.max_index == 64 && cfg.max_order == (1 << 14) && cfg.characteristics.size() == 5,
           "default caps");
  for (int r = 2; r <= 8; ++r) {
    const auto cert = theorem_certificate(r, cfg);
    std::ostringstream what;
    what << "r=" << r << " bound " << cert.bound.str() << ": " << cert.violations.size()
         << " violations, " << cert.slack_violations.size() << " raised-d violations";
    c.expect(cert.holds(), what.str());
    c.expect(cert.holds_beyond_caps(), "r=" + std::to_string(r) + " truncated tails");
  }
}

void criterion2(Checker& c) {
  const SearchConfig cfg;
  const auto c2 = theorem_certificate(2, cfg);
  const auto c3 = theorem_certificate(3, cfg);
  const auto c4 = theorem_certificate(4, cfg);
  const std::set<std::string> e2{"(2,10)@p=5", "(5,10)@p=2"};
  const std::set<std::string> e3{"(2,4,8)@p=0", "(2,4,8)@p=3", "(2,4,8)@p=5", "(2,4,8)@p=7"};
  const std::set<std::string> e4{"(2,2,2,4)@p=0", "(2,2,2,4)@p=3", "(2,2,2,4)@p=5",
                                 "(2,2,2,4)@p=7"};
  c.expect(extremal_of(c2) == e2, "r=2 extremal " + key_set(extremal_of(c2)));
  c.expect(extremal_of(c3) == e3, "r=3 extremal " + key_set(extremal_of(c3)));
  c.expect(extremal_of(c4) == e4, "r=4 extremal " + key_set(extremal_of(c4)));
  for (const auto& e : c2.extremal) {
    c.expect(e.attained_by && e.attained_by->order == 10 && e.attained_by->genus == 2,
             "witness (10, 2) for " + e.signature.str());
  }
  const std::set<std::string> e5{"(2,2,2,2,2)@p=0", "(2,2,2,2,2)@p=3", "(2,2,2,2,2)@p=5",
                                 "(2,2,2,2,2)@p=7"};
  const auto x5 = extremal_of(theorem_certificate(5, cfg));
  c.expect(x5 == e5, "r=5 extremal " + key_set(x5));
  for (int r = 6; r <= 8; ++r) {
    const auto x = extremal_of(theorem_certificate(r, cfg));
    c.expect(x.empty(), "r=" + std::to_string(r) + " extremal " + key_set(x));
  }
}

void criterion3(Checker& c) {
  const auto rep = verify_example("r3-kummer");
  c.expect(rep.verified(), "all relations hold");
  c.expect(rep.field_p == 3 && rep.field_k == 2, "field F_9");
  c.expect(rep.genus == 2, "genus 2");
  c.expect(rep.type == std::vector<std::int64_t>{2, 4, 8}, "type (2,4,8)");
  c.expect(rep.order == 16 && rep.equality, "16 = 16(g-1)");

  // Independent reconstruction of the maps and their relations.
  const auto F = fq_construct(3, 1, 8);
  const Fq z = F->primitive_root_of_unity(8);
  const auto C = make_curve(F, Poly(F), Poly::from_ints(F, {0, -1, 0, 0, 0, 1}));
  const RationalFunction zero{Poly(F)}, x = RationalFunction::x(F);
  const AutMap sigma =
      make_aut(ExtElement(C, RationalFunction(Poly::monomial(F, F->mul(z, z), 1)), zero),
               ExtElement(C, zero, RationalFunction::constant(F, z)));
  const AutMap tau =
      make_aut(ExtElement::from(C, -(x.inverse())), ExtElement(C, zero, x.pow(3).inverse()));
  const AutMap eta = compose(sigma, tau);
  c.expect(aut_order(sigma) == 8, "ord(sigma) = 8");
  c.expect(aut_order(eta) == 2, "ord(eta) = 2");
  c.expect(compose(eta, sigma) == compose(aut_pow(sigma, 3), eta), "eta sigma = sigma^3 eta");
  const auto g = group_closure(C, {sigma, eta});
  c.expect(g.order() == 16, "closure has 16 elements");
  c.expect(kummer_genus(2, C->f) == 2, "genus from y^2 = x(x^4-1)");
  const RamifiedPlace places[] = {RamifiedPlace::tame(2), RamifiedPlace::tame(4),
                                  RamifiedPlace::tame(8)};
  const auto hz = solve_genus(16, 0, places);
  c.expect(hz.genus && *hz.genus == 2, "genus from Hurwitz over K(t)");
}

Tower r4_tower(Fq* s_out) {
  const auto F = fq_construct(3, 1, 8);
  const Fq z = F->primitive_root_of_unity(8);
  const Fq s = F->add(z, F->inv(z));
  *s_out = s;
  return Tower{F,
               "w",
               {RationalStep{Poly::from_ints(F, {-1, 0, 0, 0, 1}), Poly::monomial(F, s, 2), "w", "x"},
                KummerStep{2, Poly::from_ints(F, {0, -1, 0, 0, 0, 1}), "y"}}};
}

void criterion4(Checker& c) {
  const auto rep = verify_example("r4-kummer");
  c.expect(rep.verified(), "all relations hold");
  c.expect(rep.type == std::vector<std::int64_t>{2, 2, 2, 4}, "type (2,2,2,4)");
  c.expect(rep.order == 8 && rep.genus == 2 && rep.equality, "8 = 8(g-1)");
  Fq s;
  const Tower tw = r4_tower(&s);
  const auto prof = tower_type(tw);
  c.expect(prof.degree == 8, "[F:K(w)] = 8");
  c.expect(prof.type() == std::vector<std::int64_t>{2, 2, 2, 4}, "tower type over K(w)");
  for (const auto& fib : prof.fibers) {
    c.expect(fib.degree_sum() == 8, "sum of e f over w = " + fib.label);
  }
}

void criterion5(Checker& c) {
  const auto a = verify_example("r2-p2");
  c.expect(a.verified(), "p=2 relations hold");
  c.expect(a.genus == 2 && a.type == std::vector<std::int64_t>{5, 10}, "p=2 genus 2, type (5,10)");
  c.expect(a.order == 10 && a.equality, "p=2 N = 10(g-1)");
  c.expect(example_group("r2-p2").table.order() == 10, "p=2 closure order 10");
  const Characteristic p2(2);
  std::vector<RamifiedPlace> pl{RamifiedPlace::tame(5, p2), RamifiedPlace::unknown(10, p2)};
  const auto d = back_solve_different(10, 0, 2, pl, p2);
  c.expect(d == 14 && d == min_different_exponent(10, p2), "back-solved d = 14 = minimum");
  const auto b = verify_example("r2-p5");
  c.expect(b.verified(), "p=5 relations hold");
  c.expect(b.genus == 2 && b.type == std::vector<std::int64_t>{2, 10}, "p=5 genus 2, type (2,10)");
  c.expect(b.order == 10 && b.equality, "p=5 N = 10(g-1)");
  c.expect(example_group("r2-p5").table.order() == 10, "p=5 closure order 10");
}

void criterion6(Checker& c) {
  for (std::int64_t p : {5, 7}) {
    const auto cnt = count_r1_automorphisms(p, 1);
    const std::int64_t g = p * (p - 1) / 2;
    const auto expected = static_cast<std::uint64_t>(p * p * p);
    const std::string tag = "p=" + std::to_string(p);
    c.expect(cnt.count == expected, tag + " count " + std::to_string(cnt.count));
    c.expect(r1_bound(p, g) == BigInt(expected), tag + " r1_bound(p, g)");
    c.expect(r1_bound_exact(p, g) == Rational(BigInt(expected)), tag + " bound is exact");
    const Rational displayed =
        Rational(BigInt(4 * p * g * g)) / Rational(BigInt(p - 1));
    c.expect(displayed != Rational(BigInt(expected)), tag + " (p-1) display differs");
  }
}

void criterion7(Checker& c) {
  const auto rows = genus_ladder(2, 16, 3);
  c.expect(rows.size() == 4, "three steps");
  c.expect(rows[1].genus() && *rows[1].genus() == 17, "g_2 = 17");
  c.expect(rows[1].degree.value() && *rows[1].degree.value() == 256, "N_2 = 256");
  for (const auto& row : rows) {
    c.expect(ladder_ratio(row) == Rational(16), "N = 16(g-1) at level " + std::to_string(row.level));
  }
  // Unramified Hurwitz: 2g' - 2 = 2^(2g) (2g - 2), checked while 2^(2g) fits.
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
    const auto g = rows[i].genus();
    const auto gn = rows[i + 1].genus();
    if (!g || *g > 31 || !gn) break;
    const auto deg = static_cast<std::int64_t>(BigInt(1) << static_cast<unsigned>(2 * static_cast<std::int64_t>(*g)));
    const auto res = solve_genus(deg, static_cast<std::int64_t>(*g), {});
    c.expect(res.genus && *res.genus == *gn, "unramified Hurwitz at level " + std::to_string(i + 1));
  }
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
    const auto& a = rows[i].genus_minus_one;
    const auto& b = rows[i + 1].genus_minus_one;
    const auto g = rows[i].genus();
    if (g) {
      c.expect(b.mantissa == a.mantissa && b.exponent == a.exponent + 2 * *g,
               "symbolic step at level " + std::to_string(i + 1));
    }
  }
}

void criterion8(Checker& c) {
  // (a) admissibility filters.
  auto sig = [](std::int64_t p, std::vector<std::int64_t> es, std::optional<std::int64_t> n) {
    return Signature(Characteristic(p), std::move(es), n);
  };
  for (std::int64_t p : {0, 5, 7, 11, 13}) {
    c.expect(admissible_orders(sig(p, {2, 2, 3, 4}, std::nullopt), 1 << 14).empty(),
             "(2,2,3,4) rejected at p=" + std::to_string(p));
  }
  for (std::int64_t p : {5, 7, 11, 13}) {
    c.expect(admissible_orders(sig(p, {2, 2, 3, 3}, std::nullopt), 1 << 14) ==
                 std::vector<std::int64_t>{6},
             "(2,2,3,3) only N=6 at p=" + std::to_string(p));
  }
  for (auto es : std::vector<std::vector<std::int64_t>>{{2, 3, 3}, {2, 5, 5}, {3, 4, 4}, {2, 2, 7, 7, 3}}) {
    c.expect(!admissible(sig(0, es, std::nullopt)).admissible(), "lonely prime rejected");
  }
  c.expect(admissible(sig(3, {2, 4, 8}, 16)).admissible(), "(2,4,8) N=16 accepted");
  c.expect(admissible(sig(3, {2, 2, 2, 4}, 8)).admissible(), "(2,2,2,4) N=8 accepted");
  c.expect(admissible(sig(2, {5, 10}, 10)).admissible(), "(5,10)@p=2 N=10 accepted");
  c.expect(admissible(sig(5, {2, 10}, 10)).admissible(), "(2,10)@p=5 N=10 accepted");

  // (b) normal subgroups for every divisor.
  const auto g16 = example_group("r3-kummer").table;
  c.expect(divisor_normal_subgroup_property(g16), "order-16 example group");
  bool cyclic = true;
  for (std::size_t n = 1; n <= 64; ++n) cyclic = cyclic && divisor_normal_subgroup_property(cyclic_group(n));
  c.expect(cyclic, "cyclic groups up to 64");
  c.expect(!divisor_normal_subgroup_property(symmetric_group(3)), "S3 fails");

  // (c) nilpotency of every example group.
  for (const auto& id : example_ids()) {
    c.expect(is_nilpotent(example_group(id).table), id + " nilpotent");
  }
  c.expect(is_nilpotent(r1_group(r1_maps(5, 1))), "r1 p=5 nilpotent");

  // (d) randomized rational identities.
  std::mt19937_64 rng(424242);
  std::uniform_int_distribution<std::int64_t> num(-1000000000, 1000000000), den(1, 1000000000);
  bool rational_ok = true;
  for (int i = 0; i < 10000 && rational_ok; ++i) {
    const Rational a(BigInt(num(rng)), BigInt(den(rng))), b(BigInt(num(rng)), BigInt(den(rng))),
        d(BigInt(num(rng)), BigInt(den(rng)));
    rational_ok = a + b == b + a && a * b == b * a && (a + b) + d == a + (b + d) &&
                  (a * b) * d == a * (b * d) && a * (b + d) == a * b + a * d &&
                  (b.is_zero() || (a / b) * b == a) && a - a == Rational(0);
  }
  c.expect(rational_ok, "10^4 rational identities");

  // (e) fundamental equality on every fiber of every tower.
  std::vector<Tower> towers;
  {
    const auto F = fq_construct(3, 1, 8);
    towers.push_back(Tower{F, "t",
                           {RationalStep{Poly::from_ints(F, {1, 0, 1}), Poly::from_ints(F, {0, 2}), "t", "z"},
                            RationalStep{Poly::monomial(F, F->one(), 4), Poly::from_ints(F, {1}), "z", "x"},
                            KummerStep{2, Poly::from_ints(F, {0, -1, 0, 0, 0, 1}), "y"}}});
    Fq s;
    towers.push_back(r4_tower(&s));
  }
  {
    const auto F = fq_construct(2, 1, 5);
    const Poly y2y = Poly::from_ints(F, {0, 1, 1});
    towers.push_back(Tower{F, "z", {RationalStep{y2y, Poly::from_ints(F, {1}), "z", "y"},
                                    KummerStep{5, y2y, "x"}}});
  }
  {
    const auto F = GaloisField::create(5, 1);
    const Poly y5y = Poly::from_ints(F, {0, -1, 0, 0, 0, 1});
    towers.push_back(Tower{F, "z", {RationalStep{y5y, Poly::from_ints(F, {1}), "z", "y"},
                                    KummerStep{2, y5y, "x"}}});
  }
  for (std::size_t i = 0; i < towers.size(); ++i) {
    try {
      const auto prof = tower_type(towers[i]);
      std::size_t bad = 0;
      for (const auto& fib : prof.fibers) bad += fib.degree_sum() != prof.degree;
      c.expect(bad == 0 && !prof.fibers.empty(), "tower " + std::to_string(i) + " fibers");
    } catch (const std::exception& e) {
      c.expect(false, "tower " + std::to_string(i) + ": " + e.what());
    }
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Checker&)>>> criteria{
      {"theorem bounds hold on the exhaustive sweep", criterion1},
      {"extremal classification", criterion2},
      {"three-place example over F_9", criterion3},
      {"four-place example", criterion4},
      {"two-place examples at p = 2 and p = 5", criterion5},
      {"single-place automorphism counts", criterion6},
      {"genus ladder", criterion7},
      {"property suites", criterion8},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Checker c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
    failed += !c.ok();
    std::cout << "criterion " << i + 1 << ": " << (c.ok() ? "PASS" : "FAIL") << "  "
              << criteria[i].first << " (" << c.summary() << ", " << ms << " ms)" << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
