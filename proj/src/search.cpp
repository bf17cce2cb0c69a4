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

#include "nilaut/search.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "nilaut/admissibility.hpp"
#include "nilaut/arith.hpp"
#include "nilaut/errors.hpp"

namespace nilaut {
namespace {

Rational place_term(std::int64_t e, Characteristic p) {
  return Rational(BigInt(min_different_exponent(e, p)), BigInt(e));
}

Rational bracket_of(const Signature& sig) {
  Rational b(2 * sig.base_genus() - 2);
  for (auto e : sig.indices()) b += place_term(e, sig.characteristic());
  return b;
}

std::vector<std::int64_t> default_orders(const Signature& sig,
                                         std::int64_t max_order) {
  if (sig.order()) return {*sig.order()};
  std::int64_t base = 1;
  for (auto e : sig.indices()) base = lcm(base, e);
  std::vector<std::int64_t> out;
  if (base > max_order) return out;
  const auto primes = prime_divisors(base);
  std::set<std::int64_t> seen{base};
  std::vector<std::int64_t> frontier{base};
  while (!frontier.empty()) {
    std::vector<std::int64_t> next;
    for (auto n : frontier)
      for (auto l : primes)
        if (n * l <= max_order && seen.insert(n * l).second) next.push_back(n * l);
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

// Smallest even 2g - 2 >= 2 reachable by raising wild different exponents
// above their minimum, for a fixed group order.
std::optional<SlackWitness> slack_for_order(const Signature& sig,
                                            std::int64_t n) {
  const auto p = sig.characteristic();
  const auto& idx = sig.indices();
  std::int64_t base = n * (2 * sig.base_genus() - 2);
  std::vector<std::int64_t> dmin(idx.size());
  std::vector<std::size_t> wild;
  std::int64_t max_coin = 0;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    dmin[i] = min_different_exponent(idx[i], p);
    base += (n / idx[i]) * dmin[i];
    if (p.divides(idx[i])) {
      wild.push_back(i);
      max_coin = std::max(max_coin, n / idx[i]);
    }
  }
  if (wild.empty()) return std::nullopt;
  const std::int64_t lo = std::max<std::int64_t>(0, 2 - base);
  const std::int64_t limit = lo + 2 * max_coin + 2;
  // reach[a] = coin index that last reached amount a, or -1.
  std::vector<int> reach(static_cast<std::size_t>(limit + 1), -1);
  std::vector<bool> ok(static_cast<std::size_t>(limit + 1), false);
  ok[0] = true;
  for (std::int64_t a = 1; a <= limit; ++a) {
    for (auto w : wild) {
      const auto c = n / idx[w];
      if (a >= c && ok[static_cast<std::size_t>(a - c)]) {
        ok[static_cast<std::size_t>(a)] = true;
        reach[static_cast<std::size_t>(a)] = static_cast<int>(w);
        break;
      }
    }
  }
  for (std::int64_t a = lo; a <= limit; ++a) {
    if (!ok[static_cast<std::size_t>(a)] || (base + a) % 2 != 0) continue;
    SlackWitness w;
    w.order = n;
    const std::int64_t t = base + a;  // 2g - 2
    w.genus = BigInt(t / 2 + 1);
    w.ratio = Rational(BigInt(2 * n), BigInt(t));
    w.differents = dmin;
    for (std::int64_t rest = a; rest > 0;) {
      const auto i = static_cast<std::size_t>(reach[static_cast<std::size_t>(rest)]);
      w.differents[i] += 1;
      rest -= n / idx[i];
    }
    return w;
  }
  return std::nullopt;
}

std::optional<SlackWitness> best_slack(const Signature& sig,
                                       const std::vector<std::int64_t>& orders) {
  std::optional<SlackWitness> best;
  for (auto n : orders) {
    auto w = slack_for_order(sig, n);
    if (w && (!best || w->ratio > best->ratio)) best = std::move(w);
  }
  return best;
}

struct Task {
  int r;
  Characteristic p;
  std::int64_t first;
};

struct LocalResult {
  std::vector<RatioReport> reports;
  std::vector<RatioReport> unbounded;
  std::vector<CoverageNote> notes;
  SweepStats stats;
};

class Walker {
 public:
  Walker(const SearchConfig& cfg, int r, Characteristic p, LocalResult& out,
         std::atomic<std::uint64_t>& leaves)
      : cfg_(cfg), r_(r), p_(p), out_(out), leaves_(leaves) {}

  void run(std::int64_t first) {
    prefix_.assign(1, first);
    descend(place_term(first, p_));
  }

  // True iff the tame completion of (prefix, e, e, ...) falls below the
  // threshold; by monotonicity so does every larger e.
  static bool completion_below(const Rational& partial, int remaining,
                               std::int64_t e, const Rational& threshold) {
    const Rational b = partial +
                       Rational(remaining) * Rational(BigInt(e - 1), BigInt(e)) -
                       Rational(2);
    return b.sign() > 0 && Rational(2) / b < threshold;
  }

  static std::optional<Rational> tail_limit(const Rational& partial,
                                            int remaining) {
    const Rational b = partial + Rational(remaining) - Rational(2);
    if (b.sign() <= 0) return std::nullopt;
    return Rational(2) / b;
  }

  static CoverageNote note(Characteristic p, int r, std::vector<std::int64_t> prefix,
                           const Rational& partial, int remaining, std::int64_t e) {
    CoverageNote n{p, r, std::move(prefix), std::nullopt, tail_limit(partial, remaining)};
    const Rational b = partial +
                       Rational(remaining) * Rational(BigInt(e - 1), BigInt(e)) -
                       Rational(2);
    if (b.sign() > 0) n.tail_sup = Rational(2) / b;
    return n;
  }

 private:
  void descend(const Rational& partial) {
    ++out_.stats.nodes;
    const int k = static_cast<int>(prefix_.size());
    if (k == r_) {
      leaf(partial);
      return;
    }
    const int remaining = r_ - k;
    std::int64_t e = prefix_.back();
    for (; e <= cfg_.max_index; ++e) {
      if (completion_below(partial, remaining, e, cfg_.threshold)) {
        ++out_.stats.pruned;
        break;
      }
      prefix_.push_back(e);
      descend(partial + place_term(e, p_));
      prefix_.pop_back();
    }
    if (e > cfg_.max_index &&
        !completion_below(partial, remaining, e, cfg_.threshold)) {
      out_.notes.push_back(note(p_, r_, prefix_, partial, remaining, e));
    }
  }

  void leaf(const Rational& partial) {
    ++out_.stats.leaves;
    if (++leaves_ > cfg_.max_leaves) {
      throw CapExceeded("sweep exceeded max_leaves; raise the threshold");
    }
    const Rational b = partial - Rational(2);
    if (b.sign() > 0 && Rational(2) / b < cfg_.threshold) return;
    Signature sig(p_, prefix_);
    auto orders = admissible_orders(sig, cfg_.max_order);
    if (orders.empty()) {
      ++out_.stats.inadmissible;
      return;
    }
    RatioReport rep = ratio_sup(sig, orders);
    if (rep.unbounded_candidate()) {
      out_.unbounded.push_back(std::move(rep));
    } else {
      out_.reports.push_back(std::move(rep));
    }
  }

  const SearchConfig& cfg_;
  int r_;
  Characteristic p_;
  LocalResult& out_;
  std::atomic<std::uint64_t>& leaves_;
  std::vector<std::int64_t> prefix_;
};

bool report_rank(const RatioReport& a, const RatioReport& b) {
  if (*a.ratio_sup != *b.ratio_sup) return *a.ratio_sup > *b.ratio_sup;
  return signature_less(a.signature, b.signature);
}

}  // namespace

std::optional<BigInt> RatioReport::minimal_genus() const {
  if (!attained_by) return std::nullopt;
  return attained_by->genus;
}

RatioReport ratio_sup(const Signature& sig,
                      std::vector<std::int64_t> candidate_orders) {
  if (sig.indices().empty()) {
    throw std::invalid_argument("ratio_sup needs at least one ramified place");
  }
  RatioReport rep{sig, bracket_of(sig), std::nullopt, std::nullopt, {},
                  std::nullopt, false};
  rep.orders = candidate_orders.empty() ? default_orders(sig, kDefaultMaxOrder)
                                        : std::move(candidate_orders);
  std::sort(rep.orders.begin(), rep.orders.end());
  if (rep.bracket.sign() > 0) {
    rep.ratio_sup = Rational(2) / rep.bracket;
    for (auto n : rep.orders) {
      const Rational t = Rational(n) * rep.bracket;  // 2g - 2
      if (t.is_integer() && t.num() % 2 == 0 && t.num() >= 2) {
        rep.attained_by = OrderWitness{n, t.num() / 2 + 1};
        break;
      }
    }
  } else {
    rep.slack = best_slack(sig, rep.orders);
  }
  return rep;
}

void SearchConfig::validate() const {
  if (r_min < 1 || r_max < r_min) throw std::invalid_argument("bad r range");
  if (max_index < 2) throw std::invalid_argument("max_index must be >= 2");
  if (max_order < 2) throw std::invalid_argument("max_order must be >= 2");
  if (threshold.sign() < 0) throw std::invalid_argument("threshold must be >= 0");
  if (characteristics.empty()) throw std::invalid_argument("no characteristics");
}

std::string CoverageNote::text() const {
  std::ostringstream os;
  os << "r=" << r << " p=" << p.value() << ": ";
  if (!tail_sup) {
    os << merged << (merged == 1 ? " prefix has" : " prefixes have")
       << " tails beyond the index cap whose bracket can be <= 0; not enumerated";
    return os.str();
  }
  os << "indices after (";
  for (std::size_t i = 0; i < prefix.size(); ++i) os << (i ? "," : "") << prefix[i];
  os << ") beyond the index cap were not enumerated; their ratio is at most "
     << tail_sup->str();
  if (tail_limit) os << " and tends to " << tail_limit->str();
  return os.str();
}

bool signature_less(const Signature& a, const Signature& b) {
  if (a.r() != b.r()) return a.r() < b.r();
  if (a.indices() != b.indices()) return a.indices() < b.indices();
  return a.characteristic().value() < b.characteristic().value();
}

SweepResult sweep(const SearchConfig& config) {
  config.validate();
  std::vector<Task> tasks;
  std::vector<CoverageNote> top_notes;
  SweepStats top_stats;
  for (int r = config.r_min; r <= config.r_max; ++r) {
    for (auto p : config.characteristics) {
      std::int64_t e = 2;
      for (; e <= config.max_index; ++e) {
        if (Walker::completion_below(Rational(0), r, e, config.threshold)) {
          ++top_stats.pruned;
          break;
        }
        tasks.push_back({r, p, e});
      }
      if (e > config.max_index &&
          !Walker::completion_below(Rational(0), r, e, config.threshold)) {
        top_notes.push_back(Walker::note(p, r, {}, Rational(0), r, e));
      }
    }
  }

  std::vector<LocalResult> results(tasks.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::uint64_t> leaves{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto work = [&]() {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        Walker w(config, tasks[i].r, tasks[i].p, results[i], leaves);
        w.run(tasks[i].first);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mu);
        if (!failure) failure = std::current_exception();
        next = tasks.size();
      }
    }
  };
  unsigned workers = config.workers ? config.workers
                                    : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(1, tasks.size())));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  SweepResult out;
  out.stats = top_stats;
  out.notes = std::move(top_notes);
  for (auto& res : results) {
    std::move(res.reports.begin(), res.reports.end(), std::back_inserter(out.reports));
    std::move(res.unbounded.begin(), res.unbounded.end(), std::back_inserter(out.unbounded));
    std::move(res.notes.begin(), res.notes.end(), std::back_inserter(out.notes));
    out.stats.nodes += res.stats.nodes;
    out.stats.leaves += res.stats.leaves;
    out.stats.pruned += res.stats.pruned;
    out.stats.inadmissible += res.stats.inadmissible;
  }
  std::stable_sort(out.reports.begin(), out.reports.end(), report_rank);
  std::stable_sort(out.unbounded.begin(), out.unbounded.end(),
                   [](const RatioReport& a, const RatioReport& b) {
                     return signature_less(a.signature, b.signature);
                   });
  std::stable_sort(out.notes.begin(), out.notes.end(),
                   [](const CoverageNote& a, const CoverageNote& b) {
                     if (a.r != b.r) return a.r < b.r;
                     if (a.p.value() != b.p.value()) return a.p.value() < b.p.value();
                     if (a.tail_sup.has_value() != b.tail_sup.has_value()) {
                       return !a.tail_sup.has_value();
                     }
                     return a.prefix < b.prefix;
                   });
  // Merge the unbounded-tail notes of each (r, p) into one.
  std::vector<CoverageNote> merged;
  for (auto& n : out.notes) {
    if (!n.tail_sup && !merged.empty() && !merged.back().tail_sup &&
        merged.back().r == n.r && merged.back().p == n.p) {
      merged.back().merged += n.merged;
      continue;
    }
    if (!n.tail_sup) n.prefix.clear();
    merged.push_back(std::move(n));
  }
  out.notes = std::move(merged);
  for (auto& rep : out.reports) {
    if (rep.signature.r() >= 2) {
      rep.extremal = *rep.ratio_sup == theorem_bound(static_cast<int>(rep.signature.r()));
    }
  }
  return out;
}

Rational theorem_bound(int r) {
  if (r >= 5) return Rational(4);
  switch (r) {
    case 4:
      return Rational(8);
    case 3:
      return Rational(16);
    case 2:
      return Rational(10);
    default:
      throw std::invalid_argument(
          "no linear bound for r < 2; use r1_bound for a single place");
  }
}

Certificate theorem_certificate(int r, SearchConfig config) {
  config.r_min = config.r_max = r;
  config.threshold = theorem_bound(r);
  Certificate cert{r, config.threshold, {}, {}, {}, {}, sweep(config)};
  for (const auto& rep : cert.sweep.reports) {
    if (*rep.ratio_sup > cert.bound) {
      cert.violations.push_back(rep);
    } else if (*rep.ratio_sup == cert.bound) {
      cert.extremal.push_back(rep);
    }
  }
  for (const auto& rep : cert.sweep.unbounded) {
    if (rep.slack && rep.slack->ratio > cert.bound) {
      cert.slack_violations.push_back(rep);
    }
  }
  for (const auto& n : cert.sweep.notes) {
    if (n.tail_sup && *n.tail_sup > cert.bound) cert.tail_violations.push_back(n);
  }
  std::sort(cert.extremal.begin(), cert.extremal.end(),
            [](const RatioReport& a, const RatioReport& b) {
              return signature_less(a.signature, b.signature);
            });
  return cert;
}

Rational r1_bound_exact(std::int64_t p, std::int64_t g) {
  if (p < 2 || !is_prime(p)) throw std::invalid_argument("p must be prime");
  if (g < 2) throw std::invalid_argument("g must be >= 2");
  const BigInt gg = BigInt(g) * g;
  return Rational(BigInt(4 * p) * gg, BigInt((p - 1) * (p - 1)));
}

BigInt r1_bound(std::int64_t p, std::int64_t g) {
  return r1_bound_exact(p, g).floor();
}

FamilyTail analyze_power_family(const std::vector<std::int64_t>& prefix,
                                std::int64_t base, int max_exp,
                                Characteristic p) {
  FamilyTail out;
  Rational partial(0);
  for (auto e : prefix) partial += place_term(e, p);
  std::optional<Rational> prev;
  bool decreasing = true;
  for (int s = 1; s <= max_exp; ++s) {
    const auto e = ipow(base, s);
    const Rational b = partial + place_term(e, p) - Rational(2);
    std::optional<Rational> ratio;
    if (b.sign() > 0) ratio = Rational(2) / b;
    if (ratio && prev && !(*ratio < *prev)) decreasing = false;
    if (ratio) prev = ratio;
    out.exponents.push_back(s);
    out.ratios.push_back(ratio);
  }
  out.decreasing = decreasing;
  // dmin(e)/e tends to 1 for tame indices and to 2 when p | base.
  const Rational tail = partial + Rational(p.divides(base) ? 2 : 1) - Rational(2);
  if (tail.sign() > 0) out.limit = Rational(2) / tail;
  return out;
}

}  // namespace nilaut
