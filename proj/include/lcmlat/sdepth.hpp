#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "lcmlat/monomial.hpp"

namespace lcmlat {

/// Thrown when a computation would exceed a configured resource limit.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class PosetMode { Ideal, Quotient };

inline const char* to_string(PosetMode m) { return m == PosetMode::Ideal ? "ideal" : "quotient"; }

/// Default limit on the box size prod(g_j + 1); LCMLAT_SDEPTH_BOX_CAP overrides it.
inline std::size_t default_box_cap() {
  if (const char* env = std::getenv("LCMLAT_SDEPTH_BOX_CAP")) {
    char* end = nullptr;
    const auto v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return std::size_t{1} << 16;  // 4^8
}

/// Points a <= g of the box, either those with x^a in I (Ideal) or those with
/// x^a not in I (Quotient). Points are listed in lex order, which extends the
/// componentwise order.
struct CharacteristicPoset {
  PosetMode mode = PosetMode::Ideal;
  Exponent g;
  std::vector<Exponent> points;

  std::size_t num_vars() const { return g.size(); }

  /// #{j : b_j = g_j}
  int rho(const Exponent& b) const {
    int r = 0;
    for (std::size_t j = 0; j < g.size(); ++j) r += b[j] == g[j];
    return r;
  }

  std::size_t box_size() const {
    std::size_t s = 1;
    for (auto e : g) s *= e + std::size_t{1};
    return s;
  }

  /// Mixed-radix index into the box; monotone for the componentwise order.
  std::size_t box_index(const Exponent& a) const {
    std::size_t idx = 0;
    for (std::size_t j = 0; j < g.size(); ++j) idx = idx * (g[j] + std::size_t{1}) + a[j];
    return idx;
  }
};

inline CharacteristicPoset char_poset(const MonomialIdeal& ideal, PosetMode mode,
                                      std::size_t box_cap = default_box_cap()) {
  CharacteristicPoset p;
  p.mode = mode;
  p.g = ideal.lcm_of_generators();
  std::size_t box = 1;
  for (auto e : p.g) {
    if (box > box_cap / (e + std::size_t{1}) + 1) throw ResourceError("characteristic poset box exceeds the cap");
    box *= e + std::size_t{1};
  }
  if (box > box_cap)
    throw ResourceError("characteristic poset box of " + std::to_string(box) + " points exceeds the cap of " +
                        std::to_string(box_cap));
  Exponent a(p.g.size(), 0);
  for (std::size_t i = 0; i < box; ++i) {
    if (ideal.contains(a) == (mode == PosetMode::Ideal)) p.points.push_back(a);
    for (std::size_t j = a.size(); j-- > 0;) {
      if (a[j] < p.g[j]) {
        ++a[j];
        break;
      }
      a[j] = 0;
    }
  }
  return p;
}

/// Closed interval [lower, upper] of the box.
struct Interval {
  Exponent lower;
  Exponent upper;
  friend bool operator==(const Interval&, const Interval&) = default;
};

struct IntervalPartition {
  std::vector<Interval> intervals;

  /// min over intervals of rho(upper); the Stanley depth this partition witnesses.
  int value(const CharacteristicPoset& p) const {
    int v = static_cast<int>(p.num_vars());
    for (const auto& iv : intervals) v = std::min(v, p.rho(iv.upper));
    return v;
  }
};

/// Checks from scratch that `partition` splits the points of `p` into disjoint
/// intervals whose upper ends all have rho >= d.
inline bool is_valid_partition(const CharacteristicPoset& p, const IntervalPartition& partition, int d) {
  std::vector<int> hits(p.box_size(), 0);
  std::vector<bool> member(p.box_size(), false);
  for (const auto& a : p.points) member[p.box_index(a)] = true;
  for (const auto& iv : partition.intervals) {
    if (iv.lower.size() != p.num_vars() || iv.upper.size() != p.num_vars()) return false;
    if (!divides(iv.lower, iv.upper) || !divides(iv.upper, p.g)) return false;
    if (p.rho(iv.upper) < d) return false;
    Exponent c = iv.lower;
    while (true) {
      const auto idx = p.box_index(c);
      if (!member[idx] || ++hits[idx] > 1) return false;
      std::size_t j = c.size();
      while (j-- > 0) {
        if (c[j] < iv.upper[j]) {
          ++c[j];
          break;
        }
        c[j] = iv.lower[j];
      }
      if (j == static_cast<std::size_t>(-1)) break;
    }
  }
  for (const auto& a : p.points)
    if (hits[p.box_index(a)] != 1) return false;
  return true;
}

struct SdepthOptions {
  std::size_t box_cap = default_box_cap();
  /// Failed search states remembered per decision; 0 disables memoization.
  std::size_t memo_limit = std::size_t{1} << 21;
  /// Starting guess for the search over d; the answer does not depend on it.
  std::optional<int> hint;
};

namespace detail {

// Depth-first cover search for an interval partition with every rho(upper) >= d.
//
// The lex-least uncovered point must be the lower end of its interval. Any
// interval [a, b] with rho(b) >= d splits into intervals [a', b'] where b'
// agrees with a' off a set J of coordinates raised to g, J containing
// {j : a'_j = g_j} and |J| = max(d, #{j : a'_j = g_j}); so only such tops are
// tried.
class DecisionSearch {
 public:
  DecisionSearch(const CharacteristicPoset& p, int d, std::size_t memo_limit)
      : p_(p), d_(d), memo_limit_(memo_limit), n_(p.num_vars()) {
    stride_.assign(n_, 1);
    for (std::size_t j = n_; j-- > 1;) stride_[j - 1] = stride_[j] * (p.g[j] + std::size_t{1});
    id_of_box_.assign(p.box_size(), kAbsent);
    for (std::size_t i = 0; i < p.points.size(); ++i) id_of_box_[p.box_index(p.points[i])] = static_cast<std::uint32_t>(i);
    covered_.assign((p.points.size() + 63) / 64, 0);
  }

  std::optional<IntervalPartition> run() {
    // Every point needs some admissible interval starting at it to exist at all.
    for (std::size_t i = 0; i < p_.points.size(); ++i)
      if (!has_option(i)) return std::nullopt;
    chosen_.clear();
    if (!dfs(0)) return std::nullopt;
    IntervalPartition out;
    for (const auto& [lo, hi] : chosen_) out.intervals.push_back({p_.points[lo], hi});
    return out;
  }

 private:
  static constexpr std::uint32_t kAbsent = UINT32_MAX;

  bool is_covered(std::size_t id) const { return (covered_[id / 64] >> (id % 64)) & 1U; }
  void flip(std::size_t id) { covered_[id / 64] ^= std::uint64_t{1} << (id % 64); }

  // Enumerates the admissible tops for the point `id` as coordinate sets J.
  template <typename F>
  bool for_each_option(std::size_t id, F&& f) const {
    const Exponent& a = p_.points[id];
    std::vector<std::size_t> free;
    std::size_t fixed = 0;
    for (std::size_t j = 0; j < n_; ++j) {
      if (a[j] == p_.g[j])
        ++fixed;
      else
        free.push_back(j);
    }
    const std::size_t need = d_ > static_cast<int>(fixed) ? static_cast<std::size_t>(d_) - fixed : 0;
    if (need > free.size()) return false;
    std::vector<std::size_t> pick(need);
    for (std::size_t i = 0; i < need; ++i) pick[i] = i;
    while (true) {
      if (f(free, pick)) return true;
      std::size_t i = need;
      while (i > 0 && pick[i - 1] == free.size() - need + i - 1) --i;
      if (i == 0) return false;
      ++pick[i - 1];
      for (std::size_t t = i; t < need; ++t) pick[t] = pick[t - 1] + 1;
    }
  }

  // Box points of [a, b_J], as point ids; false if one lies outside P or, when
  // `require_free`, is already covered.
  bool collect(std::size_t id, const std::vector<std::size_t>& free, const std::vector<std::size_t>& pick,
               std::vector<std::uint32_t>& cells, bool require_free) const {
    const Exponent& a = p_.points[id];
    cells.clear();
    const std::size_t base = p_.box_index(a);
    std::vector<std::uint32_t> offset(pick.size(), 0);
    while (true) {
      std::size_t idx = base;
      for (std::size_t t = 0; t < pick.size(); ++t) idx += offset[t] * stride_[free[pick[t]]];
      const auto cell = id_of_box_[idx];
      if (cell == kAbsent || (require_free && is_covered(cell))) return false;
      cells.push_back(cell);
      std::size_t t = pick.size();
      while (t-- > 0) {
        const std::size_t j = free[pick[t]];
        if (a[j] + offset[t] < p_.g[j]) {
          ++offset[t];
          break;
        }
        offset[t] = 0;
      }
      if (t == static_cast<std::size_t>(-1)) return true;
    }
  }

  bool has_option(std::size_t id) const {
    std::vector<std::uint32_t> cells;
    return for_each_option(id, [&](const auto& free, const auto& pick) { return collect(id, free, pick, cells, true); });
  }

  Exponent top_of(std::size_t id, const std::vector<std::size_t>& free, const std::vector<std::size_t>& pick) const {
    Exponent b = p_.points[id];
    for (auto t : pick) b[free[t]] = p_.g[free[t]];
    return b;
  }

  bool dfs(std::size_t cursor) {
    while (cursor < p_.points.size() && is_covered(cursor)) ++cursor;
    if (cursor == p_.points.size()) return true;
    const std::string key(reinterpret_cast<const char*>(covered_.data()), covered_.size() * sizeof(std::uint64_t));
    if (failed_.count(key) != 0) return false;

    std::vector<std::uint32_t> cells;
    const bool found = for_each_option(cursor, [&](const auto& free, const auto& pick) {
      if (!collect(cursor, free, pick, cells, true)) return false;
      for (auto c : cells) flip(c);
      bool ok = viable_after(cells);
      if (ok) {
        chosen_.emplace_back(cursor, top_of(cursor, free, pick));
        ok = dfs(cursor + 1);
        if (!ok) chosen_.pop_back();
      }
      for (auto c : cells) flip(c);
      return ok;
    });
    if (!found && failed_.size() < memo_limit_) failed_.insert(key);
    return found;
  }

  // After covering `cells`, every uncovered point below the new interval's top
  // whose options might have used those cells must still have one left.
  bool viable_after(const std::vector<std::uint32_t>& cells) const {
    const Exponent& top = p_.points[cells.back()];
    // Candidates are uncovered points c <= top; scan the sub-box below top.
    const std::size_t limit = cells.back();
    for (std::size_t c = cells.front() + 1; c < limit; ++c) {
      if (is_covered(c) || !divides(p_.points[c], top)) continue;
      if (!has_option(c)) return false;
    }
    return true;
  }

  const CharacteristicPoset& p_;
  int d_;
  std::size_t memo_limit_;
  std::size_t n_;
  std::vector<std::size_t> stride_;
  std::vector<std::uint32_t> id_of_box_;
  std::vector<std::uint64_t> covered_;
  std::vector<std::pair<std::size_t, Exponent>> chosen_;
  std::unordered_set<std::string> failed_;
};

// max over b >= a in P of rho(b), for each point; bounds sdepth from above.
inline int reachable_rho_bound(const CharacteristicPoset& p) {
  const std::size_t box = p.box_size();
  std::vector<int> best(box, -1);
  std::vector<bool> member(box, false);
  for (const auto& a : p.points) member[p.box_index(a)] = true;
  int bound = static_cast<int>(p.num_vars());
  for (auto it = p.points.rbegin(); it != p.points.rend(); ++it) {
    const auto idx = p.box_index(*it);
    int b = p.rho(*it);
    Exponent next = *it;
    for (std::size_t j = 0; j < next.size(); ++j) {
      if (next[j] == p.g[j]) continue;
      ++next[j];
      const auto nidx = p.box_index(next);
      if (member[nidx]) b = std::max(b, best[nidx]);
      --next[j];
    }
    best[idx] = b;
    bound = std::min(bound, b);
  }
  return bound;
}

}  // namespace detail

/// An interval partition of `p` with every rho(upper) >= d, or nullopt if none
/// exists. Returned partitions are re-verified before being handed out.
inline std::optional<IntervalPartition> sdepth_decision(const CharacteristicPoset& p, int d,
                                                        std::size_t memo_limit = std::size_t{1} << 21) {
  if (d < 0 || d > static_cast<int>(p.num_vars())) throw std::invalid_argument("decision depth out of range");
  auto result = detail::DecisionSearch(p, d, memo_limit).run();
  if (result && !is_valid_partition(p, *result, d)) throw std::logic_error("decision search produced an invalid partition");
  return result;
}

struct SdepthResult {
  int sdepth = 0;
  int spdim = 0;
  IntervalPartition certificate;
  int decisions = 0;
};

/// Stanley depth of the characteristic poset: the largest d admitting a
/// partition. Decision success is monotone in d, so the search walks from the
/// hint toward the boundary.
inline SdepthResult sdepth(const CharacteristicPoset& p, const SdepthOptions& options = {}) {
  const int upper = detail::reachable_rho_bound(p);
  int d = std::clamp(options.hint.value_or(0), 0, upper);
  SdepthResult out;
  auto attempt = [&](int depth) {
    ++out.decisions;
    return sdepth_decision(p, depth, options.memo_limit);
  };
  auto found = attempt(d);
  if (found) {
    out.certificate = std::move(*found);
    while (d < upper) {
      auto next = attempt(d + 1);
      if (!next) break;
      ++d;
      out.certificate = std::move(*next);
    }
  } else {
    while (!found) {
      if (d == 0) throw std::logic_error("no partition at depth 0");
      found = attempt(--d);
    }
    out.certificate = std::move(*found);
  }
  out.sdepth = d;
  out.spdim = static_cast<int>(p.num_vars()) - d;
  return out;
}

inline SdepthResult sdepth(const MonomialIdeal& ideal, PosetMode mode, const SdepthOptions& options = {}) {
  return sdepth(char_poset(ideal, mode, options.box_cap), options);
}

inline int spdim(const MonomialIdeal& ideal, PosetMode mode, const SdepthOptions& options = {}) {
  return sdepth(ideal, mode, options).spdim;
}

}  // namespace lcmlat
