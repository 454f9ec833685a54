#pragma once

// Exhaustive reference implementations. Nothing here calls into the greedy
// primitives or the solver: adjacency comes from the raw intersection test
// and every quantity is a maximum over explicit subsets.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "vig/interval.hpp"

namespace vig::oracle {

class GuardError : public std::length_error {
 public:
  GuardError(const std::string& what, std::size_t n, std::size_t limit)
      : std::length_error(what + ": " + std::to_string(n) + " intervals exceeds the exhaustive-search guard of " +
                          std::to_string(limit) + " (set VIG_ORACLE_MAX_N to override)") {}
};

// VIG_ORACLE_MAX_N, when set to a positive integer, replaces every guard.
inline std::size_t guard_limit(std::size_t default_limit) {
  if (const char* env = std::getenv("VIG_ORACLE_MAX_N")) {
    char* end = nullptr;
    const auto value = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && value > 0 && value < 64) return static_cast<std::size_t>(value);
  }
  return default_limit;
}

inline void enforce_guard(const char* what, std::size_t n, std::size_t default_limit) {
  const auto limit = guard_limit(default_limit);
  if (n > limit) throw GuardError(what, n, limit);
}

using Mask = std::uint64_t;

// adjacency[i] has bit j set iff i != j and the intervals intersect.
inline std::vector<Mask> adjacency(std::span<const Interval> family) {
  std::vector<Mask> adj(family.size(), 0);
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = 0; j < family.size(); ++j) {
      if (i != j && intersects(family[i], family[j])) adj[i] |= Mask{1} << j;
    }
  }
  return adj;
}

inline bool independent(const std::vector<Mask>& adj, Mask subset) {
  for (Mask rest = subset; rest; rest &= rest - 1) {
    if (adj[static_cast<std::size_t>(std::countr_zero(rest))] & subset) return false;
  }
  return true;
}

// Largest independent subset of `pool`, by enumerating every subset of it.
inline std::size_t max_independent_within(const std::vector<Mask>& adj, Mask pool) {
  std::size_t best = 0;
  for (Mask sub = pool;; sub = (sub - 1) & pool) {
    const auto size = static_cast<std::size_t>(std::popcount(sub));
    if (size > best && independent(adj, sub)) best = size;
    if (sub == 0) break;
  }
  return best;
}

inline std::size_t oracle_alpha(std::span<const Interval> family) {
  enforce_guard("oracle_alpha", family.size(), 20);
  const auto n = family.size();
  return max_independent_within(adjacency(family), n == 0 ? 0 : (~Mask{0} >> (64 - n)));
}

// Claw number of the intersection graph: over every centre, the largest
// independent set in its open neighbourhood.
inline std::size_t oracle_claw(std::span<const Interval> family) {
  enforce_guard("oracle_claw", family.size(), 18);
  const auto adj = adjacency(family);
  std::size_t best = 0;
  for (const auto neighbours : adj) best = std::max(best, max_independent_within(adj, neighbours));
  return best;
}

// Every maximal clique as a sorted vertex list, in increasing mask order.
inline std::vector<std::vector<std::size_t>> oracle_maximal_cliques(std::span<const Interval> family) {
  enforce_guard("oracle_maximal_cliques", family.size(), 18);
  const auto n = family.size();
  const auto adj = adjacency(family);
  const Mask all = n == 0 ? 0 : (~Mask{0} >> (64 - n));
  auto is_clique = [&](Mask sub) {
    for (Mask rest = sub; rest; rest &= rest - 1) {
      const auto i = static_cast<std::size_t>(std::countr_zero(rest));
      if ((sub & ~(Mask{1} << i) & ~adj[i]) != 0) return false;
    }
    return true;
  };
  std::vector<std::vector<std::size_t>> out;
  for (Mask sub = 1; sub <= all && all != 0; ++sub) {
    if (!is_clique(sub)) continue;
    bool maximal = true;
    for (std::size_t j = 0; j < n && maximal; ++j) {
      if (!(sub >> j & 1u) && (adj[j] & sub) == sub) maximal = false;
    }
    if (!maximal) continue;
    std::vector<std::size_t> clique;
    for (std::size_t j = 0; j < n; ++j) {
      if (sub >> j & 1u) clique.push_back(j);
    }
    out.push_back(std::move(clique));
  }
  return out;
}

// Every induced K_{1,v+1} as a vertex mask (centre plus leaves).
inline std::vector<Mask> induced_stars(std::span<const Interval> family, std::size_t v) {
  const auto adj = adjacency(family);
  std::vector<Mask> stars;
  for (std::size_t c = 0; c < family.size(); ++c) {
    const Mask pool = adj[c];
    for (Mask sub = pool;; sub = (sub - 1) & pool) {
      if (static_cast<std::size_t>(std::popcount(sub)) == v + 1 && independent(adj, sub)) {
        stars.push_back(sub | Mask{1} << c);
      }
      if (sub == 0) break;
    }
  }
  return stars;
}

struct PartitionReport {
  bool feasible = false;
  std::optional<PartitionAssignment> witness;  // lexicographically first good assignment
  std::size_t good_count = 0;
  // Filled only by partition_report().
  bool all_good_group_conforming = true;
  bool good_basic_exists = false;
};

namespace detail {

// Vertex i is assigned Second iff bit (n - 1 - i) is set, so increasing masks
// enumerate assignments in lexicographic order with First < Second.
inline PartitionAssignment assignment_of(Mask mask, std::size_t n) {
  PartitionAssignment a;
  for (std::size_t i = 0; i < n; ++i) a.side.push_back((mask >> (n - 1 - i)) & 1u ? Side::Second : Side::First);
  return a;
}

inline bool good_split(const std::vector<Mask>& stars, Mask second, Mask all) {
  const Mask first = all & ~second;
  for (const auto star : stars) {
    if ((star & first) == star || (star & second) == star) return false;
  }
  return true;
}

template <typename Visit>
PartitionReport enumerate(std::span<const Interval> family, std::size_t v, bool stop_at_first, Visit&& visit) {
  if (v < 1) throw std::invalid_argument("oracle_partition: v must be at least 1");
  enforce_guard("oracle_partition", family.size(), 16);
  const auto n = family.size();
  const Mask all = n == 0 ? 0 : (~Mask{0} >> (64 - n));
  // Stars come indexed by vertex; move them to the enumeration's bit order.
  auto stars = induced_stars(family, v);
  for (auto& star : stars) {
    Mask flipped = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if ((star >> i) & 1u) flipped |= Mask{1} << (n - 1 - i);
    }
    star = flipped;
  }
  PartitionReport report;
  for (Mask second = 0;; ++second) {
    if (good_split(stars, second, all)) {
      ++report.good_count;
      if (!report.feasible) {
        report.feasible = true;
        report.witness = assignment_of(second, n);
      }
      visit(second);
      if (stop_at_first) break;
    }
    if (second == all) break;
  }
  return report;
}

}  // namespace detail

// Tries all 2^n assignments in lexicographic order.
inline PartitionReport oracle_partition(std::span<const Interval> family, std::size_t v) {
  return detail::enumerate(family, v, true, [](Mask) {});
}

// Groups of the significant-overlap relation (intersection length >= 2v+1),
// as transitive closure of the pairwise relation.
inline std::vector<std::size_t> oracle_groups(std::span<const Interval> family, std::size_t v) {
  const auto n = family.size();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      reach[i][j] = i == j || overlap_length(family[i], family[j]) >= static_cast<coord_t>(2 * v + 1);
    }
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (reach[i][k] && reach[k][j]) reach[i][j] = true;
  std::vector<std::size_t> group(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      if (reach[i][j]) {
        group[i] = j;  // smallest member of the component
        break;
      }
    }
  }
  return group;
}

// Basic: within every maximal run (l, r) of backbone units on one side, the
// intervals inside (l, r) of length <= v sit with the units and the longer
// ones on the other side. The family must be a vertebrate representation
// with endpoints in [0, m] containing every unit.
inline bool is_basic(std::span<const Interval> family, const PartitionAssignment& a, coord_t m, std::size_t v) {
  std::vector<Side> unit_side(static_cast<std::size_t>(m));
  std::vector<bool> found(static_cast<std::size_t>(m), false);
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (family[i].length() == 1) {
      unit_side[static_cast<std::size_t>(family[i].lo)] = a[i];
      found[static_cast<std::size_t>(family[i].lo)] = true;
    }
  }
  for (bool f : found) {
    if (!f) throw std::invalid_argument("is_basic: family lacks a backbone unit");
  }
  coord_t l = 0;
  while (l < m) {
    coord_t r = l + 1;
    while (r < m && unit_side[static_cast<std::size_t>(r)] == unit_side[static_cast<std::size_t>(l)]) ++r;
    const Side units = unit_side[static_cast<std::size_t>(l)];
    for (std::size_t i = 0; i < family.size(); ++i) {
      if (family[i].lo < l || family[i].hi > r) continue;
      const Side expected = family[i].length() <= static_cast<coord_t>(v) ? units : flip(units);
      if (a[i] != expected) return false;
    }
    l = r;
  }
  return true;
}

// Full enumeration over a vertebrate representation (endpoints in [0, m],
// whole backbone present), additionally recording whether every good
// assignment is group-conforming and whether some good one is basic.
inline PartitionReport partition_report(std::span<const Interval> family, coord_t m, std::size_t v) {
  const auto n = family.size();
  const auto group = oracle_groups(family, v);
  bool conforming = true;
  bool basic = false;
  auto report = detail::enumerate(family, v, false, [&](Mask second) {
    const auto a = detail::assignment_of(second, n);
    for (std::size_t i = 0; i < n; ++i) {
      if (a[i] != a[group[i]]) conforming = false;
    }
    if (!basic && is_basic(family, a, m, v)) basic = true;
  });
  report.all_good_group_conforming = conforming;
  report.good_basic_exists = basic;
  return report;
}

}  // namespace vig::oracle
