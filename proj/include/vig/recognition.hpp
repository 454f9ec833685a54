#pragma once

// Sweepline independence number / clique cover, maximal clique arrangement,
// the vertebrate test, and the compact vertebrate representation.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "vig/interval.hpp"

namespace vig {

struct SweepResult {
  std::vector<std::size_t> reps;      // T_i, pairwise disjoint
  std::vector<Interval> windows;      // S_i = (r_i - 1, r_i)
  std::vector<std::size_t> round_of;  // vertex -> 0-based round
  std::size_t m_sweep = 0;
};

// Repeatedly takes the remaining interval with the smallest right endpoint
// (lowest index on ties) and removes, as one round, every remaining interval
// containing its last unit. The representatives form an independent set and
// the rounds a clique cover of the same size.
inline SweepResult sweepline(std::span<const Interval> family) {
  const std::size_t n = family.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return family[a].hi < family[b].hi; });

  SweepResult out;
  constexpr auto unassigned = static_cast<std::size_t>(-1);
  out.round_of.assign(n, unassigned);
  std::size_t cursor = 0;
  while (true) {
    while (cursor < n && out.round_of[order[cursor]] != unassigned) ++cursor;
    if (cursor == n) break;
    const std::size_t rep = order[cursor];
    const coord_t r = family[rep].hi;
    const Interval window{r - 1, r};
    const std::size_t round = out.reps.size();
    out.reps.push_back(rep);
    out.windows.push_back(window);
    // Every remaining interval ends at or after r, so containment reduces to lo <= r - 1.
    for (std::size_t k = cursor; k < n; ++k) {
      const std::size_t i = order[k];
      if (out.round_of[i] == unassigned && contains(family[i], window)) out.round_of[i] = round;
    }
  }
  out.m_sweep = out.reps.size();
  return out;
}

struct CliqueArrangement {
  std::vector<std::vector<std::size_t>> cliques;  // sorted vertex lists, left to right
  std::vector<std::pair<std::size_t, std::size_t>> vertex_range;  // 0-based first/last clique

  std::size_t count() const { return cliques.size(); }
};

// Left-to-right endpoint sweep. At each coordinate, intervals ending there are
// processed before those starting there (open intervals touching at a point
// are disjoint); the alive set is emitted as a maximal clique whenever
// something ends after the last emission saw a new start.
inline CliqueArrangement maximal_cliques(std::span<const Interval> family) {
  const std::size_t n = family.size();
  std::vector<coord_t> coords;
  coords.reserve(2 * n);
  for (const auto& x : family) {
    coords.push_back(x.lo);
    coords.push_back(x.hi);
  }
  std::sort(coords.begin(), coords.end());
  coords.erase(std::unique(coords.begin(), coords.end()), coords.end());

  std::vector<std::vector<std::size_t>> starts(coords.size()), ends(coords.size());
  auto slot = [&](coord_t c) {
    return static_cast<std::size_t>(std::lower_bound(coords.begin(), coords.end(), c) - coords.begin());
  };
  for (std::size_t i = 0; i < n; ++i) {
    starts[slot(family[i].lo)].push_back(i);
    ends[slot(family[i].hi)].push_back(i);
  }

  CliqueArrangement out;
  out.vertex_range.assign(n, {0, 0});
  std::vector<bool> alive(n, false);
  std::vector<bool> seen(n, false);
  bool fresh = false;
  for (std::size_t c = 0; c < coords.size(); ++c) {
    if (!ends[c].empty() && fresh) {
      std::vector<std::size_t> clique;
      for (std::size_t i = 0; i < n; ++i) {
        if (!alive[i]) continue;
        clique.push_back(i);
        if (!seen[i]) {
          out.vertex_range[i].first = out.cliques.size();
          seen[i] = true;
        }
        out.vertex_range[i].second = out.cliques.size();
      }
      out.cliques.push_back(std::move(clique));
      fresh = false;
    }
    for (auto i : ends[c]) alive[i] = false;
    for (auto i : starts[c]) alive[i] = true;
    if (!starts[c].empty()) fresh = true;
  }
  return out;
}

// The empty family counts as vertebrate (0 = 0).
inline bool is_vertebrate(std::span<const Interval> family) {
  return sweepline(family).m_sweep == maximal_cliques(family).count();
}

class InvertebrateError : public std::runtime_error {
 public:
  InvertebrateError(std::size_t alpha, std::size_t m_cliques)
      : std::runtime_error("graph is invertebrate: alpha = " + std::to_string(alpha) +
                           " < m(G) = " + std::to_string(m_cliques)),
        alpha_(alpha),
        m_cliques_(m_cliques) {}

  std::size_t alpha() const { return alpha_; }
  std::size_t m_cliques() const { return m_cliques_; }

 private:
  std::size_t alpha_;
  std::size_t m_cliques_;
};

// Duplicate-free family with endpoints in [0, m] containing every unit
// (i - 1, i), 1 <= i <= m. `origins` / `rep_of` link it to the input family
// it was built from (identity when built with from_normalized).
struct VertebrateRep {
  IntervalFamily family;
  coord_t m = 0;
  std::vector<std::size_t> backbone;              // backbone[i - 1] = index of (i - 1, i)
  std::vector<std::vector<std::size_t>> origins;  // rep index -> original indices
  std::vector<std::size_t> rep_of;                // original index -> rep index

  std::size_t size() const { return family.size(); }

  // Pulls an assignment on the representation back to the original vertices.
  PartitionAssignment to_original(const PartitionAssignment& rep_assignment) const {
    if (rep_assignment.size() != family.size()) {
      throw std::invalid_argument("to_original: assignment does not match representation");
    }
    PartitionAssignment out;
    out.side.reserve(rep_of.size());
    for (auto r : rep_of) out.side.push_back(rep_assignment[r]);
    return out;
  }

  // Wraps a family that is already in normalized form. m is the largest right
  // endpoint. Throws unless the family is duplicate-free, lies in [0, m] and
  // contains the whole backbone.
  static VertebrateRep from_normalized(IntervalFamily family) {
    VertebrateRep rep;
    coord_t m = 0;
    for (const auto& x : family) {
      if (x.lo < 0) throw std::invalid_argument("vertebrate representation has a negative endpoint");
      m = std::max(m, x.hi);
    }
    rep.m = m;
    std::vector<std::optional<std::size_t>> unit(static_cast<std::size_t>(m));
    std::vector<Interval> sorted(family.begin(), family.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw std::invalid_argument("vertebrate representation contains duplicate intervals");
    }
    for (std::size_t i = 0; i < family.size(); ++i) {
      if (family[i].length() == 1) unit[static_cast<std::size_t>(family[i].lo)] = i;
    }
    for (coord_t i = 0; i < m; ++i) {
      const auto& u = unit[static_cast<std::size_t>(i)];
      if (!u) {
        throw std::invalid_argument("vertebrate representation is missing backbone unit (" +
                                    std::to_string(i) + "," + std::to_string(i + 1) + ")");
      }
      rep.backbone.push_back(*u);
    }
    rep.origins.resize(family.size());
    rep.rep_of.resize(family.size());
    for (std::size_t i = 0; i < family.size(); ++i) {
      rep.origins[i] = {i};
      rep.rep_of[i] = i;
    }
    rep.family = std::move(family);
    return rep;
  }
};

// Maps each vertex with clique range [a, b] (1-based) to (a - 1, b), then
// removes duplicates. Throws InvertebrateError when alpha < m(G).
inline VertebrateRep vertebrate_representation(std::span<const Interval> family) {
  const auto sweep = sweepline(family);
  const auto cliques = maximal_cliques(family);
  if (sweep.m_sweep != cliques.count()) throw InvertebrateError(sweep.m_sweep, cliques.count());

  std::vector<Interval> converted;
  converted.reserve(family.size());
  for (const auto& [first, last] : cliques.vertex_range) {
    converted.push_back({static_cast<coord_t>(first), static_cast<coord_t>(last + 1)});
  }
  auto distinct = dedup(converted);
  auto rep = VertebrateRep::from_normalized(std::move(distinct.family));
  rep.m = static_cast<coord_t>(cliques.count());
  rep.rep_of = std::move(distinct.representative);
  for (auto& o : rep.origins) o.clear();
  for (std::size_t i = 0; i < rep.rep_of.size(); ++i) rep.origins[rep.rep_of[i]].push_back(i);
  return rep;
}

}  // namespace vig
