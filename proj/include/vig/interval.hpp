#pragma once

// Open intervals with integer endpoints, interval families, and the greedy
// primitives (windowed independence number, disjoint-neighbour counts, the
// claw relation) the rest of the library builds on.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace vig {

using coord_t = std::int64_t;

// The open interval (lo, hi).
struct Interval {
  coord_t lo = 0;
  coord_t hi = 0;

  constexpr coord_t length() const { return hi - lo; }

  friend constexpr auto operator<=>(const Interval&, const Interval&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Interval& x) {
  return os << '(' << x.lo << ',' << x.hi << ')';
}

// Touching endpoints do not intersect.
constexpr bool intersects(const Interval& x, const Interval& y) {
  return std::max(x.lo, y.lo) < std::min(x.hi, y.hi);
}

constexpr bool contains(const Interval& outer, const Interval& inner) {
  return outer.lo <= inner.lo && inner.hi <= outer.hi;
}

// Length of the common part, 0 when disjoint.
constexpr coord_t overlap_length(const Interval& x, const Interval& y) {
  return std::max<coord_t>(0, std::min(x.hi, y.hi) - std::max(x.lo, y.lo));
}

enum class Side : std::uint8_t { First = 0, Second = 1 };

constexpr Side flip(Side s) { return s == Side::First ? Side::Second : Side::First; }

// Indexed sequence of intervals; vertex i of the represented graph is the
// i-th interval. Every member has lo < hi.
class IntervalFamily {
 public:
  IntervalFamily() = default;

  explicit IntervalFamily(std::vector<Interval> intervals) : intervals_(std::move(intervals)) {
    for (std::size_t i = 0; i < intervals_.size(); ++i) {
      if (intervals_[i].lo >= intervals_[i].hi) {
        throw std::invalid_argument("interval " + std::to_string(i) + " has lo >= hi");
      }
    }
  }

  IntervalFamily(std::initializer_list<Interval> intervals)
      : IntervalFamily(std::vector<Interval>(intervals)) {}

  std::size_t size() const { return intervals_.size(); }
  bool empty() const { return intervals_.empty(); }
  const Interval& operator[](std::size_t i) const { return intervals_[i]; }
  auto begin() const { return intervals_.begin(); }
  auto end() const { return intervals_.end(); }
  const std::vector<Interval>& intervals() const { return intervals_; }
  operator std::span<const Interval>() const { return intervals_; }

  friend bool operator==(const IntervalFamily&, const IntervalFamily&) = default;

 private:
  std::vector<Interval> intervals_;
};

// One side per vertex of a family.
struct PartitionAssignment {
  std::vector<Side> side;

  std::size_t size() const { return side.size(); }
  Side operator[](std::size_t i) const { return side[i]; }

  friend bool operator==(const PartitionAssignment&, const PartitionAssignment&) = default;
};

inline PartitionAssignment swap_sides(const PartitionAssignment& a) {
  PartitionAssignment out{a.side};
  for (auto& s : out.side) s = flip(s);
  return out;
}

// Members of `family` on side `which`.
inline std::vector<Interval> part_of(std::span<const Interval> family,
                                     const PartitionAssignment& assignment, Side which) {
  if (assignment.size() != family.size()) {
    throw std::invalid_argument("assignment length does not match family size");
  }
  std::vector<Interval> out;
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (assignment[i] == which) out.push_back(family[i]);
  }
  return out;
}

namespace detail {

// Greedy maximum number of pairwise-disjoint intervals among `candidates`:
// sort by right endpoint (ties by position in the input), take each interval
// that starts at or after the last selected right endpoint.
inline std::size_t greedy_disjoint(std::vector<Interval>& candidates) {
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Interval& a, const Interval& b) { return a.hi < b.hi; });
  std::size_t count = 0;
  bool have_last = false;
  coord_t last_hi = 0;
  for (const auto& x : candidates) {
    if (!have_last || x.lo >= last_hi) {
      ++count;
      last_hi = x.hi;
      have_last = true;
    }
  }
  return count;
}

}  // namespace detail

// Maximum size of a pairwise-disjoint subfamily of `family` whose members all
// intersect (l, r). Zero when l == r.
inline std::size_t alpha_window(std::span<const Interval> family, coord_t l, coord_t r) {
  if (l > r) throw std::invalid_argument("alpha_window: l > r");
  if (l == r) return 0;
  const Interval window{l, r};
  std::vector<Interval> hits;
  for (const auto& x : family) {
    if (intersects(x, window)) hits.push_back(x);
  }
  return detail::greedy_disjoint(hits);
}

// Maximum number of pairwise-disjoint members of `family` that intersect
// `center`, ignoring members equal to `center` itself.
inline std::size_t disjoint_neighbors(std::span<const Interval> family, const Interval& center) {
  std::vector<Interval> hits;
  for (const auto& x : family) {
    if (x != center && intersects(x, center)) hits.push_back(x);
  }
  return detail::greedy_disjoint(hits);
}

// Largest star K_{1,k} in the intersection graph, with duplicate intervals
// collapsed (a copy of the centre never counts as a leaf).
inline std::size_t claw_number(std::span<const Interval> family) {
  std::size_t best = 0;
  for (const auto& center : family) best = std::max(best, disjoint_neighbors(family, center));
  return best;
}

// R | S: every interval of R intersects at most v disjoint intervals of S
// other than itself.
inline bool mid_relation(std::span<const Interval> r, std::span<const Interval> s, std::size_t v) {
  if (v < 1) throw std::invalid_argument("mid_relation: v must be at least 1");
  return std::all_of(r.begin(), r.end(),
                     [&](const Interval& x) { return disjoint_neighbors(s, x) <= v; });
}

inline bool is_good(std::span<const Interval> family, std::size_t v) {
  return mid_relation(family, family, v);
}

// Distinct intervals in first-occurrence order, plus the bookkeeping needed to
// push an assignment on the distinct family back onto the original one.
struct DedupResult {
  IntervalFamily family;
  std::vector<std::size_t> multiplicity;    // per distinct interval
  std::vector<std::size_t> representative;  // original index -> distinct index

  // Duplicates take the side of their representative.
  PartitionAssignment expand(const PartitionAssignment& distinct_assignment) const {
    if (distinct_assignment.size() != family.size()) {
      throw std::invalid_argument("expand: assignment does not match deduplicated family");
    }
    PartitionAssignment out;
    out.side.reserve(representative.size());
    for (auto r : representative) out.side.push_back(distinct_assignment[r]);
    return out;
  }
};

inline DedupResult dedup(std::span<const Interval> family) {
  std::map<Interval, std::size_t> index;
  std::vector<Interval> distinct;
  DedupResult out;
  out.representative.reserve(family.size());
  for (const auto& x : family) {
    auto [it, inserted] = index.try_emplace(x, distinct.size());
    if (inserted) {
      distinct.push_back(x);
      out.multiplicity.push_back(0);
    }
    ++out.multiplicity[it->second];
    out.representative.push_back(it->second);
  }
  out.family = IntervalFamily(std::move(distinct));
  return out;
}

}  // namespace vig
