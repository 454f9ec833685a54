#pragma once

// Exact 2-partition into induced subgraphs of claw number at most v, for a
// vertebrate representation J with backbone (0,1), ..., (m-1,m).
//
// The table holds, for each position s, every reachable tuple
// (p, q, A, B) such that some good basic 2-partition (P, Q) of J(0, s) with
// (s-1, s) in P is encoded by (p, q), P | P u A and Q | Q u B, where (A, B)
// splits the intervals crossing s. States are produced forward: a state at s
// comes from a state at some s' < s by giving the whole range (s', s) to one
// part (short intervals with the backbone, long ones opposite), so the part
// roles swap from one stage to the next.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "vig/encoding.hpp"
#include "vig/interval.hpp"
#include "vig/recognition.hpp"

namespace vig {

// Both parts are good.
inline bool verify_partition(std::span<const Interval> family, const PartitionAssignment& assignment,
                             std::size_t v) {
  if (assignment.size() != family.size()) return false;
  return is_good(part_of(family, assignment, Side::First), v) &&
         is_good(part_of(family, assignment, Side::Second), v);
}

// ---------------------------------------------------------------------------
// Significant-overlap groups

struct GroupingInfo {
  std::vector<std::size_t> group_of;              // vertex -> group id
  std::vector<std::vector<std::size_t>> groups;   // sorted members, ordered by smallest member
};

// Upper bound on the number of groups meeting any integer point.
constexpr std::size_t pierce_bound(std::size_t v) { return 2 * v * v + v; }

// Number of distinct groups among intervals (a, b) with a < x < b.
inline std::size_t groups_at_point(std::span<const Interval> family, const GroupingInfo& g, coord_t x) {
  std::vector<std::size_t> seen;
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (family[i].lo < x && x < family[i].hi) seen.push_back(g.group_of[i]);
  }
  std::sort(seen.begin(), seen.end());
  return static_cast<std::size_t>(std::unique(seen.begin(), seen.end()) - seen.begin());
}

// Connected components of the graph joining intervals whose intersection has
// length at least 2v + 1. Any good 2-partition keeps each group on one side.
inline GroupingInfo compute_groups(const VertebrateRep& rep, std::size_t v) {
  const auto& family = rep.family;
  const std::size_t n = family.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  const auto threshold = static_cast<coord_t>(2 * v + 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (family[i].length() < threshold) continue;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (overlap_length(family[i], family[j]) >= threshold) {
        const auto a = find(i), b = find(j);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
  }

  GroupingInfo out;
  out.group_of.assign(n, 0);
  std::map<std::size_t, std::size_t> id_of_root;
  for (std::size_t i = 0; i < n; ++i) {
    auto [it, inserted] = id_of_root.try_emplace(find(i), out.groups.size());
    if (inserted) out.groups.emplace_back();
    out.group_of[i] = it->second;
    out.groups[it->second].push_back(i);
  }

  for (coord_t x = 0; x <= rep.m; ++x) {
    if (groups_at_point(family, out, x) > pierce_bound(v)) {
      throw std::logic_error("point " + std::to_string(x) + " meets more than 2v^2+v groups");
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Crossing families

struct CrossingFamily {
  coord_t s = 0;
  std::vector<std::size_t> members;  // increasing vertex index
};

inline CrossingFamily crossing_family(const VertebrateRep& rep, coord_t s) {
  if (s < 0 || s > rep.m) throw std::invalid_argument("crossing_family: s outside [0, m]");
  CrossingFamily k{s, {}};
  for (std::size_t i = 0; i < rep.family.size(); ++i) {
    if (rep.family[i].lo < s && s < rep.family[i].hi) k.members.push_back(i);
  }
  return k;
}

// J, v and everything derived from them that the table needs at every stage.
class PartitionProblem {
 public:
  PartitionProblem(VertebrateRep rep, std::size_t v) : rep_(std::move(rep)), v_(v) {
    if (v_ < 1) throw std::invalid_argument("claw bound v must be at least 1");
    validate();
    groups_ = compute_groups(rep_, v_);
    for (coord_t s = 0; s <= rep_.m; ++s) {
      crossing_.push_back(crossing_family(rep_, s));
      std::vector<std::size_t> g;
      for (auto i : crossing_.back().members) g.push_back(groups_.group_of[i]);
      std::sort(g.begin(), g.end());
      g.erase(std::unique(g.begin(), g.end()), g.end());
      if (g.size() > 63) throw std::length_error("too many groups cross a single point");
      crossing_groups_.push_back(std::move(g));
    }
  }

  const VertebrateRep& rep() const { return rep_; }
  const IntervalFamily& family() const { return rep_.family; }
  std::size_t v() const { return v_; }
  coord_t m() const { return rep_.m; }
  const GroupingInfo& groups() const { return groups_; }
  const CrossingFamily& crossing(coord_t s) const { return crossing_.at(static_cast<std::size_t>(s)); }
  const std::vector<std::size_t>& crossing_groups(coord_t s) const {
    return crossing_groups_.at(static_cast<std::size_t>(s));
  }

  // Bit position of vertex i's group among the groups crossing s.
  std::size_t group_bit(coord_t s, std::size_t i) const {
    const auto& g = crossing_groups(s);
    return static_cast<std::size_t>(std::lower_bound(g.begin(), g.end(), groups_.group_of[i]) - g.begin());
  }

  // Bit set = the group lies on the first side.
  std::vector<Side> sides_from_mask(coord_t s, std::uint64_t mask) const {
    std::vector<Side> sides;
    for (auto i : crossing(s).members) {
      sides.push_back((mask >> group_bit(s, i)) & 1u ? Side::First : Side::Second);
    }
    return sides;
  }

  // Empty when the assignment splits a group.
  std::optional<std::uint64_t> mask_from_sides(coord_t s, std::span<const Side> sides) const {
    const auto& members = crossing(s).members;
    if (sides.size() != members.size()) throw std::invalid_argument("side count does not match K_s");
    std::uint64_t mask = 0, seen = 0;
    for (std::size_t k = 0; k < members.size(); ++k) {
      const std::uint64_t bit = std::uint64_t{1} << group_bit(s, members[k]);
      const bool first = sides[k] == Side::First;
      if ((seen & bit) && (((mask & bit) != 0) != first)) return std::nullopt;
      seen |= bit;
      if (first) mask |= bit;
    }
    return mask;
  }

 private:
  void validate() const {
    VertebrateRep check = VertebrateRep::from_normalized(rep_.family);
    if (check.m != rep_.m) throw std::invalid_argument("representation m does not match its intervals");
  }

  VertebrateRep rep_;
  std::size_t v_;
  GroupingInfo groups_;
  std::vector<CrossingFamily> crossing_;
  std::vector<std::vector<std::size_t>> crossing_groups_;
};

// ---------------------------------------------------------------------------
// Table entries

struct BackPointer {
  coord_t s_prev = 0;
  std::size_t state = 0;  // index into the stage at s_prev
};

// Canonical orientation: p encodes the part holding (s-1, s). Bit k of
// crossing_mask puts the k-th group crossing s on that part.
struct DPState {
  coord_t s = 0;
  MonotonicSeq p;
  MonotonicSeq q;
  std::uint64_t crossing_mask = 0;
  std::optional<BackPointer> back;

  std::vector<Side> side_of_crossing(const PartitionProblem& problem) const {
    return problem.sides_from_mask(s, crossing_mask);
  }
};

// The range (s', s) as one vertebrate range: C = J_<=(s', s), D = J_>(s', s).
struct Segment {
  coord_t s_prev = 0;
  coord_t s = 0;
  std::vector<std::size_t> c;
  std::vector<std::size_t> d;

  Segment(const PartitionProblem& problem, coord_t from, coord_t to) : s_prev(from), s(to) {
    const Interval range{from, to};
    const auto v = static_cast<coord_t>(problem.v());
    const auto& family = problem.family();
    for (std::size_t i = 0; i < family.size(); ++i) {
      if (!contains(range, family[i])) continue;
      (family[i].length() <= v ? c : d).push_back(i);
    }
  }
};

namespace detail {

inline std::vector<Interval> gather(const IntervalFamily& family, std::span<const std::size_t> idx) {
  std::vector<Interval> out;
  out.reserve(idx.size());
  for (auto i : idx) out.push_back(family[i]);
  return out;
}

}  // namespace detail

// One step of the recurrence with both crossing assignments fixed. prepare()
// checks consistency on K_{s'} n K_s and both claw conditions on the range
// itself, and precomputes everything the remaining checks need; apply() then
// handles the intervals leaving at s and computes the extended sequences for
// any stored state at s' carrying the given crossing assignment.
class Transition {
 public:
  // prev_sides: sides of K_{s'} members relative to the state at s'
  // (First = part holding (s'-1, s')); sides: sides of K_s members relative
  // to s (First = part holding (s-1, s), i.e. A).
  static std::optional<Transition> prepare(const PartitionProblem& problem, const Segment& seg,
                                           std::span<const Side> prev_sides, std::span<const Side> sides) {
    const auto& family = problem.family();
    const auto& k_prev = problem.crossing(seg.s_prev).members;
    const auto& k_next = problem.crossing(seg.s).members;
    if (prev_sides.size() != k_prev.size() || sides.size() != k_next.size()) {
      throw std::invalid_argument("transition: side vectors do not match crossing families");
    }
    const std::size_t v = problem.v();

    // Membership of K_s by vertex, for identity lookups.
    std::vector<std::optional<Side>> at_s(family.size());
    for (std::size_t k = 0; k < k_next.size(); ++k) at_s[k_next[k]] = sides[k];

    std::vector<Interval> with_c, with_d;  // A' u A and B' u B
    std::vector<Interval> leave_c, leave_d;  // E = A' \ A, F = B' \ B
    std::vector<bool> in_prev(family.size(), false);
    for (std::size_t k = 0; k < k_prev.size(); ++k) {
      const auto i = k_prev[k];
      in_prev[i] = true;
      const Side side = flip(prev_sides[k]);  // roles swap between stages
      if (at_s[i] && *at_s[i] != side) return std::nullopt;  // condition 2
      (side == Side::First ? with_c : with_d).push_back(family[i]);
      if (!at_s[i]) (side == Side::First ? leave_c : leave_d).push_back(family[i]);
    }
    std::vector<Interval> new_c, new_d;  // A \ A', B \ B'
    for (std::size_t k = 0; k < k_next.size(); ++k) {
      const auto i = k_next[k];
      if (in_prev[i]) continue;
      (sides[k] == Side::First ? with_c : with_d).push_back(family[i]);
      (sides[k] == Side::First ? new_c : new_d).push_back(family[i]);
    }

    const auto c = detail::gather(family, seg.c);
    const auto d = detail::gather(family, seg.d);

    // Condition 4.
    with_c.insert(with_c.end(), c.begin(), c.end());
    with_d.insert(with_d.end(), d.begin(), d.end());
    if (!mid_relation(c, with_c, v) || !mid_relation(d, with_d, v)) return std::nullopt;

    Transition t;
    t.s_prev_ = seg.s_prev;
    t.s_ = seg.s;
    t.v_ = v;

    // Condition 5, the part independent of (p', q').
    new_c.insert(new_c.end(), c.begin(), c.end());
    new_d.insert(new_d.end(), d.begin(), d.end());
    for (const auto& x : leave_c) {
      const auto right = alpha_window(new_c, seg.s_prev, x.hi);
      if (right > v) return std::nullopt;
      t.leaving_p_.push_back({x.lo, right});
    }
    for (const auto& x : leave_d) {
      const auto right = alpha_window(new_d, seg.s_prev, x.hi);
      if (right > v) return std::nullopt;
      t.leaving_q_.push_back({x.lo, right});
    }

    // Condition 3 inputs.
    std::vector<Interval> fd = leave_d;
    fd.insert(fd.end(), d.begin(), d.end());
    t.w_ = alpha_window(d, seg.s_prev, seg.s);
    t.w_all_ = alpha_window(fd, seg.s_prev, seg.s);
    t.fd_.emplace(encode(fd, seg.s, v));
    return t;
  }

  // stored_p / stored_q: the canonical sequences of a state at s'. The part
  // that received (s', s) is the one that did not hold (s'-1, s'), so
  // p' = stored_q and q' = stored_p.
  std::optional<std::pair<MonotonicSeq, MonotonicSeq>> apply(const MonotonicSeq& stored_p,
                                                            const MonotonicSeq& stored_q) const {
    const MonotonicSeq& p_prev = stored_q;
    const MonotonicSeq& q_prev = stored_p;
    for (const auto& [a, right] : leaving_p_) {
      if (alpha_seq(p_prev, a) + right > v_) return std::nullopt;
    }
    for (const auto& [a, right] : leaving_q_) {
      if (alpha_seq(q_prev, a) + right > v_) return std::nullopt;
    }
    return detail::extend_from(p_prev, q_prev, s_prev_, s_, v_, w_, w_all_, *fd_);
  }

 private:
  Transition() = default;

  coord_t s_prev_ = 0;
  coord_t s_ = 0;
  std::size_t v_ = 0;
  std::vector<std::pair<coord_t, std::size_t>> leaving_p_;  // (a, alpha(C u (A \ A'), s', b))
  std::vector<std::pair<coord_t, std::size_t>> leaving_q_;  // (a, alpha(D u (B \ B'), s', b))
  std::size_t w_ = 0;
  std::size_t w_all_ = 0;
  std::optional<MonotonicSeq> fd_;
};

// All five conditions for one predecessor state and one candidate (A, B) of
// K_s given as sides (First = A). Returns the state's (p, q) on success.
inline std::optional<std::pair<MonotonicSeq, MonotonicSeq>> check_transition(
    const PartitionProblem& problem, const DPState& prev, coord_t s, std::span<const Side> sides) {
  if (!(0 <= prev.s && prev.s < s && s <= problem.m())) {
    throw std::invalid_argument("check_transition: need 0 <= s' < s <= m");
  }
  const Segment seg(problem, prev.s, s);
  const auto prev_sides = prev.side_of_crossing(problem);
  const auto t = Transition::prepare(problem, seg, prev_sides, sides);
  if (!t) return std::nullopt;
  return t->apply(prev.p, prev.q);
}

// ---------------------------------------------------------------------------
// Forward table

struct StageStats {
  coord_t s = 0;
  std::size_t states = 0;
  std::size_t transitions = 0;  // (state, assignment) pairs examined
  long double cap = 0;          // (s+2)^{2(v+1)} * 2^{2v^2+v}
};

struct DPTable {
  std::vector<std::vector<DPState>> stages;  // stages[s], sorted by (p, q, crossing_mask)
  std::vector<StageStats> stats;
};

struct SolveOptions {
  std::size_t workers = 1;
};

inline long double state_cap(coord_t s, std::size_t v) {
  return std::pow(static_cast<long double>(s + 2), static_cast<long double>(2 * (v + 1))) *
         std::pow(2.0L, static_cast<long double>(pierce_bound(v)));
}

namespace detail {

struct StateKey {
  MonotonicSeq p;
  MonotonicSeq q;
  std::uint64_t mask;

  friend bool operator==(const StateKey&, const StateKey&) = default;
  friend auto operator<=>(const StateKey& a, const StateKey& b) {
    return std::tie(a.p, a.q, a.mask) <=> std::tie(b.p, b.q, b.mask);
  }
};

struct StateKeyHash {
  std::size_t operator()(const StateKey& k) const {
    return k.p.hash() * 31u ^ k.q.hash() * 17u ^ std::hash<std::uint64_t>{}(k.mask);
  }
};

// Producers are compared in scan order: s', then predecessor rank, then the
// assignment mask. The smallest one becomes the back-pointer.
struct Producer {
  coord_t s_prev;
  std::size_t state;
  std::uint64_t mask;

  friend auto operator<=>(const Producer&, const Producer&) = default;
};

using StageMap = std::unordered_map<StateKey, Producer, StateKeyHash>;

inline void offer(StageMap& map, StateKey key, const Producer& from) {
  auto [it, inserted] = map.try_emplace(std::move(key), from);
  if (!inserted && from < it->second) it->second = from;
}

}  // namespace detail

inline DPTable build_table(const PartitionProblem& problem, const SolveOptions& options = {}) {
  const std::size_t v = problem.v();
  const coord_t m = problem.m();
  DPTable table;
  table.stages.resize(static_cast<std::size_t>(m) + 1);
  table.stages[0].push_back(DPState{0, MonotonicSeq::zero(v), MonotonicSeq::zero(v), 0, std::nullopt});
  table.stats.push_back({0, 1, 0, state_cap(0, v)});

  // Per stage: crossing masks present, each with the ranks of its states.
  std::vector<std::map<std::uint64_t, std::vector<std::size_t>>> by_mask(static_cast<std::size_t>(m) + 1);
  by_mask[0][0] = {0};

  for (coord_t s = 1; s <= m; ++s) {
    const std::size_t width = problem.crossing_groups(s).size();
    const std::uint64_t all_bits = width == 0 ? 0 : (~std::uint64_t{0} >> (64 - width));

    struct Work {
      coord_t s_prev;
      std::uint64_t prev_mask;
      const std::vector<std::size_t>* ranks;
    };
    std::vector<Work> work;
    std::vector<std::optional<Segment>> segments(static_cast<std::size_t>(s));
    for (coord_t sp = 0; sp < s; ++sp) {
      Segment seg(problem, sp, s);
      // D | D is implied by condition 4 whatever the crossing assignments are.
      if (!mid_relation(detail::gather(problem.family(), seg.d), detail::gather(problem.family(), seg.d), v)) {
        continue;
      }
      segments[static_cast<std::size_t>(sp)] = std::move(seg);
      for (const auto& [mask, ranks] : by_mask[static_cast<std::size_t>(sp)]) {
        work.push_back({sp, mask, &ranks});
      }
    }

    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> tried{0};
    auto run = [&](detail::StageMap& out) {
      std::size_t local_tried = 0;
      for (std::size_t w = next++; w < work.size(); w = next++) {
        const auto& item = work[w];
        const auto& seg = *segments[static_cast<std::size_t>(item.s_prev)];
        const auto& prev_stage = table.stages[static_cast<std::size_t>(item.s_prev)];
        const auto prev_sides = problem.sides_from_mask(item.s_prev, item.prev_mask);
        const auto& k_prev = problem.crossing(item.s_prev).members;

        // Groups with a member in K_{s'} n K_s are pinned (with the part
        // roles swapped); the rest are free.
        std::uint64_t forced = 0, forced_val = 0;
        for (std::size_t k = 0; k < k_prev.size(); ++k) {
          if (problem.family()[k_prev[k]].hi <= s) continue;
          const std::uint64_t bit = std::uint64_t{1} << problem.group_bit(s, k_prev[k]);
          forced |= bit;
          if (flip(prev_sides[k]) == Side::First) forced_val |= bit;
        }
        const std::uint64_t free = all_bits & ~forced;
        for (std::uint64_t sub = 0;; sub = (sub - free) & free) {
          const std::uint64_t mask = forced_val | sub;
          const auto sides = problem.sides_from_mask(s, mask);
          if (auto t = Transition::prepare(problem, seg, prev_sides, sides)) {
            for (auto rank : *item.ranks) {
              ++local_tried;
              const auto& prev = prev_stage[rank];
              if (auto next_pq = t->apply(prev.p, prev.q)) {
                detail::offer(out, {std::move(next_pq->first), std::move(next_pq->second), mask},
                              {item.s_prev, rank, mask});
              }
            }
          }
          if (sub == free) break;
        }
      }
      tried += local_tried;
    };

    detail::StageMap merged;
    const std::size_t workers = std::max<std::size_t>(1, std::min(options.workers, work.size()));
    if (workers == 1) {
      run(merged);
    } else {
      std::vector<detail::StageMap> partial(workers);
      std::vector<std::thread> pool;
      for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(run, std::ref(partial[t]));
      for (auto& th : pool) th.join();
      for (auto& part : partial) {
        for (auto& [key, from] : part) detail::offer(merged, key, from);
      }
    }

    std::vector<std::pair<detail::StateKey, detail::Producer>> sorted(merged.begin(), merged.end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    auto& stage = table.stages[static_cast<std::size_t>(s)];
    auto& masks = by_mask[static_cast<std::size_t>(s)];
    stage.reserve(sorted.size());
    for (auto& [key, from] : sorted) {
      masks[key.mask].push_back(stage.size());
      stage.push_back(DPState{s, std::move(key.p), std::move(key.q), key.mask, BackPointer{from.s_prev, from.state}});
    }

    StageStats st{s, stage.size(), tried.load(), state_cap(s, v)};
    if (static_cast<long double>(st.states) > st.cap) {
      throw std::logic_error("stage " + std::to_string(s) + " exceeds the state-count cap");
    }
    table.stats.push_back(st);
  }
  return table;
}

struct SolveResult {
  bool feasible = false;
  std::optional<PartitionAssignment> rep_witness;  // over rep.family
  std::optional<PartitionAssignment> witness;      // over the original vertices
  std::vector<StageStats> stats;
};

// Walks back-pointers from the given final state and assigns every interval:
// C and D of each range, crossing intervals from the state masks.
inline PartitionAssignment reconstruct_witness(const PartitionProblem& problem, const DPTable& table,
                                               std::size_t final_state) {
  const auto& family = problem.family();
  std::vector<std::optional<Side>> side(family.size());
  auto assign = [&](std::size_t i, Side sd) {
    if (side[i] && *side[i] != sd) throw std::logic_error("witness reconstruction is inconsistent");
    side[i] = sd;
  };

  coord_t s = problem.m();
  std::size_t idx = final_state;
  Side holder = Side::First;  // absolute side of the part holding (s-1, s)
  while (s > 0) {
    const auto& state = table.stages[static_cast<std::size_t>(s)][idx];
    const auto crossing_sides = state.side_of_crossing(problem);
    const auto& members = problem.crossing(s).members;
    for (std::size_t k = 0; k < members.size(); ++k) {
      assign(members[k], crossing_sides[k] == Side::First ? holder : flip(holder));
    }
    const auto back = *state.back;
    const Segment seg(problem, back.s_prev, s);
    for (auto i : seg.c) assign(i, holder);
    for (auto i : seg.d) assign(i, flip(holder));
    s = back.s_prev;
    idx = back.state;
    holder = flip(holder);
  }

  PartitionAssignment out;
  for (const auto& sd : side) {
    if (!sd) throw std::logic_error("witness reconstruction left an interval unassigned");
    out.side.push_back(*sd);
  }
  return out;
}

// Decides whether J splits into two parts of claw number at most v, with a
// verified witness on success.
inline SolveResult solve(const PartitionProblem& problem, const SolveOptions& options = {}) {
  const auto table = build_table(problem, options);
  SolveResult out;
  out.stats = table.stats;
  const auto& last = table.stages.back();
  if (last.empty()) return out;

  out.feasible = true;
  auto rep_witness = reconstruct_witness(problem, table, 0);
  if (!verify_partition(problem.family(), rep_witness, problem.v())) {
    throw std::logic_error("reconstructed witness is not a good partition");
  }
  out.witness = problem.rep().to_original(rep_witness);
  out.rep_witness = std::move(rep_witness);
  return out;
}

inline SolveResult solve(const VertebrateRep& rep, std::size_t v, const SolveOptions& options = {}) {
  return solve(PartitionProblem(rep, v), options);
}

}  // namespace vig
