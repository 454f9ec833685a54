#pragma once

// s-monotonic sequences: the (v + 3)-entry profile of how many disjoint
// members of a subfamily of J(0, s) reach into each window (i, s), capped at
// v + 1. Encoding, decoding and the one-step extension used by the solver.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "vig/interval.hpp"

namespace vig {

// True iff r is s-monotonic for claw bound v:
//   -1 = r[v+2] <= r[v+1] <= ... <= r[1] <= r[0] = s, and each step is
//   either strictly decreasing or stays at -1.
inline bool is_monotonic(std::span<const coord_t> r, coord_t s, std::size_t v) {
  if (r.size() != v + 3) return false;
  if (r[0] != s || r[v + 2] != -1) return false;
  for (std::size_t u = 0; u + 1 < r.size(); ++u) {
    const bool both_unset = r[u] == -1 && r[u + 1] == -1;
    if (!both_unset && !(r[u + 1] < r[u])) return false;
  }
  return true;
}

class MonotonicSeq {
 public:
  MonotonicSeq(std::vector<coord_t> r, std::size_t v) : r_(std::move(r)), v_(v) {
    if (r_.empty() || !is_monotonic(r_, r_.front(), v_)) {
      throw std::invalid_argument("sequence is not s-monotonic");
    }
  }

  // The unique 0-monotonic sequence <0, -1, ..., -1>.
  static MonotonicSeq zero(std::size_t v) {
    std::vector<coord_t> r(v + 3, -1);
    r[0] = 0;
    return MonotonicSeq(std::move(r), v);
  }

  coord_t anchor() const { return r_.front(); }
  std::size_t claw_bound() const { return v_; }
  coord_t operator[](std::size_t u) const { return r_[u]; }
  std::span<const coord_t> values() const { return r_; }

  friend bool operator==(const MonotonicSeq&, const MonotonicSeq&) = default;
  friend std::strong_ordering operator<=>(const MonotonicSeq& a, const MonotonicSeq& b) {
    if (auto c = a.v_ <=> b.v_; c != 0) return c;
    return a.r_ <=> b.r_;
  }

  std::size_t hash() const {
    std::size_t h = std::hash<std::size_t>{}(v_);
    for (auto x : r_) h = h * 1000003u ^ std::hash<coord_t>{}(x);
    return h;
  }

 private:
  std::vector<coord_t> r_;
  std::size_t v_;
};

inline std::ostream& operator<<(std::ostream& os, const MonotonicSeq& r) {
  os << '<';
  for (std::size_t u = 0; u < r.values().size(); ++u) os << (u ? "," : "") << r[u];
  return os << '>';
}

// r_u = the largest i in [0, s] with u <= alpha(R, i, s) <= v + 1, or -1.
// Every member of R must lie inside (0, s).
inline MonotonicSeq encode(std::span<const Interval> family, coord_t s, std::size_t v) {
  if (s < 0) throw std::invalid_argument("encode: negative anchor");
  for (const auto& x : family) {
    if (!contains(Interval{0, s}, x)) {
      throw std::invalid_argument("encode: interval not contained in (0," + std::to_string(s) + ")");
    }
  }
  std::vector<std::size_t> alpha(static_cast<std::size_t>(s) + 1);
  for (coord_t i = 0; i <= s; ++i) alpha[static_cast<std::size_t>(i)] = alpha_window(family, i, s);

  std::vector<coord_t> r(v + 3, -1);
  for (std::size_t u = 0; u < v + 3; ++u) {
    for (coord_t i = s; i >= 0; --i) {
      const auto a = alpha[static_cast<std::size_t>(i)];
      if (u <= a && a <= v + 1) {
        r[u] = i;
        break;
      }
    }
  }
  return MonotonicSeq(std::move(r), v);
}

// Largest u in [0, v + 1] with i <= r_u. Equals alpha(R, i, s) when that is
// at most v, and v + 1 otherwise.
inline std::size_t alpha_seq(const MonotonicSeq& r, coord_t i) {
  if (i < 0 || i > r.anchor()) {
    throw std::invalid_argument("alpha_seq: index " + std::to_string(i) + " outside [0," +
                                std::to_string(r.anchor()) + "]");
  }
  std::size_t best = 0;
  for (std::size_t u = 0; u <= r.claw_bound() + 1; ++u) {
    if (i <= r[u]) best = u;
  }
  return best;
}

namespace detail {

// Shared tail of the extension: `fd` encodes F u D at anchor s, `w` and
// `w_all` are alpha(D, s', s) and alpha(F u D, s', s).
inline std::pair<MonotonicSeq, MonotonicSeq> extend_from(const MonotonicSeq& p_prev,
                                                         const MonotonicSeq& q_prev, coord_t s_prev,
                                                         coord_t s, std::size_t v, std::size_t w,
                                                         std::size_t w_all, const MonotonicSeq& fd) {
  const auto top = static_cast<coord_t>(v + 1);
  const coord_t span_len = s - s_prev;
  std::vector<coord_t> p(v + 3, -1), q(v + 3, -1);
  p[0] = s;
  q[0] = s;
  for (coord_t u = 1; u <= top; ++u) {
    const auto ui = static_cast<std::size_t>(u);
    p[ui] = u <= span_len ? s - u : p_prev[static_cast<std::size_t>(u - span_len)];
    q[ui] = u <= static_cast<coord_t>(w_all) ? fd[ui] : q_prev[ui - w];
  }
  return {MonotonicSeq(std::move(p), v), MonotonicSeq(std::move(q), v)};
}

}  // namespace detail

// The unique pair (p, q) extending (p', q') across the vertebrate range
// (s', s): C = J_<=(s', s) lands with the backbone units, D = J_>(s', s) and
// F (the crossing intervals leaving at s on the non-backbone side) with the
// other part.
inline std::pair<MonotonicSeq, MonotonicSeq> extend(const MonotonicSeq& p_prev, const MonotonicSeq& q_prev,
                                                    std::span<const Interval> f, std::span<const Interval> c,
                                                    std::span<const Interval> d, coord_t s_prev, coord_t s,
                                                    std::size_t v) {
  if (!(0 <= s_prev && s_prev < s)) throw std::invalid_argument("extend: need 0 <= s' < s");
  if (p_prev.anchor() != s_prev || q_prev.anchor() != s_prev) {
    throw std::invalid_argument("extend: previous sequences are not anchored at s'");
  }
  if (p_prev.claw_bound() != v || q_prev.claw_bound() != v) {
    throw std::invalid_argument("extend: claw bound mismatch");
  }
  const Interval range{s_prev, s};
  const auto sv = static_cast<coord_t>(v);
  for (const auto& x : c) {
    if (!contains(range, x) || x.length() > sv) throw std::invalid_argument("extend: malformed C");
  }
  for (const auto& x : d) {
    if (!contains(range, x) || x.length() <= sv) throw std::invalid_argument("extend: malformed D");
  }
  for (const auto& x : f) {
    if (!(x.lo < s_prev && s_prev < x.hi && x.hi <= s)) throw std::invalid_argument("extend: malformed F");
  }
  std::vector<Interval> fd(f.begin(), f.end());
  fd.insert(fd.end(), d.begin(), d.end());
  const auto w = alpha_window(d, s_prev, s);
  const auto w_all = alpha_window(fd, s_prev, s);
  return detail::extend_from(p_prev, q_prev, s_prev, s, v, w, w_all, encode(fd, s, v));
}

}  // namespace vig

template <>
struct std::hash<vig::MonotonicSeq> {
  std::size_t operator()(const vig::MonotonicSeq& r) const { return r.hash(); }
};
