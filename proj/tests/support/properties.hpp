#pragma once

// Property checks shared by the unit tests and the acceptance suite. Each
// returns an empty string on success and a description of the first
// violation otherwise.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "vig/vig.hpp"

namespace vig::testing {

inline std::string describe(std::span<const Interval> family) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < family.size(); ++i) os << (i ? "," : "") << family[i];
  os << '}';
  return os.str();
}

// Small vertebrate instance: 1 <= m <= max_m backbone units plus up to
// max_n - m extra intervals of length 2..max_len.
inline IntervalFamily small_vertebrate(std::uint64_t seed, std::size_t max_m, std::size_t max_n) {
  detail::Sampler pick(seed ^ 0x9e3779b97f4a7c15ull);
  GeneratorSpec spec;
  spec.kind = GeneratorKind::Vertebrate;
  spec.m = static_cast<std::size_t>(pick.uniform(1, static_cast<std::int64_t>(max_m)));
  spec.max_len = static_cast<std::size_t>(pick.uniform(2, 8));
  const auto extras = pick.uniform(0, static_cast<std::int64_t>(max_n - spec.m));
  spec.density = static_cast<double>(extras) / static_cast<double>(spec.m);
  spec.seed = seed;
  return generate(spec);
}

// Mixed pool for recognition checks: raw, laminar, vertebrate, invertebrate.
inline IntervalFamily mixed_family(std::uint64_t seed, std::size_t max_n) {
  detail::Sampler pick(seed * 2654435761u + 17);
  GeneratorSpec spec;
  spec.seed = seed;
  spec.n = static_cast<std::size_t>(pick.uniform(0, static_cast<std::int64_t>(max_n)));
  spec.max_len = static_cast<std::size_t>(pick.uniform(1, 10));
  spec.m = static_cast<std::size_t>(pick.uniform(2, 25));
  switch (seed % 4) {
    case 0:
      spec.kind = GeneratorKind::RawRandom;
      break;
    case 1:
      spec.kind = GeneratorKind::TriviallyPerfect;
      break;
    case 2:
      return small_vertebrate(seed, 6, max_n);
    default:
      spec.kind = GeneratorKind::Invertebrate;
      spec.n = std::max<std::size_t>(spec.n, 4);
      spec.max_len = std::max<std::size_t>(spec.max_len, 3);
      spec.m = std::max<std::size_t>(spec.m, 8);
      break;
  }
  return generate(spec);
}

// Solver decision equals exhaustive search; YES carries a good witness.
inline std::string oracle_equivalence(const IntervalFamily& family, std::size_t v) {
  const auto rep = vertebrate_representation(family);
  const auto solved = solve(rep, v);
  const auto brute = oracle::oracle_partition(family, v);
  if (solved.feasible != brute.feasible) {
    return "v=" + std::to_string(v) + " solver says " + (solved.feasible ? "YES" : "NO") + ", oracle says " +
           (brute.feasible ? "YES" : "NO") + " on " + describe(family);
  }
  if (solved.feasible) {
    if (!solved.witness || !verify_partition(family, *solved.witness, v)) {
      return "solver witness fails verification on " + describe(family);
    }
    if (!verify_partition(family, swap_sides(*solved.witness), v)) {
      return "swapped witness fails verification on " + describe(family);
    }
  }
  if (brute.feasible && !verify_partition(family, *brute.witness, v)) {
    return "oracle witness fails verify_partition on " + describe(family);
  }
  return {};
}

inline std::string recognition_properties(const IntervalFamily& family) {
  const auto sweep = sweepline(family);
  const auto cliques = maximal_cliques(family);
  const auto alpha = oracle::oracle_alpha(family);
  if (sweep.m_sweep != alpha) return "m_sweep != brute-force alpha on " + describe(family);

  for (std::size_t a = 0; a < sweep.reps.size(); ++a) {
    for (std::size_t b = a + 1; b < sweep.reps.size(); ++b) {
      if (intersects(family[sweep.reps[a]], family[sweep.reps[b]])) return "sweep representatives intersect";
    }
  }
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (sweep.round_of[i] >= sweep.m_sweep) return "vertex without a sweep round";
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      if (sweep.round_of[i] == sweep.round_of[j] && !intersects(family[i], family[j])) {
        return "sweep round is not a clique on " + describe(family);
      }
    }
  }

  auto expected = oracle::oracle_maximal_cliques(family);
  auto got = cliques.cliques;
  std::sort(expected.begin(), expected.end());
  std::sort(got.begin(), got.end());
  if (expected != got) return "maximal cliques differ from brute force on " + describe(family);
  for (std::size_t i = 0; i < family.size(); ++i) {
    const auto [first, last] = cliques.vertex_range[i];
    for (std::size_t c = 0; c < cliques.count(); ++c) {
      const auto& members = cliques.cliques[c];
      const bool inside = std::binary_search(members.begin(), members.end(), i);
      if (inside != (first <= c && c <= last)) return "clique membership is not consecutive on " + describe(family);
    }
  }

  if (sweep.m_sweep > cliques.count()) return "alpha exceeds m(G)";
  if (is_vertebrate(family) != (alpha == expected.size())) return "is_vertebrate disagrees with alpha = m(G)";
  return {};
}

// Compact representation: endpoints in [0, m], full backbone, maximum length
// equal to the claw number (1 for edgeless graphs), same graph, idempotent.
inline std::string representation_properties(const IntervalFamily& family, std::size_t* edgeless = nullptr) {
  const auto rep = vertebrate_representation(family);
  const auto m = rep.m;
  if (m != static_cast<coord_t>(oracle::oracle_alpha(family))) return "rep m differs from alpha";
  coord_t longest = 0;
  for (const auto& x : rep.family) {
    if (x.lo < 0 || x.hi > m) return "endpoint outside [0, m] in " + describe(rep.family);
    longest = std::max(longest, x.length());
  }
  for (coord_t i = 1; i <= m; ++i) {
    if (std::find(rep.family.begin(), rep.family.end(), Interval{i - 1, i}) == rep.family.end()) {
      return "backbone unit missing";
    }
    if (rep.family[rep.backbone[static_cast<std::size_t>(i - 1)]] != Interval{i - 1, i}) return "backbone index wrong";
  }
  const auto psi = static_cast<coord_t>(oracle::oracle_claw(family));
  if (psi == 0 && edgeless) ++*edgeless;
  if (!family.empty() && longest != std::max<coord_t>(psi, 1)) {
    return "max length " + std::to_string(longest) + " != claw number " + std::to_string(psi) + " on " +
           describe(family);
  }
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      const bool before = intersects(family[i], family[j]);
      const bool after = intersects(rep.family[rep.rep_of[i]], rep.family[rep.rep_of[j]]);
      if (before != after) return "adjacency changed on " + describe(family);
    }
  }
  const auto again = vertebrate_representation(rep.family);
  auto a = rep.family.intervals();
  auto b = again.family.intervals();
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) return "representation is not idempotent";
  return {};
}

namespace detail {

inline std::vector<Interval> inside(std::span<const Interval> family, coord_t l, coord_t r) {
  std::vector<Interval> out;
  for (const auto& x : family) {
    if (contains(Interval{l, r}, x)) out.push_back(x);
  }
  return out;
}

inline std::vector<Side> random_sides(std::size_t n, vig::detail::Sampler& rng) {
  std::vector<Side> sides;
  for (std::size_t i = 0; i < n; ++i) sides.push_back(rng.coin() ? Side::First : Side::Second);
  return sides;
}

}  // namespace detail

// alpha(P, a, b) = alpha(P(0,s), a, s) + alpha(P(s,m), s, b) whenever
// (s-1, s) and (s, s+1) sit in different parts.
inline std::string cut_identity(const VertebrateRep& rep, std::uint64_t seed) {
  const coord_t m = rep.m;
  if (m < 2) return {};
  vig::detail::Sampler rng(seed);
  const auto& family = rep.family;
  auto sides = detail::random_sides(family.size(), rng);
  const coord_t s = rng.uniform(1, m - 1);
  sides[rep.backbone[static_cast<std::size_t>(s - 1)]] = Side::First;
  sides[rep.backbone[static_cast<std::size_t>(s)]] = Side::Second;
  const PartitionAssignment a{sides};
  for (Side which : {Side::First, Side::Second}) {
    const auto part = part_of(family, a, which);
    const auto left = detail::inside(part, 0, s);
    const auto right = detail::inside(part, s, m);
    for (coord_t lo = 0; lo < s; ++lo) {
      for (coord_t hi = s + 1; hi <= m; ++hi) {
        if (alpha_window(part, lo, hi) != alpha_window(left, lo, s) + alpha_window(right, s, hi)) {
          return "cut identity fails at s=" + std::to_string(s) + " on " + describe(family);
        }
      }
    }
  }
  return {};
}

// alpha_seq(encode(R), i) agrees with the brute-force windowed alpha, capped at v + 1.
inline std::string decode_agreement(const VertebrateRep& rep, std::size_t v, std::uint64_t seed) {
  vig::detail::Sampler rng(seed);
  const coord_t s = rng.uniform(0, rep.m);
  std::vector<Interval> subfamily;
  for (const auto& x : detail::inside(rep.family, 0, s)) {
    if (rng.coin()) subfamily.push_back(x);
  }
  const auto r = encode(subfamily, s, v);
  if (!is_monotonic(r.values(), s, v)) return "encode produced a non-monotonic sequence";
  for (coord_t i = 0; i <= s; ++i) {
    std::vector<Interval> hitting;
    for (const auto& x : subfamily) {
      if (intersects(x, Interval{i, s})) hitting.push_back(x);
    }
    const auto truth = i == s ? std::size_t{0} : oracle::oracle_alpha(hitting);
    if (alpha_seq(r, i) != std::min(truth, v + 1)) {
      return "decode mismatch at i=" + std::to_string(i) + ", s=" + std::to_string(s) + " on " +
             describe(subfamily);
    }
  }
  return {};
}

// For a random basic partition of J(0, s) whose last vertebrate range is
// (s', s), extending the prefix encodings reproduces the encodings of the
// whole parts.
inline std::string extension_agreement(const VertebrateRep& rep, std::size_t v, std::uint64_t seed) {
  const coord_t m = rep.m;
  if (m < 1) return {};
  vig::detail::Sampler rng(seed);
  const auto& family = rep.family;
  const coord_t s = rng.uniform(1, m);

  std::vector<Side> unit(static_cast<std::size_t>(s));
  for (auto& u : unit) u = rng.coin() ? Side::First : Side::Second;
  unit.back() = Side::First;
  coord_t s_prev = s - 1;
  while (s_prev > 0 && unit[static_cast<std::size_t>(s_prev - 1)] == Side::First) --s_prev;

  // Runs of equal unit sides decide everything inside them; the rest is random.
  std::vector<std::optional<Side>> side(family.size());
  coord_t l = 0;
  while (l < s) {
    coord_t r = l + 1;
    while (r < s && unit[static_cast<std::size_t>(r)] == unit[static_cast<std::size_t>(l)]) ++r;
    const Side units = unit[static_cast<std::size_t>(l)];
    for (std::size_t i = 0; i < family.size(); ++i) {
      if (contains(Interval{l, r}, family[i])) {
        side[i] = family[i].length() <= static_cast<coord_t>(v) ? units : flip(units);
      }
    }
    l = r;
  }
  std::vector<Interval> p_all, q_all, p_prefix, q_prefix, f, c, d;
  for (std::size_t i = 0; i < family.size(); ++i) {
    const auto& x = family[i];
    if (!contains(Interval{0, s}, x)) continue;
    if (!side[i]) side[i] = rng.coin() ? Side::First : Side::Second;
    const bool first = *side[i] == Side::First;
    (first ? p_all : q_all).push_back(x);
    if (x.hi <= s_prev) (first ? p_prefix : q_prefix).push_back(x);
    if (x.lo < s_prev && s_prev < x.hi && !first) f.push_back(x);
    if (x.lo >= s_prev) (x.length() <= static_cast<coord_t>(v) ? c : d).push_back(x);
  }
  const auto [p, q] = extend(encode(p_prefix, s_prev, v), encode(q_prefix, s_prev, v), f, c, d, s_prev, s, v);
  if (p != encode(p_all, s, v) || q != encode(q_all, s, v)) {
    std::ostringstream os;
    os << "extension mismatch s'=" << s_prev << " s=" << s << " got " << p << ' ' << q << " want "
       << encode(p_all, s, v) << ' ' << encode(q_all, s, v) << " on " << describe(family);
    return os.str();
  }
  return {};
}

// Every good partition found by exhaustive search is group-conforming, and a
// good basic one exists whenever any good one does.
inline std::string groups_and_basic(const VertebrateRep& rep, std::size_t v, std::size_t* nontrivial = nullptr) {
  const auto report = oracle::partition_report(rep.family, rep.m, v);
  if (!report.all_good_group_conforming) return "good partition splits a group on " + describe(rep.family);
  if (report.feasible && !report.good_basic_exists) return "no basic good partition on " + describe(rep.family);
  const auto brute = oracle::oracle_groups(rep.family, v);
  const auto fast = compute_groups(rep, v);
  for (std::size_t i = 0; i < rep.size(); ++i) {
    for (std::size_t j = 0; j < rep.size(); ++j) {
      if ((brute[i] == brute[j]) != (fast.group_of[i] == fast.group_of[j])) return "group mismatch";
    }
  }
  if (nontrivial && fast.groups.size() < rep.size()) ++*nontrivial;
  return {};
}

// Independent count of groups meeting each integer point.
inline std::string pierce_bound(const VertebrateRep& rep, std::size_t v, std::size_t* worst = nullptr) {
  const auto group = oracle::oracle_groups(rep.family, v);
  for (coord_t x = 0; x <= rep.m; ++x) {
    std::set<std::size_t> seen;
    for (std::size_t i = 0; i < rep.size(); ++i) {
      if (rep.family[i].lo < x && x < rep.family[i].hi) seen.insert(group[i]);
    }
    if (worst) *worst = std::max(*worst, seen.size());
    if (seen.size() > 2 * v * v + v) {
      return "point " + std::to_string(x) + " meets " + std::to_string(seen.size()) + " groups";
    }
  }
  compute_groups(rep, v);  // throws if its own check disagrees
  return {};
}

// "# expect v=N YES|NO" lines of a fixture file.
struct Fixture {
  std::string name;
  IntervalFamily family;
  std::vector<std::pair<std::size_t, bool>> expected;
};

inline std::vector<Fixture> load_fixtures(const std::filesystem::path& dir) {
  std::vector<Fixture> out;
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() == ".txt") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  const std::regex expect(R"(#\s*expect\s+v=(\d+)\s+(YES|NO))");
  for (const auto& path : files) {
    std::ifstream in(path);
    std::stringstream text;
    text << in.rdbuf();
    Fixture fx{path.stem().string(), parse_instance(text.str()), {}};
    std::string line;
    std::istringstream lines(text.str());
    while (std::getline(lines, line)) {
      std::smatch match;
      if (std::regex_search(line, match, expect)) {
        fx.expected.push_back({std::stoul(match[1]), match[2] == "YES"});
      }
    }
    out.push_back(std::move(fx));
  }
  return out;
}

}  // namespace vig::testing
