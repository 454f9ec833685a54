#pragma once

// Seeded instance generators. The same spec always yields the same family:
// sampling uses mt19937_64 (fully specified by the standard) with a local
// bounded-integer routine instead of the implementation-defined standard
// distributions.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "vig/interval.hpp"
#include "vig/recognition.hpp"

namespace vig {

enum class GeneratorKind { Vertebrate, TriviallyPerfect, Invertebrate, RawRandom };

inline GeneratorKind parse_generator_kind(const std::string& name) {
  if (name == "vertebrate") return GeneratorKind::Vertebrate;
  if (name == "trivially-perfect") return GeneratorKind::TriviallyPerfect;
  if (name == "invertebrate") return GeneratorKind::Invertebrate;
  if (name == "raw-random") return GeneratorKind::RawRandom;
  throw std::invalid_argument("unknown generator kind '" + name + "'");
}

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::Vertebrate;
  std::size_t m = 0;        // backbone length (vertebrate) or coordinate span (raw/invertebrate)
  std::size_t n = 0;        // interval count for the non-vertebrate kinds
  std::size_t max_len = 3;  // cap on interval length
  double density = 1.0;     // extra intervals per backbone unit (vertebrate)
  std::uint64_t seed = 0;
  std::size_t max_attempts = 10000;  // rejection sampling budget (invertebrate)
};

namespace detail {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [lo, hi], by rejection on the raw 64-bit output.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    if (hi < lo) throw std::invalid_argument("sampler: empty range");
    const auto range = static_cast<std::uint64_t>(hi - lo) + 1;
    if (range == 0) return static_cast<std::int64_t>(engine_());
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % range);
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return lo + static_cast<std::int64_t>(x % range);
  }

  bool coin() { return (engine_() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

inline std::vector<Interval> vertebrate(const GeneratorSpec& spec, Sampler& rng) {
  std::vector<Interval> out;
  const auto m = static_cast<coord_t>(spec.m);
  for (coord_t i = 1; i <= m; ++i) out.push_back({i - 1, i});
  const auto extras = static_cast<std::size_t>(std::llround(spec.density * static_cast<double>(spec.m)));
  const auto cap = std::min<coord_t>(static_cast<coord_t>(spec.max_len), m);
  if (cap < 1) return out;
  const coord_t min_len = cap >= 2 ? 2 : 1;
  for (std::size_t k = 0; k < extras; ++k) {
    const coord_t len = rng.uniform(min_len, cap);
    const coord_t lo = rng.uniform(0, m - len);
    out.push_back({lo, lo + len});
  }
  return out;
}

// Matched brackets of a random balanced sequence: any two pairs are nested
// or disjoint.
inline std::vector<Interval> trivially_perfect(const GeneratorSpec& spec, Sampler& rng) {
  std::vector<Interval> out;
  std::vector<coord_t> open;
  std::size_t remaining = spec.n;
  coord_t pos = 0;
  while (remaining > 0 || !open.empty()) {
    const bool can_open = remaining > 0;
    const bool can_close = !open.empty();
    if (can_open && (!can_close || rng.coin())) {
      open.push_back(pos);
      --remaining;
    } else {
      out.push_back({open.back(), pos});
      open.pop_back();
    }
    ++pos;
  }
  return out;
}

inline std::vector<Interval> raw_random(const GeneratorSpec& spec, Sampler& rng) {
  const auto span = static_cast<coord_t>(spec.m > 0 ? spec.m : 2 * spec.n + 1);
  const auto cap = std::max<coord_t>(1, std::min<coord_t>(static_cast<coord_t>(spec.max_len), span));
  std::vector<Interval> out;
  for (std::size_t k = 0; k < spec.n; ++k) {
    const coord_t len = rng.uniform(1, cap);
    const coord_t lo = rng.uniform(0, span - len);
    out.push_back({lo, lo + len});
  }
  return out;
}

}  // namespace detail

inline IntervalFamily generate(const GeneratorSpec& spec) {
  detail::Sampler rng(spec.seed);
  switch (spec.kind) {
    case GeneratorKind::Vertebrate:
      return IntervalFamily(detail::vertebrate(spec, rng));
    case GeneratorKind::TriviallyPerfect:
      return IntervalFamily(detail::trivially_perfect(spec, rng));
    case GeneratorKind::RawRandom:
      return IntervalFamily(detail::raw_random(spec, rng));
    case GeneratorKind::Invertebrate:
      for (std::size_t attempt = 0; attempt < spec.max_attempts; ++attempt) {
        auto family = detail::raw_random(spec, rng);
        if (!is_vertebrate(family)) return IntervalFamily(std::move(family));
      }
      throw std::runtime_error("no invertebrate family found within " + std::to_string(spec.max_attempts) +
                               " attempts");
  }
  throw std::invalid_argument("unknown generator kind");
}

}  // namespace vig
