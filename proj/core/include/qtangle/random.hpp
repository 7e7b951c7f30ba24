#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "qtangle/tangle.hpp"

namespace qtangle {

/// Seeded generator with platform-independent draws. std::mt19937_64 is
/// fully specified; the standard distributions are not, so bounded draws
/// are done here.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, n); n must be positive.
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(next() % n); }
  bool coin() { return (next() >> 63) != 0; }
  /// True with probability num/den.
  bool chance(std::size_t num, std::size_t den) { return below(den) < num; }
  Sign sign() { return coin() ? Sign::Plus : Sign::Minus; }

 private:
  std::mt19937_64 engine_;
};

struct RandomDiagramOptions {
  std::size_t slices = 4;
  std::size_t max_width = 5;
  /// Per-column odds (out of 8) of starting a crossing / cap / cup.
  std::size_t crossing_weight = 3;
  std::size_t cap_weight = 1;
  std::size_t cup_weight = 1;
};

SignWord random_word(Rng& rng, std::size_t length);

/// A valid diagram from `bottom` with options.slices random slices whose
/// levels never exceed options.max_width (bottom permitting).
SlicedDiagram random_diagram(Rng& rng, const SignWord& bottom, const RandomDiagramOptions& options = {});

/// A valid link diagram: random slices grown from the empty word, then
/// capped off. Every level of a diagram grown from the empty word has as
/// many + as -, so an adjacent opposite pair always exists to cap.
SlicedDiagram random_closed_diagram(Rng& rng, const RandomDiagramOptions& options = {});

/// Random braid word with letters in +-[1, n_strands). Throws
/// std::invalid_argument for a nonempty word on fewer than two strands.
std::vector<int> random_braid_word(Rng& rng, std::size_t n_strands, std::size_t length);

/// Every braid word over n_strands of exactly `length` letters, in
/// lexicographic order of letters (-(n-1), ..., -1, 1, ..., n-1).
std::vector<std::vector<int>> all_braid_words(std::size_t n_strands, std::size_t length);

}  // namespace qtangle
