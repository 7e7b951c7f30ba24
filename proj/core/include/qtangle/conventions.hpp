#pragma once

// Index and sign conventions shared by the evaluator, the state-sum oracle
// and the KZ operators. Everything that fixes an ordering lives here.

#include <cstddef>

namespace qtangle::conventions {

/// Kronecker products are left-factor-major: the basis vector e_i1 (x) e_i2
/// of a dim1 * dim2 space has index i1 * dim2 + i2.
constexpr std::size_t kron_index(std::size_t i1, std::size_t i2, std::size_t dim2) noexcept {
  return i1 * dim2 + i2;
}

/// Exponent of the bracket variable attached to each planar smoothing of a
/// crossing. The vertical smoothing keeps the strands as two identity lines;
/// the horizontal one is cap-then-cup (the Temperley-Lieb generator E).
///
/// CrossOver (strand from bottom-left to top-right on top) resolves to
/// A * I + A^-1 * E; CrossUnder to A^-1 * I + A * E.
struct SmoothingWeights {
  int vertical;
  int horizontal;
};

inline constexpr SmoothingWeights kOverSmoothing{+1, -1};
inline constexpr SmoothingWeights kUnderSmoothing{-1, +1};

/// Writhe contribution of a CrossOver whose two input strands point the same
/// vertical direction. CrossUnder and mixed directions flip it.
inline constexpr int kOverSameDirectionSign = +1;

/// Default bracket variable and the exponent divisor used when reporting the
/// Jones polynomial: t = A^-4, so A^e is reported as t^(e / -4).
inline constexpr const char* kBracketVariable = "A";
inline constexpr const char* kJonesVariable = "q";
inline constexpr int kJonesExponentDivisor = -4;

}  // namespace qtangle::conventions
