#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qtangle/tangle.hpp"

namespace qtangle {

/// Local equivalence moves on sliced diagrams.
///
/// R2      two opposite crossings on adjacent columns cancel.
/// R3      a strand slides across a crossing: crossings at columns
///         (c, c+1, c) become (c+1, c, c+1) with their kinds reversed, and
///         back. Sign patterns where the outer crossings agree but differ from
///         the middle one are not braid relations and are rejected.
/// Zigzag  a cup/cap S-bend on one strand.
/// Slide   the interchange law: a slice splits into two slices whose
///         non-identity generators sit in disjoint columns, or two such
///         slices merge into one.
/// R1      a curl on one strand. Not part of the invariance set: it changes
///         the framing and multiplies evaluations by the kink factor.
enum class MoveKind : std::uint8_t { R1, R2, R3, Zigzag, Slide };
enum class MoveDirection : std::uint8_t { Insert, Remove };

/// Where a move applies.
///
/// For inserts of R1/R2/Zigzag, `slice` is the level (0 = bottom word,
/// k = word above slice k-1) and `column` the 0-based strand position. For
/// removals and R3, `slice` is the index of the first slice of the pattern
/// and `column` its leftmost column. For Slide inserts, `column` is the
/// generator index inside slice `slice`; for Slide removals the slices
/// `slice` and `slice + 1` are merged.
///
/// `variant` picks among shapes: R2 0 = over then under, 1 = under then over;
/// Zigzag 0 = cup to the right of the strand, 1 = cup to the left; Slide
/// 0 = the chosen generator moves to the upper slice, 1 = it stays in the
/// lower slice while the rest move up; R1 bit 0 = curl on the left side,
/// bit 1 = under crossing (negative curl).
struct MoveSite {
  std::size_t slice = 0;
  std::size_t column = 0;
  int variant = 0;
};

struct MoveCandidate {
  MoveKind kind;
  MoveDirection direction;
  MoveSite site;
};

class MoveError : public DiagramError {
 public:
  using DiagramError::DiagramError;
};

std::string to_string(MoveKind kind);

/// Applies one move. Throws MoveError when the pattern does not match.
SlicedDiagram apply_move(const SlicedDiagram& d, MoveKind kind, MoveSite site, MoveDirection direction);
inline SlicedDiagram apply_move(const SlicedDiagram& d, const MoveCandidate& m) {
  return apply_move(d, m.kind, m.site, m.direction);
}

/// Every applicable (site, variant) for the given kind and direction.
std::vector<MoveCandidate> enumerate_moves(const SlicedDiagram& d, MoveKind kind, MoveDirection direction);

/// The four framing-preserving kinds.
inline constexpr MoveKind kInvarianceMoves[] = {MoveKind::R2, MoveKind::R3, MoveKind::Zigzag, MoveKind::Slide};

/// Applies `n_moves` moves drawn from `kinds`, deterministically from `seed`:
/// each step picks a kind uniformly among those with an applicable move,
/// then a candidate uniformly.
SlicedDiagram random_equivalent(const SlicedDiagram& d, std::size_t n_moves, std::uint64_t seed,
                                std::span<const MoveKind> kinds = kInvarianceMoves);

/// Inserts a curl at level `level`, column `column`: positive uses
/// CrossOver (writhe +1), negative CrossUnder.
SlicedDiagram insert_kink(const SlicedDiagram& d, std::size_t level, std::size_t column, bool positive,
                          bool left_side = false);

/// Merges two adjacent slices if their non-identity generators occupy
/// disjoint columns.
std::optional<Slice> merge_slices(const Slice& lower, const Slice& upper);

}  // namespace qtangle
