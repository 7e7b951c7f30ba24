#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qtangle/ring_matrix.hpp"
#include "qtangle/tangle.hpp"

namespace qtangle {

class CobordError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A boundary point of a 1-cobordism: bottom points b1..bm and top points
/// t1..tn, numbered left to right (0-based here).
struct Endpoint {
  enum class Side : std::uint8_t { Bottom, Top };
  Side side = Side::Bottom;
  std::size_t index = 0;

  static Endpoint bottom(std::size_t i) { return {Side::Bottom, i}; }
  static Endpoint top(std::size_t i) { return {Side::Top, i}; }
  friend bool operator==(const Endpoint&, const Endpoint&) = default;
};

/// A compact 1-manifold from `source` to `target` up to diffeomorphism: a
/// perfect matching of the boundary points plus a count of closed circles.
///
/// Orientation compatibility: two bottom points or two top points may only
/// be joined if their signs differ; a bottom point and a top point only if
/// their signs agree.
class Matching1 {
 public:
  /// Validates and builds. Throws CobordError on a point used twice or
  /// missing, an out-of-range index, or an orientation conflict.
  static Matching1 create(SignWord source, SignWord target, const std::vector<std::pair<Endpoint, Endpoint>>& pairs,
                          std::size_t circles = 0);

  static Matching1 identity(const SignWord& w);
  /// () -> (s, -s)
  static Matching1 cup(Sign s);
  /// (s, -s) -> ()
  static Matching1 cap(Sign s);
  /// The closed circle: empty -> empty with one component.
  static Matching1 circle();
  static Matching1 empty();

  const SignWord& source() const noexcept { return source_; }
  const SignWord& target() const noexcept { return target_; }
  std::size_t circles() const noexcept { return circles_; }

  Endpoint partner(Endpoint p) const;
  /// Pairs in canonical order: each pair listed once from its smaller point,
  /// bottom points before top points.
  std::vector<std::pair<Endpoint, Endpoint>> pairs() const;

  friend bool operator==(const Matching1&, const Matching1&) = default;

 private:
  Matching1(SignWord source, SignWord target, std::vector<std::size_t> partner, std::size_t circles)
      : source_(std::move(source)), target_(std::move(target)), partner_(std::move(partner)), circles_(circles) {}

  // Flat point numbering: bottom i -> i, top j -> source.size() + j.
  std::size_t flat(Endpoint p) const { return p.side == Endpoint::Side::Bottom ? p.index : source_.size() + p.index; }
  Endpoint unflat(std::size_t k) const {
    return k < source_.size() ? Endpoint::bottom(k) : Endpoint::top(k - source_.size());
  }

  SignWord source_;
  SignWord target_;
  std::vector<std::size_t> partner_;
  std::size_t circles_ = 0;

  friend Matching1 compose1(const Matching1& m2, const Matching1& m1);
  friend Matching1 disjoint_union1(const Matching1& m1, const Matching1& m2);
};

/// m2 after m1, glued along m1.target() == m2.source(). Closed chains in the
/// glued interface become circles. Throws CobordError on a boundary mismatch.
Matching1 compose1(const Matching1& m2, const Matching1& m1);

/// Side by side: words concatenate, circles add.
Matching1 disjoint_union1(const Matching1& m1, const Matching1& m2);

/// The toy TQFT: dim_v^|target| x dim_v^|source| integer matrix contracting
/// each pair with the identity bilinear form, times dim_v^circles. Dual
/// factors are identified with the same coordinate space. Entries are
/// constants in `variable`.
/// The 1-cobordism traced out by a sliced diagram once crossings are
/// forgotten: each crossing becomes a transposition of its two strands.
/// Throws DiagramError if the diagram is invalid.
Matching1 underlying_matching(const SlicedDiagram& d);

RingMatrix tqft1_eval(const Matching1& m, std::size_t dim_v, const std::string& variable = "q");

}  // namespace qtangle
