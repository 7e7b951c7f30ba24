#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qtangle {

/// + : the strand crosses the level moving upward; - : moving downward.
enum class Sign : std::int8_t { Plus = 1, Minus = -1 };

constexpr Sign flip(Sign s) noexcept { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }
constexpr char sign_char(Sign s) noexcept { return s == Sign::Plus ? '+' : '-'; }

class DiagramError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An object of the tangle category: a finite word over {+, -}. The empty
/// word is the monoidal unit.
class SignWord {
 public:
  SignWord() = default;
  explicit SignWord(std::vector<Sign> signs) : signs_(std::move(signs)) {}
  /// Parses a string over "+-"; throws DiagramError on anything else.
  static SignWord from_string(std::string_view text);
  static SignWord uniform(std::size_t n, Sign s) { return SignWord(std::vector<Sign>(n, s)); }

  std::size_t size() const noexcept { return signs_.size(); }
  bool empty() const noexcept { return signs_.empty(); }
  Sign operator[](std::size_t i) const { return signs_[i]; }
  const std::vector<Sign>& signs() const noexcept { return signs_; }

  SignWord concat(const SignWord& other) const;
  SignWord reversed() const;
  SignWord sub(std::size_t pos, std::size_t len) const;

  std::string to_string() const;

  friend bool operator==(const SignWord&, const SignWord&) = default;

 private:
  std::vector<Sign> signs_;
};

/// Flips every sign, preserving order.
SignWord involute(const SignWord& w);

enum class GeneratorKind : std::uint8_t { IdStrand, Cup, Cap, CrossOver, CrossUnder };

/// An elementary tangle occupying a few adjacent columns of a slice.
///
/// IdStrand(s): (s) -> (s). Cup(s): () -> (s, -s). Cap(s): (s, -s) -> ().
/// CrossOver(s, t) / CrossUnder(s, t): (s, t) -> (t, s); for CrossOver the
/// strand entering bottom-left and leaving top-right passes over.
struct Generator {
  GeneratorKind kind = GeneratorKind::IdStrand;
  Sign first = Sign::Plus;
  Sign second = Sign::Plus;  // crossings only

  static Generator id(Sign s) { return {GeneratorKind::IdStrand, s, s}; }
  static Generator cup(Sign s) { return {GeneratorKind::Cup, s, s}; }
  static Generator cap(Sign s) { return {GeneratorKind::Cap, s, s}; }
  static Generator over(Sign s, Sign t) { return {GeneratorKind::CrossOver, s, t}; }
  static Generator under(Sign s, Sign t) { return {GeneratorKind::CrossUnder, s, t}; }

  bool is_identity() const noexcept { return kind == GeneratorKind::IdStrand; }
  bool is_crossing() const noexcept {
    return kind == GeneratorKind::CrossOver || kind == GeneratorKind::CrossUnder;
  }
  std::size_t in_arity() const noexcept;
  std::size_t out_arity() const noexcept;
  SignWord input() const;
  SignWord output() const;

  /// Same generator with over/under exchanged; identity on non-crossings.
  Generator mirrored() const;

  /// Text token: id+, cup-, cap+, x+-, y--, ...
  std::string token() const;

  friend bool operator==(const Generator& a, const Generator& b) {
    if (a.kind != b.kind || a.first != b.first) return false;
    return !a.is_crossing() || a.second == b.second;
  }
};

using Slice = std::vector<Generator>;

/// A tangle diagram in generic position: a bottom word and slices read
/// bottom to top. May hold inconsistent data; validate() reports it and
/// operations that need consistent boundaries throw DiagramError.
class SlicedDiagram {
 public:
  SlicedDiagram() = default;
  SlicedDiagram(SignWord bottom, std::vector<Slice> slices)
      : bottom_(std::move(bottom)), slices_(std::move(slices)) {}

  const SignWord& bottom() const noexcept { return bottom_; }
  const std::vector<Slice>& slices() const noexcept { return slices_; }
  std::size_t slice_count() const noexcept { return slices_.size(); }

  const SignWord& source() const noexcept { return bottom_; }
  /// Word above the last slice. Throws DiagramError if the diagram is invalid.
  SignWord target() const;
  /// Words at every level: levels()[0] = bottom, levels()[k] = word above
  /// slice k-1. Throws DiagramError if invalid.
  std::vector<SignWord> levels() const;

  bool is_closed() const;
  std::size_t crossing_count() const noexcept;

  friend bool operator==(const SlicedDiagram&, const SlicedDiagram&) = default;

 private:
  SignWord bottom_;
  std::vector<Slice> slices_;
};

/// Output word of one slice applied to `below`, or nullopt on mismatch.
std::optional<SignWord> slice_output(const Slice& slice, const SignWord& below);

struct ValidationReport {
  bool ok = true;
  std::size_t slice = 0;      // 1-based slice number of the first failure
  std::size_t generator = 0;  // 1-based generator position within that slice
  std::string message;

  explicit operator bool() const noexcept { return ok; }
};

/// Checks every slice interface and generator sign constraint. Never throws.
ValidationReport validate(const SlicedDiagram& d);

/// The diagram with one slice of identity strands over w.
SlicedDiagram identity_diagram(const SignWord& w);
/// Bottom w, no slices.
SlicedDiagram bare_diagram(const SignWord& w);

/// t2 after t1: slices of t1 followed by slices of t2. Throws DiagramError
/// when t1.target() != t2.bottom().
SlicedDiagram compose(const SlicedDiagram& t2, const SlicedDiagram& t1);

/// Juxtaposition with t1 on the left. The shorter factor is padded with
/// identity slices on top so both advance in lockstep.
SlicedDiagram tensor(const SlicedDiagram& t1, const SlicedDiagram& t2);

/// Vertical mirror: reads the diagram top to bottom. Source and target swap
/// (each involuted, since strand directions reverse), cups and caps swap,
/// and over/under crossings swap.
SlicedDiagram reflect(const SlicedDiagram& d);

/// Swaps every CrossOver with CrossUnder (the mirror-image link).
SlicedDiagram mirror(const SlicedDiagram& d);

/// Signed crossing count. A CrossOver whose strands point the same vertical
/// direction contributes +1, otherwise -1; CrossUnder the negation.
int writhe(const SlicedDiagram& d);

enum class BraidOrientation { AllUp, AllDown };

/// One slice per letter: +i is CrossOver at columns (i, i+1), -i CrossUnder,
/// identity strands elsewhere. Throws DiagramError on an index outside
/// 1 <= |i| < n_strands.
SlicedDiagram braid_to_diagram(const std::vector<int>& word, std::size_t n_strands,
                               BraidOrientation orientation = BraidOrientation::AllUp);

enum class ClosureKind { Trace, Plat };

/// Closes d into a link diagram.
///
/// Trace: requires source == target; nested cups below create the return
/// strands on the right, d runs alongside identities on them, and nested
/// caps above join each top point to its return strand.
/// Plat: requires even source and target that pair up as adjacent
/// (s, -s) couples; one slice of cups below and one slice of caps above.
SlicedDiagram closure(const SlicedDiagram& d, ClosureKind kind);

}  // namespace qtangle
