#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qtangle/cobord1.hpp"
#include "qtangle/tangle.hpp"

namespace qtangle {

/// A located diagnostic. Lines and columns are 1-based and point at the
/// first character of the offending token (or where one was expected).
class ParseError : public std::runtime_error {
 public:
  enum class Kind { Syntax, Range, Validation };

  ParseError(Kind kind, std::size_t line, std::size_t column, const std::string& message, std::size_t slice = 0);

  Kind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  /// 1-based slice number for validation errors, 0 otherwise.
  std::size_t slice() const noexcept { return slice_; }
  /// The bare message without the "line:col" prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  Kind kind_;
  std::size_t line_;
  std::size_t column_;
  std::size_t slice_;
  std::string detail_;
};

struct BraidWord {
  std::vector<int> letters;
  std::size_t n_strands = 0;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

/// `braid n=<int>: w1 w2 ...` with nonzero letters, |wi| < n. Whitespace
/// (including newlines) is free and `#` starts a comment to end of line.
BraidWord parse_braid(std::string_view text);
std::string serialize_braid(const BraidWord& braid);

/// Line-oriented sliced form:
///
///   bottom: <signs over +->
///   <slice tokens>        one line per slice, bottom slice first
///
/// Tokens: id+ id- cup+ cup- cap+ cap- for strands, cups and caps; x and y
/// followed by the two input signs for CrossOver and CrossUnder (x+-, y--).
/// A slice with no generators (over the empty word) is written `.`. Blank
/// lines and `#` comments are ignored; LF and CRLF are accepted. The result
/// is validated; a failure is a Validation ParseError at the offending token.
SlicedDiagram parse_sliced(std::string_view text);

/// Canonical sliced text: single spaces, one slice per line, no trailing
/// newline.
std::string serialize(const SlicedDiagram& d);

/// `1cob src=<word> tgt=<word> pairs=[(b1,b2),(b3,t1),...] circles=<n>`
/// with points b1..bm bottom and t1..tn top, left to right.
Matching1 parse_matching1(std::string_view text);
std::string serialize_matching1(const Matching1& m);

enum class DiagramFormat { Braid, Sliced };

/// Raw diagram text with where it came from.
struct DiagramSource {
  DiagramFormat format = DiagramFormat::Sliced;
  std::string text;
  std::string origin;  // file path, or "<inline>"
};

/// Reads a UTF-8 file; the format follows the extension (.brd braid,
/// anything else sliced). Throws std::runtime_error if unreadable.
DiagramSource read_diagram_file(const std::string& path);

}  // namespace qtangle
