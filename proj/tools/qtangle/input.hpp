#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "qtangle/cobord1.hpp"
#include "qtangle/parser.hpp"
#include "qtangle/tangle.hpp"

namespace qtangle::cli {

// Exit status contract.
inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitCheckFailed = 3;
inline constexpr int kExitRuntime = 4;
inline constexpr int kExitUsage = 64;

struct DiagramInput {
  std::string braid;        // inline braid text
  std::string braid_file;
  std::string sliced_file;
  std::string sliced_text;  // inline sliced text
  std::string closure = "none";

  bool given() const { return !braid.empty() || !braid_file.empty() || !sliced_file.empty() || !sliced_text.empty(); }
};

// A ParseError plus the name of the text it came from.
struct LocatedError : std::runtime_error {
  LocatedError(std::string origin, ParseError error)
      : std::runtime_error(error.what()), origin(std::move(origin)), error(std::move(error)) {}
  std::string origin;
  ParseError error;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Reads, parses and validates the selected input and applies the closure.
// Throws LocatedError, UsageError, DiagramError or std::runtime_error (I/O).
SlicedDiagram load_diagram(const DiagramInput& in);

BraidWord load_braid(const std::string& inline_text, const std::string& file);

// Maps an exception escaping a command to a diagnostic on stderr and an exit
// status. Must be called from inside a catch block.
int report_current_exception();

}  // namespace qtangle::cli
