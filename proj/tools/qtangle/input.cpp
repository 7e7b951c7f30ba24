#include "input.hpp"

#include <iostream>

#include "qtangle/kz.hpp"
#include "qtangle/laurent.hpp"

namespace qtangle::cli {

namespace {

template <class F>
auto located(const std::string& origin, F&& parse) {
  try {
    return parse();
  } catch (const ParseError& e) {
    throw LocatedError(origin, e);
  }
}

ClosureKind closure_kind(const std::string& name) {
  if (name == "trace") return ClosureKind::Trace;
  if (name == "plat") return ClosureKind::Plat;
  throw UsageError("unknown closure '" + name + "' (expected none, trace or plat)");
}

}  // namespace

BraidWord load_braid(const std::string& inline_text, const std::string& file) {
  if (!file.empty()) {
    const DiagramSource src = read_diagram_file(file);
    return located(file, [&] { return parse_braid(src.text); });
  }
  return located("<braid>", [&] { return parse_braid(inline_text); });
}

SlicedDiagram load_diagram(const DiagramInput& in) {
  const int count = !in.braid.empty() + !in.braid_file.empty() + !in.sliced_file.empty() + !in.sliced_text.empty();
  if (count == 0) throw UsageError("no diagram given (use --braid, --braid-file, --sliced or --sliced-text)");
  if (count > 1) throw UsageError("give exactly one diagram input");

  SlicedDiagram d;
  if (!in.braid.empty() || !in.braid_file.empty()) {
    const BraidWord b = load_braid(in.braid, in.braid_file);
    d = braid_to_diagram(b.letters, b.n_strands);
  } else if (!in.sliced_file.empty()) {
    const DiagramSource src = read_diagram_file(in.sliced_file);
    if (src.format == DiagramFormat::Braid) {
      const BraidWord b = located(in.sliced_file, [&] { return parse_braid(src.text); });
      d = braid_to_diagram(b.letters, b.n_strands);
    } else {
      d = located(in.sliced_file, [&] { return parse_sliced(src.text); });
    }
  } else {
    d = located("<sliced>", [&] { return parse_sliced(in.sliced_text); });
  }
  if (in.closure != "none") d = closure(d, closure_kind(in.closure));
  return d;
}

int report_current_exception() {
  try {
    throw;
  } catch (const LocatedError& e) {
    const ParseError& p = e.error;
    std::cerr << e.origin << ":" << p.line() << ":" << p.column() << ": ";
    switch (p.kind()) {
      case ParseError::Kind::Syntax:
        std::cerr << "parse error: " << p.detail() << "\n";
        return kExitParse;
      case ParseError::Kind::Range:
        std::cerr << "range error: " << p.detail() << "\n";
        return kExitValidation;
      case ParseError::Kind::Validation:
        std::cerr << p.detail() << "\n";
        return kExitValidation;
    }
    return kExitParse;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DiagramError& e) {
    std::cerr << "invalid diagram: " << e.what() << "\n";
    return kExitValidation;
  } catch (const CobordError& e) {
    std::cerr << "invalid 1-cobordism: " << e.what() << "\n";
    return kExitValidation;
  } catch (const KZError& e) {
    std::cerr << "kz error: " << e.what() << "\n";
    return kExitRuntime;
  } catch (const RingError& e) {
    std::cerr << "ring error: " << e.what() << "\n";
    return kExitRuntime;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
}

}  // namespace qtangle::cli
