#include <sstream>

#include "qtangle/conventions.hpp"
#include "qtangle/evaluator.hpp"

namespace qtangle {

RingMatrix TheoryData::generator_matrix(const Generator& g) const {
  switch (g.kind) {
    case GeneratorKind::IdStrand: return RingMatrix::identity(dim, variable);
    case GeneratorKind::Cup: return cup(g.first);
    case GeneratorKind::Cap: return cap(g.first);
    case GeneratorKind::CrossOver: return r_over;
    case GeneratorKind::CrossUnder: return r_under;
  }
  throw DiagramError("unknown generator kind");
}

TheoryData default_theory() {
  const std::string a = conventions::kBracketVariable;
  auto mono = [&](long long c, int e) { return LaurentPoly::monomial(c, e, a); };
  const LaurentPoly zero(a);

  // Basis order e1 (x) e1, e1 (x) e2, e2 (x) e1, e2 (x) e2.
  const RingMatrix cup = RingMatrix::from_entries(4, 1, {zero, mono(-1, 1), mono(1, -1), zero});
  const RingMatrix cap = RingMatrix::from_entries(1, 4, {zero, mono(1, 1), mono(-1, -1), zero});
  const RingMatrix e = mat_mul(cup, cap);
  const RingMatrix id4 = RingMatrix::identity(4, a);

  auto smoothing = [&](conventions::SmoothingWeights w) {
    return mat_add(id4.scaled(mono(1, w.vertical)), e.scaled(mono(1, w.horizontal)));
  };

  return TheoryData{
      .variable = a,
      .dim = 2,
      .r_over = smoothing(conventions::kOverSmoothing),
      .r_under = smoothing(conventions::kUnderSmoothing),
      .cup_plus = cup,
      .cup_minus = cup,
      .cap_plus = cap,
      .cap_minus = cap,
      .loop_value = mono(-1, 2) + mono(-1, -2),
      .kink_factor = mono(-1, 3),
  };
}

bool TheoryReport::all_pass() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

std::size_t TheoryReport::passed() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.pass ? 1 : 0;
  return n;
}

namespace {

// Empty string when equal, otherwise a description of the first mismatch.
std::string compare(const std::string& what, const RingMatrix& lhs, const RingMatrix& rhs) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
    std::ostringstream os;
    os << what << ": shape " << lhs.rows() << "x" << lhs.cols() << " vs " << rhs.rows() << "x" << rhs.cols();
    return os.str();
  }
  const EntryDiff d = first_difference(lhs, rhs);
  if (d.equal) return {};
  std::ostringstream os;
  os << what << ": entry (" << d.row + 1 << "," << d.col + 1 << ") is " << lhs(d.row, d.col).to_string()
     << ", expected " << rhs(d.row, d.col).to_string();
  return os.str();
}

TheoryCheck run_check(std::string name, const std::vector<std::string>& failures) {
  TheoryCheck c{std::move(name), true, {}};
  for (const auto& f : failures) {
    if (!f.empty()) {
      c.pass = false;
      c.detail = f;
      break;
    }
  }
  return c;
}

}  // namespace

TheoryReport check_theory(const TheoryData& th) {
  const std::size_t n = th.dim;
  const RingMatrix id = RingMatrix::identity(n, th.variable);
  const RingMatrix id2 = RingMatrix::identity(n * n, th.variable);
  TheoryReport report;

  try {
    report.checks.push_back(run_check("r2-inverse", {compare("r_over * r_under", th.r_over * th.r_under, id2),
                                                     compare("r_under * r_over", th.r_under * th.r_over, id2)}));
  } catch (const RingError& e) {
    report.checks.push_back({"r2-inverse", false, e.what()});
  }

  try {
    auto ybe = [&](const char* label, const RingMatrix& r) {
      const RingMatrix r1 = mat_tensor(r, id);
      const RingMatrix r2 = mat_tensor(id, r);
      return compare(std::string("Yang-Baxter for ") + label, r1 * r2 * r1, r2 * r1 * r2);
    };
    report.checks.push_back(run_check("yang-baxter", {ybe("r_over", th.r_over), ybe("r_under", th.r_under)}));
  } catch (const RingError& e) {
    report.checks.push_back({"yang-baxter", false, e.what()});
  }

  try {
    std::vector<std::string> zig;
    for (Sign s : {Sign::Plus, Sign::Minus}) {
      const std::string tag = std::string("(") + sign_char(s) + ")";
      zig.push_back(compare("(cap" + tag + " x I)(I x cup" + std::string("(") + sign_char(flip(s)) + "))",
                            mat_tensor(th.cap(s), id) * mat_tensor(id, th.cup(flip(s))), id));
      zig.push_back(compare("(I x cap" + std::string("(") + sign_char(flip(s)) + "))(cup" + tag + " x I)",
                            mat_tensor(id, th.cap(flip(s))) * mat_tensor(th.cup(s), id), id));
    }
    report.checks.push_back(run_check("zigzag", zig));
  } catch (const RingError& e) {
    report.checks.push_back({"zigzag", false, e.what()});
  }

  try {
    std::vector<std::string> loops;
    for (Sign s : {Sign::Plus, Sign::Minus}) {
      loops.push_back(compare(std::string("cap(") + sign_char(s) + ") * cup(" + sign_char(s) + ")",
                              th.cap(s) * th.cup(s), RingMatrix::scalar(th.loop_value)));
    }
    report.checks.push_back(run_check("loop", loops));
  } catch (const RingError& e) {
    report.checks.push_back({"loop", false, e.what()});
  }
  return report;
}

}  // namespace qtangle
