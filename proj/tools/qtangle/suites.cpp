#include "suites.hpp"

#include <functional>
#include <map>
#include <stdexcept>

#include "qtangle/cobord1.hpp"
#include "qtangle/evaluator.hpp"
#include "qtangle/kz.hpp"
#include "qtangle/moves.hpp"
#include "qtangle/parser.hpp"
#include "qtangle/random.hpp"

namespace qtangle::cli {

namespace {

const TheoryData& theory() {
  static const TheoryData th = default_theory();
  return th;
}

std::size_t or_default(std::size_t v, std::size_t d) { return v == 0 ? d : v; }

SignWord short_word(Rng& rng, std::size_t max_len) { return random_word(rng, rng.below(max_len + 1)); }

void fail(SuiteReport& r, std::string headline, const std::string& dump) {
  r.pass = false;
  r.lines.push_back("FAIL " + std::move(headline));
  if (!dump.empty()) r.lines.push_back(dump);
}

void summary(SuiteReport& r, const std::string& what, std::size_t passed, std::size_t total, std::uint64_t seed) {
  r.lines.push_back(what + ": " + std::to_string(passed) + "/" + std::to_string(total) + " pass (seed " +
                    std::to_string(seed) + ")");
}

SuiteReport theory_suite(const SuiteOptions&) {
  SuiteReport r;
  const TheoryReport t = check_theory(theory());
  for (const auto& c : t.checks) {
    if (c.pass) {
      r.lines.push_back("PASS " + c.name);
    } else {
      fail(r, c.name, c.detail);
    }
  }
  r.lines.push_back(std::to_string(t.passed()) + "/" + std::to_string(t.checks.size()) + " invariants pass");
  return r;
}

SuiteReport functoriality_suite(const SuiteOptions& o) {
  SuiteReport r;
  Rng rng(o.seed);
  const std::size_t n = or_default(o.samples, 200);
  std::size_t ok = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const SlicedDiagram t1 = random_diagram(rng, short_word(rng, 3));
    const SlicedDiagram t2 = random_diagram(rng, t1.target());
    const EntryDiff d = first_difference(eval(compose(t2, t1), theory()), eval(t2, theory()) * eval(t1, theory()));
    if (d.equal) {
      ++ok;
    } else {
      fail(r, "case " + std::to_string(k) + ": eval(T2 o T1) != eval(T2) eval(T1) at entry (" + std::to_string(d.row) +
                  "," + std::to_string(d.col) + ")",
           "T1:\n" + serialize(t1) + "\nT2:\n" + serialize(t2));
    }
  }
  summary(r, "functoriality", ok, n, o.seed);
  return r;
}

SuiteReport monoidality_suite(const SuiteOptions& o) {
  SuiteReport r;
  Rng rng(o.seed);
  RandomDiagramOptions opt;
  opt.max_width = 3;
  const std::size_t n = or_default(o.samples, 200);
  std::size_t ok = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const SlicedDiagram t1 = random_diagram(rng, short_word(rng, 2), opt);
    const SlicedDiagram t2 = random_diagram(rng, short_word(rng, 2), opt);
    if (eval(tensor(t1, t2), theory()) == mat_tensor(eval(t1, theory()), eval(t2, theory()))) {
      ++ok;
    } else {
      fail(r, "case " + std::to_string(k) + ": eval(T1 (x) T2) != eval(T1) (x) eval(T2)",
           "T1:\n" + serialize(t1) + "\nT2:\n" + serialize(t2));
    }
  }
  summary(r, "monoidality", ok, n, o.seed);
  return r;
}

SuiteReport moves_suite(const SuiteOptions& o) {
  SuiteReport r;
  Rng rng(o.seed);
  RandomDiagramOptions opt;
  opt.max_width = 4;
  const std::size_t n = or_default(o.samples, 100);
  std::size_t ok = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const SlicedDiagram d = random_diagram(rng, short_word(rng, 2), opt);
    const SlicedDiagram e = random_equivalent(d, 5, rng.next());
    if (eval(e, theory()) == eval(d, theory()) && writhe(e) == writhe(d)) {
      ++ok;
    } else {
      fail(r, "case " + std::to_string(k) + ": moves changed the evaluation",
           "before:\n" + serialize(d) + "\nafter:\n" + serialize(e));
    }
  }
  summary(r, "moves (R2, R3, ZIGZAG, SLIDE; 5 per diagram)", ok, n, o.seed);
  return r;
}

SuiteReport framing_suite(const SuiteOptions& o) {
  SuiteReport r;
  Rng rng(o.seed);
  const std::size_t n = or_default(o.samples, 20);
  const LaurentPoly kappa = theory().kink_factor;
  std::size_t ok = 0;
  std::size_t done = 0;
  while (done < n) {
    const SlicedDiagram d = random_closed_diagram(rng);
    const auto lv = d.levels();
    std::size_t level = 0;
    while (level < lv.size() && lv[level].empty()) ++level;
    if (level == lv.size()) continue;
    const SlicedDiagram kinked = insert_kink(d, level, rng.below(lv[level].size()), true, rng.coin());
    if (eval_scalar(kinked, theory()) == kappa * eval_scalar(d, theory())) {
      ++ok;
    } else {
      fail(r, "case " + std::to_string(done) + ": kink did not multiply by " + kappa.to_string(), serialize(d));
    }
    ++done;
  }
  r.lines.push_back("kink factor " + kappa.to_string());
  summary(r, "framing", ok, n, o.seed);
  return r;
}

SuiteReport oracle_suite(const SuiteOptions& o) {
  SuiteReport r;
  std::size_t cases = 0;
  std::size_t mismatches = 0;
  for (std::size_t n : {2u, 3u}) {
    for (std::size_t len = 0; len <= o.max_crossings; ++len) {
      for (const auto& w : all_braid_words(n, len)) {
        const SlicedDiagram d = closure(braid_to_diagram(w, n), ClosureKind::Trace);
        const LaurentPoly a = eval_scalar(d, theory());
        const LaurentPoly b = bracket_statesum(d);
        ++cases;
        if (a != b) {
          ++mismatches;
          fail(r, serialize_braid({w, n}), "eval:     " + a.to_string() + "\nstatesum: " + b.to_string());
        }
      }
    }
  }
  r.lines.push_back("oracle: " + std::to_string(mismatches) + " mismatches in " + std::to_string(cases) +
                    " trace-closed braids on 2 and 3 strands, up to " + std::to_string(o.max_crossings) +
                    " crossings");
  return r;
}

SuiteReport tqft1_suite(const SuiteOptions& o) {
  SuiteReport r;
  auto check = [&](bool ok, const std::string& what) {
    if (ok) {
      r.lines.push_back("PASS " + what);
    } else {
      fail(r, what, "");
    }
  };
  const LaurentPoly z = tqft1_eval(Matching1::circle(), 2)(0, 0);
  r.lines.push_back("Z(S^1) = " + z.to_string());
  check(z == LaurentPoly::constant(2, "q"), "Z(S^1) = 2");
  const SignWord plus = SignWord::from_string("+");
  const Matching1 zig = compose1(disjoint_union1(Matching1::cap(Sign::Plus), Matching1::identity(plus)),
                                 disjoint_union1(Matching1::identity(plus), Matching1::cup(Sign::Minus)));
  check(zig == Matching1::identity(plus), "zigzag straightens to the identity");
  check(tqft1_eval(Matching1::empty(), 2).is_identity(), "Z(empty) = 1");
  check(tqft1_eval(disjoint_union1(Matching1::circle(), Matching1::circle()), 2)(0, 0) ==
            LaurentPoly::constant(4, "q"),
        "Z(S^1 + S^1) = Z(S^1)^2");

  Rng rng(o.seed);
  const std::size_t n = or_default(o.samples, 100);
  std::size_t ok = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const SlicedDiagram t1 = random_diagram(rng, short_word(rng, 3));
    const SlicedDiagram t2 = random_diagram(rng, t1.target());
    const Matching1 m1 = underlying_matching(t1);
    const Matching1 m2 = underlying_matching(t2);
    const bool composes = tqft1_eval(compose1(m2, m1), 2) == tqft1_eval(m2, 2) * tqft1_eval(m1, 2);
    const bool tensors = tqft1_eval(disjoint_union1(m1, m2), 2) == mat_tensor(tqft1_eval(m1, 2), tqft1_eval(m2, 2));
    if (composes && tensors) {
      ++ok;
    } else {
      fail(r, "case " + std::to_string(k), serialize_matching1(m1) + "\n" + serialize_matching1(m2));
    }
  }
  summary(r, "tqft1 functoriality and monoidality", ok, n, o.seed);
  return r;
}

SuiteReport kz_flatness_suite(const SuiteOptions&) {
  SuiteReport r;
  for (std::size_t n = 2; n <= 4; ++n) {
    const FlatnessReport f = flatness_check(KZConfig::standard(n, 1.0));
    for (const auto& bad : f.failures) fail(r, "n=" + std::to_string(n) + " " + bad.identity, "");
    r.lines.push_back("n=" + std::to_string(n) + ": " + std::to_string(f.checked - f.failures.size()) + "/" +
                      std::to_string(f.checked) + " identities vanish" + (f.exact ? " (exact)" : ""));
  }
  return r;
}

using SuiteFn = std::function<SuiteReport(const SuiteOptions&)>;

const std::map<std::string, SuiteFn>& registry() {
  static const std::map<std::string, SuiteFn> m = {
      {"theory", theory_suite},          {"functoriality", functoriality_suite},
      {"monoidality", monoidality_suite}, {"moves", moves_suite},
      {"framing", framing_suite},        {"oracle", oracle_suite},
      {"tqft1", tqft1_suite},            {"kz-flatness", kz_flatness_suite},
  };
  return m;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"theory", "functoriality", "monoidality", "moves",
                                                 "framing", "oracle",        "tqft1",       "kz-flatness"};
  return names;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& options) {
  const auto it = registry().find(name);
  if (it == registry().end()) throw std::invalid_argument("unknown suite '" + name + "'");
  return it->second(options);
}

}  // namespace qtangle::cli
