#include "qtangle/evaluator.hpp"

#include <nlohmann/json.hpp>

namespace qtangle {

namespace {

std::size_t ipow(std::size_t base, std::size_t e) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= base;
  return r;
}

// A matrix whose rows index the tensor power of the current level word.
struct Running {
  std::size_t rows;
  std::size_t cols;
  std::vector<LaurentPoly> data;
};

// Applies `local` (out_dim x in_dim) to the factors starting at `left`,
// with `right` factors to its right, leaving the other factors alone.
Running apply_local(const Running& m, const RingMatrix& local, std::size_t n, std::size_t left, std::size_t right,
                    const std::string& var) {
  const std::size_t lead = ipow(n, left);
  const std::size_t tail = ipow(n, right);
  const std::size_t in_dim = local.cols();
  const std::size_t out_dim = local.rows();
  Running out{lead * out_dim * tail, m.cols, std::vector<LaurentPoly>(lead * out_dim * tail * m.cols, LaurentPoly(var))};
  for (std::size_t l = 0; l < lead; ++l) {
    for (std::size_t lo = 0; lo < out_dim; ++lo) {
      for (std::size_t li = 0; li < in_dim; ++li) {
        const LaurentPoly& g = local(lo, li);
        if (g.is_zero()) continue;
        for (std::size_t r = 0; r < tail; ++r) {
          const std::size_t src = ((l * in_dim + li) * tail + r) * m.cols;
          const std::size_t dst = ((l * out_dim + lo) * tail + r) * m.cols;
          for (std::size_t c = 0; c < m.cols; ++c) {
            const LaurentPoly& x = m.data[src + c];
            if (x.is_zero()) continue;
            out.data[dst + c] += g * x;
          }
        }
      }
    }
  }
  return out;
}

}  // namespace

RingMatrix eval(const SlicedDiagram& d, const TheoryData& th) {
  const auto lv = d.levels();
  const std::size_t n = th.dim;
  const std::size_t src_dim = ipow(n, lv.front().size());
  Running m{src_dim, src_dim, std::vector<LaurentPoly>(src_dim * src_dim, LaurentPoly(th.variable))};
  for (std::size_t i = 0; i < src_dim; ++i) m.data[i * src_dim + i] = LaurentPoly::constant(1, th.variable);

  for (std::size_t k = 0; k < d.slice_count(); ++k) {
    const Slice& slice = d.slices()[k];
    // Factors left of the cursor are already in output form.
    std::size_t done = 0;
    std::size_t pending = lv[k].size();
    for (const auto& g : slice) {
      const std::size_t in = g.in_arity();
      const std::size_t out = g.out_arity();
      pending -= in;
      if (!g.is_identity()) m = apply_local(m, th.generator_matrix(g), n, done, pending, th.variable);
      done += out;
    }
  }
  return RingMatrix::from_entries(m.rows, m.cols, std::move(m.data));
}

RingMatrix slice_matrix(const Slice& slice, const TheoryData& th) {
  RingMatrix acc = RingMatrix::identity(1, th.variable);
  for (const auto& g : slice) acc = mat_tensor(acc, th.generator_matrix(g));
  return acc;
}

RingMatrix eval_by_slice_products(const SlicedDiagram& d, const TheoryData& th) {
  const auto lv = d.levels();
  RingMatrix acc = RingMatrix::identity(ipow(th.dim, lv.front().size()), th.variable);
  for (const auto& slice : d.slices()) acc = mat_mul(slice_matrix(slice, th), acc);
  return acc;
}

LaurentPoly eval_scalar(const SlicedDiagram& d, const TheoryData& th) {
  if (!d.is_closed()) throw DiagramError("expected a link diagram (empty source and target)");
  return eval(d, th)(0, 0);
}

std::string LinkInvariantReport::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["bracket"] = bracket.to_string();
  j["writhe"] = writhe;
  j["normalized"] = normalized.to_string();
  j["variable"] = variable_out;
  return j.dump();
}

LinkInvariantReport link_invariant(const SlicedDiagram& d, const TheoryData& th, const std::string& report_var,
                                   int exponent_divisor) {
  LinkInvariantReport r{.bracket = eval_scalar(d, th),
                        .writhe = writhe(d),
                        .normalized = LaurentPoly(th.variable),
                        .variable_out = th.variable,
                        .substituted = false};
  if (r.writhe >= 0) {
    r.normalized = exact_divide(r.bracket, th.kink_factor.pow(r.writhe) * th.loop_value);
  } else {
    r.normalized = exact_divide(r.bracket * th.kink_factor.pow(-r.writhe), th.loop_value);
  }
  if (exponent_divisor != 0) {
    const int mag = exponent_divisor < 0 ? -exponent_divisor : exponent_divisor;
    if (auto compressed = divide_exponents(r.normalized, mag)) {
      r.normalized = lp_subst_monomial(*compressed, report_var, exponent_divisor < 0 ? -1 : 1);
      r.variable_out = report_var;
      r.substituted = true;
    }
  }
  return r;
}

}  // namespace qtangle
