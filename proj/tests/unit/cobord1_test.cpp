#include <gtest/gtest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "qtangle/cobord1.hpp"

namespace qtangle {
namespace {

using P = std::pair<Endpoint, Endpoint>;

// A random 1-cobordism out of `source`: bottom points pair among themselves
// or go up; a few extra top arcs are added and the top is shuffled.
Matching1 random_matching(Rng& rng, const SignWord& source) {
  const std::size_t m = source.size();
  std::vector<bool> used(m, false);
  std::vector<std::pair<std::size_t, Sign>> tops;  // (owner tag, sign)
  std::vector<std::pair<std::size_t, std::size_t>> bottom_pairs;
  std::vector<std::pair<std::size_t, std::size_t>> through;  // bottom, top tag
  std::vector<std::pair<std::size_t, std::size_t>> top_pairs;
  for (std::size_t i = 0; i < m; ++i) {
    if (used[i]) continue;
    used[i] = true;
    std::vector<std::size_t> options;
    for (std::size_t j = i + 1; j < m; ++j) {
      if (!used[j] && source[j] != source[i]) options.push_back(j);
    }
    if (!options.empty() && rng.coin()) {
      const std::size_t j = options[rng.below(options.size())];
      used[j] = true;
      bottom_pairs.emplace_back(i, j);
    } else {
      through.emplace_back(i, tops.size());
      tops.emplace_back(tops.size(), source[i]);
    }
  }
  const std::size_t extra = rng.below(3);
  for (std::size_t k = 0; k < extra; ++k) {
    const Sign s = rng.sign();
    top_pairs.emplace_back(tops.size(), tops.size() + 1);
    tops.emplace_back(tops.size(), s);
    tops.emplace_back(tops.size(), flip(s));
  }
  // Random permutation of top slots.
  std::vector<std::size_t> slot(tops.size());
  for (std::size_t k = 0; k < slot.size(); ++k) slot[k] = k;
  for (std::size_t k = slot.size(); k > 1; --k) std::swap(slot[k - 1], slot[rng.below(k)]);
  std::vector<Sign> target(tops.size());
  for (std::size_t k = 0; k < tops.size(); ++k) target[slot[k]] = tops[k].second;
  std::vector<P> pairs;
  for (auto [i, j] : bottom_pairs) pairs.emplace_back(Endpoint::bottom(i), Endpoint::bottom(j));
  for (auto [i, t] : through) pairs.emplace_back(Endpoint::bottom(i), Endpoint::top(slot[t]));
  for (auto [a, b] : top_pairs) pairs.emplace_back(Endpoint::top(slot[a]), Endpoint::top(slot[b]));
  return Matching1::create(source, SignWord(target), pairs, rng.below(2));
}

TEST(Cobord1, CircleIsDimension) {
  EXPECT_EQ(tqft1_eval(Matching1::circle(), 2), RingMatrix::scalar(LaurentPoly::constant(2, "q")));
  EXPECT_EQ(tqft1_eval(Matching1::circle(), 3)(0, 0), LaurentPoly::constant(3, "q"));
  EXPECT_EQ(tqft1_eval(Matching1::empty(), 2)(0, 0), LaurentPoly::constant(1, "q"));
}

TEST(Cobord1, CupAgainstIndexEnumeration) {
  // A cup pairs its two points with the identity form: entry (i, j) is 1
  // exactly when i == j. Enumerate all index pairs directly.
  for (std::size_t dim : {1u, 2u, 3u}) {
    const RingMatrix cup = tqft1_eval(Matching1::cup(Sign::Plus), dim);
    ASSERT_EQ(cup.rows(), dim * dim);
    ASSERT_EQ(cup.cols(), 1u);
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) {
        EXPECT_EQ(cup(i * dim + j, 0), LaurentPoly::constant(i == j ? 1 : 0, "q"));
      }
    }
  }
  const RingMatrix cup2 = tqft1_eval(Matching1::cup(Sign::Minus), 2);
  EXPECT_EQ(cup2, RingMatrix::from_integers(4, 1, {1, 0, 0, 1}, "q"));
}

TEST(Cobord1, CapAfterCupIsCircle) {
  for (Sign s : {Sign::Plus, Sign::Minus}) {
    const Matching1 c = compose1(Matching1::cap(s), Matching1::cup(s));
    EXPECT_EQ(c, Matching1::circle());
  }
}

TEST(Cobord1, ZigzagStraightens) {
  const SignWord plus = SignWord::from_string("+");
  const Matching1 lower = disjoint_union1(Matching1::identity(plus), Matching1::cup(Sign::Minus));
  const Matching1 upper = disjoint_union1(Matching1::cap(Sign::Plus), Matching1::identity(plus));
  EXPECT_EQ(compose1(upper, lower), Matching1::identity(plus));
}

TEST(Cobord1, CreateRejectsBadInput) {
  const SignWord pm = SignWord::from_string("+-");
  const SignWord pp = SignWord::from_string("++");
  EXPECT_THROW(Matching1::create(pp, SignWord(), {{Endpoint::bottom(0), Endpoint::bottom(1)}}), CobordError);
  EXPECT_THROW(Matching1::create(pm, pm, {{Endpoint::bottom(0), Endpoint::top(1)}, {Endpoint::bottom(1), Endpoint::top(0)}}),
               CobordError);
  EXPECT_THROW(Matching1::create(pm, SignWord(), {}), CobordError);
  EXPECT_THROW(Matching1::create(pm, SignWord(), {{Endpoint::bottom(0), Endpoint::bottom(2)}}), CobordError);
  EXPECT_THROW(Matching1::create(pm, SignWord(),
                                 {{Endpoint::bottom(0), Endpoint::bottom(1)}, {Endpoint::bottom(1), Endpoint::bottom(0)}}),
               CobordError);
  EXPECT_THROW(compose1(Matching1::cap(Sign::Plus), Matching1::cup(Sign::Minus)), CobordError);
}

TEST(Cobord1, CompositionIsAssociative) {
  Rng rng(31);
  for (int k = 0; k < 100; ++k) {
    const Matching1 a = random_matching(rng, testing::random_word_for_tests(rng));
    const Matching1 b = random_matching(rng, a.target());
    const Matching1 c = random_matching(rng, b.target());
    EXPECT_EQ(compose1(c, compose1(b, a)), compose1(compose1(c, b), a));
  }
}

TEST(Cobord1, Functoriality) {
  Rng rng(41);
  for (int k = 0; k < 150; ++k) {
    const Matching1 a = random_matching(rng, testing::random_word_for_tests(rng));
    const Matching1 b = random_matching(rng, a.target());
    for (std::size_t dim : {1u, 2u}) {
      EXPECT_EQ(tqft1_eval(compose1(b, a), dim), tqft1_eval(b, dim) * tqft1_eval(a, dim));
    }
  }
}

TEST(Cobord1, Monoidality) {
  Rng rng(43);
  for (int k = 0; k < 100; ++k) {
    const Matching1 a = random_matching(rng, testing::random_word_for_tests(rng));
    const Matching1 b = random_matching(rng, testing::random_word_for_tests(rng));
    EXPECT_EQ(tqft1_eval(disjoint_union1(a, b), 2), mat_tensor(tqft1_eval(a, 2), tqft1_eval(b, 2)));
  }
}

TEST(Cobord1, IdentityIsNeutral) {
  Rng rng(47);
  for (int k = 0; k < 50; ++k) {
    const Matching1 a = random_matching(rng, testing::random_word_for_tests(rng));
    EXPECT_EQ(compose1(Matching1::identity(a.target()), a), a);
    EXPECT_EQ(compose1(a, Matching1::identity(a.source())), a);
    EXPECT_TRUE(tqft1_eval(Matching1::identity(a.source()), 2).is_identity());
  }
}

TEST(Cobord1, UnderlyingMatchingOfDiagrams) {
  const SlicedDiagram circle(SignWord(), {{Generator::cup(Sign::Plus)}, {Generator::cap(Sign::Plus)}});
  EXPECT_EQ(underlying_matching(circle), Matching1::circle());
  // Closed braids: one circle per cycle of the permutation.
  EXPECT_EQ(underlying_matching(testing::trace_closed_braid({1, 1}, 2)).circles(), 2u);
  EXPECT_EQ(underlying_matching(testing::trace_closed_braid({1, 2}, 3)).circles(), 1u);
  Rng rng(53);
  for (int k = 0; k < 50; ++k) {
    const SlicedDiagram t1 = random_diagram(rng, testing::random_word_for_tests(rng, 3));
    const SlicedDiagram t2 = random_diagram(rng, t1.target());
    EXPECT_EQ(underlying_matching(compose(t2, t1)), compose1(underlying_matching(t2), underlying_matching(t1)));
  }
}

}  // namespace
}  // namespace qtangle
