#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "qtangle/evaluator.hpp"
#include "qtangle/moves.hpp"

namespace qtangle {
namespace {

const TheoryData& theory() {
  static const TheoryData th = default_theory();
  return th;
}

SlicedDiagram small_random(Rng& rng) {
  RandomDiagramOptions opt;
  opt.slices = 3;
  opt.max_width = 4;
  return random_diagram(rng, testing::random_word_for_tests(rng, 3), opt);
}

class EveryMove : public ::testing::TestWithParam<MoveKind> {};

TEST_P(EveryMove, PreservesEvalAndWrithe) {
  const MoveKind kind = GetParam();
  Rng rng(100 + static_cast<int>(kind));
  std::size_t applied = 0;
  for (int k = 0; k < 25; ++k) {
    const SlicedDiagram d = small_random(rng);
    const RingMatrix before = eval(d, theory());
    for (MoveDirection dir : {MoveDirection::Insert, MoveDirection::Remove}) {
      const auto moves = enumerate_moves(d, kind, dir);
      for (std::size_t m = 0; m < moves.size() && m < 6; ++m) {
        const SlicedDiagram e = apply_move(d, moves[m]);
        ASSERT_TRUE(validate(e).ok) << to_string(kind);
        EXPECT_EQ(e.source(), d.source());
        EXPECT_EQ(e.target(), d.target());
        EXPECT_EQ(writhe(e), writhe(d));
        EXPECT_EQ(eval(e, theory()), before) << to_string(kind) << " at slice " << moves[m].site.slice << " column "
                                             << moves[m].site.column << " variant " << moves[m].site.variant;
        ++applied;
      }
    }
  }
  EXPECT_GT(applied, 0u);
}

INSTANTIATE_TEST_SUITE_P(Moves, EveryMove,
                         ::testing::Values(MoveKind::R2, MoveKind::R3, MoveKind::Zigzag, MoveKind::Slide),
                         [](const auto& info) { return to_string(info.param); });

TEST(Moves, InsertThenRemoveRestores) {
  const SlicedDiagram d = identity_diagram(SignWord::from_string("+-"));
  for (MoveKind kind : {MoveKind::R2, MoveKind::Zigzag, MoveKind::R1}) {
    const SlicedDiagram e = apply_move(d, kind, MoveSite{1, 0, 0}, MoveDirection::Insert);
    const auto rem = enumerate_moves(e, kind, MoveDirection::Remove);
    ASSERT_FALSE(rem.empty()) << to_string(kind);
    bool restored = false;
    for (const auto& m : rem) restored = restored || apply_move(e, m) == d;
    EXPECT_TRUE(restored) << to_string(kind);
  }
}

TEST(Moves, R3OnBraid) {
  const SlicedDiagram d = braid_to_diagram({1, 2, 1}, 3);
  const auto r3 = enumerate_moves(d, MoveKind::R3, MoveDirection::Insert);
  ASSERT_EQ(r3.size(), 1u);
  EXPECT_EQ(apply_move(d, r3.front()), braid_to_diagram({2, 1, 2}, 3));
  // Mixed patterns that are not braid relations are left alone.
  EXPECT_TRUE(enumerate_moves(braid_to_diagram({1, -2, 1}, 3), MoveKind::R3, MoveDirection::Insert).empty());
  EXPECT_EQ(enumerate_moves(braid_to_diagram({-1, -2, 1}, 3), MoveKind::R3, MoveDirection::Insert).size(), 1u);
}

TEST(Moves, BadSiteThrows) {
  const SlicedDiagram d = braid_to_diagram({1, 1}, 2);
  EXPECT_THROW(apply_move(d, MoveKind::R2, MoveSite{0, 0, 0}, MoveDirection::Remove), MoveError);
  EXPECT_THROW(apply_move(d, MoveKind::R3, MoveSite{0, 0, 0}, MoveDirection::Insert), MoveError);
  EXPECT_THROW(apply_move(d, MoveKind::Zigzag, MoveSite{9, 0, 0}, MoveDirection::Insert), MoveError);
}

TEST(Moves, KinkFactor) {
  Rng rng(77);
  const LaurentPoly kappa = testing::A(-1, 3);
  for (int k = 0; k < 10; ++k) {
    const SlicedDiagram d = random_closed_diagram(rng);
    const LaurentPoly base = eval_scalar(d, theory());
    const auto lv = d.levels();
    std::size_t level = 0;
    while (level < lv.size() && lv[level].empty()) ++level;
    if (level == lv.size()) continue;
    for (bool left : {false, true}) {
      const SlicedDiagram pos = insert_kink(d, level, 0, true, left);
      const SlicedDiagram neg = insert_kink(d, level, 0, false, left);
      EXPECT_EQ(writhe(pos), writhe(d) + 1);
      EXPECT_EQ(writhe(neg), writhe(d) - 1);
      EXPECT_EQ(eval_scalar(pos, theory()), kappa * base);
      EXPECT_EQ(kappa * eval_scalar(neg, theory()), base);
      // The normalized invariant does not see the framing.
      EXPECT_EQ(link_invariant(pos, theory()).normalized, link_invariant(d, theory()).normalized);
    }
  }
}

TEST(Moves, RandomEquivalentIsDeterministic) {
  Rng rng(5);
  const SlicedDiagram d = random_closed_diagram(rng);
  const SlicedDiagram a = random_equivalent(d, 5, 42);
  EXPECT_EQ(a, random_equivalent(d, 5, 42));
  EXPECT_EQ(eval(a, theory()), eval(d, theory()));
}

TEST(Moves, MergeSlices) {
  const Slice lower{Generator::over(Sign::Plus, Sign::Plus), Generator::id(Sign::Plus)};
  const Slice upper{Generator::id(Sign::Plus), Generator::id(Sign::Plus), Generator::id(Sign::Plus)};
  const auto m = merge_slices(lower, upper);
  ASSERT_TRUE(m.has_value());
  EXPECT_EQ(*m, lower);
  EXPECT_FALSE(merge_slices(lower, lower).has_value());
}

}  // namespace
}  // namespace qtangle
