#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "qtangle/tangle.hpp"

namespace qtangle {
namespace {

SignWord W(const char* s) { return SignWord::from_string(s); }

TEST(SignWord, Basics) {
  EXPECT_EQ(W("+-+").to_string(), "+-+");
  EXPECT_EQ(involute(W("+-+")), W("-+-"));
  EXPECT_EQ(W("+--").reversed(), W("--+"));
  EXPECT_EQ(W("+").concat(W("-")), W("+-"));
  EXPECT_THROW(W("+x"), DiagramError);
  EXPECT_TRUE(W("").empty());
}

TEST(Generator, ArityAndWords) {
  EXPECT_EQ(Generator::cup(Sign::Plus).output(), W("+-"));
  EXPECT_EQ(Generator::cap(Sign::Minus).input(), W("-+"));
  EXPECT_EQ(Generator::over(Sign::Plus, Sign::Minus).output(), W("-+"));
  EXPECT_EQ(Generator::under(Sign::Minus, Sign::Minus).token(), "y--");
  EXPECT_EQ(Generator::over(Sign::Plus, Sign::Minus).mirrored(), Generator::under(Sign::Plus, Sign::Minus));
  EXPECT_EQ(Generator::cup(Sign::Plus).in_arity(), 0u);
  EXPECT_EQ(Generator::cap(Sign::Plus).out_arity(), 0u);
}

TEST(SlicedDiagram, LevelsAndTarget) {
  const SlicedDiagram d(W("+"), {{Generator::id(Sign::Plus), Generator::cup(Sign::Minus)},
                                 {Generator::over(Sign::Plus, Sign::Minus), Generator::id(Sign::Plus)}});
  ASSERT_TRUE(validate(d).ok);
  const auto lv = d.levels();
  ASSERT_EQ(lv.size(), 3u);
  EXPECT_EQ(lv[1], W("+-+"));
  EXPECT_EQ(d.target(), W("-++"));
  EXPECT_EQ(d.crossing_count(), 1u);
  EXPECT_FALSE(d.is_closed());
}

TEST(Validate, CapOnEqualSigns) {
  const SlicedDiagram d(W("++"), {{Generator::cap(Sign::Plus)}});
  const ValidationReport r = validate(d);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.slice, 1u);
  EXPECT_EQ(r.generator, 1u);
  EXPECT_NE(r.message.find("Cap requires opposite signs"), std::string::npos);
  EXPECT_THROW((void)d.target(), DiagramError);
}

TEST(Validate, ReportsFirstBadSlice) {
  const SlicedDiagram d(W("+-"), {{Generator::id(Sign::Plus), Generator::id(Sign::Minus)},
                                  {Generator::id(Sign::Plus)},
                                  {Generator::cap(Sign::Plus)}});
  const ValidationReport r = validate(d);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.slice, 2u);
  EXPECT_EQ(r.generator, 2u);
}

TEST(Validate, WrongInputSign) {
  const SlicedDiagram d(W("+-"), {{Generator::id(Sign::Plus), Generator::id(Sign::Plus)}});
  const ValidationReport r = validate(d);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.generator, 2u);
}

TEST(Compose, RequiresMatchingBoundary) {
  const SlicedDiagram a = identity_diagram(W("+-"));
  const SlicedDiagram b = identity_diagram(W("++"));
  EXPECT_THROW(compose(b, a), DiagramError);
  const SlicedDiagram c = compose(SlicedDiagram(W("+-"), {{Generator::cap(Sign::Plus)}}), a);
  EXPECT_EQ(c.slice_count(), 2u);
  EXPECT_TRUE(c.target().empty());
}

TEST(Tensor, PadsShorterFactor) {
  const SlicedDiagram a = braid_to_diagram({1, -1, 1}, 2);
  const SlicedDiagram b(W("-+"), {{Generator::cap(Sign::Minus)}});
  const SlicedDiagram t = tensor(a, b);
  ASSERT_TRUE(validate(t).ok);
  EXPECT_EQ(t.slice_count(), 3u);
  EXPECT_EQ(t.source(), W("++-+"));
  EXPECT_EQ(t.target(), W("++"));
}

TEST(Braid, ToDiagram) {
  const SlicedDiagram d = braid_to_diagram({1, -2}, 3);
  ASSERT_TRUE(validate(d).ok);
  EXPECT_EQ(d.slices()[0][0], Generator::over(Sign::Plus, Sign::Plus));
  EXPECT_EQ(d.slices()[1][1], Generator::under(Sign::Plus, Sign::Plus));
  EXPECT_THROW(braid_to_diagram({3}, 3), DiagramError);
  EXPECT_THROW(braid_to_diagram({0}, 3), DiagramError);
  EXPECT_EQ(braid_to_diagram({1}, 2, BraidOrientation::AllDown).source(), W("--"));
}

TEST(Writhe, BraidsCountLetterSigns) {
  EXPECT_EQ(writhe(braid_to_diagram({1, 1, -2, 1}, 3)), 2);
  EXPECT_EQ(writhe(braid_to_diagram({1, 1, -2, 1}, 3, BraidOrientation::AllDown)), 2);
  EXPECT_EQ(writhe(testing::trefoil()), 3);
  EXPECT_EQ(writhe(testing::mirror_trefoil()), -3);
  EXPECT_EQ(writhe(mirror(testing::trefoil())), -3);
}

TEST(Closure, TraceIsClosed) {
  Rng rng(3);
  for (int k = 0; k < 30; ++k) {
    const std::size_t n = 1 + rng.below(3);
    const SlicedDiagram d = testing::trace_closed_braid(random_braid_word(rng, n, n == 1 ? 0 : rng.below(5)), n);
    ASSERT_TRUE(validate(d).ok);
    EXPECT_TRUE(d.is_closed());
  }
  EXPECT_THROW(closure(SlicedDiagram(W("+-"), {{Generator::over(Sign::Plus, Sign::Minus)}}), ClosureKind::Trace),
               DiagramError);
}

TEST(Closure, Plat) {
  const SlicedDiagram d(W("+-"), {{Generator::over(Sign::Plus, Sign::Minus)}});
  const SlicedDiagram c = closure(d, ClosureKind::Plat);
  ASSERT_TRUE(validate(c).ok);
  EXPECT_TRUE(c.is_closed());
  EXPECT_THROW(closure(braid_to_diagram({1}, 2), ClosureKind::Plat), DiagramError);
}

TEST(Reflect, IsAnInvolution) {
  Rng rng(8);
  for (int k = 0; k < 50; ++k) {
    const SlicedDiagram d = random_diagram(rng, testing::random_word_for_tests(rng));
    const SlicedDiagram r = reflect(d);
    ASSERT_TRUE(validate(r).ok);
    EXPECT_EQ(r.source(), involute(d.target()));
    EXPECT_EQ(r.target(), involute(d.source()));
    EXPECT_EQ(writhe(r), -writhe(d));
    EXPECT_EQ(reflect(r), d);
  }
}

TEST(RandomDiagram, ValidAndDeterministic) {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    Rng a(seed);
    Rng b(seed);
    const SlicedDiagram x = random_diagram(a, W("+-+"));
    EXPECT_EQ(x, random_diagram(b, W("+-+")));
    EXPECT_TRUE(validate(x).ok);
    const SlicedDiagram c = random_closed_diagram(a);
    EXPECT_TRUE(validate(c).ok);
    EXPECT_TRUE(c.is_closed());
  }
}

TEST(RandomDiagram, AllBraidWords) {
  EXPECT_EQ(all_braid_words(3, 2).size(), 16u);
  EXPECT_EQ(all_braid_words(2, 0).size(), 1u);
  EXPECT_EQ(all_braid_words(3, 1).front(), std::vector<int>{-2});
}

}  // namespace
}  // namespace qtangle
