#include <gtest/gtest.h>

#include "golay/golay.hpp"
#include "test_util.hpp"

namespace golay {
namespace {

using testing::random_params;

QaryArray arr(int q, std::vector<int> e) {
  int m = 0;
  while ((std::size_t{1} << m) < e.size()) ++m;
  return QaryArray(q, m, std::move(e));
}

TEST(SplitLast, Examples) {
  const auto [f0, f1] = split_last(arr(2, {0, 0, 0, 1}));
  EXPECT_EQ(f0, arr(2, {0, 0}));
  EXPECT_EQ(f1, arr(2, {0, 1}));

  const auto [c0, c1] = split_last(QaryArray::constant(3, 2, 2));
  EXPECT_EQ(c0, QaryArray::constant(3, 1, 2));
  EXPECT_EQ(c1, QaryArray::constant(3, 1, 2));

  const QaryArray lin = QaryArray::tabulate(2, 3, [](std::uint32_t t) { return std::popcount(t); });
  const auto [l0, l1] = split_last(lin);
  EXPECT_EQ(l0, arr(2, {0, 1, 1, 0}));
  EXPECT_EQ(l1, arr(2, {1, 0, 0, 1}));
  EXPECT_EQ(join_last(l0, l1), lin);

  EXPECT_THROW(split_last(QaryArray(2, 0, {1})), ShapeError);
}

TEST(GcdNormalized, Examples) {
  // f0 = x1 + x2, g0 = 3x1 + x2 over Z_4.
  const GcdSplit s = gcd_normalized(arr(4, {0, 1, 1, 2}), arr(4, {0, 3, 1, 0}));
  EXPECT_EQ(s.z2, 2U);
  EXPECT_EQ(s.z1, 1U);
  EXPECT_EQ(s.c, arr(4, {0, 1}));
  EXPECT_EQ(s.a, arr(4, {0, 1}));
  EXPECT_EQ(s.b, arr(4, {0, 3}));

  const QaryArray f0 = testing::random_array(6, 3);
  const GcdSplit all = gcd_normalized(f0, add_constant(f0, 5));
  EXPECT_EQ(all.z2, 7U);
  EXPECT_EQ(all.m1(), 0);
  EXPECT_EQ(all.a, QaryArray(6, 0, {f0[0]}));
  EXPECT_EQ(all.b, QaryArray(6, 0, {(f0[0] + 5) % 6}));

  const GcdSplit none = gcd_normalized(arr(2, {0, 0}), arr(2, {0, 1}));
  EXPECT_EQ(none.z2, 0U);
  EXPECT_EQ(none.a, arr(2, {0, 0}));
  EXPECT_EQ(none.b, arr(2, {0, 1}));
  EXPECT_EQ(none.c, QaryArray(2, 0, {0}));
}

TEST(GcdNormalized, InvariantsOnRandomInputs) {
  for (int trial = 0; trial < 300; ++trial) {
    const int q = testing::uniform(2, 6), m = testing::uniform(0, 5);
    // Plant a common block so the split is nontrivial.
    const auto z2 = static_cast<VarMask>(testing::uniform(0, (1 << m) - 1));
    const VarMask z1 = full_mask(m) & ~z2;
    const QaryArray c = testing::random_array(q, std::popcount(z2));
    const QaryArray a = testing::random_array(q, std::popcount(z1)), b = testing::random_array(q, std::popcount(z1));
    const QaryArray f0 = sum_over_partition(a, z1, c, z2, m), g0 = sum_over_partition(b, z1, c, z2, m);
    const GcdSplit s = gcd_normalized(f0, g0);
    EXPECT_EQ((s.z2 & z2), z2);
    EXPECT_EQ(sum_over_partition(s.a, s.z1, s.c, s.z2, m), f0);
    EXPECT_EQ(sum_over_partition(s.b, s.z1, s.c, s.z2, m), g0);
    EXPECT_EQ(s.c[0], 0);
    EXPECT_EQ(gcd_normalized(s.a, s.b).z2, 0U);
  }
}

TEST(ExtractD, Examples) {
  // Split of (x1x2, x1x2 + x1): f0 = 0, f1 = x1, g0 = x1, g1 = 0.
  const GcdSplit s = gcd_normalized(arr(2, {0, 0}), arr(2, {0, 1}));
  const DExtraction dx = extract_d(arr(2, {0, 1}), arr(2, {0, 0}), s);
  EXPECT_TRUE(dx.verified);
  EXPECT_EQ(dx.d, QaryArray(2, 0, {1}));

  // z1 empty: d = f1 and g1 must be q/2 + d.
  const QaryArray f0 = arr(4, {0, 3}), f1 = arr(4, {2, 1});
  const GcdSplit whole = gcd_normalized(f0, f0);
  EXPECT_EQ(whole.z1, 0U);
  const DExtraction ok = extract_d(f1, add_constant(f1, 2), whole);
  EXPECT_TRUE(ok.verified);
  EXPECT_EQ(ok.d, f1);
  EXPECT_FALSE(extract_d(f1, f1, whole).verified);
  // With b(0) != 0 the constant moves into d.
  const GcdSplit shifted = gcd_normalized(add_constant(f0, 1), add_constant(f0, 1));
  EXPECT_EQ(extract_d(f1, add_constant(f1, 2), shifted).d, add_constant(f1, 1));

  // f = g = 0, m = 1.
  const QaryArray z = QaryArray(2, 0, {0});
  EXPECT_FALSE(extract_d(z, z, gcd_normalized(z, z)).verified);

  EXPECT_THROW(extract_d(arr(3, {0, 0}), arr(3, {0, 0}), gcd_normalized(arr(3, {0, 0}), arr(3, {0, 0}))), OddModulusError);
}

TEST(Decompose, WorkedTrace) {
  const QaryArray f = arr(2, {0, 0, 0, 1}), g = arr(2, {0, 1, 0, 0});
  const Decomposition d = decompose(f, g);
  EXPECT_EQ(d.params, (StandardParams{2, 2, {0, 1}, {0, 0}, 0, 0}));

  const CertificateNode& root = d.certificate;
  ASSERT_TRUE(root.step.has_value());
  EXPECT_EQ(root.step->split_var, 1);
  EXPECT_EQ(root.step->split.z2, 0U);
  EXPECT_EQ(root.step->split.a, arr(2, {0, 0}));
  EXPECT_EQ(root.step->split.b, arr(2, {0, 1}));
  EXPECT_EQ(root.step->d, QaryArray(2, 0, {1}));
  EXPECT_EQ(root.step->e, 0);
  EXPECT_EQ(root.step->e_prime, 1);
  EXPECT_EQ(root.step->c_split, 0);
  EXPECT_EQ(replay(root), (ArrayPair{f, g}));
}

TEST(Decompose, BaseAndDegenerateCases) {
  const Decomposition base = decompose(arr(2, {0, 1}), arr(2, {0, 0}));
  EXPECT_EQ(base.params, (StandardParams{2, 1, {0}, {1}, 0, 0}));

  const Decomposition zero = decompose(QaryArray(4, 0, {3}), QaryArray(4, 0, {1}));
  EXPECT_EQ(zero.params, (StandardParams{4, 0, {}, {}, 3, 2}));
  EXPECT_FALSE(zero.certificate.step.has_value());
}

TEST(Decompose, Errors) {
  EXPECT_THROW(decompose(arr(2, {0, 0}), arr(2, {0, 0})), NotAGapError);
  EXPECT_THROW(decompose(arr(3, {0, 1}), arr(3, {0, 2})), OddModulusError);
  EXPECT_THROW(decompose(arr(2, {0, 0}), arr(4, {0, 0})), ShapeError);
}

TEST(Decompose, SoundOnEveryGapAtSmallSizes) {
  for (auto [q, m] : {std::pair{2, 1}, {2, 2}, {2, 3}, {4, 1}, {4, 2}, {6, 1}}) {
    for (const ArrayPair& p : enumerate_all_gaps(q, m)) {
      for (const auto& [f, g] : {p, ArrayPair{p.g, p.f}}) {
        const Decomposition d = decompose(f, g);
        ASSERT_EQ(construct_standard(d.params), (ArrayPair{f, g}));
        ASSERT_EQ(replay(d.certificate), (ArrayPair{f, g}));
        const auto r = recognize_standard(f, g);
        ASSERT_TRUE(r.has_value());
        ASSERT_EQ(construct_standard(*r), construct_standard(d.params));
      }
    }
  }
}

TEST(Decompose, SoundOnRandomStandardPairs) {
  for (int q : {2, 4, 6, 8}) {
    for (int m = 1; m <= 10; ++m) {
      for (int trial = 0; trial < 10; ++trial) {
        const ArrayPair p = construct_standard(random_params(q, m));
        const Decomposition d = decompose(p.f, p.g);
        ASSERT_EQ(construct_standard(d.params), p);
        ASSERT_EQ(replay(d.certificate), p);
      }
    }
  }
}

// Sub-pairs recorded at each node are complementary and the split is maximal.
void check_nodes(const CertificateNode& n) {
  if (!n.step) return;
  const GcdSplit& s = n.step->split;
  EXPECT_TRUE(is_gap(s.a, s.b));
  EXPECT_TRUE(is_gap(s.c, n.step->d));
  EXPECT_EQ(gcd_normalized(s.a, s.b).z2, 0U);
  for (const auto& child : n.children) check_nodes(child);
}

TEST(Decompose, CertificateNodesAreComplementary) {
  for (int trial = 0; trial < 40; ++trial) {
    const ArrayPair p = construct_standard(random_params(4, testing::uniform(1, 8)));
    check_nodes(decompose(p.f, p.g).certificate);
  }
}

TEST(Replay, DetectsTampering) {
  const ArrayPair p = construct_standard(StandardParams{4, 3, {2, 0, 1}, {1, 2, 3}, 1, 2});
  Decomposition d = decompose(p.f, p.g);
  ASSERT_TRUE(d.certificate.step.has_value());
  CertificateNode bad = d.certificate;
  bad.step->d = add_constant(bad.step->d, 1);
  EXPECT_THROW(replay(bad), VerificationError);
  CertificateNode bad2 = d.certificate;
  bad2.params.c0 = (bad2.params.c0 + 1) % 4;
  EXPECT_THROW(replay(bad2), VerificationError);
}

TEST(RecognizeStandard, Examples) {
  for (int q : {2, 4, 8}) {
    for (int m = 1; m <= 10; ++m) {
      const ArrayPair p = construct_standard(random_params(q, m));
      const auto r = recognize_standard(p.f, p.g);
      ASSERT_TRUE(r.has_value());
      EXPECT_EQ(construct_standard(*r), p);
    }
  }

  const QaryArray cubic = QaryArray::tabulate(2, 3, [](std::uint32_t t) { return t == 7 ? 1 : 0; });
  EXPECT_FALSE(recognize_standard(cubic, cubic).has_value());

  const QaryArray triangle = QaryArray::tabulate(2, 3, [](std::uint32_t t) {
    const int x1 = t & 1, x2 = t >> 1 & 1, x3 = t >> 2 & 1;
    return x1 * x2 + x1 * x3 + x2 * x3;
  });
  EXPECT_FALSE(recognize_standard(triangle, add_constant(triangle, 0) + QaryArray::tabulate(2, 3, [](std::uint32_t t) {
                                                return static_cast<int>(t & 1);
                                              })).has_value());

  // g - f on an interior vertex of the path.
  const ArrayPair p = construct_standard(StandardParams{2, 3, {0, 1, 2}, {0, 0, 0}, 0, 0});
  const QaryArray g_mid = p.f + QaryArray::tabulate(2, 3, [](std::uint32_t t) { return static_cast<int>(t >> 1 & 1); });
  EXPECT_FALSE(recognize_standard(p.f, g_mid).has_value());

  EXPECT_THROW(recognize_standard(arr(3, {0, 1}), arr(3, {0, 1})), OddModulusError);
}

}  // namespace
}  // namespace golay
