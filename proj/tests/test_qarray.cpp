#include <gtest/gtest.h>

#include <algorithm>

#include "golay/golay.hpp"
#include "test_util.hpp"

namespace golay {
namespace {

using testing::brute_autocorrelation;
using testing::random_array;

const QaryArray kX1X2(2, 2, {0, 0, 0, 1});
const QaryArray kX1X2PlusX1(2, 2, {0, 1, 0, 0});

CycElement elem(int q, std::vector<std::int64_t> counts) { return CycElement(CycContext::get(q), std::move(counts)); }

TEST(QaryArray, ValidatesShapeAndRange) {
  EXPECT_NO_THROW(QaryArray(3, 0, {2}));
  EXPECT_THROW(QaryArray(2, 2, {0, 1, 0}), ShapeError);
  EXPECT_THROW(QaryArray(2, 1, {0, 2}), ShapeError);
  EXPECT_THROW(QaryArray(2, 1, {-1, 0}), ShapeError);
  EXPECT_THROW(QaryArray(0, 0, {0}), ShapeError);
  EXPECT_THROW(QaryArray(2, -1, {}), ShapeError);
}

TEST(QaryArray, IndexConventionFromFunction) {
  const QaryArray f = QaryArray::tabulate(4, 2, [](std::uint32_t t) {
    const int x1 = t & 1, x2 = t >> 1 & 1;
    return 2 * x1 * x2 + x1;
  });
  EXPECT_EQ(f.entries(), (std::vector<int>{0, 1, 0, 3}));
}

TEST(Autocorrelation, Examples) {
  EXPECT_TRUE(autocorrelation(kX1X2, ShiftVector::zero(2)) == CycContext::get(2).from_int(4));
  const CycElement c10 = autocorrelation(kX1X2, ShiftVector({1, 0}));
  EXPECT_EQ(c10.counts(), (std::vector<std::int64_t>{1, 1}));
  EXPECT_TRUE(is_zero(c10));
  EXPECT_TRUE(autocorrelation(kX1X2, ShiftVector({1, 1})) == CycContext::get(2).from_int(-1));
  EXPECT_THROW(autocorrelation(kX1X2, ShiftVector({1})), ShapeError);
}

TEST(ShiftVector, RejectsOutOfRangeComponents) {
  EXPECT_THROW(ShiftVector({2, 0}), ShapeError);
  EXPECT_THROW(ShiftVector({0, -2}), ShapeError);
}

TEST(ShiftVector, CodeRoundTripAndPositiveHalf) {
  for (int m = 0; m <= 4; ++m) {
    std::size_t positive = 0;
    for (std::size_t code = 0; code < pow3(m); ++code) {
      const ShiftVector s = shift_from_code(m, code);
      EXPECT_EQ(shift_code(s), code);
      EXPECT_EQ(shift_code(-s), pow3(m) - 1 - code);
      if (s.is_zero()) {
        EXPECT_FALSE(is_positive_half(s));
        continue;
      }
      EXPECT_NE(is_positive_half(s), is_positive_half(-s));
      positive += is_positive_half(s);
    }
    EXPECT_EQ(positive, (pow3(m) - 1) / 2);
  }
}

TEST(ShiftVector, PositiveHalfEnumeration) {
  for (int m = 0; m <= 5; ++m) {
    std::vector<std::size_t> seen;
    detail::for_each_positive_shift(m, [&](const detail::ShiftPattern& p) {
      std::vector<int> taus(static_cast<std::size_t>(m), 0);
      for (int k = 0; k < m; ++k)
        if (p.fixed >> k & 1U) taus[static_cast<std::size_t>(k)] = (p.ones >> k & 1U) ? -1 : 1;
      const ShiftVector s(taus);
      EXPECT_TRUE(is_positive_half(s));
      EXPECT_EQ(detail::shift_pattern(s).offset, p.offset);
      seen.push_back(shift_code(s));
    });
    std::sort(seen.begin(), seen.end());
    EXPECT_EQ(std::adjacent_find(seen.begin(), seen.end()), seen.end());
    EXPECT_EQ(seen.size(), (pow3(m) - 1) / 2);
  }
}

TEST(CorrelationSpectrum, Examples) {
  const CorrelationSpectrum s0 = correlation_spectrum(QaryArray(3, 0, {1}));
  ASSERT_EQ(s0.size(), 1U);
  EXPECT_TRUE(s0[0] == CycContext::get(3).one());

  const CorrelationSpectrum s1 = correlation_spectrum(QaryArray(2, 1, {0, 0}));
  EXPECT_TRUE(s1.at(ShiftVector({-1})) == elem(2, {1, 0}));
  EXPECT_TRUE(s1.at(ShiftVector({0})) == elem(2, {2, 0}));
  EXPECT_TRUE(s1.at(ShiftVector({1})) == elem(2, {1, 0}));

  const CorrelationSpectrum s2 = correlation_spectrum(kX1X2);
  EXPECT_EQ(s2.size(), 9U);
  EXPECT_TRUE(s2.at(ShiftVector({1, 1})) == CycContext::get(2).from_int(-1));
  EXPECT_TRUE(s2.at(ShiftVector({-1, -1})) == CycContext::get(2).from_int(-1));
  EXPECT_TRUE(is_zero(s2.at(ShiftVector({1, 0}))));
}

TEST(Autocorrelation, MatchesDefinitionalLoop) {
  for (int q : {2, 3, 4, 6}) {
    for (int m = 0; m <= 4; ++m) {
      for (int trial = 0; trial < 20; ++trial) {
        const QaryArray f = random_array(q, m);
        for (std::size_t code = 0; code < pow3(m); ++code) {
          const ShiftVector s = shift_from_code(m, code);
          EXPECT_EQ(autocorrelation(f, s).counts(), brute_autocorrelation(f, s.taus));
        }
      }
    }
  }
}

TEST(Autocorrelation, ConjugateSymmetryAndZeroShift) {
  for (int q : {2, 4, 5}) {
    for (int m = 0; m <= 4; ++m) {
      const QaryArray f = random_array(q, m);
      const CorrelationSpectrum s = correlation_spectrum(f);
      EXPECT_TRUE(s[s.zero_index()] == CycContext::get(q).from_int(std::int64_t{1} << m));
      for (std::size_t code = 0; code < s.size(); ++code) {
        const ShiftVector tau = s.shift(code);
        EXPECT_TRUE(is_zero(s.at(-tau) - conjugate(s.at(tau))));
      }
    }
  }
}

TEST(IsGap, Examples) {
  EXPECT_TRUE(is_gap(kX1X2, kX1X2PlusX1));
  EXPECT_FALSE(is_gap(QaryArray(2, 1, {0, 0}), QaryArray(2, 1, {0, 0})));
  EXPECT_TRUE(is_gap(QaryArray(5, 0, {1}), QaryArray(5, 0, {3})));
  EXPECT_THROW(is_gap(kX1X2, QaryArray(4, 2, {0, 0, 0, 0})), ShapeError);
  EXPECT_THROW(is_gap(kX1X2, QaryArray(2, 1, {0, 0})), ShapeError);
}

// Checks every nonzero shift, without the conjugate-symmetry shortcut.
bool is_gap_full(const QaryArray& f, const QaryArray& g) {
  for (std::size_t code = 0; code < pow3(f.m()); ++code) {
    const ShiftVector s = shift_from_code(f.m(), code);
    if (!s.is_zero() && !is_zero(autocorrelation(f, s) + autocorrelation(g, s))) return false;
  }
  return true;
}

TEST(IsGap, HalfShiftCheckMatchesFullCheck) {
  for (int q : {2, 4}) {
    for (int m = 1; m <= 2; ++m) {
      const auto arrays = testing::all_arrays(q, m);
      for (const auto& f : arrays)
        for (const auto& g : arrays) ASSERT_EQ(is_gap(f, g), is_gap_full(f, g));
    }
  }
}

TEST(IsGap, ClosedUnderSymmetries) {
  for (int q : {2, 4, 6}) {
    for (int m = 1; m <= 6; ++m) {
      const ArrayPair p = construct_standard(testing::random_params(q, m));
      ASSERT_TRUE(is_gap(p.f, p.g));
      for (int c = 0; c < q; ++c)
        EXPECT_TRUE(is_gap(add_constant(p.f, c), add_constant(p.g, testing::uniform(0, q - 1))));
      EXPECT_TRUE(is_gap(reverse(p.f), reverse(p.g)));
      EXPECT_TRUE(is_gap(p.g, p.f));
      EXPECT_TRUE(is_gcp(q, project_sequence(p.f), project_sequence(p.g)));
    }
  }
}

TEST(Reverse, Examples) {
  EXPECT_EQ(reverse(kX1X2).entries(), (std::vector<int>{1, 0, 0, 0}));
  EXPECT_EQ(reverse(QaryArray(3, 0, {2})), QaryArray(3, 0, {2}));
  for (int m = 0; m <= 5; ++m) {
    const QaryArray f = random_array(7, m);
    EXPECT_EQ(reverse(reverse(f)), f);
  }
}

TEST(ProjectSequence, Examples) {
  EXPECT_EQ(project_sequence(kX1X2), (std::vector<int>{0, 0, 0, 1}));
  EXPECT_EQ(project_sequence(QaryArray::constant(4, 3, 2)), std::vector<int>(8, 2));
}

TEST(SequenceAutocorrelation, Examples) {
  const std::vector<int> s{0, 0, 0, 1};
  EXPECT_TRUE(is_zero(sequence_autocorrelation(2, s, 2)));
  EXPECT_TRUE(sequence_autocorrelation(2, s, 0) == CycContext::get(2).from_int(4));
  EXPECT_TRUE(is_gcp(2, s, std::vector<int>{0, 1, 0, 0}));
  EXPECT_FALSE(is_gcp(2, s, s));
  EXPECT_THROW(sequence_autocorrelation(2, s, 4), ShapeError);
  EXPECT_THROW(sequence_autocorrelation(2, s, -4), ShapeError);
}

TEST(RestrictAndJoin, RoundTrip) {
  for (int m = 1; m <= 5; ++m) {
    const QaryArray f = random_array(4, m);
    const VarMask low = full_mask(m - 1);
    const VarMask last = VarMask{1} << (m - 1);
    EXPECT_EQ(join_last(restrict_to(f, low, 0), restrict_to(f, low, last)), f);
    EXPECT_EQ(restrict_to(f, full_mask(m)), f);
  }
}

}  // namespace
}  // namespace golay
