#pragma once

// q-ary arrays of size 2 x 2 x ... x 2 (m times), viewed as generalized Boolean
// functions f : {0,1}^m -> Z_q, and their aperiodic autocorrelations.
//
// Storage index: t = sum_k 2^(k-1) x_k, so coordinate x_1 is the least
// significant bit and projecting to a sequence is the identity on storage.
// Variable k (1-based in the math) is bit k-1 throughout the library.

#include <algorithm>
#include <bit>
#include <compare>
#include <initializer_list>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "golay/cyclotomic.hpp"
#include "golay/error.hpp"

namespace golay {

using VarMask = std::uint32_t;
inline constexpr int kMaxDimension = 24;

inline VarMask full_mask(int m) { return m >= 32 ? ~VarMask{0} : (VarMask{1} << m) - 1; }

/// Gathers the bits of t selected by mask into the low bits (software pext).
inline std::uint32_t extract_bits(std::uint32_t t, VarMask mask) {
  std::uint32_t out = 0;
  int pos = 0;
  for (VarMask rest = mask; rest != 0; rest &= rest - 1, ++pos) {
    const VarMask low = rest & (~rest + 1);
    if (t & low) out |= std::uint32_t{1} << pos;
  }
  return out;
}

/// Scatters the low bits of u into the positions selected by mask (software pdep).
inline std::uint32_t deposit_bits(std::uint32_t u, VarMask mask) {
  std::uint32_t out = 0;
  int pos = 0;
  for (VarMask rest = mask; rest != 0; rest &= rest - 1, ++pos) {
    const VarMask low = rest & (~rest + 1);
    if (u & (std::uint32_t{1} << pos)) out |= low;
  }
  return out;
}

class QaryArray {
 public:
  QaryArray(int q, int m, std::vector<int> entries) : q_(q), m_(m), entries_(std::move(entries)) {
    if (q < 1 || q > kMaxModulus) throw ShapeError("QaryArray: q out of range: " + std::to_string(q));
    if (m < 0 || m > kMaxDimension) throw ShapeError("QaryArray: m out of range: " + std::to_string(m));
    if (entries_.size() != (std::size_t{1} << m))
      throw ShapeError("QaryArray: expected 2^" + std::to_string(m) + " entries, got " + std::to_string(entries_.size()));
    for (int v : entries_)
      if (v < 0 || v >= q) throw ShapeError("QaryArray: entry " + std::to_string(v) + " outside [0," + std::to_string(q) + ")");
  }

  static QaryArray constant(int q, int m, int c) {
    return QaryArray(q, m, std::vector<int>(std::size_t{1} << m, detail::mod(c, q)));
  }

  /// Builds an array by evaluating fn(t) mod q at every index t.
  template <class Fn>
  static QaryArray tabulate(int q, int m, Fn&& fn) {
    if (m < 0 || m > kMaxDimension) throw ShapeError("QaryArray: m out of range: " + std::to_string(m));
    std::vector<int> e(std::size_t{1} << m);
    for (std::size_t t = 0; t < e.size(); ++t) e[t] = detail::mod(static_cast<std::int64_t>(fn(static_cast<std::uint32_t>(t))), q);
    return QaryArray(q, m, std::move(e));
  }

  int q() const noexcept { return q_; }
  int m() const noexcept { return m_; }
  std::size_t size() const noexcept { return entries_.size(); }
  const std::vector<int>& entries() const noexcept { return entries_; }
  int operator[](std::size_t t) const { return entries_[t]; }

  friend auto operator<=>(const QaryArray&, const QaryArray&) = default;
  friend bool operator==(const QaryArray&, const QaryArray&) = default;

 private:
  int q_;
  int m_;
  std::vector<int> entries_;
};

inline void require_same_shape(const QaryArray& f, const QaryArray& g) {
  if (f.q() != g.q() || f.m() != g.m())
    throw ShapeError("shape mismatch: (q=" + std::to_string(f.q()) + ", m=" + std::to_string(f.m()) + ") vs (q=" +
                     std::to_string(g.q()) + ", m=" + std::to_string(g.m()) + ")");
}

/// Pointwise (f + g) mod q.
inline QaryArray operator+(const QaryArray& f, const QaryArray& g) {
  require_same_shape(f, g);
  return QaryArray::tabulate(f.q(), f.m(), [&](std::uint32_t t) { return f[t] + g[t]; });
}

inline QaryArray operator-(const QaryArray& f) {
  return QaryArray::tabulate(f.q(), f.m(), [&](std::uint32_t t) { return -f[t]; });
}

inline QaryArray add_constant(const QaryArray& f, int c) {
  return QaryArray::tabulate(f.q(), f.m(), [&](std::uint32_t t) { return f[t] + c; });
}

/// Reverse array f*(x) = f(1-x_1, ..., 1-x_m).
inline QaryArray reverse(const QaryArray& f) {
  const std::uint32_t top = static_cast<std::uint32_t>(f.size() - 1);
  return QaryArray::tabulate(f.q(), f.m(), [&](std::uint32_t t) { return f[top - t]; });
}

/// Sequence s(t) = f(x) with t = sum 2^(k-1) x_k. Identity on storage.
inline std::vector<int> project_sequence(const QaryArray& f) { return f.entries(); }

/// The array over the variables in keep (ascending order); all other
/// variables are fixed to the corresponding bits of fixed.
inline QaryArray restrict_to(const QaryArray& f, VarMask keep, std::uint32_t fixed = 0) {
  keep &= full_mask(f.m());
  const int k = std::popcount(keep);
  const std::uint32_t base = fixed & ~keep & full_mask(f.m());
  return QaryArray::tabulate(f.q(), k, [&](std::uint32_t u) { return f[base | deposit_bits(u, keep)]; });
}

/// The inverse of a split along variable x_m: f(x, 0) = f0(x), f(x, 1) = f1(x).
inline QaryArray join_last(const QaryArray& f0, const QaryArray& f1) {
  require_same_shape(f0, f1);
  std::vector<int> e(f0.entries());
  e.insert(e.end(), f1.entries().begin(), f1.entries().end());
  return QaryArray(f0.q(), f0.m() + 1, std::move(e));
}

// --- shifts ---------------------------------------------------------------

/// Shift tau in {-1,0,1}^m.
struct ShiftVector {
  std::vector<int> taus;

  ShiftVector() = default;
  explicit ShiftVector(std::vector<int> t) : taus(std::move(t)) {
    for (int v : taus)
      if (v < -1 || v > 1) throw ShapeError("ShiftVector: component " + std::to_string(v) + " outside {-1,0,1}");
  }
  static ShiftVector zero(int m) { return ShiftVector(std::vector<int>(static_cast<std::size_t>(m), 0)); }

  int m() const noexcept { return static_cast<int>(taus.size()); }
  bool is_zero() const noexcept {
    for (int v : taus)
      if (v != 0) return false;
    return true;
  }
  ShiftVector operator-() const {
    ShiftVector r;
    r.taus.reserve(taus.size());
    for (int v : taus) r.taus.push_back(-v);
    return r;
  }

  friend auto operator<=>(const ShiftVector&, const ShiftVector&) = default;
  friend bool operator==(const ShiftVector&, const ShiftVector&) = default;
};

inline std::size_t pow3(int m) {
  std::size_t r = 1;
  for (int i = 0; i < m; ++i) r *= 3;
  return r;
}

/// Dense code of a shift: sum_k (tau_k + 1) 3^(k-1).
inline std::size_t shift_code(const ShiftVector& s) {
  std::size_t code = 0;
  for (std::size_t k = s.taus.size(); k-- > 0;) code = code * 3 + static_cast<std::size_t>(s.taus[k] + 1);
  return code;
}

inline ShiftVector shift_from_code(int m, std::size_t code) {
  std::vector<int> t(static_cast<std::size_t>(m));
  for (auto& v : t) {
    v = static_cast<int>(code % 3) - 1;
    code /= 3;
  }
  return ShiftVector(std::move(t));
}

/// Shifts whose lowest nonzero component is +1. Together with their negations
/// they cover every nonzero shift exactly once.
inline bool is_positive_half(const ShiftVector& s) {
  for (int v : s.taus)
    if (v != 0) return v > 0;
  return false;
}

namespace detail {

// Pattern of the valid x for a shift: bits fixed by tau (tau_k != 0) must equal
// `ones` (1 where tau_k = -1); the index moves by `offset`.
struct ShiftPattern {
  VarMask fixed = 0;
  VarMask ones = 0;
  std::int64_t offset = 0;
};

inline ShiftPattern shift_pattern(const ShiftVector& tau) {
  ShiftPattern p;
  for (std::size_t k = 0; k < tau.taus.size(); ++k) {
    const VarMask bit = VarMask{1} << k;
    if (tau.taus[k] != 0) p.fixed |= bit;
    if (tau.taus[k] < 0) p.ones |= bit;
    p.offset += static_cast<std::int64_t>(tau.taus[k]) * static_cast<std::int64_t>(bit);
  }
  return p;
}

// counts[d] += #{x valid : f(x+tau) - f(x) = d}, summed over every array in `arrays`.
inline void accumulate_autocorrelation(std::initializer_list<std::span<const int>> arrays, int q, int m, const ShiftPattern& p,
                                       std::span<std::int64_t> counts) {
  // Bits below the lowest fixed bit are free, so the valid x come in contiguous runs.
  const int low = std::countr_zero(p.fixed | (VarMask{1} << m));
  const std::uint32_t run = std::uint32_t{1} << low;
  const VarMask free_high = full_mask(m) & ~p.fixed & ~(run - 1);
  VarMask sub = free_high;
  while (true) {
    const std::uint32_t x0 = sub | p.ones;
    const std::uint32_t y0 = static_cast<std::uint32_t>(static_cast<std::int64_t>(x0) + p.offset);
    for (std::span<const int> entries : arrays) {
      const int* xs = entries.data() + x0;
      const int* ys = entries.data() + y0;
      for (std::uint32_t i = 0; i < run; ++i) {
        int d = ys[i] - xs[i];
        d += (d >> 31) & q;
        ++counts[static_cast<std::size_t>(d)];
      }
    }
    if (sub == 0) break;
    sub = (sub - 1) & free_high;
  }
}

inline void accumulate_autocorrelation(std::span<const int> entries, int q, int m, const ShiftPattern& p,
                                       std::span<std::int64_t> counts) {
  accumulate_autocorrelation({entries}, q, m, p, counts);
}

// Calls fn(pattern) for every shift of the positive half: tau_k = +1 at the
// lowest nonzero position k, any of {-1, 0, 1} above it.
template <class Fn>
void for_each_positive_shift(int m, Fn&& fn) {
  std::vector<int> above(static_cast<std::size_t>(m), 0);
  for (int k = 0; k < m; ++k) {
    const VarMask lead = VarMask{1} << k;
    std::fill(above.begin(), above.end(), -1);
    while (true) {
      ShiftPattern p{lead, 0, static_cast<std::int64_t>(lead)};
      for (int j = k + 1; j < m; ++j) {
        const int v = above[static_cast<std::size_t>(j)];
        if (v == 0) continue;
        const VarMask bit = VarMask{1} << j;
        p.fixed |= bit;
        if (v < 0) p.ones |= bit;
        p.offset += v * static_cast<std::int64_t>(bit);
      }
      fn(p);
      int j = k + 1;
      while (j < m && above[static_cast<std::size_t>(j)] == 1) above[static_cast<std::size_t>(j++)] = -1;
      if (j >= m) break;
      ++above[static_cast<std::size_t>(j)];
    }
  }
}

}  // namespace detail

/// C_f(tau) = sum over x with x, x+tau in {0,1}^m of zeta^{f(x+tau) - f(x)}.
inline CycElement autocorrelation(const QaryArray& f, const ShiftVector& tau) {
  if (tau.m() != f.m())
    throw ShapeError("autocorrelation: shift length " + std::to_string(tau.m()) + " != m=" + std::to_string(f.m()));
  std::vector<std::int64_t> counts(static_cast<std::size_t>(f.q()), 0);
  detail::accumulate_autocorrelation(f.entries(), f.q(), f.m(), detail::shift_pattern(tau), counts);
  return CycElement(CycContext::get(f.q()), std::move(counts));
}

/// All 3^m autocorrelation values, indexed by shift_code.
class CorrelationSpectrum {
 public:
  CorrelationSpectrum(int m, std::vector<CycElement> values) : m_(m), values_(std::move(values)) {
    if (values_.size() != pow3(m)) throw ShapeError("CorrelationSpectrum: expected 3^m values");
  }

  int m() const noexcept { return m_; }
  std::size_t size() const noexcept { return values_.size(); }
  std::size_t zero_index() const noexcept { return (values_.size() - 1) / 2; }
  const CycElement& operator[](std::size_t code) const { return values_[code]; }
  const CycElement& at(const ShiftVector& s) const {
    if (s.m() != m_) throw ShapeError("CorrelationSpectrum: shift length mismatch");
    return values_[shift_code(s)];
  }
  ShiftVector shift(std::size_t code) const { return shift_from_code(m_, code); }
  const std::vector<CycElement>& values() const noexcept { return values_; }

  /// Entrywise exact equality.
  friend bool operator==(const CorrelationSpectrum& a, const CorrelationSpectrum& b) {
    if (a.m_ != b.m_) return false;
    for (std::size_t i = 0; i < a.values_.size(); ++i)
      if (!(a.values_[i] == b.values_[i])) return false;
    return true;
  }

 private:
  int m_;
  std::vector<CycElement> values_;
};

inline CorrelationSpectrum correlation_spectrum(const QaryArray& f) {
  const std::size_t n = pow3(f.m());
  std::vector<CycElement> vals;
  vals.reserve(n);
  for (std::size_t code = 0; code < n; ++code) vals.push_back(autocorrelation(f, shift_from_code(f.m(), code)));
  return CorrelationSpectrum(f.m(), std::move(vals));
}

/// C_f(tau) + C_g(tau) = 0 for every nonzero tau. Only the positive half of the
/// shifts is checked: C(-tau) is the conjugate of C(tau).
inline bool is_gap(const QaryArray& f, const QaryArray& g) {
  require_same_shape(f, g);
  const CycContext& ctx = CycContext::get(f.q());
  std::vector<std::int64_t> counts(static_cast<std::size_t>(f.q()));
  bool ok = true;
  detail::for_each_positive_shift(f.m(), [&](const detail::ShiftPattern& p) {
    if (!ok) return;
    std::fill(counts.begin(), counts.end(), 0);
    detail::accumulate_autocorrelation({std::span<const int>(f.entries()), std::span<const int>(g.entries())}, f.q(), f.m(), p, counts);
    ok = detail::vanishes_mod(counts, ctx.phi());
  });
  return ok;
}

// --- sequences --------------------------------------------------------------

inline void require_sequence(int q, std::span<const int> s) {
  if (q < 1 || q > kMaxModulus) throw ShapeError("sequence: q out of range");
  for (int v : s)
    if (v < 0 || v >= q) throw ShapeError("sequence: entry " + std::to_string(v) + " outside [0," + std::to_string(q) + ")");
}

/// C_s(tau) = sum_t zeta^{s(t+tau) - s(t)} over t with both indices in range.
inline CycElement sequence_autocorrelation(int q, std::span<const int> s, int tau) {
  require_sequence(q, s);
  const auto len = static_cast<std::int64_t>(s.size());
  if (len == 0 || tau <= -len || tau >= len)
    throw ShapeError("sequence_autocorrelation: shift " + std::to_string(tau) + " out of range for length " + std::to_string(len));
  CycElement r(CycContext::get(q));
  for (std::int64_t t = 0; t < len; ++t) {
    const std::int64_t u = t + tau;
    if (u < 0 || u >= len) continue;
    r.add_root(s[static_cast<std::size_t>(u)] - s[static_cast<std::size_t>(t)]);
  }
  return r;
}

inline bool is_gcp(int q, std::span<const int> s1, std::span<const int> s2) {
  if (s1.size() != s2.size()) throw ShapeError("is_gcp: length mismatch");
  const int len = static_cast<int>(s1.size());
  for (int tau = 1; tau < len; ++tau)
    if (!is_zero(sequence_autocorrelation(q, s1, tau) + sequence_autocorrelation(q, s2, tau))) return false;
  return true;
}

}  // namespace golay
