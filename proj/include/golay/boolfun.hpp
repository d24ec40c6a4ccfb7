#pragma once

// Generalized Boolean functions over Z_q: algebraic normal form and the
// finest additive decomposition of a function into blocks of variables.

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "golay/error.hpp"
#include "golay/qarray.hpp"

namespace golay {

/// f(x) = sum_S coeff(S) prod_{k in S} x_k (mod q), with S a subset mask.
class Anf {
 public:
  Anf(int q, int m, std::vector<int> coeffs) : q_(q), m_(m), coeffs_(std::move(coeffs)) {
    if (m < 0 || m > kMaxDimension) throw ShapeError("Anf: m out of range");
    if (coeffs_.size() != (std::size_t{1} << m)) throw ShapeError("Anf: expected 2^m coefficients");
    for (auto& c : coeffs_) c = detail::mod(c, q);
  }
  static Anf zero(int q, int m) { return Anf(q, m, std::vector<int>(std::size_t{1} << m, 0)); }

  int q() const noexcept { return q_; }
  int m() const noexcept { return m_; }
  int coeff(VarMask s) const { return coeffs_.at(s); }
  void set(VarMask s, int v) { coeffs_.at(s) = detail::mod(v, q_); }
  void add(VarMask s, int v) { set(s, coeffs_.at(s) + v); }
  const std::vector<int>& coeffs() const noexcept { return coeffs_; }

  /// Largest |S| with a nonzero coefficient; 0 for constants (including zero).
  int degree() const {
    int d = 0;
    for (std::size_t s = 0; s < coeffs_.size(); ++s)
      if (coeffs_[s] != 0) d = std::max(d, std::popcount(static_cast<VarMask>(s)));
    return d;
  }

  /// Subsets with a nonzero coefficient, in increasing mask order.
  std::vector<VarMask> monomials() const {
    std::vector<VarMask> out;
    for (std::size_t s = 0; s < coeffs_.size(); ++s)
      if (coeffs_[s] != 0) out.push_back(static_cast<VarMask>(s));
    return out;
  }

  friend bool operator==(const Anf&, const Anf&) = default;

 private:
  int q_;
  int m_;
  std::vector<int> coeffs_;
};

/// Moebius inversion over the subset lattice: coeff(S) = sum_{T subset S} (-1)^{|S|-|T|} f(1_T).
inline Anf to_anf(const QaryArray& f) {
  std::vector<int> a(f.entries());
  const int q = f.q();
  for (int k = 0; k < f.m(); ++k) {
    const std::size_t bit = std::size_t{1} << k;
    for (std::size_t s = 0; s < a.size(); ++s)
      if (s & bit) a[s] = detail::mod(a[s] - a[s ^ bit], q);
  }
  return Anf(q, f.m(), std::move(a));
}

/// Zeta transform: evaluates the multilinear form at every point of {0,1}^m.
inline QaryArray from_anf(const Anf& anf) {
  std::vector<int> a(anf.coeffs());
  const int q = anf.q();
  for (int k = 0; k < anf.m(); ++k) {
    const std::size_t bit = std::size_t{1} << k;
    for (std::size_t s = 0; s < a.size(); ++s)
      if (s & bit) a[s] = detail::mod(a[s] + a[s ^ bit], q);
  }
  return QaryArray(q, anf.m(), std::move(a));
}

/// Disjoint blocks of variables covering {0..m-1}, ordered by lowest member.
class VarPartition {
 public:
  VarPartition(int m, std::vector<VarMask> blocks) : m_(m), blocks_(std::move(blocks)) {
    VarMask seen = 0;
    for (VarMask b : blocks_) {
      if (b == 0) throw ShapeError("VarPartition: empty block");
      if (b & seen) throw ShapeError("VarPartition: overlapping blocks");
      if (b & ~full_mask(m)) throw ShapeError("VarPartition: block outside {1..m}");
      seen |= b;
    }
    if (seen != full_mask(m)) throw ShapeError("VarPartition: blocks do not cover {1..m}");
    std::sort(blocks_.begin(), blocks_.end(), [](VarMask a, VarMask b) { return std::countr_zero(a) < std::countr_zero(b); });
  }

  static VarPartition whole(int m) { return m == 0 ? VarPartition(0, {}) : VarPartition(m, {full_mask(m)}); }
  static VarPartition singletons(int m) {
    std::vector<VarMask> b;
    for (int k = 0; k < m; ++k) b.push_back(VarMask{1} << k);
    return VarPartition(m, std::move(b));
  }

  int m() const noexcept { return m_; }
  const std::vector<VarMask>& blocks() const noexcept { return blocks_; }

  /// Every block of finer lies inside some block of *this.
  bool is_coarser_or_equal(const VarPartition& finer) const {
    for (VarMask fb : finer.blocks_)
      if (std::none_of(blocks_.begin(), blocks_.end(), [fb](VarMask b) { return (fb & ~b) == 0; })) return false;
    return true;
  }

  /// Blocks as 1-based variable index lists.
  std::vector<std::vector<int>> as_lists() const {
    std::vector<std::vector<int>> out;
    for (VarMask b : blocks_) {
      std::vector<int> l;
      for (int k = 0; k < m_; ++k)
        if (b >> k & 1U) l.push_back(k + 1);
      out.push_back(std::move(l));
    }
    return out;
  }

  friend bool operator==(const VarPartition&, const VarPartition&) = default;

 private:
  int m_;
  std::vector<VarMask> blocks_;
};

/// Connected components of the graph joining variables that share an ANF monomial.
inline VarPartition interaction_components(const Anf& anf) {
  const int m = anf.m();
  std::vector<int> parent(static_cast<std::size_t>(m));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
    return v;
  };
  for (VarMask s : anf.monomials()) {
    if (std::popcount(s) < 2) continue;
    const int first = std::countr_zero(s);
    for (VarMask rest = s & (s - 1); rest != 0; rest &= rest - 1) {
      const int a = find(first), b = find(std::countr_zero(rest));
      if (a != b) parent[static_cast<std::size_t>(b)] = a;
    }
  }
  std::vector<VarMask> by_root(static_cast<std::size_t>(m), 0);
  for (int k = 0; k < m; ++k) by_root[static_cast<std::size_t>(find(k))] |= VarMask{1} << k;
  std::vector<VarMask> blocks;
  for (VarMask b : by_root)
    if (b != 0) blocks.push_back(b);
  return VarPartition(m, std::move(blocks));
}

inline VarPartition interaction_components(const QaryArray& f) { return interaction_components(to_anf(f)); }

struct Separation {
  VarPartition partition;
  std::vector<QaryArray> components;  // one per block, over the block's variables, each vanishing at 0
  int constant = 0;                   // f(0)
};

/// Splits f into constant + sum of per-block functions. The partition must not
/// separate any pair of interacting variables.
inline Separation separate(const QaryArray& f, const VarPartition& p) {
  if (p.m() != f.m()) throw ShapeError("separate: partition dimension mismatch");
  if (!p.is_coarser_or_equal(interaction_components(f)))
    throw PartitionError("separate: partition splits an interacting pair of variables");
  Separation out{p, {}, f[0]};
  for (VarMask b : p.blocks()) out.components.push_back(add_constant(restrict_to(f, b, 0), -f[0]));
  for (std::uint32_t t = 0; t < f.size(); ++t) {
    std::int64_t v = out.constant;
    for (std::size_t i = 0; i < p.blocks().size(); ++i) v += out.components[i][extract_bits(t, p.blocks()[i])];
    if (detail::mod(v, f.q()) != f[t]) throw VerificationError("separate: reconstruction mismatch at index " + std::to_string(t));
  }
  return out;
}

}  // namespace golay
