#pragma once

// Multilinear generating functions F(z) = sum_x zeta^{f(x)} z^x with
// coefficients in Z[zeta_q]. Monomial z_1^{x_1}...z_m^{x_m} is stored at the
// same index t as the array entry f(x).
//
// Only the operations needed by the GAP calculus are provided: embedding an
// array, the star (coefficient reversal), products of factors in disjoint
// variables, and the autocorrelation read off the Laurent product F(z) conj(F)(1/z).

#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "golay/cyclotomic.hpp"
#include "golay/error.hpp"
#include "golay/qarray.hpp"

namespace golay {

class GenFun {
 public:
  GenFun(int q, int m, std::vector<CycElement> coeffs) : q_(q), m_(m), coeffs_(std::move(coeffs)) {
    if (m < 0 || m > kMaxDimension) throw ShapeError("GenFun: m out of range");
    if (coeffs_.size() != (std::size_t{1} << m)) throw ShapeError("GenFun: expected 2^m coefficients");
    for (const auto& c : coeffs_)
      if (c.q() != q) throw ShapeError("GenFun: coefficient context mismatch");
    for (std::uint32_t t = 0; t < coeffs_.size(); ++t)
      if (!is_zero(coeffs_[t])) support_ |= t;
  }

  int q() const noexcept { return q_; }
  int m() const noexcept { return m_; }
  /// Variables of degree 1 (every other variable has degree 0).
  VarMask support() const noexcept { return support_; }
  const std::vector<CycElement>& coeffs() const noexcept { return coeffs_; }
  const CycElement& operator[](std::size_t t) const { return coeffs_[t]; }

  friend bool operator==(const GenFun& a, const GenFun& b) {
    if (a.q_ != b.q_ || a.m_ != b.m_) return false;
    for (std::size_t t = 0; t < a.coeffs_.size(); ++t)
      if (!(a.coeffs_[t] == b.coeffs_[t])) return false;
    return true;
  }

 private:
  int q_;
  int m_;
  std::vector<CycElement> coeffs_;
  VarMask support_ = 0;
};

inline GenFun from_array(const QaryArray& f) {
  const CycContext& ctx = CycContext::get(f.q());
  std::vector<CycElement> c;
  c.reserve(f.size());
  for (int v : f.entries()) c.push_back(root(ctx, v));
  return GenFun(f.q(), f.m(), std::move(c));
}

/// Generating function of f placed on the variables of `vars` inside an
/// m-variable ambient ring (f.m() must equal popcount(vars)).
inline GenFun from_array(const QaryArray& f, VarMask vars, int m) {
  if (std::popcount(vars) != f.m() || (vars & ~full_mask(m)) != 0) throw ShapeError("from_array: embedding mask mismatch");
  const CycContext& ctx = CycContext::get(f.q());
  std::vector<CycElement> c(std::size_t{1} << m, ctx.zero());
  for (std::uint32_t u = 0; u < f.size(); ++u) c[deposit_bits(u, vars)] = root(ctx, f[u]);
  return GenFun(f.q(), m, std::move(c));
}

/// F*(z) = prod_{k in degrees} z_k * F(1/z): the coefficient at t moves to
/// degrees ^ t. `degrees` must contain the support of F.
inline GenFun star(const GenFun& F, VarMask degrees) {
  if ((F.support() & ~degrees) != 0 || (degrees & ~full_mask(F.m())) != 0)
    throw ShapeError("star: degree mask does not cover the support");
  const CycContext& ctx = CycContext::get(F.q());
  std::vector<CycElement> c(F.coeffs().size(), ctx.zero());
  for (std::uint32_t t = 0; t < c.size(); ++t)
    if ((t & ~degrees) == 0) c[degrees ^ t] = F[t];
  return GenFun(F.q(), F.m(), std::move(c));
}

inline GenFun star(const GenFun& F) { return star(F, F.support()); }

/// Product of two factors whose variable supports are disjoint.
inline GenFun disjoint_product(const GenFun& A, const GenFun& C) {
  if (A.q() != C.q() || A.m() != C.m()) throw ShapeError("disjoint_product: shape mismatch");
  if ((A.support() & C.support()) != 0)
    throw ShapeError("disjoint_product: supports overlap; the product would not be multilinear");
  const CycContext& ctx = CycContext::get(A.q());
  std::vector<CycElement> c(A.coeffs().size(), ctx.zero());
  const VarMask sa = A.support(), sc = C.support();
  for (VarMask ta = sa;; ta = (ta - 1) & sa) {
    for (VarMask tc = sc;; tc = (tc - 1) & sc) {
      c[ta | tc] = A[ta] * C[tc];
      if (tc == 0) break;
    }
    if (ta == 0) break;
  }
  return GenFun(A.q(), A.m(), std::move(c));
}

/// Coefficient of z^tau in F(z) * conj(F)(1/z), for every tau in {-1,0,1}^m.
inline CorrelationSpectrum correlation_via_coefficients(const GenFun& F) {
  const int m = F.m();
  const CycContext& ctx = CycContext::get(F.q());
  const std::size_t n = pow3(m);
  std::vector<CycElement> vals;
  vals.reserve(n);
  for (std::size_t code = 0; code < n; ++code) {
    const ShiftVector tau = shift_from_code(m, code);
    CycElement acc = ctx.zero();
    for (std::uint32_t x = 0; x < F.coeffs().size(); ++x) {
      std::int64_t y = x;
      bool valid = true;
      for (int k = 0; k < m && valid; ++k) {
        const int bit = static_cast<int>(x >> k & 1U) + tau.taus[static_cast<std::size_t>(k)];
        valid = bit == 0 || bit == 1;
        y += static_cast<std::int64_t>(tau.taus[static_cast<std::size_t>(k)]) << k;
      }
      if (valid) acc += F[static_cast<std::size_t>(y)] * conjugate(F[x]);
    }
    vals.push_back(std::move(acc));
  }
  return CorrelationSpectrum(m, std::move(vals));
}

}  // namespace golay
