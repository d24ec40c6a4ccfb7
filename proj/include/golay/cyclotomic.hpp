#pragma once

// Exact arithmetic in Z[zeta_q], zeta = exp(2*pi*i/q).
//
// Elements are stored as exponent-count vectors: counts[d] is the multiplicity
// of zeta^d. The representation is not canonical (1 + zeta + ... + zeta^{q-1}
// is zero), so equality is decided by reducing modulo the q-th cyclotomic
// polynomial, which is the minimal polynomial of zeta.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "golay/error.hpp"

namespace golay {

using IntPoly = std::vector<std::int64_t>;  // ascending degree

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("int64 overflow in addition");
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("int64 overflow in subtraction");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("int64 overflow in multiplication");
  return r;
}

inline void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder of p modulo a monic divisor; result has size deg(divisor).
inline IntPoly poly_rem_monic(IntPoly p, const IntPoly& divisor) {
  const std::size_t d = divisor.size() - 1;
  for (std::size_t i = p.size(); i-- > d;) {
    const std::int64_t lead = p[i];
    if (lead == 0) continue;
    for (std::size_t j = 0; j <= d; ++j)
      p[i - d + j] = checked_sub(p[i - d + j], checked_mul(lead, divisor[j]));
  }
  p.resize(d, 0);
  return p;
}

// Reduces p modulo a monic divisor in place and reports whether the remainder is zero.
inline bool vanishes_mod(std::span<std::int64_t> p, const IntPoly& divisor) {
  const std::size_t d = divisor.size() - 1;
  for (std::size_t i = p.size(); i-- > d;) {
    const std::int64_t lead = p[i];
    if (lead == 0) continue;
    for (std::size_t j = 0; j <= d; ++j) p[i - d + j] = checked_sub(p[i - d + j], checked_mul(lead, divisor[j]));
  }
  for (std::size_t i = 0; i < d && i < p.size(); ++i)
    if (p[i] != 0) return false;
  return true;
}

// Exact quotient of p by a monic divisor. Throws if the division leaves a remainder.
inline IntPoly poly_div_exact_monic(IntPoly p, const IntPoly& divisor) {
  const std::size_t d = divisor.size() - 1;
  if (p.size() < divisor.size()) throw VerificationError("inexact polynomial division");
  IntPoly quot(p.size() - d, 0);
  for (std::size_t i = p.size(); i-- > d;) {
    const std::int64_t lead = p[i];
    quot[i - d] = lead;
    if (lead == 0) continue;
    for (std::size_t j = 0; j <= d; ++j)
      p[i - d + j] = checked_sub(p[i - d + j], checked_mul(lead, divisor[j]));
  }
  for (std::size_t i = 0; i < d; ++i)
    if (p[i] != 0) throw VerificationError("inexact polynomial division");
  trim(quot);
  return quot;
}

inline IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = checked_add(r[i + j], checked_mul(a[i], b[j]));
  return r;
}

inline int mod(std::int64_t a, int q) {
  const std::int64_t r = a % q;
  return static_cast<int>(r < 0 ? r + q : r);
}

}  // namespace detail

inline constexpr int kMaxModulus = 1 << 16;

/// Phi_q, computed as (x^q - 1) divided by Phi_d for every proper divisor d of q.
inline IntPoly cyclotomic_polynomial(int q) {
  if (q < 1 || q > kMaxModulus) throw ShapeError("cyclotomic_polynomial: q out of range: " + std::to_string(q));
  IntPoly num(static_cast<std::size_t>(q) + 1, 0);
  num[0] = -1;
  num[static_cast<std::size_t>(q)] = 1;
  for (int d = 1; d < q; ++d)
    if (q % d == 0) num = detail::poly_div_exact_monic(std::move(num), cyclotomic_polynomial(d));
  return num;
}

class CycElement;

/// Root order q together with its cached cyclotomic polynomial. Instances are
/// interned and immutable; obtain them through get().
class CycContext {
 public:
  static const CycContext& get(int q) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<const CycContext>> registry;
    if (q < 1 || q > kMaxModulus) throw ShapeError("CycContext: q out of range: " + std::to_string(q));
    std::lock_guard lock(mu);
    auto& slot = registry[q];
    if (!slot) slot.reset(new CycContext(q));
    return *slot;
  }

  CycContext(const CycContext&) = delete;
  CycContext& operator=(const CycContext&) = delete;

  int q() const noexcept { return q_; }
  const IntPoly& phi() const noexcept { return phi_; }
  /// Euler totient of q, i.e. deg(Phi_q).
  int totient() const noexcept { return static_cast<int>(phi_.size()) - 1; }

  CycElement zero() const;
  CycElement one() const;
  CycElement from_int(std::int64_t n) const;

 private:
  explicit CycContext(int q) : q_(q), phi_(cyclotomic_polynomial(q)) {}

  int q_;
  IntPoly phi_;
};

class CycElement {
 public:
  explicit CycElement(const CycContext& ctx) : ctx_(&ctx), counts_(static_cast<std::size_t>(ctx.q()), 0) {}
  CycElement(const CycContext& ctx, std::vector<std::int64_t> counts) : ctx_(&ctx), counts_(std::move(counts)) {
    if (counts_.size() != static_cast<std::size_t>(ctx.q()))
      throw ShapeError("CycElement: counts length " + std::to_string(counts_.size()) + " != q=" + std::to_string(ctx.q()));
  }

  const CycContext& context() const noexcept { return *ctx_; }
  int q() const noexcept { return ctx_->q(); }
  const std::vector<std::int64_t>& counts() const noexcept { return counts_; }
  std::int64_t count(int d) const { return counts_[static_cast<std::size_t>(detail::mod(d, q()))]; }

  /// Adds n copies of zeta^d in place.
  CycElement& add_root(std::int64_t d, std::int64_t n = 1) {
    auto& slot = counts_[static_cast<std::size_t>(detail::mod(d, q()))];
    slot = detail::checked_add(slot, n);
    return *this;
  }

  CycElement& operator+=(const CycElement& rhs) {
    require_same(rhs);
    for (std::size_t i = 0; i < counts_.size(); ++i) counts_[i] = detail::checked_add(counts_[i], rhs.counts_[i]);
    return *this;
  }
  CycElement& operator-=(const CycElement& rhs) {
    require_same(rhs);
    for (std::size_t i = 0; i < counts_.size(); ++i) counts_[i] = detail::checked_sub(counts_[i], rhs.counts_[i]);
    return *this;
  }
  CycElement operator-() const {
    CycElement r(*ctx_);
    for (std::size_t i = 0; i < counts_.size(); ++i) r.counts_[i] = detail::checked_sub(0, counts_[i]);
    return r;
  }

  friend CycElement operator+(CycElement a, const CycElement& b) { return a += b; }
  friend CycElement operator-(CycElement a, const CycElement& b) { return a -= b; }

  /// Cyclic convolution of the count vectors (zeta^q = 1).
  friend CycElement operator*(const CycElement& a, const CycElement& b) {
    a.require_same(b);
    const int q = a.q();
    CycElement r(*a.ctx_);
    for (int i = 0; i < q; ++i) {
      const std::int64_t ai = a.counts_[static_cast<std::size_t>(i)];
      if (ai == 0) continue;
      for (int j = 0; j < q; ++j) {
        const std::int64_t bj = b.counts_[static_cast<std::size_t>(j)];
        if (bj == 0) continue;
        auto& slot = r.counts_[static_cast<std::size_t>((i + j) % q)];
        slot = detail::checked_add(slot, detail::checked_mul(ai, bj));
      }
    }
    return r;
  }
  CycElement& operator*=(const CycElement& rhs) { return *this = *this * rhs; }

  /// Multiplies by zeta^d, a rotation of the count vector.
  CycElement times_root(std::int64_t d) const {
    CycElement r(*ctx_);
    const int q = this->q();
    const int s = detail::mod(d, q);
    for (int i = 0; i < q; ++i) r.counts_[static_cast<std::size_t>((i + s) % q)] = counts_[static_cast<std::size_t>(i)];
    return r;
  }

  /// Exact value equality in Z[zeta_q].
  friend bool operator==(const CycElement& a, const CycElement& b);

 private:
  void require_same(const CycElement& other) const {
    if (ctx_ != other.ctx_)
      throw ShapeError("CycElement: context mismatch (q=" + std::to_string(q()) + " vs q=" + std::to_string(other.q()) + ")");
  }

  const CycContext* ctx_;
  std::vector<std::int64_t> counts_;
};

inline CycElement CycContext::zero() const { return CycElement(*this); }
inline CycElement CycContext::one() const { return from_int(1); }
inline CycElement CycContext::from_int(std::int64_t n) const {
  CycElement r(*this);
  r.add_root(0, n);
  return r;
}

/// zeta^d, with d reduced mod q.
inline CycElement root(const CycContext& ctx, std::int64_t d) {
  CycElement r(ctx);
  r.add_root(d);
  return r;
}

/// Complex conjugation: zeta^d -> zeta^{-d}.
inline CycElement conjugate(const CycElement& a) {
  const int q = a.q();
  std::vector<std::int64_t> c(static_cast<std::size_t>(q), 0);
  for (int d = 0; d < q; ++d) c[static_cast<std::size_t>((q - d) % q)] = a.counts()[static_cast<std::size_t>(d)];
  return CycElement(a.context(), std::move(c));
}

/// Canonical form: the remainder of sum counts[d] x^d modulo Phi_q, of length totient(q).
inline IntPoly canonical_remainder(const CycElement& a) {
  return detail::poly_rem_monic(a.counts(), a.context().phi());
}

/// A sum of q-th roots of unity vanishes iff Phi_q divides its exponent polynomial.
inline bool is_zero(const CycElement& a) {
  const IntPoly r = canonical_remainder(a);
  for (auto v : r)
    if (v != 0) return false;
  return true;
}

inline bool operator==(const CycElement& a, const CycElement& b) {
  a.require_same(b);
  return is_zero(a - b);
}

inline std::ostream& operator<<(std::ostream& os, const CycElement& a) {
  os << "CycElement(q=" << a.q() << ", counts=[";
  for (std::size_t i = 0; i < a.counts().size(); ++i) os << (i ? "," : "") << a.counts()[i];
  return os << "])";
}

}  // namespace golay
