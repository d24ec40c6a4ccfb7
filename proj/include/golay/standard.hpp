#pragma once

// Standard Golay array pairs:
//   f(x) = (q/2) sum_{k=1}^{m-1} x_{pi(k)} x_{pi(k+1)} + sum_k c_k x_k + c0
//   g(x) = f(x) + (q/2) x_{pi(1)} + c'
//
// Variables and pi are 0-based in memory (pi[0] is the path start, the
// endpoint carrying the q/2 offset of g). Serialized forms are 1-based.
// c[k] multiplies x_k itself, not x_{pi(k)}; see to_path_positions() for the
// other convention.

#include <algorithm>
#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "golay/boolfun.hpp"
#include "golay/error.hpp"
#include "golay/qarray.hpp"

namespace golay {

struct ArrayPair {
  QaryArray f;
  QaryArray g;

  /// The same unordered pair with the smaller array first.
  ArrayPair canonical() const { return g < f ? ArrayPair{g, f} : *this; }

  friend auto operator<=>(const ArrayPair&, const ArrayPair&) = default;
  friend bool operator==(const ArrayPair&, const ArrayPair&) = default;
};

struct StandardParams {
  int q = 2;
  int m = 0;
  std::vector<int> pi;
  std::vector<int> c;
  int c0 = 0;
  int c_prime = 0;

  friend bool operator==(const StandardParams&, const StandardParams&) = default;
};

/// Checks shape, the permutation, and (for m >= 1) that q is even.
inline void validate(const StandardParams& p) {
  if (p.q < 1 || p.q > kMaxModulus) throw ShapeError("StandardParams: q out of range");
  if (p.m < 0 || p.m > kMaxDimension) throw ShapeError("StandardParams: m out of range");
  if (p.m >= 1 && p.q % 2 != 0) throw OddModulusError(p.q);
  if (p.pi.size() != static_cast<std::size_t>(p.m)) throw ShapeError("StandardParams: pi must have length m");
  if (p.c.size() != static_cast<std::size_t>(p.m)) throw ShapeError("StandardParams: c must have length m");
  std::vector<bool> seen(static_cast<std::size_t>(p.m), false);
  for (int v : p.pi) {
    if (v < 0 || v >= p.m || seen[static_cast<std::size_t>(v)]) throw ShapeError("StandardParams: pi is not a permutation");
    seen[static_cast<std::size_t>(v)] = true;
  }
  for (int v : p.c)
    if (v < 0 || v >= p.q) throw ShapeError("StandardParams: c_k outside [0,q)");
  if (p.c0 < 0 || p.c0 >= p.q || p.c_prime < 0 || p.c_prime >= p.q)
    throw ShapeError("StandardParams: c0/c' outside [0,q)");
}

/// ANF of f for the given parameters.
inline Anf standard_anf(const StandardParams& p) {
  Anf f = Anf::zero(p.q, p.m);
  const int half = p.q / 2;
  for (int k = 0; k + 1 < p.m; ++k)
    f.add((VarMask{1} << p.pi[static_cast<std::size_t>(k)]) | (VarMask{1} << p.pi[static_cast<std::size_t>(k + 1)]), half);
  for (int k = 0; k < p.m; ++k) f.add(VarMask{1} << k, p.c[static_cast<std::size_t>(k)]);
  f.add(0, p.c0);
  return f;
}

inline ArrayPair construct_standard(const StandardParams& p) {
  validate(p);
  const Anf fa = standard_anf(p);
  Anf ga = fa;
  if (p.m >= 1) ga.add(VarMask{1} << p.pi[0], p.q / 2);
  ga.add(0, p.c_prime);
  return {from_anf(fa), from_anf(ga)};
}

/// Linear coefficients indexed by path position: out[k] multiplies x_{pi(k)}.
inline std::vector<int> to_path_positions(const StandardParams& p) {
  std::vector<int> out(p.c.size());
  for (std::size_t k = 0; k < p.pi.size(); ++k) out[k] = p.c[static_cast<std::size_t>(p.pi[k])];
  return out;
}

/// Inverse of to_path_positions.
inline std::vector<int> from_path_positions(const std::vector<int>& pi, const std::vector<int>& by_position) {
  if (pi.size() != by_position.size()) throw ShapeError("from_path_positions: length mismatch");
  std::vector<int> c(pi.size());
  for (std::size_t k = 0; k < pi.size(); ++k) c.at(static_cast<std::size_t>(pi[k])) = by_position[k];
  return c;
}

}  // namespace golay
