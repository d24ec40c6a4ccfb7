#pragma once

// Inductive decomposition of a Golay array pair into standard parameters.
//
// One step, for (f, g) of dimension m >= 1, splitting on the last variable s:
//   f = f0 (1 - x_s) + f1 x_s,   g = g0 (1 - x_s) + g1 x_s
//   F0 = A(z1) C(z2), G0 = B(z1) C(z2) with C the greatest common divisor,
//     i.e. f0 = a + c and g0 = b + c over a variable partition (z1, z2)
//   f1 = -b*(x1) + d(x2),   g1 = -a*(x1) + q/2 + d(x2)
// (a, b) and (c, d) are again Golay pairs of smaller dimension; their standard
// parameters glue into a standard parameterization of (f, g) whose path runs
// through z1's path, then x_s, then z2's path.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "golay/boolfun.hpp"
#include "golay/error.hpp"
#include "golay/genfun.hpp"
#include "golay/qarray.hpp"
#include "golay/standard.hpp"

namespace golay {

/// Restrictions f0 = f(., x_m = 0) and f1 = f(., x_m = 1).
inline std::pair<QaryArray, QaryArray> split_last(const QaryArray& f) {
  if (f.m() == 0) throw ShapeError("split_last: dimension 0 array has no variable to split");
  const auto half = static_cast<std::ptrdiff_t>(f.size() / 2);
  const auto& e = f.entries();
  return {QaryArray(f.q(), f.m() - 1, std::vector<int>(e.begin(), e.begin() + half)),
          QaryArray(f.q(), f.m() - 1, std::vector<int>(e.begin() + half, e.end()))};
}

/// x -> lhs(x restricted to lhs_vars) + rhs(x restricted to rhs_vars), for complementary masks.
inline QaryArray sum_over_partition(const QaryArray& lhs, VarMask lhs_vars, const QaryArray& rhs, VarMask rhs_vars, int m) {
  if ((lhs_vars & rhs_vars) != 0 || (lhs_vars | rhs_vars) != full_mask(m) || std::popcount(lhs_vars) != lhs.m() ||
      std::popcount(rhs_vars) != rhs.m() || lhs.q() != rhs.q())
    throw ShapeError("sum_over_partition: masks do not partition the variables");
  return QaryArray::tabulate(lhs.q(), m, [&](std::uint32_t t) {
    return lhs[extract_bits(t, lhs_vars)] + rhs[extract_bits(t, rhs_vars)];
  });
}

/// f0 = a(x1) + c(x2), g0 = b(x1) + c(x2) with c carrying the common factor.
/// Normalization: a(0) = f0(0), b(0) = g0(0), c(0) = 0.
struct GcdSplit {
  int m = 0;        // dimension of f0, g0
  VarMask z1 = 0;   // variables of a, b
  VarMask z2 = 0;   // variables of c
  QaryArray a{2, 0, {0}};
  QaryArray b{2, 0, {0}};
  QaryArray c{2, 0, {0}};

  int m1() const { return std::popcount(z1); }
};

namespace detail {

inline bool differs_by_constant(const QaryArray& f, const QaryArray& g) {
  const int delta = g[0] - f[0];
  for (std::uint32_t t = 1; t < f.size(); ++t)
    if (mod(g[t] - f[t] - delta, f.q()) != 0) return false;
  return true;
}

// Union of the interaction blocks shared by f0 and g0 on which they agree up to
// an additive constant. These are exactly the irreducible factors common to F0
// and G0, so their product is the gcd.
inline VarMask common_factor_vars(const QaryArray& f0, const QaryArray& g0) {
  const VarPartition pf = interaction_components(f0);
  const VarPartition pg = interaction_components(g0);
  VarMask z2 = 0;
  for (VarMask block : pf.blocks()) {
    if (std::find(pg.blocks().begin(), pg.blocks().end(), block) == pg.blocks().end()) continue;
    if (differs_by_constant(restrict_to(f0, block), restrict_to(g0, block))) z2 |= block;
  }
  return z2;
}

}  // namespace detail

inline GcdSplit gcd_normalized(const QaryArray& f0, const QaryArray& g0) {
  require_same_shape(f0, g0);
  const int m = f0.m();
  GcdSplit s;
  s.m = m;
  s.z2 = detail::common_factor_vars(f0, g0);
  s.z1 = full_mask(m) & ~s.z2;
  s.c = add_constant(restrict_to(f0, s.z2, 0), -f0[0]);
  s.a = restrict_to(f0, s.z1, 0);
  s.b = restrict_to(g0, s.z1, 0);

  if (sum_over_partition(s.a, s.z1, s.c, s.z2, m) != f0 || sum_over_partition(s.b, s.z1, s.c, s.z2, m) != g0)
    throw VerificationError("gcd_normalized: f0 = a + c or g0 = b + c does not hold");
  if (detail::common_factor_vars(s.a, s.b) != 0) throw VerificationError("gcd_normalized: a and b still share a factor");
  return s;
}

struct DExtraction {
  QaryArray d;
  bool verified = false;
};

/// d(x2) = f1(0, x2) + b*(0), accepted only if f1 = -b* + d and g1 = -a* + q/2 + d everywhere.
inline DExtraction extract_d(const QaryArray& f1, const QaryArray& g1, const GcdSplit& split) {
  require_same_shape(f1, g1);
  if (f1.m() != split.m || f1.q() != split.a.q()) throw ShapeError("extract_d: split does not match f1/g1");
  const int q = f1.q();
  if (q % 2 != 0) throw OddModulusError(q);
  const QaryArray a_star = reverse(split.a);
  const QaryArray b_star = reverse(split.b);
  DExtraction out{add_constant(restrict_to(f1, split.z2, 0), b_star[0]), false};
  const QaryArray f1_model = sum_over_partition(-b_star, split.z1, out.d, split.z2, split.m);
  const QaryArray g1_model = sum_over_partition(add_constant(-a_star, q / 2), split.z1, out.d, split.z2, split.m);
  out.verified = f1_model == f1 && g1_model == g1;
  return out;
}

/// One node of the recursion. Leaves are dimension-0 pairs.
struct CertificateNode {
  struct Step {
    int split_var = 0;  // 0-based; always m - 1
    GcdSplit split;
    QaryArray d{2, 0, {0}};
    int e = 0;        // b = a + (q/2) x_{pi_a(1)} + e
    int e_prime = 0;  // d = c + (q/2) x_{pi_c(1)} + e'
    int c_split = 0;  // recombined linear coefficient of the split variable
  };

  ArrayPair pair;
  StandardParams params;
  std::optional<Step> step;
  std::vector<CertificateNode> children;  // empty for leaves, else {(a,b), (c,d)}
};

struct Decomposition {
  StandardParams params;
  CertificateNode certificate;
};

namespace detail {

inline StandardParams dimension_zero_params(const ArrayPair& p) {
  return StandardParams{p.f.q(), 0, {}, {}, p.f[0], mod(p.g[0] - p.f[0], p.f.q())};
}

inline std::vector<int> mask_members(VarMask mask) {
  std::vector<int> out;
  for (VarMask r = mask; r != 0; r &= r - 1) out.push_back(std::countr_zero(r));
  return out;
}

// Star must factor over the recovered factors: star(A C) = star(A) star(C), and A C = F0.
inline void check_factor_star(const GcdSplit& s, const QaryArray& f0) {
  const GenFun A = from_array(s.a, s.z1, s.m);
  const GenFun C = from_array(s.c, s.z2, s.m);
  const GenFun AC = disjoint_product(A, C);
  if (!(AC == from_array(f0))) throw VerificationError("decompose: A(z1) C(z2) != F0");
  if (!(star(AC) == disjoint_product(star(A), star(C)))) throw VerificationError("decompose: star does not factor over A C");
}

inline void check_complementary(const QaryArray& x, const QaryArray& y, const char* what) {
  const ShiftVector zero = ShiftVector::zero(x.m());
  const CycElement total = autocorrelation(x, zero) + autocorrelation(y, zero);
  if (!(total == CycContext::get(x.q()).from_int(std::int64_t{2} << x.m())) || !is_gap(x, y))
    throw VerificationError(std::string("decompose: sub-pair ") + what + " is not a Golay array pair");
}

inline CertificateNode decompose_node(const QaryArray& f, const QaryArray& g) {
  CertificateNode node{ArrayPair{f, g}, {}, std::nullopt, {}};
  const int m = f.m();
  const int q = f.q();
  if (m == 0) {
    node.params = dimension_zero_params(node.pair);
    return node;
  }

  auto [f0, f1] = split_last(f);
  auto [g0, g1] = split_last(g);
  CertificateNode::Step step;
  step.split_var = m - 1;
  step.split = gcd_normalized(f0, g0);
  DExtraction dx = extract_d(f1, g1, step.split);
  if (!dx.verified) throw VerificationError("decompose: f1 = -b* + d or g1 = -a* + q/2 + d fails");
  step.d = dx.d;
  const GcdSplit& s = step.split;

  check_complementary(s.a, s.b, "(a, b)");
  check_complementary(s.c, step.d, "(c, d)");
  check_factor_star(s, f0);

  CertificateNode ab = decompose_node(s.a, s.b);
  CertificateNode cd = decompose_node(s.c, step.d);
  const StandardParams& pa = ab.params;
  const StandardParams& pc = cd.params;

  step.e = pa.c_prime;
  step.e_prime = pc.c_prime;
  const int m1 = s.m1();
  std::int64_t sum_a = pa.c0;  // c_0 + c_1 + ... + c_{m1} of a
  for (int v : pa.c) sum_a += v;
  step.c_split = mod(std::int64_t{q / 2} * m1 - sum_a - pa.c0 + step.e_prime - step.e, q);

  const std::vector<int> z1 = mask_members(s.z1);
  const std::vector<int> z2 = mask_members(s.z2);
  StandardParams& p = node.params;
  p.q = q;
  p.m = m;
  p.c.assign(static_cast<std::size_t>(m), 0);
  for (int v : pa.pi) p.pi.push_back(z1[static_cast<std::size_t>(v)]);
  p.pi.push_back(step.split_var);
  for (int v : pc.pi) p.pi.push_back(z2[static_cast<std::size_t>(v)]);
  for (std::size_t i = 0; i < z1.size(); ++i) p.c[static_cast<std::size_t>(z1[i])] = pa.c[i];
  for (std::size_t i = 0; i < z2.size(); ++i) p.c[static_cast<std::size_t>(z2[i])] = pc.c[i];
  p.c[static_cast<std::size_t>(step.split_var)] = step.c_split;
  p.c0 = mod(pa.c0 + pc.c0, q);
  p.c_prime = step.e;

  if (construct_standard(p) != node.pair) throw VerificationError("decompose: recombined parameters do not regenerate the pair");

  node.step = std::move(step);
  node.children.push_back(std::move(ab));
  node.children.push_back(std::move(cd));
  return node;
}

}  // namespace detail

/// Standard parameters of a Golay array pair together with a replayable certificate.
inline Decomposition decompose(const QaryArray& f, const QaryArray& g) {
  require_same_shape(f, g);
  if (f.m() >= 1 && f.q() % 2 != 0) throw OddModulusError(f.q());
  if (!is_gap(f, g)) throw NotAGapError("decompose: input is not a Golay array pair");
  CertificateNode cert = detail::decompose_node(f, g);
  StandardParams params = cert.params;
  return {std::move(params), std::move(cert)};
}

/// Syntactic recognition of the standard form from the ANFs of f and g - f.
/// Returns nullopt if the pair is not standard.
inline std::optional<StandardParams> recognize_standard(const QaryArray& f, const QaryArray& g) {
  require_same_shape(f, g);
  const int q = f.q(), m = f.m();
  if (m == 0) return detail::dimension_zero_params(ArrayPair{f, g});
  if (q % 2 != 0) throw OddModulusError(q);
  const int half = q / 2;

  const Anf fa = to_anf(f);
  if (fa.degree() > 2) return std::nullopt;
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(m));
  int edges = 0;
  for (VarMask s : fa.monomials()) {
    if (std::popcount(s) != 2) continue;
    if (fa.coeff(s) != half) return std::nullopt;
    const int i = std::countr_zero(s), j = std::countr_zero(s & (s - 1));
    adj[static_cast<std::size_t>(i)].push_back(j);
    adj[static_cast<std::size_t>(j)].push_back(i);
    ++edges;
  }
  if (edges != m - 1) return std::nullopt;
  for (const auto& nb : adj)
    if (nb.size() > 2) return std::nullopt;

  // g - f must be (q/2) x_e + c' for a single variable e.
  const Anf diff = to_anf(g + (-f));
  std::optional<int> endpoint;
  for (VarMask s : diff.monomials()) {
    if (s == 0) continue;
    if (std::popcount(s) != 1 || diff.coeff(s) != half || endpoint) return std::nullopt;
    endpoint = std::countr_zero(s);
  }
  if (!endpoint) return std::nullopt;

  // The path is oriented from e. Because g - f names a single variable, the
  // orientation is never ambiguous.
  const int start = *endpoint;
  if (adj[static_cast<std::size_t>(start)].size() > 1) return std::nullopt;
  std::vector<int> pi{start};
  for (int prev = -1, cur = start;;) {
    int next = -1;
    for (int nb : adj[static_cast<std::size_t>(cur)])
      if (nb != prev) next = nb;
    if (next < 0) break;
    pi.push_back(next);
    prev = cur;
    cur = next;
  }
  if (pi.size() != static_cast<std::size_t>(m)) return std::nullopt;  // quadratic part is not one path

  StandardParams p{q, m, std::move(pi), std::vector<int>(static_cast<std::size_t>(m)), fa.coeff(0), diff.coeff(0)};
  for (int k = 0; k < m; ++k) p.c[static_cast<std::size_t>(k)] = fa.coeff(VarMask{1} << k);
  if (construct_standard(p) != ArrayPair{f, g}) return std::nullopt;
  return p;
}

/// Rebuilds the pair at every node bottom-up from the stored sub-pairs, using
/// only array operations, and checks it against the recorded pair and params.
inline ArrayPair replay(const CertificateNode& node) {
  const ArrayPair& pr = node.pair;
  require_same_shape(pr.f, pr.g);
  if (construct_standard(node.params) != pr) throw VerificationError("replay: params do not generate the recorded pair");
  if (pr.f.m() == 0) {
    if (node.step || !node.children.empty()) throw VerificationError("replay: dimension-0 node with children");
    return pr;
  }
  if (!node.step || node.children.size() != 2) throw VerificationError("replay: interior node without a step");
  const auto& st = *node.step;
  const GcdSplit& s = st.split;
  const int q = pr.f.q(), m = pr.f.m();
  if (st.split_var != m - 1 || s.m != m - 1 || (s.z1 | s.z2) != full_mask(m - 1) || (s.z1 & s.z2) != 0)
    throw VerificationError("replay: malformed split");

  // Each child replay has already confirmed that its pair is complementary.
  const ArrayPair ab = replay(node.children[0]);
  const ArrayPair cd = replay(node.children[1]);
  if (ab.f != s.a || ab.g != s.b || cd.f != s.c || cd.g != st.d) throw VerificationError("replay: sub-pairs disagree with the split");

  const QaryArray f0 = sum_over_partition(s.a, s.z1, s.c, s.z2, m - 1);
  const QaryArray g0 = sum_over_partition(s.b, s.z1, s.c, s.z2, m - 1);
  const QaryArray f1 = sum_over_partition(-reverse(s.b), s.z1, st.d, s.z2, m - 1);
  const QaryArray g1 = sum_over_partition(add_constant(-reverse(s.a), q / 2), s.z1, st.d, s.z2, m - 1);
  const ArrayPair rebuilt{join_last(f0, f1), join_last(g0, g1)};
  if (rebuilt != pr) throw VerificationError("replay: rebuilt pair differs from the recorded pair");
  if (!is_gap(rebuilt.f, rebuilt.g)) throw VerificationError("replay: rebuilt pair is not a Golay array pair");
  return rebuilt;
}

}  // namespace golay
