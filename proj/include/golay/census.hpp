#pragma once

// Exhaustive census of Golay array pairs for small (q, m).
//
// Every array of the q^(2^m) candidates gets a signature: the canonical
// remainders (mod Phi_q) of its autocorrelation at each shift of the positive
// half. (f, g) is a pair iff sig(g) = -sig(f). Signatures are indexed by a
// 64-bit digest; digest hits are confirmed by exact comparison and is_gap, so
// a collision can never add or lose a pair.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "golay/cyclotomic.hpp"
#include "golay/decompose.hpp"
#include "golay/error.hpp"
#include "golay/qarray.hpp"
#include "golay/standard.hpp"

namespace golay {

inline constexpr std::uint64_t kDefaultCensusBudget = 20'000'000;

struct CensusOptions {
  std::uint64_t budget = kDefaultCensusBudget;  // max arrays to enumerate
  int workers = 1;
};

struct CensusReport {
  int q = 0;
  int m = 0;
  std::uint64_t total_arrays = 0;
  std::uint64_t gap_pair_count = 0;       // unordered
  std::uint64_t standard_pair_count = 0;  // unordered, from the parameter sweep
  bool all_standard = true;
  std::vector<ArrayPair> nonstandard_witnesses;
  std::chrono::duration<double> elapsed{0};
};

/// q^(2^m), or nullopt if it does not fit in 64 bits.
inline std::optional<std::uint64_t> array_count(int q, int m) {
  if (q < 1 || m < 0 || m > kMaxDimension) return std::nullopt;
  std::uint64_t n = 1;
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << m); ++i)
    if (__builtin_mul_overflow(n, static_cast<std::uint64_t>(q), &n)) return std::nullopt;
  return n;
}

/// Array whose entries are the base-q digits of id, least significant first.
inline QaryArray array_from_id(int q, int m, std::uint64_t id) {
  std::vector<int> e(std::size_t{1} << m);
  for (auto& v : e) {
    v = static_cast<int>(id % static_cast<std::uint64_t>(q));
    id /= static_cast<std::uint64_t>(q);
  }
  return QaryArray(q, m, std::move(e));
}

inline std::uint64_t array_id(const QaryArray& f) {
  std::uint64_t id = 0;
  for (std::size_t t = f.size(); t-- > 0;) id = id * static_cast<std::uint64_t>(f.q()) + static_cast<std::uint64_t>(f[t]);
  return id;
}

namespace detail {

class SignatureKernel {
 public:
  SignatureKernel(int q, int m) : ctx_(CycContext::get(q)), q_(q), m_(m) {
    for (std::size_t code = 0; code < pow3(m); ++code) {
      const ShiftVector tau = shift_from_code(m, code);
      if (is_positive_half(tau)) patterns_.push_back(shift_pattern(tau));
    }
  }

  std::size_t length() const { return patterns_.size() * static_cast<std::size_t>(ctx_.totient()); }

  void compute(const std::vector<int>& entries, std::vector<std::int64_t>& sig) const {
    sig.clear();
    std::vector<std::int64_t> counts(static_cast<std::size_t>(q_));
    for (const auto& p : patterns_) {
      std::fill(counts.begin(), counts.end(), 0);
      accumulate_autocorrelation(entries, q_, m_, p, counts);
      const IntPoly r = poly_rem_monic(counts, ctx_.phi());
      sig.insert(sig.end(), r.begin(), r.end());
    }
  }

 private:
  const CycContext& ctx_;
  int q_;
  int m_;
  std::vector<ShiftPattern> patterns_;
};

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t digest(const std::vector<std::int64_t>& sig, std::int64_t sign) {
  std::uint64_t h = 0x51ed270b27a1c3f5ULL;
  for (std::int64_t v : sig) h = splitmix64(h ^ static_cast<std::uint64_t>(v * sign));
  return h;
}

// Runs fn(lo, hi) over contiguous slices of [0, n).
template <class Fn>
void parallel_ranges(std::uint64_t n, int workers, Fn&& fn) {
  workers = std::max(1, workers);
  if (workers == 1 || n < 2) {
    fn(std::uint64_t{0}, n);
    return;
  }
  std::vector<std::jthread> pool;
  const std::uint64_t w = static_cast<std::uint64_t>(workers);
  for (std::uint64_t i = 0; i < w; ++i) {
    const std::uint64_t lo = n * i / w, hi = n * (i + 1) / w;
    if (lo < hi) pool.emplace_back([&fn, lo, hi] { fn(lo, hi); });
  }
}

inline std::uint64_t checked_array_count(int q, int m, std::uint64_t budget) {
  const auto n = array_count(q, m);
  if (!n || *n > budget)
    throw BudgetExceededError("census: q=" + std::to_string(q) + ", m=" + std::to_string(m) + " needs " +
                              (n ? std::to_string(*n) : std::string("more than 2^64")) + " arrays; budget is " +
                              std::to_string(budget));
  return *n;
}

}  // namespace detail

/// Every unordered Golay array pair of size 2^(m) over Z_q, in canonical form and sorted.
inline std::vector<ArrayPair> enumerate_all_gaps(int q, int m, const CensusOptions& opts = {}) {
  const std::uint64_t n = detail::checked_array_count(q, m, opts.budget);
  const detail::SignatureKernel kernel(q, m);

  std::vector<std::uint64_t> key(n), neg_key(n);
  detail::parallel_ranges(n, opts.workers, [&](std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::int64_t> sig;
    for (std::uint64_t id = lo; id < hi; ++id) {
      kernel.compute(array_from_id(q, m, id).entries(), sig);
      key[id] = detail::digest(sig, 1);
      neg_key[id] = detail::digest(sig, -1);
    }
  });

  std::vector<std::pair<std::uint64_t, std::uint64_t>> index(n);
  for (std::uint64_t id = 0; id < n; ++id) index[id] = {key[id], id};
  std::sort(index.begin(), index.end());

  std::vector<ArrayPair> out;
  std::vector<std::int64_t> sig_f, sig_g;
  for (std::uint64_t id = 0; id < n; ++id) {
    auto lo = std::lower_bound(index.begin(), index.end(), std::pair{neg_key[id], id});
    if (lo == index.end() || lo->first != neg_key[id]) continue;
    const QaryArray f = array_from_id(q, m, id);
    kernel.compute(f.entries(), sig_f);
    for (auto it = lo; it != index.end() && it->first == neg_key[id]; ++it) {
      const QaryArray g = array_from_id(q, m, it->second);
      kernel.compute(g.entries(), sig_g);
      bool negated = sig_f.size() == sig_g.size();
      for (std::size_t i = 0; negated && i < sig_f.size(); ++i) negated = sig_g[i] == -sig_f[i];
      if (!negated) continue;
      if (!is_gap(f, g)) throw VerificationError("census: signature match failed exact re-verification");
      out.push_back(ArrayPair{f, g}.canonical());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// All distinct unordered pairs produced by sweeping every standard parameter set.
/// Dimension 0 is allowed for any q: the pairs are all (c0, c0 + c').
inline std::vector<ArrayPair> enumerate_standard(int q, int m) {
  if (m >= 1 && q % 2 != 0) throw OddModulusError(q);
  if (q < 1 || q > kMaxModulus || m < 0 || m > kMaxDimension) throw ShapeError("enumerate_standard: q or m out of range");
  std::set<ArrayPair> seen;
  StandardParams p{q, m, {}, std::vector<int>(static_cast<std::size_t>(m), 0), 0, 0};
  for (int k = 0; k < m; ++k) p.pi.push_back(k);
  do {
    std::fill(p.c.begin(), p.c.end(), 0);
    while (true) {
      for (p.c0 = 0; p.c0 < q; ++p.c0)
        for (p.c_prime = 0; p.c_prime < q; ++p.c_prime) seen.insert(construct_standard(p).canonical());
      std::size_t k = 0;
      while (k < p.c.size() && ++p.c[k] == q) p.c[k++] = 0;
      if (k == p.c.size()) break;
    }
  } while (std::next_permutation(p.pi.begin(), p.pi.end()));
  return {seen.begin(), seen.end()};
}

/// Checks, for one (q, m), that every Golay array pair is standard.
inline CensusReport verify_theorem(int q, int m, const CensusOptions& opts = {}) {
  const auto start = std::chrono::steady_clock::now();
  CensusReport r;
  r.q = q;
  r.m = m;
  r.total_arrays = detail::checked_array_count(q, m, opts.budget);
  const std::vector<ArrayPair> gaps = enumerate_all_gaps(q, m, opts);
  r.gap_pair_count = gaps.size();

  if (m == 0 || q % 2 == 0) {
    const std::vector<ArrayPair> standard = enumerate_standard(q, m);
    r.standard_pair_count = standard.size();
    for (const auto& p : gaps) {
      bool ok = std::binary_search(standard.begin(), standard.end(), p);
      for (const auto& [f, g] : {std::pair{p.f, p.g}, std::pair{p.g, p.f}}) {
        if (!ok) break;
        try {
          const Decomposition d = decompose(f, g);
          ok = construct_standard(d.params) == ArrayPair{f, g} && replay(d.certificate) == ArrayPair{f, g};
        } catch (const Error&) {
          ok = false;
        }
      }
      if (!ok) r.nonstandard_witnesses.push_back(p);
    }
  } else {
    // The standard form needs q/2, so any pair found for odd q is a witness.
    r.nonstandard_witnesses = gaps;
  }
  r.all_standard = r.nonstandard_witnesses.empty();
  r.elapsed = std::chrono::steady_clock::now() - start;
  return r;
}

}  // namespace golay
