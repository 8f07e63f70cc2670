#include "sumset/core.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <limits>
#include <map>
#include <numeric>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sumset {

std::string to_decimal(const BigCount& x) { return x.get_str(); }

BigCount big_pow(const BigCount& base, std::uint64_t exp) {
  BigCount out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exp));
  return out;
}

BigCount binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  BigCount out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return out;
}

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b,
                          const char* what) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    throw ResourceError(std::string(what) + ": 64-bit overflow",
                        "product of " + std::to_string(a) + " and " +
                            std::to_string(b));
  }
  return a * b;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b,
                          const char* what) {
  if (b > std::numeric_limits<std::uint64_t>::max() - a) {
    throw ResourceError(std::string(what) + ": 64-bit overflow",
                        "sum of " + std::to_string(a) + " and " +
                            std::to_string(b));
  }
  return a + b;
}

void require_bits(std::uint64_t bits, const Budget& budget, const char* what) {
  if (bits > budget.max_bits) {
    throw ResourceError(std::string(what) + ": bit-vector budget exceeded",
                        std::to_string(bits) + " bits (cap " +
                            std::to_string(budget.max_bits) + ")");
  }
}

void require_work(std::uint64_t work, const Budget& budget, const char* what) {
  if (work > budget.max_work) {
    throw ResourceError(std::string(what) + ": work budget exceeded",
                        std::to_string(work) + " word ops (cap " +
                            std::to_string(budget.max_work) + ")");
  }
}

// Plain dense bit vector; bit i represents value base_ + i.
struct Bits {
  std::uint64_t nbits = 0;
  std::vector<std::uint64_t> words;

  explicit Bits(std::uint64_t n) : nbits(n), words((n + 63) / 64, 0) {}
  void set(std::uint64_t i) { words[i >> 6] |= std::uint64_t{1} << (i & 63); }

  std::vector<std::uint64_t> to_values(std::uint64_t base) const {
    std::vector<std::uint64_t> out;
    for (std::size_t w = 0; w < words.size(); ++w) {
      std::uint64_t word = words[w];
      while (word != 0) {
        unsigned b = static_cast<unsigned>(std::countr_zero(word));
        out.push_back(base + (static_cast<std::uint64_t>(w) << 6) + b);
        word &= word - 1;
      }
    }
    return out;
  }
};

// dst |= src << shift, restricted to dst words [w_lo, w_hi).
// src word j feeds dst word q+j (and q+j+1 when the shift is unaligned).
void or_shifted_range(std::vector<std::uint64_t>& dst,
                      const std::vector<std::uint64_t>& src,
                      std::uint64_t shift, std::size_t w_lo, std::size_t w_hi) {
  const std::uint64_t q = shift >> 6;
  const unsigned r = static_cast<unsigned>(shift & 63);
  if (w_hi <= q) return;
  const std::size_t n_src = src.size();
  const std::size_t j_hi = std::min<std::size_t>(n_src, w_hi - q);
  if (r == 0) {
    const std::size_t j_lo = (w_lo > q) ? w_lo - q : 0;
    for (std::size_t j = j_lo; j < j_hi; ++j) dst[q + j] |= src[j];
    return;
  }
  const std::size_t j_lo = (w_lo > q + 1) ? w_lo - q - 1 : 0;
  for (std::size_t j = j_lo; j < j_hi; ++j) {
    const std::size_t w0 = q + j;
    if (w0 >= w_lo) dst[w0] |= src[j] << r;
    if (w0 + 1 < w_hi) dst[w0 + 1] |= src[j] >> (64 - r);
  }
}

constexpr std::size_t kParallelMinWords = std::size_t{1} << 14;

// Core kernel: the sum bit vector of A+B with both sets rebased to their
// minima.  Parallelized over destination word ranges, which keeps threads
// write-disjoint without atomics.
Bits minkowski_bits(const std::vector<std::uint64_t>& a_vals,
                    std::uint64_t a_min,
                    const std::vector<std::uint64_t>& b_vals,
                    std::uint64_t b_min, std::uint64_t width_bits) {
  Bits b_bits(b_vals.back() - b_min + 1);
  for (std::uint64_t v : b_vals) b_bits.set(v - b_min);

  Bits out(width_bits);
  const std::size_t n_words = out.words.size();

#ifdef _OPENMP
  if (n_words >= kParallelMinWords && omp_get_max_threads() > 1) {
#pragma omp parallel
    {
      const int nt = omp_get_num_threads();
      const int id = omp_get_thread_num();
      const std::size_t chunk = (n_words + nt - 1) / nt;
      const std::size_t w_lo = std::min<std::size_t>(id * chunk, n_words);
      const std::size_t w_hi = std::min<std::size_t>(w_lo + chunk, n_words);
      if (w_lo < w_hi) {
        for (std::uint64_t a : a_vals) {
          or_shifted_range(out.words, b_bits.words, a - a_min, w_lo, w_hi);
        }
      }
    }
    return out;
  }
#endif
  for (std::uint64_t a : a_vals) {
    or_shifted_range(out.words, b_bits.words, a - a_min, 0, n_words);
  }
  return out;
}

IntegerSet minkowski_impl(const IntegerSet& a, const IntegerSet& b,
                          const Budget& budget, const char* what) {
  if (a.empty() || b.empty()) {
    throw DomainError(std::string(what) + ": empty operand");
  }
  const std::uint64_t width =
      checked_add(checked_add(a.span(), b.span(), what), 1, what);
  require_bits(width, budget, what);
  // Iterate the smaller set's elements against the other's bit vector.
  const IntegerSet& elems = (a.size() <= b.size()) ? a : b;
  const IntegerSet& dense = (a.size() <= b.size()) ? b : a;
  require_work(elems.size() * ((width + 63) / 64), budget, what);
  Bits bits = minkowski_bits(elems.values(), elems.min(), dense.values(),
                             dense.min(), width);
  return IntegerSet::from_sorted_unique(
      bits.to_values(checked_add(a.min(), b.min(), what)));
}

}  // namespace

// --- IntegerSet -------------------------------------------------------------

IntegerSet IntegerSet::from_values(std::vector<std::uint64_t> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  IntegerSet s;
  s.values_ = std::move(values);
  return s;
}

IntegerSet IntegerSet::from_sorted_unique(std::vector<std::uint64_t> values) {
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i - 1] >= values[i]) {
      throw DomainError("IntegerSet: values not strictly increasing");
    }
  }
  IntegerSet s;
  s.values_ = std::move(values);
  return s;
}

IntegerSet IntegerSet::interval(std::uint64_t lo, std::uint64_t hi) {
  if (lo > hi) throw DomainError("IntegerSet::interval: lo > hi");
  std::vector<std::uint64_t> v(hi - lo + 1);
  std::iota(v.begin(), v.end(), lo);
  IntegerSet s;
  s.values_ = std::move(v);
  return s;
}

IntegerSet IntegerSet::singleton(std::uint64_t x) {
  IntegerSet s;
  s.values_ = {x};
  return s;
}

std::uint64_t IntegerSet::min() const {
  if (empty()) throw DomainError("IntegerSet::min: empty set");
  return values_.front();
}

std::uint64_t IntegerSet::max() const {
  if (empty()) throw DomainError("IntegerSet::max: empty set");
  return values_.back();
}

bool IntegerSet::contains(std::uint64_t x) const {
  return std::binary_search(values_.begin(), values_.end(), x);
}

IntegerSet minkowski_sum(const IntegerSet& a, const IntegerSet& b,
                         const Budget& budget) {
  return minkowski_impl(a, b, budget, "minkowski_sum");
}

IntegerSet hfold_int(const IntegerSet& a, std::uint64_t h,
                     const Budget& budget) {
  if (a.empty()) throw DomainError("hfold_int: empty set");
  if (h == 0) return IntegerSet::singleton(0);
  if (h == 1) return a;
  require_bits(checked_add(checked_mul(h, a.span(), "hfold_int"), 1,
                           "hfold_int"),
               budget, "hfold_int");
  // Binary decomposition: hA built from floor(h/2)A by doubling.
  int top = 63 - std::countl_zero(h);
  IntegerSet r = a;
  for (int bit = top - 1; bit >= 0; --bit) {
    r = minkowski_impl(r, r, budget, "hfold_int");
    if ((h >> bit) & 1) r = minkowski_impl(r, a, budget, "hfold_int");
  }
  return r;
}

std::vector<std::uint64_t> hfold_sizes(const IntegerSet& a,
                                       std::uint64_t h_max,
                                       const Budget& budget) {
  if (a.empty()) throw DomainError("hfold_sizes: empty set");
  require_bits(checked_add(checked_mul(h_max, a.span(), "hfold_sizes"), 1,
                           "hfold_sizes"),
               budget, "hfold_sizes");
  std::vector<std::uint64_t> sizes;
  sizes.reserve(h_max);
  IntegerSet r = a;
  for (std::uint64_t h = 1; h <= h_max; ++h) {
    if (h > 1) r = minkowski_impl(r, a, budget, "hfold_sizes");
    sizes.push_back(r.size());
  }
  return sizes;
}

IntegerSet dilate(const IntegerSet& a, std::uint64_t lambda) {
  if (lambda == 0) throw DomainError("dilate: lambda must be >= 1");
  std::vector<std::uint64_t> v;
  v.reserve(a.size());
  for (std::uint64_t x : a.values()) {
    v.push_back(checked_mul(x, lambda, "dilate"));
  }
  return IntegerSet::from_sorted_unique(std::move(v));
}

// --- ModpVectorSet ----------------------------------------------------------

namespace {

std::uint64_t pow_space(std::uint64_t p, std::uint64_t t) {
  if (p < 2) throw DomainError("ModpVectorSet: p must be >= 2");
  std::uint64_t s = 1;
  for (std::uint64_t i = 0; i < t; ++i) {
    s = checked_mul(s, p, "ModpVectorSet space");
    if (s > (std::uint64_t{1} << 62)) {
      throw ResourceError("ModpVectorSet: p^t too large for flat indexing",
                          "p^t exceeds 2^62");
    }
  }
  return s;
}

}  // namespace

ModpVectorSet ModpVectorSet::from_vectors(
    std::uint64_t p, std::uint64_t t,
    const std::vector<std::vector<std::uint64_t>>& vectors) {
  ModpVectorSet s;
  s.p_ = p;
  s.t_ = t;
  s.space_ = pow_space(p, t);
  s.indices_.reserve(vectors.size());
  for (const auto& vec : vectors) {
    if (vec.size() != t) {
      throw DomainError("ModpVectorSet: vector length != t");
    }
    std::uint64_t idx = 0, scale = 1;
    for (std::uint64_t d : vec) {
      if (d >= p) throw DomainError("ModpVectorSet: entry not reduced mod p");
      idx += d * scale;
      scale *= p;
    }
    s.indices_.push_back(idx);
  }
  std::sort(s.indices_.begin(), s.indices_.end());
  s.indices_.erase(std::unique(s.indices_.begin(), s.indices_.end()),
                   s.indices_.end());
  return s;
}

ModpVectorSet ModpVectorSet::from_indices(std::uint64_t p, std::uint64_t t,
                                          std::vector<std::uint64_t> indices) {
  ModpVectorSet s;
  s.p_ = p;
  s.t_ = t;
  s.space_ = pow_space(p, t);
  for (std::uint64_t idx : indices) {
    if (idx >= s.space_) throw DomainError("ModpVectorSet: index out of range");
  }
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  s.indices_ = std::move(indices);
  return s;
}

ModpVectorSet ModpVectorSet::zero(std::uint64_t p, std::uint64_t t) {
  return from_indices(p, t, {0});
}

std::vector<std::uint64_t> ModpVectorSet::digits(std::uint64_t index) const {
  std::vector<std::uint64_t> d(t_);
  for (std::uint64_t i = 0; i < t_; ++i) {
    d[i] = index % p_;
    index /= p_;
  }
  return d;
}

std::vector<std::vector<std::uint64_t>> ModpVectorSet::vectors() const {
  std::vector<std::vector<std::uint64_t>> out;
  out.reserve(indices_.size());
  for (std::uint64_t idx : indices_) out.push_back(digits(idx));
  return out;
}

namespace {

// Sum of two flat mixed-radix indices with digitwise reduction mod p.
std::uint64_t digit_add(std::uint64_t a, std::uint64_t b, std::uint64_t p,
                        std::uint64_t t) {
  std::uint64_t out = 0, scale = 1;
  for (std::uint64_t i = 0; i < t; ++i) {
    std::uint64_t d = a % p + b % p;
    if (d >= p) d -= p;
    out += d * scale;
    scale *= p;
    a /= p;
    b /= p;
  }
  return out;
}

ModpVectorSet minkowski_modp_impl(const ModpVectorSet& a,
                                  const ModpVectorSet& b, const Budget& budget,
                                  const char* what) {
  if (a.p() != b.p() || a.t() != b.t()) {
    throw DomainError(std::string(what) + ": mismatched ambient (p, t)");
  }
  if (a.empty() || b.empty()) {
    throw DomainError(std::string(what) + ": empty operand");
  }
  const std::uint64_t p = a.p(), t = a.t(), space = a.space();
  require_bits(space, budget, what);
  const std::uint64_t pairs =
      checked_mul(a.size(), b.size(), what);
  require_work(checked_mul(pairs, t ? t : 1, what), budget, what);

  Bits bits(space);
  const auto& av = a.indices();
  const auto& bv = b.indices();

  auto fill_range = [&](std::vector<std::uint64_t>& words, std::size_t lo,
                        std::size_t hi) {
    if (p == 2) {
      for (std::size_t i = lo; i < hi; ++i) {
        const std::uint64_t x = av[i];
        for (std::uint64_t y : bv) {
          const std::uint64_t s = x ^ y;
          words[s >> 6] |= std::uint64_t{1} << (s & 63);
        }
      }
    } else {
      for (std::size_t i = lo; i < hi; ++i) {
        const std::uint64_t x = av[i];
        for (std::uint64_t y : bv) {
          const std::uint64_t s = digit_add(x, y, p, t);
          words[s >> 6] |= std::uint64_t{1} << (s & 63);
        }
      }
    }
  };

#ifdef _OPENMP
  if (pairs >= (std::uint64_t{1} << 20) && omp_get_max_threads() > 1) {
#pragma omp parallel
    {
      Bits local(space);
      const int nt = omp_get_num_threads();
      const int id = omp_get_thread_num();
      const std::size_t chunk = (av.size() + nt - 1) / nt;
      const std::size_t lo = std::min<std::size_t>(id * chunk, av.size());
      const std::size_t hi = std::min<std::size_t>(lo + chunk, av.size());
      fill_range(local.words, lo, hi);
#pragma omp critical
      {
        for (std::size_t w = 0; w < bits.words.size(); ++w) {
          bits.words[w] |= local.words[w];
        }
      }
    }
  } else {
    fill_range(bits.words, 0, av.size());
  }
#else
  fill_range(bits.words, 0, av.size());
#endif
  return ModpVectorSet::from_indices(p, t, bits.to_values(0));
}

}  // namespace

ModpVectorSet minkowski_modp(const ModpVectorSet& a, const ModpVectorSet& b,
                             const Budget& budget) {
  return minkowski_modp_impl(a, b, budget, "minkowski_modp");
}

ModpVectorSet hfold_modp(const ModpVectorSet& a, std::uint64_t h,
                         const Budget& budget) {
  if (a.empty()) throw DomainError("hfold_modp: empty set");
  if (h == 0) return ModpVectorSet::zero(a.p(), a.t());
  if (h == 1) return a;
  int top = 63 - std::countl_zero(h);
  ModpVectorSet r = a;
  for (int bit = top - 1; bit >= 0; --bit) {
    r = minkowski_modp_impl(r, r, budget, "hfold_modp");
    if ((h >> bit) & 1) r = minkowski_modp_impl(r, a, budget, "hfold_modp");
  }
  return r;
}

ModpVectorSet cartesian_product(const ModpVectorSet& a, const ModpVectorSet& b,
                                const Budget& budget) {
  if (a.p() != b.p()) {
    throw DomainError("cartesian_product: mismatched moduli");
  }
  const std::uint64_t count = checked_mul(a.size(), b.size(),
                                          "cartesian_product");
  if (count > budget.max_enum) {
    throw ResourceError("cartesian_product: enumeration budget exceeded",
                        std::to_string(count) + " elements");
  }
  const std::uint64_t t = a.t() + b.t();
  const std::uint64_t scale = a.space();
  std::vector<std::uint64_t> idx;
  idx.reserve(count);
  for (std::uint64_t y : b.indices()) {
    for (std::uint64_t x : a.indices()) {
      idx.push_back(y * scale + x);
    }
  }
  return ModpVectorSet::from_indices(a.p(), t, std::move(idx));
}

// --- LatticeSet -------------------------------------------------------------

LatticeSet LatticeSet::from_points(
    std::size_t dim, std::vector<std::vector<std::uint64_t>> pts) {
  if (dim == 0) throw DomainError("LatticeSet: dimension must be >= 1");
  for (const auto& p : pts) {
    if (p.size() != dim) throw DomainError("LatticeSet: point length != dim");
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  LatticeSet s;
  s.dim_ = dim;
  s.points_ = std::move(pts);
  return s;
}

LatticeSet LatticeSet::from_integer_set(const IntegerSet& a) {
  std::vector<std::vector<std::uint64_t>> pts;
  pts.reserve(a.size());
  for (std::uint64_t x : a.values()) pts.push_back({x});
  LatticeSet s;
  s.dim_ = 1;
  s.points_ = std::move(pts);
  return s;
}

LatticeSet LatticeSet::zero(std::size_t dim) {
  return from_points(dim, {std::vector<std::uint64_t>(dim, 0)});
}

LatticeSet cartesian_product(const LatticeSet& a, const LatticeSet& b,
                             const Budget& budget) {
  const std::uint64_t count =
      checked_mul(a.size(), b.size(), "cartesian_product");
  if (count > budget.max_enum) {
    throw ResourceError("cartesian_product: enumeration budget exceeded",
                        std::to_string(count) + " elements");
  }
  std::vector<std::vector<std::uint64_t>> pts;
  pts.reserve(count);
  for (const auto& x : a.points()) {
    for (const auto& y : b.points()) {
      std::vector<std::uint64_t> p = x;
      p.insert(p.end(), y.begin(), y.end());
      pts.push_back(std::move(p));
    }
  }
  return LatticeSet::from_points(a.dim() + b.dim(), std::move(pts));
}

LatticeSet minkowski_sum(const LatticeSet& a, const LatticeSet& b,
                         const Budget& budget) {
  if (a.empty() || b.empty()) {
    throw DomainError("minkowski_sum: empty operand");
  }
  if (a.dim() != b.dim()) {
    throw DomainError("minkowski_sum: mismatched dimensions");
  }
  const std::uint64_t pairs = checked_mul(a.size(), b.size(), "minkowski_sum");
  if (pairs > budget.max_enum) {
    throw ResourceError("minkowski_sum: enumeration budget exceeded",
                        std::to_string(pairs) + " pairwise sums");
  }
  std::set<std::vector<std::uint64_t>> sums;
  std::vector<std::uint64_t> tmp(a.dim());
  for (const auto& x : a.points()) {
    for (const auto& y : b.points()) {
      for (std::size_t i = 0; i < tmp.size(); ++i) {
        tmp[i] = checked_add(x[i], y[i], "minkowski_sum");
      }
      sums.insert(tmp);
    }
  }
  return LatticeSet::from_points(
      a.dim(), std::vector<std::vector<std::uint64_t>>(sums.begin(),
                                                       sums.end()));
}

LatticeSet hfold_lattice(const LatticeSet& a, std::uint64_t h,
                         const Budget& budget) {
  if (a.empty()) throw DomainError("hfold_lattice: empty set");
  if (h == 0) return LatticeSet::zero(a.dim());
  LatticeSet r = a;
  for (std::uint64_t i = 1; i < h; ++i) r = minkowski_sum(r, a, budget);
  return r;
}

// --- OrderPattern -----------------------------------------------------------

OrderPattern OrderPattern::from_ranks(std::vector<std::uint32_t> ranks) {
  if (ranks.empty()) throw DomainError("OrderPattern: empty rank list");
  std::uint32_t m = 0;
  for (std::uint32_t r : ranks) {
    if (r == 0 || r > ranks.size()) {
      throw DomainError("OrderPattern: rank outside [1, n]");
    }
    m = std::max(m, r);
  }
  std::vector<bool> seen(m + 1, false);
  for (std::uint32_t r : ranks) seen[r] = true;
  for (std::uint32_t r = 1; r <= m; ++r) {
    if (!seen[r]) {
      throw DomainError("OrderPattern: ranks are not dense (gap at " +
                        std::to_string(r) + ")");
    }
  }
  OrderPattern p;
  p.ranks_ = std::move(ranks);
  return p;
}

OrderPattern OrderPattern::normalized(
    const std::vector<std::uint32_t>& entries) {
  if (entries.empty()) throw DomainError("OrderPattern: empty rank list");
  std::vector<std::uint64_t> v(entries.begin(), entries.end());
  return relative_order(v);
}

std::uint32_t OrderPattern::max_rank() const {
  std::uint32_t m = 0;
  for (std::uint32_t r : ranks_) m = std::max(m, r);
  return m;
}

bool OrderPattern::is_permutation() const {
  return !ranks_.empty() && max_rank() == ranks_.size();
}

namespace {

template <typename T>
OrderPattern relative_order_impl(const std::vector<T>& values) {
  if (values.empty()) throw DomainError("relative_order: empty list");
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return values[i] < values[j];
  });
  std::vector<std::uint32_t> ranks(values.size());
  std::uint32_t rank = 0;
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    if (pos == 0 || values[order[pos]] != values[order[pos - 1]]) ++rank;
    ranks[order[pos]] = rank;
  }
  return OrderPattern::from_ranks(std::move(ranks));
}

}  // namespace

OrderPattern relative_order(const std::vector<BigCount>& values) {
  return relative_order_impl(values);
}

OrderPattern relative_order(const std::vector<std::uint64_t>& values) {
  return relative_order_impl(values);
}

bool matches_pattern(const std::vector<BigCount>& values,
                     const OrderPattern& pattern) {
  if (values.size() != pattern.size()) {
    throw DomainError("matches_pattern: length mismatch");
  }
  std::vector<std::uint64_t> as_values(pattern.ranks().begin(),
                                       pattern.ranks().end());
  return relative_order(values) == relative_order(as_values);
}

}  // namespace sumset
