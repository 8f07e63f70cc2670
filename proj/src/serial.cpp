#include "sumset/serial.hpp"

#include <algorithm>

namespace sumset::serial {

namespace {

void require_pairs(std::uint64_t a, std::uint64_t b, const Budget& budget,
                   const char* what) {
  if (a != 0 && b > budget.max_work / a) {
    throw ResourceError(std::string(what) + ": work budget exceeded",
                        std::to_string(a) + " x " + std::to_string(b) +
                            " pairwise sums");
  }
}

}  // namespace

IntegerSet minkowski_naive(const IntegerSet& a, const IntegerSet& b,
                           const Budget& budget) {
  if (a.empty() || b.empty()) {
    throw DomainError("minkowski_naive: empty operand");
  }
  require_pairs(a.size(), b.size(), budget, "minkowski_naive");
  std::vector<std::uint64_t> sums;
  sums.reserve(a.size() * b.size());
  for (std::uint64_t x : a.values()) {
    for (std::uint64_t y : b.values()) {
      sums.push_back(x + y);
    }
  }
  return IntegerSet::from_values(std::move(sums));
}

IntegerSet hfold_naive(const IntegerSet& a, std::uint64_t h,
                       const Budget& budget) {
  if (a.empty()) throw DomainError("hfold_naive: empty set");
  if (h == 0) return IntegerSet::singleton(0);
  IntegerSet r = a;
  for (std::uint64_t i = 1; i < h; ++i) r = minkowski_naive(r, a, budget);
  return r;
}

IntegerSet minkowski_bitset(const IntegerSet& a, const IntegerSet& b,
                            const Budget& budget) {
  if (a.empty() || b.empty()) {
    throw DomainError("minkowski_bitset: empty operand");
  }
  const std::uint64_t width = a.span() + b.span() + 1;
  if (width > budget.max_bits) {
    throw ResourceError("minkowski_bitset: bit-vector budget exceeded",
                        std::to_string(width) + " bits");
  }
  std::vector<std::uint64_t> bits((width + 63) / 64, 0);
  const std::uint64_t base = a.min() + b.min();
  for (std::uint64_t x : a.values()) {
    for (std::uint64_t y : b.values()) {
      const std::uint64_t i = (x - a.min()) + (y - b.min());
      bits[i >> 6] |= std::uint64_t{1} << (i & 63);
    }
  }
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 0; i < width; ++i) {
    if (bits[i >> 6] >> (i & 63) & 1) out.push_back(base + i);
  }
  return IntegerSet::from_sorted_unique(std::move(out));
}

ModpVectorSet minkowski_naive(const ModpVectorSet& a, const ModpVectorSet& b,
                              const Budget& budget) {
  if (a.p() != b.p() || a.t() != b.t()) {
    throw DomainError("minkowski_naive: mismatched ambient (p, t)");
  }
  if (a.empty() || b.empty()) {
    throw DomainError("minkowski_naive: empty operand");
  }
  require_pairs(a.size(), b.size(), budget, "minkowski_naive");
  std::vector<std::uint64_t> out;
  out.reserve(a.size() * b.size());
  for (std::uint64_t x : a.indices()) {
    const auto xd = a.digits(x);
    for (std::uint64_t y : b.indices()) {
      const auto yd = b.digits(y);
      std::uint64_t idx = 0, scale = 1;
      for (std::uint64_t i = 0; i < a.t(); ++i) {
        idx += ((xd[i] + yd[i]) % a.p()) * scale;
        scale *= a.p();
      }
      out.push_back(idx);
    }
  }
  return ModpVectorSet::from_indices(a.p(), a.t(), std::move(out));
}

ModpVectorSet hfold_naive(const ModpVectorSet& a, std::uint64_t h,
                          const Budget& budget) {
  if (a.empty()) throw DomainError("hfold_naive: empty set");
  if (h == 0) return ModpVectorSet::zero(a.p(), a.t());
  ModpVectorSet r = a;
  for (std::uint64_t i = 1; i < h; ++i) r = minkowski_naive(r, a, budget);
  return r;
}

}  // namespace sumset::serial
