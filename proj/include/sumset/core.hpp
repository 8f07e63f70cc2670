#ifndef SUMSET_CORE_HPP
#define SUMSET_CORE_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace sumset {

/// Exact nonnegative integer of arbitrary size.  Every cardinality in this
/// library is a BigCount; assembled product sizes overflow 64 bits routinely.
using BigCount = mpz_class;

std::string to_decimal(const BigCount& x);
BigCount big_pow(const BigCount& base, std::uint64_t exp);
BigCount binomial(std::uint64_t n, std::uint64_t k);

/// Bad input: violated precondition, malformed parameter, empty operand.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Refused computation: the predicted cost exceeds the configured budget.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what, std::string predicted_cost)
      : std::runtime_error(what), predicted_cost_(std::move(predicted_cost)) {}
  const std::string& predicted_cost() const { return predicted_cost_; }

 private:
  std::string predicted_cost_;
};

/// Resource caps for dense-bit-vector kernels and enumerations.
struct Budget {
  std::uint64_t max_bits = std::uint64_t{1} << 30;  // dense bit-vector span
  std::uint64_t max_enum = std::uint64_t{1} << 24;  // materialized element count
  std::uint64_t max_work = std::uint64_t{1} << 33;  // approximate word operations
};

// ---------------------------------------------------------------------------
// IntegerSet: finite set of nonnegative integers, strictly increasing storage.
// ---------------------------------------------------------------------------

class IntegerSet {
 public:
  IntegerSet() = default;

  /// Sorts and deduplicates.
  static IntegerSet from_values(std::vector<std::uint64_t> values);
  /// Validates that `values` is strictly increasing.
  static IntegerSet from_sorted_unique(std::vector<std::uint64_t> values);
  static IntegerSet interval(std::uint64_t lo, std::uint64_t hi);
  static IntegerSet singleton(std::uint64_t x);

  bool empty() const { return values_.empty(); }
  std::size_t size() const { return values_.size(); }
  std::uint64_t min() const;
  std::uint64_t max() const;
  std::uint64_t span() const { return max() - min(); }
  bool contains(std::uint64_t x) const;
  const std::vector<std::uint64_t>& values() const { return values_; }

  bool operator==(const IntegerSet&) const = default;

 private:
  std::vector<std::uint64_t> values_;
};

/// Exact Minkowski sum {a+b : a in A, b in B} over a dense bit vector.
/// OpenMP-parallel over destination words for large spans.
IntegerSet minkowski_sum(const IntegerSet& a, const IntegerSet& b,
                         const Budget& budget = {});

/// Exact h-fold sumset by repeated doubling on dense bit vectors.
/// Convention: 0A = {0}.
IntegerSet hfold_int(const IntegerSet& a, std::uint64_t h,
                     const Budget& budget = {});

/// Sizes |1A|,...,|h_max A| by successive pairwise sums (no doubling);
/// cheaper than h_max separate hfold_int calls when A is small.
std::vector<std::uint64_t> hfold_sizes(const IntegerSet& a,
                                       std::uint64_t h_max,
                                       const Budget& budget = {});

/// Elementwise multiplication by lambda >= 1.
IntegerSet dilate(const IntegerSet& a, std::uint64_t lambda);

// ---------------------------------------------------------------------------
// ModpVectorSet: subset of (Z/pZ)^t stored as sorted mixed-radix indices.
// ---------------------------------------------------------------------------

class ModpVectorSet {
 public:
  ModpVectorSet() = default;

  /// Vectors of length t with entries in [0, p-1]; rejects out-of-range
  /// entries and wrong lengths, deduplicates.
  static ModpVectorSet from_vectors(
      std::uint64_t p, std::uint64_t t,
      const std::vector<std::vector<std::uint64_t>>& vectors);
  /// Flat indices in [0, p^t), sorted or not; deduplicates.
  static ModpVectorSet from_indices(std::uint64_t p, std::uint64_t t,
                                    std::vector<std::uint64_t> indices);
  static ModpVectorSet zero(std::uint64_t p, std::uint64_t t);

  std::uint64_t p() const { return p_; }
  std::uint64_t t() const { return t_; }
  /// p^t, the ambient group order.
  std::uint64_t space() const { return space_; }
  bool empty() const { return indices_.empty(); }
  std::size_t size() const { return indices_.size(); }
  const std::vector<std::uint64_t>& indices() const { return indices_; }
  std::vector<std::uint64_t> digits(std::uint64_t index) const;
  std::vector<std::vector<std::uint64_t>> vectors() const;

  bool operator==(const ModpVectorSet&) const = default;

 private:
  std::uint64_t p_ = 2;
  std::uint64_t t_ = 0;
  std::uint64_t space_ = 1;
  std::vector<std::uint64_t> indices_;
};

/// Coordinatewise sum mod p; operands must share (p, t).
ModpVectorSet minkowski_modp(const ModpVectorSet& a, const ModpVectorSet& b,
                             const Budget& budget = {});

/// Exact h-fold sumset in (Z/pZ)^t by repeated doubling. 0A = {0-vector}.
ModpVectorSet hfold_modp(const ModpVectorSet& a, std::uint64_t h,
                         const Budget& budget = {});

/// Product set in (Z/pZ)^(tA+tB); requires equal p.
ModpVectorSet cartesian_product(const ModpVectorSet& a, const ModpVectorSet& b,
                                const Budget& budget = {});

// ---------------------------------------------------------------------------
// LatticeSet: finite subset of Z^m (all coordinates nonnegative).  Used for
// product constructions before embedding back into Z; all operations are
// straightforward enumerations intended for modest sizes.
// ---------------------------------------------------------------------------

class LatticeSet {
 public:
  LatticeSet() = default;
  static LatticeSet from_points(std::size_t dim,
                                std::vector<std::vector<std::uint64_t>> pts);
  static LatticeSet from_integer_set(const IntegerSet& a);
  static LatticeSet zero(std::size_t dim);

  std::size_t dim() const { return dim_; }
  bool empty() const { return points_.empty(); }
  std::size_t size() const { return points_.size(); }
  const std::vector<std::vector<std::uint64_t>>& points() const {
    return points_;
  }

  bool operator==(const LatticeSet&) const = default;

 private:
  std::size_t dim_ = 1;
  std::vector<std::vector<std::uint64_t>> points_;  // sorted lex, unique
};

LatticeSet cartesian_product(const LatticeSet& a, const LatticeSet& b,
                             const Budget& budget = {});
LatticeSet minkowski_sum(const LatticeSet& a, const LatticeSet& b,
                         const Budget& budget = {});
LatticeSet hfold_lattice(const LatticeSet& a, std::uint64_t h,
                         const Budget& budget = {});

// ---------------------------------------------------------------------------
// OrderPattern: tie-aware relative order as dense ranks.
// ---------------------------------------------------------------------------

class OrderPattern {
 public:
  OrderPattern() = default;
  /// Ranks in [1, n] whose value set must be {1,...,m} for some m <= n.
  static OrderPattern from_ranks(std::vector<std::uint32_t> ranks);
  /// Dense-ranks arbitrary positive entries (the tuples of the extension
  /// theorem are normalized this way before use).
  static OrderPattern normalized(const std::vector<std::uint32_t>& entries);

  std::size_t size() const { return ranks_.size(); }
  const std::vector<std::uint32_t>& ranks() const { return ranks_; }
  std::uint32_t max_rank() const;
  bool is_permutation() const;

  bool operator==(const OrderPattern&) const = default;

 private:
  std::vector<std::uint32_t> ranks_;
};

/// Dense ranks of `values`: result[i] < result[j] iff values[i] < values[j].
OrderPattern relative_order(const std::vector<BigCount>& values);
OrderPattern relative_order(const std::vector<std::uint64_t>& values);

/// True iff the values realize exactly the relative order of `pattern`
/// (ties included).  Lengths must agree.
bool matches_pattern(const std::vector<BigCount>& values,
                     const OrderPattern& pattern);

}  // namespace sumset

#endif  // SUMSET_CORE_HPP
