#ifndef SUMSET_SERIAL_HPP
#define SUMSET_SERIAL_HPP

#include "sumset/core.hpp"

namespace sumset::serial {

// Reference implementations with no bit-vector tricks and no OpenMP.
// They exist to cross-check the optimized kernels and to anchor the
// benchmark comparisons; keep them boring.

/// All pairwise sums collected, sorted, deduplicated.
IntegerSet minkowski_naive(const IntegerSet& a, const IntegerSet& b,
                           const Budget& budget = {});

/// h-1 successive pairwise sums, no doubling.
IntegerSet hfold_naive(const IntegerSet& a, std::uint64_t h,
                       const Budget& budget = {});

/// Same bit-vector algorithm as the parallel kernel, single-threaded loop.
IntegerSet minkowski_bitset(const IntegerSet& a, const IntegerSet& b,
                            const Budget& budget = {});

ModpVectorSet minkowski_naive(const ModpVectorSet& a, const ModpVectorSet& b,
                              const Budget& budget = {});

ModpVectorSet hfold_naive(const ModpVectorSet& a, std::uint64_t h,
                          const Budget& budget = {});

}  // namespace sumset::serial

#endif  // SUMSET_SERIAL_HPP
