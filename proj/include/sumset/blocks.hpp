#ifndef SUMSET_BLOCKS_HPP
#define SUMSET_BLOCKS_HPP

#include <string>
#include <vector>

#include "sumset/core.hpp"

namespace sumset {

// Building blocks.  An X(s,t) block lives in (Z/pZ)^t and consists of all
// vectors with at most s nonzero coordinates; a Y(u,v) block is
// [0,u] u [v-u,v] in Z; a Z(u,v,w) block is Y(u,v) + {0, w-v} in Z.
// A family of n blocks designated at fold h has strictly increasing h-fold
// sizes and equal sizes at every higher fold (Z families additionally have
// equal sizes at every lower fold).

struct XBlockParams {
  std::uint64_t s = 0;  // max nonzero coordinates
  std::uint64_t t = 1;  // dimension
  std::uint64_t p = 2;  // prime modulus
};

struct YBlockParams {
  std::uint64_t u = 0;  // arm length
  std::uint64_t v = 0;  // diameter
};

struct ZBlockParams {
  std::uint64_t u = 0;  // inner arm
  std::uint64_t v = 0;  // inner diameter
  std::uint64_t w = 0;  // outer diameter
};

enum class BlockKind { X, Y, Z };

std::string block_kind_name(BlockKind kind);

struct BlockFamily {
  std::uint64_t h = 1;  // designated fold
  BlockKind kind = BlockKind::Y;
  std::vector<XBlockParams> x_params;
  std::vector<YBlockParams> y_params;
  std::vector<ZBlockParams> z_params;

  std::size_t count() const;
  /// Coordinates a single block occupies (t for X, 1 for Y and Z).
  std::uint64_t block_dim() const;
  /// Largest coordinate value of any block element (p-1 for X, v / w for Y/Z).
  std::uint64_t coordinate_max() const;
  /// Exact |j * B_i| by closed form (binomial sums / interval merging).
  BigCount fold_size(std::uint64_t j, std::size_t i) const;
};

ModpVectorSet materialize_X(const XBlockParams& params,
                            const Budget& budget = {});
BigCount size_X_hfold(std::uint64_t j, const XBlockParams& params);
/// Paper schedule t = h(h+1)(n-1), s_i = h(n-1)+i-1; degenerate n=1 uses
/// t = h(h+1), s_1 = h.
BlockFamily choose_X_family(std::size_t n, std::uint64_t h, std::uint64_t p);

IntegerSet materialize_Y(const YBlockParams& params);
BigCount size_Y_hfold(std::uint64_t j, const YBlockParams& params);
BlockFamily choose_Y_family(std::size_t n, std::uint64_t h);

IntegerSet materialize_Z(const ZBlockParams& params);
BigCount size_Z_hfold(std::uint64_t j, const ZBlockParams& params);
/// Smallest outer diameter w that admits an n-term v-chain at every fold
/// h = 1..H (all Z families for one construction share w).
std::uint64_t z_common_w(std::size_t n, std::uint64_t H);
/// Z family at fold h using the common w for horizon H.
BlockFamily choose_Z_family(std::size_t n, std::uint64_t h, std::uint64_t H);
BlockFamily choose_Z_family_with_w(std::size_t n, std::uint64_t h,
                                   std::uint64_t w);

struct FamilyViolation {
  std::string condition;  // "strict-chain" | "equal-above" | "equal-below"
  std::uint64_t fold = 0;
  std::string detail;
};

struct FamilyReport {
  bool pass = false;
  std::uint64_t h = 0;
  std::uint64_t horizon = 0;
  // sizes[j-1][i] = |j * B_i| for j = 1..horizon.
  std::vector<std::vector<BigCount>> sizes;
  std::vector<FamilyViolation> violations;
};

/// Checks the strict chain at fold h, equal sizes for h < h' <= H, and for
/// Z families equal sizes below h.  All sizes are computed by closed form.
FamilyReport verify_block_family(const BlockFamily& family, std::uint64_t H);

}  // namespace sumset

#endif  // SUMSET_BLOCKS_HPP
