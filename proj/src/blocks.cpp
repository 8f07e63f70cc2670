#include "sumset/blocks.hpp"

#include <algorithm>
#include <bit>

namespace sumset {

std::string block_kind_name(BlockKind kind) {
  switch (kind) {
    case BlockKind::X: return "X";
    case BlockKind::Y: return "Y";
    case BlockKind::Z: return "Z";
  }
  throw DomainError("unknown block kind");
}

std::size_t BlockFamily::count() const {
  switch (kind) {
    case BlockKind::X: return x_params.size();
    case BlockKind::Y: return y_params.size();
    case BlockKind::Z: return z_params.size();
  }
  return 0;
}

std::uint64_t BlockFamily::block_dim() const {
  if (kind == BlockKind::X) {
    if (x_params.empty()) throw DomainError("BlockFamily: empty X family");
    return x_params.front().t;
  }
  return 1;
}

std::uint64_t BlockFamily::coordinate_max() const {
  std::uint64_t m = 0;
  switch (kind) {
    case BlockKind::X:
      for (const auto& p : x_params) m = std::max(m, p.p - 1);
      break;
    case BlockKind::Y:
      for (const auto& p : y_params) m = std::max(m, p.v);
      break;
    case BlockKind::Z:
      for (const auto& p : z_params) m = std::max(m, p.w);
      break;
  }
  return m;
}

BigCount BlockFamily::fold_size(std::uint64_t j, std::size_t i) const {
  switch (kind) {
    case BlockKind::X: return size_X_hfold(j, x_params.at(i));
    case BlockKind::Y: return size_Y_hfold(j, y_params.at(i));
    case BlockKind::Z: return size_Z_hfold(j, z_params.at(i));
  }
  throw DomainError("unknown block kind");
}

// --- X blocks ---------------------------------------------------------------

namespace {

void validate_x(const XBlockParams& p) {
  if (p.p < 2) throw DomainError("X block: p must be >= 2");
  if (p.s > p.t) throw DomainError("X block: s must satisfy 0 <= s <= t");
}

}  // namespace

ModpVectorSet materialize_X(const XBlockParams& params, const Budget& budget) {
  validate_x(params);
  BigCount space = big_pow(BigCount(params.p), params.t);
  if (space > BigCount(static_cast<unsigned long>(budget.max_enum))) {
    throw ResourceError("materialize_X: enumeration budget exceeded",
                        "p^t = " + to_decimal(space) + " vectors");
  }
  const std::uint64_t n = space.get_ui();
  std::vector<std::uint64_t> idx;
  for (std::uint64_t i = 0; i < n; ++i) {
    std::uint64_t rest = i, nonzero = 0;
    for (std::uint64_t d = 0; d < params.t && nonzero <= params.s; ++d) {
      if (rest % params.p != 0) ++nonzero;
      rest /= params.p;
    }
    if (nonzero <= params.s) idx.push_back(i);
  }
  return ModpVectorSet::from_indices(params.p, params.t, std::move(idx));
}

BigCount size_X_hfold(std::uint64_t j, const XBlockParams& params) {
  validate_x(params);
  if (j == 0) return 1;
  // jX(s,t) = X(min(js,t), t); |X(s,t)| = sum_{i<=s} C(t,i)(p-1)^i.
  std::uint64_t js = 0;
  if (params.s != 0) {
    js = (j > params.t / params.s) ? params.t
                                   : std::min(j * params.s, params.t);
  }
  BigCount total = 0;
  const BigCount pm1 = static_cast<unsigned long>(params.p - 1);
  for (std::uint64_t i = 0; i <= js; ++i) {
    total += binomial(params.t, i) * big_pow(pm1, i);
  }
  return total;
}

BlockFamily choose_X_family(std::size_t n, std::uint64_t h, std::uint64_t p) {
  if (n == 0 || h == 0) throw DomainError("choose_X_family: n, h must be >= 1");
  if (p < 2) throw DomainError("choose_X_family: p must be >= 2");
  BlockFamily fam;
  fam.h = h;
  fam.kind = BlockKind::X;
  if (n == 1) {
    fam.x_params.push_back({h, h * (h + 1), p});
    return fam;
  }
  const std::uint64_t t = h * (h + 1) * (n - 1);
  for (std::size_t i = 1; i <= n; ++i) {
    fam.x_params.push_back({h * (n - 1) + i - 1, t, p});
  }
  return fam;
}

// --- Y blocks ---------------------------------------------------------------

namespace {

void validate_y(const YBlockParams& p) {
  if (p.u > p.v) throw DomainError("Y block: u must satisfy 0 <= u <= v");
}

// Merged size of the union of `count` intervals of equal length, with
// starting points `starts` (any order, duplicates allowed).
std::uint64_t interval_union_size(std::vector<std::uint64_t> starts,
                                  std::uint64_t len) {
  std::sort(starts.begin(), starts.end());
  starts.erase(std::unique(starts.begin(), starts.end()), starts.end());
  std::uint64_t total = 0, covered_to = 0;
  bool any = false;
  for (std::uint64_t s : starts) {
    const std::uint64_t e = s + len;  // one past the end
    if (!any || s > covered_to) {
      total += len;
      covered_to = e;
      any = true;
    } else if (e > covered_to) {
      total += e - covered_to;
      covered_to = e;
    }
  }
  return total;
}

}  // namespace

IntegerSet materialize_Y(const YBlockParams& params) {
  validate_y(params);
  std::vector<std::uint64_t> v;
  for (std::uint64_t x = 0; x <= params.u; ++x) v.push_back(x);
  for (std::uint64_t x = params.v - params.u; x <= params.v; ++x) {
    v.push_back(x);
  }
  return IntegerSet::from_values(std::move(v));
}

BigCount size_Y_hfold(std::uint64_t j, const YBlockParams& params) {
  validate_y(params);
  if (j == 0) return 1;
  // jY(u,v) = union over l = 0..j of [l(v-u), l(v-u) + ju].
  std::vector<std::uint64_t> starts;
  starts.reserve(j + 1);
  for (std::uint64_t l = 0; l <= j; ++l) starts.push_back(l * (params.v - params.u));
  return BigCount(static_cast<unsigned long>(
      interval_union_size(std::move(starts), j * params.u + 1)));
}

BlockFamily choose_Y_family(std::size_t n, std::uint64_t h) {
  if (n == 0 || h == 0) throw DomainError("choose_Y_family: n, h must be >= 1");
  // u_i = c + i - 1 and v = (h+1)(c+n-1); the chain upper bound holds with
  // equality, and c is the smallest value passing the lower bound
  // (v-1)/(h+2) <= u_1.
  std::uint64_t c = 1;
  while ((h + 1) * (c + n - 1) - 1 > (h + 2) * c) ++c;
  BlockFamily fam;
  fam.h = h;
  fam.kind = BlockKind::Y;
  const std::uint64_t v = (h + 1) * (c + n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    fam.y_params.push_back({c + i, v});
  }
  return fam;
}

// --- Z blocks ---------------------------------------------------------------

namespace {

void validate_z(const ZBlockParams& p) {
  if (!(p.u <= p.v && p.v <= p.w)) {
    throw DomainError("Z block: parameters must satisfy 0 <= u <= v <= w");
  }
}

// Fold-h window for the v-chain of Z(u, ., w): the inner Y(u,v) must be a
// solid interval at fold h (v <= (h+1)u+1), split at every lower fold
// (v >= hu+1), and the outer copies must be split at fold h ((h+1)v < w)
// and merged at every higher fold (v >= (w-1)/(h+2)).
struct ZWindow {
  std::uint64_t lo = 1, hi = 0;  // empty when lo > hi
};

ZWindow z_window(std::uint64_t u, std::uint64_t w, std::uint64_t h) {
  ZWindow win;
  const std::uint64_t lo_w = (w - 1 + h + 1) / (h + 2);  // ceil((w-1)/(h+2))
  win.lo = std::max(h * u + 1, lo_w);
  win.hi = std::min((h + 1) * u + 1, (w - 1) / (h + 1));
  return win;
}

// Smallest arm u whose fold-h window holds an n-term chain; 0 when none.
std::uint64_t first_z_arm(std::uint64_t w, std::uint64_t h, std::size_t n) {
  const std::uint64_t top = (w - 1) / (h + 1);
  if (top == 0) return 0;
  const std::uint64_t u_max = (top - 1) / h + 1;
  for (std::uint64_t u = 1; u <= u_max; ++u) {
    ZWindow win = z_window(u, w, h);
    if (win.lo <= win.hi && win.hi - win.lo + 1 >= n) return u;
  }
  return 0;
}

}  // namespace

IntegerSet materialize_Z(const ZBlockParams& params) {
  validate_z(params);
  std::vector<std::uint64_t> v;
  auto push_interval = [&v](std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t x = lo; x <= hi; ++x) v.push_back(x);
  };
  push_interval(0, params.u);
  push_interval(params.v - params.u, params.v);
  push_interval(params.w - params.v, params.w - params.v + params.u);
  push_interval(params.w - params.u, params.w);
  return IntegerSet::from_values(std::move(v));
}

BigCount size_Z_hfold(std::uint64_t j, const ZBlockParams& params) {
  validate_z(params);
  if (j == 0) return 1;
  // jZ = jY(u,v) + {0, w-v, ..., j(w-v)}: (j+1)^2 intervals of length ju+1.
  std::vector<std::uint64_t> starts;
  starts.reserve((j + 1) * (j + 1));
  for (std::uint64_t m = 0; m <= j; ++m) {
    for (std::uint64_t l = 0; l <= j; ++l) {
      starts.push_back(m * (params.w - params.v) + l * (params.v - params.u));
    }
  }
  return BigCount(static_cast<unsigned long>(
      interval_union_size(std::move(starts), j * params.u + 1)));
}

std::uint64_t z_common_w(std::size_t n, std::uint64_t H) {
  if (n == 0 || H == 0) throw DomainError("z_common_w: n, H must be >= 1");
  for (std::uint64_t w = 4;; ++w) {
    bool ok = true;
    for (std::uint64_t h = 1; h <= H && ok; ++h) {
      ok = first_z_arm(w, h, n) != 0;
    }
    if (ok) return w;
  }
}

BlockFamily choose_Z_family_with_w(std::size_t n, std::uint64_t h,
                                   std::uint64_t w) {
  const std::uint64_t u = first_z_arm(w, h, n);
  if (u == 0) {
    throw DomainError("choose_Z_family: w admits no n-term chain at fold " +
                      std::to_string(h));
  }
  ZWindow win = z_window(u, w, h);
  BlockFamily fam;
  fam.h = h;
  fam.kind = BlockKind::Z;
  for (std::size_t i = 0; i < n; ++i) {
    fam.z_params.push_back({u, win.lo + i, w});
  }
  return fam;
}

BlockFamily choose_Z_family(std::size_t n, std::uint64_t h, std::uint64_t H) {
  if (h == 0 || h > H) throw DomainError("choose_Z_family: need 1 <= h <= H");
  return choose_Z_family_with_w(n, h, z_common_w(n, H));
}

// --- family verification ----------------------------------------------------

FamilyReport verify_block_family(const BlockFamily& family, std::uint64_t H) {
  if (family.count() == 0) throw DomainError("verify_block_family: empty family");
  if (H < family.h) {
    throw DomainError("verify_block_family: horizon below designated fold");
  }
  FamilyReport report;
  report.h = family.h;
  report.horizon = H;
  report.pass = true;
  const std::size_t n = family.count();
  for (std::uint64_t j = 1; j <= H; ++j) {
    std::vector<BigCount> row;
    row.reserve(n);
    for (std::size_t i = 0; i < n; ++i) row.push_back(family.fold_size(j, i));
    report.sizes.push_back(std::move(row));
  }
  const auto& at_h = report.sizes[family.h - 1];
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (!(at_h[i] < at_h[i + 1])) {
      report.pass = false;
      report.violations.push_back(
          {"strict-chain", family.h,
           "|hB_" + std::to_string(i + 1) + "| = " + to_decimal(at_h[i]) +
               " !< |hB_" + std::to_string(i + 2) +
               "| = " + to_decimal(at_h[i + 1])});
    }
  }
  for (std::uint64_t j = family.h + 1; j <= H; ++j) {
    const auto& row = report.sizes[j - 1];
    for (std::size_t i = 1; i < n; ++i) {
      if (row[i] != row[0]) {
        report.pass = false;
        report.violations.push_back(
            {"equal-above", j,
             "|j B_" + std::to_string(i + 1) + "| = " + to_decimal(row[i]) +
                 " != " + to_decimal(row[0])});
      }
    }
  }
  if (family.kind == BlockKind::Z) {
    for (std::uint64_t j = 1; j < family.h; ++j) {
      const auto& row = report.sizes[j - 1];
      for (std::size_t i = 1; i < n; ++i) {
        if (row[i] != row[0]) {
          report.pass = false;
          report.violations.push_back(
              {"equal-below", j,
               "|j B_" + std::to_string(i + 1) + "| = " + to_decimal(row[i]) +
                   " != " + to_decimal(row[0])});
        }
      }
    }
    // Above the designated fold the blocks must saturate to [0, jw].
    for (std::uint64_t j = family.h + 1; j <= H; ++j) {
      const auto& row = report.sizes[j - 1];
      for (std::size_t i = 0; i < n; ++i) {
        const BigCount full = BigCount(static_cast<unsigned long>(j)) *
                                  static_cast<unsigned long>(
                                      family.z_params[i].w) +
                              1;
        if (row[i] != full) {
          report.pass = false;
          report.violations.push_back(
              {"full-interval", j,
               "|j B_" + std::to_string(i + 1) + "| = " + to_decimal(row[i]) +
                   " != " + to_decimal(full)});
        }
      }
    }
  }
  return report;
}

}  // namespace sumset
