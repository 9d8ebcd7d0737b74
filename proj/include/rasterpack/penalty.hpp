#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rasterpack/layout.hpp"

namespace rasterpack {

/// Pairwise penalty weights and the cached pairwise penalties of the current
/// layout. F and the weighted total are maintained incrementally.
class PenaltyState {
 public:
  PenaltyState() = default;
  explicit PenaltyState(int n);

  int size() const { return n_; }

  double alpha(int i, int j) const { return alpha_[index(i, j)]; }
  void set_alpha(int i, int j, double a) {
    alpha_[index(i, j)] = a;
    alpha_[index(j, i)] = a;
  }
  int f(int i, int j) const { return f_[index(i, j)]; }

  /// Unweighted total F.
  std::int64_t total() const { return total_; }
  /// Weighted total; accumulated incrementally, so equal to a full
  /// recomputation up to rounding.
  double weighted() const { return weighted_; }

  std::int64_t piece_total(int k) const;
  /// Weighted penalty of piece k, summed over j in index order.
  double piece_weighted(int k) const;
  std::vector<int> overlapping(int k) const;

  void reset_weights();
  /// Recomputes every cached f_ij from the NFP table.
  void recompute(const Problem& problem, const NfpTable& table, const Layout& layout);
  /// Replaces row/column k of the cache after piece k moved.
  void set_piece(int k, std::span<const int> f_row);
  /// Raises each alpha_ij by f_ij / max f. Throws std::logic_error when the
  /// layout has no overlap.
  void update_weights();

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * n_ + j;
  }
  void recompute_weighted();

  int n_ = 0;
  std::vector<double> alpha_;
  std::vector<int> f_;
  std::int64_t total_ = 0;
  double weighted_ = 0.0;
};

}  // namespace rasterpack
