#include "rasterpack/penalty.hpp"

#include <algorithm>
#include <stdexcept>

namespace rasterpack {

PenaltyState::PenaltyState(int n)
    : n_(n),
      alpha_(static_cast<std::size_t>(n) * n, 1.0),
      f_(static_cast<std::size_t>(n) * n, 0) {}

std::int64_t PenaltyState::piece_total(int k) const {
  std::int64_t s = 0;
  for (int j = 0; j < n_; ++j) s += f_[index(k, j)];
  return s;
}

double PenaltyState::piece_weighted(int k) const {
  double s = 0.0;
  for (int j = 0; j < n_; ++j) {
    if (const int v = f_[index(k, j)]; v != 0) s += alpha_[index(k, j)] * v;
  }
  return s;
}

std::vector<int> PenaltyState::overlapping(int k) const {
  std::vector<int> out;
  for (int j = 0; j < n_; ++j) {
    if (f_[index(k, j)] > 0) out.push_back(j);
  }
  return out;
}

void PenaltyState::reset_weights() {
  std::fill(alpha_.begin(), alpha_.end(), 1.0);
  recompute_weighted();
}

void PenaltyState::recompute(const Problem& problem, const NfpTable& table,
                             const Layout& layout) {
  total_ = 0;
  for (int i = 0; i < n_; ++i) {
    f_[index(i, i)] = 0;
    for (int j = i + 1; j < n_; ++j) {
      const int v = pair_penalty(problem, table, layout, i, j);
      f_[index(i, j)] = v;
      f_[index(j, i)] = v;
      total_ += v;
    }
  }
  recompute_weighted();
}

void PenaltyState::set_piece(int k, std::span<const int> f_row) {
  for (int j = 0; j < n_; ++j) {
    if (j == k) continue;
    const int old = f_[index(k, j)];
    const int now = f_row[j];
    if (old == now) continue;
    total_ += now - old;
    weighted_ += alpha_[index(k, j)] * (now - old);
    f_[index(k, j)] = now;
    f_[index(j, k)] = now;
  }
  if (total_ == 0) weighted_ = 0.0;
}

void PenaltyState::update_weights() {
  int max_f = 0;
  for (int v : f_) max_f = std::max(max_f, v);
  if (max_f == 0) {
    throw std::logic_error("weight update requires an overlapping pair");
  }
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      if (const int v = f_[index(i, j)]; v > 0) {
        set_alpha(i, j, alpha(i, j) + static_cast<double>(v) / max_f);
      }
    }
  }
  recompute_weighted();
}

void PenaltyState::recompute_weighted() {
  weighted_ = 0.0;
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      if (const int v = f_[index(i, j)]; v != 0) weighted_ += alpha_[index(i, j)] * v;
    }
  }
}

}  // namespace rasterpack
