#include "rasterpack/problem.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>

namespace rasterpack {

Problem::Problem(std::string name, int width, std::vector<ShapeClass> shapes,
                 std::vector<int> piece_shape)
    : name_(std::move(name)),
      width_(width),
      shapes_(std::move(shapes)),
      piece_shape_(std::move(piece_shape)) {
  if (width_ <= 0) throw std::invalid_argument("container width must be positive");
  for (std::size_t s = 0; s < shapes_.size(); ++s) {
    if (shapes_[s].orientations.empty()) {
      throw std::invalid_argument("shape " + shapes_[s].id + " has no orientations");
    }
    first_oriented_.push_back(oriented_total_);
    for (std::size_t o = 0; o < shapes_[s].orientations.size(); ++o) {
      oriented_index_.emplace_back(static_cast<int>(s), static_cast<int>(o));
    }
    oriented_total_ += static_cast<int>(shapes_[s].orientations.size());
  }
  for (int s : piece_shape_) {
    if (s < 0 || s >= static_cast<int>(shapes_.size())) {
      throw std::invalid_argument("piece refers to an unknown shape");
    }
  }
}

const PixelShape& Problem::oriented_raster(int oriented) const {
  const auto [s, o] = oriented_index_[oriented];
  return shapes_[s].orientations[o].raster;
}

int Problem::length_lower_bound() const {
  int longest = 1;
  std::int64_t area = 0;
  for (int i = 0; i < piece_count(); ++i) {
    int shortest = INT_MAX;
    std::int64_t smallest = INT64_MAX;
    for (int o = 0; o < orientation_count(i); ++o) {
      const auto& r = raster(i, o);
      smallest = std::min(smallest, r.area());
      if (r.width() <= width_) shortest = std::min(shortest, r.length());
    }
    if (shortest != INT_MAX) longest = std::max(longest, shortest);
    area += smallest;
  }
  const auto by_area = static_cast<int>((area + width_ - 1) / width_);
  return std::max(longest, by_area);
}

NfpTable::NfpTable(const Problem& problem) : count_(problem.oriented_count()) {
  table_.resize(static_cast<std::size_t>(count_) * count_);
  for (int a = 0; a < count_; ++a) {
    for (int b = 0; b < count_; ++b) {
      table_[static_cast<std::size_t>(a) * count_ + b] =
          build_nfp(problem.oriented_raster(a), problem.oriented_raster(b));
    }
  }
}

}  // namespace rasterpack
