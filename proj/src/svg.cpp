#include "rasterpack/svg.hpp"

#include <cstdio>
#include <map>
#include <sstream>

#include "rasterpack/errors.hpp"
#include "rasterpack/scanline.hpp"

namespace rasterpack {
namespace {

// FNV-1a; stable across platforms, unlike std::hash.
std::uint32_t fnv1a(const std::string& s) {
  std::uint32_t h = 2166136261u;
  for (unsigned char c : s) {
    h ^= c;
    h *= 16777619u;
  }
  return h;
}

std::string color_of(const std::string& id) {
  const std::uint32_t h = fnv1a(id);
  char buf[32];
  std::snprintf(buf, sizeof buf, "hsl(%u,60%%,%u%%)", h % 360, 45 + (h >> 16) % 20);
  return buf;
}

struct Rect {
  int x, y, w, h;
};

std::vector<Rect> merge_rows(const StripLines& rows) {
  std::vector<Rect> done;
  std::map<std::pair<int, int>, Rect> open;  // (lo, hi) -> rect still growing
  for (int y = rows.first_line(); y <= rows.last_line() + 1; ++y) {
    std::map<std::pair<int, int>, Rect> next;
    for (const auto& s : rows.line(y)) {
      const auto key = std::make_pair(s.lo, s.hi);
      if (auto it = open.find(key); it != open.end()) {
        Rect r = it->second;
        ++r.h;
        next[key] = r;
        open.erase(it);
      } else {
        next[key] = {s.lo, y, s.hi - s.lo + 1, 1};
      }
    }
    for (const auto& [key, r] : open) done.push_back(r);
    open = std::move(next);
  }
  return done;
}

}  // namespace

std::string render_svg(const Problem& problem, const Layout& layout) {
  if (problem.piece_count() == 0 || layout.pos.empty()) {
    throw ValidationError("nothing to render: the result has no pieces");
  }
  const int L = layout.length;
  const int W = problem.width();
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << L << ' ' << W
      << "\" width=\"" << L * 4 << "\" height=\"" << W * 4 << "\">\n";
  out << "<g transform=\"matrix(1 0 0 -1 0 " << W << ")\" shape-rendering=\"crispEdges\">\n";
  out << "<rect class=\"container\" x=\"0\" y=\"0\" width=\"" << L << "\" height=\"" << W
      << "\" fill=\"white\" stroke=\"black\" stroke-width=\"0.5\"/>\n";
  for (int i = 0; i < problem.piece_count(); ++i) {
    const auto& id = problem.shapes()[problem.shape_of(i)].id;
    const auto& raster = problem.raster(i, layout.orient[i]);
    out << "<g class=\"piece\" data-piece=\"" << i << "\" data-shape=\"" << id
        << "\" data-orientation=\"" << problem.degrees(i, layout.orient[i]) << "\" fill=\""
        << color_of(id) << "\">\n";
    for (const auto& r : merge_rows(encode(raster).rows)) {
      out << "<rect x=\"" << r.x + layout.pos[i].x << "\" y=\"" << r.y + layout.pos[i].y
          << "\" width=\"" << r.w << "\" height=\"" << r.h << "\"/>\n";
    }
    out << "</g>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace rasterpack
