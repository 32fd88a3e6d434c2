#include "borderidx/render.hpp"

#include <algorithm>
#include <sstream>

namespace borderidx {

namespace {

std::size_t digits(std::uint64_t v) {
  std::size_t d = 1;
  while (v >= 10) {
    v /= 10;
    ++d;
  }
  return d;
}

void render_block(std::ostringstream& out, const IndexTable& table,
                  const std::vector<std::uint32_t>& tail, std::size_t width) {
  const auto& bounds = table.bounds();
  auto cell = [&](std::uint32_t i, std::uint32_t j) {
    std::vector<std::uint32_t> coords;
    coords.reserve(bounds.dim());
    coords.push_back(i);
    if (bounds.dim() >= 2) coords.push_back(j);
    coords.insert(coords.end(), tail.begin(), tail.end());
    return table.at(ExponentVector(std::move(coords)));
  };
  const std::uint32_t rows = bounds.dim() >= 2 ? bounds[1] : 0;
  for (std::uint32_t j = rows + 1; j-- > 0;) {
    for (std::uint32_t i = 0; i <= bounds[0]; ++i) {
      if (i > 0) out << ' ';
      const std::string text = std::to_string(cell(i, j));
      out << std::string(width - text.size(), ' ') << text;
    }
    out << '\n';
  }
}

}  // namespace

std::string render_index_matrix(const IndexTable& table) {
  std::uint64_t peak = 0;
  for (auto v : table.values()) peak = std::max(peak, v);
  const std::size_t width = digits(peak);

  std::ostringstream out;
  const auto& bounds = table.bounds();
  if (bounds.dim() <= 2) {
    render_block(out, table, {}, width);
    return out.str();
  }
  // One 2-D block per slice of the remaining coordinates.
  std::vector<std::uint32_t> tail_bounds(bounds.coords().begin() + 2,
                                         bounds.coords().end());
  bool first = true;
  for (const auto& tail : box_points(ExponentVector(tail_bounds))) {
    if (!first) out << '\n';
    first = false;
    for (std::size_t i = 0; i < tail.dim(); ++i) {
      if (i > 0) out << ' ';
      out << 'x' << (i + 3) << '=' << tail[i];
    }
    out << ":\n";
    render_block(out, table, tail.coords(), width);
  }
  return out.str();
}

std::string render_exponents_text(const std::vector<ExponentVector>& points) {
  std::ostringstream out;
  for (const auto& p : points) {
    for (std::size_t i = 0; i < p.dim(); ++i) {
      if (i > 0) out << ' ';
      out << p[i];
    }
    out << '\n';
  }
  return out.str();
}

std::string render_exponents_latex(const std::vector<ExponentVector>& points,
                                   const std::string& var) {
  std::ostringstream out;
  out << "\\{";
  for (std::size_t k = 0; k < points.size(); ++k) {
    if (k > 0) out << ", ";
    const auto& p = points[k];
    if (p.total_degree() == 0) {
      out << '1';
      continue;
    }
    for (std::size_t i = 0; i < p.dim(); ++i) {
      if (p[i] == 0) continue;
      out << var << '_' << (i + 1);
      if (p[i] > 1) out << "^{" << p[i] << "}";
    }
  }
  out << "\\}";
  return out.str();
}

}  // namespace borderidx
