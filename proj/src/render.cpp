#include "render.hpp"

#include <algorithm>
#include <sstream>

namespace render {

std::string circuit_ascii(const railway::RailwayCircuit& c) {
  const std::size_t n = c.wires();
  const std::size_t k = c.sections();
  // Each section occupies 4 columns; wires are horizontal lines.
  std::vector<std::string> rows(n, std::string(4 * k + 2, '-'));
  for (const railway::Gate& g : c.gates()) {
    const std::size_t col = 1 + 4 * g.section;
    for (std::size_t w = g.lo; w <= g.hi; ++w) {
      rows[w][col] = '[';
      rows[w][col + 1] = (w == g.lo) ? 'g' : '.';
      rows[w][col + 2] = ']';
    }
  }
  std::ostringstream os;
  for (std::size_t w = 0; w < n; ++w) os << 'w' << w << ' ' << rows[w] << '\n';
  return os.str();
}

std::string circuit_svg(const railway::RailwayCircuit& c) {
  const int n = static_cast<int>(c.wires());
  const int k = static_cast<int>(c.sections());
  const int width = 40 * k + 40;
  const int height = 24 * n + 24;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
     << "\" height=\"" << height << "\">\n";
  for (int w = 0; w < n; ++w) {
    const int y = 24 + 24 * w;
    os << "<line x1=\"8\" y1=\"" << y << "\" x2=\"" << (width - 8)
       << "\" y2=\"" << y << "\" stroke=\"black\"/>\n";
  }
  for (const railway::Gate& g : c.gates()) {
    const int x = 24 + 40 * static_cast<int>(g.section);
    const int y0 = 24 + 24 * static_cast<int>(g.lo) - 8;
    const int y1 = 24 + 24 * static_cast<int>(g.hi) + 8;
    os << "<rect x=\"" << x << "\" y=\"" << y0 << "\" width=\"24\" height=\""
       << (y1 - y0) << "\" fill=\"white\" stroke=\"black\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

static char glue_char(const atam::Glue& g) {
  if (g.null()) return ' ';
  switch (g.bit) {
    case atam::Bit::Zero: return '0';
    case atam::Bit::One: return '1';
    case atam::Bit::Eps: return '.';
  }
  return ' ';
}

std::string assembly_ascii(const atam::TileSet& tiles,
                           const atam::Assembly& a) {
  if (a.at.empty()) return "";
  int xmin = a.at.begin()->first.x, xmax = xmin;
  int ymin = a.at.begin()->first.y, ymax = ymin;
  for (const auto& [z, t] : a.at) {
    xmin = std::min(xmin, z.x);
    xmax = std::max(xmax, z.x);
    ymin = std::min(ymin, z.y);
    ymax = std::max(ymax, z.y);
  }
  // Each tile is a 4x3 cell showing its four glue bits; north is up.
  const int cols = xmax - xmin + 1;
  const int rows = ymax - ymin + 1;
  std::vector<std::string> grid(3 * rows, std::string(4 * cols + 1, ' '));
  for (const auto& [z, t] : a.at) {
    const int cx = 4 * (z.x - xmin);
    const int cy = 3 * (ymax - z.y);  // north on top
    const atam::TileType& tt = tiles.tiles[t];
    grid[cy][cx] = '+';
    grid[cy][cx + 4] = '+';
    grid[cy + 2][cx] = '+';
    grid[cy + 2][cx + 4] = '+';
    grid[cy][cx + 2] = glue_char(tt.side(atam::North));
    grid[cy + 2][cx + 2] = glue_char(tt.side(atam::South));
    grid[cy + 1][cx] = glue_char(tt.side(atam::West));
    grid[cy + 1][cx + 4] = glue_char(tt.side(atam::East));
    grid[cy + 1][cx + 2] = tt.name.empty() ? '?' : tt.name[0];
  }
  std::ostringstream os;
  for (const std::string& line : grid) os << line << '\n';
  return os.str();
}

std::string assembly_svg(const atam::TileSet& tiles, const atam::Assembly& a) {
  if (a.at.empty()) return "<svg xmlns=\"http://www.w3.org/2000/svg\"/>\n";
  int xmin = a.at.begin()->first.x, xmax = xmin;
  int ymin = a.at.begin()->first.y, ymax = ymin;
  for (const auto& [z, t] : a.at) {
    xmin = std::min(xmin, z.x);
    xmax = std::max(xmax, z.x);
    ymin = std::min(ymin, z.y);
    ymax = std::max(ymax, z.y);
  }
  const int cell = 28;
  const int width = cell * (xmax - xmin + 1) + 2 * cell;
  const int height = cell * (ymax - ymin + 1) + 2 * cell;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
     << "\" height=\"" << height << "\">\n";
  auto glue_color = [](const atam::Glue& g) -> const char* {
    if (g.null()) return nullptr;
    return g.bit == atam::Bit::Eps ? "#999999" : "#111111";
  };
  for (const auto& [z, t] : a.at) {
    const int x = cell + cell * (z.x - xmin);
    const int y = cell + cell * (ymax - z.y);
    const atam::TileType& tt = tiles.tiles[t];
    os << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << cell
       << "\" height=\"" << cell << "\" fill=\"#f4f4f4\" stroke=\"#444\"/>\n";
    struct Tick {
      atam::Dir d;
      int x0, y0, x1, y1;
    };
    const int m = cell / 2, q = cell / 4;
    const Tick ticks[4] = {
        {atam::North, x + m - q, y + 2, x + m + q, y + 2},
        {atam::East, x + cell - 2, y + m - q, x + cell - 2, y + m + q},
        {atam::South, x + m - q, y + cell - 2, x + m + q, y + cell - 2},
        {atam::West, x + 2, y + m - q, x + 2, y + m + q},
    };
    for (const Tick& tick : ticks) {
      const char* color = glue_color(tt.side(tick.d));
      if (!color) continue;
      os << "<line x1=\"" << tick.x0 << "\" y1=\"" << tick.y0 << "\" x2=\""
         << tick.x1 << "\" y2=\"" << tick.y1 << "\" stroke=\"" << color
         << "\" stroke-width=\"3\"/>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace render
