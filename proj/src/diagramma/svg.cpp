#include "diagramma/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

#include "diagramma/errors.hpp"
#include "diagramma/wellformed.hpp"

namespace diagramma {

namespace {

std::string px(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

struct Stroke {
  Vec3 from, to;
};

}  // namespace

std::string render_svg(const Diagram& d, const ElementTable& table) {
  if (d.language != LangId::WIRE2D && d.language != LangId::WIRE2D_HDEP)
    throw DomainError("SVG rendering takes 2D wireframe diagrams; project 3D diagrams first");
  InterpretedLanguage lang = builtin_language(d.language, table);
  std::vector<Violation> violations = well_formed(d, lang);
  if (!violations.empty())
    throw DomainError("diagram is not well-formed: " + violations.front().message);

  struct Vertex {
    Vec3 pos;
    std::string label;
  };
  std::vector<Vertex> vertices;
  struct Line {
    Vec3 a, b;
    int order;
  };
  std::vector<Line> lines;

  for (const auto& [id, token] : d.tokens()) {
    const SymbolDef& def = lang.symbol(token.symbol);
    if (def.kind == SymbolKind::IT) {
      vertices.push_back({token.position->point, split_symbol(token.symbol).second});
    } else {
      std::vector<TokenId> nb = d.neighbours(id);
      lines.push_back({d.token(nb[0]).position->point, d.token(nb[1]).position->point,
                       std::stoi(split_symbol(token.symbol).second)});
    }
  }

  // Scale so the median bond draws at 40 px.
  std::vector<double> lengths;
  for (const Line& l : lines) lengths.push_back(distance(l.a, l.b));
  std::sort(lengths.begin(), lengths.end());
  double scale = 1.0;
  if (!lengths.empty() && lengths[lengths.size() / 2] > 1e-9)
    scale = 40.0 / lengths[lengths.size() / 2];

  double min_x = 0, min_y = 0, max_x = 0, max_y = 0;
  bool first = true;
  for (const Vertex& v : vertices) {
    double sx = v.pos.x * scale, sy = v.pos.y * scale;
    if (first) { min_x = max_x = sx; min_y = max_y = sy; first = false; }
    min_x = std::min(min_x, sx); max_x = std::max(max_x, sx);
    min_y = std::min(min_y, sy); max_y = std::max(max_y, sy);
  }
  const double margin = 30.0;
  double width = (max_x - min_x) + 2 * margin;
  double height = (max_y - min_y) + 2 * margin;
  // SVG y grows downward; flip.
  auto tx = [&](const Vec3& p) { return p.x * scale - min_x + margin; };
  auto ty = [&](const Vec3& p) { return max_y - p.y * scale + margin; };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << px(width) << "\" height=\""
      << px(height) << "\" viewBox=\"0 0 " << px(width) << " " << px(height) << "\">\n";
  for (const Line& l : lines) {
    // Parallel strokes, offset along the bond's normal.
    double dx = l.b.x - l.a.x, dy = l.b.y - l.a.y;
    double len = std::hypot(dx, dy);
    double nx = len > 1e-9 ? -dy / len : 0.0, ny = len > 1e-9 ? dx / len : 1.0;
    const double gap = 3.0;
    for (int k = 0; k < l.order; ++k) {
      double off = (k - (l.order - 1) / 2.0) * gap;
      out << "  <line x1=\"" << px(tx(l.a) + nx * off) << "\" y1=\"" << px(ty(l.a) - ny * off)
          << "\" x2=\"" << px(tx(l.b) + nx * off) << "\" y2=\"" << px(ty(l.b) - ny * off)
          << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    }
  }
  for (const Vertex& v : vertices) {
    out << "  <text x=\"" << px(tx(v.pos)) << "\" y=\"" << px(ty(v.pos))
        << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\""
           " dominant-baseline=\"middle\">"
        << v.label << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace diagramma
