#include "render.hpp"

#include <algorithm>
#include <sstream>

namespace gwitt::render {

namespace {

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

// Cells of the diagram plus the frame outline, with the top-left corner at (x, y).
void draw_diagram(std::ostream& os, const FramedDiagram& diagram, int x, int y, int cell) {
  os << "  <g transform=\"translate(" << x << "," << y << ")\">\n";
  for (int i = 0; i < diagram.d(); ++i) {
    for (int j = 0; j < diagram.row(i); ++j) {
      os << "    <rect x=\"" << j * cell << "\" y=\"" << i * cell << "\" width=\"" << cell
         << "\" height=\"" << cell << "\" fill=\"#4a6fa5\" stroke=\"#ffffff\" stroke-width=\"1\"/>\n";
    }
  }
  os << "    <rect x=\"0\" y=\"0\" width=\"" << diagram.e() * cell << "\" height=\""
     << diagram.d() * cell << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"2\"/>\n";
  os << "  </g>\n";
}

void draw_point(std::ostream& os, const PointGenerator& pt, int x, int y, int cell) {
  os << "  <circle cx=\"" << x + cell / 2 << "\" cy=\"" << y + cell / 2 << "\" r=\"" << cell / 4
     << "\" fill=\"#000000\"/>\n";
  os << "  <text x=\"" << x + cell << "\" y=\"" << y + cell / 2 + cell / 6 << "\" font-size=\""
     << std::max(8, cell / 2) << "\" font-family=\"monospace\">pt_" << pt.index << "</text>\n";
}

std::pair<int, int> extent(const BasisElement& element) {
  if (const auto* diagram = std::get_if<FramedDiagram>(&element)) {
    return {diagram->d(), diagram->e()};
  }
  return {1, 3};
}

}  // namespace

std::vector<std::string> ascii_rows(const FramedDiagram& diagram) {
  std::vector<std::string> lines;
  for (int i = 0; i < diagram.d(); ++i) {
    lines.push_back(std::string(static_cast<std::size_t>(diagram.row(i)), '#') +
                    std::string(static_cast<std::size_t>(diagram.e() - diagram.row(i)), '.'));
  }
  return lines;
}

std::vector<std::string> ascii_rows(const BasisElement& element) {
  if (const auto* pt = std::get_if<PointGenerator>(&element)) {
    return {"pt_" + std::to_string(pt->index)};
  }
  return ascii_rows(std::get<FramedDiagram>(element));
}

std::vector<std::string> side_by_side(const std::vector<std::vector<std::string>>& blocks,
                                      const std::string& gap) {
  std::size_t height = 0;
  for (const auto& b : blocks) height = std::max(height, b.size());
  std::vector<std::string> lines(height);
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    std::size_t width = 0;
    for (const auto& l : blocks[k]) width = std::max(width, l.size());
    for (std::size_t i = 0; i < height; ++i) {
      std::string cell = i < blocks[k].size() ? blocks[k][i] : "";
      cell.resize(width, ' ');
      lines[i] += (k ? gap : "") + cell;
    }
  }
  for (auto& l : lines) l.erase(l.find_last_not_of(' ') + 1);
  return lines;
}

std::string svg_sheet(const std::vector<SheetRow>& rows, const SvgOptions& options) {
  const int cell = options.cell_size;
  const int margin = cell;
  const int caption = options.annotate ? cell : 0;

  int width = 2 * margin;
  int height = margin;
  for (const auto& row : rows) {
    int w = 2 * margin;
    int h = 0;
    for (const auto& diagram : row.diagrams) {
      w += diagram.e() * cell + margin;
      h = std::max(h, diagram.d() * cell);
    }
    width = std::max(width, w);
    height += caption + h + margin;
  }

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  os << "  <rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height
     << "\" fill=\"#ffffff\"/>\n";
  int y = margin;
  for (const auto& row : rows) {
    if (options.annotate) {
      os << "  <text x=\"" << margin << "\" y=\"" << y + caption * 2 / 3 << "\" font-size=\""
         << std::max(8, cell / 2) << "\" font-family=\"sans-serif\">" << escape(row.caption)
         << "</text>\n";
    }
    y += caption;
    int x = margin;
    int h = 0;
    for (const auto& diagram : row.diagrams) {
      draw_diagram(os, diagram, x, y, cell);
      x += diagram.e() * cell + margin;
      h = std::max(h, diagram.d() * cell);
    }
    y += h + margin;
  }
  os << "</svg>\n";
  return os.str();
}

std::string svg_map(const BasisMap& map, const SvgOptions& options) {
  const int cell = options.cell_size;
  const int margin = cell;
  const int arrow_space = 4 * cell;

  auto column = [&](const GradedBasis& basis) {
    std::vector<int> tops;
    int y = margin + (options.annotate ? cell : 0);
    int w = 0;
    for (const auto& element : basis.elements()) {
      const auto [rows, cols] = extent(element);
      tops.push_back(y);
      y += rows * cell + margin;
      w = std::max(w, cols * cell);
    }
    return std::make_tuple(tops, y, w);
  };
  const auto [src_tops, src_bottom, src_width] = column(map.source);
  const auto [tgt_tops, tgt_bottom, tgt_width] = column(map.target);
  const int tgt_x = margin + src_width + arrow_space;
  const int width = tgt_x + tgt_width + margin;
  const int height = std::max(src_bottom, tgt_bottom);

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  os << "  <defs><marker id=\"head\" markerWidth=\"8\" markerHeight=\"8\" refX=\"8\" refY=\"4\" "
        "orient=\"auto\"><path d=\"M0,0 L8,4 L0,8 z\" fill=\"#000000\"/></marker></defs>\n";
  os << "  <rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height
     << "\" fill=\"#ffffff\"/>\n";
  if (options.annotate) {
    auto label = [&](const GradedBasis& b, int x) {
      os << "  <text x=\"" << x << "\" y=\"" << margin + cell / 2 << "\" font-size=\""
         << std::max(8, cell / 2) << "\" font-family=\"sans-serif\">F(" << b.d() << "," << b.e()
         << ")</text>\n";
    };
    label(map.source, margin);
    label(map.target, tgt_x);
  }
  auto draw = [&](const BasisElement& element, int x, int y) {
    if (const auto* diagram = std::get_if<FramedDiagram>(&element)) {
      draw_diagram(os, *diagram, x, y, cell);
    } else {
      draw_point(os, std::get<PointGenerator>(element), x, y, cell);
    }
  };
  for (std::size_t i = 0; i < map.source.size(); ++i) draw(map.source.element(i), margin, src_tops[i]);
  for (std::size_t i = 0; i < map.target.size(); ++i) draw(map.target.element(i), tgt_x, tgt_tops[i]);

  for (std::size_t c = 0; c < map.source.size(); ++c) {
    const auto r = map.image_of(c);
    if (!r) continue;
    const int y1 = src_tops[c] + extent(map.source.element(c)).first * cell / 2;
    const int y2 = tgt_tops[*r] + extent(map.target.element(*r)).first * cell / 2;
    os << "  <line x1=\"" << margin + src_width + cell / 2 << "\" y1=\"" << y1 << "\" x2=\""
       << tgt_x - cell / 2 << "\" y2=\"" << y2
       << "\" stroke=\"#000000\" stroke-width=\"2\" marker-end=\"url(#head)\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace gwitt::render
