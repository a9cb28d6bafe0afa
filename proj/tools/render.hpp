#pragma once

#include <string>
#include <vector>

#include "gwitt/diagram.hpp"
#include "gwitt/witt_modules.hpp"

namespace gwitt::render {

/// One string per diagram row: '#' for cells of the diagram, '.' for the rest
/// of the frame.
std::vector<std::string> ascii_rows(const FramedDiagram& diagram);

/// Basis element as ASCII; point generators render as a single "pt_i" line.
std::vector<std::string> ascii_rows(const BasisElement& element);

/// Blocks of lines placed left to right, top-aligned, separated by `gap`.
std::vector<std::string> side_by_side(const std::vector<std::vector<std::string>>& blocks,
                                      const std::string& gap);

struct SvgOptions {
  int cell_size = 24;
  bool annotate = false;
};

/// A labelled row of diagrams in a diagram sheet.
struct SheetRow {
  std::string caption;
  std::vector<FramedDiagram> diagrams;
};

std::string svg_sheet(const std::vector<SheetRow>& rows, const SvgOptions& options);

/// Source basis on the left, target basis on the right, one arrow per
/// non-zero matrix entry.
std::string svg_map(const BasisMap& map, const SvgOptions& options);

}  // namespace gwitt::render
