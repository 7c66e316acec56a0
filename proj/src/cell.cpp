#include "nilpair/cell.hpp"

#include <sstream>

namespace nilpair {

std::string coord_to_string(int doubled) {
  if (doubled % 2 == 0) return std::to_string(doubled / 2);
  return std::to_string(doubled) + "/2";
}

std::string to_string(const Cell& c) {
  return "(" + coord_to_string(c.a) + "," + coord_to_string(c.b) + ")";
}

std::string to_string(const Shift& s) {
  return "(" + coord_to_string(s.dp) + "," + coord_to_string(s.dq) + ")";
}

std::string cells_to_string(const std::vector<Cell>& cells) {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < cells.size(); ++i) {
    if (i) os << ",";
    os << to_string(cells[i]);
  }
  os << "}";
  return os.str();
}

}  // namespace nilpair
