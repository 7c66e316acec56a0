#pragma once
// Lattice cells with doubled coordinates.
//
// Diagrams live on translates of Z^2 by (x,y) with 2x, 2y integers. To keep
// all arithmetic exact and hashable we store every cell as the pair of
// *doubled* coordinates (a,b), representing the point (a/2, b/2). A cell with
// both a and b even is an ordinary integer point; odd components mark the
// half-integer cosets. All cells of one diagram share the parities of (a,b).

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace nilpair {

struct Cell {
  int a = 0;  // doubled x
  int b = 0;  // doubled y

  friend bool operator==(const Cell&, const Cell&) = default;
};

// Canonical order = visual reading order: top row first (b descending), then
// left to right (a ascending). Used everywhere a deterministic order of cells,
// diagrams, or index entries is needed.
inline bool canonical_less(const Cell& u, const Cell& v) {
  if (u.b != v.b) return u.b > v.b;
  return u.a < v.a;
}
struct CanonicalLess {
  bool operator()(const Cell& u, const Cell& v) const { return canonical_less(u, v); }
};

// A graded shift, also in doubled coordinates: (dp/2, dq/2).
struct Shift {
  int dp = 0;
  int dq = 0;

  friend bool operator==(const Shift&, const Shift&) = default;
  friend auto operator<=>(const Shift&, const Shift&) = default;  // lex order for maps
  bool is_integral() const { return dp % 2 == 0 && dq % 2 == 0; }
  bool in_positive_quadrant() const { return dp >= 0 && dq >= 0; }
  bool is_zero() const { return dp == 0 && dq == 0; }
};

inline Cell operator+(const Cell& c, const Shift& s) { return {c.a + s.dp, c.b + s.dq}; }
inline Cell operator-(const Cell& c, const Shift& s) { return {c.a - s.dp, c.b - s.dq}; }
inline Shift operator-(const Cell& d, const Cell& c) { return {d.a - c.a, d.b - c.b}; }
inline Shift operator-(const Shift& s) { return {-s.dp, -s.dq}; }

// Point reflection through the origin (the map called sigma throughout).
inline Cell sigma(const Cell& c) { return {-c.a, -c.b}; }

// The four coset classes a diagram can live on, keyed by the parities of the
// doubled coordinates: (even,even), (odd,even), (even,odd), (odd,odd).
enum class SymmetryClass { Integral, SemiIntegralX, SemiIntegralY, NonIntegral };

inline SymmetryClass coset_class_of(const Cell& c) {
  const bool ox = (c.a % 2 + 2) % 2 == 1;
  const bool oy = (c.b % 2 + 2) % 2 == 1;
  if (!ox && !oy) return SymmetryClass::Integral;
  if (ox && !oy) return SymmetryClass::SemiIntegralX;
  if (!ox && oy) return SymmetryClass::SemiIntegralY;
  return SymmetryClass::NonIntegral;
}

inline const char* to_string(SymmetryClass s) {
  switch (s) {
    case SymmetryClass::Integral: return "Integral";
    case SymmetryClass::SemiIntegralX: return "SemiIntegralX";
    case SymmetryClass::SemiIntegralY: return "SemiIntegralY";
    case SymmetryClass::NonIntegral: return "NonIntegral";
  }
  return "?";
}

// Pretty forms. Doubled-even coordinates print as integers, odd ones as k/2.
std::string coord_to_string(int doubled);
std::string to_string(const Cell& c);
std::string to_string(const Shift& s);
std::string cells_to_string(const std::vector<Cell>& cells);

}  // namespace nilpair
