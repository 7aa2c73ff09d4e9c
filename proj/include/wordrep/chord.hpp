#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "wordrep/graph.hpp"
#include "wordrep/word.hpp"

namespace wordrep {

struct Chord {
  std::string label;
  std::size_t a = 0;  // a < b, positions on the circle
  std::size_t b = 0;
};

/// One chord per letter of a 2-uniform word, joining its two positions.
struct ChordDiagram {
  std::size_t points = 0;  // 2n
  std::vector<Chord> chords;  // alphabet order
};

/// Throws InvalidInput unless w is 2-uniform.
ChordDiagram chord_diagram(const Word& w);

/// Exactly one endpoint of one chord lies strictly inside the other.
bool chords_cross(const Chord& c, const Chord& d);

/// Graph on the chord labels whose edges are crossing pairs.
Graph crossing_graph(const ChordDiagram& d);

/// Self-contained SVG; point p sits at angle 2*pi*p/points.
std::string to_svg(const ChordDiagram& d);

}  // namespace wordrep
