#include "wordrep/chord.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "wordrep/errors.hpp"

namespace wordrep {

ChordDiagram chord_diagram(const Word& w) {
  const auto k = uniformity(w).k;
  if (!w.empty() && k != 2) throw InvalidInput("chord diagrams need a 2-uniform word");
  ChordDiagram d;
  d.points = w.size();
  for (Letter l = 0; l < w.alphabet().size(); ++l) {
    const auto occ = w.occurrences(l);
    d.chords.push_back({w.alphabet()[l], occ[0], occ[1]});
  }
  return d;
}

bool chords_cross(const Chord& c, const Chord& d) {
  const bool a_in = c.a < d.a && d.a < c.b;
  const bool b_in = c.a < d.b && d.b < c.b;
  return a_in != b_in;
}

Graph crossing_graph(const ChordDiagram& d) {
  std::vector<std::string> labels;
  for (const auto& c : d.chords) labels.push_back(c.label);
  Graph g(std::move(labels));
  for (std::size_t i = 0; i < d.chords.size(); ++i) {
    for (std::size_t j = i + 1; j < d.chords.size(); ++j) {
      if (chords_cross(d.chords[i], d.chords[j])) g.add_edge(i, j);
    }
  }
  return g;
}

namespace {

std::string fixed3(double v) {
  if (std::fabs(v) < 0.0005) v = 0.0;  // no "-0.000"
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string to_svg(const ChordDiagram& d) {
  constexpr double cx = 200, cy = 200, r = 160, rl = 180;
  auto angle = [&](std::size_t p) { return 2 * std::numbers::pi * static_cast<double>(p) / static_cast<double>(d.points); };
  auto px = [&](std::size_t p, double rad) { return fixed3(cx + rad * std::cos(angle(p))); };
  auto py = [&](std::size_t p, double rad) { return fixed3(cy + rad * std::sin(angle(p))); };

  std::string s;
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"400\" height=\"400\" viewBox=\"0 0 400 400\">\n";
  s += "<circle cx=\"200.000\" cy=\"200.000\" r=\"160.000\" fill=\"none\" stroke=\"#888\"/>\n";
  for (const auto& c : d.chords) {
    s += "<line x1=\"" + px(c.a, r) + "\" y1=\"" + py(c.a, r) + "\" x2=\"" + px(c.b, r) + "\" y2=\"" + py(c.b, r) +
         "\" stroke=\"#246\"/>\n";
  }
  for (const auto& c : d.chords) {
    for (std::size_t p : {c.a, c.b}) {
      s += "<text x=\"" + px(p, rl) + "\" y=\"" + py(p, rl) +
           "\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"middle\" dominant-baseline=\"middle\">" +
           escape(c.label) + "</text>\n";
    }
  }
  s += "</svg>\n";
  return s;
}

}  // namespace wordrep
