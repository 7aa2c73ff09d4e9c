#include <sstream>

#include "text_util.hpp"
#include "wordrep/errors.hpp"
#include "wordrep/graph.hpp"

namespace wordrep {

Graph parse_graph(std::string_view text) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, Vertex> index;
  bool header_seen = false;
  bool edges_seen = false;
  std::vector<std::pair<std::string, std::string>> pending;
  std::vector<std::pair<std::size_t, std::size_t>> where;  // (line, column) per edge

  auto intern = [&](const std::string& label, std::size_t line, std::size_t col) {
    if (index.contains(label)) return;
    if (header_seen) throw ParseError(line, col, "vertex '" + label + "' not in header");
    index.emplace(label, labels.size());
    labels.push_back(label);
  };

  std::size_t line_no = 0;
  for (std::string_view line : detail::split_lines(text)) {
    ++line_no;
    auto tokens = detail::tokenize(line);
    if (tokens.empty() || tokens.front().text.front() == '#') continue;

    if (tokens.front().text == "vertices:") {
      if (header_seen || edges_seen) {
        throw ParseError(line_no, tokens.front().column, "header must come first and only once");
      }
      header_seen = true;
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        const auto& t = tokens[i];
        if (!is_valid_label(t.text)) throw ParseError(line_no, t.column, "invalid label");
        if (!index.emplace(t.text, labels.size()).second) {
          throw ParseError(line_no, t.column, "duplicate vertex '" + t.text + "'");
        }
        labels.push_back(t.text);
      }
      continue;
    }

    if (tokens.size() != 2) {
      const std::size_t col = tokens.size() > 2 ? tokens[2].column : tokens.back().column;
      throw ParseError(line_no, col, "expected an edge '<u> <v>'");
    }
    for (const auto& t : tokens) {
      if (!is_valid_label(t.text)) throw ParseError(line_no, t.column, "invalid label");
      intern(t.text, line_no, t.column);
    }
    if (tokens[0].text == tokens[1].text) {
      throw ParseError(line_no, tokens[1].column, "self-loop at '" + tokens[0].text + "'");
    }
    edges_seen = true;
    pending.emplace_back(tokens[0].text, tokens[1].text);
  }

  Graph g(std::move(labels));
  for (const auto& [u, v] : pending) g.add_edge(u, v);
  return g;
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << "vertices:";
  for (const auto& l : g.labels()) out << ' ' << l;
  out << '\n';
  for (auto [u, v] : g.edges()) out << g.label(u) << ' ' << g.label(v) << '\n';
  return out.str();
}

}  // namespace wordrep
