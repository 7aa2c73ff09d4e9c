#include <array>
#include <string>

#include "wordrep/errors.hpp"
#include "wordrep/graph.hpp"

namespace wordrep {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 7> kFamilyNames{{
    {Family::complete, "complete"},
    {Family::path, "path"},
    {Family::cycle, "cycle"},
    {Family::prism, "prism"},
    {Family::ladder, "ladder"},
    {Family::crown, "crown"},
    {Family::petersen, "petersen"},
}};

std::string plain(int i) { return std::to_string(i); }
std::string primed(int i) { return std::to_string(i) + "'"; }

std::vector<std::string> numbered(int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back(plain(i));
  return out;
}

std::vector<std::string> two_rails(int n) {
  auto out = numbered(n);
  for (int i = 1; i <= n; ++i) out.push_back(primed(i));
  return out;
}

void require(bool ok, Family f, const char* bound) {
  if (!ok) {
    throw InvalidInput(std::string(family_name(f)) + " requires " + bound);
  }
}

}  // namespace

std::string_view family_name(Family f) {
  for (const auto& [fam, name] : kFamilyNames) {
    if (fam == f) return name;
  }
  return "?";
}

Family parse_family(std::string_view name) {
  for (const auto& [fam, n] : kFamilyNames) {
    if (n == name) return fam;
  }
  throw InvalidInput("unknown family '" + std::string(name) + "'");
}

Graph build_family(const FamilySpec& spec) {
  const int n = spec.n;
  switch (spec.family) {
    case Family::complete: {
      require(n >= 1, spec.family, "n >= 1");
      Graph g(numbered(n));
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
      return g;
    }
    case Family::path: {
      require(n >= 1, spec.family, "n >= 1");
      Graph g(numbered(n));
      for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
      return g;
    }
    case Family::cycle: {
      require(n >= 3, spec.family, "n >= 3");
      Graph g(numbered(n));
      for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
      return g;
    }
    case Family::prism: {
      require(n >= 3, spec.family, "n >= 3");
      Graph g(two_rails(n));
      for (int i = 0; i < n; ++i) {
        g.add_edge(i, (i + 1) % n);
        g.add_edge(n + i, n + (i + 1) % n);
        g.add_edge(i, n + i);
      }
      return g;
    }
    case Family::ladder: {
      require(n >= 1, spec.family, "n >= 1");
      Graph g(two_rails(n));
      for (int i = 0; i < n; ++i) {
        if (i + 1 < n) {
          g.add_edge(i, i + 1);
          g.add_edge(n + i, n + i + 1);
        }
        g.add_edge(i, n + i);
      }
      return g;
    }
    case Family::crown: {
      require(n >= 1, spec.family, "k >= 1");
      Graph g(two_rails(n));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (i != j) g.add_edge(i, n + j);
      return g;
    }
    case Family::petersen: {
      require(spec.n == 0 || spec.n == 10, spec.family, "no size parameter (or 10)");
      // Outer 5-cycle 1..5, spokes i -- i+5, inner pentagram 6-8-10-7-9-6.
      Graph g(numbered(10));
      for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
      }
      return g;
    }
  }
  throw InvalidInput("unknown family");
}

}  // namespace wordrep
