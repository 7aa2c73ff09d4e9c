#include "wordrep/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "wordrep/chord.hpp"
#include "wordrep/errors.hpp"
#include "wordrep/graph.hpp"
#include "wordrep/orientation.hpp"
#include "wordrep/search.hpp"
#include "wordrep/transform.hpp"
#include "wordrep/word.hpp"

namespace wordrep::cli {

std::string Report::str() const {
  std::string s;
  for (const auto& [k, v] : fields_) s += k + ": " + v + '\n';
  return s;
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

// Size bounds, checked before any search starts.
constexpr std::size_t kMaxFindVertices = 16;
constexpr std::size_t kMaxFindLength = 64;
constexpr std::size_t kMaxRepnumVertices = 10;
constexpr std::size_t kMaxOrientVertices = 10;
constexpr std::size_t kMaxTransitiveEdges = 40;
constexpr std::size_t kMaxDimensionVertices = 10;

/// Thrown for requests beyond the documented bounds.
class Refused : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Inputs {
  std::istream& in;
  std::string digest_src;

  std::string slurp(const std::string& source) {
    if (source == "-") {
      std::ostringstream s;
      s << in.rdbuf();
      return s.str();
    }
    std::ifstream f(source, std::ios::binary);
    if (!f) throw InvalidInput("cannot read " + source);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
  }

  Graph graph(const std::string& source) {
    if (source.empty()) throw InvalidInput("a graph is required (--graph FILE|-|family:n)");
    Graph g;
    if (source != "-" && !std::filesystem::exists(source)) {
      // family:n, or a bare family name for the Petersen graph
      const auto colon = source.find(':');
      FamilySpec spec{parse_family(source.substr(0, colon)), 0};
      if (colon != std::string::npos) {
        try {
          spec.n = std::stoi(source.substr(colon + 1));
        } catch (const std::exception&) {
          throw InvalidInput("bad family size in '" + source + "'");
        }
      } else if (spec.family != Family::petersen) {
        throw InvalidInput("family '" + source + "' needs a size, as in " + source + ":5");
      }
      g = build_family(spec);
    } else {
      g = parse_graph(slurp(source));
    }
    digest_src += format_graph(g);
    return g;
  }

  Word word(const std::string& source, const Graph* known = nullptr) {
    if (source.empty()) throw InvalidInput("a word is required (--word FILE|-|STRING)");
    std::string text = source;
    if (source == "-" || std::filesystem::is_regular_file(source)) text = slurp(source);
    Word w = parse_word(text, known);
    digest_src += w.str() + '\n';
    return w;
  }
};

std::string join(const std::vector<std::string>& parts, const std::string& sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

std::string label_list(const Graph& g, const std::vector<Vertex>& vs) {
  std::vector<std::string> out;
  for (auto v : vs) out.push_back(g.label(v));
  return join(out);
}

void add_header(Report& r, const std::string& command, const Inputs& inputs) {
  r.add("command", command);
  r.add("version", kVersion);
  r.add("inputs", "fnv1a:" + fnv1a_hex(command + '\n' + inputs.digest_src));
}

void add_graph_summary(Report& r, const Graph& g) {
  r.add("graph", "vertices=" + std::to_string(g.size()) + " edges=" + std::to_string(g.edge_count()));
}

std::string witness_text(const Witness& w) {
  if (const auto* word = std::get_if<Word>(&w)) return word->str();
  if (const auto* d = std::get_if<Orientation>(&w)) {
    std::vector<std::string> arcs;
    for (auto [u, v] : d->arcs()) arcs.push_back(d->base().label(u) + "->" + d->base().label(v));
    return join(arcs);
  }
  if (const auto* f = std::get_if<LinearOrderFamily>(&w)) {
    std::vector<std::string> orders;
    for (const auto& o : f->orders()) orders.push_back(join(o));
    return join(orders, " | ");
  }
  return "none";
}

void add_certificate(Report& r, const Certificate& c, bool deterministic) {
  r.add("query", c.query);
  r.add("status", std::string(status_name(c.status)));
  if (c.found()) r.add("witness", witness_text(c.witness));
  r.add("nodes", std::to_string(c.nodes_explored));
  // Timing would break byte-identical deterministic reports.
  if (!deterministic) r.add("elapsed_ms", std::to_string(c.elapsed_ms));
}

int status_exit(const Certificate& c) {
  return c.found() ? kOk : kNegative;
}

struct Common {
  std::string graph;
  std::string graph_pos;
  std::string word;
  int k = 0;
  int max_k = 0;
  unsigned jobs = 1;
  bool deterministic = true;
  std::uint64_t node_limit = 0;
  std::string out;

  SearchOptions search() const { return {jobs, deterministic, node_limit}; }
  const std::string& graph_source() const { return graph.empty() ? graph_pos : graph; }
};

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty() || out_path == "-") {
    out << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw InvalidInput("cannot write " + out_path);
  f << text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Word-representable graphs: verify, search and construct representants", "wordrep"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  Common o;
  auto add_search_flags = [&](CLI::App* sub) {
    sub->add_option("--jobs", o.jobs, "worker threads")->check(CLI::Range(1U, 256U));
    sub->add_option("--deterministic", o.deterministic, "reproducible output (true/false)");
    sub->add_option("--node-limit", o.node_limit, "abort after this many search nodes (0 = none)");
  };
  auto add_graph_flags = [&](CLI::App* sub) {
    sub->add_option("source", o.graph_pos, "graph FILE, - or family:n (same as --graph)");
    sub->add_option("--graph", o.graph, "graph FILE, - or family:n");
  };

  // build
  std::string family;
  int family_n = 0;
  auto* build = app.add_subcommand("build", "write a named graph family in graph text format");
  build->add_option("family", family, "complete|path|cycle|prism|ladder|crown|petersen")->required();
  build->add_option("n", family_n, "size parameter");
  build->add_option("--out", o.out, "output file");

  // check
  auto* check = app.add_subcommand("check", "does a word represent a graph");
  add_graph_flags(check);
  check->add_option("--word", o.word, "word FILE, - or STRING")->required();

  // repnum
  auto* repnum = app.add_subcommand("repnum", "exact representation number with certificates");
  add_graph_flags(repnum);
  repnum->add_option("--max-k", o.max_k, "largest k to try (default |V|)");
  add_search_flags(repnum);

  // find
  auto* find = app.add_subcommand("find", "search one k-uniform representant");
  add_graph_flags(find);
  find->add_option("--k", o.k, "uniformity")->required();
  add_search_flags(find);

  // orient
  auto* orient = app.add_subcommand("orient", "semi-transitive orientation or none");
  add_graph_flags(orient);
  add_search_flags(orient);

  // perm
  auto* perm = app.add_subcommand("perm", "transitive orientation, poset dimension and permutational representation");
  add_graph_flags(perm);
  perm->add_option("--k", o.k, "number of permutations (default: the dimension)");

  // transform
  std::string op, word2, x, y, z = "z", perms, apex = "0";
  int length = 3, size_n = 0;
  auto* transform = app.add_subcommand("transform", "apply a constructive operation");
  transform->add_option("op", op, "leaf|path|connect|glue|module|ladder|crown|tree|cycle|cone")->required();
  transform->add_option("--word", o.word, "input word");
  transform->add_option("--word2", word2, "second word (connect, glue)");
  transform->add_option("--graph", o.graph, "input graph (tree)");
  transform->add_option("--x", x, "vertex of the first word");
  transform->add_option("--y", y, "new leaf, or vertex of the second word");
  transform->add_option("--z", z, "merged vertex for glue");
  transform->add_option("--length", length, "path length in edges");
  transform->add_option("--perms", perms, "concatenated permutations (module, cone)");
  transform->add_option("--apex", apex, "apex label for cone");
  transform->add_option("--n", size_n, "size for ladder, crown, cycle");
  add_search_flags(transform);

  // tables
  std::string table;
  int table_max = 0;
  bool compact = false;
  auto* tables = app.add_subcommand("tables", "reproduce the ladder and crown tables");
  tables->add_option("which", table, "ladder|crown")->required()->check(CLI::IsMember({"ladder", "crown"}));
  tables->add_option("--max", table_max, "last row")->required()->check(CLI::Range(1, 64));
  tables->add_flag("--compact", compact, "tokens without spaces");

  // chord
  auto* chord = app.add_subcommand("chord", "chord diagram of a 2-uniform word as SVG");
  chord->add_option("--word", o.word, "2-uniform word")->required();
  chord->add_option("--out", o.out, "SVG file (default stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  Inputs inputs{in, {}};
  try {
    if (*build) {
      Graph g = build_family({parse_family(family), family_n});
      emit(format_graph(g), o.out, out);
      return kOk;
    }

    if (*check) {
      Graph g = inputs.graph(o.graph_source());
      Word w = inputs.word(o.word, &g);
      const bool ok = represents(w, g);
      Report r;
      add_header(r, "check", inputs);
      add_graph_summary(r, g);
      r.add("word", w.str());
      const auto u = uniformity(w);
      r.add("uniform", u.k ? std::to_string(*u.k) : "no");
      r.add("represents", ok ? "true" : "false");
      out << r.str();
      return ok ? kOk : kNegative;
    }

    if (*repnum) {
      Graph g = inputs.graph(o.graph_source());
      if (g.size() > kMaxRepnumVertices) {
        throw Refused("repnum supports at most " + std::to_string(kMaxRepnumVertices) + " vertices");
      }
      auto rn = representation_number(g, o.search(), o.max_k > 0 ? std::optional<int>(o.max_k) : std::nullopt);
      Report r;
      add_header(r, "repnum", inputs);
      add_graph_summary(r, g);
      for (std::size_t i = 0; i < rn.attempts.size(); ++i) {
        const auto& c = rn.attempts[i];
        std::string line = "k=" + std::to_string(i + 1) + " status=" + std::string(status_name(c.status)) +
                           " nodes=" + std::to_string(c.nodes_explored);
        if (!o.deterministic) line += " elapsed_ms=" + std::to_string(c.elapsed_ms);
        r.add("attempt", line);
      }
      if (rn.k) {
        r.add("representation_number", std::to_string(*rn.k));
        r.add("witness", rn.witness().word().str());
      } else if (rn.aborted) {
        r.add("representation_number", "unknown (aborted)");
      } else if (!rn.word_representable) {
        r.add("representation_number", "none (not word-representable)");
      } else {
        r.add("representation_number", "unknown (above --max-k)");
      }
      out << r.str();
      return rn.k ? kOk : kNegative;
    }

    if (*find) {
      Graph g = inputs.graph(o.graph_source());
      if (o.k <= 0) throw InvalidInput("--k must be positive");
      if (g.size() > kMaxFindVertices || g.size() * static_cast<std::size_t>(o.k) > kMaxFindLength) {
        throw Refused("find supports at most " + std::to_string(kMaxFindVertices) + " vertices and words of at most " +
                      std::to_string(kMaxFindLength) + " letters (|V|*k)");
      }
      Certificate c = find_k_uniform_representant(g, o.k, o.search());
      Report r;
      add_header(r, "find", inputs);
      add_graph_summary(r, g);
      add_certificate(r, c, o.deterministic);
      out << r.str();
      return status_exit(c);
    }

    if (*orient) {
      Graph g = inputs.graph(o.graph_source());
      if (g.size() > kMaxOrientVertices) {
        throw Refused("orient supports at most " + std::to_string(kMaxOrientVertices) + " vertices");
      }
      const auto start = std::chrono::steady_clock::now();
      auto res = search_semi_transitive(g, {o.jobs, o.deterministic, o.node_limit});
      Report r;
      add_header(r, "orient", inputs);
      add_graph_summary(r, g);
      r.add("status", res.orientation ? "witness-found" : res.aborted ? "aborted" : "exhausted");
      if (res.orientation) {
        r.add("order", label_list(g, res.order));
        r.add("orientation", witness_text(*res.orientation));
      } else {
        r.add("orientation", "none");
      }
      r.add("nodes", std::to_string(res.nodes));
      if (!o.deterministic) {
        r.add("elapsed_ms", std::to_string(std::chrono::duration_cast<std::chrono::milliseconds>(
                                               std::chrono::steady_clock::now() - start)
                                               .count()));
      }
      out << r.str();
      return res.orientation ? kOk : kNegative;
    }

    if (*perm) {
      Graph g = inputs.graph(o.graph_source());
      if (g.edge_count() > kMaxTransitiveEdges || g.size() > kMaxDimensionVertices) {
        throw Refused("perm supports at most " + std::to_string(kMaxDimensionVertices) + " vertices and " +
                      std::to_string(kMaxTransitiveEdges) + " edges");
      }
      Report r;
      add_header(r, "perm", inputs);
      add_graph_summary(r, g);
      Certificate t = find_transitive_orientation(g);
      r.add("transitive_orientation", t.found() ? witness_text(t.witness) : "none");
      if (!t.found()) {
        r.add("permutational", "none (not a comparability graph)");
        out << r.str();
        return kNegative;
      }
      const auto dim = poset_dimension(t.orientation());
      r.add("dimension", std::to_string(dim.dimension));
      const int k = o.k > 0 ? o.k : std::max(dim.dimension, 1);
      Certificate c = find_permutational_representation(g, k);
      add_certificate(r, c, true);
      if (c.found()) r.add("word", c.orders().concatenate().str());
      out << r.str();
      return status_exit(c);
    }

    if (*transform) {
      Report r;
      TransformStats stats;
      Word result;
      Graph target;
      auto need = [](const std::string& v, const char* flag) {
        if (v.empty()) throw InvalidInput(std::string("transform needs ") + flag);
      };
      auto family_of = [](const std::string& text) {
        Word w = parse_word(text);
        const std::size_t n = w.alphabet().size();
        if (n == 0 || w.size() % n != 0) throw InvalidInput("--perms must be whole permutations");
        std::vector<std::vector<std::string>> orders;
        const auto tokens = w.tokens();
        for (std::size_t i = 0; i < tokens.size(); i += n) orders.emplace_back(tokens.begin() + i, tokens.begin() + i + n);
        return LinearOrderFamily(std::move(orders));
      };
      if (op == "leaf") {
        need(x, "--x");
        need(y, "--y");
        result = add_leaf(inputs.word(o.word), x, y);
      } else if (op == "path") {
        need(x, "--x");
        need(y, "--y");
        result = add_path(inputs.word(o.word), x, y, length, &stats, o.search());
      } else if (op == "connect" || op == "glue") {
        need(x, "--x");
        need(y, "--y");
        Word w1 = inputs.word(o.word);
        Word w2 = inputs.word(word2);
        // Both sides are lifted to a common k >= 2.
        const int k = std::max({uniformity(w1).k.value_or(0), uniformity(w2).k.value_or(0), 2});
        w1 = lift_uniform(w1, k);
        w2 = lift_uniform(w2, k);
        result = combine(w1, w2, x, y, op == "connect" ? CombineMode::connect_edge : CombineMode::glue_vertex, z,
                         &stats, o.search());
      } else if (op == "module") {
        need(x, "--x");
        need(perms, "--perms");
        Word w = inputs.word(o.word);
        const auto fam = family_of(perms);
        const int k = uniformity(w).k.value_or(0);
        if (static_cast<int>(fam.size()) > k) w = lift_uniform(w, static_cast<int>(fam.size()));
        result = substitute_module(w, x, fam);
      } else if (op == "ladder") {
        result = ladder_word(size_n);
      } else if (op == "crown") {
        result = crown_perm_word(size_n);
      } else if (op == "cycle") {
        result = cycle_word(size_n);
      } else if (op == "tree") {
        result = tree_word(inputs.graph(o.graph));
      } else if (op == "cone") {
        need(perms, "--perms");
        result = cone_word(family_of(perms), apex);
      } else {
        throw InvalidInput("unknown transform '" + op + "'");
      }
      add_header(r, "transform " + op, inputs);
      const Graph g = derive_graph(result);
      add_graph_summary(r, g);
      const auto u = uniformity(result);
      r.add("uniform", u.k ? std::to_string(*u.k) : "no");
      r.add("word", result.str());
      r.add("verified", "true");
      if (op == "path" || op == "connect" || op == "glue") {
        r.add("repairs", std::to_string(stats.repairs));
        r.add("fallbacks", std::to_string(stats.fallbacks));
      }
      out << r.str();
      return kOk;
    }

    if (*tables) {
      std::string text;
      for (int i = 1; i <= table_max; ++i) {
        const Word w = table == "ladder" ? ladder_word(i) : crown_perm_word(i);
        text += std::to_string(i) + ": " + (compact ? w.compact() : w.str()) + '\n';
      }
      out << text;
      return kOk;
    }

    if (*chord) {
      Word w = inputs.word(o.word);
      emit(to_svg(chord_diagram(w)), o.out, out);
      return kOk;
    }
  } catch (const Refused& e) {
    err << "refused: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const VerificationError& e) {
    err << "verification failure: " << e.what() << '\n';
    return kVerification;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace wordrep::cli
