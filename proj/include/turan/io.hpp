#pragma once

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "turan/constructions.hpp"
#include "turan/extremal.hpp"
#include "turan/hypergraph.hpp"
#include "turan/lagrangian.hpp"
#include "turan/symmetrization.hpp"

namespace turan {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& reason)
      : std::runtime_error("line " + std::to_string(line) + ": " + reason), line_(line) {}
  [[nodiscard]] std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// ---------------------------------------------------------------------------
// .hg text format
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<std::string> tokens(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

inline std::uint64_t parse_count(const std::string& tok, std::size_t line) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(line, "expected a nonnegative integer, got '" + tok + "'");
  return v;
}

}  // namespace detail

/// Header `n r`, then one edge per line; blank lines and `#` comments are
/// skipped. Edges may be listed in any vertex order.
inline Hypergraph parse_hypergraph(std::string_view text) {
  std::size_t line_no = 0;
  std::optional<std::pair<std::size_t, unsigned>> header;
  std::vector<Edge> edges;
  std::map<Edge, std::size_t> seen;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tok = detail::tokens(line);
    if (tok.empty()) continue;
    if (!header) {
      if (tok.size() != 2) throw ParseError(line_no, "header must be 'n r'");
      const auto n = detail::parse_count(tok[0], line_no);
      const auto r = detail::parse_count(tok[1], line_no);
      if (r == 0) throw ParseError(line_no, "uniformity must be at least 1");
      header.emplace(n, static_cast<unsigned>(r));
      continue;
    }
    const auto [n, r] = *header;
    if (tok.size() != r)
      throw ParseError(line_no, "edge has " + std::to_string(tok.size()) + " vertices, expected " +
                                    std::to_string(r));
    Edge e;
    for (const auto& t : tok) {
      const auto v = detail::parse_count(t, line_no);
      if (v >= n) throw ParseError(line_no, "vertex " + t + " out of range [0, " + std::to_string(n) + ")");
      e.push_back(static_cast<Vertex>(v));
    }
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) throw ParseError(line_no, "repeated vertex");
    if (auto [it, fresh] = seen.emplace(e, line_no); !fresh)
      throw ParseError(line_no, "duplicate edge (first on line " + std::to_string(it->second) + ")");
    edges.push_back(std::move(e));
  }
  if (!header) throw ParseError(line_no, "missing header 'n r'");
  return Hypergraph(header->first, header->second, std::move(edges));
}

/// Canonical text: header, then edges ascending, one per line.
inline std::string serialize_hypergraph(const Hypergraph& g) {
  std::string out = std::to_string(g.n()) + " " + std::to_string(g.r()) + "\n";
  for (const auto& e : g.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(e[i]);
    }
    out += '\n';
  }
  return out;
}

inline Hypergraph read_hypergraph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_hypergraph(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path + ": " + std::string(e.what()).substr(std::string(e.what()).find(": ") + 2));
  }
}

inline void write_hypergraph_file(const Hypergraph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write '" + path + "'");
  out << serialize_hypergraph(g);
}

// ---------------------------------------------------------------------------
// Spec strings: name:key=value,key=value with parenthesized nested specs
// ---------------------------------------------------------------------------

struct SpecString {
  std::string name;
  std::map<std::string, std::string> args;

  [[nodiscard]] const std::string& get(const std::string& key) const {
    auto it = args.find(key);
    if (it == args.end()) throw InvalidArgument("spec '" + name + "': missing argument '" + key + "'");
    return it->second;
  }
  [[nodiscard]] std::uint64_t integer(const std::string& key) const {
    const auto& v = get(key);
    std::uint64_t out = 0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size())
      throw InvalidArgument("spec '" + name + "': argument '" + key + "' must be an integer");
    return out;
  }
  [[nodiscard]] std::uint64_t integer_or(const std::string& key, std::uint64_t fallback) const {
    return args.count(key) ? integer(key) : fallback;
  }
};

inline SpecString parse_spec(std::string_view text) {
  SpecString s;
  const auto colon = text.find(':');
  s.name = std::string(text.substr(0, colon));
  if (colon == std::string_view::npos) return s;
  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty()) {
    const auto eq = rest.find('=');
    if (eq == std::string_view::npos) throw InvalidArgument("spec: expected key=value in '" + std::string(text) + "'");
    std::string key(rest.substr(0, eq));
    rest.remove_prefix(eq + 1);
    std::string value;
    if (!rest.empty() && rest.front() == '(') {
      int depth = 0;
      std::size_t i = 0;
      for (; i < rest.size(); ++i) {
        if (rest[i] == '(') ++depth;
        else if (rest[i] == ')' && --depth == 0) break;
      }
      if (i == rest.size()) throw InvalidArgument("spec: unbalanced parentheses in '" + std::string(text) + "'");
      value = std::string(rest.substr(1, i - 1));
      rest.remove_prefix(i + 1);
    } else {
      const auto comma = rest.find(',');
      value = std::string(rest.substr(0, comma));
      rest.remove_prefix(comma == std::string_view::npos ? rest.size() : comma);
    }
    if (!rest.empty()) {
      if (rest.front() != ',') throw InvalidArgument("spec: expected ',' in '" + std::string(text) + "'");
      rest.remove_prefix(1);
    }
    s.args[key] = value;
  }
  return s;
}

/// Builds a hypergraph from a construction spec or a path to a .hg file.
///   turan:n=,r=,l=   gentriangle:r=   fan:r=   expand:F=<spec>,p=
///   enlarge:T=<spec>,r=   complete:m=,r=   clique:r=,p=   empty:n=,r=
///   path:k=   cycle:k=   star:k=   broom:k=,h=   tree:k=,seed=
inline Hypergraph build_construction(const std::string& text) {
  if (text.find(':') == std::string::npos &&
      (text.find('/') != std::string::npos || text.ends_with(".hg")))
    return read_hypergraph_file(text);
  const SpecString s = parse_spec(text);
  const auto r = [&] { return static_cast<unsigned>(s.integer("r")); };
  if (s.name == "turan") return turan_hypergraph(s.integer("n"), r(), s.integer("l")).graph;
  if (s.name == "gentriangle") return generalized_triangle(r());
  if (s.name == "fan") return fan(r());
  if (s.name == "expand") return expanded_clique_with_embedded(build_construction(s.get("F")), s.integer("p")).graph;
  if (s.name == "enlarge") return enlargement(build_construction(s.get("T")), r());
  if (s.name == "complete") return complete_hypergraph(s.integer("m"), r());
  if (s.name == "clique") return expanded_clique(r(), s.integer("p"));
  if (s.name == "empty") return Hypergraph(s.integer("n"), r());
  if (s.name == "path") return path_graph(s.integer("k"));
  if (s.name == "cycle") return cycle_graph(s.integer("k"));
  if (s.name == "star") return star_graph(s.integer("k"));
  if (s.name == "broom") return broom_graph(s.integer("k"), s.integer("h"));
  if (s.name == "tree") return random_tree(s.integer("k"), s.integer_or("seed", 0));
  throw InvalidArgument("unknown construction '" + s.name + "'");
}

/// sigma:r=   cancellative[:r=]   family:F=<spec>,p=   or any construction
/// (forbidden as a subgraph). `r` fills in when the spec omits it.
inline ForbiddenPredicate build_forbidden(const std::string& text, unsigned r) {
  const SpecString s = parse_spec(text);
  if (s.name == "sigma") return ForbiddenPredicate::sigma(static_cast<unsigned>(s.integer_or("r", r)));
  if (s.name == "cancellative")
    return ForbiddenPredicate::cancellative(static_cast<unsigned>(s.integer_or("r", r)));
  if (s.name == "family") return ForbiddenPredicate::family(build_construction(s.get("F")), s.integer("p"));
  return ForbiddenPredicate::subgraph(build_construction(text));
}

// ---------------------------------------------------------------------------
// JSON views
// ---------------------------------------------------------------------------

using Json = nlohmann::ordered_json;

inline Json to_json(const VertexSet& s) { return Json(s.members()); }

inline Json to_json(const Hypergraph& g) {
  return Json{{"n", g.n()}, {"r", g.r()}, {"edges", g.edges()}};
}

inline Json to_json(const LagrangianEstimate& e) {
  return Json{{"value", e.value},
              {"weights", e.weights.values()},
              {"converged", e.converged},
              {"gradient_residual", e.gradient_residual},
              {"certificate", to_string(e.certificate)},
              {"restarts_used", e.restarts_used}};
}

inline Json to_json(const TraceStep& s) {
  return Json{{"kind", to_string(s.kind)},
              {"donor_class", to_json(s.donor_class)},
              {"target", s.target ? Json(*s.target) : Json(nullptr)},
              {"removed", to_json(s.removed)},
              {"edges_before", s.edges_before},
              {"edges_after", s.edges_after},
              {"flagged", s.flagged}};
}

inline Json to_json(const SymmetrizationTrace& t) {
  Json steps = Json::array();
  for (const auto& s : t.steps) steps.push_back(to_json(s));
  return Json{{"steps", steps}};
}

inline Json to_json(const SearchResult& r, bool with_timing = true) {
  Json j{{"value", r.value},
         {"exact", r.exact},
         {"nodes_explored", r.nodes_explored},
         {"witness", to_json(r.witness)}};
  if (with_timing) j["elapsed_seconds"] = r.elapsed.count();
  return j;
}

}  // namespace turan
