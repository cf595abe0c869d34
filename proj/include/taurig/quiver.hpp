#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace taurig {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parse failure with 1-based source position (line 0 = whole file).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error(format(what, line, column)), line_(line), column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& what, int line, int column) {
    std::ostringstream os;
    os << "line " << line << ", column " << column << ": " << what;
    return os.str();
  }

  int line_;
  int column_;
};

struct Arrow {
  std::string name;
  std::string src;
  std::string dst;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

namespace detail {

inline bool is_word_char(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
         (c >= '0' && c <= '9') || c == '_';
}

}  // namespace detail

// Identifier: [A-Za-z0-9_]+ with an optional trailing '+'/'-', so that the
// signed vertex names produced by separated_quiver stay parseable.
inline bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  std::string_view body = s;
  if (s.back() == '+' || s.back() == '-') body = s.substr(0, s.size() - 1);
  if (body.empty()) return false;
  return std::all_of(body.begin(), body.end(), detail::is_word_char);
}

// Finite directed multigraph with named vertices and arrows. Loops and
// parallel arrows are allowed. Immutable after construction.
class Quiver {
 public:
  Quiver() = default;

  Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
      : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      if (!is_identifier(vertices_[i]))
        throw std::invalid_argument("invalid vertex identifier '" + vertices_[i] + "'");
      if (!index_.emplace(vertices_[i], static_cast<int>(i)).second)
        throw std::invalid_argument("duplicate vertex identifier '" + vertices_[i] + "'");
    }
    std::unordered_set<std::string> arrow_names;
    endpoints_.reserve(arrows_.size());
    for (const Arrow& a : arrows_) {
      if (!is_identifier(a.name))
        throw std::invalid_argument("invalid arrow identifier '" + a.name + "'");
      if (!arrow_names.insert(a.name).second)
        throw std::invalid_argument("duplicate arrow identifier '" + a.name + "'");
      auto s = index_.find(a.src);
      auto t = index_.find(a.dst);
      if (s == index_.end())
        throw std::invalid_argument("undeclared endpoint '" + a.src + "'");
      if (t == index_.end())
        throw std::invalid_argument("undeclared endpoint '" + a.dst + "'");
      endpoints_.emplace_back(s->second, t->second);
    }
  }

  const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }

  std::size_t num_vertices() const noexcept { return vertices_.size(); }
  std::size_t num_arrows() const noexcept { return arrows_.size(); }

  std::optional<int> find_vertex(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  int vertex_index(std::string_view name) const {
    auto v = find_vertex(name);
    if (!v) throw std::invalid_argument("unknown vertex '" + std::string(name) + "'");
    return *v;
  }

  int arrow_src(std::size_t k) const { return endpoints_.at(k).first; }
  int arrow_dst(std::size_t k) const { return endpoints_.at(k).second; }

  friend bool operator==(const Quiver& a, const Quiver& b) {
    return a.vertices_ == b.vertices_ && a.arrows_ == b.arrows_;
  }

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::vector<std::pair<int, int>> endpoints_;
  std::unordered_map<std::string, int> index_;
};

enum class Sign { plus, minus };

struct SignedVertex {
  std::string base;
  Sign sign = Sign::plus;

  std::string str() const { return base + (sign == Sign::plus ? '+' : '-'); }

  friend bool operator==(const SignedVertex&, const SignedVertex&) = default;
};

// Undirected multigraph; edges hold vertex indices with u <= v, loops as (u,u).
struct Graph {
  std::vector<std::string> vertices;
  std::vector<std::pair<int, int>> edges;

  friend bool operator==(const Graph&, const Graph&) = default;
};

// ---------------------------------------------------------------------------
// File format: line-oriented, '#' comments, "vertex NAME" / "arrow NAME SRC DST".

inline Quiver parse_quiver(std::string_view text) {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  std::unordered_map<std::string, int> vertex_index;
  std::unordered_set<std::string> arrow_names;

  struct Token {
    std::string text;
    int column;  // 1-based
  };

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;

    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
      if (line[i] == ' ' || line[i] == '\t') {
        ++i;
        continue;
      }
      std::size_t start = i;
      while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
      tokens.push_back({std::string(line.substr(start, i - start)), static_cast<int>(start) + 1});
    }

    if (!tokens.empty() && tokens[0].text[0] != '#') {
      const Token& kw = tokens[0];
      auto expect_identifier = [&](const Token& t) {
        if (!is_identifier(t.text))
          throw ParseError("invalid identifier '" + t.text + "'", line_no, t.column);
      };
      if (kw.text == "vertex") {
        if (tokens.size() != 2)
          throw ParseError("'vertex' takes exactly one name", line_no,
                           tokens.size() > 2 ? tokens[2].column : kw.column);
        expect_identifier(tokens[1]);
        if (vertex_index.count(tokens[1].text))
          throw ParseError("duplicate vertex identifier '" + tokens[1].text + "'", line_no,
                           tokens[1].column);
        vertex_index.emplace(tokens[1].text, static_cast<int>(vertices.size()));
        vertices.push_back(tokens[1].text);
      } else if (kw.text == "arrow") {
        if (tokens.size() != 4)
          throw ParseError("'arrow' takes a name, a source and a target", line_no,
                           tokens.size() > 4 ? tokens[4].column : kw.column);
        for (int k = 1; k <= 3; ++k) expect_identifier(tokens[k]);
        if (!arrow_names.insert(tokens[1].text).second)
          throw ParseError("duplicate arrow identifier '" + tokens[1].text + "'", line_no,
                           tokens[1].column);
        for (int k = 2; k <= 3; ++k)
          if (!vertex_index.count(tokens[k].text))
            throw ParseError("undeclared endpoint '" + tokens[k].text + "'", line_no,
                             tokens[k].column);
        arrows.push_back({tokens[1].text, tokens[2].text, tokens[3].text});
      } else {
        throw ParseError("expected 'vertex' or 'arrow', got '" + kw.text + "'", line_no, kw.column);
      }
    }

    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }

  if (vertices.empty()) throw ParseError("empty vertex set", 0, 0);
  return Quiver(std::move(vertices), std::move(arrows));
}

// Canonical file text; parse_quiver(emit_text(q)) == q.
inline std::string emit_text(const Quiver& q) {
  std::ostringstream os;
  for (const auto& v : q.vertices()) os << "vertex " << v << '\n';
  for (const auto& a : q.arrows()) os << "arrow " << a.name << ' ' << a.src << ' ' << a.dst << '\n';
  return os.str();
}

inline std::string emit_dot(const Quiver& q) {
  std::ostringstream os;
  os << "digraph quiver {\n";
  for (const auto& v : q.vertices()) os << "  \"" << v << "\";\n";
  for (const auto& a : q.arrows())
    os << "  \"" << a.src << "\" -> \"" << a.dst << "\" [label=\"" << a.name << "\"];\n";
  os << "}\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Separated quiver: vertices i+, i- per vertex i, one arrow i+ -> j- per
// arrow i -> j. Always bipartite; a loop at i becomes the arrow i+ -> i-.

inline Quiver separated_quiver(const Quiver& q) {
  std::vector<std::string> vertices;
  vertices.reserve(2 * q.num_vertices());
  for (const auto& v : q.vertices()) {
    if (!v.empty() && (v.back() == '+' || v.back() == '-'))
      throw std::invalid_argument("vertex '" + v + "' already carries a sign suffix");
    vertices.push_back(v + '+');
  }
  for (const auto& v : q.vertices()) vertices.push_back(v + '-');
  std::vector<Arrow> arrows;
  arrows.reserve(q.num_arrows());
  for (const auto& a : q.arrows()) arrows.push_back({a.name, a.src + '+', a.dst + '-'});
  return Quiver(std::move(vertices), std::move(arrows));
}

inline Graph underlying_graph(const Quiver& q) {
  Graph g;
  g.vertices = q.vertices();
  g.edges.reserve(q.num_arrows());
  for (std::size_t k = 0; k < q.num_arrows(); ++k) {
    int u = q.arrow_src(k);
    int v = q.arrow_dst(k);
    g.edges.emplace_back(std::min(u, v), std::max(u, v));
  }
  return g;
}

// Components ordered by smallest vertex index; singleton vertices count.
inline std::vector<Graph> connected_components(const Graph& g) {
  const int n = static_cast<int>(g.vertices.size());
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> adj(n);
  for (auto [u, v] : g.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  int num_comps = 0;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    int c = num_comps++;
    stack.push_back(s);
    comp[s] = c;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : adj[u])
        if (comp[v] == -1) {
          comp[v] = c;
          stack.push_back(v);
        }
    }
  }
  std::vector<Graph> out(num_comps);
  std::vector<int> local(n, -1);
  for (int v = 0; v < n; ++v) {
    local[v] = static_cast<int>(out[comp[v]].vertices.size());
    out[comp[v]].vertices.push_back(g.vertices[v]);
  }
  for (auto [u, v] : g.edges) out[comp[u]].edges.emplace_back(local[u], local[v]);
  return out;
}

// Full subquiver on `keep`: those vertices plus every arrow with both ends kept.
inline Quiver full_subquiver(const Quiver& q, const std::vector<std::string>& keep) {
  std::unordered_set<int> kept;
  for (const auto& name : keep) kept.insert(q.vertex_index(name));
  std::vector<std::string> vertices;
  for (std::size_t i = 0; i < q.num_vertices(); ++i)
    if (kept.count(static_cast<int>(i))) vertices.push_back(q.vertices()[i]);
  std::vector<Arrow> arrows;
  for (std::size_t k = 0; k < q.num_arrows(); ++k)
    if (kept.count(q.arrow_src(k)) && kept.count(q.arrow_dst(k))) arrows.push_back(q.arrows()[k]);
  return Quiver(std::move(vertices), std::move(arrows));
}

}  // namespace taurig
