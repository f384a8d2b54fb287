#include <sstream>
#include <string>

#include "matchkit/graph.hpp"

namespace matchkit {

MultiGraph parse_mcg(std::istream& in) {
  std::string line;
  int n = -1, m = -1;
  std::vector<std::pair<int, int>> pairs;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;  // blank line
    if (tag == "c") continue;
    if (tag == "p") {
      require(n < 0, ErrorCode::ParseError,
              "duplicate problem line at line " + std::to_string(lineno));
      std::string kind;
      if (!(ls >> kind >> n >> m) || kind != "mcg" || n < 0 || m < 0)
        fail(ErrorCode::ParseError,
             "expected 'p mcg <n> <m>' at line " + std::to_string(lineno));
      continue;
    }
    if (tag == "e") {
      require(n >= 0, ErrorCode::ParseError,
              "edge before problem line at line " + std::to_string(lineno));
      int u, v;
      if (!(ls >> u >> v))
        fail(ErrorCode::ParseError,
             "bad edge line at line " + std::to_string(lineno));
      require(u >= 1 && u <= n && v >= 1 && v <= n, ErrorCode::ParseError,
              "vertex out of range at line " + std::to_string(lineno));
      pairs.emplace_back(u - 1, v - 1);
      if (static_cast<int>(pairs.size()) == m) break;
      continue;
    }
    fail(ErrorCode::ParseError,
         "unknown line tag '" + tag + "' at line " + std::to_string(lineno));
  }
  require(n >= 0, ErrorCode::ParseError, "missing problem line");
  require(static_cast<int>(pairs.size()) == m, ErrorCode::ParseError,
          "expected " + std::to_string(m) + " edges, got " +
              std::to_string(pairs.size()));
  return build_graph(n, pairs);
}

MultiGraph parse_mcg_string(const std::string& text) {
  std::istringstream in(text);
  return parse_mcg(in);
}

std::string format_mcg(const MultiGraph& g, const std::string& comment) {
  std::ostringstream out;
  if (!comment.empty()) {
    std::istringstream cs(comment);
    std::string cl;
    while (std::getline(cs, cl)) out << "c " << cl << "\n";
  }
  out << "p mcg " << g.n() << " " << g.m() << "\n";
  for (const Edge& e : g.edges())
    out << "e " << (e.u + 1) << " " << (e.v + 1) << "\n";
  return out.str();
}

}  // namespace matchkit
