#include "arbor/io.h"

#include <charconv>
#include <fstream>
#include <sstream>

#include "arbor/error.h"

namespace arbor {

namespace {

std::vector<std::string_view> Tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::int64_t Number(std::string_view token, int line, const char* what) {
  std::int64_t value = 0;
  const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || end != token.data() + token.size()) {
    throw ParseError(line, std::string("invalid ") + what + " '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

ParsedGraph ParseGraph(std::string_view text) {
  int n = -1;
  int declared = 0;
  Vertex source = 0;
  int problem_line = 0;
  std::vector<RawEdge> edges;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    const auto tok = Tokens(line);
    if (tok.empty() || tok[0] == "c") continue;
    if (tok[0] == "p") {
      if (n >= 0) throw ParseError(line_no, "second problem line");
      if (tok.size() != 5 || tok[1] != "dmc") {
        throw ParseError(line_no, "expected 'p dmc <n> <m> <s>'");
      }
      const std::int64_t nn = Number(tok[2], line_no, "vertex count");
      const std::int64_t mm = Number(tok[3], line_no, "arc count");
      const std::int64_t ss = Number(tok[4], line_no, "source");
      if (nn < 1 || nn > (1 << 24)) throw ParseError(line_no, "vertex count out of range");
      if (mm < 0 || mm > (1 << 26)) throw ParseError(line_no, "arc count out of range");
      if (ss < 1 || ss > nn) throw ParseError(line_no, "source out of range");
      n = static_cast<int>(nn);
      declared = static_cast<int>(mm);
      source = static_cast<Vertex>(ss - 1);
      problem_line = line_no;
      continue;
    }
    if (tok[0] == "a") {
      if (n < 0) throw ParseError(line_no, "arc before the problem line");
      if (tok.size() != 3 && tok.size() != 4) {
        throw ParseError(line_no, "expected 'a <tail> <head> [<cap>]'");
      }
      const std::int64_t t = Number(tok[1], line_no, "tail");
      const std::int64_t h = Number(tok[2], line_no, "head");
      const std::int64_t c = tok.size() == 4 ? Number(tok[3], line_no, "capacity") : 1;
      if (t < 1 || t > n) throw ParseError(line_no, "tail out of range");
      if (h < 1 || h > n) throw ParseError(line_no, "head out of range");
      if (c < 1 || c > kMaxCapacity) throw ParseError(line_no, "capacity out of range");
      if (static_cast<int>(edges.size()) == declared) {
        throw ParseError(line_no, "more arcs than the problem line declares");
      }
      edges.push_back({static_cast<Vertex>(t - 1), static_cast<Vertex>(h - 1), c});
      continue;
    }
    throw ParseError(line_no, "unknown line type '" + std::string(tok[0]) + "'");
  }
  if (n < 0) throw ParseError(line_no, "missing problem line");
  if (static_cast<int>(edges.size()) != declared) {
    throw ParseError(problem_line, "problem line declares " + std::to_string(declared) +
                                       " arcs, found " + std::to_string(edges.size()));
  }
  ParsedGraph out;
  out.declared_arcs = declared;
  out.graph = Normalize(n, source, edges, &out.report);
  return out;
}

std::string SerializeGraph(int n, Vertex source, const std::vector<RawEdge>& edges,
                           const std::vector<std::string>& comments) {
  std::ostringstream out;
  for (const auto& c : comments) out << "c " << c << '\n';
  out << "p dmc " << n << ' ' << edges.size() << ' ' << source + 1 << '\n';
  for (const RawEdge& e : edges) {
    out << "a " << e.tail + 1 << ' ' << e.head + 1 << ' ' << e.capacity << '\n';
  }
  return out.str();
}

std::string SerializeGraph(const Graph& g) {
  return SerializeGraph(g.n(), g.source(), g.Edges());
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) Fail(ErrorKind::kMalformedInput, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace arbor
