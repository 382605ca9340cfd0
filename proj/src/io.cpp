#include "clawham/io.hpp"

#include <charconv>
#include <sstream>

namespace clawham {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' ||
                        s.back() == '\n'))
    s.remove_suffix(1);
  return s;
}

int sextet(char c) {
  const int v = static_cast<unsigned char>(c) - 63;
  require(v >= 0 && v <= 63, ErrorCode::kInvalidInput,
          std::string("graph6: byte out of range: '") + c + "'");
  return v;
}

}  // namespace

SimpleGraph parse_graph6(std::string_view line) {
  line = trim(line);
  if (line.starts_with(kGraph6Header)) line.remove_prefix(kGraph6Header.size());
  require(!line.empty(), ErrorCode::kInvalidInput, "graph6: empty line");
  std::size_t pos = 0;
  long long n = 0;
  auto take = [&](int count) {
    long long v = 0;
    for (int i = 0; i < count; ++i) {
      require(pos < line.size(), ErrorCode::kInvalidInput, "graph6: truncated size");
      v = (v << 6) | sextet(line[pos++]);
    }
    return v;
  };
  if (line[0] != '~') {
    n = take(1);
  } else if (line.size() > 1 && line[1] != '~') {
    pos = 1;
    n = take(3);
  } else {
    pos = 2;
    n = take(6);
  }
  require(n <= 4096, ErrorCode::kInvalidInput, "graph6: graph too large");
  const auto nn = static_cast<int>(n);
  const long long bits = n * (n - 1) / 2;
  const long long bytes = (bits + 5) / 6;
  require(static_cast<long long>(line.size() - pos) == bytes, ErrorCode::kInvalidInput,
          "graph6: expected " + std::to_string(bytes) + " data bytes, got " +
              std::to_string(line.size() - pos));
  SimpleGraph g(nn);
  long long k = 0;
  for (int j = 1; j < nn; ++j)
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = sextet(line[pos + k / 6]);
      if (byte >> (5 - k % 6) & 1) g.add_edge(i, j);
    }
  if (bits % 6) {
    const int last = sextet(line.back());
    require((last & ((1 << (6 - bits % 6)) - 1)) == 0, ErrorCode::kInvalidInput,
            "graph6: nonzero padding bits");
  }
  return g;
}

std::string to_graph6(const SimpleGraph& g) {
  const long long n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out += static_cast<char>(63 + n);
  } else if (n <= 258047) {
    out += '~';
    for (int s = 12; s >= 0; s -= 6) out += static_cast<char>(63 + ((n >> s) & 63));
  } else {
    out += "~~";
    for (int s = 30; s >= 0; s -= 6) out += static_cast<char>(63 + ((n >> s) & 63));
  }
  int acc = 0, filled = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out += static_cast<char>(63 + acc);
        acc = filled = 0;
      }
    }
  if (filled) out += static_cast<char>(63 + (acc << (6 - filled)));
  return out;
}

namespace {

struct RawEdgeList {
  int n;
  std::vector<VertexPair> edges;
};

int read_int(std::string_view tok, int line_no) {
  int v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  require(ec == std::errc() && p == tok.data() + tok.size(), ErrorCode::kInvalidInput,
          "edge list line " + std::to_string(line_no) + ": not an integer: '" +
              std::string(tok) + "'");
  return v;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

RawEdgeList parse_raw(std::string_view text) {
  RawEdgeList raw{-1, {}};
  int expected = 0;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = std::min(text.find('\n', pos), text.size());
    const std::string_view line = trim(text.substr(pos, nl - pos));
    ++line_no;
    pos = nl + 1;
    if (line.empty() || line.front() == '#') continue;
    const auto tok = split_ws(line);
    require(tok.size() == 2, ErrorCode::kInvalidInput,
            "edge list line " + std::to_string(line_no) + ": expected two integers");
    const int a = read_int(tok[0], line_no);
    const int b = read_int(tok[1], line_no);
    if (raw.n < 0) {
      require(a >= 0 && b >= 0, ErrorCode::kInvalidInput,
              "edge list header: negative count");
      raw.n = a;
      expected = b;
      continue;
    }
    require(a >= 0 && a < raw.n && b >= 0 && b < raw.n, ErrorCode::kInvalidInput,
            "edge list line " + std::to_string(line_no) + ": vertex out of range");
    require(a != b, ErrorCode::kInvalidInput,
            "edge list line " + std::to_string(line_no) + ": loop");
    raw.edges.push_back({std::min(a, b), std::max(a, b)});
  }
  require(raw.n >= 0, ErrorCode::kInvalidInput, "edge list: missing header");
  require(static_cast<int>(raw.edges.size()) == expected, ErrorCode::kInvalidInput,
          "edge list: header promises " + std::to_string(expected) + " edges, found " +
              std::to_string(raw.edges.size()));
  return raw;
}

}  // namespace

SimpleGraph parse_edge_list(std::string_view text) {
  const RawEdgeList raw = parse_raw(text);
  SimpleGraph g(raw.n);
  for (auto [u, v] : raw.edges)
    require(g.add_edge(u, v), ErrorCode::kInvalidInput,
            "edge list: repeated edge " + std::to_string(u) + " " + std::to_string(v) +
                " in a simple graph");
  return g;
}

Multigraph parse_multigraph_edge_list(std::string_view text) {
  const RawEdgeList raw = parse_raw(text);
  Multigraph h(raw.n);
  for (auto [u, v] : raw.edges) h.add_edge(u, v);
  return h;
}

std::string to_edge_list(const SimpleGraph& g) {
  std::ostringstream os;
  os << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

std::string to_edge_list(const Multigraph& h) {
  std::ostringstream os;
  os << h.vertex_count() << ' ' << h.edge_count() << '\n';
  for (const Edge& e : h.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

std::vector<SimpleGraph> read_graph6_corpus(std::istream& in, std::size_t limit) {
  std::vector<SimpleGraph> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view t = trim(line);
    if (t.empty() || t == kGraph6Header) continue;
    try {
      out.push_back(parse_graph6(t));
    } catch (const Error& e) {
      fail(e.code(), "corpus line " + std::to_string(line_no) + ": " + e.what());
    }
    if (limit && out.size() >= limit) break;
  }
  return out;
}

GraphFormat parse_format(std::string_view name) {
  if (name == "auto") return GraphFormat::kAuto;
  if (name == "graph6") return GraphFormat::kGraph6;
  if (name == "edgelist") return GraphFormat::kEdgeList;
  fail(ErrorCode::kInvalidInput, "unknown format '" + std::string(name) +
                                     "' (expected graph6, edgelist or auto)");
}

SimpleGraph parse_graph(std::string_view text, GraphFormat format) {
  if (format == GraphFormat::kAuto) {
    format = GraphFormat::kGraph6;
    std::size_t pos = 0;
    while (pos < text.size()) {
      const std::size_t nl = std::min(text.find('\n', pos), text.size());
      const std::string_view line = trim(text.substr(pos, nl - pos));
      pos = nl + 1;
      if (line.empty()) continue;
      if (line.front() == '#' || split_ws(line).size() == 2)
        format = GraphFormat::kEdgeList;
      break;
    }
  }
  if (format == GraphFormat::kEdgeList) return parse_edge_list(text);
  const std::string_view t = trim(text);
  require(t.find('\n') == std::string_view::npos, ErrorCode::kInvalidInput,
          "graph6 input holds more than one graph; use verify for corpora");
  return parse_graph6(t);
}

std::string format_graph(const SimpleGraph& g, GraphFormat format) {
  if (format == GraphFormat::kEdgeList) return to_edge_list(g);
  return to_graph6(g) + "\n";
}

}  // namespace clawham
