#include "toughness/core/formats.hpp"

#include "toughness/core/errors.hpp"

#include <charconv>
#include <set>
#include <sstream>

namespace tough {
namespace {

constexpr unsigned char kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

std::string_view strip_terminator(std::string_view text) {
  if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
  if (!text.empty() && text.back() == '\r') text.remove_suffix(1);
  return text;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  text = strip_terminator(text);
  std::size_t pos = 0;
  if (text.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();

  if (pos >= text.size()) throw ParseError("graph6: missing size header", pos);
  const auto head = static_cast<unsigned char>(text[pos]);
  if (head == 126) throw ParseError("graph6: long-form size header is not supported", pos);
  if (head < kBias || head > 126) throw ParseError("graph6: invalid size header byte", pos);
  const std::size_t n = head - kBias;
  ++pos;

  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos < bytes) throw ParseError("graph6: truncated edge data", text.size());

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (std::size_t b = 0; b < bytes; ++b, ++pos) {
    const auto c = static_cast<unsigned char>(text[pos]);
    if (c < kBias || c > 126) throw ParseError("graph6: invalid data byte", pos);
    const unsigned value = c - kBias;
    for (int shift = 5; shift >= 0; --shift, ++k) {
      const bool set = (value >> shift) & 1U;
      if (k >= bits) {
        if (set) throw ParseError("graph6: non-zero padding bit", pos);
        continue;
      }
      if (set) {
        // Column-major upper triangle: (0,1), (0,2), (1,2), (0,3), ...
        Vertex j = 1;
        std::size_t start = 0;
        while (start + j <= k) {
          start += j;
          ++j;
        }
        edges.emplace_back(static_cast<Vertex>(k - start), j);
      }
    }
  }
  if (pos != text.size()) throw ParseError("graph6: trailing bytes after edge data", pos);
  return Graph(n, edges);
}

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n > kGraph6ShortMax) {
    throw UnsupportedSizeError("graph6: " + std::to_string(n) + " vertices needs the long form (max " +
                               std::to_string(kGraph6ShortMax) + ")");
  }
  std::string out(1, static_cast<char>(n + kBias));
  unsigned value = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      value = (value << 1) | (g.has_edge(i, j) ? 1U : 0U);
      if (++filled == 6) {
        out.push_back(static_cast<char>(value + kBias));
        value = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((value << (6 - filled)) + kBias));
  return out;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      out.push_back(parse_graph6(line));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what(), e.offset());
    }
  }
  return out;
}

namespace {

class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  // Next non-blank line; false at end of input.
  bool next(std::string_view& line, std::size_t& offset) {
    while (pos_ < text_.size()) {
      const std::size_t end = std::min(text_.find('\n', pos_), text_.size());
      std::string_view candidate = text_.substr(pos_, end - pos_);
      offset = pos_;
      pos_ = end + 1;
      if (!candidate.empty() && candidate.back() == '\r') candidate.remove_suffix(1);
      if (candidate.find_first_not_of(" \t") != std::string_view::npos) {
        line = candidate;
        return true;
      }
    }
    return false;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

// Parses exactly two non-negative integers separated by whitespace.
std::pair<std::size_t, std::size_t> parse_pair(std::string_view line, std::size_t offset) {
  std::size_t values[2];
  std::size_t i = 0;
  for (std::size_t& out : values) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), out);
    if (ec != std::errc()) throw ParseError("edge list: expected two non-negative integers", offset + i);
    i = static_cast<std::size_t>(ptr - line.data());
  }
  while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
  if (i != line.size()) throw ParseError("edge list: unexpected trailing text", offset + i);
  return {values[0], values[1]};
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  LineReader reader(text);
  std::string_view line;
  std::size_t offset = 0;
  if (!reader.next(line, offset)) throw ParseError("edge list: missing \"n m\" header", 0);
  const auto [n, m] = parse_pair(line, offset);

  std::vector<Edge> edges;
  std::set<Edge> seen;
  while (reader.next(line, offset)) {
    const auto [u, v] = parse_pair(line, offset);
    if (edges.size() == m) throw ParseError("edge list: more edge lines than the declared " + std::to_string(m), offset);
    if (u >= n || v >= n) throw ParseError("edge list: vertex index out of range", offset);
    if (u == v) throw ParseError("edge list: loop at vertex " + std::to_string(u), offset);
    const Edge e(static_cast<Vertex>(u), static_cast<Vertex>(v));
    if (!seen.insert(e).second) throw ParseError("edge list: duplicate edge", offset);
    edges.push_back(e);
  }
  if (edges.size() != m) {
    throw ParseError("edge list: declared " + std::to_string(m) + " edges but found " + std::to_string(edges.size()),
                     text.size());
  }
  return Graph(n, edges);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

}  // namespace tough
