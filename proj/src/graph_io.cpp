#include "factorcrit/graph_io.hpp"

#include <charconv>
#include <cstdint>
#include <optional>
#include <sstream>

#include "factorcrit/errors.hpp"

namespace factorcrit {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr std::uint64_t kMaxShort = 62;
constexpr std::uint64_t kMaxMedium = 258047;

int sextet(std::string_view s, std::size_t at, std::size_t base) {
  if (at >= s.size()) throw ParseError("truncated graph6 data", base + at);
  const auto c = static_cast<unsigned char>(s[at]);
  if (c < 63 || c > 126) throw ParseError("byte outside graph6 range 63..126", base + at);
  return c - 63;
}

void put_size(std::string& out, std::uint64_t n) {
  if (n <= kMaxShort) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= kMaxMedium) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.append("~~");
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t base = 0;
  if (text.starts_with(kHeader)) {
    text.remove_prefix(kHeader.size());
    base = kHeader.size();
  }
  if (text.ends_with('\n')) text.remove_suffix(1);
  if (text.ends_with('\r')) text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty graph6 record", base);

  std::uint64_t n = 0;
  std::size_t pos = 0;
  if (text[0] != '~') {
    n = static_cast<std::uint64_t>(sextet(text, 0, base));
    pos = 1;
  } else if (text.size() > 1 && text[1] == '~') {
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | static_cast<std::uint64_t>(sextet(text, i, base));
    pos = 8;
    if (n <= kMaxMedium) throw ParseError("non-canonical 8-byte size for n=" + std::to_string(n), base);
  } else {
    for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | static_cast<std::uint64_t>(sextet(text, i, base));
    pos = 4;
    if (n <= kMaxShort) throw ParseError("non-canonical 4-byte size for n=" + std::to_string(n), base);
  }

  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t bytes = (bits + 5) / 6;
  if (text.size() - pos < bytes)
    throw ParseError("truncated graph6 payload: expected " + std::to_string(bytes) +
                         " data bytes, found " + std::to_string(text.size() - pos),
                     base + text.size());
  if (text.size() - pos > bytes)
    throw ParseError("trailing bytes after graph6 payload", base + pos + bytes);

  Graph g(static_cast<std::size_t>(n));
  std::uint64_t bit = 0;
  for (std::uint64_t j = 1; j < n; ++j) {
    for (std::uint64_t i = 0; i < j; ++i, ++bit) {
      const std::size_t at = pos + bit / 6;
      const int value = sextet(text, at, base);
      if ((value >> (5 - bit % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    const std::size_t at = pos + bits / 6;
    const int pad_mask = (1 << (6 - bits % 6)) - 1;
    if ((sextet(text, at, base) & pad_mask) != 0)
      throw ParseError("nonzero graph6 padding bits", base + at);
  }
  return g;
}

std::string serialize_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  put_size(out, n);
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

namespace {

// Returns the integer tokens of one line along with their byte offsets.
std::vector<std::pair<std::size_t, std::size_t>> line_tokens(std::string_view line,
                                                             std::size_t base) {
  std::vector<std::pair<std::size_t, std::size_t>> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    std::size_t value = 0;
    const char* first = line.data() + i;
    auto [ptr, ec] = std::from_chars(first, line.data() + line.size(), value);
    if (ec != std::errc() || ptr == first)
      throw ParseError("expected a nonnegative integer", base + i);
    const auto len = static_cast<std::size_t>(ptr - first);
    if (i + len < line.size() && line[i + len] != ' ' && line[i + len] != '\t' &&
        line[i + len] != '\r')
      throw ParseError("unexpected character in edge list", base + i + len);
    tokens.emplace_back(value, base + i);
    i += len;
  }
  return tokens;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::optional<std::size_t> declared;
  std::size_t declared_at = 0;
  std::vector<std::pair<Edge, std::size_t>> edges;
  std::size_t max_vertex_plus_one = 0;

  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    const auto first = line.find_first_not_of(" \t\r");
    if (first != std::string_view::npos && line[first] != '#') {
      auto tokens = line_tokens(line, start);
      if (tokens.size() == 1) {
        if (declared || !edges.empty())
          throw ParseError("vertex count must be a single leading line", tokens[0].second);
        declared = tokens[0].first;
        declared_at = tokens[0].second;
      } else if (tokens.size() == 2) {
        auto [u, uat] = tokens[0];
        auto [v, vat] = tokens[1];
        if (u == v) throw ParseError("loop edge " + std::to_string(u), uat);
        edges.push_back({{u, v}, uat});
        max_vertex_plus_one = std::max({max_vertex_plus_one, u + 1, v + 1});
        (void)vat;
      } else {
        throw ParseError("expected \"u v\" on each edge line",
                         tokens.size() > 2 ? tokens[2].second : start);
      }
    }
    if (end == text.size()) break;
    start = end + 1;
  }

  const std::size_t n = declared.value_or(max_vertex_plus_one);
  if (declared && max_vertex_plus_one > n)
    throw ParseError("edge endpoint exceeds declared vertex count " + std::to_string(n),
                     declared_at);
  Graph g(n);
  for (const auto& [e, at] : edges) g.add_edge(e.first, e.second);
  return g;
}

std::string serialize_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph parse_graph_auto(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw ParseError("no graph in input", 0);
  const char c = text[first];
  if ((c >= '0' && c <= '9') || c == '#') return parse_edge_list(text);
  // graph6 is a single token; strip surrounding whitespace.
  const auto last = text.find_last_not_of(" \t\r\n");
  try {
    return parse_graph6(text.substr(first, last - first + 1));
  } catch (const ParseError& e) {
    throw e.shifted(first);
  }
}

}  // namespace factorcrit
