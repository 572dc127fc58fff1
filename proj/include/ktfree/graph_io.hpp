#pragma once

#include <cstddef>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "ktfree/errors.hpp"
#include "ktfree/graph.hpp"

namespace ktfree {

// graph6: order in 1 or 4 printable bytes, then the upper triangle column by column
// (x(0,1), x(0,2), x(1,2), x(0,3), ...) packed six bits per byte, each byte offset by 63.

inline std::string encode_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(63 + ((n >> 12) & 0x3F)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 0x3F)));
    out.push_back(static_cast<char>(63 + (n & 0x3F)));
  }
  int group = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      group = (group << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + group));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (group << (6 - filled))));
  return out;
}

inline Graph decode_graph6(std::string_view text) {
  std::size_t pos = 0;
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.starts_with(kHeader)) pos = kHeader.size();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);

  auto sextet = [&](std::size_t at) -> int {
    if (at >= text.size()) throw ParseError("graph6: unexpected end of input", at);
    const int c = static_cast<unsigned char>(text[at]);
    if (c < 63 || c > 126) throw ParseError("graph6: byte outside printable range 63..126", at);
    return c - 63;
  };

  std::size_t n = 0;
  if (pos >= text.size()) throw ParseError("graph6: empty input", pos);
  if (text[pos] == '~') {
    if (pos + 1 < text.size() && text[pos + 1] == '~')
      throw ParseError("graph6: orders above 258047 are not supported", pos);
    n = (static_cast<std::size_t>(sextet(pos + 1)) << 12) | (static_cast<std::size_t>(sextet(pos + 2)) << 6) |
        static_cast<std::size_t>(sextet(pos + 3));
    pos += 4;
  } else {
    n = static_cast<std::size_t>(sextet(pos));
    pos += 1;
  }
  if (n > kMaxVertices)
    throw CapacityError("graph6: order " + std::to_string(n) + " exceeds vertex cap " + std::to_string(kMaxVertices));

  Graph g(n);
  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes)
    throw ParseError("graph6: expected " + std::to_string(bytes) + " adjacency bytes, found " +
                         std::to_string(text.size() - pos),
                     text.size() < pos + bytes ? text.size() : pos + bytes);
  std::size_t bit = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++bit) {
      const int value = sextet(pos + bit / 6);
      if ((value >> (5 - bit % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    const int tail = sextet(pos + bits / 6) & ((1 << (6 - bits % 6)) - 1);
    if (tail != 0) throw ParseError("graph6: non-zero padding bits", pos + bits / 6);
  }
  return g;
}

inline nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.order()}, {"edges", std::move(edges)}};
}

inline Graph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_unsigned())
    throw ArgumentError("graph JSON must be an object with a non-negative integer \"n\"");
  Graph g(j["n"].get<std::size_t>());
  if (j.contains("edges")) {
    for (const auto& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2) throw ArgumentError("graph JSON edges must be [u, v] pairs");
      g.add_edge(e[0].get<std::size_t>(), e[1].get<std::size_t>());
    }
  }
  return g;
}

/// Reads every graph from a stream. The first non-blank byte selects the format:
/// '{' means one JSON object, anything else means graph6 lines.
inline std::vector<Graph> read_graphs(std::istream& in) {
  std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  const auto start = data.find_first_not_of(" \t\r\n");
  std::vector<Graph> out;
  if (start == std::string::npos) return out;
  if (data[start] == '{' || data[start] == '[') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(data);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(std::string("JSON: ") + e.what(), e.byte);
    }
    if (j.is_array()) {
      for (const auto& item : j) out.push_back(graph_from_json(item));
    } else {
      out.push_back(graph_from_json(j));
    }
    return out;
  }
  std::size_t line_start = 0;
  while (line_start < data.size()) {
    std::size_t line_end = data.find('\n', line_start);
    if (line_end == std::string::npos) line_end = data.size();
    std::string_view line(data.data() + line_start, line_end - line_start);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
    if (!line.empty()) {
      try {
        out.push_back(decode_graph6(line));
      } catch (const ParseError& e) {
        throw ParseError(std::string("line starting at byte ") + std::to_string(line_start) + ": " + e.what(),
                         line_start + e.offset());
      }
    }
    line_start = line_end + 1;
  }
  return out;
}

}  // namespace ktfree
