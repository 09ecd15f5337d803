#include "tcoi/io.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <vector>

namespace tcoi {
namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n\v\f";
  auto first = s.find_first_not_of(ws);
  if (first == std::string_view::npos) return {};
  auto last = s.find_last_not_of(ws);
  return s.substr(first, last - first + 1);
}

bool parse_vertex(std::string_view token, Vertex& out) {
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc{} && ptr == token.data() + token.size();
}

}  // namespace

Tree parse_edge_list(std::string_view text) {
  std::vector<Edge> edges;
  std::size_t line_no = 0;
  Vertex max_id = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    std::vector<std::string_view> tokens;
    std::size_t pos = 0;
    while (pos < line.size()) {
      auto start = line.find_first_not_of(" \t", pos);
      if (start == std::string_view::npos) break;
      auto end = line.find_first_of(" \t", start);
      if (end == std::string_view::npos) end = line.size();
      tokens.push_back(line.substr(start, end - start));
      pos = end;
    }
    Vertex u = 0, v = 0;
    if (tokens.size() != 2 || !parse_vertex(tokens[0], u) || !parse_vertex(tokens[1], v)) {
      throw ParseError("line " + std::to_string(line_no) + ": expected two non-negative integers");
    }
    max_id = std::max({max_id, u, v});
    edges.emplace_back(u, v);
  }
  if (edges.empty()) throw EmptyInput("edge list contains no edges");

  const std::size_t n = std::size_t{max_id} + 1;
  std::vector<char> used(n, 0);
  for (auto [u, v] : edges) used[u] = used[v] = 1;
  if (auto gap = std::find(used.begin(), used.end(), 0); gap != used.end()) {
    throw ParseError("vertex ids are not dense: " + std::to_string(gap - used.begin()) + " is missing");
  }
  return Tree(n, edges);
}

std::string serialize_edge_list(const Tree& t) {
  std::ostringstream out;
  for (auto [u, v] : t.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Tree parse_graph6(std::string_view text) {
  text = trim(text);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw ParseError("empty graph6 string");
  if (text.front() == ':' || text.front() == '&') throw ParseError("sparse6/digraph6 input is not supported");
  for (char c : text) {
    if (c < 63 || c > 126) throw ParseError("graph6 byte out of range");
  }

  std::size_t pos = 0;
  auto take6 = [&](int count) {
    std::size_t value = 0;
    for (int i = 0; i < count; ++i) {
      if (pos >= text.size()) throw ParseError("truncated graph6 size field");
      value = (value << 6) | static_cast<std::size_t>(text[pos++] - 63);
    }
    return value;
  };
  std::size_t n = 0;
  if (text[0] != 126) {
    n = take6(1);
  } else if (text.size() > 1 && text[1] != 126) {
    pos = 1;
    n = take6(3);
  } else {
    pos = 2;
    n = take6(6);
  }

  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t expected = (bits + 5) / 6;
  if (text.size() - pos != expected) {
    throw ParseError("graph6 body has " + std::to_string(text.size() - pos) + " bytes, expected " +
                     std::to_string(expected));
  }
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      int byte = text[pos + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  if (n == 0) throw NotATree("graph6 graph has no vertices");
  return Tree(n, edges);
}

std::string serialize_graph6(const Tree& t) {
  const std::size_t n = t.order();
  std::string out;
  auto put6 = [&](std::size_t value, int count) {
    for (int i = count - 1; i >= 0; --i) out.push_back(static_cast<char>(((value >> (6 * i)) & 63) + 63));
  };
  if (n <= 62) {
    put6(n, 1);
  } else if (n <= 258047) {
    out.push_back(126);
    put6(n, 3);
  } else {
    out.append(2, static_cast<char>(126));
    put6(n, 6);
  }
  const std::size_t bits = n * (n - 1) / 2;
  std::vector<unsigned char> body((bits + 5) / 6, 0);
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      if (t.adjacent(i, j)) body[k / 6] |= static_cast<unsigned char>(1u << (5 - k % 6));
    }
  }
  for (auto b : body) out.push_back(static_cast<char>(b + 63));
  return out;
}

}  // namespace tcoi
