#pragma once

// graph6 reader and writer (McKay's format): a size header followed by the
// upper triangle of the adjacency matrix in column order, packed six bits per
// byte with an offset of 63.

#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lambda_lab/graph.hpp"

namespace lambda_lab {

class Graph6Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline constexpr int kG6Offset = 63;
inline constexpr std::string_view kG6Header = ">>graph6<<";

inline int g6_value(char c) {
  const int v = static_cast<unsigned char>(c) - kG6Offset;
  if (v < 0 || v > 63)
    throw Graph6Error(std::string("character out of range: code ") +
                      std::to_string(static_cast<unsigned char>(c)));
  return v;
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ' || s.back() == '\t'))
    s.remove_suffix(1);
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  return s;
}

}  // namespace detail

inline Graph parse_graph6(std::string_view text) {
  text = detail::trim(text);
  if (text.starts_with(detail::kG6Header)) text.remove_prefix(detail::kG6Header.size());
  if (text.empty()) throw Graph6Error("empty graph6 string");

  std::size_t pos = 0;
  long n = 0;
  if (text[0] != '~') {
    n = detail::g6_value(text[0]);
    pos = 1;
  } else if (text.size() >= 2 && text[1] == '~') {
    throw Graph6Error("malformed header: 8-byte size form exceeds the vertex limit");
  } else {
    if (text.size() < 4) throw Graph6Error("malformed header: truncated size field");
    for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | detail::g6_value(text[i]);
    if (n < 63) throw Graph6Error("malformed header: long size form used for n < 63");
    pos = 4;
  }
  if (n > kMaxVertices)
    throw Graph6Error("graph has " + std::to_string(n) + " vertices; the limit is " +
                      std::to_string(kMaxVertices));

  const std::size_t bit_count = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t byte_count = (bit_count + 5) / 6;
  const std::string_view body = text.substr(pos);
  if (body.size() < byte_count)
    throw Graph6Error("truncated bit vector: expected " + std::to_string(byte_count) + " bytes, got " +
                      std::to_string(body.size()));
  if (body.size() > byte_count)
    throw Graph6Error("trailing characters after bit vector");

  std::vector<VertexSet> rows(n, 0);
  std::size_t k = 0;
  for (VertexId j = 1; j < n; ++j) {
    for (VertexId i = 0; i < j; ++i, ++k) {
      const int chunk = detail::g6_value(body[k / 6]);
      if ((chunk >> (5 - k % 6)) & 1) {
        rows[i] |= bits::single(j);
        rows[j] |= bits::single(i);
      }
    }
  }
  return Graph::from_rows(std::move(rows));
}

inline std::string write_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + detail::kG6Offset));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + detail::kG6Offset));
    out.push_back(static_cast<char>(((n >> 6) & 63) + detail::kG6Offset));
    out.push_back(static_cast<char>((n & 63) + detail::kG6Offset));
  }
  int chunk = 0;
  int filled = 0;
  for (VertexId j = 1; j < n; ++j) {
    for (VertexId i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + detail::kG6Offset));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + detail::kG6Offset));
  return out;
}

// One graph per non-blank line; a leading ">>graph6<<" header is stripped.
// Errors carry the 1-based line number.
inline std::vector<Graph> read_graph6_lines(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (detail::trim(line).empty()) continue;
    try {
      out.push_back(parse_graph6(line));
    } catch (const Graph6Error& e) {
      throw Graph6Error("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace lambda_lab
