#pragma once

#include <string>
#include <string_view>

#include "linram/error.hpp"
#include "linram/graph.hpp"

namespace linram {

/// graph6 encoding (upper triangle, column-major, 6 bits per byte offset by 63).
template <std::size_t W>
std::string to_graph6(const BasicGraph<W>& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  }
  int acc = 0, bits = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = bits = 0;
      }
    }
  if (bits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - bits))));
  return out;
}

template <std::size_t W = 1>
BasicGraph<W> from_graph6(std::string_view s) {
  if (s.starts_with(">>graph6<<")) s.remove_prefix(10);
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
  if (s.empty()) throw parse_error("graph6: empty string");
  auto value = [&](std::size_t i) {
    const int c = static_cast<unsigned char>(s[i]);
    if (c < 63 || c > 126) throw parse_error("graph6: byte out of range");
    return c - 63;
  };
  std::size_t pos;
  int n;
  if (static_cast<unsigned char>(s[0]) == 126) {
    if (s.size() >= 2 && static_cast<unsigned char>(s[1]) == 126)
      throw parse_error("graph6: orders above 258047 are not supported");
    if (s.size() < 4) throw parse_error("graph6: truncated order header");
    n = (value(1) << 12) | (value(2) << 6) | value(3);
    pos = 4;
  } else {
    n = value(0);
    pos = 1;
  }
  if (n > BasicGraph<W>::max_order)
    throw size_limit_error("graph6: order " + std::to_string(n) + " exceeds capacity");
  const std::size_t pairs = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
  const std::size_t bytes = (pairs + 5) / 6;
  if (s.size() != pos + bytes)
    throw parse_error("graph6: expected " + std::to_string(bytes) + " data bytes, got " +
                      std::to_string(s.size() - pos));
  BasicGraph<W> g(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = value(pos + k / 6);
      if ((byte >> (5 - static_cast<int>(k % 6))) & 1) g.add_edge(i, j);
    }
  for (std::size_t r = pairs; r < bytes * 6; ++r)
    if ((value(pos + r / 6) >> (5 - static_cast<int>(r % 6))) & 1)
      throw parse_error("graph6: nonzero padding bits");
  return g;
}

}  // namespace linram
