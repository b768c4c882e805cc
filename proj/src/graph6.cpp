#include "clawham/graph6.hpp"

#include "clawham/errors.hpp"

namespace clawham {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

int sextet(char c) {
  const auto byte = static_cast<unsigned char>(c);
  if (byte < 63 || byte > 126)
    throw Graph6Error(Graph6Error::Kind::kCharOutOfRange,
                      "graph6: byte " + std::to_string(byte) + " outside 63..126");
  return byte - 63;
}

}  // namespace

SimpleGraph parse_graph6(std::string_view text) {
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
    text.remove_suffix(1);
  if (text.empty()) throw Graph6Error(Graph6Error::Kind::kMalformedHeader, "graph6: empty input");

  std::size_t pos = 0;
  long n = 0;
  if (text[0] != '~') {
    n = sextet(text[0]);
    pos = 1;
  } else if (text.size() >= 2 && text[1] == '~') {
    // 8-byte form is only needed for n >= 258048.
    throw Graph6Error(Graph6Error::Kind::kTooLarge, "graph6: order exceeds 64");
  } else {
    if (text.size() < 4) throw Graph6Error(Graph6Error::Kind::kMalformedHeader, "graph6: short size field");
    for (int i = 1; i <= 3; ++i) n = (n << 6) | sextet(text[i]);
    if (n < 63) throw Graph6Error(Graph6Error::Kind::kMalformedHeader, "graph6: non-minimal size field");
    pos = 4;
  }
  if (n > kMaxVertices) throw Graph6Error(Graph6Error::Kind::kTooLarge, "graph6: order exceeds 64");

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t need = (bits + 5) / 6;
  const std::size_t have = text.size() - pos;
  if (have < need) throw Graph6Error(Graph6Error::Kind::kTruncated, "graph6: truncated bit vector");
  if (have > need) throw Graph6Error(Graph6Error::Kind::kTrailingData, "graph6: trailing bytes after bit vector");

  SimpleGraph g(static_cast<int>(n));
  std::size_t k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k) {
      const int chunk = sextet(text[pos + k / 6]);
      if ((chunk >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  for (std::size_t r = pos; r < text.size(); ++r) sextet(text[r]);
  return g;
}

std::string write_graph6(const SimpleGraph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int chunk = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + 63));
        chunk = filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + 63));
  return out;
}

}  // namespace clawham
