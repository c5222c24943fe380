#include "tflab/graph6.hh"

#include <stdexcept>

namespace tflab {

namespace {

int g6_byte(std::string_view s, size_t i) {
  if (i >= s.size()) throw std::runtime_error("graph6: truncated input");
  unsigned char c = static_cast<unsigned char>(s[i]);
  if (c < 63 || c > 126) throw std::runtime_error("graph6: byte out of range 63..126");
  return c - 63;
}

}  // namespace

SimpleGraph parse_graph6(std::string_view text) {
  constexpr std::string_view header = ">>graph6<<";
  if (text.substr(0, header.size()) == header) text.remove_prefix(header.size());
  if (text.empty()) throw std::runtime_error("graph6: empty input");

  size_t pos = 0;
  long long n;
  if (text[0] != '~') {
    n = g6_byte(text, pos++);
  } else if (text.size() >= 2 && text[1] != '~') {
    ++pos;
    n = 0;
    for (int i = 0; i < 3; ++i) n = (n << 6) | g6_byte(text, pos++);
    if (n < 63) throw std::runtime_error("graph6: malformed size (non-minimal encoding)");
  } else {
    pos += 2;
    n = 0;
    for (int i = 0; i < 6; ++i) n = (n << 6) | g6_byte(text, pos++);
    if (n < 258048) throw std::runtime_error("graph6: malformed size (non-minimal encoding)");
  }
  if (n > 1'000'000) throw std::runtime_error("graph6: size too large for this tool");

  long long nbits = n * (n - 1) / 2;
  size_t nbytes = static_cast<size_t>((nbits + 5) / 6);
  if (text.size() != pos + nbytes)
    throw std::runtime_error(text.size() < pos + nbytes ? "graph6: truncated bit field"
                                                        : "graph6: trailing bytes");
  SimpleGraph g;
  g.n = static_cast<int>(n);
  g.adj.assign(g.n, {});
  long long bit = 0;
  int cur = 0, have = 0;
  for (int v = 1; v < g.n; ++v)
    for (int u = 0; u < v; ++u, ++bit) {
      if (have == 0) {
        cur = g6_byte(text, pos++);
        have = 6;
      }
      --have;
      if (cur >> have & 1) {
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
        g.m++;
      }
    }
  // neighbor lists come out sorted by construction order (u ascending, v ascending)
  return g;
}

std::string to_graph6(const SimpleGraph& g) {
  std::string out;
  long long n = g.n;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int sh = 12; sh >= 0; sh -= 6) out.push_back(static_cast<char>((n >> sh & 63) + 63));
  } else {
    out.push_back('~');
    out.push_back('~');
    for (int sh = 30; sh >= 0; sh -= 6) out.push_back(static_cast<char>((n >> sh & 63) + 63));
  }
  int cur = 0, have = 0;
  for (int v = 1; v < g.n; ++v)
    for (int u = 0; u < v; ++u) {
      cur = cur << 1 | (g.has_edge(u, v) ? 1 : 0);
      if (++have == 6) {
        out.push_back(static_cast<char>(cur + 63));
        cur = 0;
        have = 0;
      }
    }
  if (have) out.push_back(static_cast<char>((cur << (6 - have)) + 63));
  return out;
}

}  // namespace tflab
