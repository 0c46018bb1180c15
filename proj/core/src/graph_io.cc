#include "kcover/graph_io.h"

#include <cctype>
#include <charconv>
#include <cstdint>
#include <sstream>
#include <vector>

#include "kcover/errors.h"

namespace kcover {

namespace {

constexpr int kMaxShortOrder = 62;
constexpr std::int64_t kMaxMediumOrder = 258047;
constexpr std::string_view kGraph6Header = ">>graph6<<";

void append_size(std::string& out, std::int64_t n) {
  if (n <= kMaxShortOrder) {
    out.push_back(static_cast<char>(n + 63));
    return;
  }
  const int groups = n <= kMaxMediumOrder ? 3 : 6;
  out.append(groups == 3 ? 1 : 2, '~');
  for (int i = groups - 1; i >= 0; --i) {
    out.push_back(static_cast<char>(((n >> (6 * i)) & 63) + 63));
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

std::string graph6_encode(const Graph& g) {
  const std::int64_t n = g.order();
  std::string out;
  append_size(out, n);
  int value = 0;
  int bits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      value = (value << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(value + 63));
        value = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((value << (6 - bits)) + 63));
  return out;
}

Graph graph6_decode(std::string_view text) {
  text = trim(text);
  if (text.starts_with(kGraph6Header)) text.remove_prefix(kGraph6Header.size());
  if (text.empty()) throw InputError("graph6: empty input");
  for (char c : text) {
    const int b = static_cast<unsigned char>(c);
    if (b < 63 || b > 126) {
      throw InputError("graph6: byte " + std::to_string(b) +
                       " outside the printable range 63..126");
    }
  }
  auto sextet = [&](std::size_t i) { return static_cast<unsigned char>(text[i]) - 63; };

  std::int64_t n = 0;
  std::size_t pos = 0;
  if (text[0] != '~') {
    n = sextet(0);
    pos = 1;
  } else {
    const bool big = text.size() > 1 && text[1] == '~';
    const std::size_t groups = big ? 6 : 3;
    const std::size_t start = big ? 2 : 1;
    if (text.size() < start + groups) throw InputError("graph6: truncated size header");
    for (std::size_t i = 0; i < groups; ++i) n = (n << 6) | sextet(start + i);
    pos = start + groups;
    if ((!big && n <= kMaxShortOrder) || (big && n <= kMaxMediumOrder)) {
      throw InputError("graph6: non-canonical size header");
    }
    if (n > (1 << 16)) throw InputError("graph6: vertex count too large");
  }

  const std::int64_t bit_count = n * (n - 1) / 2;
  const std::int64_t byte_count = (bit_count + 5) / 6;
  const auto available = static_cast<std::int64_t>(text.size() - pos);
  if (available < byte_count) throw InputError("graph6: truncated adjacency bitstring");
  if (available > byte_count) throw InputError("graph6: trailing bytes after bitstring");

  std::vector<Edge> edges;
  std::int64_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = sextet(pos + k / 6);
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  if (k % 6 != 0) {
    const int tail = sextet(pos + k / 6);
    if (tail & ((1 << (6 - k % 6)) - 1)) throw InputError("graph6: nonzero padding bits");
  }
  return Graph::from_edge_list(static_cast<int>(n), edges);
}

std::string edge_list_encode(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

namespace {

// Splits into whitespace-separated integer tokens, dropping '#' comments.
std::vector<std::vector<long long>> tokenize_lines(std::string_view text) {
  std::vector<std::vector<long long>> lines;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    std::vector<long long> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
      if (std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
        continue;
      }
      long long value = 0;
      auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
      const std::size_t used = ptr - (line.data() + i);
      if (ec != std::errc() || used == 0 ||
          (i + used < line.size() &&
           !std::isspace(static_cast<unsigned char>(line[i + used])))) {
        throw InputError("edge list: non-integer token on line " + std::to_string(line_no));
      }
      tokens.push_back(value);
      i += used;
    }
    if (!tokens.empty()) lines.push_back(std::move(tokens));
  }
  return lines;
}

}  // namespace

Graph edge_list_decode(std::string_view text) {
  const auto lines = tokenize_lines(text);
  if (lines.empty()) throw InputError("edge list: missing \"n m\" header");
  if (lines[0].size() != 2) throw InputError("edge list: header must be \"n m\"");
  const long long n = lines[0][0];
  const long long m = lines[0][1];
  if (n < 0 || m < 0 || n > (1 << 16)) throw InputError("edge list: bad header values");
  if (static_cast<long long>(lines.size()) - 1 != m) {
    throw InputError("edge list: header announces " + std::to_string(m) +
                     " edges, found " + std::to_string(lines.size() - 1));
  }
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].size() != 2) throw InputError("edge list: edge lines must be \"u v\"");
    const long long u = lines[i][0], v = lines[i][1];
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw InputError("edge list: endpoint out of range in edge " + std::to_string(i));
    }
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  return Graph::from_edge_list(static_cast<int>(n), edges);
}

Graph parse_graph(std::string_view text, GraphFormat format) {
  if (format == GraphFormat::kAuto) {
    format = GraphFormat::kGraph6;
    std::string_view rest = text;
    while (!rest.empty()) {
      const std::size_t eol = rest.find('\n');
      std::string_view line = trim(rest.substr(0, eol));
      rest.remove_prefix(eol == std::string_view::npos ? rest.size() : eol + 1);
      if (line.empty()) continue;
      if (line.front() == '#') {
        format = GraphFormat::kEdgeList;
        break;
      }
      std::size_t i = 0;
      while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) ++i;
      if (i > 0 && i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) {
        format = GraphFormat::kEdgeList;
      }
      break;
    }
  }
  return format == GraphFormat::kEdgeList ? edge_list_decode(text) : graph6_decode(text);
}

}  // namespace kcover
