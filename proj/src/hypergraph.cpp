#include "hsbm/hypergraph.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hsbm {

namespace {

bool lex_less(std::span<const std::int32_t> a, std::span<const std::int32_t> b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

[[noreturn]] void io_fail(const std::string& what, const std::string& path) {
  throw std::runtime_error(what + ": " + path);
}

}  // namespace

bool Hypergraph::contains(std::span<const std::int32_t> nodes) const {
  std::size_t lo = 0, hi = edge_count();
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    const auto e = edge(mid);
    if (std::equal(e.begin(), e.end(), nodes.begin(), nodes.end())) return true;
    if (lex_less(e, nodes))
      lo = mid + 1;
    else
      hi = mid;
  }
  return false;
}

bool Hypergraph::is_canonical() const {
  for (std::size_t e = 0; e < edge_count(); ++e) {
    const auto t = edge(e);
    for (int j = 0; j < d; ++j) {
      if (t[j] < 0 || t[j] >= n) return false;
      if (j > 0 && t[j] <= t[j - 1]) return false;
    }
    if (e > 0 && !lex_less(edge(e - 1), t)) return false;
  }
  return true;
}

void Hypergraph::sort_edges() {
  const std::size_t m = edge_count();
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return lex_less(edge(a), edge(b));
  });
  std::vector<std::int32_t> sorted;
  sorted.reserve(flat.size());
  for (const std::size_t e : order) {
    const auto t = edge(e);
    sorted.insert(sorted.end(), t.begin(), t.end());
  }
  flat = std::move(sorted);
}

void write_hypergraph(const std::string& path, const Hypergraph& g) {
  std::ofstream out(path);
  if (!out) io_fail("cannot open hypergraph file for writing", path);
  out << g.n << ' ' << g.d << ' ' << g.edge_count() << '\n';
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto t = g.edge(e);
    for (int j = 0; j < g.d; ++j) out << (j ? " " : "") << t[j] + 1;
    out << '\n';
  }
  if (!out) io_fail("failed writing hypergraph file", path);
}

Hypergraph read_hypergraph(const std::string& path) {
  std::ifstream in(path);
  if (!in) io_fail("cannot open hypergraph file", path);
  Hypergraph g;
  std::size_t m = 0;
  if (!(in >> g.n >> g.d >> m)) io_fail("malformed hypergraph header", path);
  if (g.d < 2) io_fail("hypergraph order must be >= 2 in", path);
  g.flat.reserve(m * g.d);
  for (std::size_t e = 0; e < m; ++e) {
    for (int j = 0; j < g.d; ++j) {
      std::int64_t v;
      if (!(in >> v) || v < 1 || v > g.n)
        io_fail("malformed hypergraph edge in", path);
      g.flat.push_back(static_cast<std::int32_t>(v - 1));
    }
  }
  if (!g.is_canonical()) io_fail("hypergraph file is not canonical", path);
  return g;
}

void write_labels(const std::string& path, const std::vector<int>& labels) {
  std::ofstream out(path);
  if (!out) io_fail("cannot open labels file for writing", path);
  for (const int z : labels) out << z + 1 << '\n';
  if (!out) io_fail("failed writing labels file", path);
}

std::vector<int> read_labels(const std::string& path) {
  std::ifstream in(path);
  if (!in) io_fail("cannot open labels file", path);
  std::vector<int> labels;
  std::int64_t v;
  while (in >> v) {
    if (v < 1) io_fail("labels must be 1-based positive in", path);
    labels.push_back(static_cast<int>(v - 1));
  }
  return labels;
}

}  // namespace hsbm
