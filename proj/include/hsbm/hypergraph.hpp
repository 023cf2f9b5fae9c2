#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace hsbm {

// A d-uniform hypergraph stored as its canonical edge list: each edge is a
// strictly increasing d-tuple of 0-based node ids, and edges are kept in
// lexicographic order with no duplicates. This is the chosen representation
// of the symmetric 0/1 adjacency tensor.
struct Hypergraph {
  std::int64_t n = 0;
  int d = 0;
  std::vector<std::int32_t> flat;  // edge_count * d node ids

  std::size_t edge_count() const { return d == 0 ? 0 : flat.size() / d; }
  std::span<const std::int32_t> edge(std::size_t e) const {
    return {flat.data() + e * d, static_cast<std::size_t>(d)};
  }
  void append_edge(std::span<const std::int32_t> nodes) {
    flat.insert(flat.end(), nodes.begin(), nodes.end());
  }
  bool contains(std::span<const std::int32_t> nodes) const;

  // True iff every edge is strictly increasing, node ids are in range, the
  // edge list is lexicographically sorted, and there are no duplicates.
  bool is_canonical() const;
  // Sorts the edge list lexicographically (tuples must already be sorted).
  void sort_edges();
};

// Text format: header "n d m", then m lines of d space-separated 1-based
// node ids. Labels files hold one 1-based community id per line.
void write_hypergraph(const std::string& path, const Hypergraph& g);
Hypergraph read_hypergraph(const std::string& path);
void write_labels(const std::string& path, const std::vector<int>& labels);
std::vector<int> read_labels(const std::string& path);

}  // namespace hsbm
