#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fibword/words.hpp"

namespace fibword {

// Undirected labeled tree on vertices 0..n-1.
struct Tree {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> degrees;

  // Builds from an edge list and validates (n-1 edges, connected, acyclic).
  static Tree from_edges(int n, std::vector<std::pair<int, int>> edges);

  // Throws std::invalid_argument if the structural invariants fail.
  void validate() const;

  std::vector<std::vector<int>> adjacency() const;
};

// Rooted expansion of F_n: a node with index k >= 3 has children k-1 and k-2;
// k in {1,2} are leaves. Node 0 is the root; nodes are stored in preorder.
struct DecompNode {
  int k;
  int parent;  // -1 for the root
  int left;    // -1 for leaves
  int right;
};

struct DecompositionTree {
  int order = 0;  // the F_n being expanded
  std::vector<DecompNode> nodes;
  std::vector<int> leaves;  // node ids in left-to-right order
  Tree underlying;
};

inline constexpr int kMaxDecompositionOrder = 28;  // 2*fib(28)-1 nodes

DecompositionTree decomposition_tree(int n);

// Concatenation of leaf labels left to right ('1' for k=1, '0' for k=2);
// equals fib_word(order) by the defining recursion.
Word leaf_word(const DecompositionTree& dt);

Tree path(int n);  // n >= 2
Tree star(int n);  // n >= 2: center 0 plus n-1 leaves

// Kragujevac tree: central vertex joined to the root of each branch B_k,
// where B_k is a root with k attached paths of length 2.
struct KragujevacSpec {
  std::vector<int> branch_sizes;  // each >= 1; at least 3 branches
};

Tree kragujevac(const KragujevacSpec& spec);

// Neighbor counts by degree comparison with v's own degree.
struct NeighborPartition {
  int smaller = 0;
  int equal = 0;
  int larger = 0;
};

NeighborPartition neighbor_partition(const Tree& t, int v);

bool is_path_tree(const Tree& t);
bool is_star_tree(const Tree& t);

inline constexpr int kEnumerationMinN = 2;
inline constexpr int kEnumerationMaxN = 9;

// Cayley count n^(n-2).
std::uint64_t labeled_tree_count(int n);

// Decodes a Prufer sequence (length n-2, symbols in 0..n-1) into `out`,
// reusing its buffers. Vertex n-1 is the last vertex standing.
void prufer_decode(std::span<const int> seq, int n, Tree& out);

std::vector<int> prufer_encode(const Tree& t);

// The i-th labeled tree in lexicographic Prufer order, i in [0, n^(n-2)).
Tree tree_from_prufer_index(int n, std::uint64_t index);

namespace detail {
inline void advance_odometer(std::vector<int>& seq, int n, bool& done) {
  int i = static_cast<int>(seq.size()) - 1;
  while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
  if (i < 0)
    done = true;
  else
    ++seq[i];
}
}  // namespace detail

// Visits every labeled tree on n vertices in lexicographic Prufer order.
// The Tree reference passed to fn is reused between calls.
template <class Fn>
void enumerate_trees(int n, Fn&& fn) {
  if (n < kEnumerationMinN || n > kEnumerationMaxN)
    throw std::domain_error("enumerate_trees: n in [2,9]");
  Tree t;
  if (n == 2) {
    prufer_decode({}, 2, t);
    fn(static_cast<const Tree&>(t));
    return;
  }
  std::vector<int> seq(static_cast<std::size_t>(n - 2), 0);
  bool done = false;
  while (!done) {
    prufer_decode(seq, n, t);
    fn(static_cast<const Tree&>(t));
    detail::advance_odometer(seq, n, done);
  }
}

// Block variant for concurrent sweeps: visits trees with Prufer index in
// [begin, end). fn receives (index, tree).
template <class Fn>
void enumerate_trees_range(int n, std::uint64_t begin, std::uint64_t end, Fn&& fn) {
  if (n < kEnumerationMinN || n > kEnumerationMaxN)
    throw std::domain_error("enumerate_trees_range: n in [2,9]");
  const std::uint64_t total = labeled_tree_count(n);
  if (begin > end || end > total) throw std::domain_error("enumerate_trees_range: bad block");
  if (n == 2) {
    Tree t;
    if (begin == 0 && end == 1) {
      prufer_decode({}, 2, t);
      fn(std::uint64_t{0}, static_cast<const Tree&>(t));
    }
    return;
  }
  std::vector<int> seq(static_cast<std::size_t>(n - 2), 0);
  std::uint64_t idx = begin;
  for (int pos = n - 3; pos >= 0; --pos) {
    seq[static_cast<std::size_t>(pos)] = static_cast<int>(idx % n);
    idx /= n;
  }
  Tree t;
  bool done = false;
  for (std::uint64_t i = begin; i < end && !done; ++i) {
    prufer_decode(seq, n, t);
    fn(i, static_cast<const Tree&>(t));
    detail::advance_odometer(seq, n, done);
  }
}

// Edge-list text serialization: vertex count on line 1, then one "u v" pair
// per line.
std::string serialize_edge_list(const Tree& t);

struct EdgeListParseError : std::runtime_error {
  EdgeListParseError(const std::string& what, int line)
      : std::runtime_error(what), line(line) {}
  int line;
};

Tree parse_edge_list(std::istream& in);

}  // namespace fibword
