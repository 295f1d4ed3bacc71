#pragma once

// q-nary graphs of order m (directed de Bruijn graphs) and the orbit <-> word
// correspondences: primitive periodic orbits are Lyndon words, primitive
// pseudo orbits are strictly decreasing Lyndon factorizations.

#include <cstdint>
#include <vector>

#include "qnary/words.hpp"

namespace qnary::debruijn {

using words::Letter;
using words::Word;
using Index = std::uint64_t;

struct GraphBudget {
  std::uint64_t max_edges = std::uint64_t{1} << 26;
};

/// Vertices are the q^m words of length m, edges the q^{m+1} words of length
/// m+1. Indices are base-q encodings with the most significant letter first,
/// so edge a_1..a_{m+1} leaves vertex a_1..a_m and enters a_2..a_{m+1}.
class QNaryGraph {
 public:
  /// Throws std::invalid_argument for q < 2 or m < 1 and std::range_error
  /// when q^{m+1} exceeds the budget.
  QNaryGraph(unsigned q, unsigned m, GraphBudget budget = {});

  unsigned alphabet_size() const noexcept { return q_; }
  unsigned order() const noexcept { return m_; }
  Index vertex_count() const noexcept { return vertices_; }
  Index edge_count() const noexcept { return vertices_ * q_; }

  Index origin(Index edge) const noexcept { return edge / q_; }
  Index terminus(Index edge) const noexcept { return edge % vertices_; }

  /// Outgoing edge v.c and incoming edge b.v at vertex v.
  Index out_edge(Index vertex, Letter last) const noexcept { return vertex * q_ + last; }
  Index in_edge(Index vertex, Letter first) const noexcept { return first * vertices_ + vertex; }

  /// Appending a letter to an edge's terminus: the successor edge.
  Index successor(Index edge, Letter next) const noexcept { return terminus(edge) * q_ + next; }

  Index vertex_index(const Word& w) const;
  Index edge_index(const Word& w) const;
  Word vertex_word(Index v) const;
  Word edge_word(Index e) const;

 private:
  Word decode(Index value, unsigned length) const;
  Index encode(const Word& w, unsigned length) const;

  unsigned q_;
  unsigned m_;
  Index vertices_;
};

QNaryGraph build_graph(unsigned q, unsigned m, GraphBudget budget = {});

/// A primitive periodic orbit, identified by the Lyndon representative of
/// its cyclic word.
struct PeriodicOrbit {
  Word word;

  std::size_t topological_length() const noexcept { return word.size(); }

  /// Edges read as cyclic windows of m+1 letters; window i starts at letter i.
  /// Words shorter than m wrap as many times as needed.
  std::vector<Index> edge_sequence(const QNaryGraph& g) const;

  /// Vertex i is the origin of edge i; the cycle is closed, so the returned
  /// vector has topological_length() + 1 entries with front() == back().
  std::vector<Index> vertex_cycle(const QNaryGraph& g) const;

  friend bool operator==(const PeriodicOrbit&, const PeriodicOrbit&) = default;
};

/// Throws std::invalid_argument unless `w` is a Lyndon word.
PeriodicOrbit orbit_from_word(Word w);

/// One orbit per Lyndon word of length l, in lexicographic order.
std::vector<PeriodicOrbit> primitive_periodic_orbits(unsigned q, std::size_t length);

/// A set of distinct primitive periodic orbits. Stored in strictly
/// decreasing lexicographic order of their words, which is also the order of
/// the corresponding standard decomposition.
struct PseudoOrbit {
  std::vector<PeriodicOrbit> orbits;

  std::size_t orbit_count() const noexcept { return orbits.size(); }
  std::size_t topological_length() const noexcept;

  /// The word whose standard decomposition is this pseudo orbit.
  std::vector<Letter> concatenation() const;
  /// "{1,01,0}"
  std::string to_string() const;

  friend bool operator==(const PseudoOrbit&, const PseudoOrbit&) = default;
};

/// All primitive pseudo orbits of total topological length n, ordered by
/// their concatenated word. Throws std::range_error when Str_q(n) exceeds the
/// budget.
std::vector<PseudoOrbit> enumerate_primitive_pseudo_orbits(unsigned q, std::size_t n,
                                                           words::EnumerationBudget budget = {});

/// Per-edge traversal counts across all orbits of `po`.
std::vector<std::uint32_t> edge_multiplicities(const PseudoOrbit& po, const QNaryGraph& g);

}  // namespace qnary::debruijn
