#include "qnary/debruijn.hpp"

#include <algorithm>
#include <stdexcept>

namespace qnary::debruijn {

QNaryGraph::QNaryGraph(unsigned q, unsigned m, GraphBudget budget) : q_(q), m_(m), vertices_(0) {
  if (q < 2) throw std::invalid_argument("q-nary graph needs q >= 2");
  if (m < 1) throw std::invalid_argument("q-nary graph needs order m >= 1");
  Count edges;
  try {
    edges = checked_pow(q, m + 1);
  } catch (const std::range_error&) {
    throw std::range_error("graph size budget exceeded");
  }
  if (edges > static_cast<Count>(budget.max_edges))
    throw std::range_error("graph size budget exceeded: q^(m+1) = " + to_string(edges));
  vertices_ = static_cast<Index>(edges / q);
}

Index QNaryGraph::encode(const Word& w, unsigned length) const {
  if (w.alphabet_size() != q_) throw std::invalid_argument("word alphabet does not match graph");
  if (w.size() != length) throw std::invalid_argument("word has wrong length for this graph");
  Index value = 0;
  for (Letter a : w.letters()) value = value * q_ + a;
  return value;
}

Word QNaryGraph::decode(Index value, unsigned length) const {
  std::vector<Letter> letters(length);
  for (unsigned i = length; i-- > 0;) {
    letters[i] = static_cast<Letter>(value % q_);
    value /= q_;
  }
  return Word(std::move(letters), q_);
}

Index QNaryGraph::vertex_index(const Word& w) const { return encode(w, m_); }
Index QNaryGraph::edge_index(const Word& w) const { return encode(w, m_ + 1); }

Word QNaryGraph::vertex_word(Index v) const {
  if (v >= vertex_count()) throw std::out_of_range("vertex index out of range");
  return decode(v, m_);
}

Word QNaryGraph::edge_word(Index e) const {
  if (e >= edge_count()) throw std::out_of_range("edge index out of range");
  return decode(e, m_ + 1);
}

QNaryGraph build_graph(unsigned q, unsigned m, GraphBudget budget) { return QNaryGraph(q, m, budget); }

std::vector<Index> PeriodicOrbit::edge_sequence(const QNaryGraph& g) const {
  if (word.alphabet_size() != g.alphabet_size()) throw std::invalid_argument("orbit alphabet does not match graph");
  const std::size_t n = word.size();
  std::vector<Index> edges;
  edges.reserve(n);
  Index e = 0;
  for (unsigned j = 0; j <= g.order(); ++j) e = e * g.alphabet_size() + word[j % n];
  edges.push_back(e);
  for (std::size_t i = 1; i < n; ++i) edges.push_back(g.successor(edges.back(), word[(i + g.order()) % n]));
  return edges;
}

std::vector<Index> PeriodicOrbit::vertex_cycle(const QNaryGraph& g) const {
  std::vector<Index> vertices;
  for (Index e : edge_sequence(g)) vertices.push_back(g.origin(e));
  vertices.push_back(vertices.front());
  return vertices;
}

PeriodicOrbit orbit_from_word(Word w) {
  if (w.empty() || !words::is_lyndon(w.letters()))
    throw std::invalid_argument("orbit_from_word: '" + w.to_string() + "' is not a Lyndon word");
  return PeriodicOrbit{std::move(w)};
}

std::vector<PeriodicOrbit> primitive_periodic_orbits(unsigned q, std::size_t length) {
  std::vector<PeriodicOrbit> out;
  for (Word& w : words::lyndon_words(q, length)) out.push_back(PeriodicOrbit{std::move(w)});
  return out;
}

std::size_t PseudoOrbit::topological_length() const noexcept {
  std::size_t total = 0;
  for (const auto& o : orbits) total += o.topological_length();
  return total;
}

std::vector<Letter> PseudoOrbit::concatenation() const {
  std::vector<Letter> out;
  for (const auto& o : orbits) out.insert(out.end(), o.word.letters().begin(), o.word.letters().end());
  return out;
}

std::string PseudoOrbit::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    if (i > 0) out += ",";
    out += orbits[i].word.to_string();
  }
  return out + "}";
}

namespace {

// Picks Lyndon words in strictly decreasing order (increasing index into a
// descending list) until the lengths sum to the target.
void choose_decreasing(const std::vector<Word>& descending, std::size_t start, std::size_t remaining,
                       std::vector<std::size_t>& chosen, std::vector<PseudoOrbit>& out) {
  if (remaining == 0) {
    PseudoOrbit po;
    po.orbits.reserve(chosen.size());
    for (std::size_t idx : chosen) po.orbits.push_back(PeriodicOrbit{descending[idx]});
    out.push_back(std::move(po));
    return;
  }
  for (std::size_t i = start; i < descending.size(); ++i) {
    if (descending[i].size() > remaining) continue;
    chosen.push_back(i);
    choose_decreasing(descending, i + 1, remaining - descending[i].size(), chosen, out);
    chosen.pop_back();
  }
}

}  // namespace

std::vector<PseudoOrbit> enumerate_primitive_pseudo_orbits(unsigned q, std::size_t n,
                                                           words::EnumerationBudget budget) {
  const Count expected = words::str_count(q, n);
  if (expected > static_cast<Count>(budget.max_items))
    throw std::range_error("enumeration budget exceeded: Str_q(n) = " + to_string(expected));

  std::vector<Word> descending;
  for (std::size_t l = 1; l <= n; ++l)
    for (Word& w : words::lyndon_words(q, l)) descending.push_back(std::move(w));
  std::sort(descending.begin(), descending.end(), [](const Word& a, const Word& b) {
    return words::compare_letters(a.letters(), b.letters()) == std::strong_ordering::greater;
  });

  std::vector<PseudoOrbit> out;
  out.reserve(static_cast<std::size_t>(expected));
  std::vector<std::size_t> chosen;
  choose_decreasing(descending, 0, n, chosen, out);

  std::vector<std::pair<std::vector<Letter>, std::size_t>> keys;
  keys.reserve(out.size());
  for (std::size_t i = 0; i < out.size(); ++i) keys.emplace_back(out[i].concatenation(), i);
  std::sort(keys.begin(), keys.end());
  std::vector<PseudoOrbit> sorted;
  sorted.reserve(out.size());
  for (const auto& [key, idx] : keys) sorted.push_back(std::move(out[idx]));
  return sorted;
}

std::vector<std::uint32_t> edge_multiplicities(const PseudoOrbit& po, const QNaryGraph& g) {
  std::vector<std::uint32_t> counts(g.edge_count(), 0);
  for (const auto& orbit : po.orbits)
    for (Index e : orbit.edge_sequence(g)) ++counts[e];
  return counts;
}

}  // namespace qnary::debruijn
