#pragma once

#include <cstdint>
#include <vector>

#include "arcwalk/graph.hpp"
#include "arcwalk/types.hpp"

namespace arcwalk {

/// +-1 assignment on arcs. An arc with sign -1 is "marked"; an arc and its
/// inverse are never both marked.
class SignFunction {
 public:
  /// All arcs +1 (no marked arc; the walk reduces to the unsigned one).
  static SignFunction all_positive(const Graph& g);

  /// Marks exactly the given arc.
  static SignFunction single_arc(const Graph& g, Arc a);
  static SignFunction single_arc(const Graph& g, int arc_index);

  /// Marks the given arc indices. SignConstraintViolation if a marked arc's
  /// inverse is also marked; UnknownArc if an index is out of range.
  static SignFunction from_marked(const Graph& g,
                                  const std::vector<int>& marked_arcs);

  double sign(int arc_index) const {
    return negative_[static_cast<std::size_t>(arc_index)] ? -1.0 : 1.0;
  }
  bool is_marked(int arc_index) const {
    return negative_[static_cast<std::size_t>(arc_index)] != 0;
  }

  /// Marked arc indices, ascending.
  const std::vector<int>& marked() const { return marked_; }

  int arc_count() const { return static_cast<int>(negative_.size()); }

 private:
  explicit SignFunction(int arc_count)
      : negative_(static_cast<std::size_t>(arc_count), 0) {}

  std::vector<std::uint8_t> negative_;
  std::vector<int> marked_;
};

/// Oracle matrix O_sigma: diagonal with entries sigma(a).
RealMatrix oracle_matrix(const Graph& g, const SignFunction& s);

/// Signed boundary matrix d_sigma (V x A): sigma(a)/sqrt(deg x) iff x = t(a).
/// Equals d * O_sigma exactly.
RealMatrix signed_boundary(const Graph& g, const SignFunction& s);

}  // namespace arcwalk
