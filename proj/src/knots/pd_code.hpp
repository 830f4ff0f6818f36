#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace torsionlab {

/// An oriented crossing. Labels name diagram edges (segments between
/// consecutive crossings). sign is +1 when the over strand crosses the
/// under strand from right to left.
struct Crossing {
  int under_in = 0;
  int under_out = 0;
  int over_in = 0;
  int over_out = 0;
  int sign = 1;
  friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// Oriented link diagram: crossings plus closed loops that meet no crossing.
struct LinkDiagram {
  std::vector<Crossing> crossings;
  int free_loops = 0;

  /// Components, each listed as its edges in traversal order, ordered by
  /// their smallest edge label and starting at that edge. Free loops are not
  /// listed.
  std::vector<std::vector<int>> traced_components() const;
  int component_count() const { return static_cast<int>(traced_components().size()) + free_loops; }
  int writhe() const;
  /// Distinct edge labels, sorted.
  std::vector<int> edges() const;
  friend bool operator==(const LinkDiagram&, const LinkDiagram&) = default;
};

/// Planar-diagram code. Either lines "X i j k l [+|-]" or groups
/// "X[i,j,k,l]", '#' comments. In X[i,j,k,l] the labels run counterclockwise
/// starting from the incoming under edge i; k is the outgoing under edge.
/// The over direction is inferred from the orientation of the edges; an
/// explicit sign must agree with it. Every label must occur exactly twice.
/// An empty code is the unknot. Throws MalformedCode, InconsistentArcs.
LinkDiagram parse_pd(std::string_view text);

/// Canonical "X[i,j,k,l]" form, one crossing per line, with the sign as a
/// trailing comment-free token: "X[i,j,k,l] +".
std::string print_pd(const LinkDiagram& d);

/// Swap over and under at every crossing.
LinkDiagram mirror(const LinkDiagram& d);

/// Band sum of two knots along their smallest edges.
LinkDiagram connected_sum(const LinkDiagram& a, const LinkDiagram& b);

}  // namespace torsionlab
