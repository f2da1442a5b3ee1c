#pragma once

#include "finik/diagram.hpp"

#include <optional>
#include <vector>

namespace finik {

// Standard diagrams with a fixed orientation.
JacobiDiagram theta_diagram();
JacobiDiagram tetrahedron_diagram();
JacobiDiagram ladder_diagram(); // degree-2 circle with two parallel rungs
JacobiDiagram disjoint_union(const JacobiDiagram& a, const JacobiDiagram& b);

// All loopless trivalent multigraphs with 2*degree vertices, one canonical
// representative each (including orientation-degenerate ones, whose key
// sign is 0).
std::vector<CanonicalResult> enumerate_diagrams(int degree);

// All three-term rewiring relations attached to the internal edges of the
// canonical degree-n diagrams (the relations DiagramSpace quotients by).
std::vector<DiagramVector> rewiring_relations(int degree);

// The degree-n part of the diagram algebra: span of canonical diagrams
// modulo the rewiring relations.  Provides reduction to a fixed basis and
// the degree-1/2 weight systems.
class DiagramSpace {
public:
    explicit DiagramSpace(int degree);

    int degree() const { return degree_; }
    int dimension() const { return static_cast<int>(basis_.size()); }
    const std::vector<CanonicalKey>& basis() const { return basis_; }

    // coordinates of v in the basis
    std::vector<Rat> reduce(const DiagramVector& v) const;

    // kill non-connected diagrams, then reduce
    std::vector<Rat> reduce_connected(const DiagramVector& v) const;

    // weight systems: degree 1 sends theta -> 2; degree 2 sends the
    // tetrahedron -> 1 and theta|_|theta -> 0
    Rat weight(const DiagramVector& v) const;

    // index of a named basis element, if present
    std::optional<int> theta_index() const { return theta_idx_; }
    std::optional<int> two_theta_index() const { return two_theta_idx_; }
    std::optional<int> tetrahedron_index() const { return tet_idx_; }

private:
    int degree_;
    std::vector<CanonicalKey> basis_;
    std::vector<bool> basis_connected_;
    // expansion of every spanning diagram in the basis
    std::map<CanonicalKey, std::vector<Rat>> expand_;
    std::map<CanonicalKey, JacobiDiagram> reps_;
    std::optional<int> theta_idx_, two_theta_idx_, tet_idx_;
};

} // namespace finik
