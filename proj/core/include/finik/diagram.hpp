#pragma once

#include "finik/rational.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace finik {

struct structural_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Uni-less Jacobi diagram: trivalent graph with a cyclic orientation at
// each vertex.  Vertex v owns half-edges 3v, 3v+1, 3v+2 and the cyclic
// order is the listed order.  mate is a fixed-point-free involution on
// half-edges.  Multi-edges are allowed; simple loops (mate pairing two
// half-edges of one vertex) are representable but are zero in the diagram
// space.  degree = vertices/2.
struct JacobiDiagram {
    std::vector<int> mate;

    int half_edges() const { return static_cast<int>(mate.size()); }
    int vertices() const { return half_edges() / 3; }
    int degree() const { return vertices() / 2; }
    int vertex_of(int h) const { return h / 3; }

    bool has_loop() const;
    void validate() const; // throws structural_error

    // Optional edge labels for the labelled-diagram enumerations
    // (0 = unlabelled); keyed by the smaller half-edge of each edge.
    std::map<int, int> edge_label;
};

// Canonical key of the underlying unoriented diagram plus the sign
// relating the input orientation to the canonical representative.
// sign 0 <=> the diagram vanishes by AS (odd-flip automorphism or loop).
struct CanonicalKey {
    std::string bytes;
    int sign = 1;

    bool operator<(const CanonicalKey& o) const { return bytes < o.bytes; }
    bool operator==(const CanonicalKey& o) const { return bytes == o.bytes; }
    std::string hex() const;
};

struct CanonicalResult {
    CanonicalKey key;
    long aut_count = 0;       // automorphisms of the unoriented labelled diagram
    JacobiDiagram canonical;  // representative with the canonical labeling
};

// Brute-force canonicalization over vertex orderings, rotations and
// orientation flips, with lexicographic pruning.  Deterministic.
CanonicalResult canonical_form(const JacobiDiagram& d);

// Exact linear combination of canonical degree-n diagrams.
struct DiagramVector {
    int degree = 0;
    std::map<CanonicalKey, Rat> terms;

    void add(const CanonicalKey& k, const Rat& c);
    DiagramVector& operator+=(const DiagramVector& o);
    DiagramVector operator*(const Rat& c) const;
    bool operator==(const DiagramVector& o) const
    {
        return degree == o.degree && terms == o.terms;
    }
    bool is_zero() const { return terms.empty(); }
};

bool diagram_connected(const JacobiDiagram& d);

// components homeomorphic to theta (two vertices joined by three edges)
int count_theta_components(const JacobiDiagram& d);

} // namespace finik
