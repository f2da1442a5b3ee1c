#pragma once

#include "finik/diagram.hpp"

#include <functional>
#include <tuple>
#include <utility>

namespace finik {

using CurveId = std::string;

struct lookup_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Symmetric table of linking numbers.  Lookups of absent pairs are hard
// errors, never implicit zeros.
class LinkingTable {
public:
    void set(const CurveId& a, const CurveId& b, const Rat& v);
    bool has(const CurveId& a, const CurveId& b) const;
    Rat get(const CurveId& a, const CurveId& b) const; // throws lookup_error

    const std::map<std::pair<CurveId, CurveId>, Rat>& entries() const { return entries_; }

private:
    static std::pair<CurveId, CurveId> key(const CurveId& a, const CurveId& b);
    std::map<std::pair<CurveId, CurveId>, Rat> entries_;
};

// Uni-trivalent graph: trivalent vertices as in JacobiDiagram but with
// unmatched half-edges ("legs", mate -1) decorated by curves, plus bare
// strut components (an edge with two decorated legs and no vertex).
struct DecoratedGraph {
    std::vector<int> mate;
    std::map<int, CurveId> leg_curve;
    std::vector<std::pair<CurveId, CurveId>> struts;

    int trivalent_vertices() const { return static_cast<int>(mate.size()) / 3; }
    void validate() const;
};

// Formal linear combination of disjoint unions of decorated graphs.
struct GraphCombination {
    struct Term {
        Rat coeff;
        std::vector<DecoratedGraph> factors;
    };
    std::vector<Term> terms;

    GraphCombination& operator+=(const GraphCombination& o);
    GraphCombination operator*(const Rat& c) const;
};

// bilinear disjoint union
GraphCombination graph_product(const GraphCombination& a, const GraphCombination& b);

DecoratedGraph strut(const CurveId& a, const CurveId& b);

// role is one of "x", "y", "x+", "y+"; j is 1-based
using CurveNamer = std::function<CurveId(const std::string& role, int j)>;

// Sum over (j,k) of the two-vertex graph with legs (x_j, y_j) at one
// vertex and (x_k+, y_k+) at the other, joined by one internal edge.
// Cyclic orders (x_j, y_j, e) and (e, x_k+, y_k+): the calibration that
// makes the bracket expand to lk(x,x+)lk(y,y+) - lk(x,y+)lk(y,x+) pairs.
GraphCombination i_sigma(int genus, const CurveNamer& namer);

// Sum over i<j<k of I(i,j,k) times the one-vertex tripod with ordered
// legs (names[i], names[j], names[k]).
GraphCombination tripods_from_trilinear(
    int basis_size, const std::map<std::tuple<int, int, int>, Rat>& trilinear,
    const std::vector<CurveId>& leg_names);

// The contraction bracket: sum over perfect matchings of the legs of the
// product of linking numbers of glued pairs times the glued diagram.
// Terms whose trivalent vertex count differs from 2n, or with an odd leg
// count, contribute 0.  Glued diagrams with simple loops vanish; closed
// strut cycles contribute 0 (with a warning to stderr).
DiagramVector contract(const GraphCombination& g, const LinkingTable& lk, int n);

} // namespace finik
