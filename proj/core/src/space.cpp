#include "finik/space.hpp"

#include "finik/matrix.hpp"

#include <algorithm>

namespace finik {

JacobiDiagram theta_diagram()
{
    JacobiDiagram d;
    d.mate = {3, 4, 5, 0, 1, 2};
    return d;
}

JacobiDiagram tetrahedron_diagram()
{
    JacobiDiagram d;
    d.mate = {3, 6, 9, 0, 7, 10, 1, 4, 11, 2, 5, 8};
    return d;
}

JacobiDiagram ladder_diagram()
{
    JacobiDiagram d;
    d.mate = {3, 4, 8, 0, 1, 11, 9, 10, 2, 6, 7, 5};
    return d;
}

JacobiDiagram disjoint_union(const JacobiDiagram& a, const JacobiDiagram& b)
{
    JacobiDiagram d = a;
    int off = a.half_edges();
    for (int m : b.mate)
        d.mate.push_back(m + off);
    for (const auto& [h, lab] : b.edge_label)
        d.edge_label[h + off] = lab;
    return d;
}

namespace {

// loopless multigraph adjacency -> diagram; half-edges at each vertex in
// neighbour order, parallel edges paired first-with-first
JacobiDiagram diagram_from_adjacency(const std::vector<std::vector<int>>& adj)
{
    const int nv = static_cast<int>(adj.size());
    JacobiDiagram d;
    d.mate.assign(3 * nv, -1);
    std::vector<int> next_slot(nv, 0);
    for (int v = 0; v < nv; ++v)
        for (int w = v + 1; w < nv; ++w)
            for (int m = 0; m < adj[v][w]; ++m) {
                int hv = 3 * v + next_slot[v]++;
                int hw = 3 * w + next_slot[w]++;
                d.mate[hv] = hw;
                d.mate[hw] = hv;
            }
    return d;
}

void enumerate_adjacency(std::vector<std::vector<int>>& adj, std::vector<int>& deg,
                         int v, int w, std::vector<std::vector<std::vector<int>>>& out)
{
    const int nv = static_cast<int>(adj.size());
    if (v == nv) {
        out.push_back(adj);
        return;
    }
    if (w == nv) {
        if (deg[v] != 3)
            return;
        enumerate_adjacency(adj, deg, v + 1, v + 2, out);
        return;
    }
    int cap = std::min(3 - deg[v], 3 - deg[w]);
    for (int m = 0; m <= cap; ++m) {
        adj[v][w] = adj[w][v] = m;
        deg[v] += m;
        deg[w] += m;
        enumerate_adjacency(adj, deg, v, w + 1, out);
        deg[v] -= m;
        deg[w] -= m;
        adj[v][w] = adj[w][v] = 0;
    }
}

int max_edge_multiplicity(const JacobiDiagram& d)
{
    std::map<std::pair<int, int>, int> mult;
    int best = 0;
    for (int h = 0; h < d.half_edges(); ++h) {
        int m = d.mate[h];
        if (h < m)
            best = std::max(best, ++mult[{d.vertex_of(h), d.vertex_of(m)}]);
    }
    return best;
}

// within-vertex successor in the cyclic order
int next_slot_cyclic(int h) { return 3 * (h / 3) + (h % 3 + 1) % 3; }

// rewire the edge (he, hw): legs p,q move to he's vertex, r,s to hw's
JacobiDiagram rewired(const JacobiDiagram& d, int he, int hw, int p, int q, int r, int s)
{
    int u = d.vertex_of(he), w = d.vertex_of(hw);
    std::vector<int> pi(d.half_edges());
    for (int h = 0; h < d.half_edges(); ++h)
        pi[h] = h;
    pi[p] = 3 * u;
    pi[q] = 3 * u + 1;
    pi[he] = 3 * u + 2;
    pi[hw] = 3 * w;
    pi[r] = 3 * w + 1;
    pi[s] = 3 * w + 2;
    JacobiDiagram out;
    out.mate.assign(d.half_edges(), -1);
    for (int h = 0; h < d.half_edges(); ++h)
        out.mate[pi[h]] = pi[d.mate[h]];
    return out;
}

// the three-term rewiring relation attached to an internal edge
DiagramVector edge_relation(const JacobiDiagram& d, int he)
{
    int hw = d.mate[he];
    int a = next_slot_cyclic(he), b = next_slot_cyclic(a);
    int c = next_slot_cyclic(hw), e = next_slot_cyclic(c);
    DiagramVector rel;
    rel.degree = d.degree();
    rel.add(canonical_form(rewired(d, he, hw, a, b, c, e)).key, Rat(1));
    rel.add(canonical_form(rewired(d, he, hw, b, c, a, e)).key, Rat(1));
    rel.add(canonical_form(rewired(d, he, hw, c, a, b, e)).key, Rat(1));
    return rel;
}

} // namespace

std::vector<CanonicalResult> enumerate_diagrams(int degree)
{
    if (degree < 0)
        throw input_error("negative diagram degree");
    const int nv = 2 * degree;
    std::vector<std::vector<int>> adj(nv, std::vector<int>(nv, 0));
    std::vector<int> deg(nv, 0);
    std::vector<std::vector<std::vector<int>>> mats;
    if (nv == 0)
        mats.push_back(adj);
    else
        enumerate_adjacency(adj, deg, 0, 1, mats);
    std::map<std::string, CanonicalResult> seen;
    for (const auto& m : mats) {
        CanonicalResult cr = canonical_form(diagram_from_adjacency(m));
        seen.emplace(cr.key.bytes, std::move(cr));
    }
    std::vector<CanonicalResult> out;
    out.reserve(seen.size());
    for (auto& [bytes, cr] : seen)
        out.push_back(std::move(cr));
    return out;
}

std::vector<DiagramVector> rewiring_relations(int degree)
{
    std::vector<DiagramVector> rels;
    for (const auto& cr : enumerate_diagrams(degree)) {
        const JacobiDiagram& d = cr.canonical;
        for (int he = 0; he < d.half_edges(); ++he) {
            int hw = d.mate[he];
            if (he < hw && d.vertex_of(he) != d.vertex_of(hw))
                rels.push_back(edge_relation(d, he));
        }
    }
    return rels;
}

DiagramSpace::DiagramSpace(int degree) : degree_(degree)
{
    std::vector<CanonicalResult> all = enumerate_diagrams(degree);

    std::vector<CanonicalKey> span;
    for (const auto& cr : all)
        if (cr.key.sign != 0) {
            CanonicalKey k = cr.key;
            k.sign = 1;
            span.push_back(k);
            reps_[k] = cr.canonical;
        }

    // eliminate high-multiplicity diagrams first so that low-multiplicity
    // ones survive into the basis
    std::stable_sort(span.begin(), span.end(), [&](const CanonicalKey& x, const CanonicalKey& y) {
        int mx = max_edge_multiplicity(reps_.at(x));
        int my = max_edge_multiplicity(reps_.at(y));
        if (mx != my)
            return mx > my;
        return x < y;
    });
    std::map<CanonicalKey, int> col_of;
    for (std::size_t i = 0; i < span.size(); ++i)
        col_of[span[i]] = static_cast<int>(i);

    std::vector<DiagramVector> rels = rewiring_relations(degree);

    RationalMatrix m(static_cast<int>(rels.size()), static_cast<int>(span.size()));
    for (std::size_t r = 0; r < rels.size(); ++r)
        for (const auto& [k, c] : rels[r].terms) {
            auto it = col_of.find(k);
            if (it == col_of.end())
                throw consistency_error("relation term outside the spanning set");
            m.at(static_cast<int>(r), it->second) = c;
        }
    std::vector<int> pivots = rref(m);

    std::vector<bool> is_pivot(span.size(), false);
    for (int p : pivots)
        is_pivot[p] = true;
    std::vector<int> basis_col;
    for (std::size_t c = 0; c < span.size(); ++c)
        if (!is_pivot[c])
            basis_col.push_back(static_cast<int>(c));
    std::sort(basis_col.begin(), basis_col.end(),
              [&](int x, int y) { return span[x] < span[y]; });

    basis_.clear();
    std::map<int, int> basis_idx_of_col;
    for (int c : basis_col) {
        basis_idx_of_col[c] = static_cast<int>(basis_.size());
        basis_.push_back(span[c]);
    }
    basis_connected_.clear();
    for (const auto& k : basis_)
        basis_connected_.push_back(diagram_connected(reps_.at(k)));

    for (int c : basis_col) {
        std::vector<Rat> v(basis_.size(), Rat(0));
        v[basis_idx_of_col.at(c)] = 1;
        expand_[span[c]] = std::move(v);
    }
    for (std::size_t pi = 0; pi < pivots.size(); ++pi) {
        std::vector<Rat> v(basis_.size(), Rat(0));
        for (int c : basis_col)
            v[basis_idx_of_col.at(c)] = -m.at(static_cast<int>(pi), c);
        expand_[span[pivots[pi]]] = std::move(v);
    }

    for (std::size_t i = 0; i < basis_.size(); ++i) {
        const JacobiDiagram& rep = reps_.at(basis_[i]);
        if (degree_ == 1)
            theta_idx_ = static_cast<int>(i);
        if (degree_ == 2) {
            if (count_theta_components(rep) == 2)
                two_theta_idx_ = static_cast<int>(i);
            else if (diagram_connected(rep) && max_edge_multiplicity(rep) == 1)
                tet_idx_ = static_cast<int>(i);
        }
    }
}

std::vector<Rat> DiagramSpace::reduce(const DiagramVector& v) const
{
    if (v.degree != degree_)
        throw dimension_error("diagram degree mismatch");
    std::vector<Rat> out(basis_.size(), Rat(0));
    for (const auto& [k, c] : v.terms) {
        auto it = expand_.find(k);
        if (it == expand_.end())
            throw consistency_error("diagram outside the spanning set");
        for (std::size_t i = 0; i < out.size(); ++i)
            out[i] += c * it->second[i];
    }
    return out;
}

std::vector<Rat> DiagramSpace::reduce_connected(const DiagramVector& v) const
{
    DiagramVector filtered;
    filtered.degree = v.degree;
    for (const auto& [k, c] : v.terms) {
        auto it = reps_.find(k);
        if (it == reps_.end())
            throw consistency_error("diagram outside the spanning set");
        if (diagram_connected(it->second))
            filtered.terms.emplace(k, c);
    }
    std::vector<Rat> coords = reduce(filtered);
    for (std::size_t i = 0; i < coords.size(); ++i)
        if (coords[i] != 0 && !basis_connected_[i])
            throw consistency_error("connected projection left a disconnected term");
    return coords;
}

Rat DiagramSpace::weight(const DiagramVector& v) const
{
    std::vector<Rat> coords = reduce(v);
    if (degree_ == 1) {
        if (!theta_idx_)
            throw consistency_error("theta missing from the degree-1 basis");
        return Rat(2) * coords[*theta_idx_];
    }
    if (degree_ == 2) {
        if (!tet_idx_ || !two_theta_idx_)
            throw consistency_error("unexpected degree-2 basis");
        return coords[*tet_idx_];
    }
    throw capability_error("weight system available in degrees 1 and 2 only");
}

} // namespace finik
