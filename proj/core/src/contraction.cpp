#include "finik/contraction.hpp"

#include <iostream>

namespace finik {

std::pair<CurveId, CurveId> LinkingTable::key(const CurveId& a, const CurveId& b)
{
    return a <= b ? std::make_pair(a, b) : std::make_pair(b, a);
}

void LinkingTable::set(const CurveId& a, const CurveId& b, const Rat& v)
{
    entries_[key(a, b)] = v;
}

bool LinkingTable::has(const CurveId& a, const CurveId& b) const
{
    return entries_.count(key(a, b)) != 0;
}

Rat LinkingTable::get(const CurveId& a, const CurveId& b) const
{
    auto it = entries_.find(key(a, b));
    if (it == entries_.end())
        throw lookup_error("missing linking entry for {" + a + ", " + b + "}");
    return it->second;
}

void DecoratedGraph::validate() const
{
    if (mate.size() % 3 != 0)
        throw structural_error("half-edge count must be a multiple of 3");
    for (int h = 0; h < static_cast<int>(mate.size()); ++h) {
        int m = mate[h];
        if (m == -1) {
            if (!leg_curve.count(h))
                throw structural_error("leg without a curve decoration");
            continue;
        }
        if (m < 0 || m >= static_cast<int>(mate.size()) || m == h || mate[m] != h)
            throw structural_error("mate is not an involution on matched half-edges");
        if (leg_curve.count(h))
            throw structural_error("matched half-edge carries a leg decoration");
    }
}

GraphCombination& GraphCombination::operator+=(const GraphCombination& o)
{
    terms.insert(terms.end(), o.terms.begin(), o.terms.end());
    return *this;
}

GraphCombination GraphCombination::operator*(const Rat& c) const
{
    GraphCombination r;
    if (c == 0)
        return r;
    r.terms = terms;
    for (auto& t : r.terms)
        t.coeff *= c;
    return r;
}

GraphCombination graph_product(const GraphCombination& a, const GraphCombination& b)
{
    GraphCombination r;
    for (const auto& ta : a.terms)
        for (const auto& tb : b.terms) {
            GraphCombination::Term t;
            t.coeff = ta.coeff * tb.coeff;
            t.factors = ta.factors;
            t.factors.insert(t.factors.end(), tb.factors.begin(), tb.factors.end());
            r.terms.push_back(std::move(t));
        }
    return r;
}

DecoratedGraph strut(const CurveId& a, const CurveId& b)
{
    DecoratedGraph g;
    g.struts.emplace_back(a, b);
    return g;
}

GraphCombination i_sigma(int genus, const CurveNamer& namer)
{
    if (genus < 0)
        throw input_error("negative genus");
    GraphCombination r;
    for (int j = 1; j <= genus; ++j)
        for (int k = 1; k <= genus; ++k) {
            DecoratedGraph g;
            // vertex 0: (x_j, y_j, e); vertex 1: (e, x_k+, y_k+)
            g.mate = {-1, -1, 3, 2, -1, -1};
            g.leg_curve[0] = namer("x", j);
            g.leg_curve[1] = namer("y", j);
            g.leg_curve[4] = namer("x+", k);
            g.leg_curve[5] = namer("y+", k);
            GraphCombination::Term t;
            t.coeff = 1;
            t.factors.push_back(std::move(g));
            r.terms.push_back(std::move(t));
        }
    return r;
}

GraphCombination tripods_from_trilinear(
    int basis_size, const std::map<std::tuple<int, int, int>, Rat>& trilinear,
    const std::vector<CurveId>& leg_names)
{
    if (static_cast<int>(leg_names.size()) != basis_size)
        throw input_error("leg name count does not match basis size");
    GraphCombination r;
    for (const auto& [idx, c] : trilinear) {
        auto [i, j, k] = idx;
        if (!(1 <= i && i < j && j < k && k <= basis_size))
            throw input_error("trilinear index out of range or not increasing");
        if (c == 0)
            continue;
        DecoratedGraph g;
        g.mate = {-1, -1, -1};
        g.leg_curve[0] = leg_names[i - 1];
        g.leg_curve[1] = leg_names[j - 1];
        g.leg_curve[2] = leg_names[k - 1];
        GraphCombination::Term t;
        t.coeff = c;
        t.factors.push_back(std::move(g));
        r.terms.push_back(std::move(t));
    }
    return r;
}

namespace {

struct MergedTerm {
    std::vector<int> mate;                             // vertex slots; -1 = leg
    std::map<int, CurveId> leg_curve;                  // slot -> curve
    std::vector<std::pair<CurveId, CurveId>> struts;
};

MergedTerm merge_factors(const GraphCombination::Term& t)
{
    MergedTerm m;
    for (const DecoratedGraph& f : t.factors) {
        f.validate();
        int off = static_cast<int>(m.mate.size());
        for (int x : f.mate)
            m.mate.push_back(x == -1 ? -1 : x + off);
        for (const auto& [h, c] : f.leg_curve)
            m.leg_curve[h + off] = c;
        m.struts.insert(m.struts.end(), f.struts.begin(), f.struts.end());
    }
    return m;
}

struct MatchingEval {
    const MergedTerm& g;
    const LinkingTable& lk;
    Rat term_coeff;
    DiagramVector& out;
    bool* warned_cycle;

    int nslots, nstruts, nports;
    std::vector<int> ports;       // port ids: slot legs then 2 per strut
    std::vector<int> match;       // port -> partner port (by port id)

    MatchingEval(const MergedTerm& gg, const LinkingTable& table, const Rat& coeff,
                 DiagramVector& o, bool* warned)
        : g(gg), lk(table), term_coeff(coeff), out(o), warned_cycle(warned)
    {
        nslots = static_cast<int>(g.mate.size());
        nstruts = static_cast<int>(g.struts.size());
        for (int h = 0; h < nslots; ++h)
            if (g.mate[h] == -1)
                ports.push_back(h);
        for (int s = 0; s < nstruts; ++s) {
            ports.push_back(nslots + 2 * s);
            ports.push_back(nslots + 2 * s + 1);
        }
        nports = static_cast<int>(ports.size());
        match.assign(nslots + 2 * nstruts, -1);
    }

    const CurveId& curve_of(int port) const
    {
        if (port < nslots)
            return g.leg_curve.at(port);
        int s = (port - nslots) / 2;
        return (port - nslots) % 2 == 0 ? g.struts[s].first : g.struts[s].second;
    }

    int strut_other_side(int port) const
    {
        return ((port - nslots) % 2 == 0) ? port + 1 : port - 1;
    }

    void emit()
    {
        // resolve strut chains into direct slot-to-slot edges
        JacobiDiagram d;
        d.mate = g.mate;
        std::vector<bool> strut_seen(2 * nstruts, false);
        for (int h = 0; h < nslots; ++h) {
            if (d.mate[h] != -1)
                continue;
            int cur = match[h];
            while (cur >= nslots) {
                strut_seen[cur - nslots] = true;
                int other = strut_other_side(cur);
                strut_seen[other - nslots] = true;
                cur = match[other];
            }
            d.mate[h] = cur;
            d.mate[cur] = h;
        }
        for (int i = 0; i < 2 * nstruts; ++i)
            if (!strut_seen[i]) {
                if (!*warned_cycle) {
                    std::cerr << "warning: closed strut cycle contributes 0\n";
                    *warned_cycle = true;
                }
                return;
            }
        if (d.has_loop())
            return;

        Rat factor = term_coeff;
        for (int p : ports)
            if (p < match[p])
                factor *= lk.get(curve_of(p), curve_of(match[p]));
        if (factor != 0)
            out.add(canonical_form(d).key, factor);
    }

    void recurse(std::size_t from)
    {
        while (from < ports.size() && match[ports[from]] != -1)
            ++from;
        if (from == ports.size()) {
            emit();
            return;
        }
        int a = ports[from];
        for (std::size_t j = from + 1; j < ports.size(); ++j) {
            int b = ports[j];
            if (match[b] != -1)
                continue;
            match[a] = b;
            match[b] = a;
            recurse(from + 1);
            match[a] = -1;
            match[b] = -1;
        }
    }
};

} // namespace

DiagramVector contract(const GraphCombination& g, const LinkingTable& lk, int n)
{
    if (n < 0)
        throw input_error("negative bracket degree");
    DiagramVector out;
    out.degree = n;
    bool warned = false;
    for (const auto& term : g.terms) {
        if (term.coeff == 0)
            continue;
        MergedTerm m = merge_factors(term);
        if (static_cast<int>(m.mate.size()) != 6 * n)
            continue; // wrong number of trivalent vertices
        MatchingEval ev(m, lk, term.coeff, out, &warned);
        if (ev.nports % 2 != 0)
            continue; // odd leg count
        ev.recurse(0);
    }
    return out;
}

} // namespace finik
