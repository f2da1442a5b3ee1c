#include "finik/diagram.hpp"

#include <algorithm>

namespace finik {

bool JacobiDiagram::has_loop() const
{
    for (int h = 0; h < half_edges(); ++h)
        if (mate[h] != h && vertex_of(mate[h]) == vertex_of(h))
            return true;
    return false;
}

void JacobiDiagram::validate() const
{
    if (half_edges() % 6 != 0)
        throw structural_error("half-edge count must be a multiple of 6");
    for (int h = 0; h < half_edges(); ++h) {
        int m = mate[h];
        if (m < 0 || m >= half_edges() || m == h)
            throw structural_error("mate is not a fixed-point-free involution");
        if (mate[m] != h)
            throw structural_error("mate is not an involution");
    }
}

std::string CanonicalKey::hex() const
{
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (unsigned char c : bytes) {
        out.push_back(digits[c >> 4]);
        out.push_back(digits[c & 0xf]);
    }
    return out;
}

namespace {

int label_of_slot(const JacobiDiagram& d, int h)
{
    if (d.edge_label.empty())
        return 0;
    int key = std::min(h, d.mate[h]);
    auto it = d.edge_label.find(key);
    return it == d.edge_label.end() ? 0 : it->second;
}

struct CanonSearch {
    const JacobiDiagram& d;
    int nv;
    std::vector<int> perm;       // canonical position -> original vertex
    std::vector<int> cfg;        // config per canonical position (0..5)
    std::vector<int> pos_of;     // original vertex -> canonical position (-1 unplaced)
    std::vector<int> best;       // best complete encoding
    bool have_best = false;
    long best_hits = 0;
    bool parity_even = false, parity_odd = false;
    std::vector<int> best_perm, best_cfg;

    explicit CanonSearch(const JacobiDiagram& diag)
        : d(diag), nv(diag.vertices()), pos_of(diag.vertices(), -1) {}

    // canonical slot of original half-edge h, given current placement
    int slot_of(int h) const
    {
        int ov = h / 3, l = h % 3;
        int p = pos_of[ov];
        if (p < 0)
            return -1;
        int c = cfg[p], r = c % 3, s = c / 3;
        // invert the local map: canonical local i holds original local
        // (i+r)%3 (no flip) or (r-i+3)%3 (flip)
        int i = s == 0 ? (l - r + 3) % 3 : (r - l + 3) % 3;
        return 3 * p + i;
    }

    int orig_half_at(int p, int i) const
    {
        int c = cfg[p], r = c % 3, s = c / 3;
        int l = s == 0 ? (i + r) % 3 : (r - i + 3) % 3;
        return 3 * perm[p] + l;
    }

    // lower-bound encoding for the first k placed vertices; entries:
    // 2*s -> mate slot (or 3k bound), 2*s+1 -> edge label
    void bound_encoding(int k, std::vector<int>& enc) const
    {
        enc.resize(static_cast<std::size_t>(6) * k);
        for (int p = 0; p < k; ++p)
            for (int i = 0; i < 3; ++i) {
                int h = orig_half_at(p, i);
                int ms = slot_of(d.mate[h]);
                enc[2 * (3 * p + i)] = ms >= 0 ? ms : 3 * k;
                enc[2 * (3 * p + i) + 1] = label_of_slot(d, h);
            }
    }

    // lexicographic compare of bound vs best prefix; <0 smaller, 0 equal
    // prefix, >0 larger
    int cmp_prefix(const std::vector<int>& enc) const
    {
        for (std::size_t i = 0; i < enc.size(); ++i) {
            if (enc[i] < best[i])
                return -1;
            if (enc[i] > best[i])
                return 1;
        }
        return 0;
    }

    void dfs(int k)
    {
        if (k == nv) {
            std::vector<int> enc;
            bound_encoding(k, enc);
            int flips = 0;
            for (int p = 0; p < nv; ++p)
                flips += cfg[p] / 3;
            if (!have_best || enc < best) {
                best = enc;
                have_best = true;
                best_hits = 1;
                parity_even = flips % 2 == 0;
                parity_odd = flips % 2 == 1;
                best_perm = perm;
                best_cfg = cfg;
            } else if (enc == best) {
                ++best_hits;
                (flips % 2 == 0 ? parity_even : parity_odd) = true;
            }
            return;
        }
        for (int ov = 0; ov < nv; ++ov) {
            if (pos_of[ov] >= 0)
                continue;
            perm.push_back(ov);
            cfg.push_back(0);
            pos_of[ov] = k;
            for (int c = 0; c < 6; ++c) {
                cfg[k] = c;
                std::vector<int> enc;
                bound_encoding(k + 1, enc);
                if (have_best && cmp_prefix(enc) > 0)
                    continue;
                dfs(k + 1);
            }
            pos_of[ov] = -1;
            perm.pop_back();
            cfg.pop_back();
        }
    }
};

} // namespace

CanonicalResult canonical_form(const JacobiDiagram& d)
{
    d.validate();
    CanonicalResult res;
    if (d.vertices() == 0) {
        res.key.bytes = "";
        res.key.sign = 1;
        res.aut_count = 1;
        return res;
    }
    CanonSearch search(d);
    search.dfs(0);

    std::string bytes;
    bytes.reserve(search.best.size());
    for (int v : search.best)
        bytes.push_back(static_cast<char>(v));
    res.key.bytes = std::move(bytes);
    res.aut_count = search.best_hits;

    if (d.has_loop() || (search.parity_even && search.parity_odd)) {
        res.key.sign = 0;
    } else {
        int flips = 0;
        for (int c : search.best_cfg)
            flips += c / 3;
        res.key.sign = flips % 2 == 0 ? 1 : -1;
    }

    // rebuild the canonical representative from the best assignment
    JacobiDiagram canon;
    canon.mate.assign(d.mate.size(), -1);
    {
        CanonSearch tmp(d);
        tmp.perm = search.best_perm;
        tmp.cfg = search.best_cfg;
        for (int p = 0; p < search.nv; ++p)
            tmp.pos_of[tmp.perm[p]] = p;
        for (int p = 0; p < search.nv; ++p)
            for (int i = 0; i < 3; ++i) {
                int h = tmp.orig_half_at(p, i);
                int s = 3 * p + i;
                int ms = tmp.slot_of(d.mate[h]);
                canon.mate[s] = ms;
                int lab = label_of_slot(d, h);
                if (lab != 0 && s < ms)
                    canon.edge_label[s] = lab;
            }
    }
    res.canonical = std::move(canon);
    return res;
}

bool diagram_connected(const JacobiDiagram& d)
{
    if (d.vertices() == 0)
        return true;
    std::vector<bool> seen(d.vertices(), false);
    std::vector<int> stack{0};
    seen[0] = true;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int i = 0; i < 3; ++i) {
            int w = d.vertex_of(d.mate[3 * v + i]);
            if (!seen[w]) {
                seen[w] = true;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == d.vertices();
}

int count_theta_components(const JacobiDiagram& d)
{
    std::vector<int> comp(d.vertices(), -1);
    int ncomp = 0;
    for (int v0 = 0; v0 < d.vertices(); ++v0) {
        if (comp[v0] >= 0)
            continue;
        std::vector<int> stack{v0};
        comp[v0] = ncomp;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int i = 0; i < 3; ++i) {
                int w = d.vertex_of(d.mate[3 * v + i]);
                if (comp[w] < 0) {
                    comp[w] = ncomp;
                    stack.push_back(w);
                }
            }
        }
        ++ncomp;
    }
    int thetas = 0;
    for (int c = 0; c < ncomp; ++c) {
        std::vector<int> verts;
        for (int v = 0; v < d.vertices(); ++v)
            if (comp[v] == c)
                verts.push_back(v);
        if (verts.size() != 2)
            continue;
        // theta: all three edges of each vertex go to the other vertex
        bool theta = true;
        for (int v : verts)
            for (int i = 0; i < 3; ++i)
                if (d.vertex_of(d.mate[3 * v + i]) == v)
                    theta = false;
        if (theta)
            ++thetas;
    }
    return thetas;
}

void DiagramVector::add(const CanonicalKey& k, const Rat& c)
{
    if (c == 0 || k.sign == 0)
        return;
    CanonicalKey base = k;
    Rat coeff = c;
    if (base.sign < 0) {
        coeff = -coeff;
        base.sign = 1;
    }
    Rat& slot = terms[base];
    slot += coeff;
    if (slot == 0)
        terms.erase(base);
}

DiagramVector& DiagramVector::operator+=(const DiagramVector& o)
{
    for (const auto& [k, c] : o.terms)
        add(k, c);
    return *this;
}

DiagramVector DiagramVector::operator*(const Rat& c) const
{
    DiagramVector r;
    r.degree = degree;
    if (c == 0)
        return r;
    for (const auto& [k, v] : terms)
        r.terms[k] = v * c;
    return r;
}

} // namespace finik
