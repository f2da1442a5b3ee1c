#include "finik/surgery.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace finik {

namespace {

long long small_int(const Int& v, const char* what)
{
    if (v > Int(1000000) || v < Int(-1000000))
        throw input_error(std::string(what) + " out of supported range");
    return v.convert_to<long long>();
}

Int rat_floor(const Rat& x)
{
    Int n = rat_num(x), d = rat_den(x);
    Int q = n / d;
    if (n < 0 && n % d != 0)
        --q;
    return q;
}

// ((x)) = x - floor(x) - 1/2 off the integers, 0 on them
Rat sawtooth(const Rat& x)
{
    Rat frac = x - Rat(rat_floor(x));
    if (frac == 0)
        return 0;
    return frac - Rat(1, 2);
}

Rat rat_pow(const Rat& base, int e)
{
    Rat r = 1;
    for (int i = 0; i < e; ++i)
        r *= base;
    return r;
}

Rat factorial(int n)
{
    Rat r = 1;
    for (int i = 2; i <= n; ++i)
        r *= i;
    return r;
}

} // namespace

void SurgerySpec::validate() const
{
    if (p == 0)
        throw input_error("surgery coefficient must have p != 0");
    if (gcd(abs(p), abs(q)) != 1)
        throw input_error("surgery coefficient p/q must be in lowest terms");
}

MilnorTensor::MilnorTensor(int n, std::map<std::tuple<int, int, int>, Rat> values)
    : n_(n), values_(std::move(values))
{
    if (n_ < 1)
        throw input_error("MilnorTensor degree must be positive");
    for (const auto& [key, v] : values_) {
        auto [i, j, k] = key;
        if (!(1 <= i && i < j && j < k && k <= 3 * n_))
            throw input_error("MilnorTensor keys must satisfy 1 <= i < j < k <= 3n");
        (void)v;
    }
}

Rat MilnorTensor::get(int i, int j, int k) const
{
    if (i == j || j == k || i == k)
        return 0;
    int sign = 1;
    // sort the triple by adjacent transpositions, tracking the sign
    if (i > j) {
        std::swap(i, j);
        sign = -sign;
    }
    if (j > k) {
        std::swap(j, k);
        sign = -sign;
    }
    if (i > j) {
        std::swap(i, j);
        sign = -sign;
    }
    if (k > 3 * n_ || i < 1)
        throw input_error("MilnorTensor index out of range");
    auto it = values_.find({i, j, k});
    if (it == values_.end())
        return 0;
    return sign > 0 ? it->second : -it->second;
}

void IntersectionLinkTable::set(int i, int j, int k, int l, const Rat& v)
{
    if (!(i < j && k < l))
        throw input_error("IntersectionLinkTable entries are keyed by ascending pairs");
    std::pair<int, int> a{i, j}, b{k, l};
    entries_[{std::min(a, b), std::max(a, b)}] = v;
}

Rat IntersectionLinkTable::get(int i, int j, int k, int l) const
{
    if (i == j || k == l)
        return 0;
    int sign = 1;
    if (i > j) {
        std::swap(i, j);
        sign = -sign;
    }
    if (k > l) {
        std::swap(k, l);
        sign = -sign;
    }
    std::pair<int, int> a{i, j}, b{k, l};
    auto it = entries_.find({std::min(a, b), std::max(a, b)});
    if (it == entries_.end())
        throw lookup_error("missing intersection-linking entry (" + std::to_string(i) + "," +
                           std::to_string(j) + ")x(" + std::to_string(k) + "," +
                           std::to_string(l) + ")");
    return sign > 0 ? it->second : -it->second;
}

Rat dedekind_sum(const Int& p, const Int& q)
{
    if (q < 1)
        throw input_error("dedekind_sum requires q >= 1");
    long long qq = small_int(q, "dedekind q");
    Rat s = 0;
    for (long long k = 1; k < qq; ++k)
        s += sawtooth(Rat(k, q)) * sawtooth(Rat(k * p, q));
    return s;
}

Rat lambda_lens(const Int& p_in, const Int& q_in)
{
    if (p_in == 0)
        throw input_error("lens space requires p != 0");
    if (gcd(abs(p_in), abs(q_in)) != 1)
        throw input_error("lens space parameters must be coprime");
    if (q_in == 0)
        return 0; // L(+-1, 0) = S^3
    Int p = p_in, q = q_in;
    if (q < 0) {
        p = -p;
        q = -q;
    }
    Rat qp = Rat(q) / Rat(p);
    Rat v = qp * (Rat(-1, 24) - (Rat(p * p) + 1) / (Rat(24) * Rat(q * q)));
    v += Rat(sign_of(p * q), 8);
    v += dedekind_sum(p, q) / 2;
    return v;
}

Rat lambda_surgery(const Rat& lambdaM, const Rat& lambda_prime_K, const SurgerySpec& s)
{
    s.validate();
    return lambdaM + s.ratio() * lambda_prime_K + lambda_lens(s.p, s.q);
}

Rat lambda2_integral_surgery(const Rat& lambda2M, const Rat& lambda2_second,
                             const Rat& w3, const Int& r)
{
    return lambda2_integral_surgery_with_C(lambda2M, lambda2_second, w3, r, 0);
}

Rat lambda2_integral_surgery_with_C(const Rat& lambda2M, const Rat& lambda2_second,
                                    const Rat& w3, const Int& r, const Rat& C)
{
    Rat rr(r);
    return lambda2M + lambda2_second * rr * rr + w3 * rr + C;
}

namespace {

CurveNamer surface_namer(int surface)
{
    return [surface](const std::string& role, int j) {
        return "s" + std::to_string(surface) + "." + role.substr(0, 1) + std::to_string(j) +
               (role.size() == 2 ? "+" : "");
    };
}

} // namespace

DiagramVector bracket_boundary(int n, const std::vector<int>& genus,
                               const LinkingTable& lk,
                               const std::vector<SurgerySpec>& coeffs)
{
    if (n < 1)
        throw input_error("bracket degree must be positive");
    if (genus.size() != coeffs.size())
        throw dimension_error("one surgery coefficient per surface expected");
    const int r = static_cast<int>(genus.size());
    Rat scale = Rat(1) / rat_pow(2, n);
    for (const SurgerySpec& c : coeffs) {
        c.validate();
        scale *= -c.ratio();
    }
    DiagramVector zero;
    zero.degree = n;
    if (r > n)
        return zero;

    GraphCombination g;
    g.terms.push_back({Rat(1), {}});
    for (int i = 0; i < r; ++i) {
        if (genus[i] < 0)
            throw input_error("negative genus");
        g = graph_product(g, i_sigma(genus[i], surface_namer(i + 1)));
    }
    if (g.terms.empty())
        return zero;
    return contract(g, lk, n) * scale;
}

DiagramVector bracket_lp(int n, const std::vector<HandlebodyDatum>& data,
                         const LinkingTable& lk)
{
    if (n < 1)
        throw input_error("bracket degree must be positive");
    if (static_cast<int>(data.size()) != 2 * n)
        throw dimension_error("bracket_lp expects exactly 2n handlebody data");
    GraphCombination g;
    g.terms.push_back({Rat(1), {}});
    for (const HandlebodyDatum& d : data) {
        if (static_cast<int>(d.leg_names.size()) != d.basis_size)
            throw dimension_error("one leg name per basis element expected");
        g = graph_product(g, tripods_from_trilinear(d.basis_size, d.trilinear, d.leg_names));
    }
    return contract(g, lk, n);
}

namespace {

// label of the edge owning slot s in a fully or partially edge-labelled diagram
int slot_label(const JacobiDiagram& d, int s)
{
    int m = d.mate[s];
    int key = std::min(s, m);
    auto it = d.edge_label.find(key);
    return it == d.edge_label.end() ? 0 : it->second;
}

std::vector<std::pair<int, int>> edge_list(const JacobiDiagram& d)
{
    std::vector<std::pair<int, int>> edges;
    for (int h = 0; h < d.half_edges(); ++h)
        if (h < d.mate[h])
            edges.push_back({h, d.mate[h]});
    return edges;
}

int next_slot(int h)
{
    int v = h / 3;
    return 3 * v + (h - 3 * v + 1) % 3;
}

} // namespace

DiagramVector bracket_as(int n, const MilnorTensor& mu,
                         const std::vector<SurgerySpec>& coeffs)
{
    if (n < 1 || n > 2)
        throw capability_error("bracket_as available for degrees 1 and 2 only");
    if (mu.n() != n)
        throw dimension_error("MilnorTensor degree mismatch");
    if (static_cast<int>(coeffs.size()) != 3 * n)
        throw dimension_error("bracket_as expects exactly 3n surgery coefficients");
    Rat scale = 1;
    for (const SurgerySpec& c : coeffs) {
        c.validate();
        scale *= c.ratio();
    }

    DiagramVector out;
    out.degree = n;
    for (const CanonicalResult& rep : enumerate_diagrams(n)) {
        if (rep.key.sign == 0)
            continue; // vanishes by antisymmetry
        const JacobiDiagram base = rep.canonical;
        const auto edges = edge_list(base);
        const int ne = static_cast<int>(edges.size()); // always 3n
        const Rat theta_div = Rat(1) / rat_pow(2, count_theta_components(base));

        std::vector<int> labels(ne);
        std::iota(labels.begin(), labels.end(), 1);
        std::set<std::string> seen;
        do {
            JacobiDiagram d = base;
            for (int e = 0; e < ne; ++e)
                d.edge_label[edges[e].first] = labels[e];
            if (!seen.insert(canonical_form(d).key.bytes).second)
                continue;
            Rat mu_gamma = 1;
            for (int v = 0; v < d.vertices() && mu_gamma != 0; ++v)
                mu_gamma *= mu.get(slot_label(d, 3 * v), slot_label(d, 3 * v + 1),
                                   slot_label(d, 3 * v + 2));
            if (mu_gamma != 0)
                out.add(CanonicalKey{rep.key.bytes, 1}, mu_gamma * theta_div);
        } while (std::next_permutation(labels.begin(), labels.end()));
    }
    return out * scale;
}

DiagramVector bracket_as_mu0(int n, const IntersectionLinkTable& ell,
                             const std::vector<SurgerySpec>& coeffs)
{
    if (n < 1 || n > 2)
        throw capability_error("bracket_as_mu0 available for degrees 1 and 2 only");
    if (static_cast<int>(coeffs.size()) != 2 * n)
        throw dimension_error("bracket_as_mu0 expects exactly 2n surgery coefficients");
    Rat scale = 1;
    for (const SurgerySpec& c : coeffs) {
        c.validate();
        scale *= c.ratio();
    }

    DiagramVector out;
    out.degree = n;
    for (const CanonicalResult& rep : enumerate_diagrams(n)) {
        if (rep.key.sign == 0)
            continue;
        const JacobiDiagram base = rep.canonical;
        const auto edges = edge_list(base);
        const int ne = static_cast<int>(edges.size());
        const int nv = base.vertices();

        std::set<std::string> seen;
        // choose the unlabelled edges: a perfect matching on the vertices
        for (int mask = 0; mask < (1 << ne); ++mask) {
            std::vector<int> cover(nv, 0);
            int picked = 0;
            for (int e = 0; e < ne; ++e)
                if (mask & (1 << e)) {
                    ++picked;
                    ++cover[edges[e].first / 3];
                    ++cover[edges[e].second / 3];
                }
            if (picked != n ||
                std::any_of(cover.begin(), cover.end(), [](int c) { return c != 1; }))
                continue;

            std::vector<int> labelled;
            for (int e = 0; e < ne; ++e)
                if (!(mask & (1 << e)))
                    labelled.push_back(e);
            std::vector<int> labels(labelled.size());
            std::iota(labels.begin(), labels.end(), 1);
            do {
                JacobiDiagram d = base;
                for (std::size_t i = 0; i < labelled.size(); ++i)
                    d.edge_label[edges[labelled[i]].first] = labels[i];
                CanonicalResult cr = canonical_form(d);
                if (!seen.insert(cr.key.bytes).second)
                    continue;
                Rat factor = 1;
                for (int e = 0; e < ne && factor != 0; ++e) {
                    if (!(mask & (1 << e)))
                        continue;
                    auto end_pair = [&](int h) {
                        int a = slot_label(d, next_slot(h));
                        int b = slot_label(d, next_slot(next_slot(h)));
                        return std::pair<int, int>{a, b};
                    };
                    auto [i, j] = end_pair(edges[e].first);
                    auto [k, l] = end_pair(edges[e].second);
                    factor *= ell.get(i, j, k, l);
                }
                if (factor != 0)
                    out.add(CanonicalKey{rep.key.bytes, 1}, factor / Rat(cr.aut_count));
            } while (std::next_permutation(labels.begin(), labels.end()));
        }
    }
    return out * scale;
}

DiagramVector y_leading(int n, const SeifertData& s)
{
    if (n < 1 || n > 2)
        throw capability_error("y_leading available for degrees 1 and 2 only");
    s.validate();
    Rat scale = Rat(1) / (factorial(n) * rat_pow(2, n) * rat_pow(Rat(s.d), 2 * n));
    return stacked_bracket(s, n) * scale;
}

DiagramVector y_subleading(int n, const SurgerySpec& s, const DiagramVector& Zn_Ln,
                           const DiagramVector& Zn_after_surgery)
{
    if (n < 1)
        throw input_error("degree must be positive");
    if (Zn_Ln.degree != n || Zn_after_surgery.degree != n)
        throw dimension_error("both brackets must have degree n");
    s.validate();
    DiagramVector out = Zn_Ln * (Rat(n - 1, 2) + s.ratio());
    out += Zn_after_surgery;
    Rat scale = ((n - 1) % 2 == 0 ? Rat(1) : Rat(-1)) / factorial(n - 1);
    return out * scale;
}

Rat y2_singular_polynomial(const SingularLinkingMatrix& m, const Rat& r)
{
    m.validate();
    if (m.k != 2)
        throw capability_error("y2_singular_polynomial requires exactly two double points");
    const Rat l11 = m.ell.at(0, 0), l12 = m.ell.at(0, 1), l22 = m.ell.at(1, 1);
    Rat closed = ((Rat(5) * l12 * l12 + Rat(2) * l11 * l22) * r * r - l12 * r) / 2;

    // independent route through the contraction engine with the genus-one
    // surfaces (l_i, m_i) around the two double points
    auto lc = [](int i) { return "l" + std::to_string(i); };
    auto mc = [](int i) { return "m" + std::to_string(i); };
    LinkingTable t;
    for (int i = 1; i <= 2; ++i) {
        Rat lii = m.ell.at(i - 1, i - 1);
        t.set(lc(i), lc(i) + "+", -lii);
        t.set(lc(i), mc(i) + "+", 1);
        t.set(mc(i), lc(i) + "+", 0);
        t.set(mc(i), mc(i) + "+", -r);
    }
    for (const std::string& a : {lc(1), lc(1) + "+"})
        for (const std::string& b : {lc(2), lc(2) + "+"})
            t.set(a, b, l12);
    for (const std::string& a : {mc(1), mc(1) + "+"})
        for (const std::string& b : {mc(2), mc(2) + "+"})
            t.set(a, b, -r);
    for (int i = 1; i <= 2; ++i)
        for (const std::string& a : {lc(i), lc(i) + "+"})
            for (const std::string& b : {mc(3 - i), mc(3 - i) + "+"})
                t.set(a, b, 0);

    CurveNamer namer1 = [&](const std::string& role, int) {
        return (role[0] == 'x' ? lc(1) : mc(1)) + (role.size() == 2 ? "+" : "");
    };
    CurveNamer namer2 = [&](const std::string& role, int) {
        return (role[0] == 'x' ? lc(2) : mc(2)) + (role.size() == 2 ? "+" : "");
    };
    GraphCombination g = graph_product(i_sigma(1, namer1), i_sigma(1, namer2));
    Rat engine = diagram_space(2).weight(contract(g, t, 2)) / 4;
    if (engine != closed)
        throw consistency_error("singular polynomial: engine and closed form disagree");
    return closed;
}

} // namespace finik
