#include "finik/knot.hpp"

namespace finik {

namespace {

long long small_int(const Int& v, const char* what)
{
    if (v > Int(1000000) || v < Int(-1000000))
        throw input_error(std::string(what) + " out of supported range");
    return v.convert_to<long long>();
}

} // namespace

void SeifertData::validate() const
{
    if (genus < 0)
        throw input_error("negative genus");
    if (V.rows() != 2 * genus || V.cols() != 2 * genus)
        throw dimension_error("Seifert matrix must be 2g x 2g");
    if (d < 1)
        throw input_error("order d must be positive");
    if (b < 1)
        throw input_error("framing b must be positive");
    if (h1 <= 0)
        throw input_error("h1 must be positive");
    for (int i = 0; i < 2 * genus; ++i)
        for (int j = 0; j < 2 * genus; ++j) {
            // symplectic form J in the (x1,y1,...,xg,yg) ordering
            Rat jij = 0;
            if (i / 2 == j / 2)
                jij = (i % 2 == 0 && j == i + 1) ? Rat(1) : (j % 2 == 0 && i == j + 1) ? Rat(-1) : Rat(0);
            if (V.at(i, j) - V.at(j, i) != jij)
                throw input_error("V - V^T is not the symplectic form");
        }
}

void SingularLinkingMatrix::validate() const
{
    if (k < 0 || ell.rows() != k || ell.cols() != k)
        throw dimension_error("linking matrix must be k x k");
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (ell.at(i, j) != ell.at(j, i))
                throw input_error("linking matrix must be symmetric");
}

void PretzelParams::validate() const
{
    for (const Int* v : {&x, &y, &z})
        if (*v % 2 == 0)
            throw input_error("pretzel parameters must be odd");
}

const DiagramSpace& diagram_space(int degree)
{
    switch (degree) {
    case 1: {
        static const DiagramSpace s(1);
        return s;
    }
    case 2: {
        static const DiagramSpace s(2);
        return s;
    }
    case 3: {
        static const DiagramSpace s(3);
        return s;
    }
    default:
        throw capability_error("diagram space available for degrees 1..3 only");
    }
}

Laurent alexander_from_seifert(const SeifertData& s)
{
    s.validate();
    const int n = 2 * s.genus;
    LaurentMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m.at(i, j) = Laurent::term(s.V.at(i, j), 1, 2) - Laurent::term(s.V.at(j, i), -1, 2);
    Laurent delta_sigma = det(m);

    long long dd = small_int(s.d, "order d");
    long long bb = small_int(s.b, "framing b");
    Laurent num = delta_sigma.substitute_root(dd) *
                  (Laurent::term(Rat(1), 1, 2 * bb) - Laurent::term(Rat(1), -1, 2 * bb));
    Laurent den = Laurent::term(Rat(1), 1, 2 * dd) - Laurent::term(Rat(1), -1, 2 * dd);
    Rat scale = s.h1 * Rat(s.b) / Rat(s.d * s.d);
    Laurent result = (num * scale).divide_exact(den);

    if (result != result.invert_variable())
        throw consistency_error("Alexander polynomial is not symmetric");
    if (result.eval_one() != s.h1 / Rat(s.d))
        throw consistency_error("Alexander polynomial has the wrong value at 1");
    return result;
}

Laurent delta_d_closed_form(const Int& d)
{
    long long dd = small_int(d, "order d");
    if (dd < 1)
        throw input_error("order d must be positive");
    Laurent r;
    for (long long j = 0; j < dd; ++j)
        r = r + Laurent::term(Rat(1, d), dd - 1 - 2 * j, 2);
    return r;
}

Laurent delta_d_determinant(const Int& d)
{
    long long dd = small_int(d, "order d");
    if (dd < 1)
        throw input_error("order d must be positive");
    Laurent rho = Laurent::term(Rat(1), 1, 2);
    Laurent rho_inv = Laurent::term(Rat(1), -1, 2);
    Laurent z = rho - rho_inv;
    int n = static_cast<int>(dd) - 1;
    LaurentMatrix m(n, n);
    for (long long i = 2; i <= dd; ++i)
        for (long long j = 2; j <= dd; ++j) {
            Laurent v;
            if (i == 2)
                v = (j == 2 ? rho : Laurent()) - z * Rat(1, d);
            else
                v = rho * Rat((i == j ? 1 : 0) - (j == 2 ? 1 : 0)) - rho_inv * Rat(i - 1 == j ? 1 : 0);
            m.at(static_cast<int>(i) - 2, static_cast<int>(j) - 2) = v;
        }
    return det(m);
}

namespace {

std::string copy_curve(int copy, int i, bool pushed)
{
    return "c" + std::to_string(copy) + ".b" + std::to_string(i) + (pushed ? "+" : "");
}

CurveNamer copy_namer(int copy)
{
    return [copy](const std::string& role, int j) {
        bool pushed = role.size() == 2 && role[1] == '+';
        int base = (role[0] == 'x') ? 2 * j - 1 : 2 * j;
        return copy_curve(copy, base, pushed);
    };
}

} // namespace

LinkingTable stacked_linking_table(const SeifertData& s, int copies)
{
    s.validate();
    LinkingTable t;
    const int n = 2 * s.genus;
    for (int sc = 1; sc <= copies; ++sc)
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                // within a copy: plain against "+"-pushoff is V
                t.set(copy_curve(sc, i, false), copy_curve(sc, j, true), s.V.at(i - 1, j - 1));
                // across copies s < t, any pushoffs: V (copy t lies on the
                // positive side of copy s, like a pushoff)
                for (int tc = sc + 1; tc <= copies; ++tc)
                    for (bool pi : {false, true})
                        for (bool pj : {false, true})
                            t.set(copy_curve(sc, i, pi), copy_curve(tc, j, pj), s.V.at(i - 1, j - 1));
            }
    return t;
}

LinkingTable seifert_linking_table(const SeifertData& s)
{
    return stacked_linking_table(s, 1);
}

DiagramVector stacked_bracket(const SeifertData& s, int copies)
{
    s.validate();
    GraphCombination g;
    g.terms.push_back({Rat(1), {}});
    for (int c = 1; c <= copies; ++c)
        g = graph_product(g, i_sigma(s.genus, copy_namer(c)));
    return contract(g, stacked_linking_table(s, copies), copies);
}

DiagramVector i_sigma_bracket(const SeifertData& s)
{
    return stacked_bracket(s, 1);
}

Rat lambda_prime(const SeifertData& s)
{
    s.validate();
    Rat d2 = Rat(s.d * s.d);
    Rat b2 = Rat(s.b * s.b);

    Laurent delta = alexander_from_seifert(s);
    Rat alexander_route =
        Rat(s.d) / s.h1 * delta.second_derivative_at_one() / 2 - Rat(1) / (24 * d2) + Rat(1, 24);

    Rat bracket = diagram_space(1).weight(i_sigma_bracket(s));
    Rat contraction_route =
        bracket / (2 * d2) + Rat(1) / (24 * b2) - Rat(2) / (24 * d2) + Rat(1, 24);

    if (alexander_route != contraction_route)
        throw consistency_error("lambda' routes disagree");
    return alexander_route;
}

Rat lambda2_second(const SeifertData& s)
{
    s.validate();
    if (s.d != 1)
        throw capability_error("lambda2'' requires a null-homologous knot (d = 1)");
    return diagram_space(2).weight(stacked_bracket(s, 2)) / 8;
}

Rat w3_pretzel(const PretzelParams& p)
{
    p.validate();
    Rat x(p.x), y(p.y), z(p.z);
    return (x * x * (y + z) + y * y * (x + z) + z * z * (x + y)) / 32 + x * y * z / 8 +
           (x + y + z) / 16;
}

Rat lambda_prime_pretzel(const PretzelParams& p)
{
    p.validate();
    Rat x(p.x), y(p.y), z(p.z);
    return (x * y + y * z + z * x + 1) / 4;
}

Rat w3_embedded_genus_one(const PretzelParams& p, const Rat& lpX, const Rat& lpY,
                          const Rat& lpZ, const Rat& lpXY)
{
    return w3_pretzel(p) - Rat(p.x) / 2 * lpX - Rat(p.y) / 2 * lpY - Rat(p.z) / 2 * lpZ +
           Rat(3, 2) * lpXY;
}

SingularValues singular_invariants(const SingularLinkingMatrix& m)
{
    m.validate();
    SingularValues out;
    out.k = m.k;
    if (m.k == 1) {
        out.lambda_prime = m.ell.at(0, 0);
    } else if (m.k == 2) {
        out.w3 = -m.ell.at(0, 1) / 2;
        out.C = 0;
    } else {
        throw capability_error("singular invariants available for 1 or 2 double points");
    }
    return out;
}

Rat w3_crossing_change(const Rat& lpKp, const Rat& lpKpp, const Rat& lpKplus,
                       const Rat& lpKminus, const Rat& lk)
{
    return (lpKp + lpKpp) / 2 - (lpKplus + lpKminus + lk * lk) / 4;
}

Rat nu_abc(const Rat& a, const Rat& b, const Rat& c, const Rat& L01_23,
           const Rat& L02_31, const Rat& L03_12)
{
    if (a + b + c != 0)
        throw input_error("nu_abc requires a + b + c = 0");
    return a * L01_23 + b * L02_31 + c * L03_12;
}

Rat mu_01_23(const Rat& L01_23, const Rat& L02_31, const Rat& L03_12)
{
    return nu_abc(1, 0, -1, L01_23, L02_31, L03_12);
}

Rat mu_10_23(const Rat& L01_23, const Rat& L02_31, const Rat& L03_12)
{
    return nu_abc(-1, 1, 0, L01_23, L02_31, L03_12);
}

Rat lambda_prime_pair(const Int& d1, const Int& d2, const Rat& self_lk)
{
    if (d1 < 1 || d2 < 1)
        throw input_error("orders must be positive");
    return -self_lk / Rat(d1 * d1 * d2 * d2);
}

Rat lambda_prime_triple(const Int& d1, const Int& d2, const Int& d3, const Rat& triple)
{
    if (d1 < 1 || d2 < 1 || d3 < 1)
        throw input_error("orders must be positive");
    return triple * triple / Rat(d1 * d1 * d2 * d2 * d3 * d3);
}

} // namespace finik
