#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "finik/space.hpp"

#include <random>

using namespace finik;

namespace {

// random relabeling: permute vertices, rotate/flip each vertex
JacobiDiagram shuffled(const JacobiDiagram& d, std::mt19937& rng, int* flip_parity = nullptr)
{
    int nv = d.vertices();
    std::vector<int> perm(nv);
    for (int i = 0; i < nv; ++i)
        perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<int> slot(d.half_edges());
    int flips = 0;
    for (int v = 0; v < nv; ++v) {
        int r = static_cast<int>(rng() % 3);
        int s = static_cast<int>(rng() % 2);
        flips += s;
        for (int l = 0; l < 3; ++l) {
            int i = s == 0 ? (l - r + 3) % 3 : (r - l + 3) % 3;
            slot[3 * v + l] = 3 * perm[v] + i;
        }
    }
    JacobiDiagram out;
    out.mate.assign(d.half_edges(), -1);
    for (int h = 0; h < d.half_edges(); ++h)
        out.mate[slot[h]] = slot[d.mate[h]];
    for (const auto& [h, lab] : d.edge_label) {
        int a = slot[h], b = slot[d.mate[h]];
        out.edge_label[std::min(a, b)] = lab;
    }
    if (flip_parity)
        *flip_parity = flips % 2;
    return out;
}

} // namespace

TEST_CASE("theta canonicalization")
{
    CanonicalResult r = canonical_form(theta_diagram());
    CHECK(r.aut_count == 12);
    CHECK(r.key.sign != 0); // theta is a nonzero class
    CHECK(count_theta_components(theta_diagram()) == 1);
    CHECK(diagram_connected(theta_diagram()));
}

TEST_CASE("tetrahedron canonicalization")
{
    CanonicalResult r = canonical_form(tetrahedron_diagram());
    CHECK(r.aut_count == 24);
    CHECK(r.key.sign != 0);
    CHECK(diagram_connected(tetrahedron_diagram()));
    CHECK(count_theta_components(tetrahedron_diagram()) == 0);
}

TEST_CASE("canonical key is relabeling invariant")
{
    std::mt19937 rng(20240817);
    for (const JacobiDiagram& d :
         {theta_diagram(), tetrahedron_diagram(), ladder_diagram(),
          disjoint_union(theta_diagram(), theta_diagram())}) {
        CanonicalResult base = canonical_form(d);
        for (int trial = 0; trial < 25; ++trial) {
            CanonicalResult r = canonical_form(shuffled(d, rng));
            CHECK(r.key.bytes == base.key.bytes);
            CHECK(r.aut_count == base.aut_count);
        }
    }
}

TEST_CASE("orientation flips track the sign")
{
    // a diagram with trivial enough symmetry that the sign is nonzero:
    // attach labels to break symmetry
    JacobiDiagram d = theta_diagram();
    d.edge_label[0] = 1;
    d.edge_label[1] = 2;
    d.edge_label[2] = 3;
    CanonicalResult base = canonical_form(d);
    REQUIRE(base.key.sign != 0);
    CHECK(base.aut_count == 2); // identity and the vertex swap

    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        int parity = 0;
        JacobiDiagram s = shuffled(d, rng, &parity);
        CanonicalResult r = canonical_form(s);
        CHECK(r.key.bytes == base.key.bytes);
        CHECK(r.key.sign == (parity == 0 ? base.key.sign : -base.key.sign));
    }
}

TEST_CASE("loops vanish")
{
    JacobiDiagram d;
    d.mate = {1, 0, 3, 2, 5, 4}; // two vertices, each with a loop, joined by one edge
    d.mate = {1, 0, 5, 4, 3, 2};
    CHECK(d.has_loop());
    CHECK(canonical_form(d).key.sign == 0);
}

TEST_CASE("validation rejects malformed data")
{
    JacobiDiagram d;
    d.mate = {0, 1, 2, 3, 4, 5};
    CHECK_THROWS_AS(d.validate(), structural_error);
    d.mate = {3, 4, 5};
    CHECK_THROWS_AS(d.validate(), structural_error);
}

TEST_CASE("diagram enumeration counts")
{
    CHECK(enumerate_diagrams(0).size() == 1);
    CHECK(enumerate_diagrams(1).size() == 1); // theta only
    // degree 2: theta|_|theta, ladder, tetrahedron
    CHECK(enumerate_diagrams(2).size() == 3);
}

TEST_CASE("space dimensions")
{
    CHECK(DiagramSpace(1).dimension() == 1);
    CHECK(DiagramSpace(2).dimension() == 2);
}

TEST_CASE("ladder reduces to twice the tetrahedron")
{
    DiagramSpace s(2);
    REQUIRE(s.tetrahedron_index());
    REQUIRE(s.two_theta_index());

    DiagramVector v;
    v.degree = 2;
    v.add(canonical_form(ladder_diagram()).key, Rat(1));
    std::vector<Rat> coords = s.reduce(v);
    CHECK(coords[*s.tetrahedron_index()] == Rat(2));
    CHECK(coords[*s.two_theta_index()] == Rat(0));
}

TEST_CASE("weight systems")
{
    DiagramSpace s1(1);
    DiagramVector th;
    th.degree = 1;
    th.add(canonical_form(theta_diagram()).key, Rat(1));
    CHECK(s1.weight(th) == Rat(2));

    DiagramSpace s2(2);
    DiagramVector tet, lad, twoth;
    tet.degree = lad.degree = twoth.degree = 2;
    tet.add(canonical_form(tetrahedron_diagram()).key, Rat(1));
    lad.add(canonical_form(ladder_diagram()).key, Rat(1));
    twoth.add(canonical_form(disjoint_union(theta_diagram(), theta_diagram())).key, Rat(1));
    CHECK(s2.weight(tet) == Rat(1));
    CHECK(s2.weight(lad) == Rat(2));
    CHECK(s2.weight(twoth) == Rat(0));

    // connected projection kills the split diagram
    auto c = s2.reduce_connected(twoth);
    for (const Rat& x : c)
        CHECK(x == 0);
}
