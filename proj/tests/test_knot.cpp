#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "finik/knot.hpp"

#include <random>

using namespace finik;

namespace {

SeifertData make_genus_one(int a, int b, int c)
{
    // V = [[a, b+1], [b, c]] has V - V^T = J
    SeifertData s;
    s.genus = 1;
    s.V = RationalMatrix(2, 2);
    s.V.at(0, 0) = a;
    s.V.at(0, 1) = b + 1;
    s.V.at(1, 0) = b;
    s.V.at(1, 1) = c;
    return s;
}

SeifertData trefoil() { return make_genus_one(-1, 0, -1); }
SeifertData figure_eight() { return make_genus_one(1, 0, -1); }

SeifertData random_seifert(int genus, std::mt19937& rng)
{
    std::uniform_int_distribution<int> entry(-3, 3);
    SeifertData s;
    s.genus = genus;
    s.V = RationalMatrix(2 * genus, 2 * genus);
    for (int i = 0; i < 2 * genus; ++i)
        for (int j = i; j < 2 * genus; ++j) {
            int v = entry(rng);
            s.V.at(i, j) = v;
            if (j > i)
                s.V.at(j, i) = Rat(v - ((i % 2 == 0 && j == i + 1) ? 1 : 0));
        }
    return s;
}

} // namespace

TEST_CASE("Seifert data validation")
{
    SeifertData bad = trefoil();
    bad.V.at(0, 1) = 5;
    CHECK_THROWS_AS(bad.validate(), input_error);
    bad = trefoil();
    bad.d = 0;
    CHECK_THROWS_AS(bad.validate(), input_error);
    CHECK_NOTHROW(trefoil().validate());
}

TEST_CASE("Alexander polynomials of the standard knots")
{
    Laurent t = Laurent::term(1, 1, 1), ti = Laurent::term(1, -1, 1), one = Laurent::term(1, 0, 1);
    CHECK(alexander_from_seifert(trefoil()) == t - one + ti);
    CHECK(alexander_from_seifert(figure_eight()) == -t + one * 3 - ti);
    SeifertData unknot;
    unknot.genus = 0;
    unknot.V = RationalMatrix(0, 0);
    CHECK(alexander_from_seifert(unknot) == one);
}

TEST_CASE("Alexander symmetry and normalization on random forms")
{
    std::mt19937 rng(20240817);
    for (int i = 0; i < 50; ++i) {
        SeifertData s = random_seifert(1 + i % 3, rng);
        Laurent d = alexander_from_seifert(s);
        CHECK(d == d.invert_variable());
        CHECK(d.eval_one() == 1);
    }
}

TEST_CASE("order-d torsion factor: closed form equals determinant")
{
    for (long long d = 1; d <= 6; ++d)
        CHECK(delta_d_closed_form(d) == delta_d_determinant(d));
    CHECK(delta_d_closed_form(1) == Laurent::term(1, 0, 1));
}

TEST_CASE("lambda' dual routes and anchors")
{
    CHECK(lambda_prime(trefoil()) == 1);
    CHECK(lambda_prime(figure_eight()) == -1);
    SeifertData unknot;
    unknot.genus = 0;
    unknot.V = RationalMatrix(0, 0);
    CHECK(lambda_prime(unknot) == 0);
    std::mt19937 rng(7);
    for (int i = 0; i < 30; ++i)
        CHECK_NOTHROW(lambda_prime(random_seifert(1 + i % 3, rng)));
}

TEST_CASE("lambda2'' anchors")
{
    CHECK(lambda2_second(trefoil()) == Rat(3, 2));
    CHECK(lambda2_second(figure_eight()) == 2);
    SeifertData d2 = trefoil();
    d2.d = 2;
    d2.h1 = Rat(1, 2);
    CHECK_THROWS_AS(lambda2_second(d2), capability_error);
}

TEST_CASE("hollow handle stabilization preserves the invariants")
{
    std::mt19937 rng(13);
    std::uniform_int_distribution<int> entry(-3, 3);
    SeifertData s = figure_eight();
    SeifertData big;
    big.genus = 2;
    big.V = RationalMatrix(4, 4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            big.V.at(i, j) = s.V.at(i, j);
    for (int i = 0; i < 2; ++i) {
        Rat link = entry(rng);
        big.V.at(i, 2) = big.V.at(2, i) = 0;
        big.V.at(i, 3) = big.V.at(3, i) = link;
    }
    big.V.at(2, 2) = 0;
    big.V.at(2, 3) = 0;
    big.V.at(3, 2) = -1;
    big.V.at(3, 3) = entry(rng);
    big.validate();
    CHECK(lambda_prime(big) == lambda_prime(s));
    CHECK(lambda2_second(big) == lambda2_second(s));
}

TEST_CASE("pretzel closed forms")
{
    CHECK(w3_pretzel({-1, 1, 1}) == 0);
    CHECK(lambda_prime_pretzel({-1, 1, 1}) == 0);
    // both trefoil pretzels carry lambda' = 1
    CHECK(lambda_prime_pretzel({1, 1, 1}) == 1);
    CHECK(lambda_prime_pretzel({-1, -1, -1}) == 1);
    CHECK_THROWS_AS(w3_pretzel({2, 1, 1}), input_error);
    for (Int x = -5; x <= 5; x += 2)
        for (Int y = -5; y <= 5; y += 2)
            for (Int z = -5; z <= 5; z += 2) {
                PretzelParams p{x, y, z};
                Rat xr(x), yr(y), zr(z);
                CHECK(16 * (w3_pretzel({x + 2, y, z}) - w3_pretzel(p)) ==
                      (2 * xr + 2) * (yr + zr) + 2 + 4 * yr * zr + yr * yr + zr * zr);
                CHECK(w3_pretzel(p) == w3_pretzel({z, y, x}));
                CHECK(lambda_prime_pretzel(p) == lambda_prime_pretzel({y, z, x}));
            }
}

TEST_CASE("embedded pretzel correction reduces to the plain value")
{
    PretzelParams p{3, -1, 5};
    CHECK(w3_embedded_genus_one(p, 0, 0, 0, 0) == w3_pretzel(p));
}

TEST_CASE("singular invariants")
{
    SingularLinkingMatrix one;
    one.k = 1;
    one.ell = RationalMatrix(1, 1);
    one.ell.at(0, 0) = Rat(-7, 3);
    SingularValues v1 = singular_invariants(one);
    CHECK(v1.lambda_prime == Rat(-7, 3));

    SingularLinkingMatrix two;
    two.k = 2;
    two.ell = RationalMatrix(2, 2);
    two.ell.at(0, 0) = 1;
    two.ell.at(0, 1) = two.ell.at(1, 0) = 4;
    two.ell.at(1, 1) = -2;
    SingularValues v2 = singular_invariants(two);
    CHECK(v2.w3 == -2);
    CHECK(v2.C == 0);

    SingularLinkingMatrix three;
    three.k = 3;
    three.ell = RationalMatrix(3, 3);
    CHECK_THROWS_AS(singular_invariants(three), capability_error);

    SingularLinkingMatrix asym;
    asym.k = 2;
    asym.ell = RationalMatrix(2, 2);
    asym.ell.at(0, 1) = 1;
    CHECK_THROWS_AS(singular_invariants(asym), input_error);
}

TEST_CASE("crossing change telescoping")
{
    for (int n = 0; n <= 10; ++n)
        CHECK(w3_crossing_change(0, 0, Rat(-n), 0, Rat(n)) == Rat(-n * (n - 1), 4));
    // second difference of the family is the constant -1/2
    auto f = [](int n) { return w3_crossing_change(0, 0, Rat(-n), 0, Rat(n)); };
    for (int n = 0; n <= 8; ++n)
        CHECK(f(n + 2) - 2 * f(n + 1) + f(n) == Rat(-1, 2));
}

TEST_CASE("triple-linking combinations")
{
    CHECK_THROWS_AS(nu_abc(1, 1, 1, 0, 0, 0), input_error);
    CHECK(mu_01_23(5, 7, 11) == 5 - 11);
    CHECK(mu_10_23(5, 7, 11) == -5 + 7);
    CHECK(nu_abc(2, -1, -1, 3, 4, 5) == 2 * 3 - 4 - 5);
}

TEST_CASE("multi-component lambda' values")
{
    CHECK(lambda_prime_pair(1, 1, Rat(3)) == -3);
    CHECK(lambda_prime_pair(2, 1, Rat(4)) == -1);
    CHECK(lambda_prime_triple(1, 1, 1, Rat(-3)) == 9);
    CHECK(lambda_prime_many() == 0);
    CHECK_THROWS_AS(lambda_prime_pair(0, 1, Rat(1)), input_error);
}
