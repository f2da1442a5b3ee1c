#pragma once

#include "finik/contraction.hpp"
#include "finik/laurent.hpp"
#include "finik/matrix.hpp"
#include "finik/space.hpp"

namespace finik {

// Seifert form of a surface for a knot of order d with framing b, in the
// symplectic ordering (x1, y1, ..., xg, yg): V[i][j] = lk(b_i, b_j+).
struct SeifertData {
    int genus = 0;
    RationalMatrix V;
    Int d = 1;
    Int b = 1;
    Rat h1 = 1;

    void validate() const; // V - V^T must be the symplectic form J
};

struct SingularLinkingMatrix {
    int k = 0;
    RationalMatrix ell; // symmetric k x k

    void validate() const;
};

struct PretzelParams {
    Int x, y, z;

    void validate() const; // all odd
};

// shared quotient spaces, built once per degree
const DiagramSpace& diagram_space(int degree);

Laurent alexander_from_seifert(const SeifertData& s);

Laurent delta_d_closed_form(const Int& d);
Laurent delta_d_determinant(const Int& d);

// single-copy table with names "b<i>" / "b<i>+" (1-based symplectic index)
LinkingTable seifert_linking_table(const SeifertData& s);
// n stacked copies, names "c<copy>.b<i>" / with "+" suffix
LinkingTable stacked_linking_table(const SeifertData& s, int copies);

// << I(Sigma) >> as a degree-1 DiagramVector
DiagramVector i_sigma_bracket(const SeifertData& s);
// the same bracket for n stacked copies of the surface, degree n
DiagramVector stacked_bracket(const SeifertData& s, int copies);

Rat lambda_prime(const SeifertData& s);   // both routes, asserted equal
Rat lambda2_second(const SeifertData& s); // (1/8) << I(F1) u I(F2) >>_{W2}

Rat w3_pretzel(const PretzelParams& p);
Rat lambda_prime_pretzel(const PretzelParams& p);
Rat w3_embedded_genus_one(const PretzelParams& p, const Rat& lpX, const Rat& lpY,
                          const Rat& lpZ, const Rat& lpXY);

struct SingularValues {
    int k = 0;
    Rat lambda_prime;  // k = 1
    Rat w3;            // k = 2
    Rat C;             // k = 2 (always 0)
};
SingularValues singular_invariants(const SingularLinkingMatrix& m);

Rat w3_crossing_change(const Rat& lpKp, const Rat& lpKpp, const Rat& lpKplus,
                       const Rat& lpKminus, const Rat& lk);

Rat nu_abc(const Rat& a, const Rat& b, const Rat& c, const Rat& L01_23,
           const Rat& L02_31, const Rat& L03_12);
Rat mu_01_23(const Rat& L01_23, const Rat& L02_31, const Rat& L03_12);
Rat mu_10_23(const Rat& L01_23, const Rat& L02_31, const Rat& L03_12);

Rat lambda_prime_pair(const Int& d1, const Int& d2, const Rat& self_lk);
Rat lambda_prime_triple(const Int& d1, const Int& d2, const Int& d3, const Rat& triple);
// n >= 4 components
inline Rat lambda_prime_many() { return 0; }

} // namespace finik
