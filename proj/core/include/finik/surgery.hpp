#pragma once

#include "finik/contraction.hpp"
#include "finik/knot.hpp"

namespace finik {

struct SurgerySpec {
    Int p, q;

    SurgerySpec(Int pp, Int qq) : p(std::move(pp)), q(std::move(qq)) { validate(); }
    void validate() const;
    Rat ratio() const { return Rat(q) / Rat(p); } // q/p
};

// fully antisymmetric triple tensor on {1..3n}
class MilnorTensor {
public:
    MilnorTensor(int n, std::map<std::tuple<int, int, int>, Rat> values);
    int n() const { return n_; }
    Rat get(int i, int j, int k) const; // signed lookup; equal indices -> 0

private:
    int n_;
    std::map<std::tuple<int, int, int>, Rat> values_; // keys strictly increasing
};

// ell({{i,j},{k,l}}) = lk(F_i cap F_j, F_k+ cap F_l+) for i<j, k<l
class IntersectionLinkTable {
public:
    void set(int i, int j, int k, int l, const Rat& v);
    // signed lookup for ordered pairs (i,j), (k,l)
    Rat get(int i, int j, int k, int l) const;

    const std::map<std::pair<std::pair<int, int>, std::pair<int, int>>, Rat>& entries() const
    {
        return entries_;
    }

private:
    std::map<std::pair<std::pair<int, int>, std::pair<int, int>>, Rat> entries_;
};

Rat dedekind_sum(const Int& p, const Int& q);
Rat lambda_lens(const Int& p, const Int& q); // lambda(L(p,-q))
Rat lambda_surgery(const Rat& lambdaM, const Rat& lambda_prime_K, const SurgerySpec& s);
Rat lambda2_integral_surgery(const Rat& lambda2M, const Rat& lambda2_second,
                             const Rat& w3, const Int& r);
Rat lambda2_integral_surgery_with_C(const Rat& lambda2M, const Rat& lambda2_second,
                                    const Rat& w3, const Int& r, const Rat& C);

// (1/2^n) << |_|_i (-(q_i/p_i) I(Sigma^i)) >>; 0 when more surfaces than n.
// Surface i (1-based) uses curves "s<i>.x<j>", "s<i>.y<j>" and "+" pushoffs.
DiagramVector bracket_boundary(int n, const std::vector<int>& genus,
                               const LinkingTable& lk,
                               const std::vector<SurgerySpec>& coeffs);

struct HandlebodyDatum {
    int basis_size = 0;
    std::map<std::tuple<int, int, int>, Rat> trilinear;
    std::vector<CurveId> leg_names;
};
// << |_|_i T(I_i) >>_n over exactly 2n handlebody data
DiagramVector bracket_lp(int n, const std::vector<HandlebodyDatum>& data,
                         const LinkingTable& lk);

// Prod (q_i/p_i) * sum over edge-labelled diagrams of mu_Gamma/2^theta [Gamma]
DiagramVector bracket_as(int n, const MilnorTensor& mu,
                         const std::vector<SurgerySpec>& coeffs);

// Prod (q_i/p_i) * sum over 2/3-labelled diagrams of ell/#Aut_{2/3} [Gamma]
DiagramVector bracket_as_mu0(int n, const IntersectionLinkTable& ell,
                             const std::vector<SurgerySpec>& coeffs);

// (1/(n! 2^n d^{2n})) << |_|_{i<=n} I(F^i) >> over stacked copies
DiagramVector y_leading(int n, const SeifertData& s);

// ((-1)^{n-1}/(n-1)!) ((n-1)/2 + q/p) Zn_Ln + Zn_after_surgery)
DiagramVector y_subleading(int n, const SurgerySpec& s, const DiagramVector& Zn_Ln,
                           const DiagramVector& Zn_after_surgery);

// closed form (1/2)((5 l12^2 + 2 l11 l22) r^2 - l12 r), asserted against
// the contraction engine with the crossing-change linking table
Rat y2_singular_polynomial(const SingularLinkingMatrix& m, const Rat& r);

} // namespace finik
