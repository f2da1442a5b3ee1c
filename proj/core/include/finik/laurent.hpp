#pragma once

#include "finik/rational.hpp"

#include <map>
#include <string>

namespace finik {

// Exact Laurent polynomial in a formal root t^{1/D}.  A term with stored
// exponent e means c * t^{e/D}.  The representation is canonical: no zero
// coefficients are kept and D is reduced to the smallest root order that
// still expresses every exponent, so structural equality is semantic
// equality.
class Laurent {
public:
    Laurent() = default;
    explicit Laurent(const Rat& c) { if (c != 0) coef_[0] = c; }

    // c * t^{exp_num/exp_den}
    static Laurent term(const Rat& c, long long exp_num, long long exp_den = 1);
    static Laurent one() { return Laurent(Rat(1)); }

    long long root_order() const { return d_; }
    const std::map<long long, Rat>& terms() const { return coef_; }
    bool is_zero() const { return coef_.empty(); }

    Laurent operator+(const Laurent& o) const;
    Laurent operator-(const Laurent& o) const;
    Laurent operator-() const;
    Laurent operator*(const Laurent& o) const;
    Laurent operator*(const Rat& c) const;
    bool operator==(const Laurent& o) const { return d_ == o.d_ && coef_ == o.coef_; }
    bool operator!=(const Laurent& o) const { return !(*this == o); }

    // Exact division; throws consistency_error when the division is not
    // exact (never truncates).
    Laurent divide_exact(const Laurent& den) const;

    // P(t) -> P(t^{-1})
    Laurent invert_variable() const;

    // P(t) -> P(t^{1/d})
    Laurent substitute_root(long long d) const;

    Rat eval_one() const;

    // P'(1) and P''(1), derivative in t with t^{e/D} treated formally:
    // P''(1) = sum c_e (e/D)((e/D)-1).
    Rat derivative_at_one() const;
    Rat second_derivative_at_one() const;

    // formal derivative d/dt, exponents shift by one full power of t
    Laurent derivative() const;

    std::string to_string() const;

private:
    long long d_ = 1;
    std::map<long long, Rat> coef_;

    void normalize();
    // re-express with root order m (m must be a multiple of d_)
    Laurent rescaled(long long m) const;
    friend Laurent aligned_binop(const Laurent&, const Laurent&, int sign);
};

inline Laurent operator*(const Rat& c, const Laurent& p) { return p * c; }

} // namespace finik
