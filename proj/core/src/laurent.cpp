#include "finik/laurent.hpp"

#include <numeric>
#include <sstream>
#include <vector>

namespace finik {

Rat rat_from_string(std::string s)
{
    // tolerate U+2212 minus
    const std::string uminus = "\xe2\x88\x92";
    for (std::size_t p; (p = s.find(uminus)) != std::string::npos;)
        s.replace(p, uminus.size(), "-");
    if (s.empty())
        throw input_error("empty rational literal");
    try {
        auto slash = s.find('/');
        if (slash == std::string::npos)
            return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0)
            throw input_error("zero denominator in '" + s + "'");
        return Rat(num, den);
    } catch (const std::runtime_error&) {
        throw input_error("bad rational literal '" + s + "'");
    }
}

Laurent Laurent::term(const Rat& c, long long exp_num, long long exp_den)
{
    if (exp_den <= 0)
        throw input_error("exponent denominator must be positive");
    Laurent p;
    p.d_ = exp_den;
    if (c != 0)
        p.coef_[exp_num] = c;
    p.normalize();
    return p;
}

void Laurent::normalize()
{
    for (auto it = coef_.begin(); it != coef_.end();)
        it = (it->second == 0) ? coef_.erase(it) : std::next(it);
    if (coef_.empty()) {
        d_ = 1;
        return;
    }
    long long g = d_;
    for (const auto& [e, c] : coef_)
        g = std::gcd(g, e < 0 ? -e : e);
    if (g > 1 && g != 0) {
        std::map<long long, Rat> reduced;
        for (const auto& [e, c] : coef_)
            reduced[e / g] = c;
        coef_ = std::move(reduced);
        d_ /= g;
    }
}

Laurent Laurent::rescaled(long long m) const
{
    Laurent r;
    r.d_ = m;
    long long f = m / d_;
    for (const auto& [e, c] : coef_)
        r.coef_[e * f] = c;
    return r;
}

Laurent aligned_binop(const Laurent& a, const Laurent& b, int sign)
{
    long long m = std::lcm(a.d_, b.d_);
    Laurent r = a.rescaled(m);
    long long f = m / b.d_;
    for (const auto& [e, c] : b.coef_) {
        Rat& slot = r.coef_[e * f];
        slot += (sign > 0) ? c : -c;
    }
    r.normalize();
    return r;
}

Laurent Laurent::operator+(const Laurent& o) const { return aligned_binop(*this, o, +1); }
Laurent Laurent::operator-(const Laurent& o) const { return aligned_binop(*this, o, -1); }

Laurent Laurent::operator-() const
{
    Laurent r = *this;
    for (auto& [e, c] : r.coef_)
        c = -c;
    return r;
}

Laurent Laurent::operator*(const Laurent& o) const
{
    long long m = std::lcm(d_, o.d_);
    long long fa = m / d_, fb = m / o.d_;
    Laurent r;
    r.d_ = m;
    for (const auto& [ea, ca] : coef_)
        for (const auto& [eb, cb] : o.coef_)
            r.coef_[ea * fa + eb * fb] += ca * cb;
    r.normalize();
    return r;
}

Laurent Laurent::operator*(const Rat& c) const
{
    Laurent r;
    if (c == 0)
        return r;
    r.d_ = d_;
    for (const auto& [e, k] : coef_)
        r.coef_[e] = k * c;
    return r;
}

Laurent Laurent::divide_exact(const Laurent& den) const
{
    if (den.is_zero())
        throw consistency_error("Laurent division by zero");
    if (is_zero())
        return Laurent();
    long long m = std::lcm(d_, den.d_);
    Laurent num = rescaled(m);
    Laurent dv = den.rescaled(m);

    // long division on dense coefficient vectors shifted to start at 0
    auto lowest = [](const Laurent& p) { return p.coef_.begin()->first; };
    auto highest = [](const Laurent& p) { return p.coef_.rbegin()->first; };
    long long nlo = lowest(num), nhi = highest(num);
    long long dlo = lowest(dv), dhi = highest(dv);
    long long dd = dhi - dlo;
    long long nd = nhi - nlo;
    if (nd < dd)
        throw consistency_error("Laurent division not exact (degree)");

    std::vector<Rat> n(nd + 1), d(dd + 1), q(nd - dd + 1);
    for (const auto& [e, c] : num.coef_)
        n[e - nlo] = c;
    for (const auto& [e, c] : dv.coef_)
        d[e - dlo] = c;
    for (long long i = nd - dd; i >= 0; --i) {
        Rat f = n[i + dd] / d[dd];
        q[i] = f;
        if (f != 0)
            for (long long j = 0; j <= dd; ++j)
                n[i + j] -= f * d[j];
    }
    for (const Rat& c : n)
        if (c != 0)
            throw consistency_error("Laurent division not exact (remainder)");

    Laurent res;
    res.d_ = m;
    long long shift = nlo - dlo;
    for (long long i = 0; i < static_cast<long long>(q.size()); ++i)
        if (q[i] != 0)
            res.coef_[i + shift] = q[i];
    res.normalize();
    return res;
}

Laurent Laurent::substitute_root(long long d) const
{
    if (d <= 0)
        throw input_error("root substitution order must be positive");
    Laurent r = *this;
    r.d_ *= d;
    r.normalize();
    return r;
}

Laurent Laurent::invert_variable() const
{
    Laurent r;
    r.d_ = d_;
    for (const auto& [e, c] : coef_)
        r.coef_[-e] = c;
    return r;
}

Rat Laurent::eval_one() const
{
    Rat s = 0;
    for (const auto& [e, c] : coef_)
        s += c;
    return s;
}

Rat Laurent::derivative_at_one() const
{
    Rat s = 0;
    for (const auto& [e, c] : coef_)
        s += c * Rat(e, d_);
    return s;
}

Rat Laurent::second_derivative_at_one() const
{
    Rat s = 0;
    for (const auto& [e, c] : coef_) {
        Rat x(e, d_);
        s += c * x * (x - 1);
    }
    return s;
}

Laurent Laurent::derivative() const
{
    Laurent r;
    r.d_ = d_;
    for (const auto& [e, c] : coef_) {
        Rat k = c * Rat(e, d_);
        if (k != 0)
            r.coef_[e - d_] += k;
    }
    r.normalize();
    return r;
}

std::string Laurent::to_string() const
{
    if (coef_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = coef_.rbegin(); it != coef_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!first)
            out << (c > 0 ? " + " : " - ");
        else if (c < 0)
            out << "-";
        Rat a = c > 0 ? c : -c;
        if (e == 0 || a != 1)
            out << rat_to_string(a);
        if (e != 0) {
            if (a != 1)
                out << "*";
            out << "t";
            if (e != d_) {
                out << "^";
                if (d_ == 1)
                    out << e;
                else
                    out << "(" << e << "/" << d_ << ")";
            }
        }
        first = false;
    }
    return out.str();
}

} // namespace finik
