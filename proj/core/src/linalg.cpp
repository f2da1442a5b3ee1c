#include "finik/matrix.hpp"

namespace finik {

namespace {

template <class T>
T cofactor_det(const Matrix<T>& m, std::vector<int> rows, std::vector<int> cols)
{
    const std::size_t n = rows.size();
    if (n == 0)
        return T(Rat(1));
    if (n == 1)
        return m.at(rows[0], cols[0]);
    T acc{};
    for (std::size_t j = 0; j < n; ++j) {
        const T& a = m.at(rows[0], cols[j]);
        std::vector<int> subc;
        for (std::size_t k = 0; k < n; ++k)
            if (k != j)
                subc.push_back(cols[k]);
        T sub = cofactor_det(m, std::vector<int>(rows.begin() + 1, rows.end()), subc);
        T prod = a * sub;
        if (j % 2 == 0)
            acc = acc + prod;
        else
            acc = acc - prod;
    }
    return acc;
}

template <class T>
T exact_quot(const T& a, const T& b);

template <>
Rat exact_quot(const Rat& a, const Rat& b) { return a / b; }

template <>
Laurent exact_quot(const Laurent& a, const Laurent& b) { return a.divide_exact(b); }

template <class T>
bool is_zero_elem(const T& x);

template <>
bool is_zero_elem(const Rat& x) { return x == 0; }

template <>
bool is_zero_elem(const Laurent& x) { return x.is_zero(); }

// Bareiss: divisions are exact in the ring, so this works for Laurent too.
template <class T>
T bareiss_det(Matrix<T> m)
{
    const int n = m.rows();
    T one(Rat(1));
    T prev = one;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (is_zero_elem(m.at(k, k))) {
            int p = -1;
            for (int r = k + 1; r < n; ++r)
                if (!is_zero_elem(m.at(r, k))) {
                    p = r;
                    break;
                }
            if (p < 0)
                return T{};
            for (int c = 0; c < n; ++c)
                std::swap(m.at(k, c), m.at(p, c));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m.at(i, j) = exact_quot<T>(m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j), prev);
        prev = m.at(k, k);
    }
    T d = m.at(n - 1, n - 1);
    return sign > 0 ? d : T{} - d;
}

template <class T>
T det_impl(const Matrix<T>& m)
{
    if (m.rows() != m.cols())
        throw dimension_error("determinant of non-square matrix");
    const int n = m.rows();
    if (n <= 4) {
        std::vector<int> idx(n);
        for (int i = 0; i < n; ++i)
            idx[i] = i;
        return cofactor_det(m, idx, idx);
    }
    return bareiss_det(m);
}

} // namespace

Rat det(const RationalMatrix& m) { return det_impl(m); }
Laurent det(const LaurentMatrix& m) { return det_impl(m); }

std::vector<int> rref(RationalMatrix& m)
{
    std::vector<int> pivots;
    int lead = 0;
    for (int r = 0; r < m.rows() && lead < m.cols(); ++r) {
        int i = r;
        while (i < m.rows() && m.at(i, lead) == 0)
            ++i;
        if (i == m.rows()) {
            ++lead;
            --r;
            continue;
        }
        if (i != r)
            for (int c = 0; c < m.cols(); ++c)
                std::swap(m.at(i, c), m.at(r, c));
        Rat inv = m.at(r, lead);
        for (int c = 0; c < m.cols(); ++c)
            m.at(r, c) /= inv;
        for (int rr = 0; rr < m.rows(); ++rr) {
            if (rr == r || m.at(rr, lead) == 0)
                continue;
            Rat f = m.at(rr, lead);
            for (int c = 0; c < m.cols(); ++c)
                m.at(rr, c) -= f * m.at(r, c);
        }
        pivots.push_back(lead);
        ++lead;
    }
    return pivots;
}

std::vector<std::vector<Rat>> nullspace(const RationalMatrix& m)
{
    RationalMatrix r = m;
    std::vector<int> pivots = rref(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int p : pivots)
        is_pivot[p] = true;
    std::vector<std::vector<Rat>> basis;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        std::vector<Rat> v(m.cols(), Rat(0));
        v[free] = 1;
        for (std::size_t pi = 0; pi < pivots.size(); ++pi)
            v[pivots[pi]] = -r.at(static_cast<int>(pi), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace finik
