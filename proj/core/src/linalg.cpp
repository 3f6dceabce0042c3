#include "qtoric/linalg.hpp"

#include <algorithm>
#include <utility>

namespace qtoric {

Rational parse_rational(std::string_view s)
{
    std::string t(s);
    t.erase(std::remove_if(t.begin(), t.end(), [](char c) { return c == ' '; }), t.end());
    if (t.empty())
        throw InvalidInput("empty rational");
    auto check = [&](const std::string& part) {
        std::size_t i = (part.size() > 0 && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
        if (i == part.size())
            throw InvalidInput("malformed rational '" + t + "'");
        for (; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9')
                throw InvalidInput("malformed rational '" + t + "'");
    };
    auto slash = t.find('/');
    std::string num = t.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
    check(num);
    check(den);
    if (num[0] == '+')
        num.erase(0, 1);
    if (den[0] == '+')
        den.erase(0, 1);
    Integer n(num), d(den);
    if (d == 0)
        throw InvalidInput("zero denominator in '" + t + "'");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

bool is_integer(const Rational& r) { return r.get_den() == 1; }

RatMatrix to_rational(const IntMatrix& m)
{
    RatMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            r(i, j) = Rational(m(i, j));
    return r;
}

IntMatrix to_integer(const RatMatrix& m)
{
    IntMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (!is_integer(m(i, j)))
                throw MathError("non-integral entry " + to_string(m(i, j)));
            r(i, j) = m(i, j).get_num();
        }
    return r;
}

RatVector row_times(const RatVector& v, const RatMatrix& m)
{
    if (v.size() != m.rows())
        throw InvalidInput("dimension mismatch in vector-matrix product");
    RatVector out(m.cols(), Rational(0));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (v[i] == 0)
            continue;
        for (std::size_t j = 0; j < m.cols(); ++j)
            out[j] += v[i] * m(i, j);
    }
    return out;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& a)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && a(p, c) == 0)
            ++p;
        if (p == a.rows())
            continue;
        if (p != r)
            for (std::size_t j = 0; j < a.cols(); ++j)
                std::swap(a(p, j), a(r, j));
        Rational inv = 1 / a(r, c);
        for (std::size_t j = c; j < a.cols(); ++j)
            a(r, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, c) == 0)
                continue;
            Rational f = a(i, c);
            for (std::size_t j = c; j < a.cols(); ++j)
                a(i, j) -= f * a(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::size_t rank(const RatMatrix& m)
{
    RatMatrix a = m;
    return rref(a).size();
}

Rational determinant(const RatMatrix& m)
{
    if (m.rows() != m.cols())
        throw InvalidInput("determinant of a non-square matrix");
    RatMatrix a = m;
    Rational det = 1;
    std::size_t n = a.rows();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a(p, c) == 0)
            ++p;
        if (p == n)
            return 0;
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a(p, j), a(c, j));
            det = -det;
        }
        det *= a(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a(i, c) == 0)
                continue;
            Rational f = a(i, c) / a(c, c);
            for (std::size_t j = c; j < n; ++j)
                a(i, j) -= f * a(c, j);
        }
    }
    return det;
}

RatMatrix inverse(const RatMatrix& m)
{
    std::size_t n = m.rows();
    if (n != m.cols())
        throw InvalidInput("inverse of a non-square matrix");
    RatMatrix a(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            a(i, j) = m(i, j);
        a(i, n + i) = 1;
    }
    auto piv = rref(a);
    if (piv.size() < n || piv[n - 1] != n - 1)
        throw MathError("singular matrix");
    RatMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv(i, j) = a(i, n + j);
    return inv;
}

std::vector<RatVector> rational_kernel(const RatMatrix& m)
{
    RatMatrix a = m;
    auto piv = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto c : piv)
        is_pivot[c] = true;
    std::vector<RatVector> basis;
    for (std::size_t f = 0; f < a.cols(); ++f) {
        if (is_pivot[f])
            continue;
        RatVector v(a.cols(), Rational(0));
        v[f] = 1;
        for (std::size_t r = 0; r < piv.size(); ++r)
            v[piv[r]] = -a(r, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<RatVector> solve_left(const RatMatrix& m, const RatVector& v)
{
    // x m = v  <=>  m^T x^T = v^T
    if (v.size() != m.cols())
        throw InvalidInput("dimension mismatch in solve");
    std::size_t n = m.rows();
    RatMatrix a(m.cols(), n + 1);
    for (std::size_t i = 0; i < m.cols(); ++i) {
        for (std::size_t j = 0; j < n; ++j)
            a(i, j) = m(j, i);
        a(i, n) = v[i];
    }
    auto piv = rref(a);
    if (!piv.empty() && piv.back() == n)
        return std::nullopt;
    RatVector x(n, Rational(0));
    for (std::size_t r = 0; r < piv.size(); ++r)
        x[piv[r]] = a(r, n);
    return x;
}

namespace {

// Echelon from the right; returns nonzero rows sorted by increasing pivot.
std::vector<IntVector> echelon(const IntMatrix& m)
{
    std::vector<IntVector> rows;
    for (std::size_t i = 0; i < m.rows(); ++i)
        rows.push_back(m.row(i));
    std::size_t n = m.cols();
    std::vector<IntVector> pivots;
    for (std::size_t cc = n; cc-- > 0;) {
        // gcd-combine column cc of the remaining rows into a single row
        for (;;) {
            std::size_t best = rows.size();
            for (std::size_t i = 0; i < rows.size(); ++i)
                if (rows[i][cc] != 0 &&
                    (best == rows.size() || abs(rows[i][cc]) < abs(rows[best][cc])))
                    best = i;
            if (best == rows.size())
                break;
            bool others = false;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (i == best || rows[i][cc] == 0)
                    continue;
                others = true;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), rows[i][cc].get_mpz_t(), rows[best][cc].get_mpz_t());
                for (std::size_t j = 0; j <= cc; ++j)
                    rows[i][j] -= q * rows[best][j];
            }
            if (!others) {
                IntVector p = std::move(rows[best]);
                rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(best));
                if (p[cc] < 0)
                    for (auto& x : p)
                        x = -x;
                pivots.push_back(std::move(p));
                break;
            }
        }
    }
    std::reverse(pivots.begin(), pivots.end());
    auto pivot_col = [&](const IntVector& r) {
        std::size_t c = r.size();
        while (c-- > 0)
            if (r[c] != 0)
                return c;
        return r.size();
    };
    for (std::size_t r = 1; r < pivots.size(); ++r)
        for (std::size_t i = r; i-- > 0;) {
            std::size_t c = pivot_col(pivots[i]);
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), pivots[r][c].get_mpz_t(), pivots[i][c].get_mpz_t());
            if (q != 0)
                for (std::size_t j = 0; j <= c; ++j)
                    pivots[r][j] -= q * pivots[i][j];
        }
    return pivots;
}

IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols)
{
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = rows[i][j];
    return m;
}

}  // namespace

IntMatrix hermite_normal_form(const IntMatrix& m)
{
    auto rows = echelon(m);
    if (rows.size() < m.rows())
        throw MathError("hermite_normal_form: input is rank deficient (rank " +
                        std::to_string(rows.size()) + " < " + std::to_string(m.rows()) + ")");
    return from_rows(rows, m.cols());
}

IntMatrix lattice_basis(const IntMatrix& generators)
{
    return from_rows(echelon(generators), generators.cols());
}

std::optional<IntVector> solve_integral(const IntMatrix& basis, const IntVector& v)
{
    if (v.size() != basis.cols())
        throw InvalidInput("solve_integral: dimension mismatch");
    RatVector rv(v.begin(), v.end());
    auto x = solve_left(to_rational(basis), rv);
    if (!x)
        return std::nullopt;
    // a solution exists; with full row rank it is unique
    if (rank(to_rational(basis)) < basis.rows())
        throw InvalidInput("solve_integral: basis is not linearly independent");
    IntVector out;
    for (const auto& c : *x) {
        if (!is_integer(c))
            return std::nullopt;
        out.push_back(c.get_num());
    }
    return out;
}

Integer common_denominator(const RatMatrix& m)
{
    Integer d = 1;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), m(i, j).get_den_mpz_t());
    return d;
}

}  // namespace qtoric
