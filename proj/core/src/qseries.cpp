#include "qtoric/qseries.hpp"

#include <string>

#include "qtoric/errors.hpp"

namespace qtoric {

QSeries::QSeries(std::vector<std::int64_t> coeffs) : a_(std::move(coeffs)) {}

std::int64_t QSeries::operator[](std::int64_t n) const
{
    if (n < 1 || n > nmax())
        throw InvalidInput("coefficient index " + std::to_string(n) + " outside 1.." +
                           std::to_string(nmax()));
    return a_[static_cast<std::size_t>(n - 1)];
}

namespace {

std::int64_t checked(__int128 x)
{
    if (x > INT64_MAX || x < INT64_MIN)
        throw MathError("eta expansion overflows 64-bit coefficients");
    return static_cast<std::int64_t>(x);
}

// Euler: prod (1 - q^n) = sum (-1)^j q^{j(3j-1)/2}, j in Z
std::vector<std::pair<std::int64_t, int>> pentagonal(std::int64_t len, std::int64_t m)
{
    std::vector<std::pair<std::int64_t, int>> out{{0, 1}};
    for (std::int64_t j = 1;; ++j) {
        std::int64_t e1 = m * (j * (3 * j - 1) / 2);
        std::int64_t e2 = m * (j * (3 * j + 1) / 2);
        if (e1 >= len)
            break;
        int s = (j % 2) ? -1 : 1;
        out.emplace_back(e1, s);
        if (e2 < len)
            out.emplace_back(e2, s);
    }
    return out;
}

// Power series of prod_(m,r) prod_n (1 - q^{mn})^r to q^{len-1}
std::vector<std::int64_t> product_series(const std::vector<std::pair<int, int>>& factors,
                                         std::int64_t len)
{
    std::vector<std::int64_t> s(static_cast<std::size_t>(len), 0);
    s[0] = 1;
    for (auto [m, r] : factors) {
        auto p = pentagonal(len, m);
        for (int rep = 0; rep < r; ++rep) {
            std::vector<std::int64_t> t(s.size(), 0);
            for (std::int64_t n = 0; n < len; ++n) {
                if (s[static_cast<std::size_t>(n)] == 0)
                    continue;
                for (auto [e, sign] : p) {
                    if (n + e >= len)
                        break;
                    auto& dst = t[static_cast<std::size_t>(n + e)];
                    dst = checked(static_cast<__int128>(dst) +
                                  static_cast<__int128>(sign) * s[static_cast<std::size_t>(n)]);
                }
            }
            s.swap(t);
        }
    }
    return s;
}

}  // namespace

QSeries eta_expand(const EtaCombination& e, std::int64_t nmax)
{
    if (nmax < 1)
        throw InvalidInput("nmax must be at least 1");
    if (e.terms.empty())
        throw InvalidInput("empty eta combination");
    std::vector<std::int64_t> a(static_cast<std::size_t>(nmax), 0);
    for (const auto& term : e.terms) {
        std::int64_t num = 0;
        for (auto [m, r] : term.factors) {
            if (m <= 0 || r <= 0)
                throw InvalidInput("eta factors need positive m and r");
            num += static_cast<std::int64_t>(m) * r;
        }
        if (num % 24 != 0)
            throw InvalidInput("eta product has fractional q-valuation " + std::to_string(num) +
                               "/24");
        std::int64_t val = num / 24;
        if (val < 1)
            throw InvalidInput("eta product must vanish at infinity");
        if (val > nmax)
            continue;
        auto s = product_series(term.factors, nmax - val + 1);
        for (std::size_t i = 0; i < s.size(); ++i) {
            auto& dst = a[static_cast<std::size_t>(val - 1) + i];
            dst = checked(static_cast<__int128>(dst) +
                          static_cast<__int128>(term.coefficient) * s[i]);
        }
    }
    if (a[0] != 1)
        throw MathError("eta combination is not normalized: a_1 = " + std::to_string(a[0]));
    return QSeries(std::move(a));
}

QSeries eta_expand(const std::vector<std::pair<int, int>>& product, std::int64_t nmax)
{
    return eta_expand(EtaCombination{{EtaTerm{1, product}}}, nmax);
}

}  // namespace qtoric
