#include <cmath>
#include <numeric>
#include <string>

#include "qtoric/errors.hpp"
#include "qtoric/qseries.hpp"
#include "qtoric/quadratic.hpp"

namespace qtoric {

namespace {

constexpr long double kPi = 3.141592653589793238462643383279502884L;
constexpr long double kProbeT = 1.15L;
constexpr double kCutoffConstant = 10.0;

// Gamma(s, x) / Gamma(s) for integer s >= 1
long double gamma_star(int s, long double x)
{
    long double term = 1, sum = 1;
    for (int j = 1; j < s; ++j) {
        term *= x / j;
        sum += term;
    }
    return std::exp(-x) * sum;
}

long double q_factor(std::int64_t M) { return std::sqrt(static_cast<long double>(M)) / (2 * kPi); }

void check_weight(int k)
{
    if (k < 2 || k % 2 != 0)
        throw InvalidInput("weight must be even and at least 2");
}

}  // namespace

std::int64_t twisted_conductor(std::int64_t N, std::int64_t d)
{
    if (N < 1 || !is_squarefree(N))
        throw InvalidInput("level must be a positive squarefree integer");
    require_fundamental(d);
    std::int64_t g = std::gcd(N, -d);
    return d * d * (N / g);
}

std::int64_t required_terms(int k, std::int64_t N, std::int64_t d, double tol)
{
    check_weight(k);
    if (!(tol > 0))
        throw InvalidInput("tolerance must be positive");
    std::int64_t M = twisted_conductor(N, d);
    long double Q = q_factor(M);
    auto base = static_cast<std::int64_t>(std::ceil(kCutoffConstant * std::sqrt(double(M))));
    // |a_n chi(n)| n^{-k/2} <= d(n) n^{-1/2} <= 2; the smallest split point probed is 1/kProbeT
    long double c = kProbeT * Q;
    long double geometric = 1 / (1 - std::exp(-1 / c));
    auto n = static_cast<std::int64_t>(std::ceil(2 * (k / 2) * c));
    while (8 * gamma_star(k / 2, n / c) * geometric >= tol / 10)
        n += 1 + n / 16;
    return std::max(base, n);
}

double twisted_central_value_at(const QSeries& f, int k, std::int64_t N, std::int64_t d,
                                int epsilon, double t, std::int64_t terms)
{
    check_weight(k);
    if (epsilon != 1 && epsilon != -1)
        throw InvalidInput("epsilon must be +1 or -1");
    if (!(t > 0))
        throw InvalidInput("split point must be positive");
    if (terms > f.nmax())
        throw InvalidInput("need " + std::to_string(terms) + " coefficients, have " +
                           std::to_string(f.nmax()));
    long double Q = q_factor(twisted_conductor(N, d));
    const int s = k / 2;
    long double sum = 0;
    for (std::int64_t n = 1; n <= terms; ++n) {
        int chi = kronecker(d, n);
        std::int64_t an = f[n];
        if (chi == 0 || an == 0)
            continue;
        long double x = static_cast<long double>(n) / Q;
        long double w = gamma_star(s, x * t) + epsilon * gamma_star(s, x / t);
        sum += chi * static_cast<long double>(an) * std::pow(static_cast<long double>(n), -s) * w;
    }
    return static_cast<double>(sum);
}

double twisted_central_value(const QSeries& f, int k, std::int64_t N, std::int64_t d, int epsilon,
                             double tol)
{
    std::int64_t need = required_terms(k, N, d, tol);
    if (f.nmax() < need)
        throw InvalidInput("insufficient coefficients: need nmax >= " + std::to_string(need) +
                           ", have " + std::to_string(f.nmax()));
    return twisted_central_value_at(f, k, N, d, epsilon, 1.0, need);
}

int functional_equation_sign_probe(const QSeries& f, int k, std::int64_t N, std::int64_t d,
                                   double tol)
{
    std::int64_t need = required_terms(k, N, d, tol);
    if (f.nmax() < need)
        throw InvalidInput("insufficient coefficients: need nmax >= " + std::to_string(need) +
                           ", have " + std::to_string(f.nmax()));
    bool fits[2];
    for (int i = 0; i < 2; ++i) {
        int e = i == 0 ? 1 : -1;
        double a = twisted_central_value_at(f, k, N, d, e, 1.0, need);
        double b = twisted_central_value_at(f, k, N, d, e, static_cast<double>(kProbeT), need);
        fits[i] = std::abs(a - b) <= tol;
    }
    if (fits[0] && fits[1])
        throw MathError("sign probe is ambiguous for Delta = " + std::to_string(d) +
                        "; retry with a smaller tolerance");
    if (!fits[0] && !fits[1])
        throw MathError("no sign satisfies the functional equation for Delta = " +
                        std::to_string(d) + "; coefficients or level are wrong");
    return fits[0] ? 1 : -1;
}

}  // namespace qtoric
