#ifndef QTORIC_QSERIES_HPP
#define QTORIC_QSERIES_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace qtoric {

struct EtaTerm
{
    std::int64_t coefficient = 1;
    std::vector<std::pair<int, int>> factors;  // (m, r): eta(m z)^r
};

// Integer combination of eta products, each q-valuation an integer.
struct EtaCombination
{
    std::vector<EtaTerm> terms;
};

class QSeries
{
public:
    QSeries() = default;
    explicit QSeries(std::vector<std::int64_t> coeffs);  // coeffs[0] is the q^1 coefficient

    std::int64_t nmax() const { return static_cast<std::int64_t>(a_.size()); }
    // a_n for 1 <= n <= nmax
    std::int64_t operator[](std::int64_t n) const;
    const std::vector<std::int64_t>& coefficients() const { return a_; }

private:
    std::vector<std::int64_t> a_;
};

// Exact expansion to q^nmax; throws MathError on int64 overflow.
QSeries eta_expand(const EtaCombination& e, std::int64_t nmax);
QSeries eta_expand(const std::vector<std::pair<int, int>>& product, std::int64_t nmax);

// Conductor of f (x) chi_Delta for squarefree level N.
std::int64_t twisted_conductor(std::int64_t N, std::int64_t d);

// Terms needed for the central value to absolute accuracy tol.
std::int64_t required_terms(int k, std::int64_t N, std::int64_t d, double tol);

// L(f (x) chi_Delta, k/2) by the smoothed approximate functional equation.
double twisted_central_value(const QSeries& f, int k, std::int64_t N, std::int64_t d, int epsilon,
                             double tol);

// Same sum split at y = t instead of y = 1; t-independent only for the true sign.
double twisted_central_value_at(const QSeries& f, int k, std::int64_t N, std::int64_t d,
                                int epsilon, double t, std::int64_t terms);

int functional_equation_sign_probe(const QSeries& f, int k, std::int64_t N, std::int64_t d,
                                   double tol);

}  // namespace qtoric

#endif
