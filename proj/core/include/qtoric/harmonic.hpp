#ifndef QTORIC_HARMONIC_HPP
#define QTORIC_HARMONIC_HPP

#include <array>
#include <string>
#include <vector>

#include "qtoric/quaternion.hpp"

namespace qtoric {

using Exponent = std::array<int, 3>;

// Homogeneous polynomial in x1, x2, x3 of fixed degree. Coefficients are kept
// densely in graded lexicographic order: x1^l, x1^(l-1) x2, x1^(l-1) x3, ...
class Poly3
{
public:
    explicit Poly3(int degree = 0);
    Poly3(int degree, RatVector coeffs);

    int degree() const { return degree_; }
    static std::size_t dimension(int degree);
    static const std::vector<Exponent>& monomials(int degree);
    static std::size_t index(const Exponent& e);

    const RatVector& coeffs() const { return c_; }
    const Rational& coefficient(const Exponent& e) const { return c_[index(e)]; }
    void set(const Exponent& e, const Rational& r);
    void add(const Exponent& e, const Rational& r);

    bool is_zero() const;
    Rational evaluate(const RatVector& x) const;
    Rational evaluate(const Vec3& x) const;

    // Scaled to integral coefficients with gcd 1 and positive leading term.
    Poly3 primitive() const;

    static Poly3 variable(int i);

    friend Poly3 operator+(const Poly3& p, const Poly3& q);
    friend Poly3 operator-(const Poly3& p, const Poly3& q);
    friend Poly3 operator*(const Poly3& p, const Poly3& q);
    friend Poly3 operator*(const Rational& s, const Poly3& p);
    friend bool operator==(const Poly3& p, const Poly3& q);

    std::string str() const;

private:
    int degree_;
    RatVector c_;
};

// Some r with p = r q, if any (q nonzero).
std::optional<Rational> proportionality(const Poly3& p, const Poly3& q);

Poly3 laplace(const IntMatrix& gram, const Poly3& p);
Poly3 laplace_with_inverse(const RatMatrix& gram_inverse, const Poly3& p);

// (rho(F) p)(x) = p(x F) for a row vector x.
Poly3 act_rho(const RatMatrix& F, const Poly3& p);

struct HarmonicSpace
{
    std::string case_id;
    int degree = 0;
    std::vector<Poly3> basis;
};

std::vector<Poly3> harmonic_basis(const IntMatrix& gram, int degree);

HarmonicSpace invariant_harmonics(const TraceZeroLattice& L, const UnitGroup& units, int degree,
                                  std::string case_id = {});

// One F(gamma) per left coset Gamma gamma of the norm-p elements.
std::vector<RatMatrix> hecke_coset_reps(const TraceZeroLattice& L, const UnitGroup& units,
                                        const Integer& disc_order, long p);

// Sum over cosets of p(x F(gamma^-1)).
Poly3 hecke_apply(const std::vector<RatMatrix>& reps, const Poly3& p);

// p^l times the eigenvalue of the Hecke operator on phi, i.e. the classical a_p.
Integer hecke_eigenvalue(const TraceZeroLattice& L, const UnitGroup& units,
                         const Integer& disc_order, long p, const Poly3& phi);

}  // namespace qtoric

#endif
