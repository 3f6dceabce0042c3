#ifndef QTORIC_QUATERNION_HPP
#define QTORIC_QUATERNION_HPP

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qtoric/enumerate.hpp"
#include "qtoric/linalg.hpp"

namespace qtoric {

// i^2 = a, j^2 = b, ij = -ji, both negative.
struct QuaternionAlgebra
{
    Rational a, b;

    QuaternionAlgebra(Rational a_, Rational b_);

    friend bool operator==(const QuaternionAlgebra& x, const QuaternionAlgebra& y)
    {
        return x.a == y.a && x.b == y.b;
    }
};

// Coordinates with respect to 1, i, j, ij.
class Quaternion
{
public:
    Quaternion(const QuaternionAlgebra& alg, Rational x0 = 0, Rational x1 = 0, Rational x2 = 0,
               Rational x3 = 0);
    Quaternion(const QuaternionAlgebra& alg, const RatVector& coords);

    const QuaternionAlgebra& algebra() const { return alg_; }
    const Rational& operator[](std::size_t i) const { return c_[i]; }
    Rational& operator[](std::size_t i) { return c_[i]; }
    RatVector coords() const { return RatVector(c_.begin(), c_.end()); }

    Quaternion conjugate() const;
    Rational trace() const;
    Rational norm() const;
    Quaternion inverse() const;

    friend Quaternion operator*(const Quaternion& x, const Quaternion& y);
    friend Quaternion operator+(const Quaternion& x, const Quaternion& y);
    friend Quaternion operator-(const Quaternion& x, const Quaternion& y);
    friend Quaternion operator*(const Rational& s, const Quaternion& x);
    friend bool operator==(const Quaternion& x, const Quaternion& y);

    std::string str() const;

private:
    QuaternionAlgebra alg_;
    std::array<Rational, 4> c_;
};

Quaternion multiply(const Quaternion& x, const Quaternion& y);
Quaternion conjugate(const Quaternion& x);
Rational trace(const Quaternion& x);
Rational norm(const Quaternion& x);

// Tr(x conj(y)) / 2, the bilinear form with Q(x, x) = Nm(x).
Rational norm_pairing(const Quaternion& x, const Quaternion& y);

class Order
{
public:
    // Validates 1 in O, closure under products, integrality of Tr and Nm.
    Order(const QuaternionAlgebra& alg, std::vector<Quaternion> basis);

    const QuaternionAlgebra& algebra() const { return alg_; }
    const std::vector<Quaternion>& basis() const { return basis_; }
    const RatMatrix& basis_matrix() const { return b_; }

    std::optional<IntVector> coordinates(const Quaternion& x) const;
    bool contains(const Quaternion& x) const { return coordinates(x).has_value(); }
    Quaternion element(const IntVector& c) const;

    // (Tr(e_i conj e_j)), so that c G c^T = 2 Nm(sum c_i e_i).
    const IntMatrix& norm_gram() const { return gram2_; }
    // sqrt(det(norm_gram)); equals disc(D) * level for an Eichler order.
    Integer reduced_discriminant() const;

    // Every x in O with Nm(x) = n.
    std::vector<Quaternion> elements_of_norm(const Integer& n) const;

private:
    QuaternionAlgebra alg_;
    std::vector<Quaternion> basis_;
    RatMatrix b_, binv_;
    IntMatrix gram2_;
};

bool order_contains(const Order& o, const Quaternion& x);

class TraceZeroLattice
{
public:
    TraceZeroLattice(const Order& o, std::vector<Quaternion> basis);

    const Order& order() const { return order_; }
    const std::vector<Quaternion>& basis() const { return basis_; }
    const IntMatrix& gram() const { return gram_; }
    const Gram3& gram3() const { return gram3_; }

    // The coordinate map T on trace-zero elements (rational coordinates).
    RatVector coordinates(const Quaternion& x) const;
    Quaternion element(const RatVector& v) const;
    Quaternion element(const Vec3& v) const;

private:
    Order order_;
    std::vector<Quaternion> basis_;
    RatMatrix pure_inv_;
    IntMatrix gram_;
    Gram3 gram3_;
};

// Basis of L(O) = {x in Z + 2O : Tr(x) = 0}, read off an HNF.
std::vector<Quaternion> compute_trace_zero_basis(const Order& o);

// Checks the chosen basis spans exactly L(O); throws with the computed basis otherwise.
TraceZeroLattice trace_zero_lattice(const Order& o, const std::vector<Quaternion>& chosen);

// Rows are T(g^-1 b_i g), so T(g^-1 x g) = T(x) F(g).
RatMatrix rotation_F(const TraceZeroLattice& L, const Quaternion& g);

class UnitGroup
{
public:
    explicit UnitGroup(std::vector<IntMatrix> elements);

    const std::vector<IntMatrix>& elements() const { return elems_; }
    std::size_t size() const { return elems_.size(); }
    bool contains(const IntMatrix& m) const { return set_.count(m) > 0; }

private:
    std::vector<IntMatrix> elems_;
    std::set<IntMatrix> set_;
};

UnitGroup unit_group(const Order& o, const TraceZeroLattice& L);

}  // namespace qtoric

#endif
