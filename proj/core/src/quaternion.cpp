#include "qtoric/quaternion.hpp"

#include <algorithm>
#include <sstream>

namespace qtoric {

QuaternionAlgebra::QuaternionAlgebra(Rational a_, Rational b_) : a(std::move(a_)), b(std::move(b_))
{
    a.canonicalize();
    b.canonicalize();
    if (a >= 0 || b >= 0)
        throw InvalidInput("quaternion algebra (" + to_string(a) + "," + to_string(b) +
                           ") is not definite");
}

Quaternion::Quaternion(const QuaternionAlgebra& alg, Rational x0, Rational x1, Rational x2,
                       Rational x3)
    : alg_(alg), c_{std::move(x0), std::move(x1), std::move(x2), std::move(x3)}
{
}

Quaternion::Quaternion(const QuaternionAlgebra& alg, const RatVector& coords) : alg_(alg)
{
    if (coords.size() != 4)
        throw InvalidInput("a quaternion needs four coordinates");
    for (std::size_t i = 0; i < 4; ++i)
        c_[i] = coords[i];
}

Quaternion Quaternion::conjugate() const { return Quaternion(alg_, c_[0], -c_[1], -c_[2], -c_[3]); }

Rational Quaternion::trace() const { return 2 * c_[0]; }

Rational Quaternion::norm() const
{
    const Rational& a = alg_.a;
    const Rational& b = alg_.b;
    return c_[0] * c_[0] - a * c_[1] * c_[1] - b * c_[2] * c_[2] + a * b * c_[3] * c_[3];
}

Quaternion Quaternion::inverse() const
{
    Rational n = norm();
    if (n == 0)
        throw MathError("quaternion " + str() + " is not invertible");
    return (1 / n) * conjugate();
}

static void same_algebra(const Quaternion& x, const Quaternion& y)
{
    if (!(x.algebra() == y.algebra()))
        throw InvalidInput("quaternions from different algebras");
}

Quaternion operator*(const Quaternion& x, const Quaternion& y)
{
    same_algebra(x, y);
    const Rational& a = x.alg_.a;
    const Rational& b = x.alg_.b;
    const auto& p = x.c_;
    const auto& q = y.c_;
    return Quaternion(x.alg_,
                      p[0] * q[0] + a * p[1] * q[1] + b * p[2] * q[2] - a * b * p[3] * q[3],
                      p[0] * q[1] + p[1] * q[0] - b * p[2] * q[3] + b * p[3] * q[2],
                      p[0] * q[2] + p[2] * q[0] + a * p[1] * q[3] - a * p[3] * q[1],
                      p[0] * q[3] + p[3] * q[0] + p[1] * q[2] - p[2] * q[1]);
}

Quaternion operator+(const Quaternion& x, const Quaternion& y)
{
    same_algebra(x, y);
    return Quaternion(x.alg_, x.c_[0] + y.c_[0], x.c_[1] + y.c_[1], x.c_[2] + y.c_[2],
                      x.c_[3] + y.c_[3]);
}

Quaternion operator-(const Quaternion& x, const Quaternion& y)
{
    same_algebra(x, y);
    return Quaternion(x.alg_, x.c_[0] - y.c_[0], x.c_[1] - y.c_[1], x.c_[2] - y.c_[2],
                      x.c_[3] - y.c_[3]);
}

Quaternion operator*(const Rational& s, const Quaternion& x)
{
    return Quaternion(x.alg_, s * x.c_[0], s * x.c_[1], s * x.c_[2], s * x.c_[3]);
}

bool operator==(const Quaternion& x, const Quaternion& y)
{
    return x.alg_ == y.alg_ && x.c_ == y.c_;
}

std::string Quaternion::str() const
{
    std::ostringstream os;
    os << "(" << c_[0] << ", " << c_[1] << ", " << c_[2] << ", " << c_[3] << ")";
    return os.str();
}

Quaternion multiply(const Quaternion& x, const Quaternion& y) { return x * y; }
Quaternion conjugate(const Quaternion& x) { return x.conjugate(); }
Rational trace(const Quaternion& x) { return x.trace(); }
Rational norm(const Quaternion& x) { return x.norm(); }

Rational norm_pairing(const Quaternion& x, const Quaternion& y)
{
    return (x * y.conjugate()).trace() / 2;
}

Order::Order(const QuaternionAlgebra& alg, std::vector<Quaternion> basis)
    : alg_(alg), basis_(std::move(basis))
{
    if (basis_.size() != 4)
        throw InvalidInput("an order needs a basis of four elements");
    b_ = RatMatrix(4, 4);
    for (std::size_t i = 0; i < 4; ++i) {
        if (!(basis_[i].algebra() == alg_))
            throw InvalidInput("order basis element from a different algebra");
        for (std::size_t j = 0; j < 4; ++j)
            b_(i, j) = basis_[i][j];
    }
    if (determinant(b_) == 0)
        throw InvalidInput("order basis is linearly dependent");
    binv_ = inverse(b_);

    if (!contains(Quaternion(alg_, 1)))
        throw InvalidInput("order does not contain 1");
    for (const auto& x : basis_) {
        if (!is_integer(x.trace()) || !is_integer(x.norm()))
            throw InvalidInput("order basis element " + x.str() + " is not integral");
        for (const auto& y : basis_)
            if (!contains(x * y))
                throw InvalidInput("order basis is not closed under multiplication: " +
                                   x.str() + " * " + y.str());
    }
    gram2_ = IntMatrix(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            Rational t = (basis_[i] * basis_[j].conjugate()).trace();
            if (!is_integer(t))
                throw InvalidInput("order trace form is not integral");
            gram2_(i, j) = t.get_num();
        }
}

std::optional<IntVector> Order::coordinates(const Quaternion& x) const
{
    if (!(x.algebra() == alg_))
        throw InvalidInput("element from a different algebra");
    RatVector c = row_times(x.coords(), binv_);
    IntVector out;
    for (const auto& r : c) {
        if (!is_integer(r))
            return std::nullopt;
        out.push_back(r.get_num());
    }
    return out;
}

Quaternion Order::element(const IntVector& c) const
{
    if (c.size() != 4)
        throw InvalidInput("order coordinates must have length 4");
    RatVector v(c.begin(), c.end());
    return Quaternion(alg_, row_times(v, b_));
}

Integer Order::reduced_discriminant() const
{
    Rational d = determinant(to_rational(gram2_));
    Integer n = d.get_num();
    Integer r = sqrt(n);
    if (d.get_den() != 1 || r * r != n)
        throw MathError("order discriminant is not a square");
    return r;
}

std::vector<Quaternion> Order::elements_of_norm(const Integer& n) const
{
    std::vector<Quaternion> out;
    Integer target = 2 * n;
    enumerate_short_vectors(gram2_, target, [&](const std::vector<std::int64_t>& c, const Integer& v) {
        if (v != target)
            return;
        IntVector z;
        for (auto x : c)
            z.emplace_back(static_cast<long>(x));
        out.push_back(element(z));
    });
    return out;
}

bool order_contains(const Order& o, const Quaternion& x) { return o.contains(x); }

TraceZeroLattice::TraceZeroLattice(const Order& o, std::vector<Quaternion> basis)
    : order_(o), basis_(std::move(basis))
{
    if (basis_.size() != 3)
        throw InvalidInput("L(O) basis must have three elements");
    RatMatrix pure(3, 3);
    for (std::size_t i = 0; i < 3; ++i) {
        if (basis_[i].trace() != 0)
            throw InvalidInput("L(O) basis element " + basis_[i].str() + " has nonzero trace");
        for (std::size_t j = 0; j < 3; ++j)
            pure(i, j) = basis_[i][j + 1];
    }
    if (determinant(pure) == 0)
        throw InvalidInput("L(O) basis is linearly dependent");
    pure_inv_ = inverse(pure);
    gram_ = IntMatrix(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            Rational q = norm_pairing(basis_[i], basis_[j]);
            if (!is_integer(q))
                throw InvalidInput("L(O) Gram matrix is not integral");
            gram_(i, j) = q.get_num();
        }
    gram3_ = to_gram3(gram_);
}

RatVector TraceZeroLattice::coordinates(const Quaternion& x) const
{
    if (x.trace() != 0)
        throw InvalidInput("coordinate map applied to " + x.str() + " with nonzero trace");
    RatVector p{x[1], x[2], x[3]};
    return row_times(p, pure_inv_);
}

Quaternion TraceZeroLattice::element(const RatVector& v) const
{
    if (v.size() != 3)
        throw InvalidInput("L(O) coordinates must have length 3");
    Quaternion x(order_.algebra());
    for (std::size_t i = 0; i < 3; ++i)
        x = x + v[i] * basis_[i];
    return x;
}

Quaternion TraceZeroLattice::element(const Vec3& v) const
{
    RatVector r;
    for (auto x : v)
        r.emplace_back(static_cast<long>(x));
    return element(r);
}

namespace {

// Rows of quaternion coordinates in column order (i, j, ij, 1), scaled by d.
IntMatrix scaled_generators(const std::vector<Quaternion>& gens, const Integer& d)
{
    IntMatrix m(gens.size(), 4);
    for (std::size_t r = 0; r < gens.size(); ++r)
        for (std::size_t c = 0; c < 4; ++c) {
            Rational x = gens[r][(c + 1) % 4] * d;
            if (!is_integer(x))
                throw MathError("scaled generator is not integral");
            m(r, c) = x.get_num();
        }
    return m;
}

Integer denominator_of(const std::vector<Quaternion>& xs)
{
    Integer d = 1;
    for (const auto& x : xs)
        for (std::size_t c = 0; c < 4; ++c)
            mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), x[c].get_den_mpz_t());
    return d;
}

}  // namespace

std::vector<Quaternion> compute_trace_zero_basis(const Order& o)
{
    const auto& alg = o.algebra();
    std::vector<Quaternion> gens{Quaternion(alg, 1)};
    for (const auto& e : o.basis())
        gens.push_back(Rational(2) * e);
    Integer d = denominator_of(gens);
    IntMatrix h = lattice_basis(scaled_generators(gens, d));
    if (h.rows() != 4 || h(0, 3) != 0 || h(1, 3) != 0 || h(2, 3) != 0)
        throw MathError("unexpected shape of the Z + 2O lattice");
    std::vector<Quaternion> out;
    for (std::size_t r = 0; r < 3; ++r)
        out.emplace_back(alg, 0, Rational(h(r, 0), d), Rational(h(r, 1), d), Rational(h(r, 2), d));
    for (auto& q : out)
        for (std::size_t c = 0; c < 4; ++c)
            q[c].canonicalize();
    return out;
}

TraceZeroLattice trace_zero_lattice(const Order& o, const std::vector<Quaternion>& chosen)
{
    auto computed = compute_trace_zero_basis(o);
    if (chosen.size() != 3)
        throw InvalidInput("L(O) basis must have three elements");
    std::vector<Quaternion> all = computed;
    all.insert(all.end(), chosen.begin(), chosen.end());
    Integer d = denominator_of(all);
    IntMatrix a = lattice_basis(scaled_generators(computed, d));
    IntMatrix b(0, 4);
    bool ok = true;
    try {
        bool zero_trace = std::all_of(chosen.begin(), chosen.end(),
                                      [](const Quaternion& q) { return q.trace() == 0; });
        ok = zero_trace;
        if (ok) {
            b = lattice_basis(scaled_generators(chosen, d));
            ok = (b.rows() == 3 && a == b);
        }
    } catch (const MathError&) {
        ok = false;
    }
    if (!ok) {
        std::string msg = "chosen basis does not span L(O); computed basis:";
        for (const auto& q : computed)
            msg += " " + q.str();
        throw InvalidInput(msg);
    }
    return TraceZeroLattice(o, chosen);
}

RatMatrix rotation_F(const TraceZeroLattice& L, const Quaternion& g)
{
    if (g.norm() == 0)
        throw MathError("rotation_F: element has norm zero");
    Quaternion gi = g.inverse();
    RatMatrix f(3, 3);
    for (std::size_t i = 0; i < 3; ++i) {
        RatVector r = L.coordinates(gi * L.basis()[i] * g);
        for (std::size_t j = 0; j < 3; ++j)
            f(i, j) = r[j];
    }
    return f;
}

UnitGroup::UnitGroup(std::vector<IntMatrix> elements) : elems_(std::move(elements))
{
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
    set_.insert(elems_.begin(), elems_.end());
    for (const auto& x : elems_)
        for (const auto& y : elems_)
            if (!contains(x * y))
                throw MathError("unit group is not closed under products");
}

UnitGroup unit_group(const Order& o, const TraceZeroLattice& L)
{
    std::vector<IntMatrix> mats;
    for (const auto& u : o.elements_of_norm(1))
        mats.push_back(to_integer(rotation_F(L, u)));
    return UnitGroup(std::move(mats));
}

}  // namespace qtoric
