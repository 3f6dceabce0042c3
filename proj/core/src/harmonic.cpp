#include "qtoric/harmonic.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace qtoric {

Poly3::Poly3(int degree) : degree_(degree), c_(dimension(degree), Rational(0))
{
    if (degree < 0)
        throw InvalidInput("polynomial degree must be nonnegative");
}

Poly3::Poly3(int degree, RatVector coeffs) : degree_(degree), c_(std::move(coeffs))
{
    if (degree < 0 || c_.size() != dimension(degree))
        throw InvalidInput("coefficient vector does not match the degree");
}

std::size_t Poly3::dimension(int degree)
{
    return static_cast<std::size_t>((degree + 1) * (degree + 2) / 2);
}

const std::vector<Exponent>& Poly3::monomials(int degree)
{
    static std::mutex mu;
    static std::map<int, std::vector<Exponent>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(degree);
    if (it != cache.end())
        return it->second;
    std::vector<Exponent> m;
    for (int a = degree; a >= 0; --a)
        for (int b = degree - a; b >= 0; --b)
            m.push_back({a, b, degree - a - b});
    return cache.emplace(degree, std::move(m)).first->second;
}

std::size_t Poly3::index(const Exponent& e)
{
    int l = e[0] + e[1] + e[2];
    int t = l - e[0];
    return static_cast<std::size_t>(t * (t + 1) / 2 + (t - e[1]));
}

void Poly3::set(const Exponent& e, const Rational& r)
{
    if (e[0] + e[1] + e[2] != degree_ || e[0] < 0 || e[1] < 0 || e[2] < 0)
        throw InvalidInput("monomial of the wrong degree");
    c_[index(e)] = r;
}

void Poly3::add(const Exponent& e, const Rational& r)
{
    if (e[0] + e[1] + e[2] != degree_ || e[0] < 0 || e[1] < 0 || e[2] < 0)
        throw InvalidInput("monomial of the wrong degree");
    c_[index(e)] += r;
}

bool Poly3::is_zero() const
{
    for (const auto& x : c_)
        if (x != 0)
            return false;
    return true;
}

Rational Poly3::evaluate(const RatVector& x) const
{
    if (x.size() != 3)
        throw InvalidInput("evaluation point must have three coordinates");
    Rational s = 0;
    const auto& mons = monomials(degree_);
    for (std::size_t k = 0; k < mons.size(); ++k) {
        if (c_[k] == 0)
            continue;
        Rational t = c_[k];
        for (int i = 0; i < 3; ++i)
            for (int r = 0; r < mons[k][i]; ++r)
                t *= x[i];
        s += t;
    }
    return s;
}

Rational Poly3::evaluate(const Vec3& x) const
{
    return evaluate(RatVector{Rational(static_cast<long>(x[0])), Rational(static_cast<long>(x[1])),
                              Rational(static_cast<long>(x[2]))});
}

Poly3 Poly3::primitive() const
{
    if (is_zero())
        return *this;
    Integer den = 1, g = 0;
    for (const auto& x : c_)
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    for (const auto& x : c_) {
        Rational y = x * den;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), y.get_num_mpz_t());
    }
    Rational scale(den, g);
    scale.canonicalize();
    for (const auto& x : c_)
        if (x != 0) {
            if (x < 0)
                scale = -scale;
            break;
        }
    return scale * *this;
}

Poly3 Poly3::variable(int i)
{
    Poly3 p(1);
    Exponent e{0, 0, 0};
    e[static_cast<std::size_t>(i)] = 1;
    p.set(e, 1);
    return p;
}

Poly3 operator+(const Poly3& p, const Poly3& q)
{
    if (p.degree_ != q.degree_)
        throw InvalidInput("adding polynomials of different degrees");
    Poly3 r = p;
    for (std::size_t k = 0; k < r.c_.size(); ++k)
        r.c_[k] += q.c_[k];
    return r;
}

Poly3 operator-(const Poly3& p, const Poly3& q) { return p + Rational(-1) * q; }

Poly3 operator*(const Poly3& p, const Poly3& q)
{
    Poly3 r(p.degree_ + q.degree_);
    const auto& mp = Poly3::monomials(p.degree_);
    const auto& mq = Poly3::monomials(q.degree_);
    for (std::size_t a = 0; a < mp.size(); ++a) {
        if (p.c_[a] == 0)
            continue;
        for (std::size_t b = 0; b < mq.size(); ++b) {
            if (q.c_[b] == 0)
                continue;
            Exponent e{mp[a][0] + mq[b][0], mp[a][1] + mq[b][1], mp[a][2] + mq[b][2]};
            r.c_[Poly3::index(e)] += p.c_[a] * q.c_[b];
        }
    }
    return r;
}

Poly3 operator*(const Rational& s, const Poly3& p)
{
    Poly3 r = p;
    for (auto& x : r.c_)
        x *= s;
    return r;
}

bool operator==(const Poly3& p, const Poly3& q) { return p.degree_ == q.degree_ && p.c_ == q.c_; }

std::string Poly3::str() const
{
    std::ostringstream os;
    bool first = true;
    const auto& mons = monomials(degree_);
    for (std::size_t k = 0; k < mons.size(); ++k) {
        if (c_[k] == 0)
            continue;
        Rational c = c_[k];
        if (!first)
            os << (c < 0 ? " - " : " + ");
        else if (c < 0)
            os << "-";
        first = false;
        Rational a = abs(c);
        bool constant = mons[k][0] + mons[k][1] + mons[k][2] == 0;
        if (a != 1 || constant)
            os << a;
        for (int i = 0; i < 3; ++i) {
            if (mons[k][i] == 0)
                continue;
            os << "x" << (i + 1);
            if (mons[k][i] > 1)
                os << "^" << mons[k][i];
        }
    }
    if (first)
        os << "0";
    return os.str();
}

std::optional<Rational> proportionality(const Poly3& p, const Poly3& q)
{
    if (p.degree() != q.degree() || q.is_zero())
        return std::nullopt;
    std::optional<Rational> r;
    for (std::size_t k = 0; k < q.coeffs().size(); ++k) {
        if (q.coeffs()[k] == 0) {
            if (p.coeffs()[k] != 0)
                return std::nullopt;
            continue;
        }
        Rational t = p.coeffs()[k] / q.coeffs()[k];
        if (r && *r != t)
            return std::nullopt;
        r = t;
    }
    return r;
}

Poly3 laplace_with_inverse(const RatMatrix& qi, const Poly3& p)
{
    if (p.degree() < 2)
        return Poly3(0);
    Poly3 r(p.degree() - 2);
    const auto& mons = Poly3::monomials(p.degree());
    for (std::size_t k = 0; k < mons.size(); ++k) {
        const Rational& c = p.coeffs()[k];
        if (c == 0)
            continue;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                const Rational& q = qi(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
                if (q == 0)
                    continue;
                Exponent e = mons[k];
                long f = e[i];
                e[i] -= 1;
                if (f == 0)
                    continue;
                long g = e[j];
                e[j] -= 1;
                if (g == 0)
                    continue;
                r.add(e, c * q * f * g);
            }
    }
    return r;
}

Poly3 laplace(const IntMatrix& gram, const Poly3& p)
{
    return laplace_with_inverse(inverse(to_rational(gram)), p);
}

Poly3 act_rho(const RatMatrix& F, const Poly3& p)
{
    if (F.rows() != 3 || F.cols() != 3)
        throw InvalidInput("act_rho needs a 3x3 matrix");
    const int l = p.degree();
    // x_j -> sum_i x_i F_ij
    std::array<std::vector<Poly3>, 3> powers;
    for (int j = 0; j < 3; ++j) {
        Poly3 lin(1);
        for (int i = 0; i < 3; ++i) {
            Exponent e{0, 0, 0};
            e[i] = 1;
            lin.set(e, F(static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
        }
        Poly3 one(0);
        one.set({0, 0, 0}, 1);
        powers[j].push_back(one);
        for (int r = 1; r <= l; ++r)
            powers[j].push_back(powers[j].back() * lin);
    }
    Poly3 out(l);
    const auto& mons = Poly3::monomials(l);
    for (std::size_t k = 0; k < mons.size(); ++k) {
        const Rational& c = p.coeffs()[k];
        if (c == 0)
            continue;
        out = out + c * (powers[0][mons[k][0]] * powers[1][mons[k][1]] * powers[2][mons[k][2]]);
    }
    return out;
}

std::vector<Poly3> harmonic_basis(const IntMatrix& gram, int degree)
{
    RatMatrix qi = inverse(to_rational(gram));
    std::size_t n = Poly3::dimension(degree);
    if (degree < 2) {
        std::vector<Poly3> all;
        for (std::size_t k = 0; k < n; ++k) {
            Poly3 p(degree);
            p.set(Poly3::monomials(degree)[k], 1);
            all.push_back(p);
        }
        return all;
    }
    std::size_t m = Poly3::dimension(degree - 2);
    RatMatrix a(m, n);
    for (std::size_t k = 0; k < n; ++k) {
        Poly3 p(degree);
        p.set(Poly3::monomials(degree)[k], 1);
        Poly3 d = laplace_with_inverse(qi, p);
        for (std::size_t r = 0; r < m; ++r)
            a(r, k) = d.coeffs()[r];
    }
    std::vector<Poly3> out;
    for (auto& v : rational_kernel(a))
        out.emplace_back(degree, std::move(v));
    return out;
}

HarmonicSpace invariant_harmonics(const TraceZeroLattice& L, const UnitGroup& units, int degree,
                                  std::string case_id)
{
    auto harm = harmonic_basis(L.gram(), degree);
    HarmonicSpace space{std::move(case_id), degree, {}};
    if (harm.empty())
        return space;
    std::size_t n = Poly3::dimension(degree);
    // stack (rho(g) - 1) applied to the harmonic basis, solve for fixed combinations
    RatMatrix a(n * units.size(), harm.size());
    for (std::size_t g = 0; g < units.size(); ++g) {
        RatMatrix F = to_rational(units.elements()[g]);
        for (std::size_t k = 0; k < harm.size(); ++k) {
            Poly3 d = act_rho(F, harm[k]) - harm[k];
            for (std::size_t r = 0; r < n; ++r)
                a(g * n + r, k) = d.coeffs()[r];
        }
    }
    for (const auto& c : rational_kernel(a)) {
        Poly3 p(degree);
        for (std::size_t k = 0; k < harm.size(); ++k)
            if (c[k] != 0)
                p = p + c[k] * harm[k];
        space.basis.push_back(p.primitive());
    }
    return space;
}

std::vector<RatMatrix> hecke_coset_reps(const TraceZeroLattice& L, const UnitGroup& units,
                                        const Integer& disc_order, long p)
{
    if (p < 2)
        throw InvalidInput("Hecke operators need a prime p");
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0)
            throw InvalidInput(std::to_string(p) + " is not prime");
    if (disc_order % p == 0)
        throw InvalidInput("T_" + std::to_string(p) + " is only defined for p not dividing disc(O)");
    std::vector<RatMatrix> reps, rep_inv;
    for (const auto& x : L.order().elements_of_norm(p)) {
        RatMatrix F = rotation_F(L, x);
        bool found = false;
        for (const auto& ri : rep_inv) {
            RatMatrix u = F * ri;
            bool integral = true;
            for (std::size_t i = 0; i < 3 && integral; ++i)
                for (std::size_t j = 0; j < 3 && integral; ++j)
                    integral = is_integer(u(i, j));
            if (integral && units.contains(to_integer(u))) {
                found = true;
                break;
            }
        }
        if (!found) {
            rep_inv.push_back(inverse(F));
            reps.push_back(std::move(F));
        }
    }
    if (reps.size() != static_cast<std::size_t>(p + 1))
        throw MathError("found " + std::to_string(reps.size()) + " cosets of norm-" +
                        std::to_string(p) + " elements, expected " + std::to_string(p + 1));
    return reps;
}

Poly3 hecke_apply(const std::vector<RatMatrix>& reps, const Poly3& phi)
{
    Poly3 out(phi.degree());
    for (const auto& F : reps)
        out = out + act_rho(inverse(F), phi);
    return out;
}

Integer hecke_eigenvalue(const TraceZeroLattice& L, const UnitGroup& units,
                         const Integer& disc_order, long p, const Poly3& phi)
{
    auto reps = hecke_coset_reps(L, units, disc_order, p);
    Poly3 t = hecke_apply(reps, phi);
    Rational lambda = 0;
    if (!t.is_zero()) {
        auto r = proportionality(t, phi);
        if (!r)
            throw MathError("T_" + std::to_string(p) + " phi is not a multiple of phi");
        lambda = *r;
    }
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>(phi.degree()));
    Rational a = lambda * scale;
    if (!is_integer(a))
        throw MathError("normalized Hecke eigenvalue " + to_string(a) + " is not an integer");
    return a.get_num();
}

}  // namespace qtoric
