#include "qtoric/embeddings.hpp"

#include <algorithm>
#include <cstdlib>

namespace qtoric {

namespace {

using Mat3 = std::array<std::array<std::int64_t, 3>, 3>;

struct Context
{
    std::vector<Mat3> units;
    // 2D * coords_O(b) = t * one + v * lat, with D the common denominator
    std::array<std::int64_t, 4> one{};
    std::array<std::array<std::int64_t, 4>, 3> lat{};
    std::int64_t den2 = 2;

    explicit Context(const Case& c)
    {
        for (const auto& g : c.units.elements()) {
            Mat3 m{};
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = 0; j < 3; ++j)
                    m[i][j] = g(i, j).get_si();
            units.push_back(m);
        }
        RatMatrix binv = inverse(c.order.basis_matrix());
        RatMatrix rows(4, 4);
        RatVector u = row_times(Quaternion(c.order.algebra(), 1).coords(), binv);
        for (std::size_t j = 0; j < 4; ++j)
            rows(0, j) = u[j];
        for (std::size_t i = 0; i < 3; ++i) {
            RatVector r = row_times(c.lattice.basis()[i].coords(), binv);
            for (std::size_t j = 0; j < 4; ++j)
                rows(i + 1, j) = r[j];
        }
        Integer den = common_denominator(rows);
        den2 = 2 * den.get_si();
        for (std::size_t j = 0; j < 4; ++j) {
            one[j] = Rational(rows(0, j) * den).get_num().get_si();
            for (std::size_t i = 0; i < 3; ++i)
                lat[i][j] = Rational(rows(i + 1, j) * den).get_num().get_si();
        }
    }

    bool optimal(std::int64_t d, const Vec3& v) const
    {
        std::int64_t t = (d % 2 == 0) ? 0 : 1;
        for (std::size_t j = 0; j < 4; ++j) {
            std::int64_t s = t * one[j];
            for (std::size_t i = 0; i < 3; ++i)
                s += v[i] * lat[i][j];
            if (s % den2 != 0)
                return false;
        }
        return true;
    }

    std::vector<Vec3> orbit(const Vec3& v) const
    {
        std::vector<Vec3> out;
        out.reserve(units.size());
        for (const auto& g : units) {
            Vec3 w{0, 0, 0};
            for (std::size_t j = 0; j < 3; ++j)
                for (std::size_t i = 0; i < 3; ++i)
                    w[j] += v[i] * g[i][j];
            out.push_back(w);
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }
};

Quaternion b_of(const Case& c, std::int64_t d, const Vec3& v)
{
    Quaternion a = c.lattice.element(v);
    Rational t = (d % 2 == 0) ? 0 : 1;
    return Rational(1, 2) * (Quaternion(c.order.algebra(), t) + a);
}

EmbeddingClass make_class(const Case& c, const Context& ctx, std::int64_t d, const Vec3& v)
{
    auto orb = ctx.orbit(v);
    return EmbeddingClass{orb.front(), orb, b_of(c, d, orb.front())};
}

void check_norm(const Case& c, std::int64_t d, const Vec3& v)
{
    if (ternary_value(c.lattice.gram3(), v) != -d)
        throw InvalidInput("vector does not have norm -Delta = " + std::to_string(-d));
}

Vec3 to_vec3(const RatVector& r)
{
    Vec3 out{};
    for (std::size_t i = 0; i < 3; ++i) {
        if (!is_integer(r[i]) || !r[i].get_num().fits_slong_p())
            throw MathError("conjugated embedding left the lattice L(O)");
        out[i] = r[i].get_num().get_si();
    }
    return out;
}

}  // namespace

std::vector<Vec3> represent(const Gram3& gram, std::int64_t n) { return ternary_represent(gram, n); }

std::vector<Vec3> gamma_orbit(const Case& c, const Vec3& v) { return Context(c).orbit(v); }

bool is_optimal(const Case& c, std::int64_t d, const Vec3& v)
{
    check_norm(c, d, v);
    return Context(c).optimal(d, v);
}

std::optional<EmbeddingClass> optimal_embedding_from_vector(const Case& c, std::int64_t d,
                                                            const Vec3& v)
{
    check_norm(c, d, v);
    Context ctx(c);
    if (!ctx.optimal(d, v))
        return std::nullopt;
    if (!c.order.contains(b_of(c, d, v)))
        throw MathError("optimality test disagrees with order membership");
    return make_class(c, ctx, d, v);
}

std::vector<EmbeddingClass> gamma_classes(const Case& c, std::int64_t d,
                                          const std::vector<Vec3>& vectors)
{
    Context ctx(c);
    std::vector<Vec3> accepted;
    for (const auto& v : vectors) {
        check_norm(c, d, v);
        if (ctx.optimal(d, v))
            accepted.push_back(v);
    }
    std::sort(accepted.begin(), accepted.end());
    std::vector<EmbeddingClass> out;
    std::vector<Vec3> seen;
    for (const auto& v : accepted) {
        if (std::binary_search(seen.begin(), seen.end(), v))
            continue;
        auto cls = make_class(c, ctx, d, v);
        for (const auto& w : cls.orbit)
            if (!ctx.optimal(d, w))
                throw MathError("Gamma-orbit of an optimal embedding contains a non-optimal one");
        seen.insert(seen.end(), cls.orbit.begin(), cls.orbit.end());
        std::sort(seen.begin(), seen.end());
        out.push_back(std::move(cls));
    }
    return out;
}

std::int64_t eichler_count(const Case& c, std::int64_t d)
{
    std::int64_t h = class_number(d).h;
    for (auto p : c.disc_D_primes())
        h *= 1 - kronecker(d, p);
    for (auto q : c.level_primes())
        h *= 1 + kronecker(d, q);
    return h;
}

std::optional<EmbeddingClass> seed_class(const Case& c, std::int64_t d)
{
    if (eichler_count(c, d) == 0)
        return std::nullopt;
    Context ctx(c);
    for (const auto& v : represent(c.lattice.gram3(), -d))
        if (ctx.optimal(d, v))
            return make_class(c, ctx, d, v);
    throw MathError("no optimal embedding found although the Eichler count is " +
                    std::to_string(eichler_count(c, d)));
}

std::vector<Quaternion> ideal_generators(const Case& c, std::int64_t d, const Vec3& seed,
                                         const IdealRep& ideal, bool all)
{
    const auto& alg = c.order.algebra();
    Quaternion a = c.lattice.element(seed);
    Quaternion w = Rational(1, 2) * (Quaternion(alg, Rational(static_cast<long>(d))) + a);
    Quaternion ix(alg, Rational(static_cast<long>(ideal.x[0])));
    ix = ix + Rational(static_cast<long>(ideal.x[1])) * w;
    Quaternion iy(alg, Rational(static_cast<long>(ideal.y[0])));
    iy = iy + Rational(static_cast<long>(ideal.y[1])) * w;

    IntMatrix gens(8, 4);
    for (std::size_t k = 0; k < 4; ++k) {
        const auto& e = c.order.basis()[k];
        auto cx = c.order.coordinates(e * ix);
        auto cy = c.order.coordinates(e * iy);
        if (!cx || !cy)
            throw MathError("ideal generators are not in O; the seed embedding is not optimal");
        for (std::size_t j = 0; j < 4; ++j) {
            gens(k, j) = (*cx)[j];
            gens(4 + k, j) = (*cy)[j];
        }
    }
    IntMatrix h = lattice_basis(gens);
    if (h.rows() != 4)
        throw MathError("ideal lattice is not of rank 4");
    Integer index = abs(determinant(to_rational(h)).get_num());
    Integer nrd = sqrt(index);
    if (nrd * nrd != index || nrd != ideal.norm())
        throw MathError("[O : I] = " + to_string(index) + " is not the square of N(a) = " +
                        std::to_string(ideal.norm()));

    IntMatrix gi = h * c.order.norm_gram() * h.transpose();
    Integer target = 2 * nrd;
    std::vector<Quaternion> out;
    enumerate_short_vectors(gi, target, [&](const std::vector<std::int64_t>& x, const Integer& v) {
        if (v != target || (!all && !out.empty()))
            return;
        IntVector coords(4, Integer(0));
        for (std::size_t r = 0; r < 4; ++r)
            for (std::size_t j = 0; j < 4; ++j)
                coords[j] += Integer(static_cast<long>(x[r])) * h(r, j);
        out.push_back(c.order.element(coords));
    });
    return out;
}

Vec3 act_by_ideal(const Case& c, std::int64_t d, const Vec3& seed, const IdealRep& ideal)
{
    auto gens = ideal_generators(c, d, seed, ideal);
    if (gens.empty())
        throw MathError("no generator of norm " + std::to_string(ideal.norm()) +
                        " in the ideal; O does not have class number one");
    const Quaternion& alpha = gens.front();
    Quaternion a = c.lattice.element(seed);
    Quaternion conj = alpha * a * alpha.inverse();
    if (conj.norm() != a.norm())
        throw MathError("conjugation changed the norm");
    Vec3 v = to_vec3(c.lattice.coordinates(conj));
    if (!Context(c).optimal(d, v))
        throw MathError("conjugated embedding is not optimal");
    return v;
}

Orbit class_group_orbit(const Case& c, std::int64_t d, const EmbeddingClass& seed)
{
    check_norm(c, d, seed.rep);
    Context ctx(c);
    if (!ctx.optimal(d, seed.rep))
        throw InvalidInput("seed embedding is not optimal");
    Orbit orb{c.id, d, {}};
    std::vector<Vec3> reps;
    for (const auto& ideal : ideal_class_reps(d)) {
        Vec3 v = act_by_ideal(c, d, seed.rep, ideal);
        auto cls = make_class(c, ctx, d, v);
        if (std::find(reps.begin(), reps.end(), cls.rep) != reps.end())
            throw MathError("class group action is not free: ideal of norm " +
                            std::to_string(ideal.norm()) + " fixes a class");
        reps.push_back(cls.rep);
        orb.classes.push_back(std::move(cls));
    }
    if (orb.classes.front().rep != seed.rep)
        throw MathError("principal ideal moved the seed class");
    return orb;
}

OrbitResult orbit_for(const Case& c, std::int64_t d)
{
    auto seed = seed_class(c, d);
    if (!seed)
        return NoEmbeddings{c.id, d};
    return class_group_orbit(c, d, *seed);
}

}  // namespace qtoric
