#include "qtoric/epsilon.hpp"

namespace qtoric {

const char* to_string(LocalSymbol s)
{
    switch (s) {
    case LocalSymbol::Split:
        return "Split";
    case LocalSymbol::Inert:
        return "Inert";
    default:
        return "Ramified";
    }
}

LocalSymbol local_symbol_type(std::int64_t d, std::int64_t p)
{
    if (!is_prime(p))
        throw InvalidInput(std::to_string(p) + " is not prime");
    int k = kronecker(d, p);
    return k == 1 ? LocalSymbol::Split : (k == -1 ? LocalSymbol::Inert : LocalSymbol::Ramified);
}

int local_epsilon(LocalType t, LocalSymbol s)
{
    if (t == LocalType::St)
        return s == LocalSymbol::Split ? 1 : -1;
    return s == LocalSymbol::Inert ? -1 : 1;
}

bool embeds_in_algebra(const Case& c, std::int64_t d)
{
    for (auto p : c.disc_D_primes())
        if (local_symbol_type(d, p) == LocalSymbol::Split)
            return false;
    return true;
}

bool condition3(const Case& c, std::int64_t d)
{
    require_fundamental(d);
    for (auto p : c.disc_D_primes()) {
        LocalSymbol s = local_symbol_type(d, p);
        bool ok = c.local_types.at(p) == LocalType::St ? s != LocalSymbol::Split
                                                        : s == LocalSymbol::Inert;
        if (!ok)
            return false;
    }
    for (auto q : c.level_primes()) {
        LocalSymbol s = local_symbol_type(d, q);
        bool ok = c.local_types.at(q) == LocalType::St ? s == LocalSymbol::Split
                                                        : s != LocalSymbol::Inert;
        if (!ok)
            return false;
    }
    return true;
}

int global_epsilon(const Case& c, std::int64_t d)
{
    require_fundamental(d);
    int e = -1;
    for (const auto& [p, t] : c.local_types)
        e *= local_epsilon(t, local_symbol_type(d, p));
    return e;
}

Integer phi_value(const Case& c, const Vec3& v)
{
    Rational r = c.phi.evaluate(v);
    if (!is_integer(r))
        throw MathError("phi takes a non-integral value");
    return r.get_num();
}

namespace {

std::int64_t reduce(const Integer& x, std::int64_t m)
{
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(m));
    return r.get_si();
}

}  // namespace

CongruenceResult congruence_check(const Case& c, const Vec3& v, std::int64_t d)
{
    if (ternary_value(c.lattice.gram3(), v) != -d)
        throw InvalidInput("vector does not have norm -Delta");
    const auto& rule = c.congruence;
    Integer q = phi_value(c, v);
    if (rule.quantity == CongruenceQuantity::PhiSquared)
        q *= q;
    CongruenceResult r{reduce(q, rule.modulus),
                       reduce(Integer(static_cast<long>(rule.delta_multiplier)) *
                                  Integer(static_cast<long>(d)),
                              rule.modulus)};
    if (r.residue != r.expected)
        throw MathError("congruence violated for " + c.id + ", Delta = " + std::to_string(d) +
                        ", v = (" + std::to_string(v[0]) + "," + std::to_string(v[1]) + "," +
                        std::to_string(v[2]) + "): residue " + std::to_string(r.residue) +
                        ", expected " + std::to_string(r.expected));
    return r;
}

Integer period_sum(const Case& c, const Orbit& orbit)
{
    Integer s = 0;
    for (const auto& cls : orbit.classes)
        s += phi_value(c, cls.rep);
    return s;
}

}  // namespace qtoric
