#ifndef QTORIC_EPSILON_HPP
#define QTORIC_EPSILON_HPP

#include <cstdint>

#include "qtoric/case.hpp"
#include "qtoric/embeddings.hpp"

namespace qtoric {

enum class LocalSymbol { Split, Inert, Ramified };

const char* to_string(LocalSymbol s);

LocalSymbol local_symbol_type(std::int64_t d, std::int64_t p);

// Local root number of the base change at p: eta = 1 <-> Split, eta = omega <-> Inert.
int local_epsilon(LocalType t, LocalSymbol s);

// E_p not split at every p | disc(D), i.e. E embeds in D.
bool embeds_in_algebra(const Case& c, std::int64_t d);

// Local conditions at p | disc(O) for the toric period to be nontrivial:
//   p | disc(D): St needs E_p not split, omega St needs E_p inert;
//   p | level:   St needs E_p split,     omega St needs E_p not inert.
bool condition3(const Case& c, std::int64_t d);

// -1 (archimedean place) times the local factors at p | disc(O).
int global_epsilon(const Case& c, std::int64_t d);

struct CongruenceResult
{
    std::int64_t residue;   // quantity(v) mod modulus
    std::int64_t expected;  // multiplier * Delta mod modulus
};

// Throws MathError if the congruence fails for v.
CongruenceResult congruence_check(const Case& c, const Vec3& v, std::int64_t d);

Integer phi_value(const Case& c, const Vec3& v);

// Sum of phi over the orbit representatives.
Integer period_sum(const Case& c, const Orbit& orbit);

}  // namespace qtoric

#endif
