#ifndef QTORIC_ENUMERATE_HPP
#define QTORIC_ENUMERATE_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "qtoric/linalg.hpp"

namespace qtoric {

using Vec3 = std::array<std::int64_t, 3>;
using Gram3 = std::array<std::array<std::int64_t, 3>, 3>;

// Calls visit(x, x G x^T) for every x in Z^d with x G x^T <= bound, G positive
// definite. Fincke-Pohst with floating bounds and exact confirmation.
void enumerate_short_vectors(
    const IntMatrix& gram, const Integer& bound,
    const std::function<void(const std::vector<std::int64_t>&, const Integer&)>& visit);

// Every v in Z^3 with v G v^T = n, sorted lexicographically.
std::vector<Vec3> ternary_represent(const Gram3& gram, std::int64_t n);

std::int64_t ternary_value(const Gram3& gram, const Vec3& v);

Gram3 to_gram3(const IntMatrix& m);

}  // namespace qtoric

#endif
