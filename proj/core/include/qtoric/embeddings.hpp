#ifndef QTORIC_EMBEDDINGS_HPP
#define QTORIC_EMBEDDINGS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qtoric/case.hpp"
#include "qtoric/quadratic.hpp"

namespace qtoric {

struct NormVector
{
    Vec3 v;
    std::int64_t n;
};

// An optimal embedding up to Gamma-conjugacy, via a = iota(sqrt(Delta)).
struct EmbeddingClass
{
    Vec3 rep;                // lexicographically smallest orbit member
    std::vector<Vec3> orbit; // sorted
    Quaternion b;            // (t + a)/2, the image of the generator of o_E
};

// All v with v Q v^T = n.
std::vector<Vec3> represent(const Gram3& gram, std::int64_t n);

// v F(gamma) over gamma in Gamma, sorted and deduplicated.
std::vector<Vec3> gamma_orbit(const Case& c, const Vec3& v);

// Accepted when b = (t + a)/2 lies in O, t = Delta mod 2.
std::optional<EmbeddingClass> optimal_embedding_from_vector(const Case& c, std::int64_t d,
                                                            const Vec3& v);
bool is_optimal(const Case& c, std::int64_t d, const Vec3& v);

std::vector<EmbeddingClass> gamma_classes(const Case& c, std::int64_t d,
                                          const std::vector<Vec3>& vectors);

// h_E prod_{p | disc D} (1 - (E/p)) prod_{q | level} (1 + (E/q)).
std::int64_t eichler_count(const Case& c, std::int64_t d);

struct Orbit
{
    std::string case_id;
    std::int64_t d = 0;
    std::vector<EmbeddingClass> classes;
};

struct NoEmbeddings
{
    std::string case_id;
    std::int64_t d = 0;
};

using OrbitResult = std::variant<Orbit, NoEmbeddings>;

// Smallest accepted vector's class, if any embedding exists.
std::optional<EmbeddingClass> seed_class(const Case& c, std::int64_t d);

// Generators of O iota(ideal) of reduced norm N(ideal), ordered by coordinates.
std::vector<Quaternion> ideal_generators(const Case& c, std::int64_t d, const Vec3& seed,
                                         const IdealRep& ideal, bool all = false);

// The embedding alpha iota alpha^-1 for a generator alpha of O iota(ideal).
Vec3 act_by_ideal(const Case& c, std::int64_t d, const Vec3& seed, const IdealRep& ideal);

Orbit class_group_orbit(const Case& c, std::int64_t d, const EmbeddingClass& seed);
OrbitResult orbit_for(const Case& c, std::int64_t d);

}  // namespace qtoric

#endif
