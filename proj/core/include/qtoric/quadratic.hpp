#ifndef QTORIC_QUADRATIC_HPP
#define QTORIC_QUADRATIC_HPP

#include <cstdint>
#include <optional>
#include <vector>

namespace qtoric {

bool is_prime(std::int64_t n);
bool is_squarefree(std::int64_t n);
std::vector<std::int64_t> prime_factors(std::int64_t n);

// Fundamental discriminants are capped at |D| <= 10^6.
bool is_fundamental(std::int64_t d);
// Throws InvalidInput unless d is a negative fundamental discriminant.
void require_fundamental(std::int64_t d);

int kronecker(std::int64_t d, std::int64_t n);

struct ReducedForm
{
    std::int64_t a, b, c;
    friend bool operator==(const ReducedForm& x, const ReducedForm& y)
    {
        return x.a == y.a && x.b == y.b && x.c == y.c;
    }
};

struct ClassGroupData
{
    std::int64_t h;
    std::vector<ReducedForm> forms;  // principal form first
};

ClassGroupData class_number(std::int64_t d);

enum class Parity { Even, Odd };
Parity genus_parity(std::int64_t d);

enum class PizerRule { ThreeP, PQ };
// Set when a Pizer criterion proves h = 2 mod 4.
std::optional<PizerRule> pizer_mod4(std::int64_t d);

// Z a + Z (-b + sqrt(D))/2 written in the basis {1, w}, w = (D + sqrt(D))/2:
// x = (a, 0) and y = (-(D + b)/2, 1).
struct IdealRep
{
    ReducedForm form;
    std::int64_t x[2];
    std::int64_t y[2];
    std::int64_t norm() const { return form.a; }
};

std::vector<IdealRep> ideal_class_reps(std::int64_t d);

// Every fundamental discriminant d with lo <= |d| <= hi, d < 0, ascending in |d|.
std::vector<std::int64_t> negative_fundamental_discriminants(std::int64_t lo, std::int64_t hi);

}  // namespace qtoric

#endif
