#include "qtoric/quadratic.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

#include "qtoric/errors.hpp"

namespace qtoric {

namespace {

constexpr std::int64_t kMaxAbsDisc = 1000000;

std::int64_t mod(std::int64_t a, std::int64_t m)
{
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

// Jacobi symbol (a/n), n odd positive.
int jacobi(std::int64_t a, std::int64_t n)
{
    a = mod(a, n);
    int t = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            std::int64_t r = n % 8;
            if (r == 3 || r == 5)
                t = -t;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3)
            t = -t;
        a %= n;
    }
    return n == 1 ? t : 0;
}

}  // namespace

bool is_prime(std::int64_t n)
{
    if (n < 2)
        return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

bool is_squarefree(std::int64_t n)
{
    n = std::llabs(n);
    if (n == 0)
        return false;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d)
            continue;
        n /= d;
        if (n % d == 0)
            return false;
    }
    return true;
}

std::vector<std::int64_t> prime_factors(std::int64_t n)
{
    n = std::llabs(n);
    std::vector<std::int64_t> out;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d)
            continue;
        out.push_back(d);
        while (n % d == 0)
            n /= d;
    }
    if (n > 1)
        out.push_back(n);
    return out;
}

bool is_fundamental(std::int64_t d)
{
    if (d == 0 || d == 1 || std::llabs(d) > kMaxAbsDisc)
        return false;
    if (mod(d, 4) == 1)
        return is_squarefree(d);
    if (mod(d, 4) != 0)
        return false;
    std::int64_t m = d / 4;
    std::int64_t r = mod(m, 4);
    return (r == 2 || r == 3) && is_squarefree(m);
}

void require_fundamental(std::int64_t d)
{
    if (std::llabs(d) > kMaxAbsDisc)
        throw InvalidInput("|discriminant| exceeds 10^6");
    if (d >= 0 || !is_fundamental(d))
        throw InvalidInput(std::to_string(d) + " is not a negative fundamental discriminant");
}

int kronecker(std::int64_t d, std::int64_t n)
{
    if (n == 0)
        return (d == 1 || d == -1) ? 1 : 0;
    int t = 1;
    if (n < 0) {
        n = -n;
        if (d < 0)
            t = -t;
    }
    while (n % 2 == 0) {
        n /= 2;
        if (d % 2 == 0)
            return 0;
        std::int64_t r = mod(d, 8);
        if (r == 3 || r == 5)
            t = -t;
    }
    if (n == 1)
        return t;
    return t * jacobi(d, n);
}

ClassGroupData class_number(std::int64_t d)
{
    require_fundamental(d);
    std::vector<ReducedForm> forms;
    const std::int64_t ad = -d;
    for (std::int64_t b = (ad % 2 == 0) ? 0 : 1; 3 * b * b <= ad; b += 2) {
        std::int64_t m = (b * b + ad) / 4;  // = a c
        for (std::int64_t a = std::max<std::int64_t>(b, 1); a * a <= m; ++a) {
            if (m % a)
                continue;
            std::int64_t c = m / a;
            if (std::gcd(std::gcd(a, b), c) != 1)
                continue;
            forms.push_back({a, b, c});
            if (b > 0 && b < a && a < c)
                forms.push_back({a, -b, c});
        }
    }
    std::sort(forms.begin(), forms.end(), [](const ReducedForm& x, const ReducedForm& y) {
        if (x.a != y.a)
            return x.a < y.a;
        if (std::llabs(x.b) != std::llabs(y.b))
            return std::llabs(x.b) < std::llabs(y.b);
        return x.b > y.b;
    });
    return {static_cast<std::int64_t>(forms.size()), forms};
}

Parity genus_parity(std::int64_t d)
{
    require_fundamental(d);
    if (d == -4 || d == -8)
        return Parity::Odd;
    std::int64_t p = -d;
    return (p % 4 == 3 && is_prime(p)) ? Parity::Odd : Parity::Even;
}

std::optional<PizerRule> pizer_mod4(std::int64_t d)
{
    require_fundamental(d);
    auto ps = prime_factors(d);
    if (ps.size() != 2 || mod(d, 4) != 1)
        return std::nullopt;
    std::int64_t p = ps[0] % 4 == 1 ? ps[0] : ps[1];
    std::int64_t q = ps[0] % 4 == 1 ? ps[1] : ps[0];
    // -3p = 21 mod 24 alone is not enough: (p/3) = -1 is needed as well
    if (q == 3 && mod(d, 24) == 21 && p % 3 == 2)
        return PizerRule::ThreeP;
    if (p % 4 == 1 && q % 4 == 3 && jacobi(p, q) == -1)
        return PizerRule::PQ;
    return std::nullopt;
}

std::vector<IdealRep> ideal_class_reps(std::int64_t d)
{
    std::vector<IdealRep> out;
    for (const auto& f : class_number(d).forms)
        out.push_back({f, {f.a, 0}, {-(d + f.b) / 2, 1}});
    return out;
}

std::vector<std::int64_t> negative_fundamental_discriminants(std::int64_t lo, std::int64_t hi)
{
    std::vector<std::int64_t> out;
    for (std::int64_t n = std::max<std::int64_t>(lo, 3); n <= hi; ++n)
        if (is_fundamental(-n))
            out.push_back(-n);
    return out;
}

}  // namespace qtoric
