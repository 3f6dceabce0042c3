// Acceptance run: one line per criterion, exit status 1 if any is red.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qtoric/case.hpp"
#include "qtoric/embeddings.hpp"
#include "qtoric/epsilon.hpp"
#include "qtoric/errors.hpp"
#include "qtoric/harmonic.hpp"
#include "qtoric/qseries.hpp"
#include "qtoric/quadratic.hpp"
#include "qtoric/quaternion.hpp"
#include "qtoric/verdict.hpp"

using namespace qtoric;

namespace {

constexpr double kTol = 1e-8;
constexpr double kNonzero = 1e-3;
constexpr double kZero = 1e-6;

std::int64_t mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

struct Outcome
{
    bool ok = true;
    std::string detail;
    std::vector<std::string> failures;

    void fail(const std::string& why)
    {
        ok = false;
        if (failures.size() < 8)
            failures.push_back(why);
    }
};

const std::vector<std::string>& ids()
{
    static const auto v = CaseRegistry::builtin().ids();
    return v;
}

Poly3 poly(int degree, std::initializer_list<std::pair<Exponent, int>> terms)
{
    Poly3 p(degree);
    for (const auto& [e, c] : terms)
        p.add(e, Rational(c));
    return p;
}

// Enough terms for every twist with |Delta| <= max_abs.
QSeries series_for(const Case& c, std::int64_t max_abs)
{
    std::int64_t n = 0;
    for (auto d : negative_fundamental_discriminants(std::max<std::int64_t>(3, max_abs - 60), max_abs))
        n = std::max(n, required_terms(c.weight, c.conductor(), d, kTol));
    return eta_expand(c.eta, 2 * n);
}

double lvalue(const Case& c, const QSeries& f, std::int64_t d)
{
    return twisted_central_value(f, c.weight, c.conductor(), d, global_epsilon(c, d), kTol);
}

// At t = 1 the series cancels termwise when epsilon = -1, so evaluate off the symmetry point.
double lvalue_off_center(const Case& c, const QSeries& f, std::int64_t d)
{
    auto n = 2 * required_terms(c.weight, c.conductor(), d, kTol);
    return twisted_central_value_at(f, c.weight, c.conductor(), d, global_epsilon(c, d), 1.15, n);
}

std::string str(std::int64_t d) { return std::to_string(d); }

Outcome presets()
{
    Outcome o;
    const Case& c1 = preset("C1");
    if (c1.lattice.gram() != IntMatrix{{3, -1, -1}, {-1, 3, -1}, {-1, -1, 3}})
        o.fail("C1 Gram matrix");
    QuaternionAlgebra H(-1, -1);
    Quaternion i(H, 0, 1, 0, 0), j(H, 0, 0, 1, 0);
    Quaternion w(H, Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1, 2));
    auto F = [&](const Quaternion& g) { return to_integer(rotation_F(c1.lattice, g)); };
    if (F(i.conjugate()) != IntMatrix{{-1, -1, -1}, {0, 0, 1}, {0, 1, 0}})
        o.fail("F(i)");
    if (F(j.conjugate()) != IntMatrix{{0, 0, 1}, {-1, -1, -1}, {1, 0, 0}})
        o.fail("F(j)");
    if (F(w) != IntMatrix{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}})
        o.fail("F(w)");
    const std::map<std::string, std::size_t> sizes{{"C1", 12}, {"C2", 3}, {"C3", 2}};
    for (const auto& [id, n] : sizes) {
        const Case& c = preset(id);
        auto u = unit_group(c.order, c.lattice);
        if (u.size() != n)
            o.fail(id + " unit group has " + std::to_string(u.size()) + " elements");
    }
    o.detail = "unit groups 12/3/2";
    return o;
}

Outcome harmonics()
{
    Outcome o;
    std::map<std::string, Poly3> ref;
    ref.emplace("C1", poly(3, {{{3, 0, 0}, 1},
                               {{0, 3, 0}, 1},
                               {{0, 0, 3}, 1},
                               {{2, 1, 0}, -1},
                               {{2, 0, 1}, -1},
                               {{1, 2, 0}, -1},
                               {{0, 2, 1}, -1},
                               {{1, 0, 2}, -1},
                               {{0, 1, 2}, -1},
                               {{1, 1, 1}, 2}}));
    ref.emplace("C2", poly(1, {{{0, 0, 1}, 1}}));
    ref.emplace("C3", poly(1, {{{1, 0, 0}, 2}, {{0, 0, 1}, 1}}));
    ref.emplace("C4", poly(2, {{{2, 0, 0}, 4}, {{1, 1, 0}, 4}, {{0, 2, 0}, 4}, {{0, 0, 2}, -3}}));
    ref.emplace("C5", poly(2, {{{2, 0, 0}, 3}, {{0, 2, 0}, -2}, {{0, 0, 2}, -2}, {{0, 1, 1}, 2}}));
    ref.emplace("C6", poly(1, {{{1, 0, 0}, 2}, {{0, 0, 1}, 1}}));
    for (const auto& id : ids()) {
        const Case& c = preset(id);
        auto space = invariant_harmonics(c.lattice, c.units, c.l, id);
        if (space.basis.size() != 1) {
            o.fail(id + " invariant dimension " + std::to_string(space.basis.size()));
            continue;
        }
        if (!proportionality(space.basis[0], ref.at(id)))
            o.fail(id + " basis " + space.basis[0].str());
    }
    o.detail = "dimension 1 in all presets";
    return o;
}

Outcome hecke()
{
    Outcome o;
    int compared = 0;
    for (const auto& id : ids()) {
        const Case& c = preset(id);
        auto f = eta_expand(c.eta, 169);
        // multiplicativity of the eta coefficients up to n = 100
        for (std::int64_t m = 1; m <= 100; ++m)
            for (std::int64_t n = 1; m * n <= 100; ++n)
                if (std::gcd(m, n) == 1 && f[m * n] != f[m] * f[n])
                    o.fail(id + " a(" + str(m * n) + ") not multiplicative");
        for (long p : {3L, 5L, 7L, 11L, 13L}) {
            std::int64_t pk = 1;
            for (int e = 0; e < c.weight - 1; ++e)
                pk *= p;
            if (c.conductor() % p == 0) {
                continue;
            }
            if (p * p <= 169 && f[p * p] != f[p] * f[p] - pk)
                o.fail(id + " a(p^2) recursion at " + str(p));
            Integer ev = hecke_eigenvalue(c.lattice, c.units, c.order.reduced_discriminant(), p, c.phi);
            ++compared;
            if (ev != Integer(static_cast<long>(f[p])))
                o.fail(id + " p=" + str(p) + " eigenvalue " + ev.get_str() + " vs " + str(f[p]));
        }
    }
    o.detail = std::to_string(compared) + " eigenvalues compared";
    return o;
}

Outcome congruences()
{
    Outcome o;
    std::int64_t vectors = 0, violations = 0;
    for (const auto& id : ids()) {
        const Case& c = preset(id);
        for (auto d : negative_fundamental_discriminants(3, 10000)) {
            if (!embeds_in_algebra(c, d))
                continue;
            for (const auto& v : represent(c.lattice.gram3(), -d)) {
                ++vectors;
                try {
                    congruence_check(c, v, d);
                } catch (const MathError& e) {
                    ++violations;
                    o.fail(id + " " + str(d) + ": " + e.what());
                }
            }
        }
    }
    o.detail = std::to_string(vectors) + " vectors, " + std::to_string(violations) + " violations";
    return o;
}

Outcome eichler()
{
    Outcome o;
    std::int64_t checked = 0;
    for (const auto& id : ids()) {
        const Case& c = preset(id);
        for (auto d : negative_fundamental_discriminants(3, 2000)) {
            if (!embeds_in_algebra(c, d))
                continue;
            auto classes = gamma_classes(c, d, represent(c.lattice.gram3(), -d));
            auto expected = eichler_count(c, d);
            ++checked;
            if (static_cast<std::int64_t>(classes.size()) != expected)
                o.fail(id + " " + str(d) + ": " + std::to_string(classes.size()) + " classes, " +
                       str(expected) + " expected");
        }
    }
    o.detail = std::to_string(checked) + " (case, Delta) pairs";
    return o;
}

Outcome class_groups()
{
    Outcome o;
    int pizer = 0;
    for (auto d : negative_fundamental_discriminants(3, 10000)) {
        auto h = class_number(d).h;
        if ((genus_parity(d) == Parity::Odd) != (h % 2 == 1))
            o.fail("parity at " + str(d));
        if (pizer_mod4(d)) {
            ++pizer;
            if (h % 4 != 2)
                o.fail("Pizer at " + str(d) + ", h = " + str(h));
        }
    }
    // sample round-robin over cases and over h in {1, 2, 3, 4, other}
    std::map<int, std::vector<std::pair<std::string, std::int64_t>>> pools;
    for (const auto& id : ids()) {
        const Case& c = preset(id);
        for (auto d : negative_fundamental_discriminants(3, 1500)) {
            if (eichler_count(c, d) == 0)
                continue;
            auto h = class_number(d).h;
            int bucket = h <= 4 ? static_cast<int>(h) : 5;
            auto& pool = pools[bucket * 100 + static_cast<int>(&id - &ids()[0])];
            if (pool.size() < 3)
                pool.emplace_back(id, d);
        }
    }
    std::vector<std::pair<std::string, std::int64_t>> sample;
    std::set<std::int64_t> hs;
    for (std::size_t round = 0; sample.size() < 50 && round < 3; ++round)
        for (const auto& [key, pool] : pools)
            if (round < pool.size() && sample.size() < 50)
                sample.push_back(pool[round]);
    for (const auto& [id, d] : sample) {
        const Case& c = preset(id);
        auto res = orbit_for(c, d);
        auto* orb = std::get_if<Orbit>(&res);
        auto h = class_number(d).h;
        hs.insert(h);
        if (!orb) {
            o.fail(id + " " + str(d) + " has no orbit");
            continue;
        }
        std::set<Vec3> reps;
        for (const auto& cl : orb->classes)
            reps.insert(cl.rep);
        if (static_cast<std::int64_t>(orb->classes.size()) != h || static_cast<std::int64_t>(reps.size()) != h)
            o.fail(id + " " + str(d) + ": orbit of " + std::to_string(orb->classes.size()) +
                   " classes, h = " + str(h));
    }
    for (int h = 1; h <= 4; ++h)
        if (!hs.count(h))
            o.fail("sample misses h = " + std::to_string(h));
    if (sample.size() != 50)
        o.fail("only " + std::to_string(sample.size()) + " pairs sampled");
    o.detail = std::to_string(pizer) + " Pizer assertions, " + std::to_string(sample.size()) +
               " orbits";
    return o;
}

Outcome root_numbers()
{
    Outcome o;
    int probed = 0;
    for (const auto& id : ids()) {
        const Case& c = preset(id);
        auto f = series_for(c, 200);
        for (auto d : negative_fundamental_discriminants(3, 200)) {
            if (!embeds_in_algebra(c, d))
                continue;
            ++probed;
            int e = global_epsilon(c, d);
            int s = 0;
            try {
                s = functional_equation_sign_probe(f, c.weight, c.conductor(), d, kTol);
            } catch (const MathError& err) {
                o.fail(id + " " + str(d) + ": " + err.what());
                continue;
            }
            if (s != e)
                o.fail(id + " " + str(d) + ": probe " + std::to_string(s) + ", epsilon " +
                       std::to_string(e));
        }
    }
    const Case& c1 = preset("C1");
    for (auto d : negative_fundamental_discriminants(3, 10000))
        if ((global_epsilon(c1, d) == 1) != (mod(d, 8) == 5))
            o.fail("C1 sign at " + str(d));
    o.detail = std::to_string(probed) + " signs probed";
    return o;
}

bool prime_minus(std::int64_t d) { return is_prime(-d); }

void expect_nonzero(Outcome& o, const Case& c, const QSeries& f, std::int64_t d, double& min_l,
                    int& n)
{
    auto v = verdict(c, d);
    ++n;
    if (v.status != Status::ProvenNonzero) {
        o.fail(c.id + " " + str(d) + " is " + to_string(v.status));
        return;
    }
    if (c.period_modulus == 2 && (!v.period_sum || (*v.period_sum % 2) == 0))
        o.fail(c.id + " " + str(d) + " period sum not odd");
    double l = lvalue(c, f, d);
    min_l = std::min(min_l, std::abs(l));
    if (!(std::abs(l) > kNonzero))
        o.fail(c.id + " " + str(d) + " L = " + std::to_string(l));
    if (std::abs(lvalue_off_center(c, f, d) - l) > kZero)
        o.fail(c.id + " " + str(d) + " L depends on the AFE parameter");
}

Outcome low_level()
{
    Outcome o;
    double min_l = INFINITY, max_zero = 0;
    int nonzero = 0, zero = 0;
    for (const auto& id : {"C1", "C2", "C3"}) {
        const Case& c = preset(id);
        auto f = series_for(c, 500);
        for (auto d : negative_fundamental_discriminants(3, 500)) {
            if (prime_minus(d) && c.applicability.contains(d))
                expect_nonzero(o, c, f, d, min_l, nonzero);
            if (embeds_in_algebra(c, d) && global_epsilon(c, d) == -1) {
                ++zero;
                double l = lvalue_off_center(c, f, d);
                max_zero = std::max(max_zero, std::abs(l));
                if (!(std::abs(l) < kZero))
                    o.fail(std::string(id) + " " + str(d) + " epsilon -1 but L = " +
                           std::to_string(l));
            }
        }
    }
    std::ostringstream s;
    s << nonzero << " nonzero (min |L| " << min_l << "), " << zero << " forced zeros (max |L| "
      << max_zero << ")";
    o.detail = s.str();
    return o;
}

Outcome higher_level()
{
    Outcome o;
    double min_l = INFINITY;
    int n = 0;
    {
        const Case& c = preset("C4");
        auto f = series_for(c, 2000);
        expect_nonzero(o, c, f, -51, min_l, n);
        int taken = 0;
        for (auto d : negative_fundamental_discriminants(3, 2000)) {
            if (taken == 10)
                break;
            if (d == -51 || !c.applicability.contains(d) || !pizer_mod4(d) ||
                !embeds_in_algebra(c, d))
                continue;
            expect_nonzero(o, c, f, d, min_l, n);
            ++taken;
        }
        if (taken < 10)
            o.fail("only " + std::to_string(taken) + " Pizer discriminants for C4");
    }
    {
        const Case& c = preset("C5");
        auto f = series_for(c, 300);
        for (auto d : negative_fundamental_discriminants(3, 300))
            if (mod(d, 3) == 2 && class_number(d).h % 3 != 0)
                expect_nonzero(o, c, f, d, min_l, n);
    }
    {
        const Case& c = preset("C6");
        auto f = series_for(c, 300);
        for (auto d : negative_fundamental_discriminants(3, 300))
            if (prime_minus(d) && (mod(d, 40) == 21 || mod(d, 40) == 29))
                expect_nonzero(o, c, f, d, min_l, n);
    }
    std::ostringstream s;
    s << n << " discriminants (min |L| " << min_l << ")";
    o.detail = s.str();
    return o;
}

struct Criterion
{
    int number;
    const char* name;
    double budget_seconds;
    std::function<Outcome()> run;
};

}  // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "preset fidelity", 1, presets},
        {2, "harmonic spaces", 5, harmonics},
        {3, "Hecke eigenvalues vs eta coefficients", 60, hecke},
        {4, "congruence sweeps to 10^4", 600, congruences},
        {5, "Eichler embedding counts to 2000", 300, eichler},
        {6, "class-group machinery", 0, class_groups},
        {7, "root numbers", 0, root_numbers},
        {8, "Hurwitz and level-3 nonvanishing", 600, low_level},
        {9, "higher-level nonvanishing", 0, higher_level},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.budget_seconds > 0 && secs > c.budget_seconds)
            o.fail("took " + std::to_string(secs) + " s, budget " +
                   std::to_string(c.budget_seconds) + " s");
        if (!o.ok)
            ++failed;
        std::printf("[%s] %d %s: %s (%.2f s)\n", o.ok ? "PASS" : "FAIL", c.number, c.name,
                    o.detail.c_str(), secs);
        for (const auto& f : o.failures)
            std::printf("       %s\n", f.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
                criteria.size());
    return failed == 0 ? 0 : 1;
}
