#include "qtoric/case.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qtoric/quadratic.hpp"

namespace qtoric {

using nlohmann::json;

const char* to_string(LocalType t) { return t == LocalType::St ? "St" : "omegaSt"; }

bool Applicability::contains(std::int64_t d) const
{
    std::int64_t r = d % modulus;
    if (r < 0)
        r += modulus;
    for (int x : residues)
        if (x == r)
            return true;
    return false;
}

std::vector<std::int64_t> Case::disc_D_primes() const { return prime_factors(disc_D); }
std::vector<std::int64_t> Case::level_primes() const { return prime_factors(level); }

namespace {

Rational rational_field(const json& j)
{
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    if (j.is_number_integer())
        return Rational(static_cast<long>(j.get<std::int64_t>()));
    throw InvalidInput("expected a rational as \"p/q\" or an integer, got " + j.dump());
}

Quaternion quaternion_field(const QuaternionAlgebra& alg, const json& j)
{
    if (!j.is_array() || j.size() != 4)
        throw InvalidInput("a quaternion is a list of four rationals, got " + j.dump());
    return Quaternion(alg, rational_field(j[0]), rational_field(j[1]), rational_field(j[2]),
                      rational_field(j[3]));
}

const json& required(const json& j, const char* key)
{
    if (!j.contains(key))
        throw InvalidInput(std::string("case file: missing field '") + key + "'");
    return j.at(key);
}

LocalType local_type_field(const json& j)
{
    auto s = j.get<std::string>();
    if (s == "St")
        return LocalType::St;
    if (s == "omegaSt" || s == "wSt")
        return LocalType::OmegaSt;
    throw InvalidInput("unknown local type '" + s + "' (use St or omegaSt)");
}

CongruenceRule named_rule(const std::string& name)
{
    // the rules of the built-in cases, by case id
    if (name == "C1")
        return {CongruenceQuantity::PhiSquared, 4, 1};
    if (name == "C2")
        return {CongruenceQuantity::PhiSquared, 8, -3};
    if (name == "C3")
        return {CongruenceQuantity::PhiSquared, 6, -1};
    if (name == "C4")
        return {CongruenceQuantity::Phi, 4, -3};
    if (name == "C5")
        return {CongruenceQuantity::Phi, 6, -1};
    if (name == "C6")
        return {CongruenceQuantity::PhiSquared, 10, -1};
    throw InvalidInput("unknown congruence rule id '" + name + "'");
}

CongruenceRule congruence_field(const json& j)
{
    if (j.is_string())
        return named_rule(j.get<std::string>());
    CongruenceRule r;
    auto q = required(j, "quantity").get<std::string>();
    if (q == "phi")
        r.quantity = CongruenceQuantity::Phi;
    else if (q == "phi_squared")
        r.quantity = CongruenceQuantity::PhiSquared;
    else
        throw InvalidInput("congruence quantity must be phi or phi_squared");
    r.modulus = required(j, "modulus").get<int>();
    r.delta_multiplier = required(j, "delta_multiplier").get<int>();
    if (r.modulus < 1)
        throw InvalidInput("congruence modulus must be positive");
    return r;
}

EtaCombination eta_field(const json& j)
{
    EtaCombination e;
    if (!j.is_array() || j.empty())
        throw InvalidInput("eta must be a nonempty list of terms");
    for (const auto& t : j) {
        EtaTerm term;
        term.coefficient = t.value("coefficient", std::int64_t{1});
        for (const auto& f : required(t, "factors")) {
            if (!f.is_array() || f.size() != 2)
                throw InvalidInput("eta factor must be [m, r]");
            int m = f[0].get<int>(), r = f[1].get<int>();
            if (m < 1 || r < 1)
                throw InvalidInput("eta factors need positive m and r");
            term.factors.emplace_back(m, r);
        }
        e.terms.push_back(std::move(term));
    }
    return e;
}

Poly3 phi_field(const json& j, int degree)
{
    Poly3 p(degree);
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 2 || !t[0].is_array() || t[0].size() != 3)
            throw InvalidInput("phi terms are [[e1, e2, e3], coefficient]");
        Exponent e{t[0][0].get<int>(), t[0][1].get<int>(), t[0][2].get<int>()};
        p.add(e, rational_field(t[1]));
    }
    return p;
}

CasePtr case_from_object(const json& j)
{
    const auto& alg_j = required(j, "algebra");
    QuaternionAlgebra alg(rational_field(required(alg_j, "a")), rational_field(required(alg_j, "b")));

    std::vector<Quaternion> ob;
    for (const auto& q : required(j, "order_basis"))
        ob.push_back(quaternion_field(alg, q));
    Order order(alg, ob);

    std::vector<Quaternion> lb;
    for (const auto& q : required(j, "lattice_basis"))
        lb.push_back(quaternion_field(alg, q));
    TraceZeroLattice lattice = trace_zero_lattice(order, lb);
    UnitGroup units = unit_group(order, lattice);

    std::string id = required(j, "id").get<std::string>();
    int l = required(j, "l").get<int>();
    if (l < 0)
        throw InvalidInput(id + ": l must be nonnegative");

    Poly3 phi(l);
    auto space = invariant_harmonics(lattice, units, l, id);
    if (j.contains("phi")) {
        phi = phi_field(j.at("phi"), l);
        if (phi.is_zero() || !laplace(lattice.gram(), phi).is_zero())
            throw InvalidInput(id + ": phi is not a nonzero harmonic polynomial");
        for (const auto& g : units.elements())
            if (!(act_rho(to_rational(g), phi) == phi))
                throw InvalidInput(id + ": phi is not invariant under the unit group");
    } else {
        if (space.basis.size() != 1)
            throw InvalidInput(id + ": invariant harmonic space has dimension " +
                               std::to_string(space.basis.size()) + ", phi must be given");
        phi = space.basis.front();
    }

    auto c = std::make_shared<Case>(order, lattice, units, phi);
    c->id = id;
    c->description = j.value("description", std::string());
    c->disc_D = required(j, "disc_D").get<std::int64_t>();
    c->level = required(j, "level").get<std::int64_t>();
    c->l = l;
    c->weight = j.value("weight", 2 * l + 2);
    if (c->weight != 2 * l + 2)
        throw InvalidInput(id + ": weight must be 2l + 2");
    if (!is_squarefree(c->conductor()))
        throw InvalidInput(id + ": disc(D) * level must be squarefree");
    Integer rd = order.reduced_discriminant();
    if (rd != Integer(static_cast<long>(c->conductor())))
        throw InvalidInput(id + ": order has reduced discriminant " + to_string(rd) +
                           ", expected disc(D) * level = " + std::to_string(c->conductor()));

    for (auto it = required(j, "local_types").begin(); it != j.at("local_types").end(); ++it)
        c->local_types[std::stoll(it.key())] = local_type_field(it.value());
    for (auto p : prime_factors(c->conductor()))
        if (!c->local_types.count(p))
            throw InvalidInput(id + ": missing local type at p = " + std::to_string(p));
    if (c->local_types.size() != prime_factors(c->conductor()).size())
        throw InvalidInput(id + ": local types given at primes not dividing disc(O)");

    c->eta = eta_field(required(j, "eta"));
    for (const auto& t : c->eta.terms) {
        int r = 0;
        for (const auto& f : t.factors)
            r += f.second;
        if (r != 2 * c->weight)
            throw InvalidInput(id + ": eta term of weight " + std::to_string(r) + "/2, expected " +
                               std::to_string(c->weight));
    }
    c->congruence = congruence_field(required(j, "congruence"));
    const auto& ap = required(j, "applicability");
    c->applicability.modulus = required(ap, "modulus").get<int>();
    c->applicability.residues = required(ap, "residues").get<std::vector<int>>();
    if (c->applicability.modulus < 1)
        throw InvalidInput(id + ": applicability modulus must be positive");
    c->period_modulus = j.value("period_modulus", c->congruence.modulus);
    if (c->period_modulus < 2)
        throw InvalidInput(id + ": period_modulus must be at least 2");
    return c;
}

}  // namespace

std::vector<CasePtr> cases_from_json(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InvalidInput(std::string("case file is not valid JSON: ") + e.what());
    }
    std::vector<CasePtr> out;
    try {
        if (j.contains("cases")) {
            for (const auto& c : j.at("cases"))
                out.push_back(case_from_object(c));
        } else {
            out.push_back(case_from_object(j));
        }
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("case file: ") + e.what());
    }
    return out;
}

const CaseRegistry& CaseRegistry::builtin()
{
    static const CaseRegistry reg = [] {
        CaseRegistry r;
        for (auto& c : cases_from_json(builtin_cases_json()))
            r.add(c);
        return r;
    }();
    return reg;
}

void CaseRegistry::add(CasePtr c) { cases_[c->id] = std::move(c); }

void CaseRegistry::load_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InvalidInput("cannot open case file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    for (auto& c : cases_from_json(ss.str()))
        add(c);
}

CasePtr CaseRegistry::find(const std::string& id) const
{
    auto it = cases_.find(id);
    return it == cases_.end() ? nullptr : it->second;
}

const Case& CaseRegistry::get(const std::string& id) const
{
    auto c = find(id);
    if (!c)
        throw InvalidInput("unknown case '" + id + "'");
    return *c;
}

std::vector<std::string> CaseRegistry::ids() const
{
    std::vector<std::string> out;
    for (const auto& [k, v] : cases_)
        out.push_back(k);
    return out;
}

const Case& preset(const std::string& id) { return CaseRegistry::builtin().get(id); }

}  // namespace qtoric
