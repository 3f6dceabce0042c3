#ifndef QTORIC_CASE_HPP
#define QTORIC_CASE_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "qtoric/harmonic.hpp"
#include "qtoric/qseries.hpp"
#include "qtoric/quaternion.hpp"

namespace qtoric {

// pi'_p = St_p or omega_p St_p at a prime dividing disc(O).
enum class LocalType { St, OmegaSt };

const char* to_string(LocalType t);

enum class CongruenceQuantity { Phi, PhiSquared };

// quantity(v) = multiplier * Delta mod modulus for every norm vector v.
struct CongruenceRule
{
    CongruenceQuantity quantity = CongruenceQuantity::Phi;
    int modulus = 1;
    int delta_multiplier = 1;
};

struct Applicability
{
    int modulus = 1;
    std::vector<int> residues;
    bool contains(std::int64_t d) const;
};

struct Case
{
    Case(Order o, TraceZeroLattice L, UnitGroup u, Poly3 p)
        : order(std::move(o)), lattice(std::move(L)), units(std::move(u)), phi(std::move(p))
    {
    }

    std::string id;
    std::string description;
    std::int64_t disc_D = 1;
    std::int64_t level = 1;
    int l = 0;
    int weight = 2;
    std::map<std::int64_t, LocalType> local_types;
    EtaCombination eta;
    CongruenceRule congruence;
    Applicability applicability;
    int period_modulus = 2;

    Order order;
    TraceZeroLattice lattice;
    UnitGroup units;
    Poly3 phi;

    std::int64_t conductor() const { return disc_D * level; }
    std::vector<std::int64_t> disc_D_primes() const;
    std::vector<std::int64_t> level_primes() const;
};

using CasePtr = std::shared_ptr<const Case>;

// Parses a case document: either {"cases": [...]} or a single case object.
std::vector<CasePtr> cases_from_json(const std::string& text);

class CaseRegistry
{
public:
    // The six built-in configurations.
    static const CaseRegistry& builtin();

    CaseRegistry() = default;
    void add(CasePtr c);
    // Cases from the file replace built-ins with the same id.
    void load_file(const std::string& path);

    CasePtr find(const std::string& id) const;
    const Case& get(const std::string& id) const;
    std::vector<std::string> ids() const;

private:
    std::map<std::string, CasePtr> cases_;
};

const Case& preset(const std::string& id);

const std::string& builtin_cases_json();

}  // namespace qtoric

#endif
