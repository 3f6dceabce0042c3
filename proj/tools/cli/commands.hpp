#ifndef QTORIC_CLI_COMMANDS_HPP
#define QTORIC_CLI_COMMANDS_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qtoric/case.hpp"
#include "qtoric/embeddings.hpp"
#include "qtoric/verdict.hpp"

namespace qtoric::cli {

// Parses argv and dispatches; returns the process exit code (0, 1 or 2).
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

CaseRegistry load_registry(const std::string& config_path);

enum class ScanFormat { Csv, JsonLines };

struct ScanOptions
{
    std::int64_t min_abs = 3;
    std::int64_t max_abs = 1000;
    bool prime_only = false;
    std::optional<int> modulus;  // residue filter on Delta, defaults to the case modulus
    std::vector<int> residues;
    bool check_congruence = false;
    bool check_eichler = false;
    bool congruence_only = false;
    unsigned jobs = 1;
};

struct ScanReport
{
    std::string case_id;
    std::vector<Verdict> rows;  // ascending |Delta|
    std::map<Status, std::int64_t> counts;
    std::int64_t vectors_checked = 0;
    std::int64_t congruence_violations = 0;
    std::int64_t eichler_checked = 0;
    std::int64_t eichler_mismatches = 0;
    std::vector<std::string> errors;  // per-Delta computational failures

    std::int64_t violations() const
    {
        return congruence_violations + eichler_mismatches + static_cast<std::int64_t>(errors.size());
    }
};

ScanReport run_scan(const Case& c, const ScanOptions& opt);
void write_rows(const ScanReport& r, ScanFormat fmt, std::ostream& os);
std::string summary_json(const ScanReport& r);

struct HeckeRow
{
    long p;
    Integer eigenvalue;
    std::int64_t oracle;
    bool match;
};

std::vector<HeckeRow> hecke_table(const Case& c, const std::vector<long>& primes);

struct LValueReport
{
    std::string case_id;
    std::int64_t delta;
    int epsilon;
    int probe;
    double value;
    double tol;
    std::int64_t terms;
    bool small;  // nonzero sign but |L| < 1e-2
};

LValueReport lvalue_report(const Case& c, std::int64_t d, double tol);
std::string to_json(const LValueReport& r);

std::string orbit_json(const Case& c, std::int64_t d);

// Quick internal consistency battery; returns failure messages.
std::vector<std::string> selftest(const CaseRegistry& reg);

}  // namespace qtoric::cli

#endif
