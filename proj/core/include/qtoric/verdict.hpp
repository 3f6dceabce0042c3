#ifndef QTORIC_VERDICT_HPP
#define QTORIC_VERDICT_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "qtoric/case.hpp"

namespace qtoric {

enum class Status { ProvenNonzero, ForcedZero, Inconclusive, NotApplicable };

const char* to_string(Status s);
Status status_from_string(const std::string& s);

struct Verdict
{
    std::string case_id;
    std::int64_t delta = 0;
    std::int64_t h = 0;
    bool applicable = false;
    int epsilon = 0;
    std::optional<std::int64_t> congruence_residue;  // period sum mod the case modulus
    std::optional<Integer> period_sum;
    Status status = Status::Inconclusive;

    friend bool operator==(const Verdict&, const Verdict&) = default;
};

struct VerdictOptions
{
    // Use any h accepted vectors instead of the class-group orbit.
    bool congruence_only = false;
};

// Class-number side condition: h odd, h = 2 mod 4 or 3 not dividing h, by period modulus.
bool class_condition(const Case& c, std::int64_t d);

Verdict verdict(const Case& c, std::int64_t d, const VerdictOptions& opt = {});

std::string to_json(const Verdict& v);
Verdict verdict_from_json(const std::string& text);

std::string csv_header();
std::string to_csv(const Verdict& v);
Verdict verdict_from_csv(const std::string& line);

}  // namespace qtoric

#endif
