#include "qtoric/verdict.hpp"

#include <sstream>

#include "json.hpp"
#include "qtoric/embeddings.hpp"
#include "qtoric/epsilon.hpp"

namespace qtoric {

using nlohmann::json;

const char* to_string(Status s)
{
    switch (s) {
    case Status::ProvenNonzero:
        return "ProvenNonzero";
    case Status::ForcedZero:
        return "ForcedZero";
    case Status::Inconclusive:
        return "Inconclusive";
    default:
        return "NotApplicable";
    }
}

Status status_from_string(const std::string& s)
{
    for (Status t : {Status::ProvenNonzero, Status::ForcedZero, Status::Inconclusive,
                     Status::NotApplicable})
        if (s == to_string(t))
            return t;
    throw InvalidInput("unknown status '" + s + "'");
}

bool class_condition(const Case& c, std::int64_t d)
{
    auto cg = class_number(d);
    const std::int64_t h = cg.h;
    const bool odd = genus_parity(d) == Parity::Odd;
    if (odd != (h % 2 == 1))
        throw MathError("genus parity disagrees with h(" + std::to_string(d) + ") = " +
                        std::to_string(h));
    switch (c.period_modulus) {
    case 2:
        return odd;
    case 4: {
        auto pz = pizer_mod4(d);
        if (pz && h % 4 != 2)
            throw MathError("Pizer criterion asserts h = 2 mod 4 but h(" + std::to_string(d) +
                            ") = " + std::to_string(h));
        return odd || pz.has_value();
    }
    default:
        return h % c.period_modulus != 0;
    }
}

Verdict verdict(const Case& c, std::int64_t d, const VerdictOptions& opt)
{
    require_fundamental(d);
    Verdict v;
    v.case_id = c.id;
    v.delta = d;
    v.h = class_number(d).h;
    v.applicable = c.applicability.contains(d);
    v.epsilon = global_epsilon(c, d);
    const bool local_ok = condition3(c, d);
    if (v.epsilon == -1) {
        if (local_ok)
            throw MathError("local conditions hold but epsilon = -1 for " + c.id +
                            ", Delta = " + std::to_string(d));
        v.status = Status::ForcedZero;
        return v;
    }
    // epsilon = +1 while the toric periods on this D vanish identically: two local
    // obstructions cancel in the product and the L-value lives on another algebra
    if (!embeds_in_algebra(c, d) || !local_ok) {
        v.status = Status::NotApplicable;
        return v;
    }
    if (eichler_count(c, d) == 0)
        throw MathError("local conditions hold but O has no optimal embedding of discriminant " +
                        std::to_string(d));

    Integer sum = 0;
    if (opt.congruence_only) {
        auto classes = gamma_classes(c, d, represent(c.lattice.gram3(), -d));
        for (std::int64_t j = 0; j < v.h; ++j)
            sum += phi_value(c, classes.at(static_cast<std::size_t>(j)).rep);
    } else {
        auto orb = orbit_for(c, d);
        sum = period_sum(c, std::get<Orbit>(orb));
        v.period_sum = sum;
    }
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), sum.get_mpz_t(), static_cast<unsigned long>(c.period_modulus));
    v.congruence_residue = r.get_si();

    if (v.applicable) {
        // all phi values are 1 mod m on the applicable residues, so the sum is h mod m
        if (*v.congruence_residue != v.h % c.period_modulus)
            throw MathError("period sum is not congruent to h mod " +
                            std::to_string(c.period_modulus) + " for Delta = " +
                            std::to_string(d));
    }
    if (v.applicable && class_condition(c, d)) {
        if (*v.congruence_residue == 0 || (v.period_sum && *v.period_sum == 0))
            throw MathError("nonvanishing hypothesis holds but the period sum vanishes mod " +
                            std::to_string(c.period_modulus));
        v.status = Status::ProvenNonzero;
    } else {
        v.status = Status::Inconclusive;
    }
    return v;
}

namespace {

json integer_json(const Integer& z)
{
    if (z.fits_slong_p())
        return json(static_cast<std::int64_t>(z.get_si()));
    return json(z.get_str());
}

}  // namespace

std::string to_json(const Verdict& v)
{
    json j;
    j["case"] = v.case_id;
    j["delta"] = v.delta;
    j["h"] = v.h;
    j["applicable"] = v.applicable;
    j["epsilon"] = v.epsilon;
    j["congruence_residue"] = v.congruence_residue ? json(*v.congruence_residue) : json(nullptr);
    j["period_sum"] = v.period_sum ? integer_json(*v.period_sum) : json(nullptr);
    j["status"] = to_string(v.status);
    return j.dump();
}

Verdict verdict_from_json(const std::string& text)
{
    try {
        json j = json::parse(text);
        Verdict v;
        v.case_id = j.at("case").get<std::string>();
        v.delta = j.at("delta").get<std::int64_t>();
        v.h = j.at("h").get<std::int64_t>();
        v.applicable = j.at("applicable").get<bool>();
        v.epsilon = j.at("epsilon").get<int>();
        if (!j.at("congruence_residue").is_null())
            v.congruence_residue = j.at("congruence_residue").get<std::int64_t>();
        const auto& ps = j.at("period_sum");
        if (ps.is_number_integer())
            v.period_sum = Integer(static_cast<long>(ps.get<std::int64_t>()));
        else if (ps.is_string())
            v.period_sum = Integer(ps.get<std::string>());
        v.status = status_from_string(j.at("status").get<std::string>());
        return v;
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("malformed verdict JSON: ") + e.what());
    }
}

std::string csv_header() { return "case,delta,h,epsilon,applicable,congruence_residue,period_sum,status"; }

std::string to_csv(const Verdict& v)
{
    std::ostringstream os;
    os << v.case_id << ',' << v.delta << ',' << v.h << ',' << v.epsilon << ','
       << (v.applicable ? "true" : "false") << ',';
    if (v.congruence_residue)
        os << *v.congruence_residue;
    os << ',';
    if (v.period_sum)
        os << v.period_sum->get_str();
    os << ',' << to_string(v.status);
    return os.str();
}

Verdict verdict_from_csv(const std::string& line)
{
    std::vector<std::string> f;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            f.push_back(cur);
            cur.clear();
        } else if (ch != '\r' && ch != '\n') {
            cur += ch;
        }
    }
    f.push_back(cur);
    if (f.size() != 8)
        throw InvalidInput("CSV row must have 8 fields");
    try {
        Verdict v;
        v.case_id = f[0];
        v.delta = std::stoll(f[1]);
        v.h = std::stoll(f[2]);
        v.epsilon = std::stoi(f[3]);
        if (f[4] != "true" && f[4] != "false")
            throw InvalidInput("CSV applicable must be true or false");
        v.applicable = f[4] == "true";
        if (!f[5].empty())
            v.congruence_residue = std::stoll(f[5]);
        if (!f[6].empty())
            v.period_sum = Integer(f[6]);
        v.status = status_from_string(f[7]);
        return v;
    } catch (const std::logic_error& e) {
        throw InvalidInput(std::string("malformed CSV row: ") + e.what());
    }
}

}  // namespace qtoric
