#include "commands.hpp"

#include <atomic>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "qtoric/epsilon.hpp"
#include "qtoric/qseries.hpp"

namespace qtoric::cli {

using nlohmann::json;

CaseRegistry load_registry(const std::string& config_path)
{
    CaseRegistry reg = CaseRegistry::builtin();
    if (!config_path.empty())
        reg.load_file(config_path);
    return reg;
}

namespace {

struct DeltaResult
{
    std::optional<Verdict> verdict;
    std::string error;
    std::int64_t vectors = 0;
    std::int64_t violations = 0;
    bool eichler_checked = false;
    bool eichler_mismatch = false;
};

DeltaResult scan_one(const Case& c, std::int64_t d, const ScanOptions& opt)
{
    DeltaResult r;
    try {
        if ((opt.check_congruence || opt.check_eichler) && embeds_in_algebra(c, d)) {
            auto vs = represent(c.lattice.gram3(), -d);
            if (opt.check_congruence) {
                for (const auto& v : vs) {
                    ++r.vectors;
                    try {
                        congruence_check(c, v, d);
                    } catch (const MathError&) {
                        ++r.violations;
                    }
                }
            }
            if (opt.check_eichler) {
                r.eichler_checked = true;
                auto n = static_cast<std::int64_t>(gamma_classes(c, d, vs).size());
                r.eichler_mismatch = n != eichler_count(c, d);
            }
        }
        r.verdict = verdict(c, d, VerdictOptions{opt.congruence_only});
    } catch (const MathError& e) {
        r.error = "Delta = " + std::to_string(d) + ": " + e.what();
    }
    return r;
}

}  // namespace

ScanReport run_scan(const Case& c, const ScanOptions& opt)
{
    if (opt.max_abs > 1000000)
        throw InvalidInput("--max is limited to 10^6");
    if (opt.min_abs > opt.max_abs)
        throw InvalidInput("--min exceeds --max");
    const int modulus = opt.modulus.value_or(c.applicability.modulus);
    if (modulus < 1)
        throw InvalidInput("residue modulus must be positive");
    std::vector<std::int64_t> ds;
    for (auto d : negative_fundamental_discriminants(opt.min_abs, opt.max_abs)) {
        if (opt.prime_only && !is_prime(-d))
            continue;
        if (!opt.residues.empty()) {
            std::int64_t r = ((d % modulus) + modulus) % modulus;
            if (std::find(opt.residues.begin(), opt.residues.end(), r) == opt.residues.end())
                continue;
        }
        ds.push_back(d);
    }

    std::vector<DeltaResult> results(ds.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < ds.size(); i = next++)
            results[i] = scan_one(c, ds[i], opt);
    };
    unsigned jobs = std::max(1u, std::min<unsigned>(opt.jobs, static_cast<unsigned>(ds.size())));
    std::vector<std::thread> pool;
    for (unsigned j = 1; j < jobs; ++j)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();

    ScanReport rep;
    rep.case_id = c.id;
    for (Status s : {Status::ProvenNonzero, Status::ForcedZero, Status::Inconclusive,
                     Status::NotApplicable})
        rep.counts[s] = 0;
    for (auto& r : results) {
        rep.vectors_checked += r.vectors;
        rep.congruence_violations += r.violations;
        rep.eichler_checked += r.eichler_checked;
        rep.eichler_mismatches += r.eichler_mismatch;
        if (!r.error.empty())
            rep.errors.push_back(r.error);
        if (r.verdict) {
            ++rep.counts[r.verdict->status];
            rep.rows.push_back(std::move(*r.verdict));
        }
    }
    return rep;
}

void write_rows(const ScanReport& r, ScanFormat fmt, std::ostream& os)
{
    if (fmt == ScanFormat::Csv)
        os << csv_header() << '\n';
    for (const auto& v : r.rows)
        os << (fmt == ScanFormat::Csv ? to_csv(v) : to_json(v)) << '\n';
}

std::string summary_json(const ScanReport& r)
{
    json counts = json::object();
    for (const auto& [s, n] : r.counts)
        counts[to_string(s)] = n;
    json j;
    j["case"] = r.case_id;
    j["rows"] = r.rows.size();
    j["status_counts"] = counts;
    j["vectors_checked"] = r.vectors_checked;
    j["congruence_violations"] = r.congruence_violations;
    j["eichler_checked"] = r.eichler_checked;
    j["eichler_mismatches"] = r.eichler_mismatches;
    j["errors"] = r.errors;
    j["violations"] = r.violations();
    return j.dump();
}

std::vector<HeckeRow> hecke_table(const Case& c, const std::vector<long>& primes)
{
    long pmax = 1;
    for (long p : primes) {
        if (!is_prime(p))
            throw InvalidInput(std::to_string(p) + " is not prime");
        if (c.conductor() % p == 0)
            throw InvalidInput("p = " + std::to_string(p) + " divides disc(O) = " +
                               std::to_string(c.conductor()));
        pmax = std::max(pmax, p);
    }
    QSeries f = eta_expand(c.eta, pmax);
    std::vector<HeckeRow> out;
    for (long p : primes) {
        Integer e = hecke_eigenvalue(c.lattice, c.units, c.order.reduced_discriminant(), p, c.phi);
        out.push_back({p, e, f[p], e == Integer(static_cast<long>(f[p]))});
    }
    return out;
}

LValueReport lvalue_report(const Case& c, std::int64_t d, double tol)
{
    require_fundamental(d);
    const std::int64_t need = required_terms(c.weight, c.conductor(), d, tol);
    QSeries f = eta_expand(c.eta, need);
    LValueReport r{c.id, d, global_epsilon(c, d), 0, 0.0, tol, need, false};
    r.probe = functional_equation_sign_probe(f, c.weight, c.conductor(), d, tol);
    if (r.probe != r.epsilon)
        throw MathError("numeric root number " + std::to_string(r.probe) +
                        " disagrees with the local product " + std::to_string(r.epsilon));
    r.value = twisted_central_value(f, c.weight, c.conductor(), d, r.epsilon, tol);
    r.small = r.epsilon == 1 && std::abs(r.value) < 1e-2;
    return r;
}

std::string to_json(const LValueReport& r)
{
    json j;
    j["case"] = r.case_id;
    j["delta"] = r.delta;
    j["epsilon"] = r.epsilon;
    j["probe_sign"] = r.probe;
    j["value"] = r.value;
    j["tol"] = r.tol;
    j["terms"] = r.terms;
    j["small"] = r.small;
    return j.dump();
}

std::string orbit_json(const Case& c, std::int64_t d)
{
    require_fundamental(d);
    json j;
    j["case"] = c.id;
    j["delta"] = d;
    j["h"] = class_number(d).h;
    auto res = orbit_for(c, d);
    if (std::holds_alternative<NoEmbeddings>(res)) {
        j["classes"] = json::array();
        j["period_sum"] = nullptr;
        return j.dump();
    }
    const auto& orb = std::get<Orbit>(res);
    json classes = json::array();
    for (const auto& cls : orb.classes) {
        Integer phi = phi_value(c, cls.rep);
        classes.push_back({{"v", {cls.rep[0], cls.rep[1], cls.rep[2]}}, {"phi", phi.get_str()}});
    }
    j["classes"] = classes;
    j["period_sum"] = period_sum(c, orb).get_str();
    return j.dump();
}

std::vector<std::string> selftest(const CaseRegistry& reg)
{
    std::vector<std::string> fails;
    auto check = [&](bool ok, const std::string& what) {
        if (!ok)
            fails.push_back(what);
    };
    for (const auto& id : reg.ids()) {
        const Case& c = reg.get(id);
        try {
            std::vector<long> ps;
            for (long p : {3L, 5L, 7L})
                if (c.conductor() % p != 0)
                    ps.push_back(p);
            for (const auto& row : hecke_table(c, ps))
                check(row.match, id + ": T_" + std::to_string(row.p) + " eigenvalue " +
                                     row.eigenvalue.get_str() + " vs a_p " +
                                     std::to_string(row.oracle));
            auto inv = invariant_harmonics(c.lattice, c.units, c.l, id);
            check(inv.basis.size() == 1, id + ": invariant harmonic space is not one-dimensional");
        } catch (const std::exception& e) {
            fails.push_back(id + ": " + e.what());
        }
    }
    if (reg.find("C1")) {
        const Case& c1 = reg.get("C1");
        try {
            check(verdict(c1, -19).status == Status::ProvenNonzero, "C1, -19 is not ProvenNonzero");
            check(verdict(c1, -7).status == Status::ForcedZero, "C1, -7 is not ForcedZero");
            auto l = lvalue_report(c1, -19, 1e-8);
            check(std::abs(l.value) > 1e-3, "C1, -19 central value is too small");
        } catch (const std::exception& e) {
            fails.push_back(std::string("C1: ") + e.what());
        }
    }
    return fails;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Toric periods and twisted central values on definite quaternion orders", "qtoric"};
    app.require_subcommand(1);
    std::string config;
    app.add_option("--config", config, "JSON case file overriding the built-in presets")
        ->check(CLI::ExistingFile);

    std::string case_id = "C1";
    std::int64_t disc = 0;
    bool congruence_only = false;
    bool allow_nonmaximal = false;

    auto* verify = app.add_subcommand("verify", "Verdict for one discriminant");
    verify->add_option("--case", case_id)->required();
    verify->add_option("--disc", disc)->required();
    verify->add_flag("--congruence-only", congruence_only,
                     "Use any h accepted vectors instead of the class-group orbit");
    verify->add_flag("--allow-nonmaximal", allow_nonmaximal, "Reserved");

    ScanOptions sopt;
    sopt.jobs = std::max(1u, std::thread::hardware_concurrency());
    std::string out_path;
    std::string format = "csv";
    auto* scan = app.add_subcommand("scan", "Verdicts for a range of discriminants");
    scan->add_option("--case", case_id)->required();
    scan->add_option("--max", sopt.max_abs, "Largest |Delta|")->required();
    scan->add_option("--min", sopt.min_abs, "Smallest |Delta|");
    scan->add_flag("--prime-only", sopt.prime_only, "Only -Delta prime");
    scan->add_option("--residue", sopt.residues, "Keep Delta in these classes")->delimiter(',');
    scan->add_option("--modulus", sopt.modulus, "Modulus for --residue");
    scan->add_flag("--check-congruence", sopt.check_congruence);
    scan->add_flag("--check-eichler", sopt.check_eichler);
    scan->add_flag("--congruence-only", sopt.congruence_only);
    scan->add_option("--jobs", sopt.jobs)->check(CLI::PositiveNumber);
    scan->add_option("--out", out_path, "Row output file");
    scan->add_option("--format", format)->check(CLI::IsMember({"csv", "jsonl"}));

    std::vector<long> primes{3, 5, 7, 11, 13};
    auto* hecke = app.add_subcommand("hecke", "Hecke eigenvalues against the eta-product oracle");
    hecke->add_option("--case", case_id)->required();
    auto* primes_opt = hecke->add_option("--primes", primes, "Default 3,5,7,11,13 minus primes of disc(O)")
                           ->delimiter(',');

    double tol = 1e-8;
    auto* lvalue = app.add_subcommand("lvalue", "Twisted central value and numeric root number");
    lvalue->add_option("--case", case_id)->required();
    lvalue->add_option("--disc", disc)->required();
    lvalue->add_option("--tol", tol)->check(CLI::PositiveNumber);

    auto* orbit = app.add_subcommand("orbit", "Class-group orbit of optimal embeddings");
    orbit->add_option("--case", case_id)->required();
    orbit->add_option("--disc", disc)->required();

    auto* self = app.add_subcommand("selftest", "Internal consistency checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        CaseRegistry reg = load_registry(config);
        if (*verify) {
            if (allow_nonmaximal)
                throw InvalidInput("--allow-nonmaximal is reserved and not implemented");
            out << to_json(verdict(reg.get(case_id), disc, VerdictOptions{congruence_only})) << '\n';
        } else if (*scan) {
            auto rep = run_scan(reg.get(case_id), sopt);
            ScanFormat fmt = format == "csv" ? ScanFormat::Csv : ScanFormat::JsonLines;
            if (out_path.empty()) {
                write_rows(rep, fmt, out);
                err << summary_json(rep) << '\n';
            } else {
                std::ofstream f(out_path);
                if (!f)
                    throw InvalidInput("cannot write " + out_path);
                write_rows(rep, fmt, f);
                out << summary_json(rep) << '\n';
            }
            for (const auto& e : rep.errors)
                err << "error: " << e << '\n';
            return rep.violations() == 0 ? 0 : 1;
        } else if (*hecke) {
            const Case& c = reg.get(case_id);
            if (primes_opt->count() == 0)
                std::erase_if(primes, [&](long p) { return c.conductor() % p == 0; });
            auto table = hecke_table(c, primes);
            out << "p eigenvalue a_p match\n";
            for (const auto& r : table)
                out << r.p << ' ' << r.eigenvalue.get_str() << ' ' << r.oracle
                    << " match=" << (r.match ? "true" : "false") << '\n';
        } else if (*lvalue) {
            auto r = lvalue_report(reg.get(case_id), disc, tol);
            out << to_json(r) << '\n';
            if (r.small)
                err << "warning: |L| = " << std::abs(r.value) << " is below 1e-2\n";
        } else if (*orbit) {
            out << orbit_json(reg.get(case_id), disc) << '\n';
        } else if (*self) {
            auto fails = selftest(reg);
            for (const auto& f : fails)
                err << "FAIL " << f << '\n';
            out << (fails.empty() ? "selftest: ok" : "selftest: failed") << '\n';
            return fails.empty() ? 0 : 1;
        }
    } catch (const InvalidInput& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const MathError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace qtoric::cli
