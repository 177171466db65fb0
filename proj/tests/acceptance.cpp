// Acceptance suite: nine exact end-to-end criteria, each reported on one
// PASS/FAIL line. Every comparison is an exact rational equality — there are
// no tolerances anywhere. The process exits nonzero if any criterion fails.

#include "tobl/behavior.hpp"
#include "tobl/hardy.hpp"
#include "tobl/linprog.hpp"
#include "tobl/membership.hpp"
#include "tobl/optimizer.hpp"
#include "tobl/reference_tables.hpp"
#include "tobl/rational.hpp"
#include "tobl/wirings.hpp"

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <variant>

using namespace tobl;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool pass, double seconds)
{
    std::printf("%s  %d. %s  [%.2fs]\n", pass ? "PASS" : "FAIL", number, name.c_str(), seconds);
    std::fflush(stdout);
    if (!pass)
        ++failures;
}

template <typename Fn>
void criterion(int number, const std::string& name, Fn&& fn)
{
    auto start = std::chrono::steady_clock::now();
    bool pass = false;
    try {
        pass = fn();
    }
    catch (const std::exception& e) {
        std::printf("      exception: %s\n", e.what());
    }
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report(number, name, pass, seconds);
}

// Shared between criteria 1 and 6/8: the canonical tripartite time-ordered
// optimum is expensive, so it is computed once.
Rational tobl3_value;
Rational ns3_value;

bool criterion_tobl_optimum()
{
    OptimizationResult r = maximize_hardy({CorrelationSet::Tobl, HardySpec::canonical(3)});
    tobl3_value = r.q_max;
    if (!r.feasible || r.q_max != Rational(1, 4))
        return false;
    if (!r.behavior || !validate(*r.behavior).ok())
        return false;
    if (!r.decomposition || !verify_decomposition(*r.behavior, *r.decomposition).ok)
        return false;
    // The decomposition doubles as the membership certificate; re-derive it
    // independently through the membership decider as well.
    return is_tobl(membership_tobl(*r.behavior, 1));
}

bool criterion_ns_tripartite()
{
    OptimizationResult r =
        maximize_hardy({CorrelationSet::NoSignaling, HardySpec::canonical(3)});
    ns3_value = r.q_max;
    return r.feasible && r.q_max == Rational(1, 2) && r.behavior && validate(*r.behavior).ok();
}

bool criterion_ns_bipartite()
{
    OptimizationResult r =
        maximize_hardy({CorrelationSet::NoSignaling, HardySpec::canonical(2)});
    return r.feasible && r.q_max == Rational(1, 2) && r.behavior && validate(*r.behavior).ok();
}

bool criterion_local_optima()
{
    for (int parties : {2, 3}) {
        OptimizationResult r =
            maximize_hardy({CorrelationSet::Local, HardySpec::canonical(parties)});
        if (!r.feasible || r.q_max != 0)
            return false;
    }
    return true;
}

bool criterion_reference_tables()
{
    const Behavior& ref = reference_behavior();
    if (!validate(ref).ok())
        return false;
    HardyReport hardy = hardy_report(ref, HardySpec::canonical(3));
    if (!hardy.witness || hardy.q != Rational(1, 4))
        return false;
    const ToblDecomposition& d = reference_decomposition();
    for (const auto& part : d.parts) {
        if (part.size() != 4)
            return false;
        for (const auto& term : part)
            if (term.weight != Rational(1, 4))
                return false;
    }
    // All six direction/bipartition reconstructions, exactly.
    for (Bipartition bp : all_bipartitions)
        for (Direction dir : {Direction::Forward, Direction::Backward})
            if (!(reconstruct(d, bp, dir) == ref))
                return false;
    return verify_decomposition(ref, d).ok;
}

bool criterion_nesting_chain()
{
    Rational local = maximize_hardy({CorrelationSet::Local, HardySpec::canonical(3)}).q_max;
    if (!(local == 0 && Rational(0) < tobl3_value && tobl3_value < ns3_value &&
          tobl3_value == Rational(1, 4) && ns3_value == Rational(1, 2)))
        return false;
    OptimizationResult ns =
        maximize_hardy({CorrelationSet::NoSignaling, HardySpec::canonical(3)});
    return ns.behavior && !is_tobl(membership_tobl(*ns.behavior, 1));
}

bool criterion_wiring_audit()
{
    WiringAuditReport report =
        audit_wirings(reference_behavior(), {all_pairs.begin(), all_pairs.end()});
    return report.total == 3 * 65536 && report.nonlocal == 0 && report.max_chsh <= 2;
}

bool criterion_family_sweep()
{
    // Local and no-signaling run over the full 512-member family; the
    // time-ordered leg samples every 128th member (a documented subset; the
    // canonical member itself is covered exactly by criterion 1).
    for (const auto& e : sweep_hardy_family(3, CorrelationSet::Local, 1))
        if (e.q_max != 0)
            return false;
    for (const auto& e : sweep_hardy_family(3, CorrelationSet::NoSignaling, 1))
        if (e.q_max != Rational(1, 2))
            return false;
    auto sampled = sweep_hardy_family(3, CorrelationSet::Tobl, 128);
    if (sampled.size() != 4)
        return false;
    for (const auto& e : sampled)
        if (e.q_max != tobl3_value)
            return false;
    return true;
}

bool criterion_solver_self_checks()
{
    std::mt19937 rng(42);
    std::uniform_int_distribution<std::size_t> size_m(1, 6);
    std::uniform_int_distribution<std::size_t> size_n(2, 8);
    std::uniform_int_distribution<int> entry(-3, 3);
    std::uniform_int_distribution<int> planted(0, 3);

    for (int trial = 0; trial < 100; ++trial) {
        std::size_t m = size_m(rng);
        std::size_t n = size_n(rng);
        RMatrix a(m, RVector(n));
        for (auto& row : a)
            for (auto& v : row)
                v = entry(rng);
        RVector x0(n);
        for (auto& v : x0)
            v = planted(rng);
        RVector b(m, Rational(0));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j)
                b[i] += a[i][j] * x0[j];
        bool infeasible = trial % 2 == 1;
        if (infeasible) {
            a.push_back(a[trial % m]);
            b.push_back(b[trial % m] + 1);
        }
        LinearProgram lp;
        lp.objective = RVector(n);
        for (auto& v : lp.objective)
            v = entry(rng);
        lp.constraints = a;
        lp.rhs = b;
        auto outcome = solve(lp);
        if (infeasible) {
            auto* cert = std::get_if<LpInfeasible>(&outcome);
            if (!cert || !check_farkas(a, b, cert->certificate))
                return false;
        }
        else {
            if (std::holds_alternative<LpInfeasible>(outcome))
                return false;
            if (auto* opt = std::get_if<LpOptimal>(&outcome))
                if (!check_solution(a, b, opt->solution))
                    return false;
        }
    }
    return true;
}

}  // namespace

int main()
{
    std::printf("acceptance suite: exact criteria, zero tolerance\n");
    criterion(1, "time-ordered tripartite optimum is exactly 1/4, attained and certified",
              criterion_tobl_optimum);
    criterion(2, "no-signaling tripartite optimum is exactly 1/2", criterion_ns_tripartite);
    criterion(3, "no-signaling bipartite optimum is exactly 1/2", criterion_ns_bipartite);
    criterion(4, "local optimum is exactly 0 in both scenarios", criterion_local_optima);
    criterion(5, "reference tables: valid, witness at 1/4, decomposition reconstructs exactly",
              criterion_reference_tables);
    criterion(6, "nesting chain 0 < 1/4 < 1/2 and the no-signaling optimizer escapes the set",
              criterion_nesting_chain);
    criterion(7, "all 3 x 65536 wirings of the reference behavior are local with CHSH <= 2",
              criterion_wiring_audit);
    criterion(8, "family sweep: uniform optima (full local/no-signaling, sampled time-ordered)",
              criterion_family_sweep);
    criterion(9, "100 randomized programs: exact solution and certificate verification",
              criterion_solver_self_checks);
    if (failures == 0) {
        std::printf("all 9 criteria PASS\n");
        return 0;
    }
    std::printf("%d criteria FAILED\n", failures);
    return 1;
}
