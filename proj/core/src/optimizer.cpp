#include "tobl/optimizer.hpp"

#include "tobl/linprog.hpp"
#include "tobl/strategies.hpp"
#include "tobl/reference_tables.hpp"

#include <stdexcept>
#include <utility>

namespace tobl {

std::string set_name(CorrelationSet set)
{
    switch (set) {
    case CorrelationSet::Local: return "local";
    case CorrelationSet::NoSignaling: return "no-signaling";
    case CorrelationSet::Tobl: return "time-ordered-bi-local";
    }
    throw std::invalid_argument("bad correlation set");
}

namespace {

OptimizationResult maximize_local(const HardySpec& spec)
{
    const int parties = spec.parties();
    const auto strategies = enumerate_local(parties);
    const std::size_t cells = std::size_t{1} << (2 * parties);
    RMatrix columns(strategies.size());
    for (std::size_t s = 0; s < strategies.size(); ++s)
        columns[s] = strategies[s].behavior().cells();

    const Behavior shape(parties, RVector(cells, Rational(0)));
    const std::size_t success = spec.success_cell(shape);
    const auto zeros = spec.zero_cells(shape);

    LinearProgram lp;
    lp.objective.assign(strategies.size(), Rational(0));
    for (std::size_t s = 0; s < strategies.size(); ++s)
        lp.objective[s] = columns[s][success];
    lp.constraints.push_back(RVector(strategies.size(), Rational(1)));
    lp.rhs.push_back(Rational(1));
    for (std::size_t z : zeros) {
        RVector row(strategies.size(), Rational(0));
        for (std::size_t s = 0; s < strategies.size(); ++s)
            row[s] = columns[s][z];
        lp.constraints.push_back(std::move(row));
        lp.rhs.push_back(Rational(0));
    }

    auto outcome = solve(lp);
    OptimizationResult res;
    if (std::holds_alternative<LpInfeasible>(outcome)) {
        res.feasible = false;
        return res;
    }
    const auto& opt = std::get<LpOptimal>(outcome);
    res.q_max = opt.value;
    RVector bcells(cells, Rational(0));
    for (std::size_t s = 0; s < strategies.size(); ++s)
        if (!opt.solution[s].is_zero())
            for (std::size_t c = 0; c < cells; ++c)
                if (!columns[s][c].is_zero())
                    bcells[c] += opt.solution[s];
    res.behavior = Behavior(parties, std::move(bcells));
    res.local_weights = opt.solution;
    return res;
}

OptimizationResult maximize_no_signaling(const HardySpec& spec)
{
    const int parties = spec.parties();
    const std::size_t cells = std::size_t{1} << (2 * parties);
    const Behavior shape(parties, RVector(cells, Rational(0)));

    auto sys = ns_constraint_system(parties);
    LinearProgram lp;
    lp.objective.assign(cells, Rational(0));
    lp.objective[spec.success_cell(shape)] = 1;
    lp.constraints = std::move(sys.rows);
    lp.rhs = std::move(sys.rhs);
    for (std::size_t z : spec.zero_cells(shape)) {
        RVector row(cells, Rational(0));
        row[z] = 1;
        lp.constraints.push_back(std::move(row));
        lp.rhs.push_back(Rational(0));
    }

    auto outcome = solve(lp);
    OptimizationResult res;
    if (std::holds_alternative<LpInfeasible>(outcome)) {
        res.feasible = false;
        return res;
    }
    const auto& opt = std::get<LpOptimal>(outcome);
    res.q_max = opt.value;
    res.behavior = Behavior(parties, opt.solution);
    return res;
}

// Variables: one weight per surviving time-ordered strategy, grouped by
// (bipartition, direction). A strategy putting mass on a pinned-zero cell is
// dropped up front: nonnegativity forces its weight to zero anyway, and the
// pruning enforces the pins for free. Behavior cells are eliminated by
// substitution — the first group's reconstruction defines the table, the
// other five groups must reconstruct the same table cell by cell, the two
// directions of each bipartition must share lone-response marginals, and one
// normalization row fixes the scale. This keeps the program far smaller and
// less degenerate than carrying explicit cell variables.
OptimizationResult maximize_tobl(const HardySpec& spec)
{
    constexpr std::size_t kCells = 64;
    constexpr std::size_t kStrategies = 256;
    constexpr std::size_t kGroups = 6;  // bipartition * direction
    const Behavior shape(3, RVector(kCells, Rational(0)));
    const std::size_t success = spec.success_cell(shape);
    const auto zeros = spec.zero_cells(shape);

    std::vector<std::size_t> col_id;          // strategy id per column
    std::vector<std::vector<bool>> col_cells; // 0/1 cell pattern per column
    std::array<std::size_t, kGroups + 1> group_begin{};
    for (std::size_t part = 0; part < 3; ++part)
        for (int dir = 0; dir < 2; ++dir) {
            group_begin[part * 2 + static_cast<std::size_t>(dir)] = col_id.size();
            for (std::size_t id = 0; id < kStrategies; ++id) {
                const Behavior sb = TimeOrderedStrategy::decode(
                    all_bipartitions[part], static_cast<Direction>(dir), id).behavior();
                bool hits_pin = false;
                for (std::size_t z : zeros)
                    if (!sb.cell(z).is_zero())
                        hits_pin = true;
                if (hits_pin)
                    continue;
                col_id.push_back(id);
                std::vector<bool> pattern(kCells);
                for (std::size_t c = 0; c < kCells; ++c)
                    pattern[c] = !sb.cell(c).is_zero();
                col_cells.push_back(std::move(pattern));
            }
        }
    group_begin[kGroups] = col_id.size();
    const std::size_t num_vars = col_id.size();

    const auto group_cols = [&](std::size_t g) {
        return std::pair<std::size_t, std::size_t>{group_begin[g], group_begin[g + 1]};
    };

    LinearProgram lp;
    lp.objective.assign(num_vars, Rational(0));
    const auto [ref_begin, ref_end] = group_cols(0);
    for (std::size_t j = ref_begin; j < ref_end; ++j)
        if (col_cells[j][success])
            lp.objective[j] = 1;

    std::array<bool, kCells> pinned{};
    for (std::size_t z : zeros)
        pinned[z] = true;

    // Five reconstruction-agreement rows per unpinned cell.
    for (std::size_t g = 1; g < kGroups; ++g) {
        const auto [g_begin, g_end] = group_cols(g);
        for (std::size_t c = 0; c < kCells; ++c) {
            if (pinned[c])
                continue;  // both sides vanish by pruning
            RVector row(num_vars, Rational(0));
            bool nonzero = false;
            for (std::size_t j = g_begin; j < g_end; ++j)
                if (col_cells[j][c]) {
                    row[j] = 1;
                    nonzero = true;
                }
            for (std::size_t j = ref_begin; j < ref_end; ++j)
                if (col_cells[j][c]) {
                    row[j] = -1;
                    nonzero = true;
                }
            if (nonzero) {
                lp.constraints.push_back(std::move(row));
                lp.rhs.push_back(Rational(0));
            }
        }
    }
    // Matching lone-response marginals between the two directions.
    for (std::size_t part = 0; part < 3; ++part)
        for (std::size_t lone = 0; lone < 4; ++lone) {
            RVector row(num_vars, Rational(0));
            const auto [f_begin, f_end] = group_cols(part * 2);
            for (std::size_t j = f_begin; j < f_end; ++j)
                if ((col_id[j] & 3) == lone)
                    row[j] = 1;
            const auto [b_begin, b_end] = group_cols(part * 2 + 1);
            for (std::size_t j = b_begin; j < b_end; ++j)
                if ((col_id[j] & 3) == lone)
                    row[j] = -1;
            lp.constraints.push_back(std::move(row));
            lp.rhs.push_back(Rational(0));
        }
    {
        RVector row(num_vars, Rational(0));
        for (std::size_t j = ref_begin; j < ref_end; ++j)
            row[j] = 1;
        lp.constraints.push_back(std::move(row));
        lp.rhs.push_back(Rational(1));
    }

    auto outcome = solve(lp);
    OptimizationResult res;
    if (std::holds_alternative<LpInfeasible>(outcome)) {
        res.feasible = false;
        return res;
    }
    const auto& opt = std::get<LpOptimal>(outcome);
    res.q_max = opt.value;
    RVector bcells(kCells, Rational(0));
    for (std::size_t j = ref_begin; j < ref_end; ++j)
        if (!opt.solution[j].is_zero())
            for (std::size_t c = 0; c < kCells; ++c)
                if (col_cells[j][c])
                    bcells[c] += opt.solution[j];
    Behavior attained(3, std::move(bcells));
    auto verdict = membership_tobl(attained);
    if (auto* d = std::get_if<ToblDecomposition>(&verdict))
        res.decomposition = std::move(*d);
    else
        throw std::logic_error("internal error: optimal point left the feasible set");
    res.behavior = std::move(attained);
    return res;
}

}  // namespace

OptimizationResult maximize_hardy(const OptimizationRequest& req)
{
    if (req.set == CorrelationSet::Tobl && req.spec.parties() != 3)
        throw std::invalid_argument("time-ordered optimization needs a tripartite spec");
    switch (req.set) {
    case CorrelationSet::Local: return maximize_local(req.spec);
    case CorrelationSet::NoSignaling: return maximize_no_signaling(req.spec);
    case CorrelationSet::Tobl: return maximize_tobl(req.spec);
    }
    throw std::invalid_argument("bad correlation set");
}

std::vector<SweepEntry> sweep_hardy_family(int parties, CorrelationSet set, std::size_t stride)
{
    if (stride == 0)
        throw std::invalid_argument("sweep stride must be positive");
    std::vector<SweepEntry> out;
    const auto family = hardy_family(parties);
    for (std::size_t i = 0; i < family.size(); i += stride) {
        auto res = maximize_hardy({set, family[i]});
        out.push_back({family[i], res.feasible ? res.q_max : Rational(-1)});
    }
    return out;
}

bool ReferenceReport::all_pass() const
{
    for (const auto& item : items)
        if (!item.pass)
            return false;
    return true;
}

ReferenceReport reproduce_reference()
{
    ReferenceReport rep;
    auto add = [&rep](std::string name, bool pass, std::string detail) {
        rep.items.push_back({std::move(name), pass, std::move(detail)});
    };

    const Behavior& ref = reference_behavior();
    const HardySpec spec3 = HardySpec::canonical(3);
    const HardySpec spec2 = HardySpec::canonical(2);

    const auto vrep = validate(ref);
    add("reference behavior valid (normalized, nonnegative, no-signaling)", vrep.ok(),
        vrep.ok() ? "all checks exact"
                  : std::to_string(vrep.violations.size()) + " violations");

    const auto hrep = hardy_report(ref, spec3);
    add("reference behavior Hardy witness with q = 1/4",
        hrep.witness && hrep.q == Rational(1, 4), "q = " + to_string(hrep.q));

    const auto drep = verify_decomposition(ref, reference_decomposition());
    add("published decomposition reconstructs the behavior (3 bipartitions x 2 directions)",
        drep.ok, drep.ok ? "exact" : drep.first_mismatch);

    add("reference behavior is not local", !is_local(membership_local(ref)),
        "Farkas certificate obtained");

    const auto tobl_ref = membership_tobl(ref);
    add("reference behavior is time-ordered-bi-local", is_tobl(tobl_ref),
        "decomposition obtained by LP");

    auto local2 = maximize_hardy({CorrelationSet::Local, spec2});
    add("local bipartite optimum is 0", local2.feasible && local2.q_max == 0,
        "q_max = " + to_string(local2.q_max));
    auto local3 = maximize_hardy({CorrelationSet::Local, spec3});
    add("local tripartite optimum is 0", local3.feasible && local3.q_max == 0,
        "q_max = " + to_string(local3.q_max));

    auto ns2 = maximize_hardy({CorrelationSet::NoSignaling, spec2});
    add("no-signaling bipartite optimum is 1/2",
        ns2.feasible && ns2.q_max == Rational(1, 2), "q_max = " + to_string(ns2.q_max));
    auto ns3 = maximize_hardy({CorrelationSet::NoSignaling, spec3});
    add("no-signaling tripartite optimum is 1/2",
        ns3.feasible && ns3.q_max == Rational(1, 2), "q_max = " + to_string(ns3.q_max));

    auto tobl3 = maximize_hardy({CorrelationSet::Tobl, spec3});
    add("time-ordered tripartite optimum is 1/4",
        tobl3.feasible && tobl3.q_max == Rational(1, 4), "q_max = " + to_string(tobl3.q_max));

    bool ns_not_tobl = ns3.behavior && !is_tobl(membership_tobl(*ns3.behavior));
    add("no-signaling optimal behavior (q = 1/2) is not time-ordered-bi-local", ns_not_tobl,
        "infeasibility certificate obtained");

    return rep;
}

}  // namespace tobl
