#include "tobl/membership.hpp"

#include <nlohmann/json.hpp>

#include <future>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <thread>

namespace tobl {

namespace {

TimeOrderedStrategy strategy_for(Bipartition bp, Direction dir, const std::array<int, 2>& lone,
                                 const PairResponse& pr)
{
    TimeOrderedStrategy s{bp, dir, lone, pr.first, pr.second};
    return s;
}

}  // namespace

ConstraintSystem ns_constraint_system(int parties)
{
    if (parties != 2 && parties != 3)
        throw std::invalid_argument("ns_constraint_system: parties must be 2 or 3");
    const std::size_t width = std::size_t{1} << parties;
    const std::size_t cells = width * width;
    ConstraintSystem sys;

    for (std::size_t in = 0; in < width; ++in) {
        RVector row(cells, Rational(0));
        for (std::size_t o = 0; o < width; ++o)
            row[in * width + o] = 1;
        sys.rows.push_back(std::move(row));
        sys.rhs.push_back(Rational(1));
    }

    // For each party whose outcome is summed out, the remaining marginal must
    // not depend on that party's input.
    for (int drop = 0; drop < parties; ++drop) {
        const std::size_t drop_bit = std::size_t{1} << (parties - 1 - drop);
        for (std::size_t in = 0; in < width; ++in) {
            if (in & drop_bit)
                continue;  // take the input with the dropped coordinate at 0
            for (std::size_t o = 0; o < width; ++o) {
                if (o & drop_bit)
                    continue;
                RVector row(cells, Rational(0));
                for (int od = 0; od < 2; ++od) {
                    const std::size_t oo = o | (od ? drop_bit : 0);
                    row[in * width + oo] += 1;
                    row[(in | drop_bit) * width + oo] -= 1;
                }
                sys.rows.push_back(std::move(row));
                sys.rhs.push_back(Rational(0));
            }
        }
    }
    return sys;
}

LocalVerdict membership_local(const Behavior& b)
{
    const auto strategies = enumerate_local(b.parties());
    const std::size_t cells = b.num_cells();
    RMatrix a(cells, RVector(strategies.size(), Rational(0)));
    for (std::size_t s = 0; s < strategies.size(); ++s) {
        const Behavior sb = strategies[s].behavior();
        for (std::size_t c = 0; c < cells; ++c)
            if (!sb.cell(c).is_zero())
                a[c][s] = 1;
    }
    auto outcome = feasible(a, b.cells());
    if (auto* point = std::get_if<FeasiblePoint>(&outcome))
        return LocalMember{std::move(point->point)};
    return std::get<LpInfeasible>(outcome);
}

bool is_local(const LocalVerdict& v)
{
    return std::holds_alternative<LocalMember>(v);
}

namespace {

int lone_code_of(std::size_t strategy_id)
{
    return static_cast<int>(strategy_id & 3);
}

// Feasibility system for one bipartition: two independent weight vectors,
// one per direction, each over the 256 deterministic strategies, with
// matching reconstructions and matching lone-response marginals. A shared-
// randomness model with common weights exists iff this reduced system is
// feasible (couple the two directions fiberwise over the lone response).
struct BipartitionSystem {
    RMatrix rows;
    RVector rhs;
};

BipartitionSystem bipartition_system(const Behavior& b, Bipartition bp)
{
    constexpr std::size_t kStrategies = 256;
    const std::size_t cells = 64;
    BipartitionSystem sys;
    sys.rows.assign(2 * cells + 4, RVector(2 * kStrategies, Rational(0)));
    sys.rhs.assign(2 * cells + 4, Rational(0));

    for (int dir = 0; dir < 2; ++dir) {
        const std::size_t col0 = static_cast<std::size_t>(dir) * kStrategies;
        const std::size_t row0 = static_cast<std::size_t>(dir) * cells;
        for (std::size_t id = 0; id < kStrategies; ++id) {
            const Behavior sb =
                TimeOrderedStrategy::decode(bp, static_cast<Direction>(dir), id).behavior();
            for (std::size_t c = 0; c < cells; ++c)
                if (!sb.cell(c).is_zero())
                    sys.rows[row0 + c][col0 + id] = 1;
            // lone-marginal matching rows, forward minus backward
            sys.rows[2 * cells + static_cast<std::size_t>(lone_code_of(id))][col0 + id] =
                dir == 0 ? 1 : -1;
        }
        for (std::size_t c = 0; c < cells; ++c)
            sys.rhs[row0 + c] = b.cell(c);
    }
    return sys;
}

std::vector<ToblTerm> couple_directions(Bipartition, const RVector& point)
{
    constexpr std::size_t kStrategies = 256;
    std::vector<ToblTerm> terms;
    for (int alpha = 0; alpha < 4; ++alpha) {
        Rational mass(0);
        for (std::size_t id = 0; id < kStrategies; ++id)
            if (lone_code_of(id) == alpha)
                mass += point[id];
        if (mass.is_zero())
            continue;
        for (std::size_t fid = 0; fid < kStrategies; ++fid) {
            if (lone_code_of(fid) != alpha || point[fid].is_zero())
                continue;
            for (std::size_t bid = 0; bid < kStrategies; ++bid) {
                if (lone_code_of(bid) != alpha || point[kStrategies + bid].is_zero())
                    continue;
                ToblTerm t;
                t.weight = point[fid] * point[kStrategies + bid] / mass;
                t.lone = {alpha & 1, (alpha >> 1) & 1};
                const auto f = TimeOrderedStrategy::decode(Bipartition::A_BC, Direction::Forward, fid);
                const auto r = TimeOrderedStrategy::decode(Bipartition::A_BC, Direction::Backward, bid);
                t.forward = {f.first_resp, f.second_resp};
                t.backward = {r.first_resp, r.second_resp};
                terms.push_back(std::move(t));
            }
        }
    }
    return terms;
}

using PartVerdict = std::variant<std::vector<ToblTerm>, LpInfeasible>;

PartVerdict solve_bipartition(const Behavior& b, Bipartition bp)
{
    auto sys = bipartition_system(b, bp);
    auto outcome = feasible(sys.rows, sys.rhs);
    if (auto* point = std::get_if<FeasiblePoint>(&outcome))
        return couple_directions(bp, point->point);
    return std::get<LpInfeasible>(outcome);
}

}  // namespace

ToblVerdict membership_tobl(const Behavior& b, unsigned threads)
{
    if (b.parties() != 3)
        throw std::invalid_argument("membership_tobl: tripartite behaviors only");
    if (threads == 0)
        threads = std::thread::hardware_concurrency();

    std::array<PartVerdict, 3> verdicts;
    if (threads > 1) {
        std::array<std::future<PartVerdict>, 3> futures;
        for (int i = 0; i < 3; ++i)
            futures[static_cast<std::size_t>(i)] = std::async(
                std::launch::async, [&b, i] { return solve_bipartition(b, all_bipartitions[static_cast<std::size_t>(i)]); });
        for (int i = 0; i < 3; ++i)
            verdicts[static_cast<std::size_t>(i)] = futures[static_cast<std::size_t>(i)].get();
    }
    else {
        for (int i = 0; i < 3; ++i)
            verdicts[static_cast<std::size_t>(i)] =
                solve_bipartition(b, all_bipartitions[static_cast<std::size_t>(i)]);
    }

    ToblDecomposition d;
    for (int i = 0; i < 3; ++i) {
        auto& v = verdicts[static_cast<std::size_t>(i)];
        if (auto* cert = std::get_if<LpInfeasible>(&v))
            return ToblNonMember{all_bipartitions[static_cast<std::size_t>(i)], std::move(*cert)};
        d.parts[static_cast<std::size_t>(i)] = std::move(std::get<std::vector<ToblTerm>>(v));
    }
    return d;
}

bool is_tobl(const ToblVerdict& v)
{
    return std::holds_alternative<ToblDecomposition>(v);
}

Behavior reconstruct(const ToblDecomposition& d, Bipartition bp, Direction dir)
{
    RVector cells(64, Rational(0));
    for (const auto& term : d.parts[static_cast<std::size_t>(lone_party(bp))]) {
        const auto& pr = dir == Direction::Forward ? term.forward : term.backward;
        const Behavior sb = strategy_for(bp, dir, term.lone, pr).behavior();
        for (std::size_t c = 0; c < 64; ++c)
            if (!sb.cell(c).is_zero())
                cells[c] += term.weight;
    }
    return Behavior(3, std::move(cells));
}

DecompositionReport verify_decomposition(const Behavior& b, const ToblDecomposition& d)
{
    DecompositionReport rep;
    if (b.parties() != 3) {
        rep.ok = false;
        rep.first_mismatch = "behavior is not tripartite";
        return rep;
    }
    for (Bipartition bp : all_bipartitions) {
        Rational total(0);
        for (const auto& term : d.parts[static_cast<std::size_t>(lone_party(bp))]) {
            if (term.weight < 0) {
                rep.ok = false;
                rep.first_mismatch = bipartition_name(bp) + ": negative weight";
                return rep;
            }
            total += term.weight;
        }
        if (total != 1) {
            rep.ok = false;
            rep.first_mismatch =
                bipartition_name(bp) + ": weights sum to " + to_string(total);
            return rep;
        }
        for (Direction dir : {Direction::Forward, Direction::Backward}) {
            const Behavior r = reconstruct(d, bp, dir);
            for (std::size_t c = 0; c < 64; ++c) {
                if (r.cell(c) != b.cell(c)) {
                    rep.ok = false;
                    rep.first_mismatch =
                        bipartition_name(bp) +
                        (dir == Direction::Forward ? " forward" : " backward") + " cell " +
                        input_label(3, c >> 3) + " " + outcome_label(3, c & 7) + ": got " +
                        to_string(r.cell(c)) + ", want " + to_string(b.cell(c));
                    return rep;
                }
            }
        }
    }
    return rep;
}

namespace {

nlohmann::json bits_json(const int* bits, std::size_t n)
{
    nlohmann::json a = nlohmann::json::array();
    for (std::size_t i = 0; i < n; ++i)
        a.push_back(bits[i]);
    return a;
}

template <std::size_t N>
std::array<int, N> bits_from_json(const nlohmann::json& a)
{
    if (!a.is_array() || a.size() != N)
        throw std::invalid_argument("decomposition JSON: bad bit array");
    std::array<int, N> out{};
    for (std::size_t i = 0; i < N; ++i) {
        const int v = a[i].get<int>();
        if (v != 0 && v != 1)
            throw std::invalid_argument("decomposition JSON: bits must be 0/1");
        out[i] = v;
    }
    return out;
}

}  // namespace

void write_decomposition(const ToblDecomposition& d, std::ostream& out)
{
    nlohmann::json parts = nlohmann::json::array();
    for (Bipartition bp : all_bipartitions) {
        nlohmann::json terms = nlohmann::json::array();
        for (const auto& term : d.parts[static_cast<std::size_t>(lone_party(bp))]) {
            nlohmann::json t;
            t["weight"] = to_string(term.weight);
            t["lone"] = bits_json(term.lone.data(), 2);
            t["forward"] = {{"first", bits_json(term.forward.first.data(), 2)},
                            {"second", bits_json(term.forward.second.data(), 4)}};
            t["backward"] = {{"first", bits_json(term.backward.first.data(), 2)},
                             {"second", bits_json(term.backward.second.data(), 4)}};
            terms.push_back(std::move(t));
        }
        parts.push_back({{"bipartition", bipartition_name(bp)}, {"terms", std::move(terms)}});
    }
    nlohmann::json j;
    j["bipartitions"] = std::move(parts);
    out << j.dump(2) << "\n";
}

ToblDecomposition read_decomposition(std::istream& in)
{
    nlohmann::json j;
    try {
        in >> j;
    }
    catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("decomposition JSON parse error: ") + e.what());
    }
    ToblDecomposition d;
    std::array<bool, 3> seen{};
    for (const auto& part : j.at("bipartitions")) {
        const std::string name = part.at("bipartition").get<std::string>();
        int lone = -1;
        for (Bipartition bp : all_bipartitions)
            if (bipartition_name(bp) == name)
                lone = lone_party(bp);
        if (lone < 0)
            throw std::invalid_argument("decomposition JSON: unknown bipartition '" + name + "'");
        seen[static_cast<std::size_t>(lone)] = true;
        for (const auto& tj : part.at("terms")) {
            ToblTerm t;
            t.weight = parse_rational(tj.at("weight").get<std::string>());
            t.lone = bits_from_json<2>(tj.at("lone"));
            t.forward = {bits_from_json<2>(tj.at("forward").at("first")),
                         bits_from_json<4>(tj.at("forward").at("second"))};
            t.backward = {bits_from_json<2>(tj.at("backward").at("first")),
                          bits_from_json<4>(tj.at("backward").at("second"))};
            d.parts[static_cast<std::size_t>(lone)].push_back(std::move(t));
        }
    }
    for (bool s : seen)
        if (!s)
            throw std::invalid_argument("decomposition JSON: all three bipartitions required");
    return d;
}

}  // namespace tobl
