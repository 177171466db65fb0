#include "tobl/wirings.hpp"

#include "tobl/membership.hpp"

#include <algorithm>
#include <atomic>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace tobl {

std::string pair_name(PartyPair pair)
{
    switch (pair) {
    case PartyPair::BC: return "BC";
    case PartyPair::AC: return "AC";
    case PartyPair::AB: return "AB";
    }
    throw std::invalid_argument("bad party pair");
}

std::array<int, 2> merged_parties(PartyPair pair)
{
    switch (pair) {
    case PartyPair::BC: return {1, 2};
    case PartyPair::AC: return {0, 2};
    case PartyPair::AB: return {0, 1};
    }
    throw std::invalid_argument("bad party pair");
}

int spectator_party(PartyPair pair)
{
    switch (pair) {
    case PartyPair::BC: return 0;
    case PartyPair::AC: return 1;
    case PartyPair::AB: return 2;
    }
    throw std::invalid_argument("bad party pair");
}

std::uint32_t Wiring::encode() const
{
    std::uint32_t id = 0;
    for (int w = 0; w < 2; ++w) {
        const Stage& s = stage[static_cast<std::size_t>(w)];
        std::uint32_t code = static_cast<std::uint32_t>(s.order) |
                             (static_cast<std::uint32_t>(s.first_input) << 1) |
                             (static_cast<std::uint32_t>(s.second_input[0]) << 2) |
                             (static_cast<std::uint32_t>(s.second_input[1]) << 3);
        for (int k = 0; k < 4; ++k)
            code |= static_cast<std::uint32_t>(s.output[static_cast<std::size_t>(k)]) << (4 + k);
        id |= code << (8 * w);
    }
    return id;
}

Wiring Wiring::decode(PartyPair pair, std::uint32_t id)
{
    if (id >= kWiringsPerPair)
        throw std::invalid_argument("wiring id out of range");
    Wiring w{pair, {}};
    for (int s = 0; s < 2; ++s) {
        const std::uint32_t code = (id >> (8 * s)) & 0xff;
        Stage& st = w.stage[static_cast<std::size_t>(s)];
        st.order = static_cast<int>(code & 1);
        st.first_input = static_cast<int>((code >> 1) & 1);
        st.second_input = {static_cast<int>((code >> 2) & 1), static_cast<int>((code >> 3) & 1)};
        for (int k = 0; k < 4; ++k)
            st.output[static_cast<std::size_t>(k)] = static_cast<int>((code >> (4 + k)) & 1);
    }
    return w;
}

std::vector<Wiring> enumerate_wirings(PartyPair pair)
{
    std::vector<Wiring> out;
    out.reserve(kWiringsPerPair);
    for (std::uint32_t id = 0; id < kWiringsPerPair; ++id)
        out.push_back(Wiring::decode(pair, id));
    return out;
}

Behavior apply_wiring(const Behavior& b, const Wiring& w)
{
    if (b.parties() != 3)
        throw std::invalid_argument("apply_wiring: tripartite behaviors only");
    const auto pair = merged_parties(w.pair);
    const int spect = spectator_party(w.pair);

    RVector cells(16, Rational(0));
    for (int x = 0; x < 2; ++x) {
        for (int eff = 0; eff < 2; ++eff) {
            const Wiring::Stage& st = w.stage[static_cast<std::size_t>(eff)];
            const int first = st.order == 0 ? pair[0] : pair[1];
            const int second = st.order == 0 ? pair[1] : pair[0];
            for (int a = 0; a < 2; ++a) {
                for (int beta = 0; beta < 2; ++beta) {
                    for (int gamma = 0; gamma < 2; ++gamma) {
                        std::vector<int> inputs(3), outcomes(3);
                        inputs[static_cast<std::size_t>(spect)] = x;
                        inputs[static_cast<std::size_t>(first)] = st.first_input;
                        inputs[static_cast<std::size_t>(second)] =
                            st.second_input[static_cast<std::size_t>(beta)];
                        outcomes[static_cast<std::size_t>(spect)] = a;
                        outcomes[static_cast<std::size_t>(first)] = beta;
                        outcomes[static_cast<std::size_t>(second)] = gamma;
                        const int o = st.output[static_cast<std::size_t>(beta * 2 + gamma)];
                        const Rational& p = b.at(inputs, outcomes);
                        if (!p.is_zero())
                            cells[static_cast<std::size_t>((x * 2 + eff) * 4 + a * 2 + o)] += p;
                    }
                }
            }
        }
    }
    return Behavior(2, std::move(cells));
}

Rational chsh_value(const Behavior& bipartite)
{
    if (bipartite.parties() != 2)
        throw std::invalid_argument("chsh_value: bipartite behaviors only");
    Rational e[2][2];
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) {
            Rational acc(0);
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) {
                    const Rational& p = bipartite.cell(
                        static_cast<std::size_t>((x * 2 + y) * 4 + a * 2 + b));
                    if ((a ^ b) == 0)
                        acc += p;
                    else
                        acc -= p;
                }
            e[x][y] = acc;
        }
    Rational best(0);
    // One minus sign per functional; absolute value covers the other four.
    for (int neg = 0; neg < 4; ++neg) {
        Rational s(0);
        for (int x = 0; x < 2; ++x)
            for (int y = 0; y < 2; ++y)
                s += (x * 2 + y) == neg ? Rational(-e[x][y]) : e[x][y];
        if (s < 0)
            s = -s;
        if (s > best)
            best = s;
    }
    return best;
}

namespace {

std::string behavior_key(const Behavior& b)
{
    std::ostringstream s;
    for (const auto& c : b.cells())
        s << c << ";";
    return s.str();
}

struct WorkerResult {
    std::uint64_t nonlocal = 0;
    Rational max_chsh;
    std::uint32_t worst_wiring = 0;
    bool has_max = false;
    std::map<std::string, bool> verdicts;  // behavior key -> is local
};

WorkerResult audit_range(const Behavior& b, PartyPair pair, std::uint32_t begin,
                         std::uint32_t end, std::atomic<std::uint64_t>* progress,
                         std::uint32_t progress_interval)
{
    WorkerResult res;
    for (std::uint32_t id = begin; id < end; ++id) {
        const Behavior wired = apply_wiring(b, Wiring::decode(pair, id));
        const std::string key = behavior_key(wired);
        auto it = res.verdicts.find(key);
        bool local;
        Rational chsh = chsh_value(wired);
        if (it != res.verdicts.end()) {
            local = it->second;
        }
        else {
            local = chsh <= 2 && is_local(membership_local(wired));
            res.verdicts.emplace(key, local);
        }
        if (!local)
            ++res.nonlocal;
        if (!res.has_max || chsh > res.max_chsh) {
            res.max_chsh = chsh;
            res.worst_wiring = id;
            res.has_max = true;
        }
        if (progress_interval != 0) {
            const std::uint64_t done = progress->fetch_add(1) + 1;
            if (done % progress_interval == 0)
                std::cerr << "audit: " << done << " wirings done\n";
        }
    }
    return res;
}

}  // namespace

WiringAuditReport audit_wirings(const Behavior& b, const std::vector<PartyPair>& pairs,
                                unsigned threads, std::uint32_t progress_interval)
{
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    WiringAuditReport report;
    std::atomic<std::uint64_t> progress{0};

    for (PartyPair pair : pairs) {
        std::vector<WorkerResult> results(threads);
        std::vector<std::thread> workers;
        const std::uint32_t chunk = (kWiringsPerPair + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t) {
            const std::uint32_t begin = t * chunk;
            const std::uint32_t end = std::min(kWiringsPerPair, begin + chunk);
            if (begin >= end)
                continue;
            workers.emplace_back([&, t, begin, end] {
                results[t] = audit_range(b, pair, begin, end, &progress, progress_interval);
            });
        }
        for (auto& w : workers)
            w.join();

        PairAuditSummary summary;
        summary.pair = pair;
        summary.total = kWiringsPerPair;
        std::map<std::string, bool> merged;
        bool has_max = false;
        for (const auto& r : results) {
            summary.nonlocal += r.nonlocal;
            merged.insert(r.verdicts.begin(), r.verdicts.end());
            if (r.has_max &&
                (!has_max || r.max_chsh > summary.max_chsh ||
                 (r.max_chsh == summary.max_chsh && r.worst_wiring < summary.worst_wiring))) {
                summary.max_chsh = r.max_chsh;
                summary.worst_wiring = r.worst_wiring;
                has_max = true;
            }
        }
        summary.distinct_behaviors = merged.size();

        report.total += summary.total;
        report.nonlocal += summary.nonlocal;
        if (report.pairs.empty() || summary.max_chsh > report.max_chsh)
            report.max_chsh = summary.max_chsh;
        report.pairs.push_back(std::move(summary));
    }
    return report;
}

}  // namespace tobl
