#include "tobl/hardy.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace tobl {

HardySpec::HardySpec(int parties, std::vector<int> unprimed_inputs,
                     std::vector<int> success_bits, std::vector<int> zero_bits)
    : parties_(parties),
      unprimed_(std::move(unprimed_inputs)),
      success_bits_(std::move(success_bits)),
      zero_bits_(std::move(zero_bits))
{
    const auto np = static_cast<std::size_t>(parties_);
    if (parties_ != 2 && parties_ != 3)
        throw std::invalid_argument("Hardy spec: parties must be 2 or 3");
    if (unprimed_.size() != np || success_bits_.size() != np || zero_bits_.size() != np)
        throw std::invalid_argument("Hardy spec: per-party vectors must match party count");
    for (std::size_t p = 0; p < np; ++p)
        if ((unprimed_[p] & ~1) || (success_bits_[p] & ~1) || (zero_bits_[p] & ~1))
            throw std::invalid_argument("Hardy spec: all entries must be bits");

    auto primed = unprimed_;
    for (auto& v : primed)
        v ^= 1;

    success_ = {unprimed_, success_bits_};
    // One zero event per party: that party's input primed, its outcome from
    // zero_bits, the rest as in the success event. Plus the all-primed,
    // all-flipped event closing the contradiction.
    for (std::size_t p = 0; p < np; ++p) {
        Event e = success_;
        e.inputs[p] = primed[p];
        e.outcomes[p] = zero_bits_[p];
        zeros_.push_back(std::move(e));
    }
    Event last{primed, zero_bits_};
    for (auto& v : last.outcomes)
        v ^= 1;
    zeros_.push_back(std::move(last));

    for (const auto& z : zeros_)
        if (z == success_)
            throw std::invalid_argument("Hardy spec: success event coincides with a zero event");
}

std::size_t HardySpec::success_cell(const Behavior& like) const
{
    return like.index_of(success_.inputs, success_.outcomes);
}

std::vector<std::size_t> HardySpec::zero_cells(const Behavior& like) const
{
    std::vector<std::size_t> cells;
    cells.reserve(zeros_.size());
    for (const auto& z : zeros_)
        cells.push_back(like.index_of(z.inputs, z.outcomes));
    return cells;
}

std::string HardySpec::describe() const
{
    auto event = [&](const Event& e) {
        std::ostringstream s;
        s << "P(";
        for (int v : e.outcomes)
            s << v;
        s << "|";
        for (int v : e.inputs)
            s << v;
        s << ")";
        return s.str();
    };
    std::ostringstream s;
    s << event(success_) << " > 0";
    for (const auto& z : zeros_)
        s << ", " << event(z) << " = 0";
    return s.str();
}

HardySpec HardySpec::canonical(int parties)
{
    if (parties == 3)
        return HardySpec(3, {0, 0, 1}, {1, 1, 0}, {0, 0, 0});
    return HardySpec(2, {0, 0}, {1, 1}, {0, 0});
}

HardyReport hardy_report(const Behavior& b, const HardySpec& spec)
{
    if (b.parties() != spec.parties())
        throw std::invalid_argument("hardy_report: party count mismatch");
    HardyReport rep;
    rep.q = b.cell(spec.success_cell(b));
    for (std::size_t c : spec.zero_cells(b)) {
        const Rational& v = b.cell(c);
        if (!v.is_zero()) {
            rep.zero_violations.push_back(
                {"zero[" + input_label(b.parties(), c >> b.parties()) + "," +
                     outcome_label(b.parties(), c & (b.num_input_tuples() - 1)) + "]",
                 v, Rational(0)});
        }
    }
    rep.witness = rep.zero_violations.empty() && rep.q > 0;
    return rep;
}

std::vector<HardySpec> hardy_family(int parties)
{
    if (parties != 2 && parties != 3)
        throw std::invalid_argument("hardy_family: parties must be 2 or 3");
    const auto np = static_cast<std::size_t>(parties);
    std::vector<HardySpec> family;
    auto unpack = [np](unsigned bits) {
        std::vector<int> v(np);
        for (std::size_t p = 0; p < np; ++p)
            v[p] = static_cast<int>((bits >> (np - 1 - p)) & 1);
        return v;
    };
    const unsigned top = 1u << np;
    for (unsigned u = 0; u < top; ++u)
        for (unsigned s = 0; s < top; ++s)
            for (unsigned z = 0; z < top; ++z)
                family.emplace_back(parties, unpack(u), unpack(s), unpack(z));
    return family;
}

HardySpec read_hardy_spec_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open spec file '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    }
    catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("spec JSON parse error: ") + e.what());
    }
    return HardySpec(j.at("parties").get<int>(),
                     j.at("unprimed_inputs").get<std::vector<int>>(),
                     j.at("success_outcomes").get<std::vector<int>>(),
                     j.at("zero_outcomes").get<std::vector<int>>());
}

}  // namespace tobl
