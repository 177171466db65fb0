#include "tobl/behavior.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace tobl {

namespace {

const char* input_letters(int parties) { return parties == 2 ? "xy" : "xyz"; }
const char* outcome_letters(int parties) { return parties == 2 ? "ab" : "abc"; }

std::string bits_string(int parties, std::size_t value)
{
    std::string s(static_cast<std::size_t>(parties), '0');
    for (int p = 0; p < parties; ++p)
        if (value & (std::size_t{1} << (parties - 1 - p)))
            s[static_cast<std::size_t>(p)] = '1';
    return s;
}

std::size_t parse_bits(const std::string& s, int parties)
{
    if (s.size() != static_cast<std::size_t>(parties))
        throw std::invalid_argument("bad bit string '" + s + "'");
    std::size_t v = 0;
    for (char c : s) {
        if (c != '0' && c != '1')
            throw std::invalid_argument("bad bit string '" + s + "'");
        v = v * 2 + static_cast<std::size_t>(c - '0');
    }
    return v;
}

}  // namespace

Behavior::Behavior(int parties, RVector cells)
    : parties_(parties), cells_(std::move(cells))
{
    if (parties_ != 2 && parties_ != 3)
        throw std::invalid_argument("behavior must have 2 or 3 parties");
    const std::size_t expected = std::size_t{1} << (2 * parties_);
    if (cells_.size() != expected)
        throw std::invalid_argument("behavior cell count must be " + std::to_string(expected));
}

std::size_t Behavior::pack_bits(const std::vector<int>& bits)
{
    std::size_t v = 0;
    for (int b : bits)
        v = v * 2 + static_cast<std::size_t>(b & 1);
    return v;
}

std::size_t Behavior::index_of(const std::vector<int>& inputs, const std::vector<int>& outcomes) const
{
    if (inputs.size() != static_cast<std::size_t>(parties_) ||
        outcomes.size() != static_cast<std::size_t>(parties_))
        throw std::invalid_argument("input/outcome tuple arity mismatch");
    return pack_bits(inputs) * num_input_tuples() + pack_bits(outcomes);
}

const Rational& Behavior::at(const std::vector<int>& inputs, const std::vector<int>& outcomes) const
{
    return cells_[index_of(inputs, outcomes)];
}

RVector marginal(const Behavior& b, const std::vector<int>& keep, const std::vector<int>& inputs)
{
    const int p = b.parties();
    if (keep.empty())
        throw std::invalid_argument("kept party subset must be nonempty");
    if (inputs.size() != static_cast<std::size_t>(p))
        throw std::invalid_argument("inputs must be a full tuple");
    RVector out(std::size_t{1} << keep.size(), Rational(0));
    const std::size_t row = Behavior::pack_bits(inputs) << p;
    for (std::size_t o = 0; o < (std::size_t{1} << p); ++o) {
        std::size_t k = 0;
        for (int party : keep)
            k = k * 2 + ((o >> (p - 1 - party)) & 1);
        out[k] += b.cell(row + o);
    }
    return out;
}

ValidationReport validate(const Behavior& b)
{
    ValidationReport rep;
    const int p = b.parties();
    const std::size_t width = std::size_t{1} << p;

    for (std::size_t in = 0; in < width; ++in) {
        Rational sum(0);
        for (std::size_t o = 0; o < width; ++o) {
            const Rational& v = b.cell(in * width + o);
            if (v < 0) {
                rep.nonnegative = false;
                rep.violations.push_back({"nonneg[" + input_label(p, in) + "," +
                                              outcome_label(p, o) + "]",
                                          v, Rational(0)});
            }
            sum += v;
        }
        if (sum != 1) {
            rep.normalized = false;
            rep.violations.push_back({"norm[" + input_label(p, in) + "]", sum, Rational(1)});
        }
    }

    // Marginal consistency: for every nonempty proper subset of parties, the
    // subset's marginal may not depend on the dropped parties' inputs.
    for (std::size_t mask = 1; mask + 1 < width; ++mask) {
        std::vector<int> keep;
        for (int party = 0; party < p; ++party)
            if (mask & (std::size_t{1} << (p - 1 - party)))
                keep.push_back(party);
        for (std::size_t kin = 0; kin < (std::size_t{1} << keep.size()); ++kin) {
            RVector reference;
            std::size_t ref_inputs = 0;
            for (std::size_t in = 0; in < width; ++in) {
                std::size_t projected = 0;
                for (std::size_t t = 0; t < keep.size(); ++t)
                    projected = projected * 2 + ((in >> (p - 1 - keep[t])) & 1);
                if (projected != kin)
                    continue;
                std::vector<int> inputs(static_cast<std::size_t>(p));
                for (int party = 0; party < p; ++party)
                    inputs[static_cast<std::size_t>(party)] =
                        static_cast<int>((in >> (p - 1 - party)) & 1);
                RVector m = marginal(b, keep, inputs);
                if (reference.empty()) {
                    reference = std::move(m);
                    ref_inputs = in;
                    continue;
                }
                for (std::size_t k = 0; k < m.size(); ++k) {
                    if (m[k] != reference[k]) {
                        rep.no_signaling = false;
                        std::string who;
                        for (int party : keep)
                            who += static_cast<char>('A' + party);
                        rep.violations.push_back(
                            {"ns[" + who + ":" + input_label(p, in) + " vs " +
                                 input_label(p, ref_inputs) + " outcome " +
                                 std::to_string(k) + "]",
                             m[k], reference[k]});
                    }
                }
            }
        }
    }
    return rep;
}

std::string input_label(int parties, std::size_t input_index)
{
    return std::string(input_letters(parties)) + "=" + bits_string(parties, input_index);
}

std::string outcome_label(int parties, std::size_t outcome_index)
{
    return std::string(outcome_letters(parties)) + "=" + bits_string(parties, outcome_index);
}

namespace {

Behavior behavior_from_json(std::istream& in)
{
    nlohmann::json j;
    try {
        in >> j;
    }
    catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("behavior JSON parse error: ") + e.what());
    }
    if (!j.contains("parties") || !j.contains("cells"))
        throw std::invalid_argument("behavior JSON needs 'parties' and 'cells'");
    const int p = j.at("parties").get<int>();
    if (p != 2 && p != 3)
        throw std::invalid_argument("behavior JSON: parties must be 2 or 3");
    const std::size_t width = std::size_t{1} << p;
    RVector cells(width * width, Rational(0));
    std::vector<bool> seen(width * width, false);
    for (const auto& [ikey, row] : j.at("cells").items()) {
        const std::string iprefix = std::string(input_letters(p)) + "=";
        if (ikey.rfind(iprefix, 0) != 0)
            throw std::invalid_argument("behavior JSON: bad input key '" + ikey + "'");
        const std::size_t in_idx = parse_bits(ikey.substr(iprefix.size()), p);
        for (const auto& [okey, val] : row.items()) {
            const std::string oprefix = std::string(outcome_letters(p)) + "=";
            if (okey.rfind(oprefix, 0) != 0)
                throw std::invalid_argument("behavior JSON: bad outcome key '" + okey + "'");
            const std::size_t o_idx = parse_bits(okey.substr(oprefix.size()), p);
            cells[in_idx * width + o_idx] = parse_rational(val.get<std::string>());
            seen[in_idx * width + o_idx] = true;
        }
    }
    for (std::size_t i = 0; i < seen.size(); ++i)
        if (!seen[i])
            throw std::invalid_argument("behavior JSON: missing cell " +
                                        input_label(p, i / width) + " " +
                                        outcome_label(p, i % width));
    return Behavior(p, std::move(cells));
}

void behavior_to_json(const Behavior& b, std::ostream& out)
{
    const int p = b.parties();
    const std::size_t width = b.num_input_tuples();
    nlohmann::json cells;  // std::map-backed: keys come out sorted
    for (std::size_t in = 0; in < width; ++in) {
        nlohmann::json row;
        for (std::size_t o = 0; o < width; ++o)
            row[outcome_label(p, o)] = to_string(b.cell(in * width + o));
        cells[input_label(p, in)] = std::move(row);
    }
    nlohmann::json j;
    j["parties"] = p;
    j["cells"] = std::move(cells);
    out << j.dump(2) << "\n";
}

std::vector<std::string> split_csv_line(const std::string& line)
{
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string f;
    while (std::getline(ss, f, ',')) {
        while (!f.empty() && (f.front() == ' ' || f.front() == '\t'))
            f.erase(f.begin());
        while (!f.empty() && (f.back() == ' ' || f.back() == '\r' || f.back() == '\t'))
            f.pop_back();
        fields.push_back(f);
    }
    return fields;
}

Behavior behavior_from_csv(std::istream& in)
{
    std::string line;
    if (!std::getline(in, line))
        throw std::invalid_argument("behavior CSV: empty input");
    auto header = split_csv_line(line);
    if (header.size() != 5 && header.size() != 9)
        throw std::invalid_argument("behavior CSV line 1: expected 4 or 8 outcome columns");
    const int p = header.size() == 5 ? 2 : 3;
    const std::size_t width = std::size_t{1} << p;
    RVector cells(width * width);
    std::size_t rows_read = 0;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line == "\r")
            continue;
        auto fields = split_csv_line(line);
        if (fields.size() != width + 1)
            throw std::invalid_argument("behavior CSV line " + std::to_string(lineno) +
                                        ": expected " + std::to_string(width + 1) + " fields");
        const std::size_t in_idx = parse_bits(fields[0], p);
        for (std::size_t o = 0; o < width; ++o) {
            try {
                cells[in_idx * width + o] = parse_rational(fields[o + 1]);
            }
            catch (const std::invalid_argument& e) {
                throw std::invalid_argument("behavior CSV line " + std::to_string(lineno) +
                                            " column " + std::to_string(o + 2) + ": " + e.what());
            }
        }
        ++rows_read;
    }
    if (rows_read != width)
        throw std::invalid_argument("behavior CSV: expected " + std::to_string(width) + " data rows");
    return Behavior(p, std::move(cells));
}

void behavior_to_csv(const Behavior& b, std::ostream& out)
{
    const int p = b.parties();
    const std::size_t width = b.num_input_tuples();
    out << input_letters(p);
    for (std::size_t o = 0; o < width; ++o)
        out << "," << bits_string(p, o);
    out << "\n";
    for (std::size_t in = 0; in < width; ++in) {
        out << bits_string(p, in);
        for (std::size_t o = 0; o < width; ++o)
            out << "," << to_string(b.cell(in * width + o));
        out << "\n";
    }
}

}  // namespace

Behavior read_behavior(std::istream& in, BehaviorFormat format)
{
    return format == BehaviorFormat::Json ? behavior_from_json(in) : behavior_from_csv(in);
}

void write_behavior(const Behavior& b, std::ostream& out, BehaviorFormat format)
{
    if (format == BehaviorFormat::Json)
        behavior_to_json(b, out);
    else
        behavior_to_csv(b, out);
}

Behavior read_behavior_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open behavior file '" + path + "'");
    const bool csv = path.size() >= 4 && path.substr(path.size() - 4) == ".csv";
    return read_behavior(in, csv ? BehaviorFormat::Csv : BehaviorFormat::Json);
}

std::string format_behavior(const Behavior& b)
{
    const int p = b.parties();
    const std::size_t width = b.num_input_tuples();
    std::ostringstream out;
    out << input_letters(p) << " \\ " << outcome_letters(p);
    for (std::size_t o = 0; o < width; ++o)
        out << "\t" << bits_string(p, o);
    out << "\n";
    for (std::size_t in = 0; in < width; ++in) {
        out << bits_string(p, in);
        for (std::size_t o = 0; o < width; ++o)
            out << "\t" << to_string(b.cell(in * width + o));
        out << "\n";
    }
    return out.str();
}

}  // namespace tobl
