#include "tobl/strategies.hpp"

#include <stdexcept>

namespace tobl {

std::size_t LocalStrategy::encode() const
{
    std::size_t id = 0;
    for (int p = 0; p < parties; ++p)
        for (int i = 0; i < 2; ++i)
            id |= static_cast<std::size_t>(resp[static_cast<std::size_t>(p)][static_cast<std::size_t>(i)])
                  << (2 * p + i);
    return id;
}

LocalStrategy LocalStrategy::decode(int parties, std::size_t id)
{
    if (parties != 2 && parties != 3)
        throw std::invalid_argument("local strategy: parties must be 2 or 3");
    LocalStrategy s{parties, {}};
    for (int p = 0; p < parties; ++p)
        for (int i = 0; i < 2; ++i)
            s.resp[static_cast<std::size_t>(p)][static_cast<std::size_t>(i)] =
                static_cast<int>((id >> (2 * p + i)) & 1);
    return s;
}

Behavior LocalStrategy::behavior() const
{
    const std::size_t width = std::size_t{1} << parties;
    RVector cells(width * width, Rational(0));
    for (std::size_t in = 0; in < width; ++in) {
        std::size_t out = 0;
        for (int p = 0; p < parties; ++p) {
            const int input = static_cast<int>((in >> (parties - 1 - p)) & 1);
            out = out * 2 +
                  static_cast<std::size_t>(
                      resp[static_cast<std::size_t>(p)][static_cast<std::size_t>(input)]);
        }
        cells[in * width + out] = 1;
    }
    return Behavior(parties, std::move(cells));
}

std::vector<LocalStrategy> enumerate_local(int parties)
{
    if (parties != 2 && parties != 3)
        throw std::invalid_argument("enumerate_local: parties must be 2 or 3");
    const std::size_t count = std::size_t{1} << (2 * parties);
    std::vector<LocalStrategy> out;
    out.reserve(count);
    for (std::size_t id = 0; id < count; ++id)
        out.push_back(LocalStrategy::decode(parties, id));
    return out;
}

int lone_party(Bipartition bp)
{
    return static_cast<int>(bp);
}

std::array<int, 2> pair_parties(Bipartition bp)
{
    switch (bp) {
    case Bipartition::A_BC: return {1, 2};
    case Bipartition::B_AC: return {0, 2};
    case Bipartition::C_AB: return {0, 1};
    }
    throw std::invalid_argument("bad bipartition");
}

std::string bipartition_name(Bipartition bp)
{
    switch (bp) {
    case Bipartition::A_BC: return "A|BC";
    case Bipartition::B_AC: return "B|AC";
    case Bipartition::C_AB: return "C|AB";
    }
    throw std::invalid_argument("bad bipartition");
}

std::size_t TimeOrderedStrategy::encode() const
{
    std::size_t id = static_cast<std::size_t>(lone_resp[0] | (lone_resp[1] << 1));
    id |= static_cast<std::size_t>(first_resp[0] | (first_resp[1] << 1)) << 2;
    for (int k = 0; k < 4; ++k)
        id |= static_cast<std::size_t>(second_resp[static_cast<std::size_t>(k)]) << (4 + k);
    return id;
}

TimeOrderedStrategy TimeOrderedStrategy::decode(Bipartition bp, Direction dir, std::size_t id)
{
    if (id >= 256)
        throw std::invalid_argument("time-ordered strategy id out of range");
    TimeOrderedStrategy s{bp, dir, {}, {}, {}};
    s.lone_resp = {static_cast<int>(id & 1), static_cast<int>((id >> 1) & 1)};
    s.first_resp = {static_cast<int>((id >> 2) & 1), static_cast<int>((id >> 3) & 1)};
    for (int k = 0; k < 4; ++k)
        s.second_resp[static_cast<std::size_t>(k)] = static_cast<int>((id >> (4 + k)) & 1);
    return s;
}

Behavior TimeOrderedStrategy::behavior() const
{
    const auto pair = pair_parties(bipartition);
    const int lone = lone_party(bipartition);
    RVector cells(64, Rational(0));
    for (std::size_t in = 0; in < 8; ++in) {
        int inp[3];
        for (int p = 0; p < 3; ++p)
            inp[p] = static_cast<int>((in >> (2 - p)) & 1);
        int out[3];
        out[lone] = lone_resp[static_cast<std::size_t>(inp[lone])];
        const int i1 = inp[pair[0]];
        const int i2 = inp[pair[1]];
        if (direction == Direction::Forward) {
            out[pair[0]] = first_resp[static_cast<std::size_t>(i1)];
            out[pair[1]] = second_resp[static_cast<std::size_t>(i1 * 2 + i2)];
        }
        else {
            out[pair[1]] = first_resp[static_cast<std::size_t>(i2)];
            out[pair[0]] = second_resp[static_cast<std::size_t>(i2 * 2 + i1)];
        }
        const std::size_t o = static_cast<std::size_t>(out[0] * 4 + out[1] * 2 + out[2]);
        cells[in * 8 + o] = 1;
    }
    return Behavior(3, std::move(cells));
}

std::vector<TimeOrderedStrategy> enumerate_time_ordered(Bipartition bp, Direction dir)
{
    std::vector<TimeOrderedStrategy> out;
    out.reserve(256);
    for (std::size_t id = 0; id < 256; ++id)
        out.push_back(TimeOrderedStrategy::decode(bp, dir, id));
    return out;
}

}  // namespace tobl
