#include "tobl/reference_tables.hpp"

namespace tobl {

namespace {

Behavior make_reference_behavior()
{
    // Rows input tuples xyz, columns outcome tuples abc, entries are
    // quarters.
    static constexpr int quarters[8][8] = {
        {1, 0, 0, 1, 1, 0, 0, 1},
        {1, 0, 0, 1, 0, 1, 1, 0},
        {1, 1, 0, 0, 0, 0, 1, 1},
        {1, 1, 0, 0, 0, 0, 1, 1},
        {1, 0, 0, 1, 1, 0, 0, 1},
        {0, 1, 0, 1, 1, 0, 1, 0},
        {1, 0, 0, 1, 0, 1, 1, 0},
        {0, 1, 0, 1, 1, 0, 1, 0},
    };
    RVector cells(64);
    for (std::size_t in = 0; in < 8; ++in)
        for (std::size_t o = 0; o < 8; ++o)
            cells[in * 8 + o] = Rational(quarters[in][o], 4);
    return Behavior(3, std::move(cells));
}

struct TermBits {
    std::array<int, 2> lone;
    std::array<int, 2> fwd_first;
    std::array<int, 4> fwd_second;  // index = first_input*2 + own_input
    std::array<int, 2> bwd_first;
    std::array<int, 4> bwd_second;
};

ToblDecomposition make_reference_decomposition()
{
    // Four equal-weight deterministic terms per bipartition; the lone
    // response is shared by the two signaling directions of each term.
    static const TermBits a_bc[4] = {
        {{0, 0}, {1, 0}, {1, 1, 0, 1}, {0, 1}, {0, 0, 1, 0}},
        {{1, 0}, {0, 1}, {0, 1, 1, 1}, {1, 1}, {1, 1, 0, 1}},
        {{0, 1}, {0, 0}, {0, 0, 1, 0}, {1, 0}, {1, 0, 0, 0}},
        {{1, 1}, {1, 1}, {1, 0, 0, 0}, {0, 0}, {0, 1, 1, 1}},
    };
    static const TermBits b_ac[4] = {
        {{0, 0}, {0, 0}, {0, 0, 0, 1}, {0, 0}, {0, 0, 0, 1}},
        {{1, 0}, {0, 1}, {1, 1, 1, 0}, {1, 1}, {0, 1, 0, 0}},
        {{0, 1}, {1, 1}, {0, 1, 0, 0}, {0, 1}, {1, 1, 1, 0}},
        {{1, 1}, {1, 0}, {1, 0, 1, 1}, {1, 0}, {1, 0, 1, 1}},
    };
    static const TermBits c_ab[4] = {
        {{0, 0}, {0, 1}, {0, 0, 0, 1}, {0, 1}, {0, 1, 1, 1}},
        {{1, 0}, {1, 1}, {1, 1, 1, 0}, {1, 0}, {1, 1, 0, 1}},
        {{0, 1}, {1, 0}, {0, 1, 0, 0}, {0, 0}, {1, 0, 0, 0}},
        {{1, 1}, {0, 0}, {1, 0, 1, 1}, {1, 1}, {0, 0, 1, 0}},
    };
    const TermBits* tables[3] = {a_bc, b_ac, c_ab};
    ToblDecomposition d;
    for (std::size_t part = 0; part < 3; ++part) {
        for (std::size_t i = 0; i < 4; ++i) {
            const TermBits& t = tables[part][i];
            d.parts[part].push_back(ToblTerm{Rational(1, 4),
                                             t.lone,
                                             {t.fwd_first, t.fwd_second},
                                             {t.bwd_first, t.bwd_second}});
        }
    }
    return d;
}

}  // namespace

const Behavior& reference_behavior()
{
    static const Behavior b = make_reference_behavior();
    return b;
}

const ToblDecomposition& reference_decomposition()
{
    static const ToblDecomposition d = make_reference_decomposition();
    return d;
}

}  // namespace tobl
