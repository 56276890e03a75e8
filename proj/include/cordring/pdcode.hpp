#pragma once

#include "braid.hpp"
#include "errors.hpp"

#include <array>
#include <cctype>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

namespace cordring {

/// Planar diagram code of a knot. Each crossing is a quadruple of arc labels
/// listed counterclockwise from the incoming under-arc; the under pair is
/// (a, c), the over pair (b, d). Arc labels run 1..2*crossings sequentially
/// along the knot, so at every crossing the outgoing arc of a strand is the
/// cyclic successor of the incoming one.
class PdCode {
public:
    using Crossing = std::array<int, 4>;

    explicit PdCode(std::vector<Crossing> crossings) : crossings_(std::move(crossings)) { validate(); }

    /// Text format "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]".
    static PdCode parse(std::string_view text);

    const std::vector<Crossing>& crossings() const { return crossings_; }
    int size() const { return static_cast<int>(crossings_.size()); }
    int arcs() const { return 2 * size(); }

    int next_arc(int a) const { return a % arcs() + 1; }

    std::string render() const {
        std::string out;
        for (const Crossing& c : crossings_) {
            if (!out.empty()) out += " ";
            out += "X[" + std::to_string(c[0]) + "," + std::to_string(c[1]) + "," + std::to_string(c[2]) +
                   "," + std::to_string(c[3]) + "]";
        }
        return out;
    }

private:
    void validate();

    std::vector<Crossing> crossings_;
};

/// Diagram components: segments of the knot between consecutive
/// undercrossings. Per crossing, i is the over component, j the incoming
/// under component, k the outgoing under component.
struct DiagramComponents {
    int count = 0;
    struct CrossingComponents {
        int over;      // i
        int under_in;  // j
        int under_out; // k
    };
    std::vector<CrossingComponents> per_crossing;
};

inline void PdCode::validate() {
    if (crossings_.empty()) throw ParseError("PD code has no crossings");
    const int m = arcs();
    std::vector<int> seen(static_cast<std::size_t>(m) + 1, 0);
    for (const Crossing& c : crossings_)
        for (int a : c) {
            if (a < 1 || a > m) throw ParseError("arc label " + std::to_string(a) + " out of range 1.." + std::to_string(m));
            ++seen[static_cast<std::size_t>(a)];
        }
    for (int a = 1; a <= m; ++a)
        if (seen[static_cast<std::size_t>(a)] != 2)
            throw ParseError("arc label " + std::to_string(a) + " must appear exactly twice");

    // Successor map along the oriented knot: under strand goes a -> c, the
    // over pair is oriented by sequential labeling. A code that cannot be
    // labeled sequentially along one circle describes a link.
    std::vector<int> succ(static_cast<std::size_t>(m) + 1, 0);
    auto set_succ = [&](int from, int to) {
        if (succ[static_cast<std::size_t>(from)] != 0)
            throw NotAKnot("PD code is not sequentially labeled along a single circle");
        succ[static_cast<std::size_t>(from)] = to;
    };
    for (const Crossing& c : crossings_) {
        if (next_arc(c[0]) != c[2])
            throw NotAKnot("under pair (" + std::to_string(c[0]) + "," + std::to_string(c[2]) +
                           ") is not sequentially labeled");
        set_succ(c[0], c[2]);
        if (next_arc(c[1]) == c[3])
            set_succ(c[1], c[3]);
        else if (next_arc(c[3]) == c[1])
            set_succ(c[3], c[1]);
        else
            throw NotAKnot("over pair (" + std::to_string(c[1]) + "," + std::to_string(c[3]) +
                           ") is not sequentially labeled");
    }
    // Single circle through all arcs, otherwise this is a link.
    int a = 1, steps = 0;
    do {
        a = succ[static_cast<std::size_t>(a)];
        ++steps;
    } while (a != 1 && steps <= m);
    if (steps != m) throw NotAKnot("PD code closes into more than one circle");
}

inline PdCode PdCode::parse(std::string_view text) {
    std::vector<PdCode::Crossing> crossings;
    std::size_t pos = 0;
    auto skip_spaces = [&]() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto skip_separators = [&]() {
        while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ','))
            ++pos;
    };
    skip_separators();
    while (pos < text.size()) {
        if (text[pos] != 'X' && text[pos] != 'x') throw ParseError("expected 'X[' in PD code");
        ++pos;
        if (pos >= text.size() || text[pos] != '[') throw ParseError("expected '[' after X");
        ++pos;
        PdCode::Crossing c{};
        for (int slot = 0; slot < 4; ++slot) {
            skip_spaces();
            std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos == start) throw ParseError("expected arc label in PD code");
            c[static_cast<std::size_t>(slot)] = std::stoi(std::string(text.substr(start, pos - start)));
            skip_spaces();
            if (slot < 3) {
                if (pos >= text.size() || text[pos] != ',') throw ParseError("expected ',' in PD crossing");
                ++pos;
            }
        }
        if (pos >= text.size() || text[pos] != ']') throw ParseError("expected ']' in PD crossing");
        ++pos;
        crossings.push_back(c);
        skip_separators();
    }
    return PdCode(std::move(crossings));
}

/// Merge arcs across over-strand passages; the classes are the diagram
/// components. Component indices are assigned by smallest member arc.
inline DiagramComponents components_from_pd(const PdCode& pd) {
    const int m = pd.arcs();
    std::vector<int> parent(static_cast<std::size_t>(m) + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    auto unite = [&](int a, int b) {
        a = find(a), b = find(b);
        if (a > b) std::swap(a, b);
        parent[static_cast<std::size_t>(b)] = a; // keep smallest label as root
    };
    for (const auto& c : pd.crossings()) unite(c[1], c[3]);

    std::vector<int> index(static_cast<std::size_t>(m) + 1, 0);
    DiagramComponents out;
    for (int a = 1; a <= m; ++a)
        if (find(a) == a) index[static_cast<std::size_t>(a)] = ++out.count;
    for (const auto& c : pd.crossings())
        out.per_crossing.push_back({index[static_cast<std::size_t>(find(c[1]))],
                                    index[static_cast<std::size_t>(find(c[0]))],
                                    index[static_cast<std::size_t>(find(c[2]))]});
    return out;
}

/// PD code of the closure of a braid word (tracing the closure and labeling
/// arcs sequentially). The closure must be a knot.
inline PdCode braid_to_pd(const BraidWord& w) {
    if (!w.permutation().is_full_cycle()) throw NotAKnot("braid closure is not a knot");
    const int len = static_cast<int>(w.length());
    if (len == 0) throw NotAKnot("closure of the empty braid has no crossings to encode");

    // Walk the closure once to label arcs. Positions (step, strand position)
    // with step = index into the word; the arc between consecutive crossings
    // on the same strand keeps one label.
    // For each crossing (letter t, generator k): the two strands entering at
    // positions k, k+1 swap. Record, per crossing, the four incident arc
    // labels and which strand is the under one (by crossing sign; the
    // relations downstream do not depend on the choice, but the PD encoding
    // fixes: positive letter = strand entering at position k goes under).
    struct Slot {
        int in_lo = 0, in_hi = 0, out_lo = 0, out_hi = 0; // arcs at positions k (lo) and k+1 (hi)
    };
    std::vector<Slot> slots(static_cast<std::size_t>(len));

    // next crossing at-or-after step touching position p, cyclically
    auto next_crossing = [&](int step, int pos, int& entering_side) -> int {
        for (int t = 0; t < len; ++t) {
            int s = (step + t) % len;
            int k = std::abs(w.letters()[static_cast<std::size_t>(s)]);
            if (k == pos || k + 1 == pos) {
                entering_side = (k == pos) ? 0 : 1;
                return s;
            }
        }
        return -1;
    };

    int arc = 0;
    // Start on strand position 1 just after step 0 region start; walk the knot.
    int pos = 1, step = 0;
    int side = 0;
    int first_crossing = next_crossing(0, 1, side);
    if (first_crossing < 0) throw NotAKnot("strand 1 never crosses; closure is a link");
    int cur_crossing = first_crossing, cur_side = side;
    const int total_arcs = 2 * len;
    for (int count = 0; count < total_arcs; ++count) {
        ++arc;
        // arc enters crossing cur_crossing on side cur_side
        Slot& sl = slots[static_cast<std::size_t>(cur_crossing)];
        (cur_side == 0 ? sl.in_lo : sl.in_hi) = arc;
        // leaving the crossing: strands swap sides
        int k = std::abs(w.letters()[static_cast<std::size_t>(cur_crossing)]);
        int out_side = 1 - cur_side;
        (out_side == 0 ? sl.out_lo : sl.out_hi) = arc + 1;
        pos = (out_side == 0) ? k : k + 1;
        step = cur_crossing + 1;
        if (step == len) {
            step = 0; // wrap through the closure arcs at the same position
        }
        cur_crossing = next_crossing(step, pos, cur_side);
    }
    // Close up: the last arc label total_arcs+1 equals arc 1.
    for (Slot& sl : slots) {
        if (sl.out_lo == total_arcs + 1) sl.out_lo = 1;
        if (sl.out_hi == total_arcs + 1) sl.out_hi = 1;
    }

    std::vector<PdCode::Crossing> crossings;
    for (int t = 0; t < len; ++t) {
        const Slot& sl = slots[static_cast<std::size_t>(t)];
        bool positive = w.letters()[static_cast<std::size_t>(t)] > 0;
        int under_in = positive ? sl.in_lo : sl.in_hi;
        int under_out = positive ? sl.out_hi : sl.out_lo;
        int over_in = positive ? sl.in_hi : sl.in_lo;
        int over_out = positive ? sl.out_lo : sl.out_hi;
        crossings.push_back({under_in, over_in, under_out, over_out});
    }
    return PdCode(std::move(crossings));
}

} // namespace cordring
