#pragma once

#include "intmatrix.hpp"
#include "invariants.hpp"
#include "pdcode.hpp"

#include <string>
#include <vector>

namespace cordring {

/// Finitely presented abelian group: relation matrix rows are relations in
/// the generators.
struct AbelianGroupPresentation {
    int generators = 0;
    IntMatrix relations; // relations x generators

    AbelianGroupPresentation() : relations(0, 0) {}
    AbelianGroupPresentation(int gens, IntMatrix rel) : generators(gens), relations(std::move(rel)) {}
};

/// The linearized abelian invariant from a knot diagram: generators
/// x_{ij} = x_{ji} for components i < j (x_{ii} = 0), relations given by the
/// degree-1 part of the diagram relators under the substitution
/// a_{ij} = -2 + x_{ij}. The constant part of every substituted relator must
/// vanish identically; a nonzero constant signals a convention bug upstream.
inline AbelianGroupPresentation lin_presentation(const PdCode& pd) {
    Presentation pres = hc0_diagram(pd);
    const int n = pres.n;
    // generator indexing: pairs (i < j) in lex order
    auto var_index = [n](int i, int j) {
        if (i > j) std::swap(i, j);
        return (i - 1) * n - i * (i - 1) / 2 + (j - i) - 1;
    };
    const int gens = n * (n - 1) / 2;

    std::vector<std::vector<BigInt>> rows;
    for (const NcPoly& r : pres.relators) {
        BigInt constant = 0;
        std::vector<BigInt> row(static_cast<std::size_t>(gens), BigInt(0));
        for (const auto& [mono, c] : r.terms()) {
            // monomial f1...fd at a = -2 + x: constant c*(-2)^d, linear part
            // c * (-2)^{d-1} * sum_pos x_{f_pos}
            BigInt pow = 1;
            for (std::size_t d = 0; d < mono.size(); ++d) pow *= -2;
            constant += c * pow;
            BigInt lin = c;
            for (std::size_t d = 0; d + 1 < mono.size(); ++d) lin *= -2;
            for (const Gen& g : mono) {
                if (g.i == g.j) continue; // cannot occur; factors are off-diagonal
                row[static_cast<std::size_t>(var_index(g.i, g.j))] += lin;
            }
        }
        if (constant != 0)
            throw InternalError("nonvanishing constant part in linearized relation: " + to_string(constant));
        rows.push_back(std::move(row));
    }

    IntMatrix rel(static_cast<int>(rows.size()), gens);
    for (int i = 1; i <= rel.rows(); ++i)
        for (int j = 1; j <= rel.cols(); ++j) rel.at(i, j) = rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
    return AbelianGroupPresentation(gens, std::move(rel));
}

/// Number of invariant factors different from 1 plus the free rank.
inline int min_generators(const AbelianGroupPresentation& g) {
    if (g.generators == 0) return 0;
    if (g.relations.rows() == 0) return g.generators;
    SmithForm snf = smith_normal_form(g.relations);
    int nontrivial_torsion = 0;
    for (const BigInt& d : snf.diagonal)
        if (d != 0 && d != 1) ++nontrivial_torsion;
    int free_rank = g.generators - snf.rank;
    return free_rank + nontrivial_torsion;
}

/// "Z^r (+) Z/d1 (+) ..." style description of the presented group.
inline std::string group_string(const AbelianGroupPresentation& g) {
    int free_rank = g.generators;
    std::vector<BigInt> torsion;
    if (g.relations.rows() > 0 && g.generators > 0) {
        SmithForm snf = smith_normal_form(g.relations);
        free_rank = g.generators - snf.rank;
        for (const BigInt& d : snf.diagonal)
            if (d != 0 && d != 1) torsion.push_back(d);
    }
    std::string out;
    auto append = [&out](const std::string& part) {
        if (!out.empty()) out += " \xE2\x8A\x95 "; // circled plus
        out += part;
    };
    if (free_rank == 1)
        append("Z");
    else if (free_rank > 1)
        append("Z^" + std::to_string(free_rank));
    for (const BigInt& d : torsion) append("Z/" + to_string(d));
    if (out.empty()) out = "trivial";
    return out;
}

} // namespace cordring
