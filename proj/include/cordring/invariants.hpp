#pragma once

#include "braid.hpp"
#include "ncalg.hpp"
#include "pdcode.hpp"
#include "phirep.hpp"

#include <optional>
#include <vector>

namespace cordring {

/// A presentation of a quotient of A_n: the generator grid size and a
/// deterministic list of relators. Relators that are identically zero are
/// dropped.
struct Presentation {
    int n = 0;
    std::vector<NcPoly> relators;

    void add(NcPoly r) {
        if (!r.is_zero()) relators.push_back(std::move(r));
    }
};

/// HC_0 of a braid conjugacy class: relators a_{ij} - phi_w(a_{ij}) over all
/// i != j in (i, j)-lexicographic order.
inline Presentation hc0_braid(const BraidWord& w, std::optional<int> cap = std::nullopt) {
    const int n = w.strands();
    GeneratorImageTable t = phi(w, cap);
    Presentation p;
    p.n = n;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j) p.add(NcPoly::generator(i, j, n) - t.image(i, j));
    return p;
}

/// HC_0 of the knot closure of w: relators are the entries of A - Phi^L A
/// followed by those of A - A Phi^R, row-major.
inline Presentation hc0_closure(const BraidWord& w, std::optional<int> cap = std::nullopt) {
    const int n = w.strands();
    if (!w.permutation().is_full_cycle()) throw NotAKnot("braid closure is a link, not a knot");
    auto [left, right] = detail::phi_matrices(phi_ext(w, cap), n);
    NcMatrix a = base_matrix(n);
    NcMatrix la = left * a;
    NcMatrix ar = a * right;
    Presentation p;
    p.n = n;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) p.add(a.at(i, j) - la.at(i, j));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) p.add(a.at(i, j) - ar.at(i, j));
    return p;
}

/// Generators of ker(eta) for eta: A_{2n} -> A_n, eta(a_{ij}) =
/// a_{ceil(i/2), ceil(j/2)}. For each end pair p the elements 2 + a_{2p-1,2p}
/// and 2 + a_{2p,2p-1}; for each off-diagonal ceiling class the differences
/// against the class's outermost representative.
inline std::vector<NcPoly> plat_kernel_generators(int n2) {
    if (n2 % 2 != 0) throw OddStrands("plat kernel needs an even strand count");
    const int n = n2 / 2;
    std::vector<NcPoly> out;
    for (int p = 1; p <= n; ++p) {
        out.push_back(NcPoly::constant(2) + NcPoly::generator(2 * p - 1, 2 * p, n2));
        out.push_back(NcPoly::constant(2) + NcPoly::generator(2 * p, 2 * p - 1, n2));
    }
    for (int ci = 1; ci <= n; ++ci) {
        for (int cj = 1; cj <= n; ++cj) {
            if (ci == cj) continue;
            int ri = (ci < cj) ? 2 * ci - 1 : 2 * ci;
            int rj = (cj < ci) ? 2 * cj - 1 : 2 * cj;
            NcPoly rep = NcPoly::generator(ri, rj, n2);
            for (int i : {2 * ci - 1, 2 * ci})
                for (int j : {2 * cj - 1, 2 * cj})
                    if (i != ri || j != rj) out.push_back(rep - NcPoly::generator(i, j, n2));
        }
    }
    return out;
}

/// eta applied to a polynomial over A_{2n}: indices are halved (rounded up)
/// and diagonal images collapse to -2.
inline NcPoly eta(const NcPoly& p, int n2) {
    const int n = n2 / 2;
    NcPoly out;
    for (const auto& [mono, c] : p.terms()) {
        NcPoly prod = NcPoly::constant(c);
        for (const Gen& g : mono)
            prod *= NcPoly::generator((g.i + 1) / 2, (g.j + 1) / 2, n);
        out += prod;
    }
    return out;
}

/// HC_0 of the plat closure of w in B_{2n}, presented over A_n with relators
/// eta(phi_w(g)) for g running over the kernel generators of eta.
inline Presentation hc0_plat(const BraidWord& w, std::optional<int> cap = std::nullopt) {
    const int n2 = w.strands();
    if (n2 % 2 != 0) throw OddStrands("plat closure needs an even strand count");
    if (!plat_is_knot(w)) throw NotAKnot("plat closure has more than one component");
    GeneratorImageTable t = phi(w, cap);
    Presentation p;
    p.n = n2 / 2;
    for (const NcPoly& g : plat_kernel_generators(n2))
        p.add(eta(apply_endomorphism(t, g, cap), n2));
    return p;
}

/// HC_0 from a knot diagram: generators indexed by diagram components; for
/// every crossing (i; j, k) and every l the relators
/// a_{lj} + a_{lk} + a_{li} a_{ij} and a_{jl} + a_{kl} + a_{ji} a_{il},
/// diagonal symbols replaced by -2.
inline Presentation hc0_diagram(const PdCode& pd) {
    DiagramComponents comps = components_from_pd(pd);
    const int n = comps.count;
    Presentation p;
    p.n = n;
    auto a = [n](int i, int j) { return NcPoly::generator(i, j, n); };
    for (const auto& x : comps.per_crossing) {
        const int i = x.over, j = x.under_in, k = x.under_out;
        for (int l = 1; l <= n; ++l) {
            p.add(a(l, j) + a(l, k) + a(l, i) * a(i, j));
            p.add(a(j, l) + a(k, l) + a(j, i) * a(i, l));
        }
    }
    return p;
}

} // namespace cordring
