#pragma once

#include "abelian.hpp"
#include "unipoly.hpp"

#include <string>
#include <vector>

namespace cordring {

/// Which generator the printed variable x stands for. The plat, closure and
/// two-bridge routes follow the x := -a convention of the q-polynomial
/// substitution (so the trefoil plat prints Z[x]/(x^2 - x - 2)); the diagram
/// and braid routes use x := a directly (the trefoil diagram prints
/// Z[x]/(x^2 + x - 2)). Ring comparisons are insensitive to the choice.
enum class XConvention { plain, negated };

inline std::string ring_string_univariate(const UnivariateForm& uf, XConvention conv) {
    if (!uf.var.has_value()) {
        if (uf.poly.is_zero()) return "Z";
        if (uf.poly == UniPoly::constant(1)) return "0";
        return "Z/" + to_string(big_abs(uf.poly.coeff(0)));
    }
    if (uf.poly.is_zero()) return "Z[x]";
    UniPoly g = uf.poly;
    if (conv == XConvention::negated) {
        g = g.negated_arg();
        if (g.leading() < 0) g = -g;
    }
    return "Z[x]/(" + g.render() + ")";
}

/// Canonical quotient-ring text for an abelianized presentation: the
/// univariate form when it exists, otherwise the reduced grevlex basis over
/// the named variables.
inline std::string canonical_ring_string(const std::vector<CommPoly>& gens, const AbelianVars& vars,
                                         XConvention conv) {
    UnivariateForm uf = univariate_form(gens, vars.count());
    if (uf.ok) return ring_string_univariate(uf, conv);
    GroebnerBasisZ gb = groebner(gens, MonOrder::grevlex);
    std::vector<std::string> names = vars.names();
    std::string head = "Z[";
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) head += ",";
        head += names[i];
    }
    head += "]/(";
    std::string body;
    for (std::size_t i = 0; i < gb.polys.size(); ++i) {
        if (i) body += ", ";
        body += gb.polys[i].render(names);
    }
    return head + body + ")";
}

} // namespace cordring
