#ifndef WHW_GROUPOID_ACTION_HPP
#define WHW_GROUPOID_ACTION_HPP

#include "whw/partial_actions.hpp"

namespace whw {

// ({C_g}, {θ_g}, {P_g}) indexed by the groupoid elements. Every θ_g is an
// endomorphism of C vanishing off C_{g⁻¹}; C_g = image(P_g).
struct GroupoidPartialAction {
    FiniteGroupoid groupoid;
    CoalgebraData coalgebra;
    std::vector<LinMap> projections; // P_g
    std::vector<LinMap> isos;        // θ_g
};

bool operator==(const GroupoidPartialAction& a, const GroupoidPartialAction& b);

// Basis of C_g as pivot columns of P_g.
std::vector<Vector> subcoalgebra_basis(const GroupoidPartialAction& gpa, std::size_t g);

// Items of the groupoid partial action, the four compatibility equations, the
// coalgebra isomorphism C_{g⁻¹} -> C_g. Witnesses are groupoid elements.
Report validate_groupoid_partial_action(const GroupoidPartialAction& gpa);

// δ_g·c = θ_g(P_{g⁻¹}(c)). Throws NotDirectSum unless Σ_e P_e = id and
// P_eP_f = 0 for distinct identities.
ActionTensor to_kG_action(const GroupoidPartialAction& gpa);

// P_g(c) = ε(δ_{g⁻¹}·c₁)(δ_{r(g)}·c₂), θ_g = (δ_g·)∘P_{g⁻¹}. The action must be
// a left action of groupoid_algebra(G). Throws NotSymmetric (or
// InputNotPartialAction when PMC1–PMC3 already fail).
GroupoidPartialAction from_kG_action(const ActionTensor& act, const FiniteGroupoid& G);

// Every g acts as the identity on all of C (G must be a group).
GroupoidPartialAction trivial_group_action(const FiniteGroupoid& G, const CoalgebraData& C);

// C = ⊕_e C_e with one grouplike c_<e> per identity; θ_g: c_{d(g)} ↦ c_{r(g)}.
GroupoidPartialAction transport_action(const FiniteGroupoid& G, const Field& f);

// Each identity e carries a copy of a coalgebra D; θ_g moves the d(g) copy to
// the r(g) copy. Labels "<label>@<e>".
GroupoidPartialAction copies_action(const FiniteGroupoid& G, const CoalgebraData& D);

// The two-object groupoid {e, f, g, g⁻¹} on C_e = span{a, b}, C_f = span{c}
// (all grouplike) with C_{g⁻¹} = span{a}, C_g = span{c}: genuinely partial.
GroupoidPartialAction two_object_partial_action(const FiniteGroupoid& G, const Field& f);

} // namespace whw

#endif
