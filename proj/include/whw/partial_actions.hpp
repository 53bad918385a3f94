#ifndef WHW_PARTIAL_ACTIONS_HPP
#define WHW_PARTIAL_ACTIONS_HPP

#include "whw/groupoid.hpp"

#include <memory>
#include <variant>

namespace whw {

enum class Side { left, right };

// An action of a weak Hopf algebra on a coalgebra or an algebra.
// left:  map is (H, X, X), map.at(i,j,k) = coefficient of x_k in h_i·x_j
// right: map is (X, H, X), map.at(j,i,k) = coefficient of x_k in x_j↼h_i
struct ActionTensor {
    std::shared_ptr<const WeakHopfData> hopf;
    std::variant<CoalgebraData, AlgebraData> carrier;
    Side side = Side::left;
    Tensor3 map;

    bool on_coalgebra() const { return std::holds_alternative<CoalgebraData>(carrier); }
    const CoalgebraData& coalgebra() const;
    const AlgebraData& algebra() const;
    const FinVec& carrier_space() const;

    // coefficient of x_k in h_i acting on x_j, whatever the side
    const Scalar& coeff(std::size_t h, std::size_t x, std::size_t k) const {
        return side == Side::left ? map.at(h, x, k) : map.at(x, h, k);
    }
};

// Checks shapes and builds an empty (zero) action of the given kind.
ActionTensor zero_action(std::shared_ptr<const WeakHopfData> hopf, std::variant<CoalgebraData, AlgebraData> carrier,
                         Side side);
void validate_shape(const ActionTensor& act);

bool operator==(const ActionTensor& a, const ActionTensor& b);

// A right action of H is a left action of H^{op,cop} on C^{cop} (resp. A^{op}).
// Left actions are returned unchanged.
ActionTensor as_left(const ActionTensor& act);

// Actions of H on itself: h▷x = hx, and h▷x = xS(h).
ActionTensor regular_action(std::shared_ptr<const WeakHopfData> hopf);
ActionTensor antipode_twisted_action(std::shared_ptr<const WeakHopfData> hopf);

// H_t as a left H-module algebra: h▷z = ε_t(hz). Multiplication of H on
// itself is not a module algebra action (h·ab ≠ (h₁·a)(h₂·b)).
ActionTensor target_action(std::shared_ptr<const WeakHopfData> hopf);

// Subalgebra on the columns of `inclusion`. Throws ShapeMismatch unless closed
// under the product and containing the unit.
AlgebraData restrict_algebra(const AlgebraData& A, const LinMap& inclusion);

// kG acting partially on the subcoalgebra kG_e: δ_g·x = x if g = e, else 0.
// `hopf` must be groupoid_algebra(G).
ActionTensor isotropy_partial_action(std::shared_ptr<const WeakHopfData> hopf, const FiniteGroupoid& G,
                                     std::size_t e);

// MC1–MC4 plus the consistency entry "MC1-MC3 ⇒ MC4".
ModuleCoalgebraVerdict check_module_coalgebra(const ActionTensor& act);

// PMC1–PMC3 (required), "PMC symmetric" and "global criterion"
// (informational), and the consistency entry tying the criterion to MC3.
ModuleCoalgebraVerdict check_partial_module_coalgebra(const ActionTensor& act);

// Identities for h in H_t (always) and h in H_s (symmetric actions only).
Report check_ht_hs_propositions(const ActionTensor& act);

// PMA1–PMA3 (required), "PMA symmetric" and MA1–MA4 (informational).
Report check_partial_module_algebra(const ActionTensor& act);
// MA1–MA4 (required).
Report check_module_algebra(const ActionTensor& act);

// λ: H -> k
struct LambdaFunctional {
    std::shared_ptr<const WeakHopfData> hopf;
    LinMap lam;
};

LambdaFunctional lambda_from_values(std::shared_ptr<const WeakHopfData> hopf, const std::vector<Scalar>& values);

// h⊗c ↦ λ(h)c (left) or c⊗h ↦ λ(h)c (right).
ActionTensor lambda_action(const LambdaFunctional& lf, const CoalgebraData& C, Side side = Side::left);

// "λ(1)=1", "λ(h)=λ(h₁)λ(h₂)", "λ(h)λ(k)=λ(hk)"; informational "λ(h)=λ(ε_s(h))".
Report check_lambda_global(const LambdaFunctional& lf);
// "λ(1)=1", "λ(h)λ(k)=λ(hk₁)λ(k₂)"; informational symmetric and globality.
Report check_lambda_partial(const LambdaFunctional& lf);

struct GroupCriterionVerdict {
    std::vector<std::size_t> V; // groupoid element indices
    bool v_is_group = false;
    bool values_match = false;  // λ has the shape the criterion prescribes on and off V
    bool char_ok = true;        // char ∤ |V| (dual case only)
    bool criterion = false;
    bool lambda_partial = false;
    bool agrees = false;
    Report report;
};

// V = {g | λ(δ_g) = 1 = λ(δ_{d(g)})}; criterion: V is a group and λ = 1_V.
GroupCriterionVerdict check_k_partial_action_group_criterion(const LambdaFunctional& lf, const FiniteGroupoid& G);
// V = {g | λ(p_g) ≠ 0 ≠ λ(p_{g⁻¹})}; criterion: V a group, char ∤ |V|,
// λ = 1/|V| on V and 0 elsewhere.
GroupCriterionVerdict check_dual_k_partial_action_criterion(const LambdaFunctional& lf, const FiniteGroupoid& G);

// Is the subset a group inside the groupoid (nonempty, closed, inverses,
// one shared identity)?
bool is_group_in(const FiniteGroupoid& G, const std::vector<std::size_t>& subset);

// Action restricted through a projection π onto a subcoalgebra D.
struct InducedAction {
    ActionTensor action;   // on D with its own basis
    LinMap inclusion;      // D -> C
    Report verdict;
};

// Throws NotIdempotent, NotSubcoalgebra.
InducedAction induce_partial_action(const ActionTensor& global, const LinMap& proj);

// Restriction of a coalgebra to a subcoalgebra spanned by `basis` columns of
// `inclusion`. Throws NotSubcoalgebra.
CoalgebraData restrict_coalgebra(const CoalgebraData& C, const LinMap& inclusion);

} // namespace whw

#endif
