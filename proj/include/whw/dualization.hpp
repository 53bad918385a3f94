#ifndef WHW_DUALIZATION_HPP
#define WHW_DUALIZATION_HPP

#include "whw/partial_actions.hpp"

namespace whw {

// C* on the coordinate dual basis (labels "p_<label>"): (αβ)(c) = α(c₁)β(c₂),
// unit ε_C.
AlgebraData dual_convolution_algebra(const CoalgebraData& C);

struct DualPairing {
    CoalgebraData C;
    AlgebraData Cstar;
    Matrix eval; // eval.at(i, j) = α_i(c_j)
};
DualPairing make_dual_pairing(const CoalgebraData& C);

// Left partial action on C -> right partial action on C*, (α↼h)(c) = α(h·c).
// Throws InputNotPartialAction unless the input passes PMC1–PMC3.
ActionTensor dualize_coalgebra_action(const ActionTensor& act);

// Inverse direction: the unique left action on C with (α↼h)(c) = α(h·c).
// `act` must act on dual_convolution_algebra(C). Throws InputNotPartialAction
// unless it passes PMA1–PMA3.
ActionTensor undualize_algebra_action(const ActionTensor& act, const CoalgebraData& C);

// Mirror pair (right coalgebra action <-> left algebra action on C*),
// (h⇀α)(c) = α(c↼h). Same preconditions with sides swapped.
ActionTensor dualize_right_coalgebra_action(const ActionTensor& act);
ActionTensor undualize_left_algebra_action(const ActionTensor& act, const CoalgebraData& C);

// The pairing transpose without precondition checks, for either side.
ActionTensor dual_action_tensor(const ActionTensor& coalgebra_action);

// Axiom-by-axiom comparison between a coalgebra action and its dual:
// "PMC1↔PMA1" ... "PMC symmetric↔PMA symmetric", "MC1↔MA1" ... "MC4↔MA4".
// An entry passes when both verdicts agree.
Report transfer_report(const ActionTensor& coalgebra_action);

} // namespace whw

#endif
