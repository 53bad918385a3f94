#ifndef WHW_GLOBALIZATION_HPP
#define WHW_GLOBALIZATION_HPP

#include "whw/dualization.hpp"

namespace whw {

// (D, θ, π) for a right partial action ↼ of H on C, with ◂ the right action on D.
struct GlobalizationTriple {
    ActionTensor partial;    // right, on C
    CoalgebraData D;
    ActionTensor global_act; // right, on D
    LinMap theta;            // C -> D
    LinMap pi;               // D -> D
};

// Every clause of a globalization, stated for right actions. Labels
// "Def-globalmod-(i)" ... "Def-globalmod-(iv)", "Eq (5)" ... "Eq (7)".
Report check_globalization(const GlobalizationTriple& gt);

// "Δ(e)=e⊗e", "ε(e)=1", "c↼he=c↼h" and the derived "c↼eh=c↼h".
Report check_grouplike_hypotheses(const ActionTensor& act, const Vector& e);

// Basis elements and 0/1 sums of idempotent basis elements that are grouplike
// and absorbed (c↼he = c↼h). The search is not exhaustive over all grouplikes.
std::vector<Vector> find_basis_grouplikes(const WeakHopfData& H, const ActionTensor& act);

// D = C⊗eH, θ(c) = c⊗e, π(c⊗x) = (c↼x)⊗e, (c⊗x)◂k = c⊗xk.
// Throws HypothesisViolated(grouplike | absorption).
GlobalizationTriple standard_globalization(const ActionTensor& act, const Vector& e);

// Coalgebra C⊗H' with Δ(c⊗x) = (c₁⊗x₁)⊗(c₂⊗x₂), ε = ε⊗ε. Labels "c⊗x".
CoalgebraData tensor_coalgebra(const CoalgebraData& a, const CoalgebraData& b);

// Algebra side: C* with the left partial action (h⇀α)(c) = α(c↼h), D* with
// (h▷β)(d) = β(d◂h), φ(α) = α∘θ⁻¹∘π and B = span{h▷φ(α)}.
struct AlgebraGlobalization {
    ActionTensor partial;        // left, on C*
    ActionTensor global_act;     // left, on D*
    LinMap phi;                  // C* -> D*
    LinMap theta_star;           // D* -> C*, β ↦ β∘θ
    std::vector<Vector> B_basis; // in D*
    bool theta_injective = true; // φ needs a left inverse of θ
};

// Builds the data without checking the triple.
AlgebraGlobalization dual_globalization_data(const GlobalizationTriple& gt);

// The algebra-side definition for (B, φ): D* module algebra, B a subalgebra
// stable under H, φ multiplicative and injective, φ(C*) a right ideal of B,
// φ(h⇀α) = φ(1)(h▷φ(α)). B = H▷φ(C*) holds by construction; the standing
// hypothesis D = θ(C)◂H is checked in dual form: no β ≠ 0 has
// (h▷β)∘θ = 0 for every h.
Report check_algebra_globalization(const AlgebraGlobalization& ag);

struct DualGlobalizationResult {
    AlgebraGlobalization data;
    Report report;
};

// Throws InputNotGlobalization unless check_globalization(gt) passes.
DualGlobalizationResult dual_globalization_transfer(const GlobalizationTriple& gt);

namespace mutations {
// θ replaced by s·θ (and π left alone).
GlobalizationTriple scale_theta(const GlobalizationTriple& gt, const Scalar& s);
// D replaced by D⊕D, θ and π living in the first copy: breaks generation.
GlobalizationTriple pad_unreachable(const GlobalizationTriple& gt);
// π replaced by θ∘L with L the coordinate left inverse of θ: still a
// projection onto θ(C), but not the one the action needs.
GlobalizationTriple coordinate_projection(const GlobalizationTriple& gt);
} // namespace mutations

} // namespace whw

#endif
