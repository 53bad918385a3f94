#ifndef WHW_WEAK_HOPF_HPP
#define WHW_WEAK_HOPF_HPP

#include "whw/algebra.hpp"

#include <memory>
#include <optional>

namespace whw {

struct WeakBialgebraData {
    AlgebraData alg;
    CoalgebraData coalg; // same space as alg
};

// ε_t(h) = ε(1₁h)1₂ and ε_s(h) = 1₁ε(h1₂), read off the structure constants.
LinMap eps_t(const WeakBialgebraData& wb);
LinMap eps_s(const WeakBialgebraData& wb);

class WeakHopfData;

// Sparse structure maps of a weak Hopf algebra plus slot-level helpers used to
// spell out Sweedler expressions. Every helper acts at `slot` and shifts the
// remaining slots.
class HopfOps {
public:
    explicit HopfOps(const WeakHopfData& h);

    MultiVec m(const MultiVec& v, std::size_t slot) const { return apply(v, slot, m_); }
    MultiVec d(const MultiVec& v, std::size_t slot) const { return apply(v, slot, d_); }
    MultiVec e(const MultiVec& v, std::size_t slot) const { return apply(v, slot, e_); }
    MultiVec S(const MultiVec& v, std::size_t slot) const { return apply(v, slot, S_); }
    MultiVec Sinv(const MultiVec& v, std::size_t slot) const;
    MultiVec et(const MultiVec& v, std::size_t slot) const { return apply(v, slot, et_); }
    MultiVec es(const MultiVec& v, std::size_t slot) const { return apply(v, slot, es_); }
    // Insert 1_H at `slot`.
    MultiVec one_at(const MultiVec& v, std::size_t slot) const { return apply(v, slot, u_); }

    const MultiVec& one() const { return one_; }
    const MultiVec& delta1() const { return delta1_; }
    bool has_Sinv() const { return Sinv_.has_value(); }

private:
    SparseOp m_, d_, e_, u_, S_, et_, es_;
    std::optional<SparseOp> Sinv_;
    MultiVec one_, delta1_;
};

// A weak bialgebra with antipode. Immutable; ε_t, ε_s, bases of H_t and H_s
// and the sparse operators are computed once at construction.
class WeakHopfData {
public:
    WeakHopfData(WeakBialgebraData wb, LinMap antipode);

    const WeakBialgebraData& wb() const { return wb_; }
    const AlgebraData& alg() const { return wb_.alg; }
    const CoalgebraData& coalg() const { return wb_.coalg; }
    const FinVec& space() const { return wb_.alg.space; }
    const Field& field() const { return space().field(); }
    std::size_t dim() const { return space().dim(); }
    const LinMap& antipode() const { return S_; }
    const LinMap& eps_t() const { return eps_t_; }
    const LinMap& eps_s() const { return eps_s_; }
    const std::vector<Vector>& Ht_basis() const { return Ht_; }
    const std::vector<Vector>& Hs_basis() const { return Hs_; }
    const std::optional<LinMap>& antipode_inverse() const { return Sinv_; }
    const HopfOps& ops() const { return *ops_; }

private:
    WeakBialgebraData wb_;
    LinMap S_;
    LinMap eps_t_, eps_s_;
    std::vector<Vector> Ht_, Hs_;
    std::optional<LinMap> Sinv_;
    std::shared_ptr<const HopfOps> ops_;
};

bool operator==(const WeakHopfData& a, const WeakHopfData& b);

// Algebra and coalgebra axioms, then weak bialgebra (i), (ii) both equalities,
// (iii) both equalities.
AxiomReport check_weak_bialgebra(const WeakBialgebraData& wb);

// Antipode axioms and derived facts. Includes the weak bialgebra entries.
AxiomReport check_weak_hopf(const WeakHopfData& h);

// Every listed identity, labelled "Eq 4.n" (with a/b suffixes where a line
// states two equalities). Entries needing S⁻¹ are skipped when S is singular.
IdentityReport check_identities(const WeakHopfData& h);

struct HopfVerdict {
    bool unit_grouplike = false;       // (i)   Δ(1) = 1⊗1
    bool counit_multiplicative = false; // (ii)  ε(hk) = ε(h)ε(k)
    bool left_antipode_classical = false;  // (iii) h₁S(h₂) = ε(h)1
    bool right_antipode_classical = false; // (iv)  S(h₁)h₂ = ε(h)1
    bool trivial_target_source = false;    // (v)   H_t = H_s = k1
    bool consistent = false;               // all five agree
    bool is_hopf() const { return consistent && unit_grouplike; }
    Report report() const;
};

HopfVerdict is_hopf(const WeakHopfData& h);

// H* on the dual basis, labels "p_<label>".
WeakHopfData dualize(const WeakHopfData& h);

// H^{op,cop}: opposite product, coopposite coproduct, same unit, counit, S.
// Right actions of H are left actions of H^{op,cop}.
WeakHopfData op_cop(const WeakHopfData& h);

// Ground-field helpers used across modules.
Vector unit_vector(const WeakHopfData& h);
Scalar counit_of(const CoalgebraData& c, const Vector& v);

} // namespace whw

#endif
