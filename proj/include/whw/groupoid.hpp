#ifndef WHW_GROUPOID_HPP
#define WHW_GROUPOID_HPP

#include "whw/weak_hopf.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace whw {

// Raw, unvalidated description: elements, the defined products, inverses.
struct GroupoidSpec {
    std::vector<std::string> elements;
    std::vector<std::array<std::string, 3>> mul; // (g, h, gh)
    std::map<std::string, std::string> inv;
};

// Finite group by Cayley table; element 0 is the identity.
struct FiniteGroup {
    std::string name;
    std::vector<std::vector<std::size_t>> table;
    std::vector<std::size_t> inv;
    std::size_t order() const { return table.size(); }
};

// "Z/n", "Z/n x Z/m x ...", "S3".
FiniteGroup parse_group(const std::string& name);

// Disjoint union of the named groups. Component j (1-based) has identity "e<j>"
// and other elements "g<j>_<k>" with k the element's index in the group.
GroupoidSpec disjoint_union_spec(const std::vector<std::string>& groups);
// n objects, no other arrows.
GroupoidSpec trivial_groupoid_spec(std::size_t n);
// Two objects e, f and one arrow g: e -> f with inverse "g^-1".
GroupoidSpec two_object_spec();

class FiniteGroupoid {
public:
    // Throws AxiomViolation naming the first failed axiom and a witness.
    static FiniteGroupoid validate(const GroupoidSpec& raw);

    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(std::size_t g) const { return labels_.at(g); }
    std::optional<std::size_t> index_of(const std::string& label) const;

    bool composable(std::size_t g, std::size_t h) const { return mul_[g][h] >= 0; }
    // gh; only valid when composable.
    std::size_t product(std::size_t g, std::size_t h) const;
    std::size_t inverse(std::size_t g) const { return inv_[g]; }
    std::size_t d(std::size_t g) const { return d_[g]; }
    std::size_t r(std::size_t g) const { return r_[g]; }
    bool is_identity(std::size_t g) const { return d_[g] == g; }
    const std::vector<std::size_t>& identities() const { return identities_; }
    std::vector<std::pair<std::size_t, std::size_t>> composable_pairs() const;
    // G_e = {g | d(g) = e = r(g)}
    std::vector<std::size_t> isotropy(std::size_t e) const;

    // Back to raw form (in canonical order).
    GroupoidSpec spec() const;

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<long>> mul_;
    std::vector<std::size_t> inv_, d_, r_, identities_;
};

inline FiniteGroupoid validate_groupoid(const GroupoidSpec& raw) { return FiniteGroupoid::validate(raw); }

// Basis δ_g (labels "δ_<g>").
WeakHopfData groupoid_algebra(const FiniteGroupoid& G, const Field& field);
// Basis p_g (labels "p_<g>").
WeakHopfData dual_groupoid_algebra(const FiniteGroupoid& G, const Field& field);

// Finite abelian group as a product of cyclic factors Z/n_1 x ... x Z/n_k.
struct AbelianGroupSpec {
    std::vector<std::size_t> orders;
};
AbelianGroupSpec parse_abelian_group(const std::string& name);

// Group algebra with Δ(g) = (1/N)Σ_h gh⊗h⁻¹, ε(g) = N·[g = 1], S(g) = g.
// Throws CharacteristicDividesOrder if char(field) | N.
WeakHopfData abelian_group_weak_hopf(const AbelianGroupSpec& G, const Field& field);

} // namespace whw

#endif
