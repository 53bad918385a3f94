#ifndef WHW_ALGEBRA_HPP
#define WHW_ALGEBRA_HPP

#include "whw/contraction.hpp"
#include "whw/report.hpp"
#include "whw/tensor_space.hpp"

namespace whw {

// mul.at(i,j,k) = coefficient of e_k in e_i e_j.
struct AlgebraData {
    FinVec space;
    Tensor3 mul;
    Vector unit;
};

// comul.at(i,j,k) = coefficient of e_j⊗e_k in Δ(e_i); counit: space -> ground.
struct CoalgebraData {
    FinVec space;
    Tensor3 comul;
    LinMap counit;
};

bool operator==(const AlgebraData& a, const AlgebraData& b);
bool operator==(const CoalgebraData& a, const CoalgebraData& b);

// Shape checks; throw ShapeMismatch / FieldMismatch.
void validate_shape(const AlgebraData& a);
void validate_shape(const CoalgebraData& c);

// Entries "assoc", "unit-left", "unit-right" (prefixed).
void check_algebra(Report& r, const AlgebraData& a, const std::string& prefix = {});
// Entries "coassoc", "counit-left", "counit-right" (prefixed).
void check_coalgebra(Report& r, const CoalgebraData& c, const std::string& prefix = {});

AlgebraData opposite(const AlgebraData& a);
CoalgebraData coopposite(const CoalgebraData& c);

// Sparse forms of the structure maps.
struct AlgebraOps {
    SparseOp m, u;
    explicit AlgebraOps(const AlgebraData& a);
};
struct CoalgebraOps {
    SparseOp d, e;
    explicit CoalgebraOps(const CoalgebraData& c);
};

// Small coalgebras used as carriers.
namespace coalgebras {

// n grouplike basis elements g_i: Δg = g⊗g, ε(g) = 1.
CoalgebraData grouplike(const Field& f, std::size_t n, const std::string& prefix = "c");
// Two-dimensional: x0 grouplike, Δx1 = x0⊗x1 + x1⊗x0, ε(x1) = 0.
CoalgebraData divided_power(const Field& f);
// Matrix coalgebra: Δ e_ij = Σ_k e_ik⊗e_kj, ε(e_ij) = δ_ij.
CoalgebraData matrix(const Field& f, std::size_t n, const std::string& prefix = "E");
CoalgebraData ground(const Field& f);
CoalgebraData direct_sum(const CoalgebraData& a, const CoalgebraData& b);

} // namespace coalgebras

} // namespace whw

#endif
