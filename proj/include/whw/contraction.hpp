#ifndef WHW_CONTRACTION_HPP
#define WHW_CONTRACTION_HPP

// Sparse evaluation of Sweedler-style expressions. An element of
// V_1⊗...⊗V_n is a map from index tuples to scalars; structure maps act on a
// run of consecutive slots. Equality of two expressions on all basis probes
// is equality of the underlying multilinear maps.

#include "whw/tensor_space.hpp"

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace whw {

class MultiVec {
public:
    using Index = std::vector<std::uint32_t>;

    MultiVec(Field field, std::vector<std::size_t> dims) : field_(field), dims_(std::move(dims)) {}

    static MultiVec basis(const Field& field, std::vector<std::size_t> dims, const Index& idx);
    static MultiVec scalar(const Scalar& s);
    static MultiVec from_vector(const Vector& v);

    const Field& field() const { return field_; }
    const std::vector<std::size_t>& dims() const { return dims_; }
    std::size_t arity() const { return dims_.size(); }
    const std::map<Index, Scalar>& terms() const { return terms_; }

    void add_term(const Index& idx, const Scalar& s);

    // Coordinates of a one-slot value.
    Vector to_vector(const FinVec& space) const;
    // Coefficient of the empty index for a zero-slot value.
    Scalar to_scalar() const;

    MultiVec otimes(const MultiVec& other) const;
    // Slot i of the result is slot perm[i] of *this.
    MultiVec permute(const std::vector<std::size_t>& perm) const;
    MultiVec swap(std::size_t i, std::size_t j) const;

    friend MultiVec operator+(const MultiVec& a, const MultiVec& b);
    friend MultiVec operator-(const MultiVec& a, const MultiVec& b);
    friend MultiVec operator*(const Scalar& s, const MultiVec& a);
    friend bool operator==(const MultiVec& a, const MultiVec& b);

private:
    Field field_;
    std::vector<std::size_t> dims_;
    std::map<Index, Scalar> terms_; // zero coefficients are never stored
};

// A multilinear map from `in_dims` slots to `out_dims` slots, stored as the
// image of every input basis tuple (flattened row-major).
struct SparseOp {
    std::vector<std::size_t> in_dims;
    std::vector<std::size_t> out_dims;
    std::vector<std::vector<std::pair<MultiVec::Index, Scalar>>> images;

    static SparseOp from_map(const LinMap& f);             // a -> b
    static SparseOp bilinear(const Tensor3& t);            // (a, b) -> c
    static SparseOp cotensor(const Tensor3& t);            // a -> (b, c)
    static SparseOp functional(const LinMap& f);           // a -> ()
    static SparseOp element(const Vector& v);              // () -> a
    static SparseOp element2(const MultiVec& v);           // () -> (a, b, ...)
};

// Replace slots [slot, slot + op.in_dims.size()) by the op's output slots.
MultiVec apply(const MultiVec& v, std::size_t slot, const SparseOp& op);

} // namespace whw

#endif
