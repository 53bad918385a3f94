#include "whw/contraction.hpp"

#include "whw/errors.hpp"

namespace whw {

MultiVec MultiVec::basis(const Field& field, std::vector<std::size_t> dims, const Index& idx) {
    MultiVec v(field, std::move(dims));
    v.add_term(idx, Scalar::one(field));
    return v;
}

MultiVec MultiVec::scalar(const Scalar& s) {
    MultiVec v(s.field(), {});
    v.add_term({}, s);
    return v;
}

MultiVec MultiVec::from_vector(const Vector& vec) {
    MultiVec v(vec.space.field(), {vec.space.dim()});
    for (std::size_t i = 0; i < vec.coords.size(); ++i) v.add_term({static_cast<std::uint32_t>(i)}, vec.coords[i]);
    return v;
}

void MultiVec::add_term(const Index& idx, const Scalar& s) {
    if (s.is_zero()) return;
    auto it = terms_.find(idx);
    if (it == terms_.end()) {
        terms_.emplace(idx, s);
        return;
    }
    it->second += s;
    if (it->second.is_zero()) terms_.erase(it);
}

Vector MultiVec::to_vector(const FinVec& space) const {
    if (arity() != 1 || dims_[0] != space.dim()) throw ShapeMismatch("to_vector on a multi-slot value");
    Vector v = Vector::zero(space);
    for (const auto& [idx, s] : terms_) v.coords[idx[0]] = s;
    return v;
}

Scalar MultiVec::to_scalar() const {
    if (arity() != 0) throw ShapeMismatch("to_scalar on a value with open slots");
    auto it = terms_.find({});
    return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

MultiVec MultiVec::otimes(const MultiVec& other) const {
    std::vector<std::size_t> dims = dims_;
    dims.insert(dims.end(), other.dims_.begin(), other.dims_.end());
    MultiVec r(field_, std::move(dims));
    for (const auto& [i, a] : terms_)
        for (const auto& [j, b] : other.terms_) {
            Index k = i;
            k.insert(k.end(), j.begin(), j.end());
            r.add_term(k, a * b);
        }
    return r;
}

MultiVec MultiVec::permute(const std::vector<std::size_t>& perm) const {
    if (perm.size() != arity()) throw ShapeMismatch("permutation of wrong length");
    std::vector<std::size_t> dims(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) dims[i] = dims_.at(perm[i]);
    MultiVec r(field_, std::move(dims));
    for (const auto& [idx, s] : terms_) {
        Index k(perm.size());
        for (std::size_t i = 0; i < perm.size(); ++i) k[i] = idx[perm[i]];
        r.terms_.emplace(std::move(k), s);
    }
    return r;
}

MultiVec MultiVec::swap(std::size_t i, std::size_t j) const {
    std::vector<std::size_t> perm(arity());
    for (std::size_t k = 0; k < perm.size(); ++k) perm[k] = k;
    std::swap(perm.at(i), perm.at(j));
    return permute(perm);
}

MultiVec operator+(const MultiVec& a, const MultiVec& b) {
    if (a.dims_ != b.dims_) throw ShapeMismatch("sum of values with different slot shapes");
    MultiVec r = a;
    for (const auto& [idx, s] : b.terms_) r.add_term(idx, s);
    return r;
}

MultiVec operator-(const MultiVec& a, const MultiVec& b) {
    return a + Scalar::from_int(b.field_, -1) * b;
}

MultiVec operator*(const Scalar& s, const MultiVec& a) {
    MultiVec r(a.field_, a.dims_);
    for (const auto& [idx, x] : a.terms_) r.add_term(idx, s * x);
    return r;
}

bool operator==(const MultiVec& a, const MultiVec& b) {
    return a.dims_ == b.dims_ && a.terms_ == b.terms_;
}

SparseOp SparseOp::from_map(const LinMap& f) {
    SparseOp op{{f.domain.dim()}, {f.codomain.dim()}, {}};
    op.images.resize(f.domain.dim());
    for (std::size_t j = 0; j < f.domain.dim(); ++j)
        for (std::size_t i = 0; i < f.codomain.dim(); ++i)
            if (!f.matrix.at(i, j).is_zero())
                op.images[j].push_back({{static_cast<std::uint32_t>(i)}, f.matrix.at(i, j)});
    return op;
}

SparseOp SparseOp::bilinear(const Tensor3& t) {
    SparseOp op{{t.a.dim(), t.b.dim()}, {t.c.dim()}, {}};
    op.images.resize(t.a.dim() * t.b.dim());
    for (std::size_t i = 0; i < t.a.dim(); ++i)
        for (std::size_t j = 0; j < t.b.dim(); ++j)
            for (std::size_t k = 0; k < t.c.dim(); ++k)
                if (!t.at(i, j, k).is_zero())
                    op.images[i * t.b.dim() + j].push_back({{static_cast<std::uint32_t>(k)}, t.at(i, j, k)});
    return op;
}

SparseOp SparseOp::cotensor(const Tensor3& t) {
    SparseOp op{{t.a.dim()}, {t.b.dim(), t.c.dim()}, {}};
    op.images.resize(t.a.dim());
    for (std::size_t i = 0; i < t.a.dim(); ++i)
        for (std::size_t j = 0; j < t.b.dim(); ++j)
            for (std::size_t k = 0; k < t.c.dim(); ++k)
                if (!t.at(i, j, k).is_zero())
                    op.images[i].push_back(
                        {{static_cast<std::uint32_t>(j), static_cast<std::uint32_t>(k)}, t.at(i, j, k)});
    return op;
}

SparseOp SparseOp::functional(const LinMap& f) {
    if (f.codomain.dim() != 1) throw ShapeMismatch("functional must land in the ground field");
    SparseOp op{{f.domain.dim()}, {}, {}};
    op.images.resize(f.domain.dim());
    for (std::size_t j = 0; j < f.domain.dim(); ++j)
        if (!f.matrix.at(0, j).is_zero()) op.images[j].push_back({{}, f.matrix.at(0, j)});
    return op;
}

SparseOp SparseOp::element(const Vector& v) { return element2(MultiVec::from_vector(v)); }

SparseOp SparseOp::element2(const MultiVec& v) {
    SparseOp op{{}, v.dims(), {}};
    op.images.resize(1);
    for (const auto& [idx, s] : v.terms()) op.images[0].push_back({idx, s});
    return op;
}

MultiVec apply(const MultiVec& v, std::size_t slot, const SparseOp& op) {
    const std::size_t n_in = op.in_dims.size();
    if (slot + n_in > v.arity()) throw ShapeMismatch("operator applied past the last slot");
    for (std::size_t i = 0; i < n_in; ++i)
        if (v.dims()[slot + i] != op.in_dims[i]) throw ShapeMismatch("operator input dimension mismatch");
    std::vector<std::size_t> dims(v.dims().begin(), v.dims().begin() + static_cast<std::ptrdiff_t>(slot));
    dims.insert(dims.end(), op.out_dims.begin(), op.out_dims.end());
    dims.insert(dims.end(), v.dims().begin() + static_cast<std::ptrdiff_t>(slot + n_in), v.dims().end());
    MultiVec r(v.field(), std::move(dims));
    for (const auto& [idx, s] : v.terms()) {
        std::size_t flat = 0;
        for (std::size_t i = 0; i < n_in; ++i) flat = flat * op.in_dims[i] + idx[slot + i];
        for (const auto& [out, c] : op.images[flat]) {
            MultiVec::Index k(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(slot));
            k.insert(k.end(), out.begin(), out.end());
            k.insert(k.end(), idx.begin() + static_cast<std::ptrdiff_t>(slot + n_in), idx.end());
            r.add_term(k, s * c);
        }
    }
    return r;
}

} // namespace whw
