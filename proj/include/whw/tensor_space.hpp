#ifndef WHW_TENSOR_SPACE_HPP
#define WHW_TENSOR_SPACE_HPP

#include "whw/scalar.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace whw {

// Finite-dimensional space with an ordered, named basis.
class FinVec {
public:
    FinVec() = default;
    FinVec(Field field, std::vector<std::string> labels);

    // The ground field as a 1-dimensional space with basis {"1"}.
    static FinVec ground(const Field& field);

    const Field& field() const { return field_; }
    std::size_t dim() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(std::size_t i) const { return labels_.at(i); }
    std::optional<std::size_t> index_of(const std::string& label) const;

    friend bool operator==(const FinVec&, const FinVec&) = default;

private:
    Field field_;
    std::vector<std::string> labels_;
};

// Basis of V⊗W is v_i⊗w_j at flat index i*dim(W)+j (row-major).
FinVec tensor_product(const FinVec& v, const FinVec& w);

inline std::size_t flatten(std::size_t i, std::size_t j, std::size_t dim_w) { return i * dim_w + j; }
inline std::pair<std::size_t, std::size_t> unflatten(std::size_t flat, std::size_t dim_w) {
    return {flat / dim_w, flat % dim_w};
}

// Dense exact matrix, row-major.
class Matrix {
public:
    Matrix() = default;
    Matrix(const Field& field, std::size_t rows, std::size_t cols);

    static Matrix identity(const Field& field, std::size_t n);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Matrix transpose() const;
    bool is_zero() const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Scalar& s, const Matrix& a);
    friend bool operator==(const Matrix& a, const Matrix& b);

private:
    Field field_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> data_;
};

struct Vector {
    FinVec space;
    std::vector<Scalar> coords;

    static Vector zero(const FinVec& space);
    static Vector basis(const FinVec& space, std::size_t i);
    static Vector from_column(const FinVec& space, const Matrix& m, std::size_t col);

    bool is_zero() const;
    friend bool operator==(const Vector& a, const Vector& b) = default;
};

// Matrix is codomain.dim x domain.dim; column j is the image of basis vector j.
struct LinMap {
    FinVec domain;
    FinVec codomain;
    Matrix matrix;

    LinMap() = default;
    LinMap(FinVec dom, FinVec cod, Matrix m);

    static LinMap identity(const FinVec& v);
    static LinMap zero(const FinVec& dom, const FinVec& cod);

    Vector apply(const Vector& v) const;
    friend bool operator==(const LinMap& a, const LinMap& b) = default;
};

// f∘g
LinMap compose(const LinMap& f, const LinMap& g);
LinMap map_tensor(const LinMap& f, const LinMap& g);
LinMap operator+(const LinMap& f, const LinMap& g);
LinMap operator-(const LinMap& f, const LinMap& g);
LinMap operator*(const Scalar& s, const LinMap& f);

bool equal(const LinMap& f, const LinMap& g);

// Rank by fraction-free elimination. Rational rows are first cleared of
// denominators so intermediate values stay integral.
std::size_t rank(const Matrix& m);
inline std::size_t rank(const LinMap& f) { return rank(f.matrix); }

// Indices of columns forming a basis of the column space (leftmost choice).
std::vector<std::size_t> image_basis(const Matrix& m);
inline std::vector<std::size_t> image_basis(const LinMap& f) { return image_basis(f.matrix); }

// Reduced row echelon form; pivot columns returned through `pivots` if given.
Matrix rref(const Matrix& m, std::vector<std::size_t>* pivots = nullptr);

// g with g∘f = id. Throws NotInjective unless f has full column rank.
LinMap left_inverse_on_image(const LinMap& f);

std::optional<Matrix> inverse(const Matrix& m);

// Columns spanning the null space of m.
Matrix kernel(const Matrix& m);

// Rank-3 tensor over spaces (a, b, c); entry (i,j,k) at flat (i*db+j)*dc+k.
struct Tensor3 {
    FinVec a, b, c;
    std::vector<Scalar> entries;

    Tensor3() = default;
    Tensor3(FinVec a, FinVec b, FinVec c);

    Scalar& at(std::size_t i, std::size_t j, std::size_t k) {
        return entries[(i * b.dim() + j) * c.dim() + k];
    }
    const Scalar& at(std::size_t i, std::size_t j, std::size_t k) const {
        return entries[(i * b.dim() + j) * c.dim() + k];
    }

    friend bool operator==(const Tensor3&, const Tensor3&) = default;
};

// Bilinear reading a⊗b -> c as a map (a⊗b) -> c.
LinMap bilinear_as_map(const Tensor3& t);
// Reading a -> b⊗c as a map.
LinMap cotensor_as_map(const Tensor3& t);

} // namespace whw

#endif
