#include "whw/tensor_space.hpp"

#include "whw/errors.hpp"

#include <set>

namespace whw {

FinVec::FinVec(Field field, std::vector<std::string> labels)
    : field_(field), labels_(std::move(labels)) {
    if (labels_.empty()) throw ShapeMismatch("a space needs at least one basis vector");
    std::set<std::string> seen;
    for (const auto& l : labels_)
        if (!seen.insert(l).second) throw ShapeMismatch("duplicate basis label '" + l + "'");
}

FinVec FinVec::ground(const Field& field) { return FinVec(field, {"1"}); }

std::optional<std::size_t> FinVec::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return i;
    return std::nullopt;
}

FinVec tensor_product(const FinVec& v, const FinVec& w) {
    if (v.field() != w.field()) throw FieldMismatch("tensor_product of spaces over different fields");
    std::vector<std::string> labels;
    labels.reserve(v.dim() * w.dim());
    for (const auto& a : v.labels())
        for (const auto& b : w.labels()) labels.push_back(a + "⊗" + b);
    return FinVec(v.field(), std::move(labels));
}

Matrix::Matrix(const Field& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::identity(const Field& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(field);
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

bool Matrix::is_zero() const {
    for (const auto& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.field_ != b.field_) throw FieldMismatch("matrix product");
    if (a.cols_ != b.rows_) throw ShapeMismatch("matrix product " + std::to_string(a.rows_) + "x" +
                                                std::to_string(a.cols_) + " * " + std::to_string(b.rows_) +
                                                "x" + std::to_string(b.cols_));
    Matrix p(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& x = a.at(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (!b.at(k, j).is_zero()) p.at(i, j) += x * b.at(k, j);
        }
    return p;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.field_ != b.field_) throw FieldMismatch("matrix sum");
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeMismatch("matrix sum");
    Matrix s = a;
    for (std::size_t i = 0; i < s.data_.size(); ++i) s.data_[i] += b.data_[i];
    return s;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + (Scalar::from_int(b.field_, -1) * b); }

Matrix operator*(const Scalar& s, const Matrix& a) {
    Matrix r = a;
    for (auto& x : r.data_) x *= s;
    return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Vector Vector::zero(const FinVec& space) {
    return Vector{space, std::vector<Scalar>(space.dim(), Scalar::zero(space.field()))};
}

Vector Vector::basis(const FinVec& space, std::size_t i) {
    Vector v = zero(space);
    v.coords.at(i) = Scalar::one(space.field());
    return v;
}

Vector Vector::from_column(const FinVec& space, const Matrix& m, std::size_t col) {
    if (m.rows() != space.dim()) throw ShapeMismatch("column length does not match space");
    Vector v = zero(space);
    for (std::size_t r = 0; r < m.rows(); ++r) v.coords[r] = m.at(r, col);
    return v;
}

bool Vector::is_zero() const {
    for (const auto& x : coords)
        if (!x.is_zero()) return false;
    return true;
}

LinMap::LinMap(FinVec dom, FinVec cod, Matrix m)
    : domain(std::move(dom)), codomain(std::move(cod)), matrix(std::move(m)) {
    if (matrix.rows() != codomain.dim() || matrix.cols() != domain.dim())
        throw ShapeMismatch("matrix shape does not match domain/codomain");
    if (domain.field() != codomain.field() || matrix.field() != domain.field())
        throw FieldMismatch("linear map over mixed fields");
}

LinMap LinMap::identity(const FinVec& v) { return LinMap(v, v, Matrix::identity(v.field(), v.dim())); }

LinMap LinMap::zero(const FinVec& dom, const FinVec& cod) {
    return LinMap(dom, cod, Matrix(dom.field(), cod.dim(), dom.dim()));
}

Vector LinMap::apply(const Vector& v) const {
    if (v.space.dim() != domain.dim()) throw ShapeMismatch("vector not in the domain");
    Vector out = Vector::zero(codomain);
    for (std::size_t j = 0; j < domain.dim(); ++j) {
        if (v.coords[j].is_zero()) continue;
        for (std::size_t i = 0; i < codomain.dim(); ++i)
            if (!matrix.at(i, j).is_zero()) out.coords[i] += matrix.at(i, j) * v.coords[j];
    }
    return out;
}

LinMap compose(const LinMap& f, const LinMap& g) {
    if (g.codomain.dim() != f.domain.dim()) throw ShapeMismatch("compose: codomain/domain mismatch");
    return LinMap(g.domain, f.codomain, f.matrix * g.matrix);
}

LinMap map_tensor(const LinMap& f, const LinMap& g) {
    if (f.domain.field() != g.domain.field()) throw FieldMismatch("map_tensor");
    const auto& A = f.matrix;
    const auto& B = g.matrix;
    Matrix k(A.field(), A.rows() * B.rows(), A.cols() * B.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) {
            if (A.at(i, j).is_zero()) continue;
            for (std::size_t p = 0; p < B.rows(); ++p)
                for (std::size_t q = 0; q < B.cols(); ++q)
                    k.at(i * B.rows() + p, j * B.cols() + q) = A.at(i, j) * B.at(p, q);
        }
    return LinMap(tensor_product(f.domain, g.domain), tensor_product(f.codomain, g.codomain), std::move(k));
}

LinMap operator+(const LinMap& f, const LinMap& g) {
    if (f.domain.dim() != g.domain.dim() || f.codomain.dim() != g.codomain.dim())
        throw ShapeMismatch("sum of maps");
    return LinMap(f.domain, f.codomain, f.matrix + g.matrix);
}

LinMap operator-(const LinMap& f, const LinMap& g) {
    if (f.domain.dim() != g.domain.dim() || f.codomain.dim() != g.codomain.dim())
        throw ShapeMismatch("difference of maps");
    return LinMap(f.domain, f.codomain, f.matrix - g.matrix);
}

LinMap operator*(const Scalar& s, const LinMap& f) { return LinMap(f.domain, f.codomain, s * f.matrix); }

bool equal(const LinMap& f, const LinMap& g) {
    if (f.domain.dim() != g.domain.dim() || f.codomain.dim() != g.codomain.dim())
        throw ShapeMismatch("equal: shapes differ");
    return f.matrix == g.matrix;
}

namespace {

// Rows scaled by the lcm of their denominators so Bareiss runs on integers.
std::vector<std::vector<Scalar>> integral_rows(const Matrix& m) {
    std::vector<std::vector<Scalar>> rows(m.rows(), std::vector<Scalar>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (m.field().is_rational()) {
            mpz_class l = 1;
            for (std::size_t c = 0; c < m.cols(); ++c) {
                const mpz_class& d = m.at(r, c).as_rational().get_den();
                mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
            }
            const Scalar scale = Scalar::rational(mpq_class(l));
            for (std::size_t c = 0; c < m.cols(); ++c) rows[r][c] = m.at(r, c) * scale;
        } else {
            for (std::size_t c = 0; c < m.cols(); ++c) rows[r][c] = m.at(r, c);
        }
    }
    return rows;
}

// Fraction-free elimination; returns the pivot columns.
std::vector<std::size_t> bareiss_pivots(const Matrix& m) {
    auto a = integral_rows(m);
    const std::size_t R = m.rows(), C = m.cols();
    Scalar prev = Scalar::one(m.field());
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < C && r < R; ++c) {
        std::size_t p = r;
        while (p < R && a[p][c].is_zero()) ++p;
        if (p == R) continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < R; ++i) {
            for (std::size_t j = c + 1; j < C; ++j)
                a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
            a[i][c] = Scalar::zero(m.field());
        }
        prev = a[r][c];
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

std::size_t rank(const Matrix& m) { return bareiss_pivots(m).size(); }

std::vector<std::size_t> image_basis(const Matrix& m) { return bareiss_pivots(m); }

Matrix rref(const Matrix& m, std::vector<std::size_t>* pivots) {
    Matrix a = m;
    const std::size_t R = a.rows(), C = a.cols();
    std::size_t r = 0;
    if (pivots) pivots->clear();
    for (std::size_t c = 0; c < C && r < R; ++c) {
        std::size_t p = r;
        while (p < R && a.at(p, c).is_zero()) ++p;
        if (p == R) continue;
        if (p != r)
            for (std::size_t j = 0; j < C; ++j) std::swap(a.at(p, j), a.at(r, j));
        const Scalar inv = a.at(r, c).inverse();
        for (std::size_t j = c; j < C; ++j) a.at(r, j) *= inv;
        for (std::size_t i = 0; i < R; ++i) {
            if (i == r || a.at(i, c).is_zero()) continue;
            const Scalar f = a.at(i, c);
            for (std::size_t j = c; j < C; ++j) a.at(i, j) -= f * a.at(r, j);
        }
        if (pivots) pivots->push_back(c);
        ++r;
    }
    return a;
}

LinMap left_inverse_on_image(const LinMap& f) {
    const Matrix& F = f.matrix;
    const std::size_t m = F.rows(), n = F.cols();
    Matrix aug(F.field(), m, n + m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = F.at(i, j);
        aug.at(i, n + i) = Scalar::one(F.field());
    }
    std::vector<std::size_t> piv;
    const Matrix red = rref(aug, &piv);
    std::size_t k = 0;
    while (k < piv.size() && piv[k] < n) ++k;
    if (k != n) throw NotInjective("rank " + std::to_string(k) + " < " + std::to_string(n));
    Matrix g(F.field(), n, m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) g.at(i, j) = red.at(i, n + j);
    return LinMap(f.codomain, f.domain, std::move(g));
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw ShapeMismatch("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    Matrix aug(m.field(), n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = Scalar::one(m.field());
    }
    std::vector<std::size_t> piv;
    const Matrix red = rref(aug, &piv);
    if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
    Matrix inv(m.field(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = red.at(i, n + j);
    return inv;
}

Matrix kernel(const Matrix& m) {
    std::vector<std::size_t> piv;
    const Matrix red = rref(m, &piv);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : piv) is_pivot[c] = true;
    std::vector<std::size_t> free;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free.push_back(c);
    Matrix k(m.field(), m.cols(), free.size());
    for (std::size_t f = 0; f < free.size(); ++f) {
        k.at(free[f], f) = Scalar::one(m.field());
        for (std::size_t r = 0; r < piv.size(); ++r) k.at(piv[r], f) = -red.at(r, free[f]);
    }
    return k;
}

Tensor3::Tensor3(FinVec a_, FinVec b_, FinVec c_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)),
      entries(a.dim() * b.dim() * c.dim(), Scalar::zero(a.field())) {
    if (a.field() != b.field() || b.field() != c.field()) throw FieldMismatch("tensor over mixed fields");
}

LinMap bilinear_as_map(const Tensor3& t) {
    LinMap f = LinMap::zero(tensor_product(t.a, t.b), t.c);
    for (std::size_t i = 0; i < t.a.dim(); ++i)
        for (std::size_t j = 0; j < t.b.dim(); ++j)
            for (std::size_t k = 0; k < t.c.dim(); ++k) f.matrix.at(k, flatten(i, j, t.b.dim())) = t.at(i, j, k);
    return f;
}

LinMap cotensor_as_map(const Tensor3& t) {
    LinMap f = LinMap::zero(t.a, tensor_product(t.b, t.c));
    for (std::size_t i = 0; i < t.a.dim(); ++i)
        for (std::size_t j = 0; j < t.b.dim(); ++j)
            for (std::size_t k = 0; k < t.c.dim(); ++k) f.matrix.at(flatten(j, k, t.c.dim()), i) = t.at(i, j, k);
    return f;
}

} // namespace whw
