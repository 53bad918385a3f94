#include "whw/errors.hpp"
#include "whw/groupoid.hpp"

#include <doctest.h>

#include <random>

using namespace whw;

namespace {

Matrix random_matrix(const Field& f, std::size_t r, std::size_t c, std::mt19937& rng, int lo = -3, int hi = 3) {
    std::uniform_int_distribution<int> d(lo, hi);
    Matrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Scalar::from_int(f, d(rng));
    return m;
}

// Plain Gaussian elimination on a copy; independent of the library's Bareiss.
std::size_t oracle_rank(Matrix m) {
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
        std::size_t p = rank;
        while (p < m.rows() && m.at(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m.at(p, k), m.at(rank, k));
        for (std::size_t r = rank + 1; r < m.rows(); ++r) {
            const Scalar t = m.at(r, c) / m.at(rank, c);
            for (std::size_t k = 0; k < m.cols(); ++k) m.at(r, k) -= t * m.at(rank, k);
        }
        ++rank;
    }
    return rank;
}

FinVec space(const Field& f, std::size_t n, const std::string& p) {
    std::vector<std::string> l;
    for (std::size_t i = 0; i < n; ++i) l.push_back(p + std::to_string(i));
    return FinVec(f, l);
}

} // namespace

TEST_CASE("rank, kernel, image and inverses agree with plain elimination") {
    std::mt19937 rng(20261016);
    for (const Field f : {Field::rationals(), Field::prime(7), Field::prime(2)}) {
        CAPTURE(f.to_string());
        for (int trial = 0; trial < 40; ++trial) {
            const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
            // Low-rank products exercise the dependent cases.
            Matrix m = trial % 3 == 0 ? random_matrix(f, r, 2, rng) * random_matrix(f, 2, c, rng)
                                      : random_matrix(f, r, c, rng);
            const std::size_t rk = oracle_rank(m);
            CHECK(rank(m) == rk);
            CHECK(rank(m.transpose()) == rk);
            CHECK(image_basis(m).size() == rk);

            const Matrix K = kernel(m);
            CHECK(K.cols() == c - rk);
            CHECK((m * K).is_zero());
            CHECK(oracle_rank(K) == K.cols());

            if (r == c) {
                const auto inv = inverse(m);
                CHECK(inv.has_value() == (rk == r));
                if (inv) CHECK(m * *inv == Matrix::identity(f, r));
            } else {
                CHECK_THROWS_AS(inverse(m), ShapeMismatch);
            }

            const LinMap map(space(f, c, "v"), space(f, r, "w"), m);
            if (rk == c) {
                const LinMap g = left_inverse_on_image(map);
                CHECK(compose(g, map) == LinMap::identity(map.domain));
            } else {
                CHECK_THROWS_AS(left_inverse_on_image(map), NotInjective);
            }
        }
    }
}

TEST_CASE("tensor products flatten row-major") {
    std::mt19937 rng(7);
    const Field Q;
    const FinVec V = space(Q, 2, "v"), W = space(Q, 3, "w");
    const LinMap f(V, V, random_matrix(Q, 2, 2, rng)), g(W, W, random_matrix(Q, 3, 3, rng));
    const LinMap fg = map_tensor(f, g);
    const FinVec VW = tensor_product(V, W);
    CHECK(VW.label(flatten(1, 2, 3)) == "v1⊗w2");
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t k = 0; k < 2; ++k)
                for (std::size_t l = 0; l < 3; ++l)
                    CHECK(fg.matrix.at(flatten(k, l, 3), flatten(i, j, 3)) == f.matrix.at(k, i) * g.matrix.at(l, j));
}

TEST_CASE("sparse evaluation matches dense matrices") {
    std::mt19937 rng(11);
    const Field Q;
    const FinVec V = space(Q, 4, "v"), W = space(Q, 3, "w");
    const LinMap f(V, W, random_matrix(Q, 3, 4, rng));
    const SparseOp op = SparseOp::from_map(f);
    for (int t = 0; t < 10; ++t) {
        Vector x = Vector::zero(V);
        for (auto& c : x.coords) c = Scalar::from_int(Q, static_cast<int>(rng() % 7) - 3);
        CHECK(apply(MultiVec::from_vector(x), 0, op).to_vector(W) == f.apply(x));
    }
}

TEST_CASE("contraction: m∘(m⊗id) = m∘(id⊗m) exactly when the product is associative") {
    const Field Q;
    const WeakHopfData H = groupoid_algebra(validate_groupoid(disjoint_union_spec({"Z/2", "Z/3"})), Q);
    const std::size_t n = H.dim();
    auto both_sides = [&](const Tensor3& mul, std::size_t i, std::size_t j, std::size_t k) {
        const SparseOp m = SparseOp::bilinear(mul);
        const MultiVec x = MultiVec::basis(Q, {n, n, n}, {static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j),
                                                          static_cast<std::uint32_t>(k)});
        return std::pair{apply(apply(x, 0, m), 0, m), apply(apply(x, 1, m), 0, m)};
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const auto [l, r] = both_sides(H.alg().mul, i, j, k);
                CHECK(l == r);
            }

    // δ_e1δ_e1 = 2δ_e1 gives (δ_e1δ_e1)δ_g = 2δ_g but δ_e1(δ_e1δ_g) = δ_g.
    Tensor3 bad = H.alg().mul;
    bad.at(0, 0, 0) = Scalar::from_int(Q, 2);
    const auto [l, r] = both_sides(bad, 0, 0, 2);
    CHECK_FALSE(l == r);
}
