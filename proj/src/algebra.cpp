#include "whw/algebra.hpp"

#include "whw/check.hpp"
#include "whw/errors.hpp"

namespace whw {

bool operator==(const AlgebraData& a, const AlgebraData& b) {
    return a.space == b.space && a.mul == b.mul && a.unit == b.unit;
}

bool operator==(const CoalgebraData& a, const CoalgebraData& b) {
    return a.space == b.space && a.comul == b.comul && a.counit == b.counit;
}

void validate_shape(const AlgebraData& a) {
    const auto n = a.space.dim();
    if (a.mul.a.dim() != n || a.mul.b.dim() != n || a.mul.c.dim() != n)
        throw ShapeMismatch("multiplication tensor does not match the space");
    if (a.unit.coords.size() != n) throw ShapeMismatch("unit vector does not match the space");
    if (a.mul.a.field() != a.space.field() || a.unit.space.field() != a.space.field())
        throw FieldMismatch("algebra over mixed fields");
}

void validate_shape(const CoalgebraData& c) {
    const auto n = c.space.dim();
    if (c.comul.a.dim() != n || c.comul.b.dim() != n || c.comul.c.dim() != n)
        throw ShapeMismatch("comultiplication tensor does not match the space");
    if (c.counit.domain.dim() != n || c.counit.codomain.dim() != 1)
        throw ShapeMismatch("counit must be a functional on the space");
    if (c.comul.a.field() != c.space.field() || c.counit.domain.field() != c.space.field())
        throw FieldMismatch("coalgebra over mixed fields");
}

AlgebraOps::AlgebraOps(const AlgebraData& a) : m(SparseOp::bilinear(a.mul)), u(SparseOp::element(a.unit)) {}

CoalgebraOps::CoalgebraOps(const CoalgebraData& c)
    : d(SparseOp::cotensor(c.comul)), e(SparseOp::functional(c.counit)) {}

void check_algebra(Report& r, const AlgebraData& a, const std::string& prefix) {
    validate_shape(a);
    const AlgebraOps o(a);
    const ProbeSet B = basis_probes(a.space);
    check_equal(
        r, prefix + "assoc", {&B, &B, &B},
        [&](const Args& x) { return apply(apply(x[0]->otimes(*x[1]).otimes(*x[2]), 0, o.m), 0, o.m); },
        [&](const Args& x) { return apply(apply(x[0]->otimes(*x[1]).otimes(*x[2]), 1, o.m), 0, o.m); });
    check_equal(
        r, prefix + "unit-left", {&B}, [&](const Args& x) { return apply(apply(*x[0], 0, o.u), 0, o.m); },
        [&](const Args& x) { return *x[0]; });
    check_equal(
        r, prefix + "unit-right", {&B}, [&](const Args& x) { return apply(apply(*x[0], 1, o.u), 0, o.m); },
        [&](const Args& x) { return *x[0]; });
}

void check_coalgebra(Report& r, const CoalgebraData& c, const std::string& prefix) {
    validate_shape(c);
    const CoalgebraOps o(c);
    const ProbeSet B = basis_probes(c.space);
    check_equal(
        r, prefix + "coassoc", {&B}, [&](const Args& x) { return apply(apply(*x[0], 0, o.d), 0, o.d); },
        [&](const Args& x) { return apply(apply(*x[0], 0, o.d), 1, o.d); });
    check_equal(
        r, prefix + "counit-left", {&B}, [&](const Args& x) { return apply(apply(*x[0], 0, o.d), 0, o.e); },
        [&](const Args& x) { return *x[0]; });
    check_equal(
        r, prefix + "counit-right", {&B}, [&](const Args& x) { return apply(apply(*x[0], 0, o.d), 1, o.e); },
        [&](const Args& x) { return *x[0]; });
}

AlgebraData opposite(const AlgebraData& a) {
    AlgebraData r = a;
    const auto n = a.space.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) r.mul.at(i, j, k) = a.mul.at(j, i, k);
    return r;
}

CoalgebraData coopposite(const CoalgebraData& c) {
    CoalgebraData r = c;
    const auto n = c.space.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) r.comul.at(i, j, k) = c.comul.at(i, k, j);
    return r;
}

namespace coalgebras {

namespace {
CoalgebraData empty_on(const FinVec& v) {
    return CoalgebraData{v, Tensor3(v, v, v), LinMap::zero(v, FinVec::ground(v.field()))};
}
} // namespace

CoalgebraData grouplike(const Field& f, std::size_t n, const std::string& prefix) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i + 1));
    CoalgebraData c = empty_on(FinVec(f, labels));
    for (std::size_t i = 0; i < n; ++i) {
        c.comul.at(i, i, i) = Scalar::one(f);
        c.counit.matrix.at(0, i) = Scalar::one(f);
    }
    return c;
}

CoalgebraData divided_power(const Field& f) {
    CoalgebraData c = empty_on(FinVec(f, {"x0", "x1"}));
    const Scalar one = Scalar::one(f);
    c.comul.at(0, 0, 0) = one;
    c.comul.at(1, 0, 1) = one;
    c.comul.at(1, 1, 0) = one;
    c.counit.matrix.at(0, 0) = one;
    return c;
}

CoalgebraData matrix(const Field& f, std::size_t n, const std::string& prefix) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) labels.push_back(prefix + std::to_string(i + 1) + std::to_string(j + 1));
    CoalgebraData c = empty_on(FinVec(f, labels));
    const Scalar one = Scalar::one(f);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) c.comul.at(i * n + j, i * n + k, k * n + j) = one;
            if (i == j) c.counit.matrix.at(0, i * n + j) = one;
        }
    return c;
}

CoalgebraData ground(const Field& f) { return grouplike(f, 1, "c"); }

CoalgebraData direct_sum(const CoalgebraData& a, const CoalgebraData& b) {
    if (a.space.field() != b.space.field()) throw FieldMismatch("direct sum over different fields");
    std::vector<std::string> labels = a.space.labels();
    labels.insert(labels.end(), b.space.labels().begin(), b.space.labels().end());
    CoalgebraData c = empty_on(FinVec(a.space.field(), labels));
    const auto na = a.space.dim(), nb = b.space.dim();
    for (std::size_t i = 0; i < na; ++i) {
        c.counit.matrix.at(0, i) = a.counit.matrix.at(0, i);
        for (std::size_t j = 0; j < na; ++j)
            for (std::size_t k = 0; k < na; ++k) c.comul.at(i, j, k) = a.comul.at(i, j, k);
    }
    for (std::size_t i = 0; i < nb; ++i) {
        c.counit.matrix.at(0, na + i) = b.counit.matrix.at(0, i);
        for (std::size_t j = 0; j < nb; ++j)
            for (std::size_t k = 0; k < nb; ++k) c.comul.at(na + i, na + j, na + k) = b.comul.at(i, j, k);
    }
    return c;
}

} // namespace coalgebras

} // namespace whw
