#include "whw/dualization.hpp"

#include "whw/errors.hpp"

namespace whw {

AlgebraData dual_convolution_algebra(const CoalgebraData& C) {
    validate_shape(C);
    std::vector<std::string> labels;
    for (const auto& l : C.space.labels()) labels.push_back("p_" + l);
    const FinVec V(C.space.field(), labels);
    AlgebraData a{V, Tensor3(V, V, V), Vector::zero(V)};
    const std::size_t n = V.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) a.mul.at(i, j, k) = C.comul.at(k, i, j);
    for (std::size_t k = 0; k < n; ++k) a.unit.coords[k] = C.counit.matrix.at(0, k);
    return a;
}

DualPairing make_dual_pairing(const CoalgebraData& C) {
    return {C, dual_convolution_algebra(C), Matrix::identity(C.space.field(), C.space.dim())};
}

ActionTensor dual_action_tensor(const ActionTensor& act) {
    validate_shape(act);
    const CoalgebraData& C = act.coalgebra();
    const Side side = act.side == Side::left ? Side::right : Side::left;
    ActionTensor out = zero_action(act.hopf, dual_convolution_algebra(C), side);
    const std::size_t nh = act.hopf->dim(), n = C.space.dim();
    for (std::size_t a = 0; a < nh; ++a)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                // coefficient of α_j in the image of α_i is α_i(h_a acting on c_j)
                const Scalar& v = act.coeff(a, j, i);
                if (side == Side::right)
                    out.map.at(i, a, j) = v;
                else
                    out.map.at(a, i, j) = v;
            }
    return out;
}

namespace {

ActionTensor from_dual(const ActionTensor& act, const CoalgebraData& C) {
    validate_shape(act);
    if (!(act.algebra() == dual_convolution_algebra(C)))
        throw ShapeMismatch("action is not on the convolution algebra of C");
    const Side side = act.side == Side::left ? Side::right : Side::left;
    ActionTensor out = zero_action(act.hopf, C, side);
    const std::size_t nh = act.hopf->dim(), n = C.space.dim();
    for (std::size_t a = 0; a < nh; ++a)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const Scalar& v = act.coeff(a, i, j);
                if (side == Side::left)
                    out.map.at(a, j, i) = v;
                else
                    out.map.at(j, a, i) = v;
            }
    return out;
}

void require_pmc(const ActionTensor& act, Side side) {
    if (act.side != side || !act.on_coalgebra())
        throw ShapeMismatch(std::string("expected a ") + (side == Side::left ? "left" : "right") +
                            " action on a coalgebra");
    const Report r = check_partial_module_coalgebra(act);
    if (!r.passed()) throw InputNotPartialAction("fails " + r.failures().front());
}

void require_pma(const ActionTensor& act, Side side) {
    if (act.side != side || act.on_coalgebra())
        throw ShapeMismatch(std::string("expected a ") + (side == Side::left ? "left" : "right") +
                            " action on an algebra");
    const Report r = check_partial_module_algebra(act);
    if (!r.passed()) throw InputNotPartialAction("fails " + r.failures().front());
}

} // namespace

ActionTensor dualize_coalgebra_action(const ActionTensor& act) {
    require_pmc(act, Side::left);
    return dual_action_tensor(act);
}

ActionTensor undualize_algebra_action(const ActionTensor& act, const CoalgebraData& C) {
    require_pma(act, Side::right);
    return from_dual(act, C);
}

ActionTensor dualize_right_coalgebra_action(const ActionTensor& act) {
    require_pmc(act, Side::right);
    return dual_action_tensor(act);
}

ActionTensor undualize_left_algebra_action(const ActionTensor& act, const CoalgebraData& C) {
    require_pma(act, Side::left);
    return from_dual(act, C);
}

Report transfer_report(const ActionTensor& act) {
    Report r("dual transfer");
    const ActionTensor dual = dual_action_tensor(act);
    const Report pmc = check_partial_module_coalgebra(act);
    const Report mc = check_module_coalgebra(act);
    const Report pma = check_partial_module_algebra(dual);
    auto pair = [&](const Report& a, const std::string& la, const Report& b, const std::string& lb) {
        const bool x = a.holds(la), y = b.holds(lb);
        r.add(la + "↔" + lb, x == y, x != y ? "verdicts differ" : x ? "both hold" : "both fail");
    };
    for (const char* n : {"1", "2", "3"}) pair(pmc, std::string("PMC") + n, pma, std::string("PMA") + n);
    pair(pmc, "PMC symmetric", pma, "PMA symmetric");
    for (const char* n : {"1", "2", "3", "4"}) pair(mc, std::string("MC") + n, pma, std::string("MA") + n);
    return r;
}

} // namespace whw
