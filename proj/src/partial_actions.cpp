#include "whw/partial_actions.hpp"

#include "whw/check.hpp"
#include "whw/errors.hpp"

#include <algorithm>
#include <optional>

namespace whw {

const CoalgebraData& ActionTensor::coalgebra() const {
    if (!on_coalgebra()) throw ShapeMismatch("action carrier is an algebra");
    return std::get<CoalgebraData>(carrier);
}

const AlgebraData& ActionTensor::algebra() const {
    if (on_coalgebra()) throw ShapeMismatch("action carrier is a coalgebra");
    return std::get<AlgebraData>(carrier);
}

const FinVec& ActionTensor::carrier_space() const {
    return on_coalgebra() ? std::get<CoalgebraData>(carrier).space : std::get<AlgebraData>(carrier).space;
}

ActionTensor zero_action(std::shared_ptr<const WeakHopfData> hopf, std::variant<CoalgebraData, AlgebraData> carrier,
                         Side side) {
    ActionTensor a{std::move(hopf), std::move(carrier), side, {}};
    const FinVec& X = a.carrier_space();
    a.map = side == Side::left ? Tensor3(a.hopf->space(), X, X) : Tensor3(X, a.hopf->space(), X);
    validate_shape(a);
    return a;
}

void validate_shape(const ActionTensor& act) {
    if (!act.hopf) throw ShapeMismatch("action without a weak Hopf algebra");
    const FinVec& X = act.carrier_space();
    const FinVec& H = act.hopf->space();
    if (act.on_coalgebra())
        validate_shape(act.coalgebra());
    else
        validate_shape(act.algebra());
    if (!(X.field() == H.field())) throw FieldMismatch("action carrier and algebra over different fields");
    const bool ok = act.side == Side::left ? (act.map.a == H && act.map.b == X && act.map.c == X)
                                           : (act.map.a == X && act.map.b == H && act.map.c == X);
    if (!ok) throw ShapeMismatch("action tensor does not match H and the carrier");
}

bool operator==(const ActionTensor& a, const ActionTensor& b) {
    return *a.hopf == *b.hopf && a.carrier == b.carrier && a.side == b.side && a.map == b.map;
}

ActionTensor as_left(const ActionTensor& act) {
    validate_shape(act);
    if (act.side == Side::left) return act;
    auto hopf = std::make_shared<const WeakHopfData>(op_cop(*act.hopf));
    std::variant<CoalgebraData, AlgebraData> carrier =
        act.on_coalgebra() ? std::variant<CoalgebraData, AlgebraData>(coopposite(act.coalgebra()))
                           : std::variant<CoalgebraData, AlgebraData>(opposite(act.algebra()));
    ActionTensor out = zero_action(hopf, std::move(carrier), Side::left);
    const std::size_t nh = act.hopf->dim(), nx = act.carrier_space().dim();
    for (std::size_t i = 0; i < nh; ++i)
        for (std::size_t j = 0; j < nx; ++j)
            for (std::size_t k = 0; k < nx; ++k) out.map.at(i, j, k) = act.map.at(j, i, k);
    return out;
}

ActionTensor regular_action(std::shared_ptr<const WeakHopfData> hopf) {
    ActionTensor a = zero_action(hopf, hopf->coalg(), Side::left);
    a.map.entries = hopf->alg().mul.entries;
    return a;
}

ActionTensor antipode_twisted_action(std::shared_ptr<const WeakHopfData> hopf) {
    ActionTensor a = zero_action(hopf, hopf->coalg(), Side::left);
    const std::size_t n = hopf->dim();
    const Matrix& S = hopf->antipode().matrix;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < n; ++l) {
            if (S.at(l, i).is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) a.map.at(i, j, k) += S.at(l, i) * hopf->alg().mul.at(j, l, k);
        }
    return a;
}

AlgebraData restrict_algebra(const AlgebraData& A, const LinMap& inclusion) {
    const LinMap G = left_inverse_on_image(inclusion);
    const LinMap m = bilinear_as_map(A.mul);
    const LinMap prod = compose(m, map_tensor(inclusion, inclusion));
    const LinMap coords = compose(G, prod);
    if (!equal(compose(inclusion, coords), prod)) throw ShapeMismatch("subspace is not closed under the product");
    const Vector u = G.apply(A.unit);
    if (!(inclusion.apply(u) == A.unit)) throw ShapeMismatch("subspace does not contain the unit");
    const FinVec& X = inclusion.domain;
    AlgebraData out{X, Tensor3(X, X, X), u};
    const std::size_t n = X.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) out.mul.at(i, j, k) = coords.matrix.at(k, i * n + j);
    return out;
}

ActionTensor target_action(std::shared_ptr<const WeakHopfData> hopf) {
    const FinVec& V = hopf->space();
    const auto cols = image_basis(hopf->eps_t());
    std::vector<std::string> labels;
    for (auto c : cols) labels.push_back("ε_t(" + V.label(c) + ")");
    const FinVec X(V.field(), labels);
    LinMap inc = LinMap::zero(X, V);
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t r = 0; r < V.dim(); ++r) inc.matrix.at(r, j) = hopf->eps_t().matrix.at(r, cols[j]);
    ActionTensor a = zero_action(hopf, restrict_algebra(hopf->alg(), inc), Side::left);
    const LinMap back = compose(left_inverse_on_image(inc), hopf->eps_t());
    const std::size_t n = hopf->dim(), d = X.dim();
    for (std::size_t i = 0; i < n; ++i) {
        LinMap Li = LinMap::zero(V, V); // left multiplication by h_i
        for (std::size_t c = 0; c < n; ++c)
            for (std::size_t k = 0; k < n; ++k) Li.matrix.at(k, c) = hopf->alg().mul.at(i, c, k);
        const LinMap Ai = compose(back, compose(Li, inc));
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) a.map.at(i, j, k) = Ai.matrix.at(k, j);
    }
    return a;
}

ActionTensor isotropy_partial_action(std::shared_ptr<const WeakHopfData> hopf, const FiniteGroupoid& G,
                                     std::size_t e) {
    if (!G.is_identity(e)) throw ShapeMismatch("isotropy action needs an identity element");
    if (hopf->dim() != G.size()) throw ShapeMismatch("algebra is not the groupoid algebra of G");
    const auto Ge = G.isotropy(e);
    CoalgebraData C = coalgebras::grouplike(hopf->field(), Ge.size());
    std::vector<std::string> labels;
    for (auto g : Ge) labels.push_back("δ_" + G.label(g));
    const FinVec X(hopf->field(), labels);
    C.space = X;
    C.comul = Tensor3(X, X, X);
    for (std::size_t i = 0; i < X.dim(); ++i) C.comul.at(i, i, i) = Scalar::one(hopf->field());
    C.counit.domain = X;
    ActionTensor a = zero_action(hopf, std::move(C), Side::left);
    for (std::size_t j = 0; j < X.dim(); ++j) a.map.at(e, j, j) = Scalar::one(hopf->field());
    return a;
}

namespace {

// Sparse operators of a left action plus its carrier.
struct ActionOps {
    const WeakHopfData& H;
    const HopfOps& h;
    SparseOp act;
    std::optional<CoalgebraOps> C;
    std::optional<AlgebraOps> A;
    ProbeSet BH, BX;

    explicit ActionOps(const ActionTensor& L)
        : H(*L.hopf), h(L.hopf->ops()), act(SparseOp::bilinear(L.map)), BH(basis_probes(L.hopf->space())),
          BX(basis_probes(L.carrier_space())) {
        if (L.on_coalgebra())
            C.emplace(L.coalgebra());
        else
            A.emplace(L.algebra());
    }
    MultiVec a(const MultiVec& v, std::size_t s) const { return apply(v, s, act); }
    MultiVec dC(const MultiVec& v, std::size_t s) const { return apply(v, s, C->d); }
    MultiVec eC(const MultiVec& v, std::size_t s) const { return apply(v, s, C->e); }
    MultiVec mA(const MultiVec& v, std::size_t s) const { return apply(v, s, A->m); }
    MultiVec uA(const MultiVec& v, std::size_t s) const { return apply(v, s, A->u); }
};

MultiVec cat(const Args& x) {
    MultiVec v = *x[0];
    for (std::size_t i = 1; i < x.size(); ++i) v = v.otimes(*x[i]);
    return v;
}

const char* kRightNote = "right action, checked as a left action of H^{op,cop}";

void note_side(Report& r, const ActionTensor& act) {
    if (act.side == Side::right) r.add("side", true, kRightNote, false);
}

// Coalgebra-side equations shared by the global and partial checkers.
struct CoalgebraEqs {
    const ActionOps& o;
    MultiVec one_c(const Args& x) const { return o.a(o.h.one().otimes(*x[0]), 0); }
    MultiVec delta_hc(const Args& x) const { return o.dC(o.a(cat(x), 0), 0); }
    MultiVec h1c1_h2c2(const Args& x) const {
        MultiVec t = o.dC(o.h.d(cat(x), 0), 2).permute({0, 2, 1, 3});
        return o.a(o.a(t, 0), 1);
    }
    MultiVec h_kc(const Args& x) const { return o.a(o.a(cat(x), 1), 0); }
    MultiVec hk_c(const Args& x) const { return o.a(o.h.m(cat(x), 0), 0); }
    // (hk₁·c₁)ε(k₂·c₂)
    MultiVec pmc3(const Args& x) const {
        MultiVec t = o.dC(o.h.d(cat(x), 1), 3).permute({0, 1, 3, 2, 4});
        return o.a(o.h.m(o.eC(o.a(t, 3), 3), 0), 0);
    }
    // ε(k₁·c₁)(hk₂·c₂)
    MultiVec pmc3_sym(const Args& x) const {
        MultiVec t = o.dC(o.h.d(cat(x), 1), 3).permute({0, 2, 4, 1, 3});
        return o.a(o.h.m(o.eC(o.a(t, 3), 3), 0), 0);
    }
    MultiVec eps_hc(const Args& x) const { return o.eC(o.a(cat(x), 0), 0); }
    MultiVec eps_es_hc(const Args& x) const { return o.eC(o.a(o.h.es(cat(x), 0), 0), 0); }
};

} // namespace

ModuleCoalgebraVerdict check_module_coalgebra(const ActionTensor& act) {
    Report r("module coalgebra");
    const ActionTensor L = as_left(act);
    if (!L.on_coalgebra()) throw ShapeMismatch("module coalgebra check needs a coalgebra carrier");
    note_side(r, act);
    const ActionOps o(L);
    const CoalgebraEqs q{o};
    const bool mc1 = check_equal(
        r, "MC1", {&o.BX}, [&](const Args& x) { return q.one_c(x); }, [&](const Args& x) { return *x[0]; });
    const bool mc2 = check_equal(
        r, "MC2", {&o.BH, &o.BX}, [&](const Args& x) { return q.delta_hc(x); },
        [&](const Args& x) { return q.h1c1_h2c2(x); });
    const bool mc3 = check_equal(
        r, "MC3", {&o.BH, &o.BH, &o.BX}, [&](const Args& x) { return q.h_kc(x); },
        [&](const Args& x) { return q.hk_c(x); });
    const bool mc4 = check_equal(
        r, "MC4", {&o.BH, &o.BX}, [&](const Args& x) { return q.eps_hc(x); },
        [&](const Args& x) { return q.eps_es_hc(x); });
    r.add("MC1-MC3 ⇒ MC4", !(mc1 && mc2 && mc3) || mc4, "MC4 follows from the other three");
    return r;
}

ModuleCoalgebraVerdict check_partial_module_coalgebra(const ActionTensor& act) {
    Report r("partial module coalgebra");
    const ActionTensor L = as_left(act);
    if (!L.on_coalgebra()) throw ShapeMismatch("partial module coalgebra check needs a coalgebra carrier");
    note_side(r, act);
    const ActionOps o(L);
    const CoalgebraEqs q{o};
    const bool p1 = check_equal(
        r, "PMC1", {&o.BX}, [&](const Args& x) { return q.one_c(x); }, [&](const Args& x) { return *x[0]; });
    const bool p2 = check_equal(
        r, "PMC2", {&o.BH, &o.BX}, [&](const Args& x) { return q.delta_hc(x); },
        [&](const Args& x) { return q.h1c1_h2c2(x); });
    const bool p3 = check_equal(
        r, "PMC3", {&o.BH, &o.BH, &o.BX}, [&](const Args& x) { return q.h_kc(x); },
        [&](const Args& x) { return q.pmc3(x); });
    check_equal(
        r, "PMC symmetric", {&o.BH, &o.BH, &o.BX}, [&](const Args& x) { return q.h_kc(x); },
        [&](const Args& x) { return q.pmc3_sym(x); }, false);
    const bool crit = check_equal(
        r, "global criterion", {&o.BH, &o.BX}, [&](const Args& x) { return q.eps_hc(x); },
        [&](const Args& x) { return q.eps_es_hc(x); }, false);
    Report scratch;
    const bool mc3 = check_equal(
        scratch, "MC3", {&o.BH, &o.BH, &o.BX}, [&](const Args& x) { return q.h_kc(x); },
        [&](const Args& x) { return q.hk_c(x); });
    r.add("global", mc3, "MC3 holds", false);
    r.add("global ⇔ criterion", !(p1 && p2 && p3) || crit == mc3,
          "for a partial action, globality is equivalent to the counit criterion");
    return r;
}

Report check_ht_hs_propositions(const ActionTensor& act) {
    Report r("H_t and H_s identities");
    const ActionTensor L = as_left(act);
    if (!L.on_coalgebra()) throw ShapeMismatch("H_t/H_s identities need a coalgebra carrier");
    note_side(r, act);
    const ActionOps o(L);
    const CoalgebraEqs q{o};
    const ProbeSet Ht = vector_probes(o.H.space(), o.H.Ht_basis(), "H_t");
    const ProbeSet Hs = vector_probes(o.H.space(), o.H.Hs_basis(), "H_s");
    const Report pmc = check_partial_module_coalgebra(L);
    if (!pmc.passed()) {
        r.skip("H_t(i)", "not a partial action");
        r.skip("H_t(ii)", "not a partial action");
        r.skip("H_t(iii)", "not a partial action");
        r.skip("H_s(i)", "not a partial action");
        r.skip("H_s(ii)", "not a partial action");
        return r;
    }
    check_equal(
        r, "H_t(i)", {&Ht, &o.BH, &o.BX}, [&](const Args& x) { return q.h_kc(x); },
        [&](const Args& x) { return q.hk_c(x); });
    check_equal(
        r, "H_t(ii)", {&Ht, &o.BX}, [&](const Args& x) { return q.delta_hc(x); },
        [&](const Args& x) { return o.a(o.dC(cat(x), 1), 0); });
    check_equal(
        r, "H_t(iii)", {&Ht, &o.BX}, [&](const Args& x) { return q.eps_hc(x); },
        [&](const Args& x) { return q.eps_es_hc(x); });
    if (!pmc.holds("PMC symmetric")) {
        r.skip("H_s(i)", "action is not symmetric");
        r.skip("H_s(ii)", "action is not symmetric");
        return r;
    }
    check_equal(
        r, "H_s(i)", {&Hs, &o.BH, &o.BX}, [&](const Args& x) { return q.h_kc(x); },
        [&](const Args& x) { return q.hk_c(x); });
    check_equal(
        r, "H_s(ii)", {&Hs, &o.BX}, [&](const Args& x) { return q.delta_hc(x); },
        [&](const Args& x) { return o.a(o.dC(cat(x), 1).permute({0, 2, 1}), 0).swap(0, 1); });
    return r;
}

namespace {

void algebra_checks(Report& r, const ActionOps& o, bool partial) {
    auto h_ab = [&](const Args& x) { return o.a(o.mA(cat(x), 1), 0); };
    auto h1a_h2b = [&](const Args& x) {
        MultiVec t = o.h.d(cat(x), 0).permute({0, 2, 1, 3});
        return o.mA(o.a(o.a(t, 0), 1), 0);
    };
    auto h_ka = [&](const Args& x) { return o.a(o.a(cat(x), 1), 0); };
    auto hk_a = [&](const Args& x) { return o.a(o.h.m(cat(x), 0), 0); };
    // (h₁·1_A)(h₂k·a)
    auto pma3 = [&](const Args& x) {
        MultiVec t = o.a(o.h.m(o.h.d(cat(x), 0), 1), 1); // h₁, h₂k·a
        return o.mA(o.a(o.uA(t, 1), 0), 0);
    };
    // (h₁k·a)(h₂·1_A)
    auto pma3_sym = [&](const Args& x) {
        MultiVec t = o.a(o.h.m(o.h.d(cat(x), 0).permute({0, 2, 3, 1}), 0), 0); // h₁k·a, h₂
        return o.mA(o.a(o.uA(t, 2), 1), 0);
    };
    auto one_a = [&](const Args& x) { return o.a(o.h.one().otimes(*x[0]), 0); };
    auto id = [](const Args& x) { return *x[0]; };
    auto h_1 = [&](const Args& x) { return o.a(o.uA(*x[0], 1), 0); };
    auto et_1 = [&](const Args& x) { return o.a(o.uA(o.h.et(*x[0], 0), 1), 0); };
    if (partial) {
        check_equal(r, "PMA1", {&o.BX}, one_a, id);
        check_equal(r, "PMA2", {&o.BH, &o.BX, &o.BX}, h_ab, h1a_h2b);
        check_equal(r, "PMA3", {&o.BH, &o.BH, &o.BX}, h_ka, pma3);
        check_equal(r, "PMA symmetric", {&o.BH, &o.BH, &o.BX}, h_ka, pma3_sym, false);
    }
    check_equal(r, "MA1", {&o.BX}, one_a, id, !partial);
    check_equal(r, "MA2", {&o.BH, &o.BX, &o.BX}, h_ab, h1a_h2b, !partial);
    check_equal(r, "MA3", {&o.BH, &o.BH, &o.BX}, h_ka, hk_a, !partial);
    check_equal(r, "MA4", {&o.BH}, h_1, et_1, !partial);
}

} // namespace

Report check_partial_module_algebra(const ActionTensor& act) {
    Report r("partial module algebra");
    const ActionTensor L = as_left(act);
    if (L.on_coalgebra()) throw ShapeMismatch("module algebra check needs an algebra carrier");
    note_side(r, act);
    algebra_checks(r, ActionOps(L), true);
    return r;
}

Report check_module_algebra(const ActionTensor& act) {
    Report r("module algebra");
    const ActionTensor L = as_left(act);
    if (L.on_coalgebra()) throw ShapeMismatch("module algebra check needs an algebra carrier");
    note_side(r, act);
    algebra_checks(r, ActionOps(L), false);
    return r;
}

LambdaFunctional lambda_from_values(std::shared_ptr<const WeakHopfData> hopf, const std::vector<Scalar>& values) {
    if (values.size() != hopf->dim()) throw ShapeMismatch("λ needs one value per basis element");
    LinMap lam = LinMap::zero(hopf->space(), FinVec::ground(hopf->field()));
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!(values[i].field() == hopf->field())) throw FieldMismatch("λ value over another field");
        lam.matrix.at(0, i) = values[i];
    }
    return {std::move(hopf), std::move(lam)};
}

ActionTensor lambda_action(const LambdaFunctional& lf, const CoalgebraData& C, Side side) {
    ActionTensor a = zero_action(lf.hopf, C, side);
    for (std::size_t i = 0; i < lf.hopf->dim(); ++i)
        for (std::size_t j = 0; j < C.space.dim(); ++j) {
            const Scalar& v = lf.lam.matrix.at(0, i);
            if (side == Side::left)
                a.map.at(i, j, j) = v;
            else
                a.map.at(j, i, j) = v;
        }
    return a;
}

namespace {

struct LambdaOps {
    const HopfOps& h;
    SparseOp lam;
    ProbeSet B;
    explicit LambdaOps(const LambdaFunctional& lf)
        : h(lf.hopf->ops()), lam(SparseOp::functional(lf.lam)), B(basis_probes(lf.hopf->space())) {}
    MultiVec l(const MultiVec& v, std::size_t s) const { return apply(v, s, lam); }
};

} // namespace

Report check_lambda_global(const LambdaFunctional& lf) {
    Report r("λ global action");
    const LambdaOps o(lf);
    const Field& f = lf.hopf->field();
    check_equal(
        r, "λ(1)=1", {}, [&](const Args&) { return o.l(o.h.one(), 0); },
        [&](const Args&) { return MultiVec::scalar(Scalar::one(f)); });
    check_equal(
        r, "λ(h)=λ(h₁)λ(h₂)", {&o.B}, [&](const Args& x) { return o.l(*x[0], 0); },
        [&](const Args& x) { return o.l(o.l(o.h.d(*x[0], 0), 0), 0); });
    check_equal(
        r, "λ(h)λ(k)=λ(hk)", {&o.B, &o.B}, [&](const Args& x) { return o.l(o.l(cat(x), 0), 0); },
        [&](const Args& x) { return o.l(o.h.m(cat(x), 0), 0); });
    check_equal(
        r, "λ(h)=λ(ε_s(h))", {&o.B}, [&](const Args& x) { return o.l(*x[0], 0); },
        [&](const Args& x) { return o.l(o.h.es(*x[0], 0), 0); }, false);
    return r;
}

Report check_lambda_partial(const LambdaFunctional& lf) {
    Report r("λ partial action");
    const LambdaOps o(lf);
    const Field& f = lf.hopf->field();
    check_equal(
        r, "λ(1)=1", {}, [&](const Args&) { return o.l(o.h.one(), 0); },
        [&](const Args&) { return MultiVec::scalar(Scalar::one(f)); });
    auto lhs = [&](const Args& x) { return o.l(o.l(cat(x), 0), 0); };
    check_equal(r, "λ(h)λ(k)=λ(hk₁)λ(k₂)", {&o.B, &o.B}, lhs, [&](const Args& x) {
        return o.l(o.l(o.h.m(o.h.d(cat(x), 1), 0), 0), 0);
    });
    check_equal(
        r, "λ(h)λ(k)=λ(k₁)λ(hk₂)", {&o.B, &o.B}, lhs,
        [&](const Args& x) { return o.l(o.l(o.h.m(o.h.d(cat(x), 1).swap(1, 2), 0), 0), 0); }, false);
    check_equal(
        r, "λ(h)=λ(ε_s(h))", {&o.B}, [&](const Args& x) { return o.l(*x[0], 0); },
        [&](const Args& x) { return o.l(o.h.es(*x[0], 0), 0); }, false);
    return r;
}

bool is_group_in(const FiniteGroupoid& G, const std::vector<std::size_t>& subset) {
    if (subset.empty()) return false;
    auto in = [&](std::size_t g) { return std::find(subset.begin(), subset.end(), g) != subset.end(); };
    const std::size_t e = G.r(subset.front());
    for (auto g : subset)
        if (G.r(g) != e || G.d(g) != e) return false;
    for (auto g : subset) {
        if (!in(G.inverse(g))) return false;
        for (auto h : subset)
            if (!in(G.product(g, h))) return false;
    }
    return in(e);
}

namespace {

std::vector<Scalar> lambda_values(const LambdaFunctional& lf, const FiniteGroupoid& G, const std::string& prefix) {
    if (lf.hopf->dim() != G.size()) throw ShapeMismatch("λ is not defined on the algebra of G");
    std::vector<Scalar> v;
    for (std::size_t g = 0; g < G.size(); ++g) {
        if (lf.hopf->space().label(g) != prefix + G.label(g))
            throw ShapeMismatch("basis of the algebra does not follow the groupoid order");
        v.push_back(lf.lam.matrix.at(0, g));
    }
    return v;
}

std::string list_labels(const FiniteGroupoid& G, const std::vector<std::size_t>& V) {
    std::string s = "{";
    for (std::size_t i = 0; i < V.size(); ++i) s += (i ? ", " : "") + G.label(V[i]);
    return s + "}";
}

void finish(GroupCriterionVerdict& v, const LambdaFunctional& lf, const FiniteGroupoid& G) {
    v.lambda_partial = check_lambda_partial(lf).passed();
    v.agrees = v.criterion == v.lambda_partial;
    v.report.add("V is a group", v.v_is_group, "V = " + list_labels(G, v.V), false);
    v.report.add("λ matches V", v.values_match, {}, false);
    v.report.add("criterion", v.criterion, {}, false);
    v.report.add("λ partial", v.lambda_partial, {}, false);
    v.report.add("criterion ⇔ λ partial", v.agrees);
}

} // namespace

GroupCriterionVerdict check_k_partial_action_group_criterion(const LambdaFunctional& lf, const FiniteGroupoid& G) {
    const auto vals = lambda_values(lf, G, "δ_");
    const Field& f = lf.hopf->field();
    GroupCriterionVerdict v;
    v.report = Report("kG partial action on k");
    for (std::size_t g = 0; g < G.size(); ++g)
        if (vals[g].is_one() && vals[G.d(g)].is_one()) v.V.push_back(g);
    v.v_is_group = is_group_in(G, v.V);
    v.values_match = true;
    for (std::size_t g = 0; g < G.size(); ++g) {
        const bool in = std::find(v.V.begin(), v.V.end(), g) != v.V.end();
        if (!(vals[g] == (in ? Scalar::one(f) : Scalar::zero(f)))) v.values_match = false;
    }
    v.criterion = v.v_is_group && v.values_match;
    finish(v, lf, G);
    return v;
}

GroupCriterionVerdict check_dual_k_partial_action_criterion(const LambdaFunctional& lf, const FiniteGroupoid& G) {
    const auto vals = lambda_values(lf, G, "p_");
    const Field& f = lf.hopf->field();
    GroupCriterionVerdict v;
    v.report = Report("(kG)* partial action on k");
    for (std::size_t g = 0; g < G.size(); ++g)
        if (!vals[g].is_zero() && !vals[G.inverse(g)].is_zero()) v.V.push_back(g);
    v.v_is_group = is_group_in(G, v.V);
    v.char_ok = !v.V.empty() && !char_divides(f, static_cast<long long>(v.V.size()));
    v.values_match = v.char_ok;
    if (v.char_ok) {
        const Scalar inv = Scalar::from_int(f, static_cast<long long>(v.V.size())).inverse();
        for (std::size_t g = 0; g < G.size(); ++g) {
            const bool in = std::find(v.V.begin(), v.V.end(), g) != v.V.end();
            if (!(vals[g] == (in ? inv : Scalar::zero(f)))) v.values_match = false;
        }
    }
    v.criterion = v.v_is_group && v.values_match;
    v.report.add("char ∤ |V|", v.char_ok, {}, false);
    finish(v, lf, G);
    return v;
}

CoalgebraData restrict_coalgebra(const CoalgebraData& C, const LinMap& inclusion) {
    const LinMap G = left_inverse_on_image(inclusion);
    const LinMap D = cotensor_as_map(C.comul);
    const LinMap Di = compose(D, inclusion);
    const LinMap coords = compose(map_tensor(G, G), Di);
    if (!equal(compose(map_tensor(inclusion, inclusion), coords), Di))
        throw NotSubcoalgebra("Δ does not map the subspace into its tensor square");
    const FinVec& X = inclusion.domain;
    CoalgebraData out{X, Tensor3(X, X, X), compose(C.counit, inclusion)};
    const std::size_t n = X.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) out.comul.at(i, j, k) = coords.matrix.at(j * n + k, i);
    return out;
}

namespace {

InducedAction induce_left(const ActionTensor& L, const LinMap& proj) {
    const CoalgebraData& C = L.coalgebra();
    if (!(proj.domain == C.space) || !(proj.codomain == C.space)) throw ShapeMismatch("projection is not on C");
    if (!equal(compose(proj, proj), proj)) throw NotIdempotent("π∘π ≠ π");
    const auto cols = image_basis(proj);
    const Field& f = C.space.field();
    std::vector<std::string> labels;
    for (auto c : cols) {
        const Vector col = Vector::from_column(C.space, proj.matrix, c);
        labels.push_back(col == Vector::basis(C.space, c) ? C.space.label(c) : "π(" + C.space.label(c) + ")");
    }
    const FinVec X(f, labels);
    LinMap inc = LinMap::zero(X, C.space);
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t r = 0; r < C.space.dim(); ++r) inc.matrix.at(r, j) = proj.matrix.at(r, cols[j]);
    CoalgebraData Dc = restrict_coalgebra(C, inc);
    const LinMap back = left_inverse_on_image(inc);
    ActionTensor out = zero_action(L.hopf, Dc, Side::left);
    const std::size_t nh = L.hopf->dim(), nc = C.space.dim(), nd = X.dim();
    for (std::size_t i = 0; i < nh; ++i) {
        LinMap Ai = LinMap::zero(C.space, C.space);
        for (std::size_t c = 0; c < nc; ++c)
            for (std::size_t k = 0; k < nc; ++k) Ai.matrix.at(k, c) = L.map.at(i, c, k);
        const LinMap Bi = compose(back, compose(proj, compose(Ai, inc)));
        for (std::size_t j = 0; j < nd; ++j)
            for (std::size_t k = 0; k < nd; ++k) out.map.at(i, j, k) = Bi.matrix.at(k, j);
    }

    Report r("induced partial action");
    r.add("input is a module coalgebra", check_module_coalgebra(L).passed());
    const ActionOps o(L);
    const SparseOp pi = SparseOp::from_map(proj);
    auto p = [&](const MultiVec& v, std::size_t s) { return apply(v, s, pi); };
    ProbeSet Dp;
    for (std::size_t j = 0; j < nd; ++j)
        Dp.push_back({MultiVec::from_vector(Vector::from_column(C.space, inc.matrix, j)), X.label(j)});
    check_equal(
        r, "Ind(i)", {&o.BH, &Dp}, [&](const Args& x) { return p(p(o.dC(o.a(cat(x), 0), 0), 0), 1); },
        [&](const Args& x) { return o.dC(p(o.a(cat(x), 0), 0), 0); });
    auto lhs2 = [&](const Args& x) { return p(o.a(p(o.a(cat(x), 1), 1), 0), 0); };
    auto rhs2 = [&](const std::vector<std::size_t>& perm) {
        return [&, perm](const Args& x) {
            MultiVec t = o.dC(o.h.d(cat(x), 1), 3).permute(perm);
            return p(o.a(o.h.m(o.eC(p(o.a(t, 3), 3), 3), 0), 0), 0);
        };
    };
    const bool i1 = r.holds("Ind(i)");
    const bool i2 = check_equal(r, "Ind(ii)", {&o.BH, &o.BH, &Dp}, lhs2, rhs2({0, 1, 3, 2, 4}));
    check_equal(r, "Ind symmetric", {&o.BH, &o.BH, &Dp}, lhs2, rhs2({0, 2, 4, 1, 3}), false);
    check_equal(
        r, "Ind global", {&o.BH, &Dp}, [&](const Args& x) { return o.eC(p(o.a(cat(x), 0), 0), 0); },
        [&](const Args& x) { return o.eC(p(o.a(o.h.es(cat(x), 0), 0), 0), 0); }, false);
    const bool pmc = check_partial_module_coalgebra(out).passed();
    r.add("induced action is partial", !(i1 && i2) || pmc, "conditions (i) and (ii) give PMC1-PMC3");
    return {std::move(out), std::move(inc), std::move(r)};
}

} // namespace

InducedAction induce_partial_action(const ActionTensor& global, const LinMap& proj) {
    validate_shape(global);
    if (!global.on_coalgebra()) throw ShapeMismatch("induced actions need a coalgebra carrier");
    if (global.side == Side::left) return induce_left(global, proj);
    InducedAction res = induce_left(as_left(global), proj);
    // back to a right action of the original algebra
    ActionTensor out = zero_action(global.hopf, coopposite(res.action.coalgebra()), Side::right);
    const std::size_t nh = global.hopf->dim(), nd = res.inclusion.domain.dim();
    for (std::size_t i = 0; i < nh; ++i)
        for (std::size_t j = 0; j < nd; ++j)
            for (std::size_t k = 0; k < nd; ++k) out.map.at(j, i, k) = res.action.map.at(i, j, k);
    res.action = std::move(out);
    res.verdict.add("side", true, kRightNote, false);
    return res;
}

} // namespace whw
