#include "whw/errors.hpp"
#include "whw/groupoid_action.hpp"

#include <doctest.h>

#include <random>

using namespace whw;

namespace {

const Field Q = Field::rationals();

FiniteGroupoid G_of(const GroupoidSpec& s) { return validate_groupoid(s); }
FiniteGroupoid two_object() { return G_of(two_object_spec()); }
FiniteGroupoid union23() { return G_of(disjoint_union_spec({"Z/2", "Z/3"})); }

std::shared_ptr<const WeakHopfData> kG(const FiniteGroupoid& G, const Field& f = Q) {
    return std::make_shared<const WeakHopfData>(groupoid_algebra(G, f));
}
std::shared_ptr<const WeakHopfData> kG_dual(const FiniteGroupoid& G, const Field& f = Q) {
    return std::make_shared<const WeakHopfData>(dual_groupoid_algebra(G, f));
}

std::vector<CoalgebraData> test_coalgebras(const Field& f) {
    return {coalgebras::grouplike(f, 2), coalgebras::divided_power(f), coalgebras::matrix(f, 2)};
}

std::vector<Scalar> indicator(const FiniteGroupoid& G, const std::vector<std::size_t>& S, const Field& f) {
    std::vector<Scalar> v(G.size(), Scalar::zero(f));
    for (auto g : S) v[g] = Scalar::one(f);
    return v;
}

// Right multiplication c↼h = ch as a right action on the coalgebra H.
ActionTensor right_regular(std::shared_ptr<const WeakHopfData> H) {
    ActionTensor a = zero_action(H, H->coalg(), Side::right);
    const std::size_t n = H->dim();
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) a.map.at(j, i, k) = H->alg().mul.at(j, i, k);
    return a;
}

LinMap projection_onto(const FinVec& V, const std::vector<std::size_t>& keep) {
    LinMap p = LinMap::zero(V, V);
    for (auto i : keep) p.matrix.at(i, i) = Scalar::one(V.field());
    return p;
}

} // namespace

TEST_CASE("global module coalgebras") {
    for (const auto& G : {two_object(), union23(), G_of(trivial_groupoid_spec(2))}) {
        auto H = kG(G);
        const Report reg = check_module_coalgebra(regular_action(H));
        INFO(reg.to_text());
        CHECK(reg.passed());
        CHECK(check_module_coalgebra(antipode_twisted_action(H)).passed());
        CHECK(check_module_coalgebra(regular_action(kG_dual(G))).passed());
        CHECK(check_module_coalgebra(right_regular(H)).passed());
        // global implies partial and the counit criterion
        const Report p = check_partial_module_coalgebra(regular_action(H));
        CHECK(p.passed());
        CHECK(p.holds("global criterion"));
        CHECK(p.holds("global"));
    }
    auto A = std::make_shared<const WeakHopfData>(abelian_group_weak_hopf({{3}}, Q));
    CHECK(check_module_coalgebra(regular_action(A)).passed());
}

TEST_CASE("the zero action fails the unit axioms with a witness") {
    auto H = kG(two_object());
    const ActionTensor z = zero_action(H, coalgebras::grouplike(Q, 2), Side::left);
    const Report r = check_module_coalgebra(z);
    const Verdict* v = r.find("MC1");
    REQUIRE(v != nullptr);
    CHECK(v->status == Status::fail);
    REQUIRE(v->witness);
    CHECK(v->witness->labels == std::vector<std::string>{"c1"});
    CHECK_FALSE(check_partial_module_coalgebra(z).holds("PMC1"));

    AlgebraData alg = H->alg();
    const ActionTensor za = zero_action(H, alg, Side::left);
    CHECK_FALSE(check_partial_module_algebra(za).holds("PMA1"));
}

TEST_CASE("isotropy partial action is partial, and global only when nothing leaves e") {
    for (const auto& G : {two_object(), union23(), G_of(disjoint_union_spec({"Z/3"})), G_of(trivial_groupoid_spec(2))}) {
        auto H = kG(G);
        for (auto e : G.identities()) {
            const ActionTensor a = isotropy_partial_action(H, G, e);
            const Report r = check_partial_module_coalgebra(a);
            INFO(r.to_text());
            CHECK(r.passed());
            CHECK(r.holds("PMC symmetric"));
            // global iff e is the only arrow with source e
            bool whole = true;
            for (std::size_t g = 0; g < G.size(); ++g)
                if (g != e && G.d(g) == e) whole = false;
            CHECK(r.holds("global criterion") == whole);
            CHECK(check_module_coalgebra(a).passed() == whole);
            const Report ht = check_ht_hs_propositions(a);
            INFO(ht.to_text());
            CHECK(ht.passed());
            CHECK(ht.count(Status::skipped) == 0);
        }
    }
}

TEST_CASE("H = H_t: every partial action is global") {
    auto A = std::make_shared<const WeakHopfData>(abelian_group_weak_hopf({{2}}, Q));
    for (const auto& C : test_coalgebras(Q)) {
        const ActionTensor a = lambda_action(lambda_from_values(A, {Scalar::one(Q), Scalar::one(Q)}), C);
        const Report r = check_partial_module_coalgebra(a);
        CHECK(r.passed());
        CHECK(r.holds("global criterion"));
        CHECK(check_module_coalgebra(a).passed());
    }
}

TEST_CASE("λ examples") {
    const auto G = union23();
    auto H = kG(G);
    const std::size_t e1 = G.identities()[0];
    const auto Ge = G.isotropy(e1);
    const LambdaFunctional ind = lambda_from_values(H, indicator(G, Ge, Q));
    CHECK(check_lambda_partial(ind).passed());
    // a whole component acts globally; a proper subgroup does not
    CHECK(check_lambda_global(ind).passed());
    const auto S3 = G_of(disjoint_union_spec({"S3"}));
    std::vector<std::size_t> order2{S3.identities()[0]};
    for (std::size_t g = 0; g < S3.size(); ++g)
        if (!S3.is_identity(g) && S3.inverse(g) == g) {
            order2.push_back(g);
            break;
        }
    const LambdaFunctional sub = lambda_from_values(kG(S3), indicator(S3, order2, Q));
    CHECK(check_lambda_partial(sub).passed());
    CHECK_FALSE(check_lambda_global(sub).passed());
    CHECK(check_k_partial_action_group_criterion(sub, S3).criterion);
    for (const auto& C : test_coalgebras(Q)) {
        const Report r = check_partial_module_coalgebra(lambda_action(ind, C));
        CHECK(r.passed());
        CHECK(check_ht_hs_propositions(lambda_action(ind, C)).passed());
    }
    // λ = ε on a genuinely weak algebra: ε(1) = |G₀|
    LambdaFunctional eps{H, H->coalg().counit};
    CHECK_FALSE(check_lambda_partial(eps).holds("λ(1)=1"));
    CHECK_FALSE(check_partial_module_coalgebra(lambda_action(eps, coalgebras::grouplike(Q, 2))).holds("PMC1"));

    // non-closed subset: an element without its inverse
    const std::size_t e2 = G.identities()[1];
    auto Z3 = G.isotropy(e2);
    std::vector<std::size_t> broken{e2};
    for (auto g : Z3)
        if (g != e2) {
            broken.push_back(g);
            break;
        }
    CHECK_FALSE(check_lambda_partial(lambda_from_values(H, indicator(G, broken, Q))).passed());

    auto A = std::make_shared<const WeakHopfData>(abelian_group_weak_hopf({{2}, }, Q));
    const LambdaFunctional one = lambda_from_values(A, {Scalar::one(Q), Scalar::one(Q)});
    CHECK(check_lambda_global(one).passed());
    CHECK(check_module_coalgebra(lambda_action(one, coalgebras::divided_power(Q))).passed());
}

TEST_CASE("λ checkers agree with the full checkers on every carrier and side") {
    std::mt19937_64 rng(20261016);
    for (const auto& G : {two_object(), union23(), G_of(disjoint_union_spec({"Z/2"}))})
        for (const Field& f : {Q, Field::prime(2), Field::prime(3)}) {
            auto H = kG(G, f);
            auto Hd = kG_dual(G, f);
            for (int trial = 0; trial < 6; ++trial) {
                std::vector<Scalar> vals;
                for (std::size_t g = 0; g < G.size(); ++g)
                    vals.push_back(Scalar::from_int(f, static_cast<long long>(rng() % 3)));
                for (auto hopf : {H, Hd}) {
                    const LambdaFunctional lf = lambda_from_values(hopf, vals);
                    const bool partial = check_lambda_partial(lf).passed();
                    const bool global = check_lambda_global(lf).passed();
                    for (const auto& C : test_coalgebras(f))
                        for (Side side : {Side::left, Side::right}) {
                            const ActionTensor a = lambda_action(lf, C, side);
                            CHECK(check_partial_module_coalgebra(a).passed() == partial);
                            CHECK(check_module_coalgebra(a).passed() == global);
                        }
                }
            }
        }
}

TEST_CASE("kG group criterion") {
    const auto G = union23();
    auto H = kG(G);
    const std::size_t e1 = G.identities()[0];
    auto v = check_k_partial_action_group_criterion(lambda_from_values(H, indicator(G, G.isotropy(e1), Q)), G);
    CHECK(v.v_is_group);
    CHECK(v.criterion);
    CHECK(v.lambda_partial);
    CHECK(v.report.passed());

    const auto T = two_object();
    auto HT = kG(T);
    std::vector<Scalar> ones(T.size(), Scalar::one(Q));
    auto w = check_k_partial_action_group_criterion(lambda_from_values(HT, ones), T);
    CHECK_FALSE(w.v_is_group);
    CHECK_FALSE(w.lambda_partial);
    CHECK(w.agrees);

    auto u = check_k_partial_action_group_criterion(lambda_from_values(H, indicator(G, {e1}, Q)), G);
    CHECK(u.V == std::vector<std::size_t>{e1});
    CHECK(u.criterion);
    CHECK(u.agrees);
}

TEST_CASE("criteria agree with the λ checker on random indicators") {
    std::mt19937_64 rng(7);
    const std::vector<FiniteGroupoid> gs{two_object(), union23(), G_of(disjoint_union_spec({"S3"})),
                                         G_of(disjoint_union_spec({"Z/2", "Z/2"}))};
    int count = 0;
    for (const auto& G : gs)
        for (const Field& f : {Q, Field::prime(2), Field::prime(3)})
            for (int t = 0; t < 8; ++t) {
                std::vector<std::size_t> S;
                for (std::size_t g = 0; g < G.size(); ++g)
                    if (rng() % 2) S.push_back(g);
                auto v = check_k_partial_action_group_criterion(lambda_from_values(kG(G, f), indicator(G, S, f)), G);
                CHECK(v.agrees);
                // dual side: scaled indicators, sometimes by 1/|S|
                std::vector<Scalar> vals(G.size(), Scalar::zero(f));
                const bool scale = rng() % 2 && !S.empty() && !char_divides(f, static_cast<long long>(S.size()));
                for (auto g : S)
                    vals[g] = scale ? Scalar::from_int(f, static_cast<long long>(S.size())).inverse() : Scalar::one(f);
                auto d = check_dual_k_partial_action_criterion(lambda_from_values(kG_dual(G, f), vals), G);
                CHECK(d.agrees);
                ++count;
            }
    CHECK(count >= 20);
}

TEST_CASE("(kG)* criterion examples") {
    const auto G = G_of(disjoint_union_spec({"Z/2"}));
    const Scalar half = Scalar::rational(1, 2);
    auto v = check_dual_k_partial_action_criterion(lambda_from_values(kG_dual(G), {half, half}), G);
    CHECK(v.V.size() == 2);
    CHECK(v.criterion);
    CHECK(v.lambda_partial);

    const Field F2 = Field::prime(2);
    auto w = check_dual_k_partial_action_criterion(
        lambda_from_values(kG_dual(G, F2), {Scalar::one(F2), Scalar::one(F2)}), G);
    CHECK_FALSE(w.char_ok);
    CHECK_FALSE(w.criterion);
    CHECK_FALSE(w.lambda_partial);
    CHECK(w.agrees);

    const std::size_t e = G.identities()[0];
    auto u = check_dual_k_partial_action_criterion(lambda_from_values(kG_dual(G), indicator(G, {e}, Q)), G);
    CHECK(u.criterion);
    CHECK(u.lambda_partial);
}

TEST_CASE("induced partial actions") {
    const auto G = union23();
    auto H = kG(G);
    const std::size_t e = G.identities()[1];
    for (auto h : G.isotropy(e)) {
        const InducedAction ind = induce_partial_action(regular_action(H), projection_onto(H->space(), {h}));
        INFO(ind.verdict.to_text());
        CHECK(ind.verdict.passed());
        CHECK(ind.verdict.holds("Ind symmetric"));
        const Report p = check_partial_module_coalgebra(ind.action);
        CHECK(p.passed());
        CHECK(p.holds("PMC symmetric"));
    }
    // δ_h ▷ δ_g = δ_gδ_{h⁻¹}, π onto kδ_l with l not an identity
    std::size_t l = 0;
    while (G.is_identity(l)) ++l;
    const InducedAction ind = induce_partial_action(antipode_twisted_action(H), projection_onto(H->space(), {l}));
    CHECK(ind.verdict.passed());
    CHECK(check_partial_module_coalgebra(ind.action).passed());
    const Verdict* glob = ind.verdict.find("Ind global");
    REQUIRE(glob);
    CHECK(glob->status == Status::fail);
    REQUIRE(glob->witness);
    CHECK(glob->witness->labels == std::vector<std::string>{"δ_" + G.label(l), "δ_" + G.label(l)});

    const InducedAction same = induce_partial_action(regular_action(H), LinMap::identity(H->space()));
    CHECK(same.action == regular_action(H));

    LinMap twice = LinMap::identity(H->space());
    twice.matrix.at(0, 0) = Scalar::from_int(Q, 2);
    CHECK_THROWS_AS(induce_partial_action(regular_action(H), twice), NotIdempotent);

    // span{x1} in the divided power coalgebra is not a subcoalgebra
    auto A = std::make_shared<const WeakHopfData>(abelian_group_weak_hopf({{2}}, Q));
    const ActionTensor a = lambda_action(lambda_from_values(A, {Scalar::one(Q), Scalar::one(Q)}),
                                         coalgebras::divided_power(Q));
    CHECK_THROWS_AS(induce_partial_action(a, projection_onto(a.carrier_space(), {1})), NotSubcoalgebra);

    // right actions round-trip through the induced construction
    const InducedAction r = induce_partial_action(right_regular(H), projection_onto(H->space(), {e}));
    CHECK(r.action.side == Side::right);
    CHECK(check_partial_module_coalgebra(r.action).passed());
}

TEST_CASE("module algebras") {
    for (const auto& G : {two_object(), union23()}) {
        for (auto H : {kG(G), kG_dual(G)}) {
            const ActionTensor t = target_action(H);
            CHECK(t.carrier_space().dim() == H->Ht_basis().size());
            const Report r = check_module_algebra(t);
            INFO(r.to_text());
            CHECK(r.passed());
            CHECK(check_partial_module_algebra(t).passed());
        }
        // left multiplication of H on itself breaks MA2
        auto H = kG(G);
        ActionTensor reg = zero_action(H, H->alg(), Side::left);
        reg.map.entries = H->alg().mul.entries;
        CHECK_FALSE(check_module_algebra(reg).holds("MA2"));
    }
}

TEST_CASE("right actions are checked through H^{op,cop}") {
    auto H = kG(two_object());
    const ActionTensor r = right_regular(H);
    const ActionTensor l = as_left(r);
    CHECK(l.side == Side::left);
    CHECK(check_module_coalgebra(l).passed());
    // breaking one entry is seen from either side
    ActionTensor bad = r;
    bad.map.at(0, 0, 0) += Scalar::one(Q);
    CHECK_FALSE(check_module_coalgebra(bad).passed());
}

TEST_CASE("groupoid partial actions validate") {
    const auto T = two_object();
    const auto Z2 = G_of(disjoint_union_spec({"Z/2"}));
    const std::vector<GroupoidPartialAction> corpus{
        trivial_group_action(Z2, coalgebras::divided_power(Q)),
        transport_action(T, Q),
        transport_action(union23(), Q),
        copies_action(T, coalgebras::matrix(Q, 2)),
        two_object_partial_action(T, Q),
    };
    for (const auto& gpa : corpus) {
        const Report r = validate_groupoid_partial_action(gpa);
        INFO(r.to_text());
        CHECK(r.passed());
        const ActionTensor a = to_kG_action(gpa);
        const Report p = check_partial_module_coalgebra(a);
        INFO(p.to_text());
        CHECK(p.passed());
        CHECK(p.holds("PMC symmetric"));
        CHECK(from_kG_action(a, gpa.groupoid) == gpa);
        const GroupoidPartialAction back = from_kG_action(a, gpa.groupoid);
        CHECK(validate_groupoid_partial_action(back).passed());
        CHECK(to_kG_action(back) == a);
    }
    // the genuinely partial example is not global
    CHECK_FALSE(check_module_coalgebra(to_kG_action(two_object_partial_action(T, Q))).passed());
}

TEST_CASE("groupoid partial action errors and mutations") {
    const auto T = two_object();
    GroupoidPartialAction gpa = transport_action(T, Q);
    const std::size_t g = *T.index_of("g");
    GroupoidPartialAction bad = gpa;
    bad.isos[g] = Scalar::from_int(Q, 2) * bad.isos[g];
    const Report r = validate_groupoid_partial_action(bad);
    const Verdict* v = r.find("Eq (3)");
    REQUIRE(v);
    CHECK(v->status == Status::fail);
    REQUIRE(v->witness);
    CHECK(v->witness->labels.size() == 2);

    GroupoidPartialAction nosum = gpa;
    nosum.projections[T.identities()[0]] = LinMap::zero(gpa.coalgebra.space, gpa.coalgebra.space);
    CHECK_THROWS_AS(to_kG_action(nosum), NotDirectSum);

    // λ-action of the isotropy indicator: P_g = 0 off G_e, identity on it
    const auto G = union23();
    auto H = kG(G);
    const std::size_t e = G.identities()[0];
    const auto Ge = G.isotropy(e);
    const ActionTensor a =
        lambda_action(lambda_from_values(H, indicator(G, Ge, Q)), coalgebras::divided_power(Q));
    const GroupoidPartialAction x = from_kG_action(a, G);
    for (std::size_t h = 0; h < G.size(); ++h) {
        const bool in = std::find(Ge.begin(), Ge.end(), h) != Ge.end();
        CHECK(x.projections[h] == (in ? LinMap::identity(a.carrier_space())
                                      : LinMap::zero(a.carrier_space(), a.carrier_space())));
    }
    CHECK(validate_groupoid_partial_action(x).passed());

    // a partial but non-symmetric action is refused
    auto Hd = kG(T);
    CHECK_THROWS_AS(from_kG_action(zero_action(Hd, coalgebras::grouplike(Q, 1), Side::left), T),
                    InputNotPartialAction);
}
