#include "whw/groupoid_action.hpp"

#include "whw/errors.hpp"

#include <functional>

namespace whw {

bool operator==(const GroupoidPartialAction& a, const GroupoidPartialAction& b) {
    return a.groupoid.labels() == b.groupoid.labels() && a.coalgebra == b.coalgebra &&
           a.projections == b.projections && a.isos == b.isos;
}

std::vector<Vector> subcoalgebra_basis(const GroupoidPartialAction& gpa, std::size_t g) {
    std::vector<Vector> out;
    const LinMap& P = gpa.projections.at(g);
    for (auto c : image_basis(P)) out.push_back(Vector::from_column(P.codomain, P.matrix, c));
    return out;
}

namespace {

void validate_shapes(const GroupoidPartialAction& gpa) {
    validate_shape(gpa.coalgebra);
    const FinVec& C = gpa.coalgebra.space;
    const std::size_t n = gpa.groupoid.size();
    if (gpa.projections.size() != n || gpa.isos.size() != n)
        throw ShapeMismatch("one projection and one θ per groupoid element");
    for (std::size_t g = 0; g < n; ++g)
        for (const LinMap* f : {&gpa.projections[g], &gpa.isos[g]})
            if (!(f->domain == C) || !(f->codomain == C)) throw ShapeMismatch("maps must be endomorphisms of C");
}

// Runs `pred` over all g (or all composable pairs) and records the first failure.
void over_elements(Report& r, const std::string& label, const FiniteGroupoid& G,
                   const std::function<bool(std::size_t)>& pred) {
    for (std::size_t g = 0; g < G.size(); ++g)
        if (!pred(g)) {
            r.add({label, Status::fail, true, Witness{{g}, {G.label(g)}}, {}});
            return;
        }
    r.add(label, true);
}

void over_pairs(Report& r, const std::string& label, const FiniteGroupoid& G,
                const std::function<bool(std::size_t, std::size_t)>& pred) {
    for (auto [g, h] : G.composable_pairs())
        if (!pred(g, h)) {
            r.add({label, Status::fail, true, Witness{{g, h}, {G.label(g), G.label(h)}}, {}});
            return;
        }
    r.add(label, true);
}

bool same(const LinMap& a, const LinMap& b) { return a.matrix == b.matrix; }

} // namespace

Report validate_groupoid_partial_action(const GroupoidPartialAction& gpa) {
    validate_shapes(gpa);
    Report r("groupoid partial action");
    const FiniteGroupoid& G = gpa.groupoid;
    const auto& P = gpa.projections;
    const auto& T = gpa.isos;
    const CoalgebraData& C = gpa.coalgebra;
    const LinMap D = cotensor_as_map(C.comul);
    const LinMap& eps = C.counit;
    auto inv = [&](std::size_t g) { return G.inverse(g); };

    over_elements(r, "P_g idempotent", G, [&](std::size_t g) { return same(compose(P[g], P[g]), P[g]); });
    over_elements(r, "(P_g⊗P_g)Δ=ΔP_g", G,
                  [&](std::size_t g) { return same(compose(map_tensor(P[g], P[g]), D), compose(D, P[g])); });
    over_elements(r, "P_g(c)=P_{r(g)}(c₁)ε(P_g(c₂))", G, [&](std::size_t g) {
        return same(compose(map_tensor(P[G.r(g)], compose(eps, P[g])), D), P[g]);
    });
    over_elements(r, "P_g(c)=P_{r(g)}(c₂)ε(P_g(c₁))", G, [&](std::size_t g) {
        return same(compose(map_tensor(compose(eps, P[g]), P[G.r(g)]), D), P[g]);
    });
    over_elements(r, "θ_e=id on C_e", G,
                  [&](std::size_t g) { return !G.is_identity(g) || same(compose(T[g], P[g]), P[g]); });
    over_elements(r, "θ_g supported on C_{g⁻¹}", G,
                  [&](std::size_t g) { return same(compose(T[g], P[inv(g)]), T[g]); });
    // The "Eq (1)" entry quantifies over all pairs, composable or not.
    [&] {
        for (std::size_t g = 0; g < G.size(); ++g)
            for (std::size_t h = 0; h < G.size(); ++h)
                if (!same(compose(P[g], P[h]), compose(P[h], P[g]))) {
                    r.add({"Eq (1)", Status::fail, true, Witness{{g, h}, {G.label(g), G.label(h)}}, {}});
                    return;
                }
        r.add("Eq (1)", true);
    }();
    over_pairs(r, "Eq (2)", G, [&](std::size_t g, std::size_t h) {
        const std::size_t gh_inv = inv(G.product(g, h));
        return same(compose(T[inv(h)], compose(P[h], P[inv(g)])), compose(P[gh_inv], compose(T[inv(h)], P[h])));
    });
    over_pairs(r, "Eq (3)", G, [&](std::size_t g, std::size_t h) {
        const std::size_t gh = G.product(g, h);
        const LinMap PP = compose(P[inv(gh)], P[inv(h)]);
        return same(compose(T[g], compose(T[h], PP)), compose(T[gh], PP));
    });
    over_elements(r, "Eq (4)", G, [&](std::size_t g) { return same(compose(P[G.r(g)], P[g]), P[g]); });
    over_elements(r, "Lemma θ_{r(g)}θ_g=θ_g", G,
                  [&](std::size_t g) { return same(compose(T[G.r(g)], T[g]), T[g]); });
    over_elements(r, "Lemma θ_{r(g)}P_g=P_g", G,
                  [&](std::size_t g) { return same(compose(T[G.r(g)], P[g]), P[g]); });
    over_elements(r, "Lemma θ_{g⁻¹}θ_g=P_{g⁻¹}", G,
                  [&](std::size_t g) { return same(compose(T[inv(g)], T[g]), P[inv(g)]); });
    over_pairs(r, "Lemma P_{g⁻¹}θ_h=θ_hP_{(gh)⁻¹}", G, [&](std::size_t g, std::size_t h) {
        const std::size_t gh_inv = inv(G.product(g, h));
        return same(compose(P[inv(g)], compose(T[h], P[inv(h)])), compose(T[h], compose(P[gh_inv], P[inv(h)])));
    });
    over_elements(r, "θ_g bijective C_{g⁻¹}→C_g", G, [&](std::size_t g) {
        const std::size_t k = rank(T[g]);
        return k == rank(P[inv(g)]) && k == rank(P[g]) && same(compose(P[g], T[g]), T[g]);
    });
    over_elements(r, "θ_g comultiplicative", G, [&](std::size_t g) {
        return same(compose(D, T[g]), compose(map_tensor(T[g], T[g]), compose(D, P[inv(g)])));
    });
    over_elements(r, "θ_g counital", G,
                  [&](std::size_t g) { return same(compose(eps, T[g]), compose(eps, P[inv(g)])); });
    return r;
}

ActionTensor to_kG_action(const GroupoidPartialAction& gpa) {
    validate_shapes(gpa);
    const FiniteGroupoid& G = gpa.groupoid;
    const FinVec& C = gpa.coalgebra.space;
    LinMap sum = LinMap::zero(C, C);
    for (auto e : G.identities()) {
        sum = sum + gpa.projections[e];
        for (auto f : G.identities())
            if (e != f && !compose(gpa.projections[e], gpa.projections[f]).matrix.is_zero())
                throw NotDirectSum("P_" + G.label(e) + "P_" + G.label(f) + " ≠ 0");
    }
    if (!equal(sum, LinMap::identity(C))) throw NotDirectSum("Σ_e P_e ≠ id");
    auto hopf = std::make_shared<const WeakHopfData>(groupoid_algebra(G, C.field()));
    ActionTensor a = zero_action(hopf, gpa.coalgebra, Side::left);
    for (std::size_t g = 0; g < G.size(); ++g) {
        const LinMap A = compose(gpa.isos[g], gpa.projections[G.inverse(g)]);
        for (std::size_t j = 0; j < C.dim(); ++j)
            for (std::size_t k = 0; k < C.dim(); ++k) a.map.at(g, j, k) = A.matrix.at(k, j);
    }
    return a;
}

GroupoidPartialAction from_kG_action(const ActionTensor& act, const FiniteGroupoid& G) {
    validate_shape(act);
    if (act.side != Side::left || !act.on_coalgebra()) throw ShapeMismatch("needs a left action on a coalgebra");
    if (!(*act.hopf == groupoid_algebra(G, act.hopf->field())))
        throw ShapeMismatch("action is not by the groupoid algebra of G");
    const Report pmc = check_partial_module_coalgebra(act);
    if (!pmc.passed()) throw InputNotPartialAction("PMC1-PMC3 fail: " + pmc.failures().front());
    if (!pmc.holds("PMC symmetric")) throw NotSymmetric("partial action is not symmetric");
    const CoalgebraData& C = act.coalgebra();
    const std::size_t n = C.space.dim();
    std::vector<LinMap> A;
    for (std::size_t g = 0; g < G.size(); ++g) {
        LinMap m = LinMap::zero(C.space, C.space);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) m.matrix.at(k, j) = act.map.at(g, j, k);
        A.push_back(std::move(m));
    }
    const LinMap D = cotensor_as_map(C.comul);
    GroupoidPartialAction out{G, C, {}, {}};
    for (std::size_t g = 0; g < G.size(); ++g) {
        const LinMap P = compose(map_tensor(compose(C.counit, A[G.inverse(g)]), A[G.r(g)]), D);
        out.projections.push_back(LinMap(C.space, C.space, P.matrix));
    }
    for (std::size_t g = 0; g < G.size(); ++g) out.isos.push_back(compose(A[g], out.projections[G.inverse(g)]));
    return out;
}

GroupoidPartialAction trivial_group_action(const FiniteGroupoid& G, const CoalgebraData& C) {
    if (G.identities().size() != 1) throw ShapeMismatch("trivial action needs a group");
    const LinMap id = LinMap::identity(C.space);
    return {G, C, std::vector<LinMap>(G.size(), id), std::vector<LinMap>(G.size(), id)};
}

GroupoidPartialAction copies_action(const FiniteGroupoid& G, const CoalgebraData& D) {
    const auto& ids = G.identities();
    const std::size_t m = D.space.dim();
    const Field& f = D.space.field();
    std::vector<std::string> labels;
    std::vector<std::size_t> copy_of(G.size());
    for (std::size_t i = 0; i < ids.size(); ++i) {
        copy_of[ids[i]] = i;
        for (const auto& l : D.space.labels()) labels.push_back(l + "@" + G.label(ids[i]));
    }
    const FinVec X(f, labels);
    CoalgebraData C{X, Tensor3(X, X, X), LinMap::zero(X, FinVec::ground(f))};
    for (std::size_t b = 0; b < ids.size(); ++b)
        for (std::size_t i = 0; i < m; ++i) {
            C.counit.matrix.at(0, b * m + i) = D.counit.matrix.at(0, i);
            for (std::size_t j = 0; j < m; ++j)
                for (std::size_t k = 0; k < m; ++k)
                    C.comul.at(b * m + i, b * m + j, b * m + k) = D.comul.at(i, j, k);
        }
    auto block_map = [&](std::size_t from, std::size_t to) {
        LinMap L = LinMap::zero(X, X);
        for (std::size_t i = 0; i < m; ++i) L.matrix.at(to * m + i, from * m + i) = Scalar::one(f);
        return L;
    };
    GroupoidPartialAction out{G, C, {}, {}};
    for (std::size_t g = 0; g < G.size(); ++g) {
        const std::size_t src = copy_of[G.d(g)], dst = copy_of[G.r(g)];
        out.projections.push_back(block_map(dst, dst));
        out.isos.push_back(block_map(src, dst));
    }
    return out;
}

GroupoidPartialAction transport_action(const FiniteGroupoid& G, const Field& f) {
    CoalgebraData one = coalgebras::grouplike(f, 1, "c");
    GroupoidPartialAction a = copies_action(G, one);
    std::vector<std::string> labels;
    for (auto e : G.identities()) labels.push_back("c_" + G.label(e));
    const FinVec X(f, labels);
    a.coalgebra.space = X;
    a.coalgebra.comul = Tensor3(X, X, X);
    a.coalgebra.comul.entries = std::vector<Scalar>(X.dim() * X.dim() * X.dim(), Scalar::zero(f));
    for (std::size_t i = 0; i < X.dim(); ++i) a.coalgebra.comul.at(i, i, i) = Scalar::one(f);
    a.coalgebra.counit = LinMap(X, FinVec::ground(f), a.coalgebra.counit.matrix);
    for (auto& P : a.projections) P = LinMap(X, X, P.matrix);
    for (auto& T : a.isos) T = LinMap(X, X, T.matrix);
    return a;
}

GroupoidPartialAction two_object_partial_action(const FiniteGroupoid& G, const Field& f) {
    if (G.size() != 4 || G.identities().size() != 2) throw ShapeMismatch("needs the two-object groupoid");
    const std::size_t e = G.identities()[0], fo = G.identities()[1];
    std::size_t g = G.size();
    for (std::size_t x = 0; x < G.size(); ++x)
        if (!G.is_identity(x) && G.d(x) == e) g = x;
    if (g == G.size()) throw ShapeMismatch("needs an arrow out of the first object");
    CoalgebraData C = coalgebras::grouplike(f, 3, "c");
    const FinVec X(f, {"a", "b", "c"});
    C.space = X;
    C.comul = Tensor3(X, X, X);
    for (std::size_t i = 0; i < 3; ++i) C.comul.at(i, i, i) = Scalar::one(f);
    C.counit = LinMap(X, FinVec::ground(f), C.counit.matrix);
    auto unit_map = [&](std::vector<std::pair<std::size_t, std::size_t>> moves) {
        LinMap L = LinMap::zero(X, X);
        for (auto [from, to] : moves) L.matrix.at(to, from) = Scalar::one(f);
        return L;
    };
    GroupoidPartialAction out{G, C, std::vector<LinMap>(4), std::vector<LinMap>(4)};
    const std::size_t gi = G.inverse(g);
    out.projections[e] = unit_map({{0, 0}, {1, 1}});
    out.isos[e] = out.projections[e];
    out.projections[fo] = unit_map({{2, 2}});
    out.isos[fo] = out.projections[fo];
    out.projections[g] = unit_map({{2, 2}});  // C_g = span{c}
    out.projections[gi] = unit_map({{0, 0}}); // C_{g⁻¹} = span{a}
    out.isos[g] = unit_map({{0, 2}});
    out.isos[gi] = unit_map({{2, 0}});
    return out;
}

} // namespace whw
