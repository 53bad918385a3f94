#include "whw/globalization.hpp"

#include "whw/check.hpp"
#include "whw/errors.hpp"

namespace whw {

CoalgebraData tensor_coalgebra(const CoalgebraData& a, const CoalgebraData& b) {
    const FinVec V = tensor_product(a.space, b.space);
    const Field& f = V.field();
    CoalgebraData c{V, Tensor3(V, V, V), LinMap::zero(V, FinVec::ground(f))};
    const std::size_t na = a.space.dim(), nb = b.space.dim();
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t x = 0; x < nb; ++x) {
            const std::size_t src = flatten(i, x, nb);
            c.counit.matrix.at(0, src) = a.counit.matrix.at(0, i) * b.counit.matrix.at(0, x);
            for (std::size_t i1 = 0; i1 < na; ++i1)
                for (std::size_t i2 = 0; i2 < na; ++i2) {
                    const Scalar& s = a.comul.at(i, i1, i2);
                    if (s.is_zero()) continue;
                    for (std::size_t x1 = 0; x1 < nb; ++x1)
                        for (std::size_t x2 = 0; x2 < nb; ++x2) {
                            const Scalar& t = b.comul.at(x, x1, x2);
                            if (!t.is_zero()) c.comul.at(src, flatten(i1, x1, nb), flatten(i2, x2, nb)) += s * t;
                        }
                }
        }
    return c;
}

namespace {

// Matrix of c ↦ c↼h for a right action, as a map on the carrier.
LinMap right_operator(const ActionTensor& act, const Vector& h) {
    const FinVec& X = act.carrier_space();
    LinMap m = LinMap::zero(X, X);
    for (std::size_t a = 0; a < h.coords.size(); ++a) {
        if (h.coords[a].is_zero()) continue;
        for (std::size_t j = 0; j < X.dim(); ++j)
            for (std::size_t k = 0; k < X.dim(); ++k) m.matrix.at(k, j) += h.coords[a] * act.coeff(a, j, k);
    }
    return m;
}

Vector product(const WeakHopfData& H, const Vector& x, const Vector& y) {
    Vector out = Vector::zero(H.space());
    const std::size_t n = H.dim();
    for (std::size_t i = 0; i < n; ++i) {
        if (x.coords[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y.coords[j].is_zero()) continue;
            const Scalar s = x.coords[i] * y.coords[j];
            for (std::size_t k = 0; k < n; ++k)
                if (!H.alg().mul.at(i, j, k).is_zero()) out.coords[k] += s * H.alg().mul.at(i, j, k);
        }
    }
    return out;
}

bool is_grouplike(const WeakHopfData& H, const Vector& e) {
    if (e.is_zero()) return false;
    const std::size_t n = H.dim();
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            Scalar s = Scalar::zero(H.field());
            for (std::size_t i = 0; i < n; ++i)
                if (!e.coords[i].is_zero()) s += e.coords[i] * H.coalg().comul.at(i, j, k);
            if (!(s == e.coords[j] * e.coords[k])) return false;
        }
    return true;
}

// first basis h failing c↼(h·x) = c↼h (or c↼(x·h) = c↼h when `left`)
std::optional<std::size_t> absorption_failure(const ActionTensor& act, const Vector& x, bool left) {
    const WeakHopfData& H = *act.hopf;
    for (std::size_t a = 0; a < H.dim(); ++a) {
        const Vector h = Vector::basis(H.space(), a);
        const Vector hx = left ? product(H, x, h) : product(H, h, x);
        if (!(right_operator(act, hx) == right_operator(act, h))) return a;
    }
    return std::nullopt;
}

void require_right_coalgebra(const ActionTensor& act) {
    validate_shape(act);
    if (act.side != Side::right || !act.on_coalgebra()) throw ShapeMismatch("needs a right action on a coalgebra");
}

} // namespace

Report check_grouplike_hypotheses(const ActionTensor& act, const Vector& e) {
    require_right_coalgebra(act);
    const WeakHopfData& H = *act.hopf;
    if (!(e.space == H.space())) throw ShapeMismatch("e is not an element of H");
    Report r("grouplike hypotheses");
    r.add("Δ(e)=e⊗e", is_grouplike(H, e));
    r.add("ε(e)=1", counit_of(H.coalg(), e).is_one());
    auto he = absorption_failure(act, e, false);
    r.add({"c↼he=c↼h", he ? Status::fail : Status::pass, true,
           he ? std::optional<Witness>(Witness{{*he}, {H.space().label(*he)}}) : std::nullopt, {}});
    auto eh = absorption_failure(act, e, true);
    r.add({"c↼eh=c↼h", eh ? Status::fail : Status::pass, true,
           eh ? std::optional<Witness>(Witness{{*eh}, {H.space().label(*eh)}}) : std::nullopt,
           "follows from the absorption hypothesis"});
    return r;
}

std::vector<Vector> find_basis_grouplikes(const WeakHopfData& H, const ActionTensor& act) {
    require_right_coalgebra(act);
    std::vector<Vector> cands;
    std::vector<std::size_t> idem;
    for (std::size_t i = 0; i < H.dim(); ++i) {
        const Vector b = Vector::basis(H.space(), i);
        cands.push_back(b);
        if (product(H, b, b) == b) idem.push_back(i);
    }
    // 0/1 sums of at least two idempotent basis elements, capped at 2^12 subsets
    if (idem.size() <= 12)
        for (std::size_t mask = 1; mask < (std::size_t{1} << idem.size()); ++mask) {
            if ((mask & (mask - 1)) == 0) continue;
            Vector v = Vector::zero(H.space());
            for (std::size_t b = 0; b < idem.size(); ++b)
                if (mask >> b & 1) v.coords[idem[b]] = Scalar::one(H.field());
            cands.push_back(v);
        }
    std::vector<Vector> out;
    for (const auto& c : cands)
        if (is_grouplike(H, c) && !absorption_failure(act, c, false)) out.push_back(c);
    return out;
}

GlobalizationTriple standard_globalization(const ActionTensor& act, const Vector& e) {
    require_right_coalgebra(act);
    const WeakHopfData& H = *act.hopf;
    if (!(e.space == H.space())) throw ShapeMismatch("e is not an element of H");
    if (!is_grouplike(H, e)) throw HypothesisViolated(HypothesisViolated::Which::grouplike, "Δ(e) ≠ e⊗e");
    if (auto a = absorption_failure(act, e, false))
        throw HypothesisViolated(HypothesisViolated::Which::absorption, "c↼he ≠ c↼h at h = " + H.space().label(*a));

    const CoalgebraData& C = act.coalgebra();
    const Field& f = H.field();
    const std::size_t n = H.dim(), nc = C.space.dim();
    // eH as the image of left multiplication by e
    LinMap Le = LinMap::zero(H.space(), H.space());
    for (std::size_t j = 0; j < n; ++j) {
        const Vector v = product(H, e, Vector::basis(H.space(), j));
        for (std::size_t k = 0; k < n; ++k) Le.matrix.at(k, j) = v.coords[k];
    }
    const auto cols = image_basis(Le);
    std::vector<std::string> labels;
    for (auto c : cols) {
        const Vector v = Vector::from_column(H.space(), Le.matrix, c);
        labels.push_back(v == Vector::basis(H.space(), c) ? H.space().label(c) : "e·" + H.space().label(c));
    }
    const FinVec E(f, labels);
    LinMap incE = LinMap::zero(E, H.space());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t r = 0; r < n; ++r) incE.matrix.at(r, j) = Le.matrix.at(r, cols[j]);
    const LinMap backE = left_inverse_on_image(incE);
    const std::size_t ne = E.dim();

    const CoalgebraData CH = tensor_coalgebra(C, H.coalg());
    const LinMap inc = map_tensor(LinMap::identity(C.space), incE);
    CoalgebraData D = restrict_coalgebra(CH, LinMap(tensor_product(C.space, E), CH.space, inc.matrix));
    const FinVec& DV = D.space;

    // (c⊗x)◂k = c⊗xk
    ActionTensor glob = zero_action(act.hopf, D, Side::right);
    for (std::size_t a = 0; a < ne; ++a) {
        const Vector x = incE.apply(Vector::basis(E, a));
        for (std::size_t k = 0; k < n; ++k) {
            const Vector xk = backE.apply(product(H, x, Vector::basis(H.space(), k)));
            for (std::size_t i = 0; i < nc; ++i)
                for (std::size_t b = 0; b < ne; ++b)
                    if (!xk.coords[b].is_zero()) glob.map.at(flatten(i, a, ne), k, flatten(i, b, ne)) = xk.coords[b];
        }
    }
    const Vector e_coords = backE.apply(e);
    LinMap theta = LinMap::zero(C.space, DV);
    for (std::size_t i = 0; i < nc; ++i)
        for (std::size_t b = 0; b < ne; ++b) theta.matrix.at(flatten(i, b, ne), i) = e_coords.coords[b];
    // π(c⊗x) = (c↼x)⊗e
    LinMap pi = LinMap::zero(DV, DV);
    for (std::size_t a = 0; a < ne; ++a) {
        const LinMap Rx = right_operator(act, incE.apply(Vector::basis(E, a)));
        for (std::size_t i = 0; i < nc; ++i)
            for (std::size_t j = 0; j < nc; ++j) {
                if (Rx.matrix.at(j, i).is_zero()) continue;
                for (std::size_t b = 0; b < ne; ++b)
                    pi.matrix.at(flatten(j, b, ne), flatten(i, a, ne)) += Rx.matrix.at(j, i) * e_coords.coords[b];
            }
    }
    return {act, std::move(D), std::move(glob), std::move(theta), std::move(pi)};
}

Report check_globalization(const GlobalizationTriple& gt) {
    require_right_coalgebra(gt.partial);
    validate_shape(gt.global_act);
    validate_shape(gt.D);
    const CoalgebraData& C = gt.partial.coalgebra();
    if (gt.global_act.side != Side::right || !(gt.global_act.carrier_space() == gt.D.space))
        throw ShapeMismatch("global action must be a right action on D");
    if (!(gt.theta.domain == C.space) || !(gt.theta.codomain == gt.D.space)) throw ShapeMismatch("θ: C -> D");
    if (!(gt.pi.domain == gt.D.space) || !(gt.pi.codomain == gt.D.space)) throw ShapeMismatch("π: D -> D");

    Report r("globalization");
    r.add("input partial", check_partial_module_coalgebra(gt.partial).passed(), "C is a right partial module coalgebra");
    const Report mc = check_module_coalgebra(gt.global_act);
    r.add("Def-globalmod-(i)", mc.passed(), mc.passed() ? "" : "fails " + mc.failures().front());

    const LinMap DC = cotensor_as_map(C.comul);
    const LinMap DD = cotensor_as_map(gt.D.comul);
    const std::size_t nc = C.space.dim(), nd = gt.D.space.dim();
    const bool injective = rank(gt.theta) == nc;
    r.add("Def-globalmod-(ii) injective", injective);
    r.add("Def-globalmod-(ii) comultiplicative",
          compose(DD, gt.theta).matrix == compose(map_tensor(gt.theta, gt.theta), DC).matrix);
    r.add("Def-globalmod-(ii) counital", compose(gt.D.counit, gt.theta).matrix == C.counit.matrix);
    r.add("Def-globalmod-(iii) idempotent", compose(gt.pi, gt.pi) == gt.pi);
    r.add("Def-globalmod-(iii) image", rank(gt.pi) == rank(gt.theta) && compose(gt.pi, gt.theta) == gt.theta,
          "image(π) = θ(C)");

    const SparseOp act = SparseOp::bilinear(gt.global_act.map);
    const SparseOp part = SparseOp::bilinear(gt.partial.map);
    const SparseOp p = SparseOp::from_map(gt.pi);
    const SparseOp th = SparseOp::from_map(gt.theta);
    const SparseOp dD = SparseOp::cotensor(gt.D.comul);
    const SparseOp eD = SparseOp::functional(gt.D.counit);
    auto A = [&](const MultiVec& v, std::size_t s) { return apply(v, s, act); };
    auto P = [&](const MultiVec& v, std::size_t s) { return apply(v, s, p); };
    auto cat = [](const Args& x) { return x[0]->otimes(*x[1]); };
    const ProbeSet BD = basis_probes(gt.D.space);
    const ProbeSet BC = basis_probes(C.space);
    const ProbeSet BH = basis_probes(gt.partial.hopf->space());
    check_equal(
        r, "Eq (5)", {&BD, &BH}, [&](const Args& x) { return P(P(apply(A(cat(x), 0), 0, dD), 0), 1); },
        [&](const Args& x) { return apply(P(A(cat(x), 0), 0), 0, dD); });
    check_equal(
        r, "Eq (6)", {&BD, &BH}, [&](const Args& x) { return P(A(P(cat(x), 0), 0), 0); },
        [&](const Args& x) { return P(A(apply(P(apply(cat(x), 0, dD), 0), 0, eD), 0), 0); });
    check_equal(
        r, "Eq (7)", {&BC, &BH}, [&](const Args& x) { return apply(apply(cat(x), 0, part), 0, th); },
        [&](const Args& x) { return P(A(apply(cat(x), 0, th), 0), 0); });

    // (iv): span{θ(c)◂h} = D
    const std::size_t nh = gt.partial.hopf->dim();
    Matrix span(gt.D.space.field(), nd, nc * nh);
    for (std::size_t i = 0; i < nc; ++i)
        for (std::size_t h = 0; h < nh; ++h)
            for (std::size_t j = 0; j < nd; ++j) {
                if (gt.theta.matrix.at(j, i).is_zero()) continue;
                for (std::size_t k = 0; k < nd; ++k)
                    span.at(k, i * nh + h) += gt.theta.matrix.at(j, i) * gt.global_act.map.at(j, h, k);
            }
    const std::size_t rk = rank(span);
    r.add("Def-globalmod-(iv)", rk == nd, "rank of θ(C)◂H is " + std::to_string(rk) + " of " + std::to_string(nd));
    return r;
}

AlgebraGlobalization dual_globalization_data(const GlobalizationTriple& gt) {
    require_right_coalgebra(gt.partial);
    AlgebraGlobalization ag{dual_action_tensor(gt.partial), dual_action_tensor(gt.global_act), {}, {}, {}, true};
    const FinVec& Cs = ag.partial.carrier_space();
    const FinVec& Ds = ag.global_act.carrier_space();
    ag.theta_star = LinMap(Ds, Cs, gt.theta.matrix.transpose());
    Matrix GPi(Cs.field(), Cs.dim(), Ds.dim());
    try {
        GPi = compose(left_inverse_on_image(gt.theta), gt.pi).matrix;
    } catch (const NotInjective&) {
        ag.theta_injective = false;
    }
    ag.phi = LinMap(Cs, Ds, GPi.transpose());
    // B = span{h▷φ(α)}
    const std::size_t nh = gt.partial.hopf->dim(), nc = Cs.dim(), nd = Ds.dim();
    Matrix span(Cs.field(), nd, nh * nc);
    for (std::size_t h = 0; h < nh; ++h)
        for (std::size_t i = 0; i < nc; ++i)
            for (std::size_t j = 0; j < nd; ++j) {
                const Scalar& v = ag.phi.matrix.at(j, i);
                if (v.is_zero()) continue;
                for (std::size_t k = 0; k < nd; ++k) span.at(k, h * nc + i) += v * ag.global_act.map.at(h, j, k);
            }
    for (auto c : image_basis(span)) ag.B_basis.push_back(Vector::from_column(Ds, span, c));
    return ag;
}

namespace {

Matrix columns(const std::vector<Vector>& vs, const FinVec& space) {
    Matrix m(space.field(), space.dim(), vs.size());
    for (std::size_t j = 0; j < vs.size(); ++j)
        for (std::size_t r = 0; r < space.dim(); ++r) m.at(r, j) = vs[j].coords[r];
    return m;
}

bool in_span(const std::vector<Vector>& basis, const Vector& v) {
    if (v.is_zero()) return true;
    std::vector<Vector> ext = basis;
    ext.push_back(v);
    return rank(columns(ext, v.space)) == rank(columns(basis, v.space));
}

Vector mul(const AlgebraData& A, const Vector& x, const Vector& y) {
    Vector out = Vector::zero(A.space);
    const std::size_t n = A.space.dim();
    for (std::size_t i = 0; i < n; ++i) {
        if (x.coords[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y.coords[j].is_zero()) continue;
            const Scalar s = x.coords[i] * y.coords[j];
            for (std::size_t k = 0; k < n; ++k)
                if (!A.mul.at(i, j, k).is_zero()) out.coords[k] += s * A.mul.at(i, j, k);
        }
    }
    return out;
}

Vector act_left(const ActionTensor& a, std::size_t h, const Vector& x) {
    Vector out = Vector::zero(a.carrier_space());
    const std::size_t n = x.coords.size();
    for (std::size_t j = 0; j < n; ++j) {
        if (x.coords[j].is_zero()) continue;
        for (std::size_t k = 0; k < n; ++k) out.coords[k] += x.coords[j] * a.coeff(h, j, k);
    }
    return out;
}

} // namespace

Report check_algebra_globalization(const AlgebraGlobalization& ag) {
    Report r("algebra globalization");
    const AlgebraData& Cs = ag.partial.algebra();
    const AlgebraData& Ds = ag.global_act.algebra();
    const FinVec& CV = Cs.space;
    const std::size_t nc = CV.dim(), nh = ag.partial.hopf->dim();
    const Report ma = check_module_algebra(ag.global_act);
    r.add("Def-globalg-(B) module algebra", ma.passed(), ma.passed() ? "" : "D* fails " + ma.failures().front());
    std::vector<Vector> phis;
    for (std::size_t i = 0; i < nc; ++i) phis.push_back(ag.phi.apply(Vector::basis(CV, i)));

    auto first_fail = [&](const std::string& label, std::size_t n1, std::size_t n2,
                          const std::function<bool(std::size_t, std::size_t)>& ok,
                          const std::function<std::string(std::size_t)>& l1,
                          const std::function<std::string(std::size_t)>& l2) {
        for (std::size_t a = 0; a < n1; ++a)
            for (std::size_t b = 0; b < n2; ++b)
                if (!ok(a, b)) {
                    r.add({label, Status::fail, true, Witness{{a, b}, {l1(a), l2(b)}}, {}});
                    return;
                }
        r.add(label, true);
    };
    auto bl = [](std::size_t j) { return "B[" + std::to_string(j) + "]"; };
    auto cl = [&](std::size_t i) { return CV.label(i); };
    auto hl = [&](std::size_t h) { return ag.partial.hopf->space().label(h); };
    const std::size_t nb = ag.B_basis.size();
    first_fail(
        "Def-globalg-(B) subalgebra", nb, nb,
        [&](std::size_t a, std::size_t b) { return in_span(ag.B_basis, mul(Ds, ag.B_basis[a], ag.B_basis[b])); }, bl,
        bl);
    first_fail(
        "Def-globalg-(B) H-stable", nh, nb,
        [&](std::size_t h, std::size_t b) { return in_span(ag.B_basis, act_left(ag.global_act, h, ag.B_basis[b])); },
        hl, bl);
    r.add("Def-globalg-(i) injective", ag.theta_injective && rank(ag.phi) == nc);
    first_fail(
        "Def-globalg-(i) multiplicative", nc, nc,
        [&](std::size_t a, std::size_t b) {
            return ag.phi.apply(mul(Cs, Vector::basis(CV, a), Vector::basis(CV, b))) == mul(Ds, phis[a], phis[b]);
        },
        cl, cl);
    first_fail(
        "Def-globalg-(i) right ideal", nc, nb,
        [&](std::size_t a, std::size_t b) { return in_span(phis, mul(Ds, phis[a], ag.B_basis[b])); }, cl, bl);
    const Vector phi1 = ag.phi.apply(Cs.unit);
    first_fail(
        "Def-globalg-(ii)", nh, nc,
        [&](std::size_t h, std::size_t a) {
            return ag.phi.apply(act_left(ag.partial, h, Vector::basis(CV, a))) ==
                   mul(Ds, phi1, act_left(ag.global_act, h, phis[a]));
        },
        hl, cl);
    r.add("Def-globalg-(iii)", true, "B is spanned by H▷φ(C*) by construction");
    // dual form of D = θ(C)◂H
    const std::size_t nd = Ds.space.dim();
    Matrix stack(CV.field(), nh * nc, nd);
    for (std::size_t h = 0; h < nh; ++h)
        for (std::size_t j = 0; j < nd; ++j) {
            const Vector img = ag.theta_star.apply(act_left(ag.global_act, h, Vector::basis(Ds.space, j)));
            for (std::size_t i = 0; i < nc; ++i) stack.at(h * nc + i, j) = img.coords[i];
        }
    const std::size_t rk = rank(stack);
    r.add("D = θ(C)◂H (dual form)", rk == nd,
          "common kernel of β ↦ (h▷β)∘θ has dimension " + std::to_string(nd - rk));
    return r;
}

DualGlobalizationResult dual_globalization_transfer(const GlobalizationTriple& gt) {
    const Report c = check_globalization(gt);
    if (!c.passed()) throw InputNotGlobalization("triple fails " + c.failures().front());
    AlgebraGlobalization ag = dual_globalization_data(gt);
    Report r = check_algebra_globalization(ag);
    return {std::move(ag), std::move(r)};
}

namespace mutations {

GlobalizationTriple scale_theta(const GlobalizationTriple& gt, const Scalar& s) {
    GlobalizationTriple out = gt;
    out.theta = s * gt.theta;
    return out;
}

GlobalizationTriple pad_unreachable(const GlobalizationTriple& gt) {
    CoalgebraData copy = gt.D;
    std::vector<std::string> labels;
    for (const auto& l : gt.D.space.labels()) labels.push_back(l + "'");
    const FinVec V2(gt.D.space.field(), labels);
    copy.space = V2;
    copy.comul.a = copy.comul.b = copy.comul.c = V2;
    copy.counit.domain = V2;
    GlobalizationTriple out = gt;
    out.D = coalgebras::direct_sum(gt.D, copy);
    const FinVec& V = out.D.space;
    const std::size_t n = gt.D.space.dim(), nh = gt.partial.hopf->dim();
    out.global_act = zero_action(gt.global_act.hopf, out.D, Side::right);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t h = 0; h < nh; ++h)
            for (std::size_t k = 0; k < n; ++k) {
                out.global_act.map.at(j, h, k) = gt.global_act.map.at(j, h, k);
                out.global_act.map.at(n + j, h, n + k) = gt.global_act.map.at(j, h, k);
            }
    out.theta = LinMap::zero(gt.theta.domain, V);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < gt.theta.domain.dim(); ++i) out.theta.matrix.at(j, i) = gt.theta.matrix.at(j, i);
    out.pi = LinMap::zero(V, V);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) out.pi.matrix.at(k, j) = gt.pi.matrix.at(k, j);
    return out;
}

GlobalizationTriple coordinate_projection(const GlobalizationTriple& gt) {
    GlobalizationTriple out = gt;
    out.pi = compose(gt.theta, left_inverse_on_image(gt.theta));
    return out;
}

} // namespace mutations

} // namespace whw
