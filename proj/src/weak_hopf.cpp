#include "whw/weak_hopf.hpp"

#include "whw/check.hpp"
#include "whw/errors.hpp"

namespace whw {

namespace {

using P = std::vector<std::size_t>;

MultiVec delta_of_one(const AlgebraData& a, const CoalgebraData& c) {
    return apply(MultiVec::from_vector(a.unit), 0, SparseOp::cotensor(c.comul));
}

LinMap map_from_columns(const FinVec& dom, const FinVec& cod, const std::vector<MultiVec>& cols) {
    LinMap f = LinMap::zero(dom, cod);
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (const auto& [idx, s] : cols[j].terms()) f.matrix.at(idx[0], j) = s;
    return f;
}

std::vector<Vector> image_vectors(const LinMap& f) {
    std::vector<Vector> out;
    for (auto c : image_basis(f)) out.push_back(Vector::from_column(f.codomain, f.matrix, c));
    return out;
}

} // namespace

LinMap eps_t(const WeakBialgebraData& wb) {
    const AlgebraOps A(wb.alg);
    const CoalgebraOps C(wb.coalg);
    const MultiVec d1 = delta_of_one(wb.alg, wb.coalg);
    std::vector<MultiVec> cols;
    for (const auto& p : basis_probes(wb.alg.space)) {
        MultiVec t = d1.otimes(p.value).permute({0, 2, 1}); // 1₁, h, 1₂
        cols.push_back(apply(apply(t, 0, A.m), 0, C.e));
    }
    return map_from_columns(wb.alg.space, wb.alg.space, cols);
}

LinMap eps_s(const WeakBialgebraData& wb) {
    const AlgebraOps A(wb.alg);
    const CoalgebraOps C(wb.coalg);
    const MultiVec d1 = delta_of_one(wb.alg, wb.coalg);
    std::vector<MultiVec> cols;
    for (const auto& p : basis_probes(wb.alg.space)) {
        MultiVec t = d1.otimes(p.value).permute({0, 2, 1}); // 1₁, h, 1₂
        cols.push_back(apply(apply(t, 1, A.m), 1, C.e));
    }
    return map_from_columns(wb.alg.space, wb.alg.space, cols);
}

HopfOps::HopfOps(const WeakHopfData& h)
    : m_(SparseOp::bilinear(h.alg().mul)), d_(SparseOp::cotensor(h.coalg().comul)),
      e_(SparseOp::functional(h.coalg().counit)), u_(SparseOp::element(h.alg().unit)),
      S_(SparseOp::from_map(h.antipode())), et_(SparseOp::from_map(h.eps_t())),
      es_(SparseOp::from_map(h.eps_s())), one_(MultiVec::from_vector(h.alg().unit)),
      delta1_(apply(one_, 0, d_)) {
    if (h.antipode_inverse()) Sinv_ = SparseOp::from_map(*h.antipode_inverse());
}

MultiVec HopfOps::Sinv(const MultiVec& v, std::size_t slot) const {
    if (!Sinv_) throw AntipodeNotInvertible("S is singular");
    return apply(v, slot, *Sinv_);
}

WeakHopfData::WeakHopfData(WeakBialgebraData wb, LinMap antipode) : wb_(std::move(wb)), S_(std::move(antipode)) {
    validate_shape(wb_.alg);
    validate_shape(wb_.coalg);
    if (!(wb_.alg.space == wb_.coalg.space)) throw ShapeMismatch("algebra and coalgebra live on different spaces");
    if (S_.domain.dim() != dim() || S_.codomain.dim() != dim()) throw ShapeMismatch("antipode shape");
    eps_t_ = whw::eps_t(wb_);
    eps_s_ = whw::eps_s(wb_);
    Ht_ = image_vectors(eps_t_);
    Hs_ = image_vectors(eps_s_);
    if (auto inv = inverse(S_.matrix)) Sinv_ = LinMap(space(), space(), *inv);
    ops_ = std::make_shared<HopfOps>(*this);
}

bool operator==(const WeakHopfData& a, const WeakHopfData& b) {
    return a.alg() == b.alg() && a.coalg() == b.coalg() && a.antipode() == b.antipode();
}

AxiomReport check_weak_bialgebra(const WeakBialgebraData& wb) {
    Report r("weak bialgebra");
    validate_shape(wb.alg);
    validate_shape(wb.coalg);
    if (!(wb.alg.space == wb.coalg.space)) throw ShapeMismatch("algebra and coalgebra live on different spaces");
    check_algebra(r, wb.alg, "algebra ");
    check_coalgebra(r, wb.coalg, "coalgebra ");

    const AlgebraOps A(wb.alg);
    const CoalgebraOps C(wb.coalg);
    auto m = [&](const MultiVec& v, std::size_t s) { return apply(v, s, A.m); };
    auto d = [&](const MultiVec& v, std::size_t s) { return apply(v, s, C.d); };
    auto e = [&](const MultiVec& v, std::size_t s) { return apply(v, s, C.e); };
    const ProbeSet B = basis_probes(wb.alg.space);
    const MultiVec one = MultiVec::from_vector(wb.alg.unit);
    const MultiVec d1 = d(one, 0);

    check_equal(
        r, "WB(i)", {&B, &B}, [&](const Args& x) { return d(m(x[0]->otimes(*x[1]), 0), 0); },
        [&](const Args& x) {
            MultiVec t = d(d(x[0]->otimes(*x[1]), 1), 0).permute({0, 2, 1, 3});
            return m(m(t, 0), 1);
        });
    auto hkl = [](const Args& x) { return x[0]->otimes(*x[1]).otimes(*x[2]); };
    auto eps_hkl = [&](const Args& x) { return e(m(m(hkl(x), 0), 0), 0); };
    check_equal(r, "WB(ii-a)", {&B, &B, &B}, eps_hkl, [&](const Args& x) {
        MultiVec t = d(hkl(x), 1); // h, k₁, k₂, ℓ
        return e(m(e(m(t, 0), 0), 0), 0);
    });
    check_equal(r, "WB(ii-b)", {&B, &B, &B}, eps_hkl, [&](const Args& x) {
        MultiVec t = d(hkl(x), 1).swap(1, 2); // h, k₂, k₁, ℓ
        return e(m(e(m(t, 0), 0), 0), 0);
    });
    const MultiVec d2 = d(d1, 0);
    const MultiVec one_d1 = one.otimes(d1);
    const MultiVec d1_one = d1.otimes(one);
    auto slotwise = [&](const MultiVec& a, const MultiVec& b) {
        MultiVec t = a.otimes(b).permute({0, 3, 1, 4, 2, 5});
        return m(m(m(t, 0), 1), 2);
    };
    check_equal(
        r, "WB(iii-a)", {}, [&](const Args&) { return slotwise(one_d1, d1_one); },
        [&](const Args&) { return d2; });
    check_equal(
        r, "WB(iii-b)", {}, [&](const Args&) { return slotwise(d1_one, one_d1); },
        [&](const Args&) { return d2; });
    return r;
}

AxiomReport check_weak_hopf(const WeakHopfData& h) {
    Report r("weak Hopf algebra");
    r.merge(check_weak_bialgebra(h.wb()));
    const HopfOps& o = h.ops();
    const ProbeSet B = basis_probes(h.space());
    auto X = [](const Args& a) -> const MultiVec& { return *a[0]; };

    check_equal(
        r, "S(i)", {&B}, [&](const Args& a) { return o.m(o.S(o.d(X(a), 0), 1), 0); },
        [&](const Args& a) { return o.et(X(a), 0); });
    check_equal(
        r, "S(ii)", {&B}, [&](const Args& a) { return o.m(o.S(o.d(X(a), 0), 0), 0); },
        [&](const Args& a) { return o.es(X(a), 0); });
    check_equal(
        r, "S(iii)", {&B},
        [&](const Args& a) {
            MultiVec t = o.d(o.d(X(a), 0), 1);
            return o.m(o.m(o.S(o.S(t, 0), 2), 0), 0);
        },
        [&](const Args& a) { return o.S(X(a), 0); });
    check_equal(
        r, "S(1)=1", {}, [&](const Args&) { return o.S(o.one(), 0); }, [&](const Args&) { return o.one(); });
    check_equal(
        r, "eps∘S=eps", {&B}, [&](const Args& a) { return o.e(o.S(X(a), 0), 0); },
        [&](const Args& a) { return o.e(X(a), 0); });
    check_equal(
        r, "S anti-multiplicative", {&B, &B},
        [&](const Args& a) { return o.S(o.m(a[0]->otimes(*a[1]), 0), 0); },
        [&](const Args& a) { return o.m(o.S(o.S(a[1]->otimes(*a[0]), 0), 1), 0); });
    check_equal(
        r, "S anti-comultiplicative", {&B}, [&](const Args& a) { return o.d(o.S(X(a), 0), 0); },
        [&](const Args& a) { return o.S(o.S(o.d(X(a), 0), 0), 1).swap(0, 1); });
    return r;
}

IdentityReport check_identities(const WeakHopfData& h) {
    Report r("weak Hopf identities");
    const HopfOps& o = h.ops();
    const ProbeSet B = basis_probes(h.space());
    const ProbeSet Ht = vector_probes(h.space(), h.Ht_basis(), "H_t");
    const ProbeSet Hs = vector_probes(h.space(), h.Hs_basis(), "H_s");
    const MultiVec& d1 = o.delta1();
    const MultiVec d2 = o.d(d1, 0);
    auto X = [](const Args& a) -> const MultiVec& { return *a[0]; };
    auto HK = [](const Args& a) { return a[0]->otimes(*a[1]); };
    auto D3 = [&](const MultiVec& v) { return o.d(o.d(v, 0), 1); };
    auto c = [](MultiVec v) { return [v](const Args&) { return v; }; };
    // 1₁h ⊗ 1₂ and 1₁ ⊗ h1₂
    auto one1h_one2 = [&](const Args& a) { return o.m(d1.otimes(X(a)).permute({0, 2, 1}), 0); };
    auto one1_hone2 = [&](const Args& a) { return o.m(d1.otimes(X(a)).permute({0, 2, 1}), 1); };

    // weak bialgebra identities
    check_equal(r, "Eq 4.2a", {&B}, [&](const Args& a) { return o.d(X(a), 0); }, [&](const Args& a) {
        return o.m(o.m(o.d(X(a), 0).otimes(d1).permute({0, 2, 1, 3}), 0), 1);
    });
    check_equal(r, "Eq 4.2b", {&B}, [&](const Args& a) { return o.d(X(a), 0); }, [&](const Args& a) {
        return o.m(o.m(d1.otimes(o.d(X(a), 0)).permute({0, 2, 1, 3}), 0), 1);
    });
    check_equal(
        r, "Eq 4.3", {&B}, [&](const Args& a) { return o.et(o.et(X(a), 0), 0); },
        [&](const Args& a) { return o.et(X(a), 0); });
    check_equal(
        r, "Eq 4.4", {&B}, [&](const Args& a) { return o.es(o.es(X(a), 0), 0); },
        [&](const Args& a) { return o.es(X(a), 0); });
    check_equal(
        r, "Eq 4.5", {&B, &B}, [&](const Args& a) { return o.e(o.m(o.et(HK(a), 1), 0), 0); },
        [&](const Args& a) { return o.e(o.m(HK(a), 0), 0); });
    check_equal(
        r, "Eq 4.6", {&B, &B}, [&](const Args& a) { return o.e(o.m(o.es(HK(a), 0), 0), 0); },
        [&](const Args& a) { return o.e(o.m(HK(a), 0), 0); });
    check_equal(r, "Eq 4.7", {}, c(o.et(o.es(d1, 0), 1)), c(d1));
    check_equal(
        r, "Eq 4.8", {&B, &B}, [&](const Args& a) { return o.et(o.m(o.et(HK(a), 1), 0), 0); },
        [&](const Args& a) { return o.et(o.m(HK(a), 0), 0); });
    check_equal(
        r, "Eq 4.9", {&B, &B}, [&](const Args& a) { return o.es(o.m(o.es(HK(a), 0), 0), 0); },
        [&](const Args& a) { return o.es(o.m(HK(a), 0), 0); });
    check_equal(r, "Eq 4.10", {&Ht}, [&](const Args& a) { return o.d(X(a), 0); }, one1h_one2);
    check_equal(r, "Eq 4.11", {&Hs}, [&](const Args& a) { return o.d(X(a), 0); }, one1_hone2);
    check_equal(r, "Eq 4.12", {&B}, [&](const Args& a) { return o.et(o.d(X(a), 0), 1); }, one1h_one2);
    check_equal(r, "Eq 4.13", {&B}, [&](const Args& a) { return o.es(o.d(X(a), 0), 0); }, one1_hone2);
    check_equal(
        r, "Eq 4.14", {&B, &B}, [&](const Args& a) { return o.m(o.et(HK(a), 1), 0); },
        [&](const Args& a) { return o.e(o.m(o.d(HK(a), 0).permute({0, 2, 1}), 0), 0); });
    check_equal(
        r, "Eq 4.15", {&B, &B}, [&](const Args& a) { return o.m(o.es(HK(a), 0), 0); },
        [&](const Args& a) { return o.e(o.m(o.d(HK(a), 1).permute({0, 2, 1}), 0), 0); });
    check_equal(
        r, "Eq 4.16", {&Ht, &Hs}, [&](const Args& a) { return o.m(HK(a), 0); },
        [&](const Args& a) { return o.m(HK(a).swap(0, 1), 0); });
    check_equal(r, "Eq 4.17", {}, c(o.et(d2, 1)), c(o.m(d1.otimes(d1).permute({0, 2, 1, 3}), 0)));
    check_equal(r, "Eq 4.18", {}, c(o.es(d2, 1)), c(o.m(d1.otimes(d1).permute({0, 2, 1, 3}), 2)));
    check_equal(
        r, "Eq 4.19", {&B, &B}, [&](const Args& a) { return o.et(o.m(o.et(HK(a), 0), 0), 0); },
        [&](const Args& a) { return o.m(o.et(o.et(HK(a), 0), 1), 0); });
    check_equal(
        r, "Eq 4.20", {&B, &B}, [&](const Args& a) { return o.es(o.m(o.es(HK(a), 1), 0), 0); },
        [&](const Args& a) { return o.m(o.es(o.es(HK(a), 0), 1), 0); });

    // weak Hopf identities
    auto et_ = [&](const Args& a) { return o.et(X(a), 0); };
    auto es_ = [&](const Args& a) { return o.es(X(a), 0); };
    check_equal(r, "Eq 4.30", {&B}, et_, [&](const Args& a) { return o.e(o.m(o.S(X(a), 0).otimes(d1), 0), 0); });
    check_equal(r, "Eq 4.31", {&B}, es_, [&](const Args& a) { return o.e(o.m(d1.otimes(o.S(X(a), 0)), 1), 1); });
    check_equal(r, "Eq 4.32", {&B}, et_, [&](const Args& a) { return o.S(o.e(o.m(d1.otimes(X(a)), 1), 1), 0); });
    check_equal(r, "Eq 4.33", {&B}, es_, [&](const Args& a) { return o.S(o.e(o.m(X(a).otimes(d1), 0), 0), 0); });
    check_equal(
        r, "Eq 4.34a", {&B}, [&](const Args& a) { return o.et(o.S(X(a), 0), 0); },
        [&](const Args& a) { return o.et(o.es(X(a), 0), 0); });
    check_equal(
        r, "Eq 4.34b", {&B}, [&](const Args& a) { return o.et(o.es(X(a), 0), 0); },
        [&](const Args& a) { return o.S(o.es(X(a), 0), 0); });
    check_equal(
        r, "Eq 4.35a", {&B}, [&](const Args& a) { return o.es(o.S(X(a), 0), 0); },
        [&](const Args& a) { return o.es(o.et(X(a), 0), 0); });
    check_equal(
        r, "Eq 4.35b", {&B}, [&](const Args& a) { return o.es(o.et(X(a), 0), 0); },
        [&](const Args& a) { return o.S(o.et(X(a), 0), 0); });
    check_equal(
        r, "Eq 4.36", {&B}, [&](const Args& a) { return o.m(o.S(D3(X(a)), 2), 1); }, one1h_one2);
    check_equal(
        r, "Eq 4.37", {&B}, [&](const Args& a) { return o.m(o.S(D3(X(a)), 0), 0); }, one1_hone2);
    check_equal(
        r, "Eq 4.38", {&B}, [&](const Args& a) { return o.m(o.S(D3(X(a)), 1), 1); },
        [&](const Args& a) { return o.S(o.m(X(a).otimes(d1), 0), 1); });
    check_equal(
        r, "Eq 4.39", {&B}, [&](const Args& a) { return o.m(o.S(D3(X(a)), 1), 0); },
        [&](const Args& a) { return o.S(o.m(d1.otimes(X(a)), 1), 0); });

    const std::string singular = "S not invertible";
    if (o.has_Sinv()) {
        auto S_et_h1 = [&](const Args& a) { return o.S(o.et(o.d(X(a), 0), 0), 0); };
        check_equal(
            r, "Eq 4.41a", {&B},
            [&](const Args& a) { return o.m(o.Sinv(D3(X(a)), 0).permute({1, 0, 2}), 0); }, S_et_h1);
        check_equal(r, "Eq 4.41b", {&B}, S_et_h1, [&](const Args& a) { return o.m(d1.otimes(X(a)), 1); });
        check_equal(
            r, "Eq 4.42", {&Ht},
            [&](const Args& a) { return o.m(o.Sinv(d1.otimes(X(a)), 2).permute({0, 2, 1}), 0); },
            [&](const Args& a) { return o.m(d1.otimes(X(a)), 1); });
        check_equal(
            r, "Eq 4.43", {&Hs},
            [&](const Args& a) { return o.m(o.Sinv(d1.otimes(X(a)), 2).permute({0, 2, 1}), 1); },
            [&](const Args& a) { return o.m(d1.otimes(X(a)).permute({2, 0, 1}), 0); });
    } else {
        for (const char* l : {"Eq 4.41a", "Eq 4.41b", "Eq 4.42", "Eq 4.43"}) r.skip(l, singular);
    }

    // consequences stated alongside the lists
    check_equal(r, "S(1)=1", {}, c(o.S(o.one(), 0)), c(o.one()));
    check_equal(
        r, "eps∘S=eps", {&B}, [&](const Args& a) { return o.e(o.S(X(a), 0), 0); },
        [&](const Args& a) { return o.e(X(a), 0); });
    check_equal(
        r, "S(H_t)⊆H_s", {&Ht}, [&](const Args& a) { return o.es(o.S(X(a), 0), 0); },
        [&](const Args& a) { return o.S(X(a), 0); });
    check_equal(
        r, "S(H_s)⊆H_t", {&Hs}, [&](const Args& a) { return o.et(o.S(X(a), 0), 0); },
        [&](const Args& a) { return o.S(X(a), 0); });
    check_equal(r, "1₁⊗1₂=S(1₂)⊗S(1₁)", {}, c(d1), c(o.S(o.S(d1, 0), 1).swap(0, 1)));
    check_equal(r, "1∈H_t", {}, c(o.et(o.one(), 0)), c(o.one()));
    check_equal(r, "1∈H_s", {}, c(o.es(o.one(), 0)), c(o.one()));
    r.add("dim H_t = dim H_s", h.Ht_basis().size() == h.Hs_basis().size(),
          std::to_string(h.Ht_basis().size()) + " vs " + std::to_string(h.Hs_basis().size()));
    return r;
}

Report HopfVerdict::report() const {
    Report r("Hopf detection");
    r.add("Hopf(i) Δ(1)=1⊗1", unit_grouplike, {}, false);
    r.add("Hopf(ii) ε multiplicative", counit_multiplicative, {}, false);
    r.add("Hopf(iii) h₁S(h₂)=ε(h)1", left_antipode_classical, {}, false);
    r.add("Hopf(iv) S(h₁)h₂=ε(h)1", right_antipode_classical, {}, false);
    r.add("Hopf(v) H_t=H_s=k1", trivial_target_source, {}, false);
    r.add("Hopf conditions agree", consistent);
    return r;
}

HopfVerdict is_hopf(const WeakHopfData& h) {
    const HopfOps& o = h.ops();
    const ProbeSet B = basis_probes(h.space());
    Report scratch;
    auto X = [](const Args& a) -> const MultiVec& { return *a[0]; };
    HopfVerdict v;
    v.unit_grouplike = o.delta1() == o.one().otimes(o.one());
    v.counit_multiplicative = check_equal(
        scratch, "ii", {&B, &B}, [&](const Args& a) { return o.e(o.m(a[0]->otimes(*a[1]), 0), 0); },
        [&](const Args& a) { return o.e(o.e(a[0]->otimes(*a[1]), 0), 0); });
    v.left_antipode_classical = check_equal(
        scratch, "iii", {&B}, [&](const Args& a) { return o.m(o.S(o.d(X(a), 0), 1), 0); },
        [&](const Args& a) { return o.one_at(o.e(X(a), 0), 0); });
    v.right_antipode_classical = check_equal(
        scratch, "iv", {&B}, [&](const Args& a) { return o.m(o.S(o.d(X(a), 0), 0), 0); },
        [&](const Args& a) { return o.one_at(o.e(X(a), 0), 0); });
    v.trivial_target_source = h.Ht_basis().size() == 1 && h.Hs_basis().size() == 1;
    const bool a = v.unit_grouplike;
    v.consistent = v.counit_multiplicative == a && v.left_antipode_classical == a &&
                   v.right_antipode_classical == a && v.trivial_target_source == a;
    return v;
}

WeakHopfData dualize(const WeakHopfData& h) {
    const auto n = h.dim();
    std::vector<std::string> labels;
    for (const auto& l : h.space().labels()) labels.push_back("p_" + l);
    const FinVec V(h.field(), labels);
    const FinVec K = FinVec::ground(h.field());
    AlgebraData a{V, Tensor3(V, V, V), Vector::zero(V)};
    CoalgebraData c{V, Tensor3(V, V, V), LinMap::zero(V, K)};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                a.mul.at(i, j, k) = h.coalg().comul.at(k, i, j);
                c.comul.at(k, i, j) = h.alg().mul.at(i, j, k);
            }
    for (std::size_t k = 0; k < n; ++k) {
        a.unit.coords[k] = h.coalg().counit.matrix.at(0, k);
        c.counit.matrix.at(0, k) = h.alg().unit.coords[k];
    }
    return WeakHopfData({std::move(a), std::move(c)}, LinMap(V, V, h.antipode().matrix.transpose()));
}

WeakHopfData op_cop(const WeakHopfData& h) {
    return WeakHopfData({opposite(h.alg()), coopposite(h.coalg())}, h.antipode());
}

Vector unit_vector(const WeakHopfData& h) { return h.alg().unit; }

Scalar counit_of(const CoalgebraData& c, const Vector& v) { return c.counit.apply(v).coords[0]; }

} // namespace whw
