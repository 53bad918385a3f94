#include "whw/groupoid.hpp"

#include "whw/errors.hpp"

#include <algorithm>
#include <numeric>
#include <regex>
#include <set>

namespace whw {

namespace {

FiniteGroup cyclic_product(const std::vector<std::size_t>& orders, std::string name) {
    std::size_t n = 1;
    for (auto o : orders) n *= o;
    auto digits = [&](std::size_t x) {
        std::vector<std::size_t> d(orders.size());
        for (std::size_t i = orders.size(); i-- > 0;) {
            d[i] = x % orders[i];
            x /= orders[i];
        }
        return d;
    };
    auto index = [&](const std::vector<std::size_t>& d) {
        std::size_t x = 0;
        for (std::size_t i = 0; i < orders.size(); ++i) x = x * orders[i] + d[i];
        return x;
    };
    FiniteGroup G{std::move(name), std::vector<std::vector<std::size_t>>(n, std::vector<std::size_t>(n)),
                  std::vector<std::size_t>(n)};
    for (std::size_t a = 0; a < n; ++a) {
        auto da = digits(a);
        std::vector<std::size_t> di(orders.size());
        for (std::size_t i = 0; i < orders.size(); ++i) di[i] = (orders[i] - da[i]) % orders[i];
        G.inv[a] = index(di);
        for (std::size_t b = 0; b < n; ++b) {
            auto db = digits(b);
            std::vector<std::size_t> s(orders.size());
            for (std::size_t i = 0; i < orders.size(); ++i) s[i] = (da[i] + db[i]) % orders[i];
            G.table[a][b] = index(s);
        }
    }
    return G;
}

FiniteGroup symmetric3() {
    std::vector<std::array<int, 3>> perms;
    std::array<int, 3> p{0, 1, 2};
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    FiniteGroup G{"S3", std::vector<std::vector<std::size_t>>(6, std::vector<std::size_t>(6)),
                  std::vector<std::size_t>(6)};
    for (std::size_t a = 0; a < 6; ++a)
        for (std::size_t b = 0; b < 6; ++b) {
            std::array<int, 3> c{}; // (a∘b)(x) = a(b(x))
            for (int x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
            const auto idx = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
            G.table[a][b] = idx;
            if (idx == 0) G.inv[a] = b;
        }
    return G;
}

std::vector<std::size_t> parse_cyclic_orders(const std::string& name) {
    static const std::regex factor(R"(\s*Z/(\d+)\s*)");
    std::vector<std::size_t> orders;
    std::size_t start = 0;
    while (true) {
        const auto pos = name.find('x', start);
        const std::string part = name.substr(start, pos == std::string::npos ? std::string::npos : pos - start);
        std::smatch m;
        if (!std::regex_match(part, m, factor)) return {};
        const auto n = std::stoul(m[1]);
        if (n == 0) return {};
        orders.push_back(n);
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return orders;
}

} // namespace

FiniteGroup parse_group(const std::string& name) {
    if (name == "S3") return symmetric3();
    const auto orders = parse_cyclic_orders(name);
    if (orders.empty()) throw ParseError("unknown group '" + name + "' (expected Z/n, Z/n x Z/m, or S3)");
    return cyclic_product(orders, name);
}

GroupoidSpec disjoint_union_spec(const std::vector<std::string>& groups) {
    if (groups.empty()) throw SchemaError("disjoint union of no groups");
    GroupoidSpec s;
    for (std::size_t j = 0; j < groups.size(); ++j) {
        const FiniteGroup G = parse_group(groups[j]);
        const std::string c = std::to_string(j + 1);
        auto lab = [&](std::size_t k) { return k == 0 ? "e" + c : "g" + c + "_" + std::to_string(k); };
        for (std::size_t a = 0; a < G.order(); ++a) {
            s.elements.push_back(lab(a));
            s.inv[lab(a)] = lab(G.inv[a]);
            for (std::size_t b = 0; b < G.order(); ++b) s.mul.push_back({lab(a), lab(b), lab(G.table[a][b])});
        }
    }
    return s;
}

GroupoidSpec trivial_groupoid_spec(std::size_t n) {
    return disjoint_union_spec(std::vector<std::string>(n, "Z/1"));
}

GroupoidSpec two_object_spec() {
    GroupoidSpec s;
    s.elements = {"e", "f", "g", "g^-1"};
    s.mul = {{"e", "e", "e"},    {"f", "f", "f"},    {"f", "g", "g"},  {"g", "e", "g"},
             {"g^-1", "f", "g^-1"}, {"e", "g^-1", "g^-1"}, {"g", "g^-1", "f"}, {"g^-1", "g", "e"}};
    s.inv = {{"e", "e"}, {"f", "f"}, {"g", "g^-1"}, {"g^-1", "g"}};
    return s;
}

FiniteGroupoid FiniteGroupoid::validate(const GroupoidSpec& raw) {
    const std::size_t n = raw.elements.size();
    if (n == 0) throw SchemaError("groupoid with no elements");
    std::map<std::string, std::size_t> pos;
    for (std::size_t i = 0; i < n; ++i)
        if (!pos.emplace(raw.elements[i], i).second)
            throw SchemaError("duplicate groupoid element '" + raw.elements[i] + "'");
    auto idx = [&](const std::string& l) {
        auto it = pos.find(l);
        if (it == pos.end()) throw SchemaError("unknown groupoid element '" + l + "'");
        return it->second;
    };
    std::vector<std::vector<long>> mul(n, std::vector<long>(n, -1));
    for (const auto& [g, h, gh] : raw.mul) {
        long& slot = mul[idx(g)][idx(h)];
        const auto v = static_cast<long>(idx(gh));
        if (slot >= 0 && slot != v) throw SchemaError("product " + g + "·" + h + " given twice");
        slot = v;
    }
    auto L = [&](std::size_t i) { return raw.elements[i]; };
    auto defined = [&](std::size_t a, std::size_t b) { return mul[a][b] >= 0; };
    auto prod = [&](std::size_t a, std::size_t b) { return static_cast<std::size_t>(mul[a][b]); };

    // (iii) unique local identities
    std::vector<std::size_t> d(n), r(n);
    for (std::size_t g = 0; g < n; ++g) {
        std::vector<std::size_t> ds, rs;
        for (std::size_t x = 0; x < n; ++x) {
            if (defined(g, x) && prod(g, x) == g) ds.push_back(x);
            if (defined(x, g) && prod(x, g) == g) rs.push_back(x);
        }
        if (ds.size() != 1) {
            std::string w = L(g) + " has " + std::to_string(ds.size()) + " right identities";
            for (auto x : ds) w += " " + L(x);
            throw AxiomViolation("(iii)", w);
        }
        if (rs.size() != 1) {
            std::string w = L(g) + " has " + std::to_string(rs.size()) + " left identities";
            for (auto x : rs) w += " " + L(x);
            throw AxiomViolation("(iii)", w);
        }
        d[g] = ds[0];
        r[g] = rs[0];
    }
    // (iv) inverses
    std::vector<std::size_t> inv(n);
    for (std::size_t g = 0; g < n; ++g) {
        auto it = raw.inv.find(L(g));
        if (it == raw.inv.end()) throw AxiomViolation("(iv)", "no inverse given for " + L(g));
        const std::size_t h = idx(it->second);
        if (!defined(h, g) || prod(h, g) != d[g] || !defined(g, h) || prod(g, h) != r[g])
            throw AxiomViolation("(iv)", L(h) + " is not an inverse of " + L(g));
        inv[g] = h;
    }
    // (i) and (ii)
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t h = 0; h < n; ++h)
            for (std::size_t l = 0; l < n; ++l) {
                const bool left = defined(g, h) && defined(prod(g, h), l);
                const bool right = defined(h, l) && defined(g, prod(h, l));
                const std::string w = "(" + L(g) + ", " + L(h) + ", " + L(l) + ")";
                if (left != right) throw AxiomViolation("(i)", w + ": only one bracketing defined");
                if (left && prod(prod(g, h), l) != prod(g, prod(h, l)))
                    throw AxiomViolation("(i)", w + ": bracketings differ");
                if (left != (defined(g, h) && defined(h, l)))
                    throw AxiomViolation("(ii)", w + ": triple product vs pairwise products");
            }
    // consequences
    std::set<std::size_t> G0;
    for (std::size_t g = 0; g < n; ++g) G0.insert(d[g]);
    for (auto e : G0) {
        if (!defined(e, e) || prod(e, e) != e || d[e] != e || r[e] != e || inv[e] != e)
            throw AxiomViolation("Prop(i)", L(e) + " is not an idempotent self-inverse identity");
    }
    for (std::size_t g = 0; g < n; ++g) {
        if (inv[inv[g]] != g) throw AxiomViolation("Prop(ii)", "(" + L(g) + "⁻¹)⁻¹ ≠ " + L(g));
        for (std::size_t x = 0; x < n; ++x)
            if (x != inv[g] && defined(x, g) && prod(x, g) == d[g] && defined(g, x) && prod(g, x) == r[g])
                throw AxiomViolation("Prop(ii)", L(g) + " has a second inverse " + L(x));
    }
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t h = 0; h < n; ++h) {
            const std::string w = "(" + L(g) + ", " + L(h) + ")";
            if (defined(g, h) != (d[g] == r[h])) throw AxiomViolation("Prop(iii)", w);
            if (defined(g, h) && (d[prod(g, h)] != d[h] || r[prod(g, h)] != r[g]))
                throw AxiomViolation("Prop(iii)", w + ": source/target of product");
            if (defined(g, h) != defined(inv[h], inv[g])) throw AxiomViolation("Prop(iv)", w);
            if (defined(g, h) && inv[prod(g, h)] != prod(inv[h], inv[g])) throw AxiomViolation("Prop(iv)", w);
        }

    // canonical order: identities sorted, then the rest sorted
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const bool ia = G0.count(a), ib = G0.count(b);
        if (ia != ib) return ia;
        return L(a) < L(b);
    });
    std::vector<std::size_t> newpos(n);
    for (std::size_t i = 0; i < n; ++i) newpos[order[i]] = i;

    FiniteGroupoid G;
    G.labels_.resize(n);
    G.mul_.assign(n, std::vector<long>(n, -1));
    G.inv_.resize(n);
    G.d_.resize(n);
    G.r_.resize(n);
    for (std::size_t o = 0; o < n; ++o) {
        const std::size_t i = newpos[o];
        G.labels_[i] = L(o);
        G.inv_[i] = newpos[inv[o]];
        G.d_[i] = newpos[d[o]];
        G.r_[i] = newpos[r[o]];
        for (std::size_t p = 0; p < n; ++p)
            if (defined(o, p)) G.mul_[i][newpos[p]] = static_cast<long>(newpos[prod(o, p)]);
    }
    for (auto e : G0) G.identities_.push_back(newpos[e]);
    std::sort(G.identities_.begin(), G.identities_.end());
    return G;
}

std::optional<std::size_t> FiniteGroupoid::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return i;
    return std::nullopt;
}

std::size_t FiniteGroupoid::product(std::size_t g, std::size_t h) const {
    if (mul_[g][h] < 0) throw std::logic_error("product of non-composable elements");
    return static_cast<std::size_t>(mul_[g][h]);
}

std::vector<std::pair<std::size_t, std::size_t>> FiniteGroupoid::composable_pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t g = 0; g < size(); ++g)
        for (std::size_t h = 0; h < size(); ++h)
            if (composable(g, h)) out.emplace_back(g, h);
    return out;
}

std::vector<std::size_t> FiniteGroupoid::isotropy(std::size_t e) const {
    std::vector<std::size_t> out;
    for (std::size_t g = 0; g < size(); ++g)
        if (d_[g] == e && r_[g] == e) out.push_back(g);
    return out;
}

GroupoidSpec FiniteGroupoid::spec() const {
    GroupoidSpec s;
    s.elements = labels_;
    for (std::size_t g = 0; g < size(); ++g) {
        s.inv[labels_[g]] = labels_[inv_[g]];
        for (std::size_t h = 0; h < size(); ++h)
            if (composable(g, h)) s.mul.push_back({labels_[g], labels_[h], labels_[product(g, h)]});
    }
    return s;
}

namespace {

FinVec prefixed_space(const FiniteGroupoid& G, const Field& f, const std::string& prefix) {
    std::vector<std::string> labels;
    for (const auto& l : G.labels()) labels.push_back(prefix + l);
    return FinVec(f, labels);
}

} // namespace

WeakHopfData groupoid_algebra(const FiniteGroupoid& G, const Field& field) {
    const FinVec V = prefixed_space(G, field, "δ_");
    const std::size_t n = G.size();
    const Scalar one = Scalar::one(field);
    AlgebraData a{V, Tensor3(V, V, V), Vector::zero(V)};
    CoalgebraData c{V, Tensor3(V, V, V), LinMap::zero(V, FinVec::ground(field))};
    LinMap S = LinMap::zero(V, V);
    for (std::size_t g = 0; g < n; ++g) {
        for (std::size_t h = 0; h < n; ++h)
            if (G.composable(g, h)) a.mul.at(g, h, G.product(g, h)) = one;
        c.comul.at(g, g, g) = one;
        c.counit.matrix.at(0, g) = one;
        S.matrix.at(G.inverse(g), g) = one;
    }
    for (auto e : G.identities()) a.unit.coords[e] = one;
    return WeakHopfData({std::move(a), std::move(c)}, std::move(S));
}

WeakHopfData dual_groupoid_algebra(const FiniteGroupoid& G, const Field& field) {
    const FinVec V = prefixed_space(G, field, "p_");
    const std::size_t n = G.size();
    const Scalar one = Scalar::one(field);
    AlgebraData a{V, Tensor3(V, V, V), Vector::zero(V)};
    CoalgebraData c{V, Tensor3(V, V, V), LinMap::zero(V, FinVec::ground(field))};
    LinMap S = LinMap::zero(V, V);
    for (std::size_t g = 0; g < n; ++g) {
        a.mul.at(g, g, g) = one;
        a.unit.coords[g] = one;
        // Δ(p_g) = Σ_{h : ∃h⁻¹g} p_h ⊗ p_{h⁻¹g}
        for (std::size_t h = 0; h < n; ++h) {
            const std::size_t hi = G.inverse(h);
            if (G.composable(hi, g)) c.comul.at(g, h, G.product(hi, g)) = one;
        }
        if (G.is_identity(g)) c.counit.matrix.at(0, g) = one;
        // p_g∘S = p_{g⁻¹}
        S.matrix.at(G.inverse(g), g) = one;
    }
    return WeakHopfData({std::move(a), std::move(c)}, std::move(S));
}

AbelianGroupSpec parse_abelian_group(const std::string& name) {
    const auto orders = parse_cyclic_orders(name);
    if (orders.empty()) throw ParseError("unknown abelian group '" + name + "' (expected Z/n or Z/n x Z/m ...)");
    return {orders};
}

WeakHopfData abelian_group_weak_hopf(const AbelianGroupSpec& spec, const Field& field) {
    if (spec.orders.empty()) throw SchemaError("abelian group with no factors");
    const FiniteGroup G = cyclic_product(spec.orders, "");
    const std::size_t N = G.order();
    if (char_divides(field, N))
        throw CharacteristicDividesOrder("|G| = " + std::to_string(N) + " over " + field.to_string());

    // labels: "1", then g, g^2, ... for one factor; a^i b^j ... otherwise
    std::vector<std::string> labels(N);
    for (std::size_t x = 0; x < N; ++x) {
        std::vector<std::size_t> dg(spec.orders.size());
        std::size_t y = x;
        for (std::size_t i = spec.orders.size(); i-- > 0;) {
            dg[i] = y % spec.orders[i];
            y /= spec.orders[i];
        }
        std::string l;
        for (std::size_t i = 0; i < dg.size(); ++i) {
            if (dg[i] == 0) continue;
            l += spec.orders.size() == 1 ? std::string("g") : std::string(1, static_cast<char>('a' + i));
            if (dg[i] > 1) l += "^" + std::to_string(dg[i]);
        }
        labels[x] = l.empty() ? "1" : l;
    }
    const FinVec V(field, labels);
    const Scalar one = Scalar::one(field);
    const Scalar invN = Scalar::from_int(field, static_cast<long long>(N)).inverse();
    AlgebraData a{V, Tensor3(V, V, V), Vector::basis(V, 0)};
    CoalgebraData c{V, Tensor3(V, V, V), LinMap::zero(V, FinVec::ground(field))};
    for (std::size_t g = 0; g < N; ++g) {
        for (std::size_t h = 0; h < N; ++h) {
            a.mul.at(g, h, G.table[g][h]) = one;
            c.comul.at(g, G.table[g][h], G.inv[h]) += invN;
        }
    }
    c.counit.matrix.at(0, 0) = Scalar::from_int(field, static_cast<long long>(N));
    return WeakHopfData({std::move(a), std::move(c)}, LinMap::identity(V));
}

} // namespace whw
