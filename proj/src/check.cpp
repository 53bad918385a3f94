#include "whw/check.hpp"

namespace whw {

ProbeSet basis_probes(const FinVec& v) {
    ProbeSet out;
    out.reserve(v.dim());
    for (std::size_t i = 0; i < v.dim(); ++i)
        out.push_back({MultiVec::basis(v.field(), {v.dim()}, {static_cast<std::uint32_t>(i)}), v.label(i)});
    return out;
}

ProbeSet vector_probes(const FinVec&, const std::vector<Vector>& vectors, const std::string& prefix) {
    ProbeSet out;
    for (std::size_t i = 0; i < vectors.size(); ++i)
        out.push_back({MultiVec::from_vector(vectors[i]), prefix + "[" + std::to_string(i) + "]"});
    return out;
}

bool check_all(Report& report, const std::string& label, const std::vector<const ProbeSet*>& sets,
               const std::function<bool(const Args&)>& pred, bool required) {
    const std::size_t n = sets.size();
    for (const auto* s : sets)
        if (s->empty()) {
            report.add(label, true, "vacuous: empty probe set", required);
            return true;
        }
    std::vector<std::size_t> pos(n, 0);
    Args args(n);
    while (true) {
        for (std::size_t i = 0; i < n; ++i) args[i] = &(*sets[i])[pos[i]].value;
        if (!pred(args)) {
            Verdict v;
            v.label = label;
            v.status = Status::fail;
            v.required = required;
            Witness w;
            for (std::size_t i = 0; i < n; ++i) {
                w.indices.push_back(pos[i]);
                w.labels.push_back((*sets[i])[pos[i]].label);
            }
            v.witness = std::move(w);
            report.add(std::move(v));
            return false;
        }
        // odometer, last index fastest -> lexicographic order
        std::size_t k = n;
        while (k > 0) {
            --k;
            if (++pos[k] < sets[k]->size()) break;
            pos[k] = 0;
            if (k == 0) {
                k = n + 1;
                break;
            }
        }
        if (n == 0 || k == n + 1) break;
    }
    report.add(label, true, {}, required);
    return true;
}

bool check_equal(Report& report, const std::string& label, const std::vector<const ProbeSet*>& sets,
                 const Expr& lhs, const Expr& rhs, bool required) {
    return check_all(
        report, label, sets, [&](const Args& a) { return lhs(a) == rhs(a); }, required);
}

} // namespace whw
