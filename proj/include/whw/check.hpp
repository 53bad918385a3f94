#ifndef WHW_CHECK_HPP
#define WHW_CHECK_HPP

// Probe-driven equality checks: an identity between multilinear expressions
// holds iff it holds on every tuple of basis vectors, so every checker in the
// library quantifies over basis probes (or over a basis of a subspace such as
// H_t) and reports the first failing tuple in lexicographic order.

#include "whw/contraction.hpp"
#include "whw/report.hpp"

#include <functional>
#include <string>
#include <vector>

namespace whw {

struct Probe {
    MultiVec value;
    std::string label;
};
using ProbeSet = std::vector<Probe>;

ProbeSet basis_probes(const FinVec& v);
// One probe per column of `basis` (vectors of `space`), labelled prefix[i].
ProbeSet vector_probes(const FinVec& space, const std::vector<Vector>& vectors, const std::string& prefix);

using Args = std::vector<const MultiVec*>;
using Expr = std::function<MultiVec(const Args&)>;

// Adds one verdict: lhs(args) == rhs(args) for every tuple in the product of
// `sets`. Returns whether it held.
bool check_equal(Report& report, const std::string& label, const std::vector<const ProbeSet*>& sets,
                 const Expr& lhs, const Expr& rhs, bool required = true);

// Same scan, but with a predicate instead of an equation.
bool check_all(Report& report, const std::string& label, const std::vector<const ProbeSet*>& sets,
               const std::function<bool(const Args&)>& pred, bool required = true);

} // namespace whw

#endif
