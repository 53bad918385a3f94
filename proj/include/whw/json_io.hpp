#ifndef WHW_JSON_IO_HPP
#define WHW_JSON_IO_HPP

#include "whw/globalization.hpp"
#include "whw/groupoid_action.hpp"

#include <json.hpp>
#include <optional>

namespace whw {

using Json = nlohmann::ordered_json;

// Scalars are strings: "n" or "p/q" over Q, the residue "n" over GF(p).
// Inputs may also use JSON integers, and "n mod p" over GF(p).
// Tensors are flat row-major arrays; matrices are arrays of rows.
// Reading errors: ParseError for bad text, SchemaError for bad structure.

Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j, const Field& f);

// Standalone forms carry the field and every basis.
Json to_json(const LinMap& f);
LinMap linmap_from_json(const Json& j);
Json to_json(const Tensor3& t);
Tensor3 tensor3_from_json(const Json& j);

// {"basis", "mul", "unit"} and {"basis", "comul", "counit"}.
Json to_json(const AlgebraData& a);
Json to_json(const CoalgebraData& c);
AlgebraData algebra_from_json(const Json& j, const Field& f);
// Also accepts {"preset": "grouplike", "dim": n}, {"preset": "divided-power"},
// {"preset": "matrix", "dim": n}.
CoalgebraData coalgebra_from_json(const Json& j, const Field& f);

// {"elements", "mul": [[g,h,gh]...], "inv": {g: g⁻¹}} or
// {"disjoint_union": [{"group": "Z/2"}, ...]}. Validation is left to the caller.
Json to_json(const GroupoidSpec& g);
GroupoidSpec groupoid_spec_from_json(const Json& j);

// {"field", "basis", "mul", "unit", "comul", "counit", "antipode"}.
Json to_json(const WeakHopfData& h);

// A weak Hopf algebra together with the groupoid it was built from, if any.
struct LoadedHopf {
    std::shared_ptr<const WeakHopfData> hopf;
    std::optional<FiniteGroupoid> groupoid;
    std::string kind; // "kG", "kG-dual", "abelian-group" or "explicit"
};
// Explicit structure constants or a directive {"build": "kG" | "kG-dual",
// "groupoid": ...} / {"build": "abelian-group", "group": "Z/3"}.
// `field` is used when the document names none.
LoadedHopf hopf_from_json(const Json& j, const Field& field);

// {"field", "hopf", "side", "carrier": {"coalgebra"|"algebra": ...}, "map"}.
Json to_json(const ActionTensor& act);

struct LoadedAction {
    ActionTensor action;
    std::optional<FiniteGroupoid> groupoid;
    std::optional<LambdaFunctional> lambda;
};
// The action is "map" (flat tensor), "lambda" (values on the basis of H), or
// "preset": "regular" | "antipode-twisted" | "target" | "isotropy" (with
// "identity": label). "side" defaults to left.
LoadedAction action_from_json(const Json& j, const Field& field);

// {"field", "hopf"?, "values"} with "hopf" as for actions.
LambdaFunctional lambda_from_json(const Json& j, const Field& field, std::optional<FiniteGroupoid>* groupoid = nullptr);

// {"field", "groupoid", "coalgebra", "P": {g: rows}, "theta": {g: rows}}.
Json to_json(const GroupoidPartialAction& gpa);
// Also accepts {"preset": "trivial" | "transport" | "copies" | "two-object"}
// in place of "P"/"theta" (copies and trivial use "coalgebra").
GroupoidPartialAction groupoid_action_from_json(const Json& j, const Field& field);

// {"field", "hopf", "partial", "D", "global", "theta", "pi"}.
Json to_json(const GlobalizationTriple& gt);
GlobalizationTriple globalization_from_json(const Json& j, const Field& field);

// Parses text; throws ParseError with the parser's message.
Json parse_json(const std::string& text);

} // namespace whw

#endif
