#include "whw/json_io.hpp"

#include "whw/errors.hpp"

namespace whw {

namespace {

const Json& need(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object()) throw SchemaError(where + ": expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw SchemaError(where + ": missing \"" + key + "\"");
    return *it;
}

const Json& need_array(const Json& j, const char* key, const std::string& where) {
    const Json& a = need(j, key, where);
    if (!a.is_array()) throw SchemaError(where + ": \"" + key + "\" must be an array");
    return a;
}

std::string need_string(const Json& j, const char* key, const std::string& where) {
    const Json& s = need(j, key, where);
    if (!s.is_string()) throw SchemaError(where + ": \"" + key + "\" must be a string");
    return s.get<std::string>();
}

std::vector<std::string> labels_from_json(const Json& j, const std::string& where) {
    if (!j.is_array()) throw SchemaError(where + ": basis must be an array of labels");
    std::vector<std::string> out;
    for (const auto& l : j) {
        if (!l.is_string()) throw SchemaError(where + ": basis labels must be strings");
        out.push_back(l.get<std::string>());
    }
    return out;
}

Field field_of(const Json& j, const Field& fallback) {
    if (j.is_object() && j.contains("field")) {
        if (!j["field"].is_string()) throw SchemaError("\"field\" must be a string");
        return Field::parse(j["field"].get<std::string>());
    }
    return fallback;
}

Json flat_entries(const std::vector<Scalar>& xs) {
    Json a = Json::array();
    for (const auto& x : xs) a.push_back(scalar_to_json(x));
    return a;
}

void fill_flat(std::vector<Scalar>& out, const Json& j, const Field& f, const std::string& where) {
    if (!j.is_array() || j.size() != out.size())
        throw SchemaError(where + ": expected " + std::to_string(out.size()) + " entries");
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = scalar_from_json(j[i], f);
}

Json rows_of(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_rows(const Json& j, const Field& f, std::size_t rows, std::size_t cols, const std::string& where) {
    if (!j.is_array() || j.size() != rows)
        throw SchemaError(where + ": expected " + std::to_string(rows) + " rows");
    Matrix m(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!j[r].is_array() || j[r].size() != cols)
            throw SchemaError(where + ": row " + std::to_string(r) + " needs " + std::to_string(cols) + " entries");
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = scalar_from_json(j[r][c], f);
    }
    return m;
}

Vector vector_from_json(const Json& j, const FinVec& space, const std::string& where) {
    Vector v = Vector::zero(space);
    fill_flat(v.coords, j, space.field(), where);
    return v;
}

Json vector_to_json(const Vector& v) { return flat_entries(v.coords); }

Side side_from_json(const Json& j) {
    if (!j.contains("side")) return Side::left;
    const Json& s = j["side"];
    if (s == "left") return Side::left;
    if (s == "right") return Side::right;
    throw SchemaError("\"side\" must be \"left\" or \"right\"");
}

std::size_t element_index(const FiniteGroupoid& G, const std::string& label) {
    auto i = G.index_of(label);
    if (!i) throw SchemaError("unknown groupoid element '" + label + "'");
    return *i;
}

} // namespace

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what());
    }
}

Json scalar_to_json(const Scalar& s) {
    if (s.field().is_rational()) return s.to_string();
    return std::to_string(s.residue());
}

Scalar scalar_from_json(const Json& j, const Field& f) {
    if (j.is_string()) return Scalar::parse(f, j.get<std::string>());
    if (j.is_number_integer()) return Scalar::parse(f, std::to_string(j.get<long long>()));
    throw SchemaError("scalar must be a string or an integer");
}

Json to_json(const LinMap& f) {
    Json j;
    j["field"] = f.domain.field().to_string();
    j["domain"] = f.domain.labels();
    j["codomain"] = f.codomain.labels();
    j["matrix"] = rows_of(f.matrix);
    return j;
}

LinMap linmap_from_json(const Json& j) {
    const Field f = Field::parse(need_string(j, "field", "linear map"));
    FinVec dom(f, labels_from_json(need(j, "domain", "linear map"), "domain"));
    FinVec cod(f, labels_from_json(need(j, "codomain", "linear map"), "codomain"));
    Matrix m = matrix_from_rows(need(j, "matrix", "linear map"), f, cod.dim(), dom.dim(), "linear map");
    return LinMap(dom, cod, std::move(m));
}

Json to_json(const Tensor3& t) {
    Json j;
    j["field"] = t.a.field().to_string();
    j["bases"] = Json::array({t.a.labels(), t.b.labels(), t.c.labels()});
    j["entries"] = flat_entries(t.entries);
    return j;
}

Tensor3 tensor3_from_json(const Json& j) {
    const Field f = Field::parse(need_string(j, "field", "tensor"));
    const Json& b = need_array(j, "bases", "tensor");
    if (b.size() != 3) throw SchemaError("tensor: \"bases\" needs three bases");
    Tensor3 t(FinVec(f, labels_from_json(b[0], "tensor")), FinVec(f, labels_from_json(b[1], "tensor")),
              FinVec(f, labels_from_json(b[2], "tensor")));
    fill_flat(t.entries, need(j, "entries", "tensor"), f, "tensor entries");
    return t;
}

Json to_json(const AlgebraData& a) {
    Json j;
    j["basis"] = a.space.labels();
    j["mul"] = flat_entries(a.mul.entries);
    j["unit"] = vector_to_json(a.unit);
    return j;
}

Json to_json(const CoalgebraData& c) {
    Json j;
    j["basis"] = c.space.labels();
    j["comul"] = flat_entries(c.comul.entries);
    Json counit = Json::array();
    for (std::size_t i = 0; i < c.space.dim(); ++i) counit.push_back(scalar_to_json(c.counit.matrix.at(0, i)));
    j["counit"] = counit;
    return j;
}

AlgebraData algebra_from_json(const Json& j, const Field& f) {
    FinVec V(f, labels_from_json(need(j, "basis", "algebra"), "algebra"));
    AlgebraData a{V, Tensor3(V, V, V), Vector::zero(V)};
    fill_flat(a.mul.entries, need(j, "mul", "algebra"), f, "algebra mul");
    a.unit = vector_from_json(need(j, "unit", "algebra"), V, "algebra unit");
    validate_shape(a);
    return a;
}

CoalgebraData coalgebra_from_json(const Json& j, const Field& f) {
    if (j.is_object() && j.contains("preset")) {
        const std::string p = need_string(j, "preset", "coalgebra");
        auto dim = [&] {
            const Json& d = need(j, "dim", "coalgebra preset");
            if (!d.is_number_unsigned() || d.get<std::size_t>() == 0)
                throw SchemaError("coalgebra preset: \"dim\" must be a positive integer");
            return d.get<std::size_t>();
        };
        if (p == "grouplike") return coalgebras::grouplike(f, dim());
        if (p == "divided-power") return coalgebras::divided_power(f);
        if (p == "matrix") return coalgebras::matrix(f, dim());
        throw SchemaError("unknown coalgebra preset '" + p + "'");
    }
    FinVec V(f, labels_from_json(need(j, "basis", "coalgebra"), "coalgebra"));
    CoalgebraData c{V, Tensor3(V, V, V), LinMap::zero(V, FinVec::ground(f))};
    fill_flat(c.comul.entries, need(j, "comul", "coalgebra"), f, "coalgebra comul");
    const Vector eps = vector_from_json(need(j, "counit", "coalgebra"), V, "coalgebra counit");
    for (std::size_t i = 0; i < V.dim(); ++i) c.counit.matrix.at(0, i) = eps.coords[i];
    validate_shape(c);
    return c;
}

Json to_json(const GroupoidSpec& g) {
    Json j;
    j["elements"] = g.elements;
    Json mul = Json::array();
    for (const auto& t : g.mul) mul.push_back(Json::array({t[0], t[1], t[2]}));
    j["mul"] = mul;
    Json inv = Json::object();
    for (const auto& l : g.elements)
        if (auto it = g.inv.find(l); it != g.inv.end()) inv[l] = it->second;
    j["inv"] = inv;
    return j;
}

GroupoidSpec groupoid_spec_from_json(const Json& j) {
    if (j.is_object() && j.contains("disjoint_union")) {
        std::vector<std::string> groups;
        for (const auto& g : need_array(j, "disjoint_union", "groupoid")) groups.push_back(need_string(g, "group", "groupoid component"));
        return disjoint_union_spec(groups);
    }
    GroupoidSpec s;
    s.elements = labels_from_json(need(j, "elements", "groupoid"), "groupoid elements");
    for (const auto& t : need_array(j, "mul", "groupoid")) {
        if (!t.is_array() || t.size() != 3 || !t[0].is_string() || !t[1].is_string() || !t[2].is_string())
            throw SchemaError("groupoid: each product is [g, h, gh]");
        s.mul.push_back({t[0].get<std::string>(), t[1].get<std::string>(), t[2].get<std::string>()});
    }
    const Json& inv = need(j, "inv", "groupoid");
    if (!inv.is_object()) throw SchemaError("groupoid: \"inv\" must be an object");
    for (const auto& [k, v] : inv.items()) {
        if (!v.is_string()) throw SchemaError("groupoid: inverses must be labels");
        s.inv[k] = v.get<std::string>();
    }
    return s;
}

Json to_json(const WeakHopfData& h) {
    Json j;
    j["field"] = h.field().to_string();
    j["basis"] = h.space().labels();
    j["mul"] = flat_entries(h.alg().mul.entries);
    j["unit"] = vector_to_json(h.alg().unit);
    j["comul"] = flat_entries(h.coalg().comul.entries);
    j["counit"] = to_json(h.coalg())["counit"];
    j["antipode"] = rows_of(h.antipode().matrix);
    return j;
}

LoadedHopf hopf_from_json(const Json& j, const Field& fallback) {
    const Field f = field_of(j, fallback);
    if (j.is_object() && j.contains("build")) {
        const std::string kind = need_string(j, "build", "hopf");
        if (kind == "kG" || kind == "kG-dual") {
            FiniteGroupoid G = validate_groupoid(groupoid_spec_from_json(need(j, "groupoid", "hopf")));
            auto h = std::make_shared<const WeakHopfData>(kind == "kG" ? groupoid_algebra(G, f)
                                                                     : dual_groupoid_algebra(G, f));
            return {h, std::move(G), kind};
        }
        if (kind == "abelian-group") {
            auto h = std::make_shared<const WeakHopfData>(
                abelian_group_weak_hopf(parse_abelian_group(need_string(j, "group", "hopf")), f));
            return {h, std::nullopt, kind};
        }
        throw SchemaError("unknown build kind '" + kind + "' (expected kG, kG-dual, abelian-group)");
    }
    FinVec V(f, labels_from_json(need(j, "basis", "hopf"), "hopf"));
    Json alg;
    alg["basis"] = j["basis"];
    alg["mul"] = need(j, "mul", "hopf");
    alg["unit"] = need(j, "unit", "hopf");
    Json coalg;
    coalg["basis"] = j["basis"];
    coalg["comul"] = need(j, "comul", "hopf");
    coalg["counit"] = need(j, "counit", "hopf");
    WeakBialgebraData wb{algebra_from_json(alg, f), coalgebra_from_json(coalg, f)};
    LinMap S(V, V, matrix_from_rows(need(j, "antipode", "hopf"), f, V.dim(), V.dim(), "antipode"));
    return {std::make_shared<const WeakHopfData>(std::move(wb), std::move(S)), std::nullopt, "explicit"};
}

Json to_json(const ActionTensor& act) {
    Json j;
    j["field"] = act.hopf->field().to_string();
    j["hopf"] = to_json(*act.hopf);
    j["side"] = act.side == Side::left ? "left" : "right";
    if (act.on_coalgebra())
        j["carrier"]["coalgebra"] = to_json(act.coalgebra());
    else
        j["carrier"]["algebra"] = to_json(act.algebra());
    j["map"] = flat_entries(act.map.entries);
    return j;
}

namespace {

std::variant<CoalgebraData, AlgebraData> carrier_from_json(const Json& j, const Field& f) {
    if (j.is_object() && j.contains("coalgebra")) return coalgebra_from_json(j["coalgebra"], f);
    if (j.is_object() && j.contains("algebra")) return algebra_from_json(j["algebra"], f);
    throw SchemaError("carrier: expected {\"coalgebra\": ...} or {\"algebra\": ...}");
}

} // namespace

LambdaFunctional lambda_from_json(const Json& j, const Field& fallback, std::optional<FiniteGroupoid>* groupoid) {
    const Field f = field_of(j, fallback);
    LoadedHopf lh = hopf_from_json(need(j, "hopf", "lambda"), f);
    if (groupoid) *groupoid = lh.groupoid;
    std::vector<Scalar> vals(lh.hopf->dim());
    fill_flat(vals, need(j, "values", "lambda"), f, "lambda values");
    return lambda_from_values(lh.hopf, vals);
}

LoadedAction action_from_json(const Json& j, const Field& fallback) {
    const Field f = field_of(j, fallback);
    LoadedHopf lh = hopf_from_json(need(j, "hopf", "action"), f);
    std::optional<FiniteGroupoid> G = lh.groupoid;
    if (!G && j.contains("groupoid")) G = validate_groupoid(groupoid_spec_from_json(j["groupoid"]));
    const Side side = side_from_json(j);

    if (j.contains("preset")) {
        const std::string p = need_string(j, "preset", "action");
        ActionTensor act;
        if (p == "regular")
            act = regular_action(lh.hopf);
        else if (p == "antipode-twisted")
            act = antipode_twisted_action(lh.hopf);
        else if (p == "target")
            act = target_action(lh.hopf);
        else if (p == "isotropy") {
            if (!G) throw SchemaError("isotropy preset needs a groupoid algebra");
            act = isotropy_partial_action(lh.hopf, *G, element_index(*G, need_string(j, "identity", "action")));
        } else
            throw SchemaError("unknown action preset '" + p + "'");
        if (side != Side::left) throw SchemaError("action presets are left actions");
        return {std::move(act), std::move(G), std::nullopt};
    }

    if (j.contains("lambda")) {
        std::vector<Scalar> vals(lh.hopf->dim());
        fill_flat(vals, j["lambda"], f, "lambda values");
        LambdaFunctional lf = lambda_from_values(lh.hopf, vals);
        const Json& car = need(j, "carrier", "action");
        if (!car.is_object() || !car.contains("coalgebra"))
            throw SchemaError("λ-actions act on a coalgebra carrier");
        ActionTensor act = lambda_action(lf, coalgebra_from_json(car["coalgebra"], f), side);
        return {std::move(act), std::move(G), std::move(lf)};
    }

    ActionTensor act = zero_action(lh.hopf, carrier_from_json(need(j, "carrier", "action"), f), side);
    fill_flat(act.map.entries, need(j, "map", "action"), f, "action map");
    return {std::move(act), std::move(G), std::nullopt};
}

Json to_json(const GroupoidPartialAction& gpa) {
    Json j;
    j["field"] = gpa.coalgebra.space.field().to_string();
    j["groupoid"] = to_json(gpa.groupoid.spec());
    j["coalgebra"] = to_json(gpa.coalgebra);
    Json P = Json::object(), T = Json::object();
    for (std::size_t g = 0; g < gpa.groupoid.size(); ++g) {
        P[gpa.groupoid.label(g)] = rows_of(gpa.projections[g].matrix);
        T[gpa.groupoid.label(g)] = rows_of(gpa.isos[g].matrix);
    }
    j["P"] = P;
    j["theta"] = T;
    return j;
}

GroupoidPartialAction groupoid_action_from_json(const Json& j, const Field& fallback) {
    const Field f = field_of(j, fallback);
    FiniteGroupoid G = validate_groupoid(groupoid_spec_from_json(need(j, "groupoid", "groupoid action")));
    if (j.contains("preset")) {
        const std::string p = need_string(j, "preset", "groupoid action");
        if (p == "transport") return transport_action(G, f);
        if (p == "two-object") return two_object_partial_action(G, f);
        const CoalgebraData C = coalgebra_from_json(need(j, "coalgebra", "groupoid action"), f);
        if (p == "trivial") return trivial_group_action(G, C);
        if (p == "copies") return copies_action(G, C);
        throw SchemaError("unknown groupoid action preset '" + p + "'");
    }
    CoalgebraData C = coalgebra_from_json(need(j, "coalgebra", "groupoid action"), f);
    const std::size_t n = C.space.dim();
    auto per_element = [&](const char* key) {
        const Json& m = need(j, key, "groupoid action");
        if (!m.is_object()) throw SchemaError(std::string("groupoid action: \"") + key + "\" must map elements to matrices");
        std::vector<LinMap> out;
        for (std::size_t g = 0; g < G.size(); ++g) {
            auto it = m.find(G.label(g));
            if (it == m.end()) throw SchemaError(std::string(key) + ": no matrix for '" + G.label(g) + "'");
            out.emplace_back(C.space, C.space, matrix_from_rows(*it, f, n, n, std::string(key) + "[" + G.label(g) + "]"));
        }
        for (const auto& [k, v] : m.items()) element_index(G, k);
        return out;
    };
    std::vector<LinMap> P = per_element("P");
    std::vector<LinMap> T = per_element("theta");
    return {std::move(G), std::move(C), std::move(P), std::move(T)};
}

Json to_json(const GlobalizationTriple& gt) {
    Json j;
    j["field"] = gt.partial.hopf->field().to_string();
    j["hopf"] = to_json(*gt.partial.hopf);
    Json partial;
    partial["side"] = gt.partial.side == Side::left ? "left" : "right";
    partial["coalgebra"] = to_json(gt.partial.coalgebra());
    partial["map"] = flat_entries(gt.partial.map.entries);
    j["partial"] = partial;
    j["D"] = to_json(gt.D);
    j["global"] = flat_entries(gt.global_act.map.entries);
    j["theta"] = rows_of(gt.theta.matrix);
    j["pi"] = rows_of(gt.pi.matrix);
    return j;
}

GlobalizationTriple globalization_from_json(const Json& j, const Field& fallback) {
    const Field f = field_of(j, fallback);
    LoadedHopf lh = hopf_from_json(need(j, "hopf", "globalization"), f);
    const Json& pj = need(j, "partial", "globalization");
    ActionTensor partial = zero_action(lh.hopf, coalgebra_from_json(need(pj, "coalgebra", "partial"), f), side_from_json(pj));
    fill_flat(partial.map.entries, need(pj, "map", "partial"), f, "partial map");
    CoalgebraData D = coalgebra_from_json(need(j, "D", "globalization"), f);
    ActionTensor global = zero_action(lh.hopf, D, partial.side);
    fill_flat(global.map.entries, need(j, "global", "globalization"), f, "global map");
    const FinVec& Cs = partial.carrier_space();
    LinMap theta(Cs, D.space, matrix_from_rows(need(j, "theta", "globalization"), f, D.space.dim(), Cs.dim(), "theta"));
    LinMap pi(D.space, D.space, matrix_from_rows(need(j, "pi", "globalization"), f, D.space.dim(), D.space.dim(), "pi"));
    return {std::move(partial), std::move(D), std::move(global), std::move(theta), std::move(pi)};
}

} // namespace whw
