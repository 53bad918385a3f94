#include "cli.hpp"

#include "whw/errors.hpp"
#include "whw/json_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

namespace whw::cli {

namespace {

struct Counted {
    Report report;
    bool counted = true;
};

struct Outcome {
    std::vector<Counted> reports;
    std::optional<Json> result;

    void add(Report r, bool counted = true) { reports.push_back({std::move(r), counted}); }
    bool passed() const {
        for (const auto& c : reports)
            if (c.counted && !c.report.passed()) return false;
        return true;
    }
};

struct Settings {
    std::optional<std::string> field_text;
    std::string format = "text";
    std::string output;
    Field field;
};

Json load_doc(const std::string& path, const Settings& s) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    Json doc = parse_json(buf.str());
    if (s.field_text && doc.is_object() && doc.contains("field") && doc["field"].is_string() &&
        !(Field::parse(doc["field"].get<std::string>()) == s.field))
        throw SchemaError(path + " is over " + doc["field"].get<std::string>() + " but --field is " + *s.field_text);
    return doc;
}

std::string describe(const Vector& v) {
    std::string out;
    for (std::size_t i = 0; i < v.coords.size(); ++i) {
        if (v.coords[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        if (!v.coords[i].is_one()) out += v.coords[i].to_string() + "·";
        out += v.space.label(i);
    }
    return out.empty() ? "0" : out;
}

// First index where two families of maps differ, as a report entry.
void compare_maps(Report& r, const std::string& label, const FiniteGroupoid& G, const std::vector<LinMap>& a,
                  const std::vector<LinMap>& b) {
    for (std::size_t g = 0; g < G.size(); ++g)
        if (!(a[g].matrix == b[g].matrix)) {
            Verdict& v = r.add(label, false, "differs at " + G.label(g));
            v.witness = Witness{{g}, {G.label(g)}};
            return;
        }
    r.add(label, true);
}

Outcome cmd_validate_groupoid(const Json& doc) {
    Outcome o;
    Report r("groupoid");
    const GroupoidSpec spec = groupoid_spec_from_json(doc);
    try {
        const FiniteGroupoid G = validate_groupoid(spec);
        r.add("groupoid axioms", true,
              std::to_string(G.size()) + " elements, " + std::to_string(G.identities().size()) + " objects");
        for (std::size_t e : G.identities())
            r.add("isotropy at " + G.label(e), true, "order " + std::to_string(G.isotropy(e).size()), false);
        o.result = to_json(G.spec());
    } catch (const AxiomViolation& e) {
        r.add("groupoid axiom " + e.axiom(), false, e.witness());
    }
    o.add(std::move(r));
    return o;
}

Outcome cmd_build(const std::string& kind, const Json& doc, const Field& f) {
    Json directive;
    directive["build"] = kind;
    if (kind == "abelian-group")
        directive["group"] = doc.contains("group") ? doc["group"] : Json();
    else
        directive["groupoid"] = doc;
    Outcome o;
    o.result = to_json(*hopf_from_json(directive, f).hopf);
    return o;
}

Outcome cmd_check(const std::string& kind, const Json& doc, const Field& f) {
    Outcome o;
    if (kind == "weak-hopf" || kind == "identities" || kind == "hopf") {
        const LoadedHopf lh = hopf_from_json(doc, f);
        if (kind == "weak-hopf") o.add(check_weak_hopf(*lh.hopf));
        if (kind != "hopf") o.add(check_identities(*lh.hopf));
        if (kind == "hopf") o.add(is_hopf(*lh.hopf).report());
        return o;
    }
    if (kind == "lambda") {
        std::optional<FiniteGroupoid> G;
        const LambdaFunctional lf = lambda_from_json(doc, f, &G);
        o.add(check_lambda_partial(lf));
        o.add(check_lambda_global(lf), false);
        const std::string built = doc.contains("hopf") && doc["hopf"].contains("build") ? doc["hopf"]["build"].get<std::string>() : "";
        if (G && built == "kG") o.add(check_k_partial_action_group_criterion(lf, *G).report);
        if (G && built == "kG-dual") o.add(check_dual_k_partial_action_criterion(lf, *G).report);
        return o;
    }
    if (kind == "groupoid-action") {
        o.add(validate_groupoid_partial_action(groupoid_action_from_json(doc, f)));
        return o;
    }
    if (kind == "globalization") {
        const GlobalizationTriple gt = globalization_from_json(doc, f);
        o.add(check_globalization(gt));
        o.add(check_algebra_globalization(dual_globalization_data(gt)));
        return o;
    }
    const ActionTensor act = action_from_json(doc, f).action;
    const bool needs_coalgebra = kind == "pmc" || kind == "mc";
    if (act.on_coalgebra() != needs_coalgebra)
        throw ShapeMismatch("check " + kind + " needs an action on " + (needs_coalgebra ? "a coalgebra" : "an algebra"));
    if (kind == "pmc") {
        o.add(check_partial_module_coalgebra(act));
        o.add(check_ht_hs_propositions(act), false);
    } else if (kind == "mc") {
        o.add(check_module_coalgebra(act));
    } else if (kind == "pma") {
        o.add(check_partial_module_algebra(act));
    } else {
        o.add(check_module_algebra(act));
    }
    return o;
}

Outcome cmd_equiv(const Json& doc, const Field& f) {
    Outcome o;
    Report rt("round trip");
    if (doc.contains("hopf")) {
        const LoadedAction la = action_from_json(doc, f);
        if (!la.groupoid) throw SchemaError("equiv needs an action of a groupoid algebra (build kG or a \"groupoid\" key)");
        const GroupoidPartialAction gpa = from_kG_action(la.action, *la.groupoid);
        o.add(validate_groupoid_partial_action(gpa));
        const ActionTensor back = to_kG_action(gpa);
        rt.add("to_kG∘from_kG = id", back.map == la.action.map);
        o.result = to_json(gpa);
    } else {
        const GroupoidPartialAction gpa = groupoid_action_from_json(doc, f);
        const Report v = validate_groupoid_partial_action(gpa);
        o.add(v);
        if (!v.passed()) {
            o.add(rt);
            return o;
        }
        const ActionTensor act = to_kG_action(gpa);
        o.add(check_partial_module_coalgebra(act));
        const GroupoidPartialAction back = from_kG_action(act, gpa.groupoid);
        compare_maps(rt, "from_kG∘to_kG preserves P_g", gpa.groupoid, gpa.projections, back.projections);
        compare_maps(rt, "from_kG∘to_kG preserves θ_g", gpa.groupoid, gpa.isos, back.isos);
        o.result = to_json(act);
    }
    o.add(std::move(rt));
    return o;
}

Outcome cmd_dualize(const Json& doc, const Field& f) {
    const ActionTensor act = action_from_json(doc, f).action;
    if (!act.on_coalgebra()) throw ShapeMismatch("dualize expects an action on a coalgebra");
    const bool left = act.side == Side::left;
    const ActionTensor dual = left ? dualize_coalgebra_action(act) : dualize_right_coalgebra_action(act);
    const ActionTensor back = left ? undualize_algebra_action(dual, act.coalgebra())
                                   : undualize_left_algebra_action(dual, act.coalgebra());
    Outcome o;
    o.add(transfer_report(act));
    Report rt("round trip");
    rt.add("undualize∘dualize = id", back == act);
    o.add(std::move(rt));
    o.result = to_json(dual);
    return o;
}

Outcome cmd_globalize(const Json& doc, const Field& f, const std::optional<std::string>& grouplike) {
    const ActionTensor act = action_from_json(doc, f).action;
    if (!act.on_coalgebra() || act.side != Side::right)
        throw ShapeMismatch("globalize expects a right action on a coalgebra");
    const WeakHopfData& H = *act.hopf;
    Vector e;
    if (grouplike) {
        auto i = H.space().index_of(*grouplike);
        if (!i) throw SchemaError("no basis element '" + *grouplike + "' in H");
        e = Vector::basis(H.space(), *i);
    } else {
        const auto found = find_basis_grouplikes(H, act);
        if (found.empty())
            throw HypothesisViolated(HypothesisViolated::Which::grouplike,
                                     "no basis grouplike absorbs the action; name one with --grouplike");
        e = found.front();
    }
    Outcome o;
    Report choice("grouplike");
    choice.add("e", true, describe(e), false);
    o.add(std::move(choice), false);
    o.add(check_grouplike_hypotheses(act, e));
    const GlobalizationTriple gt = standard_globalization(act, e);
    Report coalg = check_globalization(gt);
    const bool ok = coalg.passed();
    o.add(std::move(coalg));
    o.add(ok ? dual_globalization_transfer(gt).report : check_algebra_globalization(dual_globalization_data(gt)));
    o.result = to_json(gt);
    return o;
}

void emit(const std::string& command, const Outcome& o, const Settings& s, std::ostream& out) {
    if (!s.output.empty() && o.result) {
        std::ofstream f(s.output);
        if (!f) throw ParseError("cannot write " + s.output);
        f << o.result->dump(2) << "\n";
    }
    if (s.format == "json") {
        Json doc;
        doc["command"] = command;
        doc["passed"] = o.passed();
        doc["reports"] = Json::array();
        for (const auto& c : o.reports) {
            Json r = c.report.to_json();
            r["counted"] = c.counted;
            doc["reports"].push_back(std::move(r));
        }
        if (o.result) doc["result"] = *o.result;
        out << doc.dump(2) << "\n";
        return;
    }
    for (const auto& c : o.reports) {
        if (!c.counted) out << "(not counted) ";
        out << c.report.to_text();
    }
    if (command == "build" && s.output.empty() && o.result) out << o.result->dump(2) << "\n";
    if (command != "build") out << "overall: " << (o.passed() ? "PASS" : "FAIL") << "\n";
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact checks for weak Hopf algebras and their partial actions"};
    app.require_subcommand(1);
    Settings s;
    std::string field_text;
    app.add_option("--field", field_text, "Q or Fp:<p>, used when a file names no field");
    app.add_option("--format", s.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    app.add_option("-o,--output", s.output, "write the constructed object as JSON to this file");

    std::string path, kind, grouplike_label;

    auto* vg = app.add_subcommand("validate-groupoid", "check a groupoid table");
    vg->add_option("path", path)->required()->check(CLI::ExistingFile);

    auto* build = app.add_subcommand("build", "build kG, (kG)* or an abelian group weak Hopf algebra");
    build->add_option("kind", kind)->required()->check(CLI::IsMember({"kG", "kG-dual", "abelian-group"}));
    build->add_option("path", path)->required()->check(CLI::ExistingFile);

    auto* check = app.add_subcommand("check", "run one checker suite");
    check->add_option("kind", kind)
        ->required()
        ->check(CLI::IsMember({"weak-hopf", "identities", "hopf", "pmc", "pma", "mc", "ma", "lambda",
                               "groupoid-action", "globalization"}));
    check->add_option("path", path)->required()->check(CLI::ExistingFile);

    auto* equiv = app.add_subcommand("equiv", "groupoid partial action <-> kG action round trip");
    equiv->add_option("path", path)->required()->check(CLI::ExistingFile);

    auto* dualize = app.add_subcommand("dualize", "dual action on C* with the PMC/PMA transfer report");
    dualize->add_option("path", path)->required()->check(CLI::ExistingFile);

    auto* glob = app.add_subcommand("globalize", "standard globalization C⊗eH of a right partial action");
    glob->add_option("path", path)->required()->check(CLI::ExistingFile);
    auto* grouplike = glob->add_option("--grouplike", grouplike_label, "basis label of the grouplike e");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage;
    }

    try {
        if (!field_text.empty()) {
            s.field_text = field_text;
            s.field = Field::parse(field_text);
        }
    } catch (const Error& e) {
        err << "--field: " << e.what() << "\n";
        return usage;
    }

    try {
        const Json doc = load_doc(path, s);
        Outcome o;
        std::string command;
        if (*vg) {
            command = "validate-groupoid";
            o = cmd_validate_groupoid(doc);
        } else if (*build) {
            command = "build";
            o = cmd_build(kind, doc, s.field);
        } else if (*check) {
            command = "check " + kind;
            o = cmd_check(kind, doc, s.field);
        } else if (*equiv) {
            command = "equiv";
            o = cmd_equiv(doc, s.field);
        } else if (*dualize) {
            command = "dualize";
            o = cmd_dualize(doc, s.field);
        } else {
            command = "globalize";
            o = cmd_globalize(doc, s.field,
                              grouplike->count() ? std::optional<std::string>(grouplike_label) : std::nullopt);
        }
        emit(command, o, s, out);
        return o.passed() ? ok : check_failed;
    } catch (const ParseError& e) {
        err << e.what() << "\n";
        return parse_error;
    } catch (const SchemaError& e) {
        err << e.what() << "\n";
        return schema_error;
    } catch (const FieldMismatch& e) {
        err << e.what() << "\n";
        return schema_error;
    } catch (const nlohmann::json::exception& e) {
        err << "SchemaError: " << e.what() << "\n";
        return schema_error;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return precondition;
    } catch (const std::invalid_argument& e) {
        err << "precondition: " << e.what() << "\n";
        return precondition;
    }
}

} // namespace whw::cli
