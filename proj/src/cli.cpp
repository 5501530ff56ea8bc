#include "poisson/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "poisson/center.hpp"
#include "poisson/derivation.hpp"
#include "poisson/discriminant.hpp"
#include "poisson/parse.hpp"
#include "poisson/skewiso.hpp"

namespace poisson::cli {

namespace {

using json = nlohmann::ordered_json;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw poisson::Error("cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void render_text(std::ostream& os, const json& value, int indent) {
    const std::string pad(indent, ' ');
    if (value.is_object()) {
        for (const auto& [k, v] : value.items()) {
            if (v.is_object() || (v.is_array() && !v.empty() && !v.front().is_primitive())) {
                os << pad << k << ":\n";
                render_text(os, v, indent + 2);
            } else if (v.is_array()) {
                os << pad << k << ":";
                if (v.empty()) os << " (none)";
                os << "\n";
                for (const auto& item : v)
                    os << pad << "  - " << (item.is_string() ? item.get<std::string>() : item.dump())
                       << "\n";
            } else {
                os << pad << k << ": "
                   << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
            }
        }
    } else if (value.is_array()) {
        for (const auto& item : value) {
            if (item.is_primitive())
                os << pad << "- " << (item.is_string() ? item.get<std::string>() : item.dump())
                   << "\n";
            else {
                os << pad << "-\n";
                render_text(os, item, indent + 2);
            }
        }
    } else {
        os << pad << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
}

void emit(std::ostream& out, const std::string& format, const std::string& command,
          const json& payload) {
    if (format == "json") {
        json report;
        report["command"] = command;
        report["payload"] = payload;
        out << report.dump(2) << "\n";
    } else {
        out << "command: " << command << "\n";
        render_text(out, payload, 0);
    }
}

json structure_json(const PoissonStructure& P) {
    json j;
    j["ring"] = P.ring()->names();
    json table = json::object();
    for (size_t i = 0; i < P.nvars(); ++i)
        for (size_t k = i + 1; k < P.nvars(); ++k)
            table["{" + P.ring()->name(i) + "," + P.ring()->name(k) + "}"] =
                P.table_entry(i, k).str();
    j["table"] = table;
    json rels = json::array();
    if (P.has_relations())
        for (const auto& g : P.relations().generators) rels.push_back(g.str());
    j["relations"] = rels;
    j["jacobi_verified"] = P.jacobi_verified();
    return j;
}

std::vector<Polynomial> relation_generators(const PoissonStructure& P) {
    std::vector<Polynomial> gens;
    if (P.has_relations())
        for (const auto& g : P.relations().generators) gens.push_back(g);
    return gens;
}

const Derivation& named_derivation(const AlgebraFile& file, const std::string& name) {
    auto it = file.derivations.find(name);
    if (it == file.derivations.end())
        throw poisson::Error("no derivation named '" + name + "' in the algebra file");
    return it->second;
}

struct Options {
    std::string format = "text";
    bool skip_jacobi = false;
    std::string algebra_path;
    std::string second_path;
    std::string name;
    std::vector<std::string> names;
    std::vector<std::string> gens;
    std::string poly;
    std::string center_poly;
    std::string keep;
    std::string order = "degrevlex";
    std::string var;
    std::string alpha, delta;
    std::string relative;
    int max_degree = 8;
    int bound = 16;
    int image_degree = 2;
};

MonomialOrder order_from_name(const std::string& name) {
    if (name == "lex") return MonomialOrder::lex();
    if (name == "degrevlex") return MonomialOrder::degrevlex();
    throw poisson::Error("unknown order '" + name + "' (use lex or degrevlex)");
}

int cmd_jacobi(const Options& opt, std::ostream& out) {
    AlgebraFile file = parse_algebra(slurp(opt.algebra_path), true);
    auto fail = jacobi_check(file.structure);
    json payload;
    payload["pass"] = !fail.has_value();
    if (fail) {
        const auto& r = *file.structure.ring();
        payload["witness"] = {{"triple", {r.name(fail->i), r.name(fail->j), r.name(fail->k)}},
                              {"jacobiator", fail->jacobiator.str()}};
    }
    emit(out, opt.format, "jacobi", payload);
    return fail ? 1 : 0;
}

int cmd_center(const Options& opt, std::ostream& out) {
    AlgebraFile file = parse_algebra(slurp(opt.algebra_path), opt.skip_jacobi);
    CenterReport report = center_basis(file.structure, opt.max_degree);
    json payload;
    payload["max_degree"] = report.max_degree;
    payload["complete_up_to"] = report.complete_up_to;
    json basis = json::array();
    for (const auto& z : report.basis) basis.push_back(z.str());
    payload["basis"] = basis;
    payload["note"] =
        "degree-bounded evidence: the basis spans the Poisson center only up to max_degree";
    emit(out, opt.format, "center", payload);
    return 0;
}

int cmd_derivation_check(const Options& opt, std::ostream& out) {
    AlgebraFile file = parse_algebra(slurp(opt.algebra_path), opt.skip_jacobi);
    const Derivation& d = named_derivation(file, opt.name);
    auto witness = poisson_derivation_witness(file.structure, d);
    json payload;
    payload["derivation"] = opt.name;
    payload["is_poisson_derivation"] = !witness.has_value();
    if (witness) {
        const auto& r = *file.structure.ring();
        payload["witness"] = {{"pair", {r.name(witness->i), r.name(witness->j)}},
                              {"lhs", witness->lhs.str()},
                              {"rhs", witness->rhs.str()}};
    }
    emit(out, opt.format, "derivation check", payload);
    return witness ? 1 : 0;
}

int cmd_derivation_lnd(const Options& opt, std::ostream& out) {
    AlgebraFile file = parse_algebra(slurp(opt.algebra_path), opt.skip_jacobi);
    const Derivation& d = named_derivation(file, opt.name);
    NilpotencyStatus status = lnd_status(file.structure, d, opt.bound);
    json payload;
    payload["derivation"] = opt.name;
    switch (status.kind) {
        case NilpotencyKind::NilpotentCertified:
            payload["status"] = "nilpotent-certified";
            payload["order"] = status.order;
            break;
        case NilpotencyKind::NotNilpotentCertified:
            payload["status"] = "not-nilpotent-certified";
            payload["witness"] = {
                {"variable", file.structure.ring()->name(status.witness_var)},
                {"cycle_from", status.cycle_from},
                {"cycle_to", status.cycle_to},
                {"scalar", to_string(status.cycle_scalar)}};
            break;
        case NilpotencyKind::Unknown:
            payload["status"] = "unknown";
            payload["witness"] = {{"note", "no certificate within the iteration bound"},
                                  {"bound", opt.bound}};
            break;
    }
    emit(out, opt.format, "derivation lnd", payload);
    return status.kind == NilpotencyKind::NilpotentCertified ? 0 : 1;
}

int cmd_derivation_find(const Options& opt, std::ostream& out) {
    AlgebraFile file = parse_algebra(slurp(opt.algebra_path), opt.skip_jacobi);
    LndSearchResult found = find_poisson_lnds(file.structure, opt.image_degree, opt.bound);
    json payload;
    payload["image_degree_bound"] = opt.image_degree;
    payload["nilpotency_bound"] = opt.bound;
    payload["poisson_derivation_dimension"] = found.pder_dimension;
    payload["candidates_tested"] = found.candidates_tested;
    json list = json::array();
    for (const auto& d : found.certified) list.push_back(d.str());
    payload["certified_lnds"] = list;
    payload["note"] =
        "bounded search: an empty list means no certificate at these bounds, not a rigidity proof";
    emit(out, opt.format, "derivation find", payload);
    return 0;
}

int cmd_ml(const Options& opt, std::ostream& out) {
    AlgebraFile file = parse_algebra(slurp(opt.algebra_path), opt.skip_jacobi);
    std::vector<FamilyMember> family;
    if (opt.names.empty()) {
        for (const auto& d : find_poisson_lnds(file.structure, opt.image_degree, opt.bound).certified)
            family.emplace_back(d);
    } else {
        for (const auto& name : opt.names) family.emplace_back(named_derivation(file, name));
    }
    std::optional<Polynomial> relative;
    if (!opt.relative.empty())
        relative = parse_polynomial(opt.relative, file.structure.ring());
    MLReport report = ml_kernel(file.structure, family, opt.max_degree, relative, opt.bound);
    json payload;
    payload["dmax"] = report.dmax;
    json fam = json::array();
    for (const auto& member : report.family) {
        if (std::holds_alternative<Derivation>(member))
            fam.push_back(std::get<Derivation>(member).str());
        else
            fam.push_back(std::get<HigherDerivation>(member).str());
    }
    payload["family"] = fam;
    payload["notices"] = report.notices;
    json basis = json::array();
    for (const auto& p : report.kernel_basis) basis.push_back(p.str());
    payload["kernel_basis"] = basis;
    payload["note"] =
        "degree-bounded evidence relative to the listed family; not the full Makar-Limanov "
        "invariant";
    emit(out, opt.format, "ml", payload);
    return 0;
}

int cmd_discriminant(const Options& opt, std::ostream& out) {
    AlgebraFile file = parse_algebra(slurp(opt.algebra_path), opt.skip_jacobi);
    if (opt.center_poly.empty())
        throw poisson::Error("discriminant: --center <poly> is required");
    Polynomial g = parse_polynomial(opt.center_poly, file.structure.ring());
    DiscriminantReport report = discriminant_poisson_points(file.structure, g);
    json payload;
    payload["property"] = "poisson-rational-point locus";
    payload["central_element"] = report.central_element.str();
    payload["critical_polynomial"] = report.critical_polynomial.str();
    payload["discriminant"] = report.discriminant.str();
    payload["locus_note"] = report.locus_note;
    emit(out, opt.format, "discriminant", payload);
    return 0;
}

int cmd_skewiso(const Options& opt, std::ostream& out) {
    SkewMatrix a = parse_skew_matrix(slurp(opt.algebra_path));
    SkewMatrix b = parse_skew_matrix(slurp(opt.second_path));
    if (a.dim() > 12 || b.dim() > 12)
        throw poisson::Error("skewiso: dimensions above 12 are not searched; split the problem");
    IsoDecision decision = iso_decision(a, b);
    json payload;
    payload["isomorphic"] = decision.isomorphic;
    if (!decision.hypothesis_holds)
        payload["warning"] =
            "some off-diagonal entry of the source matrix is zero; the matrix criterion is only "
            "proven under the all-nonzero hypothesis";
    if (decision.sigma) {
        json sigma = json::array();
        for (size_t v : *decision.sigma) sigma.push_back(v + 1);  // 1-based
        payload["sigma"] = sigma;
        payload["map_verified"] = decision.map_verified;
    } else {
        payload["witness"] = "exhausted the pruned permutation search without a match";
    }
    emit(out, opt.format, "skewiso", payload);
    return decision.isomorphic ? 0 : 1;
}

int cmd_groebner(const Options& opt, std::ostream& out) {
    AlgebraFile file = parse_algebra(slurp(opt.algebra_path), opt.skip_jacobi);
    std::vector<Polynomial> gens = relation_generators(file.structure);
    GroebnerBasis gb = gens.empty() ? GroebnerBasis{file.structure.ring(), order_from_name(opt.order), {}}
                                    : buchberger(gens, order_from_name(opt.order));
    json payload;
    payload["order"] = opt.order;
    json basis = json::array();
    for (const auto& g : gb.generators) basis.push_back(g.str());
    payload["basis"] = basis;
    emit(out, opt.format, "groebner", payload);
    return 0;
}

int cmd_member(const Options& opt, std::ostream& out) {
    AlgebraFile file = parse_algebra(slurp(opt.algebra_path), opt.skip_jacobi);
    std::vector<Polynomial> gens = relation_generators(file.structure);
    Polynomial p = parse_polynomial(opt.poly, file.structure.ring());
    GroebnerBasis gb = gens.empty() ? GroebnerBasis{file.structure.ring(), MonomialOrder::degrevlex(), {}}
                                    : buchberger(gens);
    Polynomial nf = normal_form(p, gb);
    json payload;
    payload["polynomial"] = p.str();
    payload["member"] = nf.is_zero();
    payload["normal_form"] = nf.str();
    emit(out, opt.format, "member", payload);
    return nf.is_zero() ? 0 : 1;
}

int cmd_eliminate(const Options& opt, std::ostream& out) {
    AlgebraFile file = parse_algebra(slurp(opt.algebra_path), opt.skip_jacobi);
    std::vector<Polynomial> gens = relation_generators(file.structure);
    std::set<std::string> keep;
    std::istringstream ks(opt.keep);
    std::string item;
    while (std::getline(ks, item, ',')) {
        if (!item.empty()) keep.insert(item);
    }
    if (keep.empty()) throw poisson::Error("eliminate: --keep needs at least one variable");
    json payload;
    payload["keep"] = keep;
    json result = json::array();
    if (!gens.empty())
        for (const auto& g : eliminate(gens, keep)) result.push_back(g.str());
    payload["generators"] = result;
    emit(out, opt.format, "eliminate", payload);
    return 0;
}

int cmd_quotient(const Options& opt, std::ostream& out) {
    AlgebraFile file = parse_algebra(slurp(opt.algebra_path), opt.skip_jacobi);
    std::vector<Polynomial> gens;
    for (const auto& g : opt.gens)
        gens.push_back(parse_polynomial(g, file.structure.ring()));
    PoissonIdeal ideal = make_poisson_ideal(file.structure, gens);
    PoissonStructure Q = quotient(file.structure, ideal);
    emit(out, opt.format, "quotient", structure_json(Q));
    return 0;
}

int cmd_tensor(const Options& opt, std::ostream& out) {
    AlgebraFile a = parse_algebra(slurp(opt.algebra_path), opt.skip_jacobi);
    AlgebraFile b = parse_algebra(slurp(opt.second_path), opt.skip_jacobi);
    emit(out, opt.format, "tensor", structure_json(tensor(a.structure, b.structure)));
    return 0;
}

int cmd_ore(const Options& opt, std::ostream& out) {
    AlgebraFile file = parse_algebra(slurp(opt.algebra_path), opt.skip_jacobi);
    const Ring& r = file.structure.ring();
    Derivation alpha = opt.alpha.empty() ? Derivation::zero(r) : named_derivation(file, opt.alpha);
    Derivation delta = opt.delta.empty() ? Derivation::zero(r) : named_derivation(file, opt.delta);
    if (opt.var.empty()) throw poisson::Error("ore: --var <name> is required");
    PoissonStructure ext = ore_extend(file.structure, alpha, delta, opt.var);
    emit(out, opt.format, "ore", structure_json(ext));
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"Exact computations with Poisson structures on polynomial rings", "poisson"};
    app.require_subcommand(1);
    app.add_option("--format", opt.format, "Output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--skip-jacobi", opt.skip_jacobi,
                 "Load algebra files without the Jacobi identity check");

    auto* jacobi = app.add_subcommand("jacobi", "Verify the Jacobi identity of an algebra file");
    jacobi->add_option("file", opt.algebra_path)->required();

    auto* center = app.add_subcommand("center", "Degree-truncated Poisson center basis");
    center->add_option("file", opt.algebra_path)->required();
    center->add_option("--max-degree", opt.max_degree, "Truncation degree (default 8)");

    auto* derivation = app.add_subcommand("derivation", "Derivation checks and searches");
    derivation->require_subcommand(1);
    auto* dcheck = derivation->add_subcommand("check", "Poisson-derivation law on generators");
    dcheck->add_option("file", opt.algebra_path)->required();
    dcheck->add_option("name", opt.name)->required();
    auto* dlnd = derivation->add_subcommand("lnd", "Local nilpotency certificate");
    dlnd->add_option("file", opt.algebra_path)->required();
    dlnd->add_option("name", opt.name)->required();
    dlnd->add_option("--bound", opt.bound, "Iteration bound (default 16)");
    auto* dfind = derivation->add_subcommand("find", "Search for Poisson LNDs");
    dfind->add_option("file", opt.algebra_path)->required();
    dfind->add_option("--degree", opt.image_degree, "Image degree bound (default 2)");
    dfind->add_option("--bound", opt.bound, "Nilpotency iteration bound (default 16)");
    auto* dml = derivation->add_subcommand("ml", "Makar-Limanov kernel for a family");
    dml->add_option("file", opt.algebra_path)->required();
    dml->add_option("names", opt.names, "Derivation names (default: search)");
    dml->add_option("--max-degree", opt.max_degree, "Kernel degree bound (default 8)");
    dml->add_option("--bound", opt.bound, "Nilpotency bound (default 16)");
    dml->add_option("--degree", opt.image_degree, "Search image degree bound (default 2)");
    dml->add_option("--relative", opt.relative, "Central element d for the relative variant");

    auto* ml = app.add_subcommand("ml", "Alias for derivation ml");
    ml->add_option("file", opt.algebra_path)->required();
    ml->add_option("names", opt.names);
    ml->add_option("--max-degree", opt.max_degree);
    ml->add_option("--bound", opt.bound);
    ml->add_option("--degree", opt.image_degree);
    ml->add_option("--relative", opt.relative);

    auto* discriminant = app.add_subcommand("discriminant", "Poisson-point discriminant over a central element");
    discriminant->add_option("file", opt.algebra_path)->required();
    discriminant->add_option("--center", opt.center_poly, "Designated central element g")->required();

    auto* skewiso = app.add_subcommand("skewiso", "Skew quadratic isomorphism classifier");
    skewiso->add_option("a", opt.algebra_path)->required();
    skewiso->add_option("b", opt.second_path)->required();

    auto* groebner = app.add_subcommand("groebner", "Reduced Groebner basis of the relation ideal");
    groebner->add_option("file", opt.algebra_path)->required();
    groebner->add_option("--order", opt.order, "lex or degrevlex (default)");

    auto* member = app.add_subcommand("member", "Ideal membership via normal form");
    member->add_option("file", opt.algebra_path)->required();
    member->add_option("--poly", opt.poly)->required();

    auto* elim = app.add_subcommand("eliminate", "Elimination ideal of the relation ideal");
    elim->add_option("file", opt.algebra_path)->required();
    elim->add_option("--keep", opt.keep, "Comma-separated variables to keep")->required();

    auto* quot = app.add_subcommand("quotient", "Quotient by a Poisson ideal");
    quot->add_option("file", opt.algebra_path)->required();
    quot->add_option("--gen", opt.gens, "Ideal generator (repeatable)")->required();

    auto* tens = app.add_subcommand("tensor", "Tensor product of two algebra files");
    tens->add_option("a", opt.algebra_path)->required();
    tens->add_option("b", opt.second_path)->required();

    auto* ore = app.add_subcommand("ore", "Poisson-Ore extension A[z; alpha, delta]");
    ore->add_option("file", opt.algebra_path)->required();
    ore->add_option("--var", opt.var, "Name of the new variable")->required();
    ore->add_option("--alpha", opt.alpha, "Derivation name for alpha (default 0)");
    ore->add_option("--delta", opt.delta, "Derivation name for delta (default 0)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*jacobi) return cmd_jacobi(opt, out);
        if (*center) return cmd_center(opt, out);
        if (*dcheck) return cmd_derivation_check(opt, out);
        if (*dlnd) return cmd_derivation_lnd(opt, out);
        if (*dfind) return cmd_derivation_find(opt, out);
        if (*dml || *ml) return cmd_ml(opt, out);
        if (*discriminant) return cmd_discriminant(opt, out);
        if (*skewiso) return cmd_skewiso(opt, out);
        if (*groebner) return cmd_groebner(opt, out);
        if (*member) return cmd_member(opt, out);
        if (*elim) return cmd_eliminate(opt, out);
        if (*quot) return cmd_quotient(opt, out);
        if (*tens) return cmd_tensor(opt, out);
        if (*ore) return cmd_ore(opt, out);
    } catch (const poisson::Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace poisson::cli
