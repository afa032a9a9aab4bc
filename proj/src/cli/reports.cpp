#include "qtrans/cli/reports.hpp"

#include "qtrans/characters/characters.hpp"
#include "qtrans/haar/haar.hpp"
#include "qtrans/hopf/axioms.hpp"
#include "qtrans/peter_weyl/peter_weyl.hpp"
#include "qtrans/translations/classification.hpp"

#include <sstream>

namespace qtrans {

namespace {

Json residual_json(const Residual& r, double tol) {
    Json j;
    j["value"] = r.value;
    j["exact"] = r.exact;
    j["verdict"] = to_string(r.verdict(tol));
    return j;
}

Json header(const std::string& command, const FiniteHopfStar& h, const RunOptions& opt) {
    Json j;
    j["command"] = command;
    j["algebra"] = {{"dim", h.dim()}, {"mode", to_string(h.mode())}, {"basis", h.basis_names()}};
    j["tolerance"] = opt.tol;
    j["seed"] = opt.seed;
    return j;
}

Json axioms_json(const AxiomReport& rep, double tol) {
    Json list = Json::array();
    for (const auto& c : rep.checks) {
        Json j;
        j["family"] = c.family;
        j["name"] = c.name;
        j["residual"] = residual_json(c.residual, tol);
        j["verdict"] = to_string(c.verdict);
        list.push_back(j);
    }
    return {{"checks", list}, {"exact", rep.exact}, {"verdict", to_string(rep.verdict)}};
}

// Shared preamble: every command refuses to go on when the axioms fail.
bool axioms_gate(const FiniteHopfStar& h, const RunOptions& opt, CommandResult& out) {
    const AxiomReport rep = verify_axioms(h, opt.tol);
    out.report["axioms"] = axioms_json(rep, opt.tol);
    if (rep.passed()) return true;
    out.exit_code = kExitAxiom;
    const auto f = rep.first_failure();
    out.diagnostic = "axiom check " + f->family + "/" + f->name + " is " + to_string(f->verdict) + " (residual " +
                     std::to_string(f->residual.value) + ")";
    out.report["verdict"] = "fail";
    return false;
}

void finish(CommandResult& out, Verdict v, const std::string& what) {
    out.report["verdict"] = to_string(v);
    if (v == Verdict::Pass) return;
    out.exit_code = kExitAxiom;
    out.diagnostic = what + " " + to_string(v);
}

Json values_json(const Tensor& v) {
    Json j = Json::array();
    for (const auto& s : v.entries()) j.push_back(scalar_json(s));
    return j;
}

Json table_json(const CayleyTable& t) {
    Json j = Json::array();
    for (const auto& row : t) j.push_back(row);
    return j;
}

Json characters_json(const ClassicalSubgroup& g, double tol) {
    Json list = Json::array();
    for (std::size_t i = 0; i < g.characters.size(); ++i) {
        const auto& c = g.characters[i];
        Json j;
        j["index"] = i;
        j["values"] = values_json(c.values());
        j["certificate"] = {{"multiplicativity", residual_json(c.certificate.multiplicativity, tol)},
                            {"unitality", residual_json(c.certificate.unitality, tol)},
                            {"star", residual_json(c.certificate.star, tol)}};
        j["verdict"] = to_string(c.certificate.verdict);
        list.push_back(j);
    }
    return list;
}

Json translation_json(const Translation& t, std::size_t index, double tol) {
    Json j;
    j["index"] = index;
    j["side"] = to_string(t.side);
    j["matrix"] = tensor_json(t.matrix);
    const auto& c = t.certificate;
    j["certificate"] = {{"intertwining", residual_json(c.intertwining, tol)},
                        {"unitality", residual_json(c.unitality, tol)},
                        {"multiplicativity", residual_json(c.multiplicativity, tol)},
                        {"star", residual_json(c.star, tol)},
                        {"invertible", c.invertible}};
    j["verdict"] = to_string(c.verdict);
    return j;
}

Json embedding_json(const EmbeddingReport& e, const std::vector<PeterWeylBlock>& blocks, double tol) {
    Json tuples = Json::array();
    for (std::size_t i = 0; i < e.tuples.size(); ++i) {
        Json mats = Json::array();
        for (const auto& m : e.tuples[i].matrices) mats.push_back(tensor_json(m));
        tuples.push_back({{"translation", i}, {"blocks", mats}, {"unitarity", residual_json(e.tuples[i].unitarity, tol)}});
    }
    Json dims = Json::array();
    for (const auto& b : blocks) dims.push_back(b.dim);
    return {{"block_dims", dims},
            {"tuples", tuples},
            {"injective", e.injective},
            {"homomorphism", residual_json(e.homomorphism, tol)},
            {"unitarity", residual_json(e.unitarity, tol)},
            {"verdict", to_string(e.verdict)},
            {"violation", e.violation}};
}

Json blocks_json(const std::vector<PeterWeylBlock>& blocks, double tol) {
    Json list = Json::array();
    std::size_t sum = 0;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        const auto& b = blocks[i];
        sum += b.dim * b.dim;
        Json entries = Json::array();
        for (const auto& e : b.entries) entries.push_back(values_json(e));
        list.push_back({{"index", i},
                        {"dim", b.dim},
                        {"coalgebra_law", residual_json(b.coalgebra_law, tol)},
                        {"unitarity", residual_json(b.unitarity, tol)},
                        {"character", values_json(b.character)},
                        {"entries", entries}});
    }
    return list;
}

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << x;
    return os.str();
}

std::string scalar_text(const Json& s) {
    auto part = [](const Json& p) { return p.is_string() ? p.get<std::string>() : Json(p).dump(); };
    const std::string im = part(s[1]);
    if (im == "0" || im == "0.0") return part(s[0]);
    return part(s[0]) + (im.front() == '-' ? " - " + im.substr(1) : " + " + im) + "i";
}

}  // namespace

Json scalar_json(const Scalar& s) {
    if (s.is_exact()) {
        const auto& q = s.exact_value();
        return Json::array({rational_to_string(q.re), rational_to_string(q.im)});
    }
    return Json::array({s.real(), s.imag()});
}

Json tensor_json(const Tensor& t) {
    if (t.rank() == 1) return values_json(t);
    Json rows = Json::array();
    for (std::size_t r = 0; r < t.rows(); ++r) rows.push_back(values_json(t.row(r)));
    return rows;
}

CommandResult run_verify(const HopfPtr& h, const RunOptions& opt) {
    CommandResult out;
    out.report = header("verify", *h, opt);
    const bool axioms_ok = axioms_gate(*h, opt, out);
    const CstarReport cs = cstar_report(h, opt.tol);
    out.report["cstar"] = {{"haar_found", cs.haar_found},
                           {"gram_positive", cs.gram_positive},
                           {"gram_min_eigenvalue", cs.gram_min},
                           {"gram_max_eigenvalue", cs.gram_max},
                           {"representation", to_string(cs.representation)},
                           {"ok", cs.ok()},
                           {"reason", cs.reason}};
    if (cs.haar_found) {
        const HaarState hs = haar_state(h, opt.tol);
        out.report["haar"] = {{"values", values_json(hs.h.values)},
                              {"solution_dim", hs.solution_dim},
                              {"left_invariance", residual_json(hs.left_invariance, opt.tol)},
                              {"right_invariance", residual_json(hs.right_invariance, opt.tol)},
                              {"traciality", residual_json(traciality_residual(hs), opt.tol)},
                              {"antipode_invariance", residual_json(antipode_invariance_residual(hs), opt.tol)}};
    }
    if (axioms_ok && !cs.ok()) {
        out.exit_code = kExitAxiom;
        out.diagnostic = "C*-certification failed: " + cs.reason;
    }
    out.report["verdict"] = out.exit_code == kExitOk ? "pass" : "fail";
    return out;
}

CommandResult run_characters(const HopfPtr& h, const RunOptions& opt) {
    CommandResult out;
    out.report = header("characters", *h, opt);
    if (!axioms_gate(*h, opt, out)) return out;
    try {
        const ClassicalSubgroup g = classical_subgroup(h, opt.seed, opt.tol);
        out.report["characters"] = characters_json(g, opt.tol);
        out.report["group"] = {{"order", g.characters.size()},
                               {"identity", g.identity_index},
                               {"inverse", g.inverse_table},
                               {"cayley", table_json(g.cayley)},
                               {"inverse_star_agreement", residual_json(g.inverse_star_agreement, opt.tol)}};
        Verdict v = g.inverse_star_agreement.verdict(opt.tol);
        for (const auto& c : g.characters) v = combine(v, c.certificate.verdict);
        finish(out, v, "character certificates");
    } catch (const Error& e) {
        out.exit_code = kExitAxiom;
        out.diagnostic = e.what();
        out.report["verdict"] = "fail";
    }
    return out;
}

CommandResult run_translations(const HopfPtr& h, const RunOptions& opt) {
    CommandResult out;
    out.report = header("translations", *h, opt);
    if (!axioms_gate(*h, opt, out)) return out;
    try {
        const ClassicalSubgroup g = classical_subgroup(h, opt.seed, opt.tol);
        const TranslationMonoid m = translation_monoid(g.characters, opt.side, opt.tol);
        Json list = Json::array();
        for (std::size_t i = 0; i < m.elements.size(); ++i) {
            Json j = translation_json(m.elements[i], i, opt.tol);
            j["character"] = values_json(g.characters[i].values());
            list.push_back(j);
        }
        const auto brute = brute_force_translations(h, opt.seed, opt.side, opt.tol);
        out.report["side"] = to_string(opt.side);
        out.report["composition"] = opt.side == Side::Right ? "opposite" : "ordinary";
        out.report["translations"] = list;
        out.report["table"] = table_json(m.table);
        out.report["identity"] = m.identity_index;
        out.report["endomorphism_space_dim"] = brute.space_dim;
        out.report["brute_force_count"] = brute.matrices.size();
        out.report["brute_force_suspicious"] = brute.suspicious;
        Verdict v = brute.matrices.size() == m.elements.size() && brute.space_dim == h->dim() ? Verdict::Pass : Verdict::Fail;
        for (const auto& t : m.elements) v = combine(v, t.certificate.verdict);
        finish(out, v, "translation census");
    } catch (const Error& e) {
        out.exit_code = kExitAxiom;
        out.diagnostic = e.what();
        out.report["verdict"] = "fail";
    }
    return out;
}

CommandResult run_peterweyl(const HopfPtr& h, const RunOptions& opt) {
    CommandResult out;
    out.report = header("peterweyl", *h, opt);
    if (!axioms_gate(*h, opt, out)) return out;
    try {
        const HaarState hs = haar_state(h, opt.tol);
        const auto blocks = coalgebra_blocks(h, hs, opt.seed, opt.tol);
        const TranslationMonoid m = enumerate_translations(h, opt.seed, opt.side, opt.tol);
        const EmbeddingReport e = verify_embedding(m, blocks, opt.tol);
        out.report["blocks"] = blocks_json(blocks, opt.tol);
        out.report["embedding"] = embedding_json(e, blocks, opt.tol);
        Verdict v = e.verdict;
        for (const auto& b : blocks) v = combine(v, combine(b.coalgebra_law.verdict(opt.tol), b.unitarity.verdict(opt.tol)));
        finish(out, v, "Peter-Weyl blocks");
    } catch (const Error& e) {
        out.exit_code = kExitAxiom;
        out.diagnostic = e.what();
        out.report["verdict"] = "fail";
    }
    return out;
}

CommandResult run_theorem(const HopfPtr& h, const RunOptions& opt) {
    CommandResult out;
    out.report = header("theorem", *h, opt);
    if (!axioms_gate(*h, opt, out)) return out;
    try {
        const TheoremReport t = verify_classification(h, opt.seed, opt.side, opt.tol);
        Json clauses = Json::array();
        for (const auto& c : t.clauses)
            clauses.push_back({{"id", c.id},
                               {"statement", c.statement},
                               {"residual", residual_json(c.residual, opt.tol)},
                               {"verdict", to_string(c.verdict)},
                               {"counterexample", c.counterexample}});
        out.report["classification"] = {{"side", to_string(t.side)},
                                        {"characters", t.characters},
                                        {"translations", t.translations},
                                        {"endomorphism_space_dim", t.endomorphism_space_dim},
                                        {"brute_force_count", t.brute_force_count},
                                        {"clauses", clauses},
                                        {"verdict", to_string(t.verdict)}};
        const HaarState hs = haar_state(h, opt.tol);
        const auto blocks = coalgebra_blocks(h, hs, opt.seed, opt.tol);
        const EmbeddingReport e = verify_embedding(enumerate_translations(h, opt.seed, opt.side, opt.tol), blocks, opt.tol);
        out.report["embedding"] = embedding_json(e, blocks, opt.tol);
        const Verdict v = combine(t.verdict, e.verdict);
        out.report["verdict"] = to_string(v);
        if (v != Verdict::Pass) {
            out.exit_code = kExitTheorem;
            for (const auto& c : t.clauses)
                if (c.verdict != Verdict::Pass && out.diagnostic.empty())
                    out.diagnostic = "clause (" + c.id + ") " + to_string(c.verdict) + ": " + c.counterexample;
            if (out.diagnostic.empty()) out.diagnostic = "embedding " + to_string(e.verdict) + ": " + e.violation;
        }
    } catch (const Error& e) {
        out.exit_code = kExitTheorem;
        out.diagnostic = e.what();
        out.report["verdict"] = "fail";
        out.report["counterexample"] = e.what();
    }
    return out;
}

std::string render_markdown(const Json& r) {
    std::ostringstream md;
    md << "# qtrans " << r.value("command", "") << " report\n\n";
    if (r.contains("algebra")) {
        const auto& a = r["algebra"];
        md << "- dimension: " << a["dim"].get<std::size_t>() << "\n";
        md << "- mode: " << a["mode"].get<std::string>() << "\n";
        md << "- basis: ";
        for (std::size_t i = 0; i < a["basis"].size(); ++i) md << (i ? ", " : "") << a["basis"][i].get<std::string>();
        md << "\n";
    }
    md << "- seed: " << r.value("seed", 0ULL) << "\n";
    md << "- tolerance: " << fmt(r.value("tolerance", 0.0)) << "\n";
    md << "- verdict: **" << r.value("verdict", "fail") << "**\n\n";

    if (r.contains("axioms")) {
        md << "## Axioms\n\n| family | check | residual | verdict |\n|---|---|---|---|\n";
        for (const auto& c : r["axioms"]["checks"])
            md << "| " << c["family"].get<std::string>() << " | " << c["name"].get<std::string>() << " | "
               << (c["residual"]["exact"].get<bool>() ? "exact 0" : fmt(c["residual"]["value"].get<double>())) << " | "
               << c["verdict"].get<std::string>() << " |\n";
        md << "\n";
    }
    if (r.contains("cstar")) {
        const auto& c = r["cstar"];
        md << "## C*-certification\n\n";
        md << "- Haar state found: " << (c["haar_found"].get<bool>() ? "yes" : "no") << "\n";
        md << "- Gram eigenvalues: [" << fmt(c["gram_min_eigenvalue"].get<double>()) << ", "
           << fmt(c["gram_max_eigenvalue"].get<double>()) << "]\n";
        md << "- GNS *-representation: " << c["representation"].get<std::string>() << "\n";
        if (r.contains("haar")) {
            md << "- Haar state:";
            for (const auto& v : r["haar"]["values"]) md << " " << scalar_text(v);
            md << "\n";
        }
        md << "\n";
    }
    if (r.contains("characters")) {
        md << "## Characters\n\n| # | values | verdict |\n|---|---|---|\n";
        for (const auto& c : r["characters"]) {
            md << "| " << c["index"].get<std::size_t>() << " |";
            for (const auto& v : c["values"]) md << " " << scalar_text(v);
            md << " | " << c["verdict"].get<std::string>() << " |\n";
        }
        md << "\nGroup order " << r["group"]["order"].get<std::size_t>() << ", identity index "
           << r["group"]["identity"].get<std::size_t>() << ".\n\n";
    }
    if (r.contains("translations")) {
        md << "## Translations (" << r["side"].get<std::string>() << ", " << r["composition"].get<std::string>()
           << " composition)\n\n";
        md << "- count: " << r["translations"].size() << "\n";
        md << "- comodule endomorphism space dimension: " << r["endomorphism_space_dim"].get<std::size_t>() << "\n";
        md << "- brute-force count: " << r["brute_force_count"].get<std::size_t>() << "\n\n";
    }
    if (r.contains("blocks")) {
        md << "## Peter-Weyl blocks\n\n| # | dim | coalgebra law | unitarity |\n|---|---|---|---|\n";
        for (const auto& b : r["blocks"])
            md << "| " << b["index"].get<std::size_t>() << " | " << b["dim"].get<std::size_t>() << " | "
               << fmt(b["coalgebra_law"]["value"].get<double>()) << " | " << fmt(b["unitarity"]["value"].get<double>())
               << " |\n";
        md << "\n";
    }
    if (r.contains("classification")) {
        const auto& c = r["classification"];
        md << "## Classification\n\n";
        md << "- characters: " << c["characters"].get<std::size_t>() << ", translations: "
           << c["translations"].get<std::size_t>() << ", brute force: " << c["brute_force_count"].get<std::size_t>()
           << ", endomorphism space: " << c["endomorphism_space_dim"].get<std::size_t>() << "\n\n";
        md << "| statement | clause | verdict | residual |\n|---|---|---|---|\n";
        for (const auto& cl : c["clauses"])
            md << "| " << cl["statement"].get<std::string>() << " | (" << cl["id"].get<std::string>() << ") | "
               << cl["verdict"].get<std::string>() << " | " << fmt(cl["residual"]["value"].get<double>()) << " |\n";
        md << "\n";
    }
    if (r.contains("embedding")) {
        const auto& e = r["embedding"];
        md << "## Embedding into unitary groups\n\n";
        md << "- block dimensions:";
        for (const auto& d : e["block_dims"]) md << " " << d.get<std::size_t>();
        md << "\n- injective: " << (e["injective"].get<bool>() ? "yes" : "no") << "\n";
        md << "- homomorphism residual: " << fmt(e["homomorphism"]["value"].get<double>()) << "\n";
        md << "- unitarity residual: " << fmt(e["unitarity"]["value"].get<double>()) << "\n";
        md << "- verdict: " << e["verdict"].get<std::string>() << "\n\n";
    }
    return md.str();
}

}  // namespace qtrans
