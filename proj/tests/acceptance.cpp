#include "qtrans/characters/characters.hpp"
#include "qtrans/cli/app.hpp"
#include "qtrans/cli/document.hpp"
#include "qtrans/examples/builtins.hpp"
#include "qtrans/haar/haar.hpp"
#include "qtrans/hopf/axioms.hpp"
#include "qtrans/hopf/dual.hpp"
#include "qtrans/num/linalg.hpp"
#include "qtrans/peter_weyl/peter_weyl.hpp"
#include "qtrans/translations/classification.hpp"
#include "qtrans/translations/isomorphism.hpp"
#include "qtrans/translations/translations.hpp"

#include "support/oracles.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

using namespace qtrans;

namespace {

constexpr double kTol = 1e-9;

const std::vector<std::string> kBuiltins = {"trivial", "fn:Z2", "fn:S3", "grp:S3", "kac_paljutkin"};

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) detail = what;
        pass = pass && ok;
    }
};

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", x);
    return buf;
}

HopfPtr get(const std::string& name, Mode mode = Mode::Exact) { return share(builtin(name).to_mode(mode)); }

Outcome axioms() {
    Outcome o;
    double worst = 0;
    for (const auto& name : kBuiltins) {
        const auto exact = verify_axioms(*get(name));
        o.require(exact.passed() && exact.exact && exact.max_residual() == 0.0, name + ": exact residual not zero");
        const auto fl = verify_axioms(*get(name, Mode::Float));
        worst = std::max(worst, fl.max_residual());
        o.require(fl.passed() && fl.max_residual() <= kTol, name + ": float residual above tolerance");
        o.require(is_cstar(get(name), kTol) && is_cstar(get(name, Mode::Float), kTol), name + ": not certified C*");
    }
    if (o.pass) o.detail = "exact residuals 0, max float residual " + num(worst);
    return o;
}

Outcome haar() {
    Outcome o;
    for (const auto& name : kBuiltins) {
        const auto h = get(name);
        const auto hs = haar_state(h, kTol);
        o.require(hs.solution_dim == 1, name + ": Haar solution space not one-dimensional");
        o.require(hs.right_invariance.verdict(kTol) == Verdict::Pass, name + ": right invariance fails");
        o.require(antipode_invariance_residual(hs).verdict(kTol) == Verdict::Pass, name + ": h o S != h");
        if (name.rfind("fn:", 0) == 0 || name == "trivial") {
            for (const auto& v : hs.h.values.entries())
                o.require(v.is_exact() && (v - Scalar::ratio(1, long(h->dim()))).is_zero(0.0),
                          name + ": not the exact uniform state");
        }
        if (name.rfind("grp:", 0) == 0)
            o.require(approx_equal(hs.h.values, h->unit(), 0.0), name + ": not the identity-coefficient state");
    }
    if (o.pass) o.detail = "uniform on C(G), identity coefficient on C[G], unique on all five";
    return o;
}

Outcome classification() {
    Outcome o;
    const std::map<std::string, std::size_t> expected = {
        {"trivial", 1}, {"fn:Z2", 2}, {"fn:S3", 6}, {"grp:S3", 2}, {"kac_paljutkin", 4}};
    std::string counts;
    for (const auto& name : kBuiltins) {
        const auto h = get(name);
        const auto rep = verify_classification(h, 0, Side::Right, kTol);
        o.require(rep.verdict == Verdict::Pass, name + ": theorem verdict " + to_string(rep.verdict));
        o.require(rep.translations == expected.at(name) && rep.characters == expected.at(name),
                  name + ": count mismatch");
        o.require(rep.brute_force_count == expected.at(name), name + ": brute-force oracle disagrees");
        const auto chars = classical_subgroup(h, 0, kTol);
        const auto m = translation_monoid(chars.characters, Side::Right, kTol);
        o.require(m.table == chars.cayley, name + ": opposite composition table differs from the character group");
        counts += (counts.empty() ? "" : ", ") + std::to_string(rep.translations);
    }
    if (o.pass) o.detail = "|T| = |pt(G)| = " + counts;
    return o;
}

Outcome intertwiner_space() {
    Outcome o;
    double worst = 0;
    for (const auto& name : kBuiltins) {
        const auto h = get(name);
        const auto space = comodule_endomorphism_space(*h, Side::Right, kTol);
        o.require(space.size() == h->dim(), name + ": solution space dimension " + std::to_string(space.size()));
        for (const auto& A : space) {
            const Tensor f = matmul(transpose(A), h->counit());
            worst = std::max(worst, oracle::max_difference(alpha_matrix(*h, f), A));
        }
    }
    o.require(worst <= kTol, "reconstruction residual " + num(worst));
    if (o.pass) o.detail = "dim = dim H on all five, reconstruction residual " + num(worst);
    return o;
}

Outcome automorphism() {
    Outcome o;
    double worst = 0;
    for (const auto& name : kBuiltins) {
        const auto h = get(name);
        for (const auto& t : enumerate_translations(h, 0, Side::Right, kTol).elements) {
            const auto inv = inverse(t.matrix, kTol);
            o.require(inv.has_value(), name + ": translation not invertible");
            if (!inv) continue;
            const auto s = alpha_from_char(character_inverse(char_from_alpha(t, kTol), kTol), Side::Right, kTol);
            worst = std::max(worst, oracle::max_difference(*inv, s.matrix));
        }
    }
    o.require(worst <= kTol, "inverse residual " + num(worst));
    if (o.pass) o.detail = "inverse = alpha_{chi o S}, residual " + num(worst);
    return o;
}

Outcome haar_invariance() {
    Outcome o;
    double worst = 0;
    for (const auto& name : kBuiltins) {
        const auto h = get(name);
        const auto hs = haar_state(h, kTol);
        for (const auto& t : enumerate_translations(h, 0, Side::Right, kTol).elements)
            worst = std::max(worst, oracle::max_difference(matmul(transpose(t.matrix), hs.h.values), hs.h.values));
    }
    o.require(worst <= kTol, "max |h o alpha - h| = " + num(worst));
    if (o.pass) o.detail = "max |h o alpha - h| = " + num(worst);
    return o;
}

Outcome peter_weyl() {
    Outcome o;
    const std::map<std::string, std::vector<std::size_t>> expected = {
        {"trivial", {1}}, {"fn:Z2", {1, 1}}, {"fn:S3", {1, 1, 2}}, {"grp:S3", {1, 1, 1, 1, 1, 1}},
        {"kac_paljutkin", {1, 1, 1, 1, 2}}};
    double worst = 0;
    for (const auto& name : kBuiltins) {
        const auto h = get(name);
        const auto blocks = coalgebra_blocks(h, haar_state(h, kTol), 0, kTol);
        std::vector<std::size_t> dims;
        std::size_t sum = 0;
        for (const auto& b : blocks) {
            dims.push_back(b.dim);
            sum += b.dim * b.dim;
            worst = std::max({worst, b.unitarity.value, b.coalgebra_law.value});
        }
        o.require(dims == expected.at(name), name + ": block dimensions differ");
        o.require(sum == h->dim(), name + ": sum of d^2 differs from dim");
        const auto m = enumerate_translations(h, 0, Side::Right, kTol);
        const auto e = verify_embedding(m, blocks, kTol);
        o.require(e.verdict == Verdict::Pass && e.injective, name + ": embedding " + e.violation);
        worst = std::max({worst, e.homomorphism.value, e.unitarity.value});
        // table[a][b] is alpha_b o alpha_a, so T of it must be T_a T_b.
        for (std::size_t a = 0; a < m.elements.size(); ++a)
            for (std::size_t b = 0; b < m.elements.size(); ++b)
                for (std::size_t g = 0; g < blocks.size(); ++g)
                    worst = std::max(worst, oracle::max_difference(e.tuples[m.table[a][b]].matrices[g],
                                                                   matmul(e.tuples[a].matrices[g],
                                                                          e.tuples[b].matrices[g])));
    }
    o.require(worst <= kTol, "residual " + num(worst));
    if (o.pass) o.detail = "dimensions match, unitary, injective, residual " + num(worst);
    return o;
}

Outcome duality() {
    Outcome o;
    for (const auto& name : kBuiltins) {
        const auto h = get(name);
        const auto dd = dual_hopf(*dual_hopf(*h, kTol), kTol);
        const bool same = approx_equal(dd->mult(), h->mult(), 0.0) && approx_equal(dd->comult(), h->comult(), 0.0) &&
                          approx_equal(dd->unit(), h->unit(), 0.0) && approx_equal(dd->counit(), h->counit(), 0.0) &&
                          approx_equal(dd->antipode(), h->antipode(), 0.0) && approx_equal(dd->star(), h->star(), 0.0);
        o.require(same, name + ": double dual differs");
    }
    const auto kp = builtin("kac_paljutkin");
    const auto d = dual_hopf(kp, kTol);
    const auto phi = find_hopf_isomorphism(*d, kp, 0, kTol);
    o.require(phi.has_value(), "no isomorphism from the dual of Kac-Paljutkin");
    if (phi) {
        const auto cert = certify_hopf_isomorphism(*d, kp, *phi, kTol);
        o.require(cert.verdict == Verdict::Pass, "isomorphism certificate " + to_string(cert.verdict));
    }
    if (o.pass) o.detail = "double duals equal, Kac-Paljutkin self-duality exhibited";
    return o;
}

std::string run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    run_cli(args, out, err);
    return out.str();
}

Outcome round_trips() {
    Outcome o;
    for (const auto& name : kBuiltins) {
        const auto h = get(name);
        const auto chars = enumerate_characters(h, 0, CharacterMethod::Abelianization, kTol);
        for (const auto& c : chars) {
            const auto t = alpha_from_char(c, Side::Right, kTol);
            o.require(approx_equal(char_from_alpha(t, kTol).values(), c.values(), 0.0), name + ": chi -> alpha -> chi");
            const auto back = alpha_from_char(char_from_alpha(t, kTol), Side::Right, kTol);
            o.require(approx_equal(back.matrix, t.matrix, 0.0), name + ": alpha -> chi -> alpha");
        }
    }
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "qtrans_acceptance";
    fs::create_directories(dir);
    for (const auto& name : kBuiltins) {
        std::string file = name;
        std::replace(file.begin(), file.end(), ':', '_');
        const fs::path p = dir / (file + ".json");
        run({"example", name, "--dump", p.string()});
        std::ifstream in(p, std::ios::binary);
        std::ostringstream text;
        text << in.rdbuf();
        o.require(!text.str().empty() && serialize_document(parse_document(text.str())) == text.str(),
                  name + ": document round trip not byte-identical");
        for (const char* cmd : {"characters", "theorem"}) {
            const auto a = run({cmd, p.string(), "--seed", "3"});
            const auto b = run({cmd, p.string(), "--seed", "3"});
            o.require(a == b, name + ": " + cmd + " report not reproducible");
        }
    }
    if (o.pass) o.detail = "bijections, documents and seeded reports all reproduce";
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"axioms and C*-certification", axioms},
        {"Haar state", haar},
        {"classification counts", classification},
        {"intertwiner space dimension", intertwiner_space},
        {"translations are automorphisms", automorphism},
        {"Haar invariance under translations", haar_invariance},
        {"Peter-Weyl blocks and unitary embedding", peter_weyl},
        {"duality", duality},
        {"round trips", round_trips},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        failures += !o.pass;
        std::printf("criterion %zu %s: %s (%s; %.2fs)\n", i + 1, criteria[i].first.c_str(), o.pass ? "PASS" : "FAIL",
                    o.detail.c_str(), secs);
    }
    return failures == 0 ? 0 : 1;
}
