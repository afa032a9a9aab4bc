#include "qtrans/cli/app.hpp"
#include "qtrans/cli/document.hpp"
#include "qtrans/cli/reports.hpp"
#include "qtrans/examples/builtins.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace qtrans;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch_dir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / ("qtrans_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p, std::ios::binary) << text; }

std::string dump(const std::string& name) {
    std::string file = name;
    for (auto& c : file)
        if (c == ':') c = '_';
    const fs::path p = scratch_dir() / (file + ".json");
    const auto r = cli({"example", name, "--dump", p.string()});
    REQUIRE(r.code == 0);
    return p.string();
}

Json report(const Run& r) { return Json::parse(r.out); }

}  // namespace

TEST_CASE("example dumps round-trip byte for byte") {
    for (const auto& name : builtin_names()) {
        CAPTURE(name);
        const auto path = dump(name);
        const std::string first = slurp(path);
        CHECK(serialize_document(load_document(path)) == first);
        const auto again = dump(name);
        CHECK(slurp(again) == first);
        CHECK(load_document(path).dim() == builtin(name).dim());
    }
    CHECK(load_document(dump("fn:Z2")).dim() == 2);
}

TEST_CASE("float documents round-trip through the parser") {
    const auto h = builtin("kac_paljutkin").to_mode(Mode::Float);
    const std::string text = serialize_document(h);
    CHECK(text.find("\"mode\": \"float\"") != std::string::npos);
    CHECK(serialize_document(parse_document(text)) == text);
}

TEST_CASE("verify exit codes") {
    CHECK(cli({"verify", dump("fn:S3")}).code == 0);
    CHECK(cli({"verify", dump("kac_paljutkin")}).code == 0);
    CHECK(cli({"verify", dump("kac_paljutkin"), "--mode", "float", "--tol", "1e-10"}).code == 0);

    const fs::path bad = scratch_dir() / "malformed.json";
    write(bad, "{\"dim\": 2, \"basis\": [");
    CHECK(cli({"verify", bad.string()}).code == 1);
    CHECK(cli({"verify", (scratch_dir() / "missing.json").string()}).code == 1);
    CHECK(cli({"frobnicate"}).code == 1);
    CHECK(cli({"verify", dump("fn:S3"), "--mode", "complex"}).code == 1);
}

TEST_CASE("a corrupted multiplication entry is reported as an axiom failure") {
    auto doc = Json::parse(slurp(dump("fn:S3")));
    doc["mult"][0][3] = "2";
    const fs::path p = scratch_dir() / "corrupt_mult.json";
    write(p, doc.dump());
    const auto r = cli({"verify", p.string()});
    CHECK(r.code == 2);
    CHECK(r.err.find("axiom check algebra/") != std::string::npos);
    const auto j = report(r);
    CHECK(j["verdict"] == "fail");
    bool named = false;
    for (const auto& c : j["axioms"]["checks"]) named = named || c["verdict"] == "fail";
    CHECK(named);
    CHECK(cli({"theorem", p.string()}).code == 2);
}

TEST_CASE("corrupted antipode and star are axiom failures") {
    const auto h = builtin("fn:Z2");
    const fs::path p = scratch_dir() / "corrupt_antipode.json";
    save_document(p.string(), FiniteHopfStar(h.basis_names(), h.mult(), h.unit(), h.comult(), h.counit(),
                                             Tensor::matrix(2, 2), h.star()));
    CHECK(cli({"verify", p.string()}).code == 2);
    const fs::path q = scratch_dir() / "corrupt_star.json";
    save_document(q.string(), FiniteHopfStar(h.basis_names(), h.mult(), h.unit(), h.comult(), h.counit(),
                                             h.antipode(), Scalar(-1) * Tensor::identity(2)));
    CHECK(cli({"verify", q.string()}).code == 2);
}

TEST_CASE("float documents cannot be promoted to exact") {
    const fs::path p = scratch_dir() / "float_kp.json";
    save_document(p.string(), builtin("kac_paljutkin").to_mode(Mode::Float));
    CHECK(cli({"verify", p.string()}).code == 0);
    CHECK(cli({"verify", p.string(), "--mode", "exact"}).code == 1);
}

TEST_CASE("document validation") {
    const std::string base = serialize_document(builtin("fn:Z2"));
    auto doc = Json::parse(base);
    doc["mult"].push_back({0, 0, 5, "1", "0"});
    CHECK_THROWS_AS(parse_document(doc.dump()), DocumentError);
    doc = Json::parse(base);
    doc["mult"].push_back(doc["mult"][0]);
    CHECK_THROWS_AS(parse_document(doc.dump()), DocumentError);
    doc = Json::parse(base);
    doc["unit"][0][0] = 0.5;
    CHECK_THROWS_AS(parse_document(doc.dump()), DocumentError);
    doc = Json::parse(base);
    doc["unit"][0][0] = "1/0";
    CHECK_THROWS_AS(parse_document(doc.dump()), DocumentError);
    doc = Json::parse(base);
    doc.erase("comult");
    CHECK_THROWS_AS(parse_document(doc.dump()), DocumentError);
    doc = Json::parse(base);
    doc["star"][1].erase(0);
    CHECK_THROWS_AS(parse_document(doc.dump()), DocumentError);
    doc = Json::parse(base);
    doc["mode"] = "fuzzy";
    CHECK_THROWS_AS(parse_document(doc.dump()), DocumentError);
}

TEST_CASE("theorem command on the builtins") {
    const std::vector<std::pair<std::string, std::size_t>> cases = {
        {"trivial", 1}, {"fn:Z2", 2}, {"fn:S3", 6}, {"grp:S3", 2}, {"kac_paljutkin", 4}};
    for (const auto& [name, count] : cases) {
        CAPTURE(name);
        const auto r = cli({"theorem", dump(name)});
        CHECK(r.code == 0);
        const auto j = report(r);
        CHECK(j["verdict"] == "pass");
        CHECK(j["classification"]["translations"] == count);
        CHECK(j["classification"]["clauses"].size() == 5);
        CHECK(j["embedding"]["injective"] == true);
    }
}

TEST_CASE("characters command on C[S3] lists trivial and sign") {
    const auto r = cli({"characters", dump("grp:S3")});
    CHECK(r.code == 0);
    const auto j = report(r);
    REQUIRE(j["characters"].size() == 2);
    std::vector<std::string> transposition_values;
    for (const auto& c : j["characters"])
        for (std::size_t g : {1, 2, 3}) transposition_values.push_back(c["values"][g][0].get<std::string>());
    std::sort(transposition_values.begin(), transposition_values.end());
    CHECK(transposition_values == std::vector<std::string>{"-1", "-1", "-1", "1", "1", "1"});
    CHECK(j["group"]["order"] == 2);
}

TEST_CASE("translations and peterweyl commands") {
    auto r = cli({"translations", dump("kac_paljutkin")});
    CHECK(r.code == 0);
    auto j = report(r);
    CHECK(j["translations"].size() == 4);
    CHECK(j["endomorphism_space_dim"] == 8);
    CHECK(j["brute_force_count"] == 4);
    r = cli({"translations", dump("fn:S3"), "--side", "left"});
    CHECK(r.code == 0);
    CHECK(report(r)["composition"] == "ordinary");
    r = cli({"peterweyl", dump("fn:S3")});
    CHECK(r.code == 0);
    j = report(r);
    CHECK(j["embedding"]["block_dims"] == Json::array({1, 1, 2}));
}

TEST_CASE("reports are byte-identical for fixed seeds") {
    for (const char* cmd : {"verify", "characters", "translations", "peterweyl", "theorem"}) {
        CAPTURE(cmd);
        const auto path = dump("kac_paljutkin");
        const auto a = cli({cmd, path, "--seed", "5"});
        const auto b = cli({cmd, path, "--seed", "5"});
        CHECK(a.out == b.out);
        CHECK(a.code == 0);
    }
}

TEST_CASE("seed defaults to QTRANS_SEED") {
    const auto path = dump("fn:Z2");
    ::setenv("QTRANS_SEED", "11", 1);
    const auto r = cli({"characters", path});
    ::unsetenv("QTRANS_SEED");
    CHECK(report(r)["seed"] == 11);
    CHECK(report(cli({"characters", path}))["seed"] == 0);
}

TEST_CASE("markdown and file output") {
    const auto path = dump("kac_paljutkin");
    const auto r = cli({"theorem", path, "--format", "markdown"});
    CHECK(r.code == 0);
    CHECK(r.out.find("| statement | clause | verdict | residual |") != std::string::npos);
    CHECK(r.out.find("## Embedding into unitary groups") != std::string::npos);
    const fs::path out = scratch_dir() / "report.json";
    CHECK(cli({"verify", path, "--out", out.string()}).code == 0);
    CHECK(Json::parse(slurp(out))["verdict"] == "pass");
}

TEST_CASE("report scalars are exact strings in exact mode") {
    CHECK(scalar_json(Scalar::ratio(-1, 3)) == Json::array({"-1/3", "0"}));
    CHECK(scalar_json(Scalar(0.25, 1.0)) == Json::array({0.25, 1.0}));
}
