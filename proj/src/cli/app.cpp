#include "qtrans/cli/app.hpp"

#include "qtrans/cli/document.hpp"
#include "qtrans/cli/reports.hpp"
#include "qtrans/examples/builtins.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <optional>

namespace qtrans {

namespace {

std::uint64_t default_seed() {
    const char* env = std::getenv("QTRANS_SEED");
    if (!env || !*env) return 0;
    try {
        return std::stoull(env);
    } catch (const std::exception&) {
        return 0;
    }
}

struct Settings {
    std::string file;
    std::string mode;
    double tol = kDefaultTolerance;
    std::uint64_t seed = 0;
    std::string side = "right";
    std::string format = "json";
    std::string out_path;
};

using Runner = std::function<CommandResult(const HopfPtr&, const RunOptions&)>;

int emit(const CommandResult& res, const Settings& s, std::ostream& out, std::ostream& err) {
    const std::string text = s.format == "markdown" ? render_markdown(res.report) : res.report.dump(2) + "\n";
    if (s.out_path.empty()) {
        out << text;
    } else {
        std::ofstream f(s.out_path, std::ios::binary);
        if (!f || !(f << text)) {
            err << "error: cannot write " << s.out_path << "\n";
            return kExitIo;
        }
    }
    if (!res.diagnostic.empty()) err << "error: " << res.diagnostic << "\n";
    return res.exit_code;
}

int run_command(const Runner& runner, const Settings& s, std::ostream& out, std::ostream& err) {
    std::optional<FiniteHopfStar> doc;
    try {
        doc = load_document(s.file);
    } catch (const DocumentError& e) {
        err << "error: " << e.what() << "\n";
        return kExitIo;
    }
    if (s.mode == "exact" && doc->mode() != Mode::Exact) {
        err << "error: a float document cannot be verified in exact mode\n";
        return kExitIo;
    }
    if (s.mode == "float") doc = doc->to_mode(Mode::Float);
    RunOptions opt;
    opt.tol = s.tol;
    opt.seed = s.seed;
    opt.side = s.side == "left" ? Side::Left : Side::Right;
    return emit(runner(share(std::move(*doc)), opt), s, out, err);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Finite Hopf *-algebras: axioms, characters, translations and Peter-Weyl blocks"};
    app.require_subcommand(1);
    Settings s;
    s.seed = default_seed();

    const std::map<std::string, Runner> commands = {
        {"verify", run_verify},           {"characters", run_characters}, {"translations", run_translations},
        {"peterweyl", run_peterweyl},     {"theorem", run_theorem},
    };
    const std::map<std::string, std::string> help = {
        {"verify", "Check the Hopf *-algebra axioms and the C*-condition"},
        {"characters", "List the characters and their convolution group"},
        {"translations", "List the translations and their composition table"},
        {"peterweyl", "Decompose into unitary corepresentation blocks"},
        {"theorem", "Verify the translation classification and the unitary embedding"},
    };
    for (const auto& [name, runner] : commands) {
        CLI::App* sub = app.add_subcommand(name, help.at(name));
        sub->add_option("file", s.file, "Algebra document (JSON)")->required();
        sub->add_option("--mode", s.mode, "Arithmetic mode")->check(CLI::IsMember({"exact", "float"}));
        sub->add_option("--tol", s.tol, "Float tolerance")->check(CLI::PositiveNumber);
        sub->add_option("--seed", s.seed, "Random seed (default: QTRANS_SEED or 0)");
        sub->add_option("--side", s.side, "Translation side")->check(CLI::IsMember({"right", "left"}));
        sub->add_option("--format", s.format, "Report format")->check(CLI::IsMember({"json", "markdown"}));
        sub->add_option("--out", s.out_path, "Write the report to a file");
    }

    std::string example_name, dump_path;
    CLI::App* example = app.add_subcommand("example", "Write a built-in algebra as an exact document");
    example->add_option("name", example_name, "Built-in name")->required()->check(CLI::IsMember(builtin_names()));
    example->add_option("--dump", dump_path, "Output document path")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitIo;
    }

    if (example->parsed()) {
        try {
            save_document(dump_path, builtin(example_name));
        } catch (const Error& e) {
            err << "error: " << e.what() << "\n";
            return kExitIo;
        }
        return kExitOk;
    }
    for (const auto& [name, runner] : commands)
        if (app.got_subcommand(name)) return run_command(runner, s, out, err);
    return kExitIo;
}

}  // namespace qtrans
