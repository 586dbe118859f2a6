// hcs: command-line front end.
//
//   hcs verify FILE
//   hcs hc FILE [--bundle NAME]
//   hcs cup1 FILE [--phi NAME --psi NAME]
//   hcs cup2 FILE [--x NAME --psi NAME --action NAME]
//   hcs homotopy FILE [--u NAME]
//   hcs fixture list | hcs fixture dump NAME
//
// Arguments missing on the command line are taken from the first job of the
// same command in FILE.  Exit codes: 0 all checks pass, 1 a mathematical
// check failed, 2 input error, 3 resource budget exceeded.
#include "hcc/fixtures.hpp"
#include "hcc/jobs.hpp"
#include "hcc/specfile.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace hcc;

namespace {

struct Args {
    std::string file;
    std::string out = "text";
    std::size_t max_degree = 4;
    std::size_t budget = 1000000;
    std::uint64_t seed = 1;
    std::string twist = "default";
    std::map<std::string, std::string> named;  // bundle, phi, psi, x, action, u
};

// Command-line value, else the first matching job in the document, else absent.
std::optional<std::string> argument(const Args& a, const SpecDocument& doc, const std::string& command,
                                    const std::string& key) {
    if (auto it = a.named.find(key); it != a.named.end() && !it->second.empty()) return it->second;
    for (const auto& job : doc.jobs)
        if (job.command == command)
            if (auto it = job.args.find(key); it != job.args.end()) return it->second;
    return std::nullopt;
}

std::string required(const Args& a, const SpecDocument& doc, const std::string& command, const std::string& key) {
    auto v = argument(a, doc, command, key);
    if (!v) throw PreconditionError(command + " needs --" + key + " (or a '" + command + "' job in the file)");
    return *v;
}

int emit(const Report& r, const std::string& out) {
    std::cout << (out == "json" ? to_json(r) : to_text(r));
    return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hopf-cyclic structure verifier, cohomology and cup products"};
    app.require_subcommand(1);
    Args a;
    bool max_degree_given = false;
    app.add_option("--out", a.out, "report format")->check(CLI::IsMember({"text", "json"}));
    auto* md = app.add_option("--max-degree", a.max_degree, "highest cochain degree (default 4)");
    app.add_option("--budget", a.budget, "matrix entry budget (default 1000000)");
    app.add_option("--seed", a.seed, "seed for randomized property checks");
    app.add_option("--twist", a.twist, "kind A/B twists: default or antipode")
        ->check(CLI::IsMember({"default", "antipode"}));

    auto file_command = [&](const std::string& name, const std::string& help, const std::vector<std::string>& keys) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("file", a.file, "structure file (.hcs)")->required();
        for (const auto& k : keys) sub->add_option("--" + k, a.named[k]);
        // Global flags are also accepted after the subcommand.
        sub->fallthrough();
        return sub;
    };
    CLI::App* verify = file_command("verify", "check every axiom of the structures in FILE", {});
    CLI::App* hc = file_command("hc", "Hopf-cyclic cohomology of a bundle", {"bundle"});
    CLI::App* cup1 = file_command("cup1", "first cup product (kind B x kind A)", {"phi", "psi"});
    CLI::App* cup2 = file_command("cup2", "second cup product (kind C x kind A)", {"x", "psi", "action"});
    CLI::App* homotopy = file_command("homotopy", "the homotopy κ for a coinvariant unit", {"u"});
    CLI::App* fixture_cmd = app.add_subcommand("fixture", "catalog access");
    fixture_cmd->require_subcommand(1);
    CLI::App* fixture_list = fixture_cmd->add_subcommand("list", "list catalog names");
    std::string fixture_name;
    CLI::App* fixture_dump = fixture_cmd->add_subcommand("dump", "print a catalog entry as a .hcs document");
    fixture_dump->add_option("name", fixture_name)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    max_degree_given = md->count() > 0;

    if (fixture_list->parsed()) {
        for (const auto& n : fixture_names()) std::cout << n << (fixture(n).mutant ? " (mutant)" : "") << "\n";
        return 0;
    }
    if (fixture_dump->parsed()) {
        try {
            std::cout << serialize_spec(fixture_document(fixture(fixture_name)));
            return 0;
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 2;
        }
    }

    RunOptions opts;
    opts.budget = a.budget;
    opts.seed = a.seed;
    if (a.twist == "antipode") opts.twists.kind_a = opts.twists.kind_b = Twist::Antipode;

    std::string command;
    for (CLI::App* sub : {verify, hc, cup1, cup2, homotopy})
        if (sub->parsed()) command = sub->get_name();

    const Report r = run_job(command, a.file, [&]() -> Report {
        const SpecDocument doc = parse_spec_file(a.file);
        const ResolvedSpec spec(doc);
        opts.max_degree = a.max_degree;
        if (!max_degree_given)
            if (auto v = argument(a, doc, command, "max_degree")) opts.max_degree = std::stoul(*v);
        if (command == "verify") return run_verify(spec, opts);
        if (command == "hc") return run_hc(spec, required(a, doc, command, "bundle"), opts);
        if (command == "cup1")
            return run_cup1(spec, required(a, doc, command, "phi"), required(a, doc, command, "psi"), opts);
        if (command == "cup2")
            return run_cup2(spec, required(a, doc, command, "x"), required(a, doc, command, "psi"),
                            argument(a, doc, command, "action"), opts);
        return run_homotopy(spec, required(a, doc, command, "u"), opts);
    });
    return emit(r, a.out);
}
