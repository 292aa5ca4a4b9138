#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "germcalc/cli.hpp"
#include "germcalc/selftest.hpp"

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw germcalc::error("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    using namespace germcalc;

    CLI::App app{"exact decision procedures for polynomial map germs"};
    app.require_subcommand(1);

    std::string session_path;
    std::string json_path;
    std::string corpus_dir;
    unsigned D = 0;
    unsigned K = 0;
    uint64_t seed = 0;
    bool timings = false;

    CLI::App* cmd_run =
        app.add_subcommand("run", "evaluate every check directive in a session file");
    cmd_run->add_option("session", session_path, "session file")->required();
    CLI::Option* opt_d = cmd_run->add_option("--D", D, "truncation degree override");
    CLI::Option* opt_k = cmd_run->add_option("--K", K, "order bound override");
    CLI::Option* opt_s =
        cmd_run->add_option("--seed", seed, "seed override for exploration directives");
    cmd_run->add_option("--json", json_path, "write the JSON report to this path");
    cmd_run->add_flag("--timings", timings,
                      "include measured per-directive times in the JSON report");

    CLI::App* cmd_render = app.add_subcommand("render", "re-emit a session file canonically");
    cmd_render->add_option("session", session_path, "session file")->required();

    CLI::App* cmd_selftest =
        app.add_subcommand("selftest", "run the acceptance criteria against a corpus directory");
    cmd_selftest->add_option("corpus", corpus_dir, "directory of .germ session files")->required();
    cmd_selftest->add_option("--json", json_path, "write the machine-readable summary here");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_run->parsed()) {
            RunOptions opt;
            if (opt_d->count() > 0) opt.D = D;
            if (opt_k->count() > 0) opt.K = K;
            if (opt_s->count() > 0) opt.seed = seed;
            opt.timings = timings;
            Session s = parse_session(slurp(session_path));
            ReportDocument doc = run_session(s, opt, "run");
            std::cout << doc.to_text();
            if (!json_path.empty()) {
                std::ofstream out(json_path);
                if (!out) throw error("cannot write " + json_path);
                out << doc.to_json_text(timings);
            }
            return 0;
        }
        if (cmd_render->parsed()) {
            std::cout << render_session(parse_session(slurp(session_path)));
            return 0;
        }
        if (cmd_selftest->parsed()) {
            std::vector<CriterionResult> results;
            try {
                results = corpus_selftest(corpus_dir);
            } catch (const error& e) {
                // Configuration problems (missing or empty corpus) are not
                // criterion failures and get their own exit status.
                std::cerr << e.what() << "\n";
                return 2;
            }
            bool all = true;
            nlohmann::ordered_json criteria = nlohmann::ordered_json::array();
            for (const CriterionResult& r : results) {
                all = all && r.pass;
                std::cout << (r.pass ? "PASS " : "FAIL ") << r.name;
                if (!r.pass) std::cout << ": " << r.detail;
                std::cout << "\n";
                criteria.push_back(
                    {{"criterion", r.name}, {"pass", r.pass}, {"detail", r.detail}});
            }
            if (!json_path.empty()) {
                std::ofstream out(json_path);
                if (!out) throw error("cannot write " + json_path);
                nlohmann::ordered_json summary = {
                    {"schema", 1}, {"command", "selftest"}, {"criteria", criteria}};
                out << summary.dump(2) << "\n";
            }
            return all ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
