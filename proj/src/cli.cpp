#include "ringrank/cli.hpp"

#include "ringrank/catalog.hpp"
#include "ringrank/error.hpp"
#include "ringrank/report.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>

namespace ringrank {

namespace {

int cmd_analyze(const std::string& path, const AnalyzeOptions& opts, std::ostream& out, std::ostream& err)
{
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(path);
        if (!in) {
            err << "ringrank: cannot read " << path << "\n";
            return 2;
        }
        text.assign(std::istreambuf_iterator<char>(in), {});
    }

    AnalyzeOutcome res;
    const Json doc = Json::parse(text, nullptr, false);
    if (doc.is_discarded()) {
        res.exit_code = 2;
        res.report = Json{{"status", "error"},
                          {"exit_code", 2},
                          {"error", {{"code", "SchemaError"}, {"message", "input is not valid JSON"}}}};
    } else {
        res = analyze_document(doc, opts);
    }
    out << res.report.dump(2) << "\n";
    if (res.exit_code != 0 && res.report.contains("error"))
        err << "ringrank: " << res.report["error"]["code"].get<std::string>() << ": "
            << res.report["error"]["message"].get<std::string>() << "\n";
    return res.exit_code;
}

int cmd_demo(const std::string& filter, bool deterministic, std::ostream& out, std::ostream& err)
{
    std::size_t run = 0, failed = 0;
    for (const auto& c : catalog_checks()) {
        if (!filter.empty() && c.name.find(filter) == std::string::npos)
            continue;
        ++run;
        const auto t0 = std::chrono::steady_clock::now();
        CheckResult r;
        try {
            r = c.run();
        } catch (const std::exception& e) {
            r = CheckResult{false, "no error", e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        failed += r.pass ? 0 : 1;
        out << (r.pass ? "PASS " : "FAIL ") << c.name << "\n"
            << "     claim: " << c.claim << "\n"
            << "     expected (" << c.basis << ", criterion " << c.criterion << ") " << r.expected << ", got "
            << r.actual;
        if (!deterministic)
            out << "  [" << std::fixed << std::setprecision(3) << secs << " s]";
        out << "\n";
    }
    if (run == 0) {
        err << "ringrank: warning: no checks match '" << filter << "'\n";
        out << "0 checks run\n";
        return 0;
    }
    out << run << " checks run, " << run - failed << " passed, " << failed << " failed\n";
    return failed == 0 ? 0 : 1;
}

int cmd_construct(const std::string& name, const std::vector<std::string>& args, const std::string& emit,
                  std::ostream& out, std::ostream& err)
{
    Json doc;
    try {
        doc = job_document(build_named(name, args));
    } catch (const Error& e) {
        err << "ringrank: " << e.what() << "\n";
        return 2;
    }
    if (emit.empty() || emit == "-") {
        out << doc.dump(2) << "\n";
        return 0;
    }
    std::ofstream file(emit);
    if (!file) {
        err << "ringrank: cannot write " << emit << "\n";
        return 2;
    }
    file << doc.dump(2) << "\n";
    out << "wrote " << emit << "\n";
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact rank invariants of orders and finite rings", "ringrank"};
    app.require_subcommand(1);

    AnalyzeOptions opts;
    std::string file, filter, name, emit;
    std::vector<std::string> cargs;

    auto* analyze = app.add_subcommand("analyze", "Analyze an order or finite ring job (JSON file, or - for stdin)");
    analyze->add_option("file", file, "Job document")->required();
    analyze->add_flag("--deterministic", opts.deterministic, "Omit the timestamp");
    analyze->add_option("--max-ring-size", opts.max_ring_size, "Largest ring enumerated exhaustively")
        ->envname("RINGRANK_MAX_RING_SIZE")
        ->check(CLI::PositiveNumber);
    analyze->add_option("--hilbert-cap", opts.hilbert_cap, "Iteration cap for multiplicities")
        ->check(CLI::Range(3U, 1000U));

    auto* demo = app.add_subcommand("demo", "Run the reproducibility catalog");
    demo->add_option("--filter", filter, "Only run checks whose name contains this text");
    demo->add_flag("--deterministic", opts.deterministic, "Omit timings");

    auto* construct = app.add_subcommand("construct", "Emit a job document for a named construction");
    construct->add_option("name", name, "matson | axs | pullback | matson_quotient | trunc_poly | semigroup_trunc")->required();
    construct->add_option("args", cargs, "Construction arguments; polynomials as c0,c1,...,1");
    construct->add_option("--emit", emit, "Output file (default stdout)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    if (analyze->parsed())
        return cmd_analyze(file, opts, out, err);
    if (demo->parsed())
        return cmd_demo(filter, opts.deterministic, out, err);
    return cmd_construct(name, cargs, emit, out, err);
}

} // namespace ringrank
