#include "memgame/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "memgame/error.hpp"
#include "memgame/report.hpp"
#include "memgame/table_io.hpp"

#ifndef MEMGAME_DEFAULT_FIXTURE
#define MEMGAME_DEFAULT_FIXTURE ""
#endif

namespace memgame::cli {

namespace {

unsigned threads_from_env()
{
    const char* raw = std::getenv("MEMGAME_THREADS");
    if (raw == nullptr)
        return 1;
    char* end = nullptr;
    const long value = std::strtol(raw, &end, 10);
    if (end == raw || *end != '\0' || value < 1)
        return 1;
    return static_cast<unsigned>(std::min<long>(value, 64));
}

/// Opens `path` for writing, or hands back `fallback` when no path was given.
class Sink {
public:
    Sink(const std::optional<std::string>& path, std::ostream& fallback, bool binary = false) : stream_(&fallback)
    {
        if (!path)
            return;
        file_.open(*path, binary ? std::ios::out | std::ios::binary | std::ios::trunc : std::ios::out | std::ios::trunc);
        if (!file_)
            throw Error("cannot write '" + *path + "'");
        stream_ = &file_;
    }

    std::ostream& stream() { return *stream_; }

    void finish(const std::optional<std::string>& path)
    {
        stream_->flush();
        if (!*stream_)
            throw Error("failed writing '" + path.value_or("<stdout>") + "'");
    }

private:
    std::ofstream file_;
    std::ostream* stream_;
};

GrundyTable build_table(const RunConfig& config, const TableBuilderFn& build)
{
    if (build)
        return build(config.game, config.max_n);
    TableOptions options;
    options.option_budget = config.budget;
    return compute_table(config.game, config.max_n, options);
}

} // namespace

std::optional<RunConfig> parse_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
                                    int& exit_code)
{
    CLI::App app{"Sprague-Grundy tables and frontier analysis for memgames", "memgame"};
    app.require_subcommand(1);

    RunConfig config;
    std::string game = "mem0";
    std::string out_path;
    long long max_n = -1;

    auto add_common = [&](CLI::App* sub, bool needs_n) {
        sub->add_option("--game", game, "mem, mem+, mem0, dudeney:Y or scale:p/q")->capture_default_str();
        auto* n_opt = sub->add_option("--max-n", max_n, "largest heap size");
        if (needs_n)
            n_opt->required();
        sub->add_option("--out", out_path, "output path");
        sub->add_option("--budget", config.budget, "cap on option enumerations for the generic builder");
    };

    auto* table = app.add_subcommand("table", "write the Grundy table as CSV");
    add_common(table, true);
    table->add_flag("--start-col", config.start_col, "add the k=0 opening column");
    table->add_flag("--frontier-col", config.frontier_col, "add the k=inf frontier column");

    auto* heatmap = app.add_subcommand("heatmap", "render the table as a binary PGM image");
    add_common(heatmap, true);

    auto* frontier = app.add_subcommand("frontier", "report on the mem0 frontier sequence");
    add_common(frontier, true);
    frontier->add_option("--exceptional-max-n", config.exceptional_max_n, "list exceptional positions up to this row")
        ->capture_default_str();

    auto* verify = app.add_subcommand("verify", "check every closed form against the engine");
    add_common(verify, false);
    verify->add_option("--oeis", config.oeis_fixture, "frontier prefix fixture");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        exit_code = app.exit(e, out, err) == 0 ? kExitOk : kExitError;
        return std::nullopt;
    }

    if (table->parsed())
        config.command = Command::Table;
    else if (heatmap->parsed())
        config.command = Command::Heatmap;
    else if (frontier->parsed())
        config.command = Command::Frontier;
    else
        config.command = Command::Verify;

    try {
        config.game = MoveRule::parse(game);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        exit_code = kExitError;
        return std::nullopt;
    }
    if (max_n != -1) {
        if (max_n < 1 || max_n > kMaxTableN) {
            err << "error: --max-n must be in [1, " << kMaxTableN << "]\n";
            exit_code = kExitError;
            return std::nullopt;
        }
        config.max_n = static_cast<Count>(max_n);
    }
    if (!out_path.empty())
        config.out = out_path;
    if (config.command == Command::Heatmap && !config.out) {
        err << "error: heatmap needs --out PATH\n";
        exit_code = kExitError;
        return std::nullopt;
    }
    if (config.command == Command::Verify && config.oeis_fixture.empty())
        config.oeis_fixture = MEMGAME_DEFAULT_FIXTURE;
    config.threads = threads_from_env();
    exit_code = kExitOk;
    return config;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err, TableBuilderFn build)
{
    try {
        switch (config.command) {
        case Command::Table: {
            const auto table = build_table(config, build);
            Sink sink(config.out, out);
            write_csv(table, sink.stream(), {config.start_col, config.frontier_col});
            sink.finish(config.out);
            return kExitOk;
        }
        case Command::Heatmap: {
            const auto table = build_table(config, build);
            Sink sink(config.out, out, /*binary=*/true);
            write_pgm(table, sink.stream());
            sink.finish(config.out);
            return kExitOk;
        }
        case Command::Frontier: {
            if (config.game.kind() != MoveRule::Kind::MemZero)
                throw RuleMismatch("frontier needs --game mem0, got " + config.game.to_string());
            const auto table = build_table(config, build);
            Sink sink(config.out, out);
            FrontierReportOptions options;
            options.exceptional_max_n = config.exceptional_max_n;
            write_frontier_report(table, sink.stream(), options);
            sink.finish(config.out);
            return kExitOk;
        }
        case Command::Verify: {
            VerifyConfig vc;
            vc.max_n = config.max_n;
            vc.extra_rule = config.game;
            vc.threads = config.threads;
            if (build)
                vc.build = build;
            if (!config.oeis_fixture.empty()) {
                std::ifstream fixture(config.oeis_fixture);
                if (!fixture)
                    throw Error("cannot read fixture '" + config.oeis_fixture + "'");
                vc.oeis_prefix = read_sequence_fixture(fixture);
            }
            Sink sink(config.out, out);
            const bool ok = print_verification(run_verification(vc), sink.stream());
            sink.finish(config.out);
            return ok ? kExitOk : kExitVerifyFailed;
        }
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
    }
    return kExitError;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    int exit_code = kExitOk;
    const auto config = parse_args(args, out, err, exit_code);
    if (!config)
        return exit_code;
    return run(*config, out, err);
}

} // namespace memgame::cli
