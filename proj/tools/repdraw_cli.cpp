#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "repdraw/bench.hpp"
#include "repdraw/fuzz.hpp"
#include "repdraw/pgn.hpp"

namespace {

constexpr int EXIT_INPUT_ERROR = 1;
constexpr int EXIT_INVARIANT_FAILURE = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw repdraw::ParseError("cannot open file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
    using namespace repdraw;

    CLI::App app{"Draw-by-repetition detection benchmark harness"};
    app.require_subcommand(1);

    // bench
    auto* bench = app.add_subcommand("bench", "Search EPD/FEN positions per detector mode");
    std::string benchEpd, benchFen, benchModes = "off,chain", benchEval = "material", benchOut;
    int benchDepth = 6, benchChainCap = 24;
    bool benchTsv = false;
    bench->add_option("--epd", benchEpd, "EPD file with one position per line");
    bench->add_option("--fen", benchFen, "single FEN position");
    bench->add_option("--depth", benchDepth, "search depth in plies")->check(CLI::Range(1, 16));
    bench->add_option("--modes", benchModes, "comma list of off,chain,chainRaw,matrix");
    bench->add_option("--eval", benchEval, "material|mobility");
    bench->add_option("--chain-capacity", benchChainCap, "chain list capacity");
    bench->add_option("--out", benchOut, "write the report to a file as well");
    bench->add_flag("--tsv", benchTsv, "machine-readable tab-separated output");

    // replay
    auto* replay = app.add_subcommand("replay", "Replay a PGN game with draw detection");
    std::string replayPgn;
    bool replayAdjudicate = false;
    replay->add_option("--pgn", replayPgn, "PGN file")->required();
    replay->add_flag("--adjudicate", replayAdjudicate, "stop at the first triggered draw rule");

    // fuzz
    auto* fuzz = app.add_subcommand("fuzz", "Differential fuzz of chain vs matrix detection");
    FuzzConfig fuzzCfg;
    fuzz->add_option("--seed", fuzzCfg.seed, "64-bit seed")->required();
    fuzz->add_option("--segments", fuzzCfg.segments, "number of random segments")->required();
    fuzz->add_option("--max-plies", fuzzCfg.maxSegmentPlies, "max plies per segment");
    fuzz->add_option("--workers", fuzzCfg.workers, "worker threads");
    fuzz->add_option("--chain-capacity", fuzzCfg.chainCapacity, "chain list capacity");

    // perft
    auto* perftCmd = app.add_subcommand("perft", "Legal-move-tree leaf count");
    std::string perftFen;
    int perftDepth = 1;
    perftCmd->add_option("--fen", perftFen, "FEN position")->required();
    perftCmd->add_option("--depth", perftDepth, "depth in plies")->required()
        ->check(CLI::Range(1, 9));

    CLI11_PARSE(app, argc, argv);

    try {
        if (*bench) {
            std::vector<EpdRecord> positions;
            std::vector<EpdError> errors;
            if (!benchEpd.empty()) {
                std::ifstream in(benchEpd);
                if (!in) {
                    std::cerr << "error: cannot open '" << benchEpd << "'\n";
                    return EXIT_INPUT_ERROR;
                }
                positions = parse_epd(in, errors);
                for (const EpdError& e : errors)
                    std::cerr << benchEpd << ":" << e.lineNo << ": " << e.message << '\n';
            }
            if (!benchFen.empty()) {
                EpdRecord rec;
                rec.position = parse_fen(benchFen);
                positions.push_back(rec);
            }

            SearchConfig cfg;
            cfg.maxDepth = benchDepth;
            cfg.chainCapacity = benchChainCap;
            if (benchEval == "mobility") cfg.evalMode = EvalMode::MaterialPlusMobility;
            else if (benchEval != "material") {
                std::cerr << "error: --eval must be material or mobility\n";
                return EXIT_INPUT_ERROR;
            }

            std::vector<DetectorMode> modes;
            std::istringstream ms(benchModes);
            for (std::string m; std::getline(ms, m, ',');)
                modes.push_back(detector_mode_from_string(m));

            BenchReport report = run_bench(positions, cfg, modes);
            std::string text = benchTsv ? format_report_tsv(report) : format_report_text(report);
            std::cout << text;
            if (!benchOut.empty()) {
                std::ofstream out(benchOut);
                out << text;
            }
            return 0;
        }
        if (*replay) {
            ReplayOutcome outcome = replay_pgn(read_file(replayPgn), replayAdjudicate);
            std::cout << "plies\t" << outcome.pliesPlayed << '\n'
                      << "adjudication\t" << to_string(outcome.adjudication) << '\n'
                      << "firstDetectionPly\t"
                      << (outcome.firstDetectionPly ? std::to_string(*outcome.firstDetectionPly)
                                                    : "-")
                      << '\n'
                      << "fideThreefoldPly\t"
                      << (outcome.fideThreefoldPly ? std::to_string(*outcome.fideThreefoldPly)
                                                   : "-")
                      << '\n'
                      << "finalFen\t" << emit_fen(outcome.finalPosition) << '\n';
            return 0;
        }
        if (*fuzz) {
            FuzzReport report = fuzz_differential(fuzzCfg);
            std::cout << format_fuzz_report(report);
            return report.failed ? EXIT_INVARIANT_FAILURE : 0;
        }
        if (*perftCmd) {
            Position p = parse_fen(perftFen);
            std::cout << perft(p, perftDepth) << '\n';
            return 0;
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return EXIT_INPUT_ERROR;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return EXIT_INVARIANT_FAILURE;
    }
    return 0;
}
