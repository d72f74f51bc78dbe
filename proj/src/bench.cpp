#include "repdraw/bench.hpp"

#include <iomanip>
#include <sstream>

namespace repdraw {

BenchReport run_bench(const std::vector<EpdRecord>& positions, const SearchConfig& base,
                      const std::vector<DetectorMode>& modes) {
    BenchReport report;
    for (DetectorMode mode : modes)
        report.totals.push_back({mode, {}});

    for (const EpdRecord& rec : positions) {
        std::string id = rec.id.empty() ? emit_fen(rec.position) : rec.id;
        for (std::size_t mi = 0; mi < modes.size(); ++mi) {
            SearchConfig cfg = base;
            cfg.detectorMode = modes[mi];
            SearchResult res = search(rec.position, cfg);
            BenchModeTotal posTotal{modes[mi], {}};
            for (const SearchIteration& it : res.iterations) {
                BenchRow row;
                row.id = id;
                row.mode = modes[mi];
                row.depth = it.depth;
                row.keyMove = move_text(it.keyMove);
                row.score = it.score;
                row.stats = it.stats;
                report.rows.push_back(std::move(row));
                posTotal.stats += it.stats;
            }
            report.totals[mi].stats += posTotal.stats;
            report.perPositionTotals.push_back(posTotal);
            report.perPositionIds.push_back(id);
        }
    }

    if (modes.size() > 1) {
        const SearchStats& base0 = report.totals[0].stats;
        for (std::size_t mi = 1; mi < modes.size(); ++mi) {
            const SearchStats& s = report.totals[mi].stats;
            BenchRatios r;
            r.mode = modes[mi];
            r.terminalNodeRatio =
                base0.terminalNodes ? double(s.terminalNodes) / double(base0.terminalNodes) : 0.0;
            r.generatedPositionRatio = base0.generatedPositions
                                           ? double(s.generatedPositions) /
                                                 double(base0.generatedPositions)
                                           : 0.0;
            r.timeRatio = base0.elapsedSec > 0 ? s.elapsedSec / base0.elapsedSec : 0.0;
            report.ratios.push_back(r);
        }
    }
    return report;
}

std::string format_report_text(const BenchReport& r) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(2);
    std::string lastKey;
    for (const BenchRow& row : r.rows) {
        std::string key = row.id + "/" + to_string(row.mode);
        if (key != lastKey) {
            out << "== " << row.id << "  [detector " << to_string(row.mode) << "]\n";
            out << "Depth (ply)  Key move  Evaluation  Node count\n";
            lastKey = key;
        }
        out << std::setw(11) << row.depth << "  " << std::setw(8) << row.keyMove << "  "
            << std::setw(10) << (double(row.score) / 100.0) << "  " << row.stats.terminalNodes
            << '\n';
    }
    for (const BenchModeTotal& t : r.totals) {
        out << "[" << to_string(t.mode) << "] total: " << t.stats.terminalNodes
            << " terminal nodes evaluated, " << t.stats.generatedPositions
            << " positions generated";
        if (t.stats.repetitionHits)
            out << ", " << t.stats.repetitionHits << " cases of position repetitions were noted";
        out << ". elapsed " << t.stats.elapsedSec << " s\n";
    }
    for (const BenchRatios& rr : r.ratios) {
        out << "[" << to_string(rr.mode) << "/base] terminal-node ratio "
            << rr.terminalNodeRatio << ", generated-position ratio " << rr.generatedPositionRatio
            << ", time ratio " << rr.timeRatio << '\n';
    }
    return out.str();
}

std::string format_report_tsv(const BenchReport& r, bool includeTime) {
    std::ostringstream out;
    out << "id\tmode\tdepth\tkeyMove\tscore\tterminalNodes\tgeneratedPositions\trepetitionHits";
    if (includeTime) out << "\telapsedSec";
    out << '\n';
    out << std::fixed << std::setprecision(6);
    for (const BenchRow& row : r.rows) {
        out << row.id << '\t' << to_string(row.mode) << '\t' << row.depth << '\t' << row.keyMove
            << '\t' << row.score << '\t' << row.stats.terminalNodes << '\t'
            << row.stats.generatedPositions << '\t' << row.stats.repetitionHits;
        if (includeTime) out << '\t' << row.stats.elapsedSec;
        out << '\n';
    }
    for (std::size_t i = 0; i < r.perPositionTotals.size(); ++i) {
        const BenchModeTotal& t = r.perPositionTotals[i];
        out << r.perPositionIds[i] << '\t' << to_string(t.mode) << "\ttotal\t-\t-\t"
            << t.stats.terminalNodes << '\t' << t.stats.generatedPositions << '\t'
            << t.stats.repetitionHits;
        if (includeTime) out << '\t' << t.stats.elapsedSec;
        out << '\n';
    }
    for (const BenchModeTotal& t : r.totals) {
        out << "TOTAL\t" << to_string(t.mode) << "\ttotal\t-\t-\t" << t.stats.terminalNodes
            << '\t' << t.stats.generatedPositions << '\t' << t.stats.repetitionHits;
        if (includeTime) out << '\t' << t.stats.elapsedSec;
        out << '\n';
    }
    return out.str();
}

}  // namespace repdraw
