#pragma once

#include <string>
#include <vector>

#include "repdraw/epd.hpp"
#include "repdraw/searcher.hpp"

namespace repdraw {

struct BenchRow {
    std::string id;
    DetectorMode mode;
    int depth;
    std::string keyMove;   // "G1F1" style
    int score;             // centipawns, + favors side to move
    SearchStats stats;     // this iteration only
};

struct BenchModeTotal {
    DetectorMode mode;
    SearchStats stats;     // summed over all positions and depths
};

struct BenchRatios {
    DetectorMode mode;     // relative to the first requested mode
    double terminalNodeRatio;
    double generatedPositionRatio;
    double timeRatio;
};

struct BenchReport {
    std::vector<BenchRow> rows;
    std::vector<BenchModeTotal> totals;                 // one per mode
    std::vector<BenchModeTotal> perPositionTotals;      // one per (position, mode)
    std::vector<std::string> perPositionIds;            // parallel to perPositionTotals
    std::vector<BenchRatios> ratios;                    // modes beyond the first
};

BenchReport run_bench(const std::vector<EpdRecord>& positions, const SearchConfig& base,
                      const std::vector<DetectorMode>& modes);

std::string format_report_text(const BenchReport& r);
// Fixed column order; includeTime=false gives the determinism-checkable form.
std::string format_report_tsv(const BenchReport& r, bool includeTime = true);

}  // namespace repdraw
