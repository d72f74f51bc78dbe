#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "repdraw/chainrep.hpp"
#include "repdraw/chesscore.hpp"
#include "repdraw/matrixoracle.hpp"

namespace repdraw {

constexpr int MATE_SCORE = 100000;

enum class DetectorMode : std::uint8_t { Off, Chain, ChainRaw, Matrix };

const char* to_string(DetectorMode m);
DetectorMode detector_mode_from_string(const std::string& s);

enum class EvalMode : std::uint8_t { MaterialOnly, MaterialPlusMobility };

struct SearchConfig {
    int maxDepth = 6;                       // plies, 1..16
    DetectorMode detectorMode = DetectorMode::Off;
    int chainCapacity = 24;
    EvalMode evalMode = EvalMode::MaterialOnly;
};

struct SearchStats {
    std::uint64_t terminalNodes = 0;
    std::uint64_t generatedPositions = 0;
    std::uint64_t repetitionHits = 0;
    double elapsedSec = 0.0;

    SearchStats& operator+=(const SearchStats& o) {
        terminalNodes += o.terminalNodes;
        generatedPositions += o.generatedPositions;
        repetitionHits += o.repetitionHits;
        elapsedSec += o.elapsedSec;
        return *this;
    }
};

struct SearchIteration {
    int depth = 0;
    GenMove keyMove;
    int score = 0;
    SearchStats stats;                      // this iteration only
    std::vector<GenMove> principalVariation;
};

struct SearchResult {
    bool hasMove = false;                   // false: root is mate or stalemate
    GenMove bestMove;
    int score = 0;
    int depth = 0;
    SearchStats stats;                      // summed over all iterations
    std::vector<GenMove> principalVariation;
    std::vector<SearchIteration> iterations;
};

// Material: P=100 N=300 B=310 R=500 Q=900, from the side to move's
// perspective; mobility adds 2 per legal-move differential.
int evaluate_static(const Position& p, EvalMode mode = EvalMode::MaterialOnly);

// Iterative-deepening alpha-beta. history is the coded move sequence that
// produced root; it extends the repetition scan window past the root.
SearchResult search(const Position& root, const SearchConfig& cfg,
                    const std::vector<CodedMove>& history = {});

// Unpruned negamax over the same tree, used as a test oracle.
SearchResult negamax_reference(const Position& root, const SearchConfig& cfg,
                               const std::vector<CodedMove>& history = {});

}  // namespace repdraw
