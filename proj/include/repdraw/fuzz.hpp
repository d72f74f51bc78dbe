#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "repdraw/chainrep.hpp"
#include "repdraw/chesscore.hpp"
#include "repdraw/matrixoracle.hpp"

namespace repdraw {

// Differential check of the chain detectors against the matrix oracle over
// random reversible-heavy game segments.

struct FuzzConfig {
    std::uint64_t seed = 1;
    int segments = 1000;
    int maxSegmentPlies = 40;
    int workers = 1;
    int chainCapacity = 24;
};

enum class FuzzClass : std::uint8_t {
    Agree,
    ParityCase,         // raw closure at odd parity, matrix sees no repeat
    PermutationCase,    // matrix repeat invisible to the chain scan
    OverflowCase,       // chain list capacity exceeded, matrix repeat exists
    Unclassifiable,
};

struct PrefixVerdicts {
    RepetitionVerdict guarded;
    RepetitionVerdict raw;
    RepetitionVerdict matrix;
};

// Compares guarded-chain with matrix; OverflowCase and PermutationCase come
// from this side.
FuzzClass classify_chain_vs_matrix(const PrefixVerdicts& v);
// Raw-only disagreements; ParityCase comes from this side.
FuzzClass classify_raw_vs_matrix(const PrefixVerdicts& v);

struct FuzzReport {
    std::uint64_t segments = 0;
    std::uint64_t prefixesChecked = 0;
    std::uint64_t chainDetections = 0;
    std::uint64_t rawDetections = 0;
    std::uint64_t matrixDetections = 0;
    std::uint64_t parityCases = 0;
    std::uint64_t permutationCases = 0;
    std::uint64_t overflowCases = 0;
    bool failed = false;
    std::string failureDump;   // "# fen ..." line plus one coded move per line
};

FuzzReport fuzz_differential(const FuzzConfig& cfg);

// Runs all three detectors over every prefix of a fixed segment and tallies
// the same way the fuzzer does; lets tests inject crafted witnesses.
void check_segment(const Position& start, const std::vector<GenMove>& moves, int chainCapacity,
                   FuzzReport& report);

std::string format_fuzz_report(const FuzzReport& r);

}  // namespace repdraw
