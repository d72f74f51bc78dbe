#pragma once

#include <cstdint>
#include <vector>

#include "repdraw/chainrep.hpp"
#include "repdraw/chesscore.hpp"

namespace repdraw {

// Classical detector: one positional matrix per ply, compared directly with a
// same-side-to-move filter, an irreversible-move cutoff and a 16-bit checksum
// prefilter. Ground-truth oracle and benchmark baseline.
class PositionStack {
public:
    struct Frame {
        Matrix64 matrix;
        Color sideToMove;
        std::uint16_t checksum;
        bool irreversibleBefore;   // the move that produced this frame
    };

    struct CompareCounters {
        std::uint64_t checksumComparisons = 0;
        std::uint64_t fullComparisons = 0;
    };

    // irreversibleBefore: whether the move leading to p was irreversible.
    void push_position(const Position& p, bool irreversibleBefore);
    void pop_position();

    std::size_t size() const { return frames_.size(); }
    bool empty() const { return frames_.empty(); }
    const Frame& frame(std::size_t i) const { return frames_[i]; }

    // Backward scan from the top frame over frames with the same side to move,
    // stopping at the first irreversible barrier. Checksums gate the full
    // 64-cell comparison unless useChecksumPrefilter is false.
    RepetitionVerdict detect_repetition_matrix(bool useChecksumPrefilter = true) const;

    // Occurrences of the top frame's placement (same side to move) within the
    // current irreversible-bounded window, including the top itself.
    int count_occurrences() const;

    const CompareCounters& counters() const { return counters_; }
    void reset_counters() { counters_ = {}; }

private:
    std::vector<Frame> frames_;
    mutable CompareCounters counters_;
};

}  // namespace repdraw
