#include "repdraw/matrixoracle.hpp"

#include <stdexcept>

namespace repdraw {

void PositionStack::push_position(const Position& p, bool irreversibleBefore) {
    frames_.push_back({p.board, p.sideToMove, checksum16(p.board), irreversibleBefore});
}

void PositionStack::pop_position() {
    if (frames_.empty())
        throw std::logic_error("pop_position: empty stack");
    frames_.pop_back();
}

RepetitionVerdict PositionStack::detect_repetition_matrix(bool useChecksumPrefilter) const {
    if (frames_.empty())
        throw std::logic_error("detect_repetition_matrix: empty stack");

    const std::size_t top = frames_.size() - 1;
    const Frame& t = frames_[top];
    if (t.irreversibleBefore)
        return {false, 0, NoRepReason::IrreversibleBarrier};

    bool barrier = false;
    for (std::size_t i = top; i-- > 0;) {
        if (frames_[i + 1].irreversibleBefore) {
            barrier = true;
            break;
        }
        const Frame& f = frames_[i];
        if (f.sideToMove != t.sideToMove) continue;   // 50% reduction
        if (useChecksumPrefilter) {
            ++counters_.checksumComparisons;
            if (f.checksum != t.checksum) continue;
        }
        ++counters_.fullComparisons;
        if (f.matrix == t.matrix)
            return {true, static_cast<int>(top - i), NoRepReason::ListExhausted};
    }
    return {false, 0, barrier ? NoRepReason::IrreversibleBarrier : NoRepReason::ListExhausted};
}

int PositionStack::count_occurrences() const {
    if (frames_.empty())
        throw std::logic_error("count_occurrences: empty stack");

    const std::size_t top = frames_.size() - 1;
    const Frame& t = frames_[top];
    int count = 1;
    if (t.irreversibleBefore) return count;
    for (std::size_t i = top; i-- > 0;) {
        if (frames_[i + 1].irreversibleBefore) break;
        const Frame& f = frames_[i];
        if (f.sideToMove == t.sideToMove && f.checksum == t.checksum && f.matrix == t.matrix)
            ++count;
    }
    return count;
}

}  // namespace repdraw
