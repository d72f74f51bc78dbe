#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "repdraw/movecode.hpp"

namespace repdraw {

// Game history plus the current search variant, as one coded-move stack.
// Entries below historyLen() are the pre-search game record and may not be
// popped.
class MoveList {
public:
    explicit MoveList(std::size_t capacity = 255) : capacity_(capacity) {}

    static MoveList seed_history(const std::vector<CodedMove>& history,
                                 std::size_t capacity = 255);

    void push_move(CodedMove m);
    void pop_move();

    bool empty() const { return moves_.empty(); }
    std::size_t size() const { return moves_.size(); }
    std::size_t history_len() const { return historyLen_; }
    std::size_t capacity() const { return capacity_; }
    CodedMove at(std::size_t i) const { return moves_[i]; }
    // Index of the last written element; size()-1 when non-empty.
    std::size_t top_index() const { return moves_.size() - 1; }

    const std::vector<CodedMove>& moves() const { return moves_; }

private:
    std::vector<CodedMove> moves_;
    std::size_t historyLen_ = 0;
    std::size_t capacity_;
};

struct MoveListOverflow : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class NoRepReason : std::uint8_t {
    IrreversibleBarrier,
    ListExhausted,
    ChainOverflow,
    ParityOnly,
};

struct RepetitionVerdict {
    bool repetition = false;
    int scannedPlies = 0;          // meaningful when repetition
    NoRepReason reason = NoRepReason::ListExhausted;

    bool operator==(const RepetitionVerdict&) const = default;
};

const char* to_string(NoRepReason r);

// Fixed-capacity set of composite moves built during the backward scan.
class ChainList {
public:
    struct Entry {
        std::uint8_t from;
        std::uint8_t to;
    };

    explicit ChainList(int capacity = 24);

    // Index of the first active entry whose from-square equals sq, -1 if none.
    int find_from(std::uint8_t sq) const;
    // Returns false when no slot is free.
    bool insert(std::uint8_t from, std::uint8_t to);
    void set_from(int slot, std::uint8_t from);   // rule of transition
    void remove(int slot);                        // rule of reflexion
    int active_count() const { return active_; }
    int capacity() const { return static_cast<int>(slots_.size()); }
    const Entry& entry(int slot) const { return slots_[slot]; }
    bool occupied(int slot) const { return used_[slot]; }

private:
    std::vector<Entry> slots_;
    std::vector<bool> used_;
    int active_ = 0;
};

// Per-move record of a backward scan, for tests and failure dumps.
struct ChainScanStep {
    enum class Event : std::uint8_t { Barrier, Insert, Transition, Reflexion, Overflow };
    CodedMove move;
    Event event;
    std::uint8_t entryFrom = 0;   // the chain entry touched (Transition/Reflexion)
    std::uint8_t entryTo = 0;
    int activeAfter = 0;
    bool closure = false;         // all chains closed after this move
};

struct ChainScanTrace {
    std::vector<ChainScanStep> steps;
};

// Backward chain-closure scan with the even-ply parity guard: closure at an
// odd scanned count is recorded but scanning continues.
RepetitionVerdict detect_repetition(const MoveList& l, int chainCapacity = 24,
                                    ChainScanTrace* trace = nullptr);

// Listing-faithful variant: any closure is a repetition, odd or even.
RepetitionVerdict detect_repetition_raw(const MoveList& l, int chainCapacity = 24,
                                        ChainScanTrace* trace = nullptr);

// One coded move per line, "C1H6" / "E2E4*" style.
std::string dump_move_list(const MoveList& l);
MoveList parse_move_list_dump(const std::string& text, std::size_t capacity = 255);

}  // namespace repdraw
