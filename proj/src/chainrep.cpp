#include "repdraw/chainrep.hpp"

#include <sstream>
#include <stdexcept>

namespace repdraw {

MoveList MoveList::seed_history(const std::vector<CodedMove>& history, std::size_t capacity) {
    MoveList l(capacity);
    if (history.size() > capacity)
        throw MoveListOverflow("seed_history: " + std::to_string(history.size()) +
                               " moves exceed capacity " + std::to_string(capacity));
    l.moves_ = history;
    l.historyLen_ = history.size();
    return l;
}

void MoveList::push_move(CodedMove m) {
    if (moves_.size() >= capacity_)
        throw MoveListOverflow("push_move: capacity " + std::to_string(capacity_) + " exceeded");
    moves_.push_back(m);
}

void MoveList::pop_move() {
    if (moves_.size() <= historyLen_)
        throw std::logic_error("pop_move: cannot pop into game history");
    moves_.pop_back();
}

const char* to_string(NoRepReason r) {
    switch (r) {
        case NoRepReason::IrreversibleBarrier: return "irreversibleBarrier";
        case NoRepReason::ListExhausted: return "listExhausted";
        case NoRepReason::ChainOverflow: return "chainOverflow";
        case NoRepReason::ParityOnly: return "parityOnly";
    }
    return "?";
}

ChainList::ChainList(int capacity) : slots_(capacity), used_(capacity, false) {
    if (capacity < 1)
        throw std::invalid_argument("ChainList: capacity must be positive");
}

int ChainList::find_from(std::uint8_t sq) const {
    for (std::size_t i = 0; i < slots_.size(); ++i)
        if (used_[i] && slots_[i].from == sq) return static_cast<int>(i);
    return -1;
}

bool ChainList::insert(std::uint8_t from, std::uint8_t to) {
    for (std::size_t i = 0; i < slots_.size(); ++i) {
        if (!used_[i]) {
            slots_[i] = {from, to};
            used_[i] = true;
            ++active_;
            return true;
        }
    }
    return false;
}

void ChainList::set_from(int slot, std::uint8_t from) { slots_[slot].from = from; }

void ChainList::remove(int slot) {
    used_[slot] = false;
    --active_;
}

namespace {

RepetitionVerdict scan(const MoveList& l, int chainCapacity, bool parityGuard,
                       ChainScanTrace* trace) {
    if (l.empty())
        return {false, 0, NoRepReason::ListExhausted};

    ChainList chains(chainCapacity);
    bool oddClosureSeen = false;
    int scanned = 0;

    for (std::size_t i = l.size(); i-- > 0;) {
        CodedMove cm = l.at(i);
        ChainScanStep step{};
        step.move = cm;

        if (coded_irreversible(cm)) {
            if (trace) {
                step.event = ChainScanStep::Event::Barrier;
                step.activeAfter = chains.active_count();
                trace->steps.push_back(step);
            }
            return {false, 0, NoRepReason::IrreversibleBarrier};
        }
        ++scanned;
        DecodedMove d = decode_move(cm);

        int slot = chains.find_from(static_cast<std::uint8_t>(d.to));
        if (slot >= 0) {
            if (chains.entry(slot).to == d.from) {
                step.event = ChainScanStep::Event::Reflexion;
                step.entryFrom = chains.entry(slot).from;
                step.entryTo = chains.entry(slot).to;
                chains.remove(slot);
            } else {
                step.event = ChainScanStep::Event::Transition;
                step.entryFrom = chains.entry(slot).from;
                step.entryTo = chains.entry(slot).to;
                chains.set_from(slot, static_cast<std::uint8_t>(d.from));
            }
        } else {
            if (!chains.insert(static_cast<std::uint8_t>(d.from),
                               static_cast<std::uint8_t>(d.to))) {
                if (trace) {
                    step.event = ChainScanStep::Event::Overflow;
                    step.activeAfter = chains.active_count();
                    trace->steps.push_back(step);
                }
                return {false, 0, NoRepReason::ChainOverflow};
            }
            step.event = ChainScanStep::Event::Insert;
        }

        step.activeAfter = chains.active_count();
        if (chains.active_count() == 0) {
            if (!parityGuard || scanned % 2 == 0) {
                step.closure = true;
                if (trace) trace->steps.push_back(step);
                return {true, scanned, NoRepReason::ListExhausted};
            }
            // Odd closure: the placement repeats with the other side to move.
            // A longer even-parity closure may still exist further back.
            oddClosureSeen = true;
        }
        if (trace) trace->steps.push_back(step);
    }
    return {false, 0, oddClosureSeen ? NoRepReason::ParityOnly : NoRepReason::ListExhausted};
}

}  // namespace

RepetitionVerdict detect_repetition(const MoveList& l, int chainCapacity, ChainScanTrace* trace) {
    return scan(l, chainCapacity, true, trace);
}

RepetitionVerdict detect_repetition_raw(const MoveList& l, int chainCapacity,
                                        ChainScanTrace* trace) {
    return scan(l, chainCapacity, false, trace);
}

std::string dump_move_list(const MoveList& l) {
    std::ostringstream out;
    for (std::size_t i = 0; i < l.size(); ++i)
        out << coded_move_text(l.at(i)) << '\n';
    return out.str();
}

MoveList parse_move_list_dump(const std::string& text, std::size_t capacity) {
    std::istringstream in(text);
    MoveList l(capacity);
    for (std::string line; std::getline(in, line);) {
        if (line.empty()) continue;
        l.push_move(parse_coded_move(line));
    }
    return l;
}

}  // namespace repdraw
