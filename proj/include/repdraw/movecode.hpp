#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "repdraw/chesscore.hpp"

namespace repdraw {

// 16-bit coded move. High byte: from-square (6 bits) with bit 7 = irreversible
// flag. Low byte: to-square. Bit 6 of the high byte is reserved-zero so invalid
// codings are detectable. Reversible value = from*256 + to.
using CodedMove = std::uint16_t;

struct DecodedMove {
    Square from;
    Square to;
    bool irreversible;

    bool operator==(const DecodedMove&) const = default;
};

CodedMove encode_move(Square from, Square to, bool irreversible);
DecodedMove decode_move(CodedMove c);

inline bool coded_irreversible(CodedMove c) { return (c & 0x8000) != 0; }

CodedMove code_from_genmove(const GenMove& m);

// "C1H6" with a trailing '*' when the irreversible flag is set.
std::string coded_move_text(CodedMove c);
CodedMove parse_coded_move(const std::string& text);

// Whitespace-separated "C1H6 H8G8 ..." convenience for tests and replay dumps.
std::vector<CodedMove> parse_coded_line(const std::string& text);

}  // namespace repdraw
