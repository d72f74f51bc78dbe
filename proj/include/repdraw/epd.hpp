#pragma once

#include <istream>
#include <string>
#include <vector>

#include "repdraw/chesscore.hpp"

namespace repdraw {

struct EpdRecord {
    Position position;
    std::string id;    // `id` opcode, empty if absent
    std::string bm;    // `bm` opcode (raw SAN text), empty if absent
    int lineNo = 0;
};

struct EpdError {
    int lineNo;
    std::string message;
};

// Parses EPD lines (FEN fields + opcodes; only `bm` and `id` are recognized,
// others ignored). Bad lines are reported and skipped.
std::vector<EpdRecord> parse_epd(std::istream& in, std::vector<EpdError>& errors);

}  // namespace repdraw
