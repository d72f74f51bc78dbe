#include "repdraw/movecode.hpp"

#include <sstream>
#include <stdexcept>

namespace repdraw {

CodedMove encode_move(Square from, Square to, bool irreversible) {
    if (from < 0 || from > 63 || to < 0 || to > 63)
        throw std::invalid_argument("encode_move: square out of range");
    int high = from + (irreversible ? 128 : 0);
    return static_cast<CodedMove>(high * 256 + to);
}

DecodedMove decode_move(CodedMove c) {
    if (c & 0x4000)
        throw std::invalid_argument("decode_move: reserved bit 6 of high byte is set");
    if ((c & 0xFF) > 63)
        throw std::invalid_argument("decode_move: to-square out of range");
    return {(c >> 8) & 0x3F, c & 0xFF, (c & 0x8000) != 0};
}

CodedMove code_from_genmove(const GenMove& m) {
    return encode_move(m.from, m.to, irreversible(m));
}

std::string coded_move_text(CodedMove c) {
    DecodedMove d = decode_move(c);
    std::string out = square_name_upper(d.from) + square_name_upper(d.to);
    if (d.irreversible) out += '*';
    return out;
}

CodedMove parse_coded_move(const std::string& text) {
    if (text.size() != 4 && text.size() != 5)
        throw ParseError("bad coded move '" + text + "'");
    bool irr = text.size() == 5;
    if (irr && text[4] != '*')
        throw ParseError("bad coded move '" + text + "'");
    return encode_move(square_from_string(text.substr(0, 2)),
                       square_from_string(text.substr(2, 2)), irr);
}

std::vector<CodedMove> parse_coded_line(const std::string& text) {
    std::istringstream in(text);
    std::vector<CodedMove> out;
    for (std::string tok; in >> tok;)
        out.push_back(parse_coded_move(tok));
    return out;
}

}  // namespace repdraw
