#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace repdraw {

// 4-bit piece codes. Bit 3 set = black piece. 7, 8, 15 never occur.
enum PieceCode : std::uint8_t {
    EMPTY = 0,
    WP = 1, WN = 2, WB = 3, WR = 4, WQ = 5, WK = 6,
    BP = 9, BN = 10, BB = 11, BR = 12, BQ = 13, BK = 14,
};

enum class Color : std::uint8_t { White, Black };

inline Color flip(Color c) { return c == Color::White ? Color::Black : Color::White; }

inline bool is_white(std::uint8_t code) { return code != EMPTY && (code & 8) == 0; }
inline bool is_black(std::uint8_t code) { return (code & 8) != 0; }
inline bool is_color(std::uint8_t code, Color c) {
    return c == Color::White ? is_white(code) : is_black(code);
}
// 1..6 regardless of color, 0 for empty.
inline int piece_type(std::uint8_t code) { return code & 7; }

// One-dimensional board address: A8 = 0, B8 = 1, ..., H1 = 63.
using Square = int;

constexpr Square NO_SQUARE = -1;

inline int square_row(Square s) { return s >> 3; }   // 0 = rank 8
inline int square_col(Square s) { return s & 7; }    // 0 = file a
inline Square make_square(int row, int col) { return row * 8 + col; }

// "c1" -> 58. Accepts upper or lower case file letters.
Square square_from_string(const std::string& s);
std::string square_name(Square s);            // lowercase, "c1"
std::string square_name_upper(Square s);      // uppercase, "C1" (paper-style logs)

struct Matrix64 {
    std::array<std::uint8_t, 64> cells{};

    bool operator==(const Matrix64&) const = default;
};

// 16-bit wrapping sum of (code+1)*(index+1) over occupied cells.
std::uint16_t checksum16(const Matrix64& m);

enum class MoveKind : std::uint8_t { Quiet, Capture, PawnPush, Promotion, Castle, EnPassant };

struct GenMove {
    std::uint8_t from = 0;
    std::uint8_t to = 0;
    MoveKind kind = MoveKind::Quiet;
    std::uint8_t promo = 0;   // piece code of the promoted piece, 0 if none

    bool operator==(const GenMove&) const = default;
};

// Capture, pawn advance, castling, promotion, en passant.
inline bool irreversible(const GenMove& m) { return m.kind != MoveKind::Quiet; }

// "C1H6" style, upper case, from then to.
std::string move_text(const GenMove& m);

struct Position {
    Matrix64 board;
    Color sideToMove = Color::White;
    // castlingRights: [0] white O-O, [1] white O-O-O, [2] black O-O, [3] black O-O-O
    std::array<bool, 4> castlingRights{};
    Square epSquare = NO_SQUARE;
    int halfmoveClock = 0;
    int fullmoveNumber = 1;

    bool operator==(const Position&) const = default;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// FEN I/O. parse_fen accepts 4 or 6 fields (EPD bodies carry only 4).
Position parse_fen(const std::string& text);
std::string emit_fen(const Position& p);

Position start_position();

bool square_attacked(const Position& p, Square s, Color by);
bool in_check(const Position& p, Color c);
Square king_square(const Position& p, Color c);

std::vector<GenMove> generate_legal_moves(const Position& p);

// Precondition: m is legal in p. Cheap structural checks throw on garbage
// input; full legality is the caller's contract.
Position apply_move(const Position& p, const GenMove& m);

bool fifty_move_draw(const Position& p);   // halfmoveClock >= 100 plies

std::uint64_t perft(const Position& p, int depth);

}  // namespace repdraw
