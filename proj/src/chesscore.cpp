#include "repdraw/chesscore.hpp"

#include <cctype>
#include <sstream>

namespace repdraw {

namespace {

constexpr int KNIGHT_D[8][2] = {{-2, -1}, {-2, 1}, {-1, -2}, {-1, 2},
                                {1, -2},  {1, 2},  {2, -1},  {2, 1}};
constexpr int KING_D[8][2] = {{-1, -1}, {-1, 0}, {-1, 1}, {0, -1},
                              {0, 1},   {1, -1}, {1, 0},  {1, 1}};
constexpr int ROOK_D[4][2] = {{-1, 0}, {1, 0}, {0, -1}, {0, 1}};
constexpr int BISHOP_D[4][2] = {{-1, -1}, {-1, 1}, {1, -1}, {1, 1}};

bool on_board(int row, int col) { return row >= 0 && row < 8 && col >= 0 && col < 8; }

std::uint8_t piece_from_letter(char c) {
    switch (c) {
        case 'P': return WP;
        case 'N': return WN;
        case 'B': return WB;
        case 'R': return WR;
        case 'Q': return WQ;
        case 'K': return WK;
        case 'p': return BP;
        case 'n': return BN;
        case 'b': return BB;
        case 'r': return BR;
        case 'q': return BQ;
        case 'k': return BK;
        default: return 0xFF;
    }
}

char letter_from_piece(std::uint8_t code) {
    static const char* white = " PNBRQK";
    static const char* black = " pnbrqk";
    return is_black(code) ? black[piece_type(code)] : white[piece_type(code)];
}

}  // namespace

Square square_from_string(const std::string& s) {
    if (s.size() != 2)
        throw ParseError("bad square '" + s + "'");
    char f = static_cast<char>(std::tolower(static_cast<unsigned char>(s[0])));
    char r = s[1];
    if (f < 'a' || f > 'h' || r < '1' || r > '8')
        throw ParseError("bad square '" + s + "'");
    return make_square(8 - (r - '0'), f - 'a');
}

std::string square_name(Square s) {
    std::string out(2, ' ');
    out[0] = static_cast<char>('a' + square_col(s));
    out[1] = static_cast<char>('0' + (8 - square_row(s)));
    return out;
}

std::string square_name_upper(Square s) {
    std::string out = square_name(s);
    out[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[0])));
    return out;
}

std::string move_text(const GenMove& m) {
    return square_name_upper(m.from) + square_name_upper(m.to);
}

std::uint16_t checksum16(const Matrix64& m) {
    std::uint16_t sum = 0;
    for (int i = 0; i < 64; ++i)
        if (m.cells[i] != EMPTY)
            sum = static_cast<std::uint16_t>(
                sum + static_cast<std::uint16_t>((m.cells[i] + 1) * (i + 1)));
    return sum;
}

Position parse_fen(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::string> fields;
    for (std::string f; in >> f;)
        fields.push_back(f);
    if (fields.size() != 4 && fields.size() != 6)
        throw ParseError("FEN: expected 4 or 6 fields, got " + std::to_string(fields.size()));

    Position p;
    // Field 1: placement
    {
        const std::string& s = fields[0];
        int row = 0, col = 0;
        for (char c : s) {
            if (c == '/') {
                if (col != 8)
                    throw ParseError("FEN field 1: rank " + std::to_string(8 - row) +
                                     " has " + std::to_string(col) + " files");
                ++row;
                col = 0;
                if (row > 7) throw ParseError("FEN field 1: too many ranks");
            } else if (c >= '1' && c <= '8') {
                col += c - '0';
                if (col > 8) throw ParseError("FEN field 1: rank overflow");
            } else {
                std::uint8_t code = piece_from_letter(c);
                if (code == 0xFF)
                    throw ParseError(std::string("FEN field 1: illegal piece letter '") + c + "'");
                if (col > 7) throw ParseError("FEN field 1: rank overflow");
                p.board.cells[make_square(row, col)] = code;
                ++col;
            }
        }
        if (row != 7 || col != 8)
            throw ParseError("FEN field 1: expected 8 ranks of 8 files");
    }
    // Field 2: side to move
    if (fields[1] == "w") p.sideToMove = Color::White;
    else if (fields[1] == "b") p.sideToMove = Color::Black;
    else throw ParseError("FEN field 2: expected 'w' or 'b'");
    // Field 3: castling
    if (fields[2] != "-") {
        for (char c : fields[2]) {
            switch (c) {
                case 'K': p.castlingRights[0] = true; break;
                case 'Q': p.castlingRights[1] = true; break;
                case 'k': p.castlingRights[2] = true; break;
                case 'q': p.castlingRights[3] = true; break;
                default: throw ParseError("FEN field 3: bad castling flag");
            }
        }
    }
    // Field 4: en passant
    if (fields[3] != "-")
        p.epSquare = square_from_string(fields[3]);
    if (fields.size() == 6) {
        try {
            p.halfmoveClock = std::stoi(fields[4]);
            p.fullmoveNumber = std::stoi(fields[5]);
        } catch (const std::exception&) {
            throw ParseError("FEN fields 5-6: expected integers");
        }
        if (p.halfmoveClock < 0 || p.fullmoveNumber < 1)
            throw ParseError("FEN fields 5-6: out of range");
    }

    int wk = 0, bk = 0, occupied = 0;
    for (auto c : p.board.cells) {
        if (c == WK) ++wk;
        if (c == BK) ++bk;
        if (c != EMPTY) ++occupied;
    }
    if (wk != 1 || bk != 1)
        throw ParseError("FEN field 1: need exactly one king per side");
    if (occupied > 32)
        throw ParseError("FEN field 1: more than 32 pieces");
    return p;
}

std::string emit_fen(const Position& p) {
    std::ostringstream out;
    for (int row = 0; row < 8; ++row) {
        int run = 0;
        for (int col = 0; col < 8; ++col) {
            std::uint8_t code = p.board.cells[make_square(row, col)];
            if (code == EMPTY) {
                ++run;
            } else {
                if (run) out << run;
                run = 0;
                out << letter_from_piece(code);
            }
        }
        if (run) out << run;
        if (row != 7) out << '/';
    }
    out << (p.sideToMove == Color::White ? " w " : " b ");
    std::string castle;
    if (p.castlingRights[0]) castle += 'K';
    if (p.castlingRights[1]) castle += 'Q';
    if (p.castlingRights[2]) castle += 'k';
    if (p.castlingRights[3]) castle += 'q';
    out << (castle.empty() ? "-" : castle);
    out << ' ' << (p.epSquare == NO_SQUARE ? "-" : square_name(p.epSquare));
    out << ' ' << p.halfmoveClock << ' ' << p.fullmoveNumber;
    return out.str();
}

Position start_position() {
    return parse_fen("rnbqkbnr/pppppppp/8/8/8/8/PPPPPPPP/RNBQKBNR w KQkq - 0 1");
}

Square king_square(const Position& p, Color c) {
    std::uint8_t king = c == Color::White ? WK : BK;
    for (int i = 0; i < 64; ++i)
        if (p.board.cells[i] == king) return i;
    return NO_SQUARE;
}

bool square_attacked(const Position& p, Square s, Color by) {
    int row = square_row(s), col = square_col(s);
    const auto& b = p.board.cells;
    bool white = by == Color::White;

    // Pawns. White pawns attack toward row 0.
    {
        int pr = white ? row + 1 : row - 1;
        std::uint8_t pawn = white ? WP : BP;
        if (on_board(pr, col - 1) && b[make_square(pr, col - 1)] == pawn) return true;
        if (on_board(pr, col + 1) && b[make_square(pr, col + 1)] == pawn) return true;
    }
    for (auto& d : KNIGHT_D) {
        int r = row + d[0], c = col + d[1];
        if (on_board(r, c) && b[make_square(r, c)] == (white ? WN : BN)) return true;
    }
    for (auto& d : KING_D) {
        int r = row + d[0], c = col + d[1];
        if (on_board(r, c) && b[make_square(r, c)] == (white ? WK : BK)) return true;
    }
    for (auto& d : ROOK_D) {
        int r = row + d[0], c = col + d[1];
        while (on_board(r, c)) {
            std::uint8_t code = b[make_square(r, c)];
            if (code != EMPTY) {
                if (is_color(code, by) && (piece_type(code) == 4 || piece_type(code) == 5))
                    return true;
                break;
            }
            r += d[0];
            c += d[1];
        }
    }
    for (auto& d : BISHOP_D) {
        int r = row + d[0], c = col + d[1];
        while (on_board(r, c)) {
            std::uint8_t code = b[make_square(r, c)];
            if (code != EMPTY) {
                if (is_color(code, by) && (piece_type(code) == 3 || piece_type(code) == 5))
                    return true;
                break;
            }
            r += d[0];
            c += d[1];
        }
    }
    return false;
}

bool in_check(const Position& p, Color c) {
    return square_attacked(p, king_square(p, c), flip(c));
}

namespace {

void slider_moves(const Position& p, Square from, const int (*dirs)[2], int ndirs,
                  std::vector<GenMove>& out) {
    Color us = p.sideToMove;
    for (int i = 0; i < ndirs; ++i) {
        int r = square_row(from) + dirs[i][0], c = square_col(from) + dirs[i][1];
        while (on_board(r, c)) {
            Square to = make_square(r, c);
            std::uint8_t code = p.board.cells[to];
            if (code == EMPTY) {
                out.push_back({static_cast<std::uint8_t>(from), static_cast<std::uint8_t>(to),
                               MoveKind::Quiet, 0});
            } else {
                if (!is_color(code, us))
                    out.push_back({static_cast<std::uint8_t>(from), static_cast<std::uint8_t>(to),
                                   MoveKind::Capture, 0});
                break;
            }
            r += dirs[i][0];
            c += dirs[i][1];
        }
    }
}

void leaper_moves(const Position& p, Square from, const int (*dirs)[2], int ndirs,
                  std::vector<GenMove>& out) {
    Color us = p.sideToMove;
    for (int i = 0; i < ndirs; ++i) {
        int r = square_row(from) + dirs[i][0], c = square_col(from) + dirs[i][1];
        if (!on_board(r, c)) continue;
        Square to = make_square(r, c);
        std::uint8_t code = p.board.cells[to];
        if (code == EMPTY)
            out.push_back({static_cast<std::uint8_t>(from), static_cast<std::uint8_t>(to),
                           MoveKind::Quiet, 0});
        else if (!is_color(code, us))
            out.push_back({static_cast<std::uint8_t>(from), static_cast<std::uint8_t>(to),
                           MoveKind::Capture, 0});
    }
}

void pawn_moves(const Position& p, Square from, std::vector<GenMove>& out) {
    Color us = p.sideToMove;
    bool white = us == Color::White;
    int dr = white ? -1 : 1;
    int startRow = white ? 6 : 1;
    int promoRow = white ? 0 : 7;
    int row = square_row(from), col = square_col(from);
    auto push = [&](Square to, MoveKind kind) {
        if (square_row(to) == promoRow) {
            for (std::uint8_t t : {5, 4, 3, 2})  // Q R B N
                out.push_back({static_cast<std::uint8_t>(from), static_cast<std::uint8_t>(to),
                               MoveKind::Promotion,
                               static_cast<std::uint8_t>(white ? t : t | 8)});
        } else {
            out.push_back({static_cast<std::uint8_t>(from), static_cast<std::uint8_t>(to),
                           kind, 0});
        }
    };
    // Single and double advance.
    if (on_board(row + dr, col) && p.board.cells[make_square(row + dr, col)] == EMPTY) {
        push(make_square(row + dr, col), MoveKind::PawnPush);
        if (row == startRow && p.board.cells[make_square(row + 2 * dr, col)] == EMPTY)
            push(make_square(row + 2 * dr, col), MoveKind::PawnPush);
    }
    // Captures.
    for (int dc : {-1, 1}) {
        if (!on_board(row + dr, col + dc)) continue;
        Square to = make_square(row + dr, col + dc);
        std::uint8_t code = p.board.cells[to];
        if (code != EMPTY && !is_color(code, us))
            push(to, MoveKind::Capture);
        else if (to == p.epSquare)
            out.push_back({static_cast<std::uint8_t>(from), static_cast<std::uint8_t>(to),
                           MoveKind::EnPassant, 0});
    }
}

void castle_moves(const Position& p, std::vector<GenMove>& out) {
    Color us = p.sideToMove;
    Color them = flip(us);
    bool white = us == Color::White;
    Square e = white ? 60 : 4;
    if (p.board.cells[e] != (white ? WK : BK)) return;
    // King side.
    if (p.castlingRights[white ? 0 : 2] && p.board.cells[e + 3] == (white ? WR : BR) &&
        p.board.cells[e + 1] == EMPTY && p.board.cells[e + 2] == EMPTY &&
        !square_attacked(p, e, them) && !square_attacked(p, e + 1, them) &&
        !square_attacked(p, e + 2, them))
        out.push_back({static_cast<std::uint8_t>(e), static_cast<std::uint8_t>(e + 2),
                       MoveKind::Castle, 0});
    // Queen side.
    if (p.castlingRights[white ? 1 : 3] && p.board.cells[e - 4] == (white ? WR : BR) &&
        p.board.cells[e - 1] == EMPTY && p.board.cells[e - 2] == EMPTY &&
        p.board.cells[e - 3] == EMPTY &&
        !square_attacked(p, e, them) && !square_attacked(p, e - 1, them) &&
        !square_attacked(p, e - 2, them))
        out.push_back({static_cast<std::uint8_t>(e), static_cast<std::uint8_t>(e - 2),
                       MoveKind::Castle, 0});
}

Position apply_move_unchecked(const Position& p, const GenMove& m) {
    Position q = p;
    auto& b = q.board.cells;
    std::uint8_t moving = b[m.from];
    bool white = p.sideToMove == Color::White;

    b[m.to] = moving;
    b[m.from] = EMPTY;
    q.epSquare = NO_SQUARE;

    switch (m.kind) {
        case MoveKind::Promotion:
            b[m.to] = m.promo;
            break;
        case MoveKind::EnPassant:
            // Captured pawn sits behind the destination square.
            b[make_square(square_row(m.to) + (white ? 1 : -1), square_col(m.to))] = EMPTY;
            break;
        case MoveKind::Castle: {
            bool kingSide = m.to > m.from;
            Square rookFrom = kingSide ? m.from + 3 : m.from - 4;
            Square rookTo = kingSide ? m.from + 1 : m.from - 1;
            b[rookTo] = b[rookFrom];
            b[rookFrom] = EMPTY;
            break;
        }
        case MoveKind::PawnPush:
            if (square_row(m.to) - square_row(m.from) == (white ? -2 : 2))
                q.epSquare = make_square(square_row(m.from) + (white ? -1 : 1), square_col(m.from));
            break;
        default:
            break;
    }

    // Castling rights drop when king or rook leaves home, or a rook is taken.
    auto touch = [&](Square s) {
        if (s == 60) q.castlingRights[0] = q.castlingRights[1] = false;
        if (s == 4) q.castlingRights[2] = q.castlingRights[3] = false;
        if (s == 63) q.castlingRights[0] = false;
        if (s == 56) q.castlingRights[1] = false;
        if (s == 7) q.castlingRights[2] = false;
        if (s == 0) q.castlingRights[3] = false;
    };
    touch(m.from);
    touch(m.to);

    q.halfmoveClock = irreversible(m) ? 0 : p.halfmoveClock + 1;
    if (!white) ++q.fullmoveNumber;
    q.sideToMove = flip(p.sideToMove);
    return q;
}

}  // namespace

std::vector<GenMove> generate_legal_moves(const Position& p) {
    std::vector<GenMove> pseudo;
    pseudo.reserve(64);
    Color us = p.sideToMove;
    for (Square s = 0; s < 64; ++s) {
        std::uint8_t code = p.board.cells[s];
        if (code == EMPTY || !is_color(code, us)) continue;
        switch (piece_type(code)) {
            case 1: pawn_moves(p, s, pseudo); break;
            case 2: leaper_moves(p, s, KNIGHT_D, 8, pseudo); break;
            case 3: slider_moves(p, s, BISHOP_D, 4, pseudo); break;
            case 4: slider_moves(p, s, ROOK_D, 4, pseudo); break;
            case 5:
                slider_moves(p, s, ROOK_D, 4, pseudo);
                slider_moves(p, s, BISHOP_D, 4, pseudo);
                break;
            case 6: leaper_moves(p, s, KING_D, 8, pseudo); break;
        }
    }
    castle_moves(p, pseudo);

    Square ks = king_square(p, us);
    bool checked = square_attacked(p, ks, flip(us));

    std::vector<GenMove> legal;
    legal.reserve(pseudo.size());
    for (const GenMove& m : pseudo) {
        bool needFull = checked || m.from == ks || m.kind == MoveKind::EnPassant;
        if (!needFull) {
            // A quiet piece off the king's lines cannot expose the king.
            int dr = square_row(m.from) - square_row(ks);
            int dc = square_col(m.from) - square_col(ks);
            needFull = dr == 0 || dc == 0 || dr == dc || dr == -dc;
        }
        if (needFull) {
            Position q = apply_move_unchecked(p, m);
            if (in_check(q, us)) continue;
        }
        legal.push_back(m);
    }
    return legal;
}

Position apply_move(const Position& p, const GenMove& m) {
    if (m.from > 63 || m.to > 63)
        throw std::invalid_argument("apply_move: square out of range");
    std::uint8_t moving = p.board.cells[m.from];
    if (moving == EMPTY || !is_color(moving, p.sideToMove))
        throw std::invalid_argument("apply_move: no own piece on from-square");
    std::uint8_t target = p.board.cells[m.to];
    if (target != EMPTY && is_color(target, p.sideToMove) && m.kind != MoveKind::Castle)
        throw std::invalid_argument("apply_move: destination holds own piece");
    if (piece_type(target) == 6)
        throw std::invalid_argument("apply_move: cannot capture a king");
    return apply_move_unchecked(p, m);
}

bool fifty_move_draw(const Position& p) { return p.halfmoveClock >= 100; }

std::uint64_t perft(const Position& p, int depth) {
    if (depth == 0) return 1;
    std::uint64_t total = 0;
    for (const GenMove& m : generate_legal_moves(p)) {
        if (depth == 1)
            ++total;
        else
            total += perft(apply_move(p, m), depth - 1);
    }
    return total;
}

}  // namespace repdraw
