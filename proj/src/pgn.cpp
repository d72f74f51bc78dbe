#include "repdraw/pgn.hpp"

#include <cctype>
#include <sstream>

#include "repdraw/chainrep.hpp"
#include "repdraw/matrixoracle.hpp"

namespace repdraw {

namespace {

bool is_result_token(const std::string& t) {
    return t == "1-0" || t == "0-1" || t == "1/2-1/2" || t == "*";
}

// Strips move numbers like "12." / "12..." and annotation suffixes.
bool is_move_number(const std::string& t) {
    std::size_t i = 0;
    while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) ++i;
    if (i == 0) return false;
    while (i < t.size() && t[i] == '.') ++i;
    return i == t.size();
}

}  // namespace

PgnGame parse_pgn(const std::string& text) {
    PgnGame game;
    std::istringstream in(text);
    std::string line;
    std::string movetext;
    while (std::getline(in, line)) {
        std::size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        if (line[a] == '[') {
            std::size_t nameEnd = line.find(' ', a);
            std::size_t q1 = line.find('"', a);
            std::size_t q2 = line.rfind('"');
            if (nameEnd == std::string::npos || q1 == std::string::npos || q2 <= q1)
                throw ParseError("PGN: malformed tag pair: " + line);
            game.tags[line.substr(a + 1, nameEnd - a - 1)] = line.substr(q1 + 1, q2 - q1 - 1);
        } else {
            movetext += ' ';
            movetext += line;
        }
    }
    // Drop {...} comments (single level is enough for the import subset).
    std::string clean;
    bool inComment = false;
    for (char c : movetext) {
        if (c == '{') inComment = true;
        else if (c == '}') inComment = false;
        else if (!inComment) clean += c;
    }
    std::istringstream toks(clean);
    for (std::string t; toks >> t;) {
        if (is_result_token(t)) {
            game.result = t;
            break;
        }
        if (is_move_number(t) || t[0] == '$') continue;
        // Move numbers glued to moves: "1.d4" / "38...Nxe3+".
        std::size_t i = 0;
        while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) ++i;
        if (i > 0 && i < t.size() && t[i] == '.') {
            while (i < t.size() && t[i] == '.') ++i;
            t = t.substr(i);
            if (t.empty()) continue;
        }
        game.sanMoves.push_back(t);
    }
    return game;
}

GenMove san_to_move(const Position& p, const std::string& sanIn) {
    std::string san = sanIn;
    // Trailing check/mate/annotation marks carry no disambiguation weight.
    while (!san.empty() && (san.back() == '+' || san.back() == '#' || san.back() == '!' ||
                            san.back() == '?'))
        san.pop_back();
    if (san.empty())
        throw ParseError("SAN: empty move token");

    std::vector<GenMove> legal = generate_legal_moves(p);
    bool white = p.sideToMove == Color::White;

    if (san == "O-O" || san == "0-0" || san == "O-O-O" || san == "0-0-0") {
        bool kingSide = san == "O-O" || san == "0-0";
        for (const GenMove& m : legal)
            if (m.kind == MoveKind::Castle && (m.to > m.from) == kingSide) return m;
        throw ParseError("SAN: illegal castling '" + sanIn + "'");
    }

    int pieceType = 1;   // pawn unless a piece letter leads
    std::size_t i = 0;
    switch (san[0]) {
        case 'N': pieceType = 2; i = 1; break;
        case 'B': pieceType = 3; i = 1; break;
        case 'R': pieceType = 4; i = 1; break;
        case 'Q': pieceType = 5; i = 1; break;
        case 'K': pieceType = 6; i = 1; break;
        default: break;
    }

    int promo = 0;
    std::size_t end = san.size();
    if (end >= 2 && san[end - 2] == '=') {
        switch (san[end - 1]) {
            case 'Q': promo = 5; break;
            case 'R': promo = 4; break;
            case 'B': promo = 3; break;
            case 'N': promo = 2; break;
            default: throw ParseError("SAN: bad promotion piece in '" + sanIn + "'");
        }
        end -= 2;
    }
    if (end < i + 2)
        throw ParseError("SAN: no destination square in '" + sanIn + "'");
    Square to = square_from_string(san.substr(end - 2, 2));

    int disFile = -1, disRank = -1;
    for (std::size_t k = i; k + 2 < end; ++k) {
        char c = san[k];
        if (c == 'x') continue;
        if (c >= 'a' && c <= 'h') disFile = c - 'a';
        else if (c >= '1' && c <= '8') disRank = 8 - (c - '0');
        else throw ParseError("SAN: bad disambiguation in '" + sanIn + "'");
    }

    const GenMove* found = nullptr;
    for (const GenMove& m : legal) {
        if (m.kind == MoveKind::Castle) continue;
        std::uint8_t code = p.board.cells[m.from];
        if (piece_type(code) != pieceType) continue;
        if (m.to != to) continue;
        if (disFile >= 0 && square_col(m.from) != disFile) continue;
        if (disRank >= 0 && square_row(m.from) != disRank) continue;
        if (promo != 0) {
            int promoCode = white ? promo : promo | 8;
            if (m.kind != MoveKind::Promotion || m.promo != promoCode) continue;
        } else if (m.kind == MoveKind::Promotion) {
            continue;
        }
        if (found)
            throw ParseError("SAN: ambiguous move '" + sanIn + "'");
        found = &m;
    }
    if (!found)
        throw ParseError("SAN: no legal move matches '" + sanIn + "'");
    return *found;
}

const char* to_string(Adjudication a) {
    switch (a) {
        case Adjudication::Ongoing: return "ongoing";
        case Adjudication::DrawTwofoldEngine: return "drawTwofoldEngine";
        case Adjudication::DrawThreefoldFIDE: return "drawThreefoldFIDE";
        case Adjudication::DrawFiftyMove: return "drawFiftyMove";
        case Adjudication::Mate: return "mate";
        case Adjudication::Stalemate: return "stalemate";
    }
    return "?";
}

ReplayOutcome replay_pgn(const std::string& pgnText, bool adjudicate) {
    PgnGame game = parse_pgn(pgnText);

    Position p = start_position();
    MoveList list(1024);
    PositionStack stack;
    stack.push_position(p, false);

    ReplayOutcome out;
    int ply = 0;
    for (const std::string& san : game.sanMoves) {
        ++ply;
        GenMove m;
        try {
            m = san_to_move(p, san);
        } catch (const ParseError& e) {
            std::ostringstream msg;
            msg << "move " << (ply + 1) / 2 << (ply % 2 ? " (White)" : " (Black)") << ": "
                << e.what();
            throw ParseError(msg.str());
        }
        p = apply_move(p, m);
        list.push_move(code_from_genmove(m));
        stack.push_position(p, irreversible(m));
        out.history.push_back(code_from_genmove(m));
        out.pliesPlayed = ply;

        bool chainHit = detect_repetition(list).repetition;
        int occurrences = stack.count_occurrences();
        if (chainHit && !out.firstDetectionPly) out.firstDetectionPly = ply;
        if (occurrences >= 3 && !out.fideThreefoldPly) out.fideThreefoldPly = ply;

        if (adjudicate) {
            // Repetition beats the fifty-move rule on a tie; the FIDE claim
            // beats the engine's twofold convention.
            if (occurrences >= 3) {
                out.adjudication = Adjudication::DrawThreefoldFIDE;
            } else if (chainHit) {
                out.adjudication = Adjudication::DrawTwofoldEngine;
            } else if (fifty_move_draw(p)) {
                out.adjudication = Adjudication::DrawFiftyMove;
            }
            if (out.adjudication != Adjudication::Ongoing) break;
        }
    }

    if (out.adjudication == Adjudication::Ongoing && generate_legal_moves(p).empty())
        out.adjudication =
            in_check(p, p.sideToMove) ? Adjudication::Mate : Adjudication::Stalemate;
    out.finalPosition = p;
    return out;
}

}  // namespace repdraw
