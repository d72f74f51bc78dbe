#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "repdraw/chesscore.hpp"
#include "repdraw/movecode.hpp"

namespace repdraw {

struct PgnGame {
    std::map<std::string, std::string> tags;
    std::vector<std::string> sanMoves;
    std::string result;   // "1/2-1/2" etc., empty if absent
};

// Minimal PGN import: tag pairs, movetext with move numbers, {} comments,
// $n NAGs and a result token. One game per input.
PgnGame parse_pgn(const std::string& text);

// Resolves a SAN token against the legal moves of p. Throws ParseError when
// the token matches no legal move or is ambiguous.
GenMove san_to_move(const Position& p, const std::string& san);

enum class Adjudication : std::uint8_t {
    Ongoing,
    DrawTwofoldEngine,
    DrawThreefoldFIDE,
    DrawFiftyMove,
    Mate,
    Stalemate,
};

const char* to_string(Adjudication a);

struct ReplayOutcome {
    Position finalPosition;
    Adjudication adjudication = Adjudication::Ongoing;
    std::optional<int> firstDetectionPly;    // first chain-detector hit (1-based ply)
    std::optional<int> fideThreefoldPly;     // first ply where the placement stood 3 times
    int pliesPlayed = 0;
    std::vector<CodedMove> history;          // coded moves actually replayed
};

// Replays from the standard start position. After each ply the chain detector,
// the matrix occurrence count and the fifty-move rule are consulted; with
// adjudicate the game stops at the earliest triggering rule (repetition wins
// ties against the fifty-move rule).
ReplayOutcome replay_pgn(const std::string& pgnText, bool adjudicate);

}  // namespace repdraw
