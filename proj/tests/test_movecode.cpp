#include <doctest.h>

#include "repdraw/movecode.hpp"

using namespace repdraw;

TEST_CASE("encode_move: the 14871 worked value") {
    CHECK(encode_move(square_from_string("c1"), square_from_string("h6"), false) == 14871);
    CHECK(encode_move(0, 0, false) == 0);
    CHECK(encode_move(58, 23, true) == 47639);   // (58+128)*256+23
}

TEST_CASE("decode_move inverts encode_move") {
    CHECK(decode_move(14871) == DecodedMove{58, 23, false});
    CHECK(decode_move(0) == DecodedMove{0, 0, false});
    CHECK(decode_move(47639) == DecodedMove{58, 23, true});
}

TEST_CASE("encode/decode round-trip, all 8192 combinations") {
    for (int from = 0; from < 64; ++from)
        for (int to = 0; to < 64; ++to)
            for (bool irr : {false, true}) {
                CodedMove c = encode_move(from, to, irr);
                CHECK(decode_move(c) == DecodedMove{from, to, irr});
                CHECK(((c >> 8) & 0x40) == 0);   // reserved bit stays clear
            }
}

TEST_CASE("invalid codings are rejected") {
    CHECK_THROWS_AS(encode_move(-1, 0, false), std::invalid_argument);
    CHECK_THROWS_AS(encode_move(0, 64, false), std::invalid_argument);
    CHECK_THROWS_AS(decode_move(0x4000), std::invalid_argument);   // bit 6 of high byte
}

TEST_CASE("code_from_genmove: flag equals chesscore irreversibility") {
    GenMove knight{62, 45, MoveKind::Quiet, 0};   // Ng1-f3
    CHECK(code_from_genmove(knight) == encode_move(62, 45, false));

    GenMove pawn{static_cast<std::uint8_t>(square_from_string("e2")),
                 static_cast<std::uint8_t>(square_from_string("e4")), MoveKind::PawnPush, 0};
    CHECK(coded_irreversible(code_from_genmove(pawn)));

    GenMove castle{static_cast<std::uint8_t>(square_from_string("e1")),
                   static_cast<std::uint8_t>(square_from_string("g1")), MoveKind::Castle, 0};
    CHECK(code_from_genmove(castle) ==
          encode_move(square_from_string("e1"), square_from_string("g1"), true));
}

TEST_CASE("flag matches the predicate over a whole legal game") {
    Position p = start_position();
    for (int i = 0; i < 40; ++i) {
        auto moves = generate_legal_moves(p);
        if (moves.empty()) break;
        for (const auto& m : moves)
            CHECK(coded_irreversible(code_from_genmove(m)) == irreversible(m));
        p = apply_move(p, moves[i % moves.size()]);
    }
}

TEST_CASE("textual rendering and parsing") {
    CHECK(coded_move_text(14871) == "C1H6");
    CHECK(coded_move_text(encode_move(12, 28, true)) == "E7E5*");
    CHECK(parse_coded_move("C1H6") == 14871);
    CHECK(parse_coded_move("E7E5*") == encode_move(12, 28, true));
    CHECK_THROWS_AS(parse_coded_move("C1H"), ParseError);

    auto line = parse_coded_line("C1H6 H8G8 H6G5 G8H7 G5H5 H7G7 H5G5 G7H8 G5H6");
    CHECK(line.size() == 9);
    CHECK(line[0] == 14871);
    CHECK(coded_move_text(line[8]) == "G5H6");
}
