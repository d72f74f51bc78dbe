#include <doctest.h>

#include "repdraw/fuzz.hpp"
#include "repdraw/pgn.hpp"

using namespace repdraw;

namespace {

std::vector<GenMove> resolve_line(const Position& start, const std::string& codedLine) {
    std::vector<GenMove> out;
    Position p = start;
    for (CodedMove cm : parse_coded_line(codedLine)) {
        DecodedMove d = decode_move(cm);
        bool found = false;
        for (const GenMove& m : generate_legal_moves(p)) {
            if (m.from == d.from && m.to == d.to) {
                out.push_back(m);
                p = apply_move(p, m);
                found = true;
                break;
            }
        }
        REQUIRE(found);
    }
    return out;
}

}  // namespace

TEST_CASE("classification: agreement everywhere") {
    PrefixVerdicts v;
    v.guarded = {true, 4, NoRepReason::ListExhausted};
    v.raw = {true, 4, NoRepReason::ListExhausted};
    v.matrix = {true, 4, NoRepReason::ListExhausted};
    CHECK(classify_chain_vs_matrix(v) == FuzzClass::Agree);
    CHECK(classify_raw_vs_matrix(v) == FuzzClass::Agree);
}

TEST_CASE("classification: chain false positive is unclassifiable") {
    PrefixVerdicts v;
    v.guarded = {true, 4, NoRepReason::ListExhausted};
    v.raw = {true, 4, NoRepReason::ListExhausted};
    v.matrix = {false, 0, NoRepReason::ListExhausted};
    CHECK(classify_chain_vs_matrix(v) == FuzzClass::Unclassifiable);
}

TEST_CASE("classification: parity, permutation, overflow") {
    PrefixVerdicts parity;
    parity.guarded = {false, 0, NoRepReason::ParityOnly};
    parity.raw = {true, 5, NoRepReason::ListExhausted};
    parity.matrix = {false, 0, NoRepReason::ListExhausted};
    CHECK(classify_raw_vs_matrix(parity) == FuzzClass::ParityCase);
    CHECK(classify_chain_vs_matrix(parity) == FuzzClass::Agree);

    PrefixVerdicts perm;
    perm.guarded = {false, 0, NoRepReason::ListExhausted};
    perm.raw = {false, 0, NoRepReason::ListExhausted};
    perm.matrix = {true, 10, NoRepReason::ListExhausted};
    CHECK(classify_chain_vs_matrix(perm) == FuzzClass::PermutationCase);

    PrefixVerdicts overflow;
    overflow.guarded = {false, 0, NoRepReason::ChainOverflow};
    overflow.raw = {false, 0, NoRepReason::ChainOverflow};
    overflow.matrix = {true, 8, NoRepReason::ListExhausted};
    CHECK(classify_chain_vs_matrix(overflow) == FuzzClass::OverflowCase);
}

TEST_CASE("crafted two-rook swap classifies as permutationCase") {
    Position start = parse_fen("r7/6k1/8/3K4/8/8/8/R6R w - - 0 1");
    auto moves = resolve_line(start, "A1A4 A8A7 H1B1 G7F7 A4H4 A7A6 H4H1 F7G7 B1A1 A6A8");
    FuzzReport rep;
    check_segment(start, moves, 24, rep);
    CHECK_FALSE(rep.failed);
    CHECK(rep.permutationCases == 1);
    CHECK(rep.matrixDetections >= 1);
    CHECK(rep.chainDetections == 0);
}

TEST_CASE("crafted triangulation classifies as parityCase") {
    Position start = parse_fen("6k1/8/8/8/8/8/8/4K3 w - - 0 1");
    auto moves = resolve_line(start, "E1D2 G8H8 D2D1 H8G8 D1E1");
    FuzzReport rep;
    check_segment(start, moves, 24, rep);
    CHECK_FALSE(rep.failed);
    CHECK(rep.parityCases >= 1);
    CHECK(rep.chainDetections == 0);
}

TEST_CASE("segments ending in an irreversible move agree on NoRepetition") {
    Position start = start_position();
    auto moves = resolve_line(start, "G1F3 G8F6 F3G1 F6G8 E2E4");
    MoveList l(16);
    PositionStack s;
    s.push_position(start, false);
    Position p = start;
    for (const GenMove& m : moves) {
        p = apply_move(p, m);
        l.push_move(code_from_genmove(m));
        s.push_position(p, irreversible(m));
    }
    CHECK(detect_repetition(l).reason == NoRepReason::IrreversibleBarrier);
    CHECK(detect_repetition_raw(l).reason == NoRepReason::IrreversibleBarrier);
    CHECK(s.detect_repetition_matrix().reason == NoRepReason::IrreversibleBarrier);
}

TEST_CASE("tiny chain capacity produces overflow cases, not failures") {
    // With two slots, three pieces wandering at once overflow the list.
    Position start = parse_fen("r6k/8/8/8/8/8/8/R6K w - - 0 1");
    auto moves = resolve_line(start,
                              "A1A3 A8A6 H1G1 H8G8 A3A1 A6A8 G1H1 G8H8");
    FuzzReport rep;
    check_segment(start, moves, 2, rep);
    CHECK_FALSE(rep.failed);
    CHECK(rep.overflowCases >= 1);
}

TEST_CASE("short deterministic fuzz run is classifiable and repeatable") {
    FuzzConfig cfg;
    cfg.seed = 20260823;
    cfg.segments = 300;
    cfg.maxSegmentPlies = 24;
    FuzzReport a = fuzz_differential(cfg);
    CHECK_FALSE(a.failed);
    CHECK(a.prefixesChecked > 0);

    FuzzReport b = fuzz_differential(cfg);
    CHECK(a.prefixesChecked == b.prefixesChecked);
    CHECK(a.chainDetections == b.chainDetections);
    CHECK(a.parityCases == b.parityCases);
    CHECK(a.permutationCases == b.permutationCases);

    cfg.workers = 4;
    FuzzReport c = fuzz_differential(cfg);
    CHECK(a.prefixesChecked == c.prefixesChecked);
    CHECK(a.parityCases == c.parityCases);
    CHECK(a.permutationCases == c.permutationCases);
}
