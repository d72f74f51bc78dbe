#include "repdraw/fuzz.hpp"

#include <random>
#include <sstream>
#include <thread>

#include "repdraw/movecode.hpp"

namespace repdraw {

FuzzClass classify_chain_vs_matrix(const PrefixVerdicts& v) {
    const RepetitionVerdict& g = v.guarded;
    const RepetitionVerdict& m = v.matrix;
    if (g.repetition) {
        // Chain closure implies a true placement repeat, so the matrix side
        // must confirm it; a closer matrix hit means an identical-piece
        // permutation repeated earlier than the chain closure.
        if (!m.repetition) return FuzzClass::Unclassifiable;
        if (m.scannedPlies == g.scannedPlies) return FuzzClass::Agree;
        if (m.scannedPlies < g.scannedPlies) return FuzzClass::PermutationCase;
        return FuzzClass::Unclassifiable;
    }
    if (!m.repetition) return FuzzClass::Agree;
    if (g.reason == NoRepReason::ChainOverflow) return FuzzClass::OverflowCase;
    if (g.reason == NoRepReason::ListExhausted || g.reason == NoRepReason::ParityOnly)
        return FuzzClass::PermutationCase;
    // A barrier inside the window contradicts a matrix repeat across it.
    return FuzzClass::Unclassifiable;
}

FuzzClass classify_raw_vs_matrix(const PrefixVerdicts& v) {
    const RepetitionVerdict& r = v.raw;
    const RepetitionVerdict& m = v.matrix;
    if (!r.repetition) {
        // Raw is strictly more eager than guarded; it cannot miss what the
        // guarded scan reports.
        if (v.guarded.repetition) return FuzzClass::Unclassifiable;
        return FuzzClass::Agree;
    }
    if (r.scannedPlies % 2 == 0) {
        // An even first closure is exactly the guarded verdict.
        return r.repetition == v.guarded.repetition &&
                       r.scannedPlies == v.guarded.scannedPlies
                   ? FuzzClass::Agree
                   : FuzzClass::Unclassifiable;
    }
    // Odd closure: same placement with the other side to move.
    if (!m.repetition || m.scannedPlies != r.scannedPlies) return FuzzClass::ParityCase;
    return FuzzClass::Unclassifiable;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

struct SegmentState {
    Position start;
    std::vector<GenMove> moves;
    std::vector<Position> positions;   // positions[i] = after i moves
};

PrefixVerdicts evaluate_prefix(const MoveList& list, const PositionStack& stack,
                               int chainCapacity) {
    PrefixVerdicts v;
    v.guarded = detect_repetition(list, chainCapacity);
    v.raw = detect_repetition_raw(list, chainCapacity);
    v.matrix = stack.detect_repetition_matrix();
    return v;
}

// Independent confirmation for permutation hits: replay the stored positions
// and compare placements directly.
bool confirm_matrix_repeat(const SegmentState& seg, std::size_t prefixLen, int distance) {
    if (distance <= 0 || static_cast<std::size_t>(distance) > prefixLen) return false;
    const Position& a = seg.positions[prefixLen];
    const Position& b = seg.positions[prefixLen - distance];
    return a.board == b.board && a.sideToMove == b.sideToMove;
}

std::string make_dump(const SegmentState& seg, std::size_t prefixLen, std::size_t fromPly) {
    std::ostringstream out;
    out << "# fen " << emit_fen(seg.positions[fromPly]) << '\n';
    for (std::size_t i = fromPly; i < prefixLen; ++i)
        out << coded_move_text(code_from_genmove(seg.moves[i])) << '\n';
    return out.str();
}

// Re-evaluates a window of the segment starting fromPly deep, for dump
// minimization.
bool window_unclassifiable(const SegmentState& seg, std::size_t prefixLen, std::size_t fromPly,
                           int chainCapacity) {
    MoveList list(prefixLen + 1);
    PositionStack stack;
    stack.push_position(seg.positions[fromPly], false);
    for (std::size_t i = fromPly; i < prefixLen; ++i) {
        list.push_move(code_from_genmove(seg.moves[i]));
        stack.push_position(seg.positions[i + 1], irreversible(seg.moves[i]));
    }
    PrefixVerdicts v = evaluate_prefix(list, stack, chainCapacity);
    return classify_chain_vs_matrix(v) == FuzzClass::Unclassifiable ||
           classify_raw_vs_matrix(v) == FuzzClass::Unclassifiable;
}

void tally_prefix(const SegmentState& seg, std::size_t prefixLen, const PrefixVerdicts& v,
                  int chainCapacity, FuzzReport& rep) {
    ++rep.prefixesChecked;
    if (v.guarded.repetition) ++rep.chainDetections;
    if (v.raw.repetition) ++rep.rawDetections;
    if (v.matrix.repetition) ++rep.matrixDetections;

    FuzzClass cm = classify_chain_vs_matrix(v);
    FuzzClass rm = classify_raw_vs_matrix(v);
    if (cm == FuzzClass::PermutationCase &&
        !confirm_matrix_repeat(seg, prefixLen, v.matrix.scannedPlies))
        cm = FuzzClass::Unclassifiable;

    if (cm == FuzzClass::Unclassifiable || rm == FuzzClass::Unclassifiable) {
        if (!rep.failed) {
            std::size_t fromPly = 0;
            while (fromPly + 1 < prefixLen &&
                   window_unclassifiable(seg, prefixLen, fromPly + 1, chainCapacity))
                ++fromPly;
            rep.failureDump = make_dump(seg, prefixLen, fromPly);
        }
        rep.failed = true;
        return;
    }
    if (cm == FuzzClass::PermutationCase) ++rep.permutationCases;
    if (cm == FuzzClass::OverflowCase) ++rep.overflowCases;
    if (rm == FuzzClass::ParityCase) ++rep.parityCases;
}

void run_segment(std::uint64_t seed, std::uint64_t index, int maxPlies, int chainCapacity,
                 FuzzReport& rep) {
    std::mt19937_64 rng(splitmix64(seed ^ (index * 0x9E3779B97F4A7C15ULL + 1)));

    SegmentState seg;
    Position p = start_position();
    // Warm-up scramble so segments start from varied positions.
    int warm = static_cast<int>(rng() % 17);
    for (int i = 0; i < warm; ++i) {
        auto moves = generate_legal_moves(p);
        if (moves.empty()) break;
        p = apply_move(p, moves[rng() % moves.size()]);
    }
    seg.start = p;
    seg.positions.push_back(p);

    MoveList list(maxPlies + 1);
    PositionStack stack;
    stack.push_position(p, false);

    // Reversible-heavy playout; the bias is part of the per-segment seed.
    int reversiblePct = 80 + static_cast<int>(rng() % 20);
    for (int ply = 0; ply < maxPlies; ++ply) {
        auto moves = generate_legal_moves(p);
        if (moves.empty()) break;
        std::vector<GenMove> reversibleMoves;
        for (const GenMove& m : moves)
            if (!irreversible(m)) reversibleMoves.push_back(m);
        GenMove chosen;
        if (reversibleMoves.empty())
            chosen = moves[rng() % moves.size()];
        else if (reversibleMoves.size() == moves.size() ||
                 static_cast<int>(rng() % 100) < reversiblePct)
            chosen = reversibleMoves[rng() % reversibleMoves.size()];
        else
            chosen = moves[rng() % moves.size()];

        p = apply_move(p, chosen);
        seg.moves.push_back(chosen);
        seg.positions.push_back(p);
        list.push_move(code_from_genmove(chosen));
        stack.push_position(p, irreversible(chosen));

        PrefixVerdicts v = evaluate_prefix(list, stack, chainCapacity);
        tally_prefix(seg, seg.moves.size(), v, chainCapacity, rep);
        if (rep.failed) return;
    }
}

}  // namespace

void check_segment(const Position& start, const std::vector<GenMove>& moves, int chainCapacity,
                   FuzzReport& report) {
    SegmentState seg;
    seg.start = start;
    seg.positions.push_back(start);
    Position p = start;

    MoveList list(moves.size() + 1);
    PositionStack stack;
    stack.push_position(p, false);
    for (const GenMove& m : moves) {
        p = apply_move(p, m);
        seg.moves.push_back(m);
        seg.positions.push_back(p);
        list.push_move(code_from_genmove(m));
        stack.push_position(p, irreversible(m));
        PrefixVerdicts v = evaluate_prefix(list, stack, chainCapacity);
        tally_prefix(seg, seg.moves.size(), v, chainCapacity, report);
        if (report.failed) return;
    }
}

FuzzReport fuzz_differential(const FuzzConfig& cfg) {
    if (cfg.segments < 1)
        throw std::invalid_argument("fuzz_differential: segments must be >= 1");
    int workers = std::max(1, cfg.workers);

    std::vector<FuzzReport> parts(workers);
    auto work = [&](int w) {
        for (std::uint64_t i = w; i < static_cast<std::uint64_t>(cfg.segments); i += workers) {
            ++parts[w].segments;
            run_segment(cfg.seed, i, cfg.maxSegmentPlies, cfg.chainCapacity, parts[w]);
            if (parts[w].failed) return;
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> threads;
        for (int w = 0; w < workers; ++w)
            threads.emplace_back(work, w);
        for (auto& t : threads) t.join();
    }

    FuzzReport total;
    for (const FuzzReport& p : parts) {
        total.segments += p.segments;
        total.prefixesChecked += p.prefixesChecked;
        total.chainDetections += p.chainDetections;
        total.rawDetections += p.rawDetections;
        total.matrixDetections += p.matrixDetections;
        total.parityCases += p.parityCases;
        total.permutationCases += p.permutationCases;
        total.overflowCases += p.overflowCases;
        if (p.failed && !total.failed) {
            total.failed = true;
            total.failureDump = p.failureDump;
        }
    }
    return total;
}

std::string format_fuzz_report(const FuzzReport& r) {
    std::ostringstream out;
    out << "segments\t" << r.segments << '\n'
        << "prefixesChecked\t" << r.prefixesChecked << '\n'
        << "chainDetections\t" << r.chainDetections << '\n'
        << "rawDetections\t" << r.rawDetections << '\n'
        << "matrixDetections\t" << r.matrixDetections << '\n'
        << "parityCases\t" << r.parityCases << '\n'
        << "permutationCases\t" << r.permutationCases << '\n'
        << "overflowCases\t" << r.overflowCases << '\n'
        << "unclassifiable\t" << (r.failed ? 1 : 0) << '\n';
    if (r.failed) out << "-- reproduction --\n" << r.failureDump;
    return out.str();
}

}  // namespace repdraw
