#include "repdraw/searcher.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace repdraw {

const char* to_string(DetectorMode m) {
    switch (m) {
        case DetectorMode::Off: return "off";
        case DetectorMode::Chain: return "chain";
        case DetectorMode::ChainRaw: return "chainRaw";
        case DetectorMode::Matrix: return "matrix";
    }
    return "?";
}

DetectorMode detector_mode_from_string(const std::string& s) {
    if (s == "off") return DetectorMode::Off;
    if (s == "chain") return DetectorMode::Chain;
    if (s == "chainRaw" || s == "chainraw" || s == "raw") return DetectorMode::ChainRaw;
    if (s == "matrix") return DetectorMode::Matrix;
    throw std::invalid_argument("unknown detector mode '" + s + "'");
}

namespace {

constexpr int PIECE_VALUE[7] = {0, 100, 300, 310, 500, 900, 0};

int material_balance(const Position& p) {
    int white = 0, black = 0;
    for (auto code : p.board.cells) {
        if (code == EMPTY) continue;
        int v = PIECE_VALUE[piece_type(code)];
        if (is_white(code)) white += v;
        else black += v;
    }
    return white - black;
}

}  // namespace

int evaluate_static(const Position& p, EvalMode mode) {
    int score = material_balance(p);
    if (p.sideToMove == Color::Black) score = -score;
    if (mode == EvalMode::MaterialPlusMobility) {
        Position flipped = p;
        flipped.sideToMove = flip(p.sideToMove);
        flipped.epSquare = NO_SQUARE;
        int own = static_cast<int>(generate_legal_moves(p).size());
        int opp = static_cast<int>(generate_legal_moves(flipped).size());
        score += 2 * (own - opp);
    }
    return score;
}

namespace {

struct SearchCtx {
    SearchConfig cfg;
    bool prune = true;
    SearchStats stats;            // current iteration
    MoveList list{1};             // sized at search start
    PositionStack pstack;
};

// Captures, promotions and en passant first; stable within each class so the
// ordering is deterministic and mode-independent.
void order_moves(std::vector<GenMove>& moves) {
    std::stable_partition(moves.begin(), moves.end(), [](const GenMove& m) {
        return m.kind == MoveKind::Capture || m.kind == MoveKind::Promotion ||
               m.kind == MoveKind::EnPassant;
    });
}

int negamax(SearchCtx& ctx, const Position& p, int depth, int ply, int alpha, int beta,
            std::vector<GenMove>& pv) {
    pv.clear();

    if (ply > 0) {
        switch (ctx.cfg.detectorMode) {
            case DetectorMode::Chain:
                if (detect_repetition(ctx.list, ctx.cfg.chainCapacity).repetition) {
                    ++ctx.stats.repetitionHits;
                    return 0;
                }
                break;
            case DetectorMode::ChainRaw:
                if (detect_repetition_raw(ctx.list, ctx.cfg.chainCapacity).repetition) {
                    ++ctx.stats.repetitionHits;
                    return 0;
                }
                break;
            case DetectorMode::Matrix:
                if (ctx.pstack.detect_repetition_matrix().repetition) {
                    ++ctx.stats.repetitionHits;
                    return 0;
                }
                break;
            case DetectorMode::Off:
                break;
        }
        if (fifty_move_draw(p)) return 0;
    }

    std::vector<GenMove> moves = generate_legal_moves(p);
    ctx.stats.generatedPositions += moves.size();
    if (moves.empty())
        return in_check(p, p.sideToMove) ? -(MATE_SCORE - ply) : 0;
    if (depth == 0) {
        ++ctx.stats.terminalNodes;
        return evaluate_static(p, ctx.cfg.evalMode);
    }
    order_moves(moves);

    bool chainMode = ctx.cfg.detectorMode == DetectorMode::Chain ||
                     ctx.cfg.detectorMode == DetectorMode::ChainRaw;
    int best = -MATE_SCORE - 1;
    std::vector<GenMove> childPv;
    for (const GenMove& m : moves) {
        Position child = apply_move(p, m);
        if (chainMode) ctx.list.push_move(code_from_genmove(m));
        if (ctx.cfg.detectorMode == DetectorMode::Matrix)
            ctx.pstack.push_position(child, irreversible(m));

        int score = -negamax(ctx, child, depth - 1, ply + 1, -beta, -alpha, childPv);

        if (chainMode) ctx.list.pop_move();
        if (ctx.cfg.detectorMode == DetectorMode::Matrix) ctx.pstack.pop_position();

        if (score > best) {
            best = score;
            pv.clear();
            pv.push_back(m);
            pv.insert(pv.end(), childPv.begin(), childPv.end());
            if (score > alpha) alpha = score;
        }
        if (ctx.prune && alpha >= beta) break;
    }
    return best;
}

SearchResult run_search(const Position& root, const SearchConfig& cfg,
                        const std::vector<CodedMove>& history, bool prune, bool deepening) {
    if (cfg.maxDepth < 1 || cfg.maxDepth > 16)
        throw std::invalid_argument("search: maxDepth must be in 1..16");

    SearchResult result;
    if (generate_legal_moves(root).empty()) {
        result.hasMove = false;
        result.score = in_check(root, root.sideToMove) ? -MATE_SCORE : 0;
        return result;
    }

    SearchCtx ctx;
    ctx.cfg = cfg;
    ctx.prune = prune;
    std::size_t cap = std::max<std::size_t>(255, history.size() + cfg.maxDepth + 1);
    ctx.list = MoveList::seed_history(history, cap);
    // The matrix detector's window starts at the root; coded history carries
    // no piece identities, so historical matrices cannot be rebuilt from it.
    ctx.pstack.push_position(root, root.halfmoveClock == 0);

    int firstDepth = deepening ? 1 : cfg.maxDepth;
    for (int depth = firstDepth; depth <= cfg.maxDepth; ++depth) {
        ctx.stats = {};
        auto t0 = std::chrono::steady_clock::now();
        std::vector<GenMove> pv;
        int score = negamax(ctx, root, depth, 0, -MATE_SCORE - 1, MATE_SCORE + 1, pv);
        ctx.stats.elapsedSec =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

        SearchIteration it;
        it.depth = depth;
        it.score = score;
        it.keyMove = pv.front();
        it.stats = ctx.stats;
        it.principalVariation = pv;
        result.iterations.push_back(std::move(it));
        result.stats += ctx.stats;
    }

    const SearchIteration& last = result.iterations.back();
    result.hasMove = true;
    result.bestMove = last.keyMove;
    result.score = last.score;
    result.depth = last.depth;
    result.principalVariation = last.principalVariation;
    return result;
}

}  // namespace

SearchResult search(const Position& root, const SearchConfig& cfg,
                    const std::vector<CodedMove>& history) {
    return run_search(root, cfg, history, true, true);
}

SearchResult negamax_reference(const Position& root, const SearchConfig& cfg,
                               const std::vector<CodedMove>& history) {
    return run_search(root, cfg, history, false, false);
}

}  // namespace repdraw
