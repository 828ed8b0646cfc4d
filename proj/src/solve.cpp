#include "gsynt/solve.hpp"

#include <algorithm>
#include <array>

namespace gsynt::parity {

namespace {

// The recursion works on an implicit subgame: `alive[v]` marks the
// vertices of the current call. Frames remember only what they removed,
// so total bookkeeping memory stays linear in the arena size.
class Zielonka {
public:
    explicit Zielonka(const ParityArena& a)
        : a_(a),
          alive_(a.size(), 1),
          strat_{std::vector<int>(a.size(), -1), std::vector<int>(a.size(), -1)},
          mark_(a.size(), 0),
          cnt_(a.size(), 0) {}

    SolveResult run() {
        struct Frame {
            int phase = 0;
            Player sigma = Player::I;
            std::vector<int> targets;   // min-color vertices of this subgame
            std::vector<int> removed_a; // attractor of targets
            std::vector<int> removed_b; // opponent attractor in phase 2
        };
        std::vector<Frame> stack;
        stack.emplace_back();
        std::array<std::vector<int>, 2> res;

        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.phase == 0) {
                int m = min_color();
                if (m < 0) {  // empty subgame
                    res[0].clear();
                    res[1].clear();
                    stack.pop_back();
                    continue;
                }
                f.sigma = (m % 2 == 0) ? Player::I : Player::II;
                f.targets.clear();
                for (int v = 0; v < a_.size(); ++v)
                    if (alive_[v] && a_.colors[v] == m) f.targets.push_back(v);
                f.removed_a = attract(f.sigma, f.targets);
                for (int v : f.removed_a) alive_[v] = 0;
                f.phase = 1;
                stack.emplace_back();
                continue;
            }
            if (f.phase == 1) {
                for (int v : f.removed_a) alive_[v] = 1;
                Player opp = opponent(f.sigma);
                if (res[static_cast<int>(opp)].empty()) {
                    // sigma wins the whole subgame; fix moves on the
                    // min-color vertices toward the lowest live successor.
                    for (int v : f.targets) {
                        if (a_.owners[v] != f.sigma) continue;
                        for (int w : a_.out[v]) {
                            if (alive_[w]) {
                                strat_[static_cast<int>(f.sigma)][v] = w;
                                break;
                            }
                        }
                    }
                    auto& win = res[static_cast<int>(f.sigma)];
                    win.clear();
                    res[static_cast<int>(opp)].clear();
                    for (int v = 0; v < a_.size(); ++v)
                        if (alive_[v]) win.push_back(v);
                    stack.pop_back();
                    continue;
                }
                f.removed_b = attract(opp, res[static_cast<int>(opp)]);
                for (int v : f.removed_b) alive_[v] = 0;
                f.phase = 2;
                stack.emplace_back();
                continue;
            }
            // phase 2: opponent keeps its attractor plus whatever it won below
            for (int v : f.removed_b) alive_[v] = 1;
            Player opp = opponent(f.sigma);
            auto& w_opp = res[static_cast<int>(opp)];
            std::vector<int> merged;
            merged.reserve(w_opp.size() + f.removed_b.size());
            std::merge(w_opp.begin(), w_opp.end(), f.removed_b.begin(), f.removed_b.end(),
                       std::back_inserter(merged));
            w_opp = std::move(merged);
            stack.pop_back();
        }

        SolveResult out;
        out.regions.winner_of.assign(a_.size(), Player::I);
        for (int v : res[1]) out.regions.winner_of[v] = Player::II;
        // legal filler outside the winning regions
        for (int v = 0; v < a_.size(); ++v) {
            int p = static_cast<int>(a_.owners[v]);
            if (strat_[p][v] < 0) strat_[p][v] = a_.out[v][0];
        }
        out.strategy_i = {Player::I, std::move(strat_[0])};
        out.strategy_ii = {Player::II, std::move(strat_[1])};
        return out;
    }

private:
    int min_color() const {
        int m = -1;
        for (int v = 0; v < a_.size(); ++v)
            if (alive_[v] && (m < 0 || a_.colors[v] < m)) m = a_.colors[v];
        return m;
    }

    // Attractor of `targets` for player p within the live subgame.
    // Records a move for every p-owned vertex attracted strictly outside
    // the target set. Returns the attracted set in ascending order.
    std::vector<int> attract(Player p, const std::vector<int>& targets) {
        std::vector<int> result = targets;
        std::vector<int> queue = targets;
        std::vector<int> touched;
        for (int v : targets) mark_[v] = 1;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int u = queue[qi];
            for (int w : a_.in[u]) {
                if (!alive_[w] || mark_[w]) continue;
                if (a_.owners[w] == p) {
                    // the move must enter the set as it was when w got
                    // attracted, so pick before marking w itself
                    for (int x : a_.out[w]) {
                        if (alive_[x] && mark_[x]) {
                            strat_[static_cast<int>(p)][w] = x;
                            break;
                        }
                    }
                    mark_[w] = 1;
                    result.push_back(w);
                    queue.push_back(w);
                } else {
                    if (cnt_[w] == 0) {
                        touched.push_back(w);
                        for (int x : a_.out[w])
                            if (alive_[x]) ++cnt_[w];
                    }
                    if (--cnt_[w] == 0) {
                        mark_[w] = 1;
                        result.push_back(w);
                        queue.push_back(w);
                    }
                }
            }
        }
        for (int v : result) mark_[v] = 0;
        for (int v : touched) cnt_[v] = 0;
        std::sort(result.begin(), result.end());
        return result;
    }

    const ParityArena& a_;
    std::vector<char> alive_;
    std::array<std::vector<int>, 2> strat_;
    std::vector<char> mark_;
    std::vector<int> cnt_;
};

}  // namespace

SolveResult solve(const ParityArena& arena) { return Zielonka(arena).run(); }

}  // namespace gsynt::parity
