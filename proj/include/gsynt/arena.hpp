#pragma once

#include <string>
#include <vector>

#include "gsynt/common.hpp"
#include "gsynt/graph.hpp"

namespace gsynt::parity {

enum class Player : std::uint8_t { I = 0, II = 1 };

inline Player opponent(Player p) { return p == Player::I ? Player::II : Player::I; }
inline const char* player_name(Player p) { return p == Player::I ? "I" : "II"; }

/// Whether minimal color `c` occurring infinitely often is a win for `p`.
/// Player I wins exactly the plays whose minimal recurring color is even.
inline bool color_favors(int c, Player p) {
    return (c % 2 == 0) == (p == Player::I);
}

/// A finite two-player parity arena. Vertices are kept in lexicographic
/// id order; every vertex has an owner, a color in [0, color_count) and
/// out-degree at least one.
struct ParityArena {
    std::vector<std::string> ids;
    std::vector<Player> owners;
    std::vector<int> colors;
    std::vector<std::vector<int>> out;  // ascending
    std::vector<std::vector<int>> in;   // ascending
    int color_count = 0;

    int size() const { return static_cast<int>(ids.size()); }
    int index_of(const std::string& id) const;
    bool has_edge(int a, int b) const;
    std::vector<std::pair<int, int>> edge_list() const;
    Graph graph() const;  // owner/color-free view
    int max_out_degree() const;

    bool operator==(const ParityArena&) const = default;
};

class ArenaBuilder {
public:
    ArenaBuilder& vertex(const std::string& id, Player owner, int color);
    ArenaBuilder& edge(const std::string& a, const std::string& b);

    /// Checks all arena invariants: ids well-formed and unique, edge
    /// endpoints declared, every vertex of out-degree >= 1.
    ParityArena build() const;

private:
    struct V {
        std::string id;
        Player owner;
        int color;
    };
    std::vector<V> vertices_;
    std::vector<std::pair<std::string, std::string>> edges_;
};

ParityArena parse_arena(std::string_view text);
std::string emit_arena(const ParityArena& a);

}  // namespace gsynt::parity
