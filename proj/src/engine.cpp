#include "chocolate/engine.hpp"

#include <algorithm>

#include "chocolate/errors.hpp"

namespace chocolate {

std::string to_string(Player p) { return p == Player::Left ? "L" : "R"; }

Player parse_player(std::string_view text) {
    if (text == "L" || text == "l" || text == "Left" || text == "left") return Player::Left;
    if (text == "R" || text == "r" || text == "Right" || text == "right") return Player::Right;
    throw ParseError("expected player L or R, got \"" + std::string(text) + "\"", 0);
}

std::string to_string(Outcome o) {
    switch (o) {
        case Outcome::L: return "L";
        case Outcome::N: return "N";
        case Outcome::P: return "P";
        case Outcome::R: return "R";
    }
    return "?";
}

std::partial_ordering compare_outcomes(Outcome a, Outcome b) {
    auto rank = [](Outcome o) {
        switch (o) {
            case Outcome::R: return 0;
            case Outcome::N:
            case Outcome::P: return 1;
            case Outcome::L: return 2;
        }
        return 0;
    };
    if (a == b) return std::partial_ordering::equivalent;
    const int ra = rank(a);
    const int rb = rank(b);
    if (ra == rb) return std::partial_ordering::unordered;
    return ra <=> rb;
}

Outcome outcome_of_number(const Dyadic& value) {
    if (value.sign() > 0) return Outcome::L;
    if (value.sign() < 0) return Outcome::R;
    return Outcome::P;
}

std::string to_string(Relation r) {
    switch (r) {
        case Relation::Less: return "Less";
        case Relation::Equal: return "Equal";
        case Relation::Greater: return "Greater";
        case Relation::Confused: return "Confused";
    }
    return "?";
}

std::size_t Engine::NodeKeyHash::operator()(const Node& n) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    auto mix = [&h](std::uint32_t v) { h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2); };
    for (GameTree g : n.left) mix(g.id());
    mix(0xffffffffu);
    for (GameTree g : n.right) mix(g.id());
    return h;
}

Engine::Engine(std::size_t node_budget) : node_budget_(node_budget) {}

GameTree Engine::make(std::vector<GameTree> left, std::vector<GameTree> right) {
    auto canon = [](std::vector<GameTree>& v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    canon(left);
    canon(right);
    Node node{std::move(left), std::move(right)};
    if (auto it = intern_.find(node); it != intern_.end()) return GameTree{it->second};

    if (nodes_.size() >= node_budget_) {
        throw ResourceLimit("node budget of " + std::to_string(node_budget_) + " exhausted");
    }
    const auto id = static_cast<std::uint32_t>(nodes_.size());
    nodes_.push_back(node);
    intern_.emplace(std::move(node), id);
    left_first_wins_.push_back(-1);
    right_first_wins_.push_back(-1);
    value_.emplace_back();
    neg_.emplace_back();
    return GameTree{id};
}

std::span<const GameTree> Engine::options(GameTree g, Player side) const {
    const Node& n = nodes_.at(g.id());
    return side == Player::Left ? std::span<const GameTree>(n.left) : std::span<const GameTree>(n.right);
}

GameTree Engine::neg(GameTree g) {
    if (auto cachedNeg = neg_.at(g.id())) return *cachedNeg;
    std::vector<GameTree> left;
    std::vector<GameTree> right;
    // Copy: recursion may grow nodes_ and invalidate spans.
    const std::vector<GameTree> gl = nodes_[g.id()].left;
    const std::vector<GameTree> gr = nodes_[g.id()].right;
    for (GameTree r : gr) left.push_back(neg(r));
    for (GameTree l : gl) right.push_back(neg(l));
    GameTree result = make(std::move(left), std::move(right));
    neg_[g.id()] = result;
    neg_[result.id()] = g;
    return result;
}

GameTree Engine::sum(GameTree g, GameTree h) {
    if (h < g) std::swap(g, h);
    const std::uint64_t key = pair_key(g, h);
    if (auto it = sum_.find(key); it != sum_.end()) return it->second;

    const Node gn = nodes_[g.id()];
    const Node hn = nodes_[h.id()];
    std::vector<GameTree> left;
    std::vector<GameTree> right;
    left.reserve(gn.left.size() + hn.left.size());
    right.reserve(gn.right.size() + hn.right.size());
    for (GameTree x : gn.left) left.push_back(sum(x, h));
    for (GameTree x : hn.left) left.push_back(sum(g, x));
    for (GameTree x : gn.right) right.push_back(sum(x, h));
    for (GameTree x : hn.right) right.push_back(sum(g, x));
    GameTree result = make(std::move(left), std::move(right));
    sum_.emplace(key, result);
    return result;
}

bool Engine::first_player_wins(GameTree g, Player mover) {
    auto& memo = mover == Player::Left ? left_first_wins_ : right_first_wins_;
    if (memo[g.id()] >= 0) return memo[g.id()] != 0;
    bool wins = false;
    const std::vector<GameTree> opts(options(g, mover).begin(), options(g, mover).end());
    for (GameTree o : opts) {
        if (!first_player_wins(o, opponent(mover))) {
            wins = true;
            break;
        }
    }
    memo[g.id()] = wins ? 1 : 0;
    return wins;
}

Outcome Engine::outcome(GameTree g) {
    const bool left = first_player_wins(g, Player::Left);
    const bool right = first_player_wins(g, Player::Right);
    if (left && right) return Outcome::N;
    if (left) return Outcome::L;
    if (right) return Outcome::R;
    return Outcome::P;
}

Relation Engine::compare(GameTree g, GameTree h) {
    if (g == h) return Relation::Equal;
    switch (outcome(sum(g, neg(h)))) {
        case Outcome::P: return Relation::Equal;
        case Outcome::L: return Relation::Greater;
        case Outcome::R: return Relation::Less;
        case Outcome::N: return Relation::Confused;
    }
    return Relation::Confused;
}

bool Engine::geq(GameTree g, GameTree h) {
    const Relation r = compare(g, h);
    return r == Relation::Greater || r == Relation::Equal;
}

Dyadic Engine::value(GameTree g) {
    if (auto v = value_.at(g.id())) return *v;
    const Node n = nodes_[g.id()];
    std::optional<Dyadic> best_left;
    std::optional<Dyadic> best_right;
    for (GameTree l : n.left) {
        const Dyadic v = value(l);
        if (!best_left || v > *best_left) best_left = v;
    }
    for (GameTree r : n.right) {
        const Dyadic v = value(r);
        if (!best_right || v < *best_right) best_right = v;
    }
    if (best_left && best_right && *best_left >= *best_right) {
        throw NotANumber("node " + std::to_string(g.id()) + " has best Left option " +
                         best_left->to_string() + " >= best Right option " + best_right->to_string());
    }
    const Dyadic v = simplest_between(best_left, best_right);
    value_[g.id()] = v;
    return v;
}

std::vector<GameTree> Engine::dominate(std::span<const GameTree> opts, Player side) {
    const std::vector<GameTree> input(opts.begin(), opts.end());
    std::vector<GameTree> kept;
    for (std::size_t i = 0; i < input.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < input.size() && !dominated; ++j) {
            if (i == j) continue;
            // Does input[j] make input[i] redundant for this side?
            const Relation r = compare(input[j], input[i]);
            const Relation better = side == Player::Left ? Relation::Greater : Relation::Less;
            if (r == better) dominated = true;
            // Ties: the earlier option survives.
            if (r == Relation::Equal && j < i) dominated = true;
        }
        if (!dominated) kept.push_back(input[i]);
    }
    return kept;
}

bool Engine::f_loss_holds(GameTree g) {
    const Node n = nodes_[g.id()];
    for (GameTree gl : n.left) {
        for (GameTree gr : n.right) {
            bool ok = false;
            const std::vector<GameTree> grl(left_options(gr).begin(), left_options(gr).end());
            for (GameTree x : grl) {
                if (geq(x, gl)) {
                    ok = true;
                    break;
                }
            }
            if (!ok) {
                const std::vector<GameTree> glr(right_options(gl).begin(), right_options(gl).end());
                for (GameTree x : glr) {
                    if (geq(gr, x)) {
                        ok = true;
                        break;
                    }
                }
            }
            if (!ok) return false;
        }
    }
    return true;
}

bool Engine::iso(GameTree g, GameTree h) {
    if (g.id() == h.id()) return true;
    const std::uint64_t key = pair_key(std::min(g, h), std::max(g, h));
    if (auto it = iso_.find(key); it != iso_.end()) return it->second;

    auto matches = [this](std::span<const GameTree> a, std::span<const GameTree> b) {
        if (a.size() != b.size()) return false;
        std::vector<bool> used(b.size(), false);
        for (GameTree x : a) {
            bool found = false;
            for (std::size_t j = 0; j < b.size(); ++j) {
                if (!used[j] && iso(x, b[j])) {
                    used[j] = true;
                    found = true;
                    break;
                }
            }
            if (!found) return false;
        }
        return true;
    };
    const Node gn = nodes_[g.id()];
    const Node hn = nodes_[h.id()];
    const bool result = matches(gn.left, hn.left) && matches(gn.right, hn.right);
    iso_.emplace(key, result);
    return result;
}

std::optional<GameTree> Engine::cached(std::uint64_t key) const {
    if (auto it = external_.find(key); it != external_.end()) return it->second;
    return std::nullopt;
}

void Engine::remember(std::uint64_t key, GameTree g) { external_.insert_or_assign(key, g); }

}  // namespace chocolate
