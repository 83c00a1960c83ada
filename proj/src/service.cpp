#include "chocolate/service.hpp"

#include <chrono>
#include <string_view>

#include "chocolate/errors.hpp"

namespace chocolate {
namespace {

using nlohmann::json;

std::int64_t now_ms() {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::system_clock::now().time_since_epoch())
        .count();
}

json bars_json(const SumGame& game) {
    json bars = json::array();
    for (const Bar& b : game.bars) bars.push_back(to_string(b));
    return bars;
}

SumGame bars_from_json(const json& j) {
    SumGame game;
    for (const auto& b : j) game.bars.push_back(parse_bar(b.get<std::string>()));
    return game;
}

// Rows bottom-up, one character per cell: K poison, B blue, R red.
json cells_json(const Bar& bar) {
    json rows = json::array();
    for (std::uint32_t j = 0; j <= bar.m; ++j) {
        std::string row;
        for (std::uint32_t i = 0; i <= bar.n; ++i) {
            switch (cell_color(bar, i, j)) {
                case CellColor::Black: row += 'K'; break;
                case CellColor::Blue: row += 'B'; break;
                case CellColor::Red: row += 'R'; break;
            }
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace

bool GameSession::terminal() const {
    return state.to_move && legal_sum_moves(state, *state.to_move).empty();
}

std::optional<Player> GameSession::winner() const {
    if (!terminal()) return std::nullopt;
    return opponent(*state.to_move);
}

json to_json(const SumMove& move) {
    return {{"component", move.component}, {"axis", to_string(move.cut.axis)}, {"keep", move.cut.keep}};
}

SumMove move_from_json(const json& j) {
    SumMove move;
    move.component = j.at("component").get<std::size_t>();
    move.cut.axis = parse_axis(j.at("axis").get<std::string>());
    move.cut.keep = j.at("keep").get<std::uint32_t>();
    return move;
}

json evaluation_json(const SumGame& game) {
    const Dyadic total = sum_value(game);
    json components = json::array();
    for (const Bar& b : game.bars) components.push_back(value(b).to_string());
    return {{"value", total.to_string()},
            {"decimal", total.to_double()},
            {"decimal_approximate", true},
            {"outcome", to_string(sum_outcome(game))},
            {"components", components}};
}

json to_json(const AnnotatedMove& m) {
    json j = to_json(m.move);
    j["result"] = m.result.to_string();
    j["result_decimal"] = m.result.to_double();
    j["squares_eaten"] = m.squares;
    return j;
}

json to_json(const GameSession& s) {
    json components = json::array();
    for (std::size_t i = 0; i < s.state.bars.size(); ++i) {
        const Bar& b = s.state.bars[i];
        components.push_back({{"index", i},
                              {"bar", to_string(b)},
                              {"n", b.n},
                              {"m", b.m},
                              {"sign", b.sign},
                              {"value", value(b).to_string()},
                              {"cells", cells_json(b)}});
    }
    json history = json::array();
    for (const auto& [mover, move] : s.history) {
        json h = to_json(move);
        h["mover"] = to_string(mover);
        history.push_back(h);
    }
    const auto winner = s.winner();
    return {{"id", s.id},
            {"initial", bars_json(s.initial)},
            {"bars", bars_json(s.state)},
            {"components", components},
            {"to_move", s.state.to_move ? json(to_string(*s.state.to_move)) : json(nullptr)},
            {"human", s.human ? json(to_string(*s.human)) : json(nullptr)},
            {"history", history},
            {"eval", evaluation_json(s.state)},
            {"terminal", s.terminal()},
            {"winner", winner ? json(to_string(*winner)) : json(nullptr)},
            {"created_ms", s.created_ms},
            {"updated_ms", s.updated_ms}};
}

GameService::GameService(std::optional<std::filesystem::path> journal) : journal_path_(std::move(journal)) {
    if (!journal_path_) return;
    if (std::filesystem::exists(*journal_path_)) replay(*journal_path_);
    journal_.open(*journal_path_, std::ios::app);
    if (!journal_) throw std::runtime_error("cannot open journal " + journal_path_->string());
}

void GameService::append(const json& event) {
    if (!journal_path_) return;
    std::lock_guard lock(journal_mutex_);
    journal_ << event.dump() << '\n';
    journal_.flush();
}

void GameService::replay(const std::filesystem::path& path) {
    std::ifstream in(path);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        json event;
        try {
            event = json::parse(line);
        } catch (const json::parse_error& e) {
            throw std::runtime_error("journal line " + std::to_string(line_no) + ": " + e.what());
        }
        const std::string type = event.at("event");
        const std::string id = event.at("id");
        if (type == "create") {
            auto entry = std::make_shared<Entry>();
            GameSession& s = entry->session;
            s.id = id;
            s.initial = bars_from_json(event.at("bars"));
            s.initial.to_move = parse_player(event.at("first").get<std::string>());
            s.state = s.initial;
            if (!event.at("human").is_null()) s.human = parse_player(event.at("human").get<std::string>());
            s.created_ms = s.updated_ms = event.at("time").get<std::int64_t>();
            sessions_[id] = entry;
            if (id.size() > 1 && id[0] == 'g') next_id_ = std::max<std::uint64_t>(next_id_, std::stoull(id.substr(1)) + 1);
        } else if (type == "move") {
            auto it = sessions_.find(id);
            if (it == sessions_.end()) {
                throw std::runtime_error("journal line " + std::to_string(line_no) + ": unknown session " + id);
            }
            commit_move(*it->second, parse_player(event.at("mover").get<std::string>()), move_from_json(event),
                        event.at("time").get<std::int64_t>(), false);
        } else {
            throw std::runtime_error("journal line " + std::to_string(line_no) + ": unknown event " + type);
        }
    }
}

GameSession GameService::create(SumGame game, std::optional<Player> human, Player first) {
    auto entry = std::make_shared<Entry>();
    GameSession& s = entry->session;
    game.to_move = first;
    s.initial = game;
    s.state = game;
    s.human = human;
    s.created_ms = s.updated_ms = now_ms();
    {
        std::unique_lock lock(sessions_mutex_);
        s.id = "g" + std::to_string(next_id_++);
        sessions_[s.id] = entry;
        append({{"event", "create"},
                {"id", s.id},
                {"bars", bars_json(game)},
                {"first", to_string(first)},
                {"human", human ? json(to_string(*human)) : json(nullptr)},
                {"time", s.created_ms}});
    }
    std::lock_guard lock(entry->mutex);
    return entry->session;
}

std::shared_ptr<GameService::Entry> GameService::find(const std::string& id) const {
    std::shared_lock lock(sessions_mutex_);
    auto it = sessions_.find(id);
    if (it == sessions_.end()) throw SessionNotFound("no game \"" + id + "\"");
    return it->second;
}

GameSession GameService::get(const std::string& id) const {
    auto entry = find(id);
    std::lock_guard lock(entry->mutex);
    return entry->session;
}

std::vector<std::string> GameService::ids() const {
    std::shared_lock lock(sessions_mutex_);
    std::vector<std::string> out;
    for (const auto& [id, entry] : sessions_) out.push_back(id);
    return out;
}

std::vector<AnnotatedMove> GameService::moves(const std::string& id, Player player) const {
    const GameSession s = get(id);
    std::vector<AnnotatedMove> out;
    for (const SumMove& m : legal_sum_moves(s.state, player)) {
        out.push_back({m, value_after(s.state, m), squares_eaten(s.state.bars[m.component], m.cut)});
    }
    return out;
}

GameSession GameService::commit_move(Entry& entry, Player mover, const SumMove& move, std::int64_t when,
                                     bool journal) {
    GameSession& s = entry.session;
    s.state = play(s.state, mover, move);
    s.history.emplace_back(mover, move);
    s.updated_ms = when;
    if (journal) {
        json event = to_json(move);
        event["event"] = "move";
        event["id"] = s.id;
        event["mover"] = to_string(mover);
        event["time"] = when;
        append(event);
    }
    return s;
}

GameSession GameService::apply_move(const std::string& id, const SumMove& move, std::optional<Player> claimed) {
    auto entry = find(id);
    std::lock_guard lock(entry->mutex);
    const GameSession& s = entry->session;
    const Player mover = *s.state.to_move;
    if (claimed && *claimed != mover) {
        throw WrongTurn("it is " + to_string(mover) + "'s turn, not " + to_string(*claimed) + "'s");
    }
    if (s.human && *s.human != mover) {
        throw WrongTurn("it is the engine's turn (" + to_string(mover) + ")");
    }
    return commit_move(*entry, mover, move, now_ms(), true);
}

GameSession GameService::engine_move(const std::string& id) {
    auto entry = find(id);
    std::lock_guard lock(entry->mutex);
    const GameSession& s = entry->session;
    const Player mover = *s.state.to_move;
    if (s.human && *s.human == mover) throw WrongTurn("it is the human's turn (" + to_string(mover) + ")");
    const auto move = best_move(s.state, mover);
    if (!move) throw WrongTurn("game is over: " + to_string(mover) + " has no legal move");

    // The engine must never pick a strictly worse resulting value.
    const Dyadic chosen = value_after(s.state, *move);
    for (const SumMove& alt : legal_sum_moves(s.state, mover)) {
        const Dyadic v = value_after(s.state, alt);
        if (mover == Player::Left ? v > chosen : v < chosen) {
            throw std::logic_error("engine move " + to_string(*move) + " is worse than " + to_string(alt));
        }
    }
    return commit_move(*entry, mover, *move, now_ms(), true);
}

}  // namespace chocolate
