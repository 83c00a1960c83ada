#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "chocolate/solver.hpp"

namespace httplib {
class Server;
}

namespace chocolate {

class SessionNotFound : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

struct GameSession {
    std::string id;
    SumGame initial;
    SumGame state;
    std::optional<Player> human;  // unset: both sides driven through the API
    std::vector<std::pair<Player, SumMove>> history;
    std::int64_t created_ms = 0;
    std::int64_t updated_ms = 0;

    /// True when the side to move has no legal move; that side has lost.
    bool terminal() const;
    std::optional<Player> winner() const;
};

struct AnnotatedMove {
    SumMove move;
    Dyadic result;  // sum value after the move
    std::uint64_t squares = 0;
};

/// Session store behind the HTTP API. Every create and move is appended to a
/// JSON-lines journal before it is acknowledged; constructing a service on an
/// existing journal replays it.
///
/// Mutations are serialized per session; distinct sessions proceed in
/// parallel. Reads return snapshots.
class GameService {
public:
    explicit GameService(std::optional<std::filesystem::path> journal = std::nullopt);

    GameSession create(SumGame game, std::optional<Player> human, Player first);
    GameSession get(const std::string& id) const;
    std::vector<std::string> ids() const;

    std::vector<AnnotatedMove> moves(const std::string& id, Player player) const;

    /// `claimed` is the caller's idea of the mover; WrongTurn if it is not the
    /// side to move, or if it is the engine's turn in a human-vs-engine game.
    GameSession apply_move(const std::string& id, const SumMove& move, std::optional<Player> claimed);

    /// Plays best_move for the side to move. WrongTurn on the human's turn or
    /// in a finished game.
    GameSession engine_move(const std::string& id);

private:
    struct Entry {
        mutable std::mutex mutex;
        GameSession session;
    };

    std::shared_ptr<Entry> find(const std::string& id) const;
    void append(const nlohmann::json& event);
    void replay(const std::filesystem::path& path);
    GameSession commit_move(Entry& entry, Player mover, const SumMove& move, std::int64_t when, bool journal);

    std::optional<std::filesystem::path> journal_path_;
    std::ofstream journal_;
    std::mutex journal_mutex_;

    mutable std::shared_mutex sessions_mutex_;
    std::map<std::string, std::shared_ptr<Entry>> sessions_;
    std::uint64_t next_id_ = 1;
};

nlohmann::json to_json(const SumMove& move);
SumMove move_from_json(const nlohmann::json& j);
nlohmann::json evaluation_json(const SumGame& game);
nlohmann::json to_json(const GameSession& session);
nlohmann::json to_json(const AnnotatedMove& move);

/// Installs the REST endpoints on `server`.
void register_routes(httplib::Server& server, GameService& service);

/// Blocking HTTP server. Returns false if the address cannot be bound.
bool serve(GameService& service, const std::string& host, int port);

}  // namespace chocolate
