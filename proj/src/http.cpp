#include <httplib.h>

#include "chocolate/errors.hpp"
#include "chocolate/service.hpp"

namespace chocolate {
namespace {

using nlohmann::json;

void reply(httplib::Response& res, int status, const json& body) {
    res.status = status;
    res.set_content(body.dump(), "application/json");
}

void reply_error(httplib::Response& res, int status, const std::string& message) {
    reply(res, status, {{"error", message}, {"status", status}});
}

// Maps library exceptions onto status codes.
template <class Fn>
void handle(httplib::Response& res, Fn&& fn) {
    try {
        fn();
    } catch (const SessionNotFound& e) {
        reply_error(res, 404, e.what());
    } catch (const WrongTurn& e) {
        reply_error(res, 409, e.what());
    } catch (const IllegalMove& e) {
        reply_error(res, 422, e.what());
    } catch (const IllegalCut& e) {
        reply_error(res, 422, e.what());
    } catch (const json::exception& e) {
        reply_error(res, 400, std::string("malformed request: ") + e.what());
    } catch (const ParseError& e) {
        reply_error(res, 400, e.what());
    } catch (const OutOfBounds& e) {
        reply_error(res, 400, e.what());
    } catch (const std::invalid_argument& e) {
        reply_error(res, 400, e.what());
    } catch (const std::exception& e) {
        reply_error(res, 500, e.what());
    }
}

json parse_body(const httplib::Request& req) {
    if (req.body.empty()) return json::object();
    json body = json::parse(req.body);
    if (!body.is_object()) throw std::invalid_argument("request body must be a JSON object");
    return body;
}

std::optional<Player> optional_player(const json& body, const char* key) {
    if (!body.contains(key) || body.at(key).is_null()) return std::nullopt;
    return parse_player(body.at(key).get<std::string>());
}

}  // namespace

void register_routes(httplib::Server& server, GameService& service) {
    server.Post("/games", [&service](const httplib::Request& req, httplib::Response& res) {
        handle(res, [&] {
            const json body = parse_body(req);
            SumGame game;
            if (body.contains("bars") && body.contains("rooks")) {
                throw std::invalid_argument("give either \"bars\" or \"rooks\", not both");
            }
            if (body.contains("rooks")) {
                const std::int64_t size = body.value("board_size", std::int64_t{8});
                game = rooks_to_sum(parse_rooks(body.at("rooks").get<std::string>(), size));
            } else if (body.contains("bars")) {
                game = parse_sum(body.at("bars").get<std::string>());
            }
            const Player first = optional_player(body, "first").value_or(Player::Left);
            reply(res, 201, to_json(service.create(game, optional_player(body, "human"), first)));
        });
    });

    server.Get(R"(/games/([^/]+))", [&service](const httplib::Request& req, httplib::Response& res) {
        handle(res, [&] { reply(res, 200, to_json(service.get(req.matches[1]))); });
    });

    server.Get(R"(/games/([^/]+)/eval)", [&service](const httplib::Request& req, httplib::Response& res) {
        handle(res, [&] {
            const GameSession s = service.get(req.matches[1]);
            json body = evaluation_json(s.state);
            body["terminal"] = s.terminal();
            reply(res, 200, body);
        });
    });

    server.Get(R"(/games/([^/]+)/moves)", [&service](const httplib::Request& req, httplib::Response& res) {
        handle(res, [&] {
            const std::string id = req.matches[1];
            const GameSession s = service.get(id);
            const Player player = req.has_param("player") ? parse_player(req.get_param_value("player"))
                                                          : *s.state.to_move;
            json moves = json::array();
            for (const AnnotatedMove& m : service.moves(id, player)) moves.push_back(to_json(m));
            reply(res, 200, {{"id", id}, {"player", to_string(player)}, {"moves", moves}});
        });
    });

    server.Post(R"(/games/([^/]+)/move)", [&service](const httplib::Request& req, httplib::Response& res) {
        handle(res, [&] {
            const json body = parse_body(req);
            const SumMove move = move_from_json(body);
            reply(res, 200, to_json(service.apply_move(req.matches[1], move, optional_player(body, "player"))));
        });
    });

    server.Post(R"(/games/([^/]+)/engine-move)", [&service](const httplib::Request& req, httplib::Response& res) {
        handle(res, [&] {
            const GameSession after = service.engine_move(req.matches[1]);
            json body = to_json(after);
            json played = to_json(after.history.back().second);
            played["mover"] = to_string(after.history.back().first);
            body["engine_move"] = played;
            reply(res, 200, body);
        });
    });
}

bool serve(GameService& service, const std::string& host, int port) {
    httplib::Server server;
    register_routes(server, service);
    return server.listen(host, port);
}

}  // namespace chocolate
