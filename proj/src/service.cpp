#include "lucky13/service.hpp"

#include <httplib.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>

#include "lucky13/error.hpp"
#include "lucky13/replay.hpp"
#include "lucky13/strategy.hpp"

namespace lucky13 {

namespace {

ReplayFile history_of(const GameState& state) {
  ReplayFile r;
  r.profile = state.profile();
  r.bet = state.bet();
  r.reveals = state.reveals();
  for (const auto& o : state.offers()) r.offers.push_back({o.after_reveal, o.amount});
  return r;
}

std::int64_t as_millis(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer()) {
    throw InvalidInput(std::string("session needs integer '") + key + "'");
  }
  return j.at(key).get<std::int64_t>();
}

}  // namespace

Json to_json(const GameSession& session) {
  Json j = to_json(history_of(session.state));
  j["id"] = session.id;
  j["created_ms"] = session.created_ms;
  j["updated_ms"] = session.updated_ms;
  return j;
}

GameSession session_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("id") || !j.at("id").is_string()) {
    throw InvalidInput("session needs a string 'id'");
  }
  GameSession s{j.at("id").get<std::string>(), run_replay(replay_from_json(j)).state,
                as_millis(j, "created_ms"), as_millis(j, "updated_ms")};
  return s;
}

SessionStore::SessionStore(std::optional<std::filesystem::path> snapshot) : snapshot_(std::move(snapshot)) {}

std::int64_t SessionStore::now_ms() {
  using namespace std::chrono;
  return duration_cast<milliseconds>(system_clock::now().time_since_epoch()).count();
}

std::string SessionStore::fresh_id() {
  static thread_local std::mt19937_64 engine{std::random_device{}()};
  std::lock_guard id_lock(id_mutex_);
  for (;;) {
    char buf[33];
    std::snprintf(buf, sizeof buf, "%016llx%016llx", static_cast<unsigned long long>(engine()),
                  static_cast<unsigned long long>(engine()));
    std::shared_lock lock(map_mutex_);
    if (!sessions_.contains(buf)) return buf;
  }
}

GameSession SessionStore::create(GameState state) {
  const auto now = now_ms();
  auto entry = std::make_shared<Entry>(GameSession{fresh_id(), std::move(state), now, now});
  GameSession copy = entry->session;
  {
    std::unique_lock lock(map_mutex_);
    sessions_.emplace(copy.id, std::move(entry));
  }
  persist();
  return copy;
}

std::shared_ptr<SessionStore::Entry> SessionStore::find(const std::string& id) const {
  std::shared_lock lock(map_mutex_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) throw SessionNotFound("unknown game id '" + id + "'");
  return it->second;
}

GameSession SessionStore::get(const std::string& id) const {
  auto entry = find(id);
  std::lock_guard lock(entry->mutex);
  return entry->session;
}

std::vector<std::string> SessionStore::ids() const {
  std::shared_lock lock(map_mutex_);
  std::vector<std::string> out;
  for (const auto& [id, entry] : sessions_) out.push_back(id);
  return out;
}

std::size_t SessionStore::size() const {
  std::shared_lock lock(map_mutex_);
  return sessions_.size();
}

Json SessionStore::to_json() const {
  std::vector<std::shared_ptr<Entry>> entries;
  {
    std::shared_lock lock(map_mutex_);
    for (const auto& [id, entry] : sessions_) entries.push_back(entry);
  }
  Json sessions = Json::array();
  for (const auto& entry : entries) {
    std::lock_guard lock(entry->mutex);
    sessions.push_back(lucky13::to_json(entry->session));
  }
  return {{"sessions", sessions}};
}

void SessionStore::save(const std::filesystem::path& path) const {
  std::lock_guard file_lock(file_mutex_);
  const auto text = to_json().dump(2);
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write snapshot " + tmp.string());
    out << text << '\n';
    if (!out.flush()) throw std::runtime_error("cannot write snapshot " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

void SessionStore::load_json(const Json& j) {
  if (!j.is_object() || !j.contains("sessions") || !j.at("sessions").is_array()) {
    throw InvalidInput("snapshot needs a 'sessions' array");
  }
  std::map<std::string, std::shared_ptr<Entry>> loaded;
  for (const auto& item : j.at("sessions")) {
    auto entry = std::make_shared<Entry>(session_from_json(item));
    const auto id = entry->session.id;
    if (!loaded.emplace(id, std::move(entry)).second) throw InvalidInput("duplicate session id '" + id + "'");
  }
  std::unique_lock lock(map_mutex_);
  sessions_ = std::move(loaded);
}

void SessionStore::load(const std::filesystem::path& path) { load_json(parse_json_file(path)); }

void SessionStore::persist() const {
  if (snapshot_) save(*snapshot_);
}

namespace {

constexpr const char* kJson = "application/json";

void send(httplib::Response& res, int status, const Json& body) {
  res.status = status;
  res.set_content(body.dump(), kJson);
}

void send_error(httplib::Response& res, int status, const std::string& message) {
  send(res, status, Json{{"error", message}});
}

Json parse_body(const httplib::Request& req) {
  if (req.body.empty()) throw InvalidInput("request body is empty");
  try {
    return Json::parse(req.body);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

using Handler = std::function<void(const httplib::Request&, httplib::Response&)>;

Handler guarded(Handler inner) {
  return [inner = std::move(inner)](const httplib::Request& req, httplib::Response& res) {
    try {
      inner(req, res);
    } catch (const SessionNotFound& e) {
      send_error(res, 404, e.what());
    } catch (const StateConflict& e) {
      send_error(res, 409, e.what());
    } catch (const InvalidInput& e) {
      send_error(res, 400, e.what());
    } catch (const Json::exception& e) {
      send_error(res, 400, e.what());
    } catch (const std::exception& e) {
      send_error(res, 500, e.what());
    }
  };
}

Json session_view(const GameSession& session) {
  const auto& state = session.state;
  Json reveals = Json::array();
  for (const auto& r : state.reveals()) reveals.push_back(to_json(r));
  Json offers = Json::array();
  for (const auto& o : state.offers()) offers.push_back(to_json(o));
  Json trajectory = Json::array();
  for (const auto& p : state.trajectory()) trajectory.push_back(to_json(p));
  return {{"id", session.id},
          {"created_ms", session.created_ms},
          {"updated_ms", session.updated_ms},
          {"profile", to_json(state.profile())},
          {"bet", to_json(state.bet())},
          {"reveals", reveals},
          {"offers", offers},
          {"complete", state.is_complete()},
          {"current", to_json(state.current_point())},
          {"trajectory", trajectory}};
}

Json advise_request(const Json& body) {
  if (!body.is_object()) throw InvalidInput("request body must be a JSON object");
  const Json& profile_j = body.contains("profile") ? body.at("profile") : body;
  const auto profile = profile_from_json(profile_j);
  std::string utility_name = "winprob";
  if (body.contains("utility")) {
    if (!body.at("utility").is_string()) throw InvalidInput("'utility' must be a string");
    utility_name = body.at("utility").get<std::string>();
  }
  const auto utility = parse_utility(utility_name);
  if (!utility) throw InvalidInput("unknown utility '" + utility_name + "'");
  bool joint = false;
  if (body.contains("joint")) {
    if (!body.at("joint").is_boolean()) throw InvalidInput("'joint' must be a boolean");
    joint = body.at("joint").get<bool>();
  }
  Json out = to_json(advise(profile, *utility, joint));
  out["utility"] = utility_name;
  out["joint"] = joint;
  return out;
}

}  // namespace

ApiServer::ApiServer(ServiceConfig config)
    : config_(std::move(config)), store_(config_.snapshot), server_(std::make_unique<httplib::Server>()) {
  if (config_.snapshot && std::filesystem::exists(*config_.snapshot)) store_.load(*config_.snapshot);
  install_routes();
}

ApiServer::~ApiServer() { stop(); }

void ApiServer::install_routes() {
  auto& s = *server_;
  const auto origin = config_.cors_origin;
  s.set_default_headers({{"Access-Control-Allow-Origin", origin}});

  s.Options(R"(.*)", [](const httplib::Request&, httplib::Response& res) {
    res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
    res.status = 204;
  });

  s.Post("/advise", guarded([](const httplib::Request& req, httplib::Response& res) {
           send(res, 200, advise_request(parse_body(req)));
         }));

  s.Post("/games", guarded([this](const httplib::Request& req, httplib::Response& res) {
           const auto body = parse_body(req);
           if (!body.is_object() || !body.contains("profile") || !body.contains("bet")) {
             throw InvalidInput("game needs 'profile' and 'bet'");
           }
           auto state = GameState::new_game(profile_from_json(body.at("profile")), bet_from_json(body.at("bet")));
           send(res, 201, session_view(store_.create(std::move(state))));
         }));

  s.Get(R"(/games/([^/]+))", guarded([this](const httplib::Request& req, httplib::Response& res) {
          send(res, 200, session_view(store_.get(req.matches[1])));
        }));

  s.Post(R"(/games/([^/]+)/reveals)", guarded([this](const httplib::Request& req, httplib::Response& res) {
           const auto reveal = reveal_from_json(parse_body(req));
           auto [session, point] = store_.update(req.matches[1], [&](const GameState& state) {
             auto next = state.reveal(reveal.question, reveal.correct);
             auto p = next.current_point();
             return std::make_pair(std::move(next), p);
           });
           send(res, 200, to_json(point));
         }));

  s.Post(R"(/games/([^/]+)/offers)", guarded([this](const httplib::Request& req, httplib::Response& res) {
           const auto body = parse_body(req);
           if (!body.is_object() || !body.contains("amount") || !body.at("amount").is_number()) {
             throw InvalidInput("offer needs a numeric 'amount'");
           }
           const double amount = body.at("amount").get<double>();
           auto [session, evaluation] = store_.update(req.matches[1], [&](const GameState& state) {
             auto outcome = state.evaluate_offer(amount);
             return std::make_pair(std::move(outcome.state), outcome.evaluation);
           });
           send(res, 200, to_json(evaluation));
         }));

  s.Get(R"(/tables/([^/]+))", guarded([](const httplib::Request& req, httplib::Response& res) {
          const std::string model = req.matches[1];
          if (model != "two" && model != "three") {
            send_error(res, 404, "unknown table model '" + model + "'");
            return;
          }
          const auto name = req.has_param("utility") ? req.get_param_value("utility") : std::string("both");
          const auto utility = parse_table_utility(name);
          if (!utility) throw InvalidInput("unknown utility '" + name + "'");
          const auto rows = model == "two" ? strategy_table_two_category() : strategy_table_three_category();
          send(res, 200, table_to_json(rows, *utility));
        }));

  s.set_error_handler([](const httplib::Request&, httplib::Response& res) {
    if (res.body.empty()) send_error(res, res.status, res.status == 404 ? "not found" : "request failed");
  });
}

int ApiServer::bind() {
  if (config_.port == 0) {
    const int port = server_->bind_to_any_port(config_.host);
    if (port < 0) throw std::runtime_error("cannot bind " + config_.host);
    config_.port = port;
    return port;
  }
  if (!server_->bind_to_port(config_.host, config_.port)) {
    throw std::runtime_error("cannot bind " + config_.host + ":" + std::to_string(config_.port));
  }
  return config_.port;
}

void ApiServer::listen() {
  if (!server_->listen_after_bind()) throw std::runtime_error("server stopped with an error");
}

void ApiServer::stop() {
  if (server_) server_->stop();
}

bool ApiServer::running() const { return server_->is_running(); }

}  // namespace lucky13
