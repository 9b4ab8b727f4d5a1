#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lucky13/json_io.hpp"
#include "lucky13/tracker.hpp"

namespace httplib {
class Server;
}

namespace lucky13 {

struct SessionNotFound : std::out_of_range {
  using std::out_of_range::out_of_range;
};

struct GameSession {
  std::string id;
  GameState state;
  std::int64_t created_ms = 0;
  std::int64_t updated_ms = 0;
};

Json to_json(const GameSession& session);
GameSession session_from_json(const Json& j);

// Thread-safe id -> session map. Updates to one session are serialized;
// distinct sessions proceed in parallel. With a snapshot path, every
// change rewrites the snapshot file atomically.
class SessionStore {
 public:
  explicit SessionStore(std::optional<std::filesystem::path> snapshot = std::nullopt);

  SessionStore(const SessionStore&) = delete;
  SessionStore& operator=(const SessionStore&) = delete;

  GameSession create(GameState state);
  GameSession get(const std::string& id) const;
  std::vector<std::string> ids() const;
  std::size_t size() const;

  // Runs fn on the current state under the session lock. fn returns the
  // next state and a result; the state is stored and the result returned.
  template <class Fn>
  auto update(const std::string& id, Fn&& fn) {
    auto entry = find(id);
    std::unique_lock lock(entry->mutex);
    auto [next, result] = fn(entry->session.state);
    entry->session.state = std::move(next);
    entry->session.updated_ms = now_ms();
    GameSession copy = entry->session;
    lock.unlock();
    persist();
    return std::make_pair(std::move(copy), std::move(result));
  }

  Json to_json() const;
  void save(const std::filesystem::path& path) const;
  // Replaces the contents with the sessions in the file.
  void load(const std::filesystem::path& path);
  void load_json(const Json& j);

  const std::optional<std::filesystem::path>& snapshot_path() const { return snapshot_; }

  static std::int64_t now_ms();

 private:
  struct Entry {
    explicit Entry(GameSession s) : session(std::move(s)) {}
    std::mutex mutex;
    GameSession session;
  };

  std::shared_ptr<Entry> find(const std::string& id) const;
  std::string fresh_id();
  void persist() const;

  std::optional<std::filesystem::path> snapshot_;
  mutable std::shared_mutex map_mutex_;
  std::map<std::string, std::shared_ptr<Entry>> sessions_;
  std::mutex id_mutex_;
  mutable std::mutex file_mutex_;
};

struct ServiceConfig {
  std::string host = "127.0.0.1";
  int port = 8013;
  std::optional<std::filesystem::path> snapshot;
  std::string cors_origin = "*";
};

class ApiServer {
 public:
  explicit ApiServer(ServiceConfig config);
  ~ApiServer();

  ApiServer(const ApiServer&) = delete;
  ApiServer& operator=(const ApiServer&) = delete;

  // Binds to config.port (0 picks a free port) and returns the bound port.
  int bind();
  // Serves until stop(); requires bind().
  void listen();
  void stop();
  bool running() const;

  SessionStore& store() { return store_; }

 private:
  void install_routes();

  ServiceConfig config_;
  SessionStore store_;
  std::unique_ptr<httplib::Server> server_;
};

}  // namespace lucky13
