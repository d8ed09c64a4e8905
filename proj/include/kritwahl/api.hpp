#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

#include "kritwahl/codec.hpp"
#include "kritwahl/error.hpp"
#include "kritwahl/session.hpp"

namespace kritwahl::api {

inline constexpr std::string_view kPrefix = "/api/v1";

/// Sessions kept in memory and mirrored to one JSON document per session
/// in the data directory. A mutation is applied to a copy, written to disk
/// and only then published, so the file always reflects the last
/// successful response.
class SessionStore {
 public:
  explicit SessionStore(std::filesystem::path data_dir);

  const std::filesystem::path& data_dir() const noexcept { return dir_; }

  /// Files in the data directory that failed to load, with the reason.
  const std::vector<std::string>& load_errors() const noexcept { return load_errors_; }

  std::size_t size() const;
  void insert(Session session);

  template <class F>
  auto read(const std::string& id, F&& f) const {
    auto slot = find(id);
    std::shared_lock lock(slot->mutex);
    return f(static_cast<const Session&>(slot->session));
  }

  template <class F>
  auto mutate(const std::string& id, F&& f) {
    auto slot = find(id);
    std::unique_lock lock(slot->mutex);
    Session draft = slot->session;
    if constexpr (std::is_void_v<decltype(f(draft))>) {
      f(draft);
      persist(draft);
      slot->session = std::move(draft);
    } else {
      auto out = f(draft);
      persist(draft);
      slot->session = std::move(draft);
      return out;
    }
  }

 private:
  struct Slot {
    explicit Slot(Session s) : session(std::move(s)) {}
    mutable std::shared_mutex mutex;
    Session session;
  };

  std::shared_ptr<Slot> find(const std::string& id) const;
  void persist(const Session& session) const;

  std::filesystem::path dir_;
  mutable std::shared_mutex map_mutex_;
  std::map<std::string, std::shared_ptr<Slot>> slots_;
  std::vector<std::string> load_errors_;
};

struct Response {
  int status = 200;
  Json body;
};

/// HTTP status used for a domain error code.
int status_for(ErrorCode code);

/// {"error": {"code", "message", "detail"?}}
Json error_body(std::string_view code, std::string_view message, const Json& detail = nullptr);

/// Transport-independent request router for every /api/v1 route.
class Api {
 public:
  explicit Api(std::filesystem::path data_dir) : store_(std::move(data_dir)) {}

  Response handle(std::string_view method, std::string_view path, const std::string& body);

  SessionStore& store() noexcept { return store_; }

 private:
  Response dispatch(std::string_view method, const std::vector<std::string>& segments,
                    const std::string& body);

  SessionStore store_;
};

/// Snapshot document returned by GET /sessions/{id} and POST undo.
Json snapshot(const Session& s);
Json weights_document(const Session& s);
Json result_document(const Session& s);

}  // namespace kritwahl::api
