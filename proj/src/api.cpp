#include "kritwahl/api.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace kritwahl::api {
namespace {

namespace fs = std::filesystem;

bool valid_id(std::string_view id) {
  if (id.empty() || id.size() > 128) return false;
  for (char c : id) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
              c == '-' || c == '_';
    if (!ok) return false;
  }
  return true;
}

std::vector<std::string> split_path(std::string_view path) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= path.size()) {
    std::size_t end = path.find('/', start);
    if (end == std::string_view::npos) end = path.size();
    if (end > start) out.emplace_back(path.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

Json parse_body(const std::string& body) {
  if (body.empty()) return Json::object();
  Json j = parse_json(body);
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "request body must be a JSON object");
  return j;
}

Json labelled_comparisons(const Session& s, const std::vector<Comparison>& cs) {
  Json out = Json::array();
  for (const auto& c : cs) {
    out.push_back({{"winner", c.winner},
                   {"loser", c.loser},
                   {"winner_label", s.criteria().label(c.winner)},
                   {"loser_label", s.criteria().label(c.loser)}});
  }
  return out;
}

Json progress(const Session& s) {
  return {{"decided", s.relation().decided_count()},
          {"total", s.relation().pair_count()},
          {"entered", s.log().entered_count()},
          {"implied", s.log().implied_count()}};
}

Response error_response(const Error& e) {
  Json detail = nullptr;
  if (const auto* c = dynamic_cast<const ContradictionError*>(&e)) {
    detail = Json{{"path", c->path()}};
  }
  return {status_for(e.code()), error_body(to_string(e.code()), e.what(), detail)};
}

}  // namespace

SessionStore::SessionStore(fs::path data_dir) : dir_(std::move(data_dir)) {
  fs::create_directories(dir_);
  for (const auto& entry : fs::directory_iterator(dir_)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".json") continue;
    try {
      std::ifstream in(entry.path());
      std::stringstream buffer;
      buffer << in.rdbuf();
      Session s = Session::import_state(buffer.str());
      if (!valid_id(s.id())) throw Error(ErrorCode::ParseError, "invalid session id");
      std::string id = s.id();
      slots_.emplace(id, std::make_shared<Slot>(std::move(s)));
    } catch (const std::exception& e) {
      load_errors_.push_back(entry.path().filename().string() + ": " + e.what());
    }
  }
}

std::size_t SessionStore::size() const {
  std::shared_lock lock(map_mutex_);
  return slots_.size();
}

void SessionStore::insert(Session session) {
  if (!valid_id(session.id())) {
    throw Error(ErrorCode::InvalidArgument, "session id must be 1-128 characters of [A-Za-z0-9_-]");
  }
  std::unique_lock lock(map_mutex_);
  if (slots_.count(session.id()) != 0) {
    throw Error(ErrorCode::SessionExists, "session '" + session.id() + "' already exists");
  }
  persist(session);
  std::string id = session.id();
  slots_.emplace(std::move(id), std::make_shared<Slot>(std::move(session)));
}

std::shared_ptr<SessionStore::Slot> SessionStore::find(const std::string& id) const {
  std::shared_lock lock(map_mutex_);
  auto it = slots_.find(id);
  if (it == slots_.end()) throw Error(ErrorCode::NotFound, "no session '" + id + "'");
  return it->second;
}

void SessionStore::persist(const Session& session) const {
  fs::path target = dir_ / (session.id() + ".json");
  fs::path tmp = dir_ / (session.id() + ".json.tmp");
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << session.export_state().dump(2) << '\n';
    out.flush();
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
  }
  fs::rename(tmp, target);
}

int status_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotFound:
      return 404;
    case ErrorCode::Contradiction:
    case ErrorCode::Incomplete:
    case ErrorCode::EmptyLog:
    case ErrorCode::StalePair:
    case ErrorCode::NoScores:
    case ErrorCode::SessionExists:
      return 409;
    case ErrorCode::ParseError:
      return 400;
    case ErrorCode::DegenerateInstance:
    case ErrorCode::DuplicateLabel:
    case ErrorCode::InvalidLabel:
    case ErrorCode::IndexOutOfRange:
    case ErrorCode::SelfComparison:
    case ErrorCode::ShapeMismatch:
    case ErrorCode::ScoreOutOfRange:
    case ErrorCode::SchemaVersionUnsupported:
    case ErrorCode::InvalidArgument:
    case ErrorCode::Overflow:
      return 422;
  }
  return 500;
}

Json error_body(std::string_view code, std::string_view message, const Json& detail) {
  Json err{{"code", code}, {"message", message}};
  if (!detail.is_null()) err["detail"] = detail;
  return Json{{"error", std::move(err)}};
}

Json snapshot(const Session& s) {
  Json decided = Json::array();
  for (const auto& e : s.log().entries()) {
    decided.push_back({{"winner", e.comparison.winner},
                       {"loser", e.comparison.loser},
                       {"origin", e.origin == Origin::Entered ? "entered" : "implied"}});
  }
  Json open = Json::array();
  for (const auto& p : s.relation().undecided_pairs()) open.push_back({p.first, p.second});
  return {{"id", s.id()},
          {"labels", s.criteria().labels()},
          {"strategy", to_string(s.strategy())},
          {"status", to_string(s.status())},
          {"decided", std::move(decided)},
          {"open", std::move(open)},
          {"progress", progress(s)},
          {"scale_max", s.scale_max()},
          {"has_scores", s.scores().has_value()}};
}

Json weights_document(const Session& s) {
  auto w = s.weights();
  auto satz = s.satz();
  Json weights = Json::array();
  for (Criterion i = 0; i < w.size(); ++i) {
    Json entry = rational_to_json(w[i]);
    entry["label"] = s.criteria().label(i);
    entry["percent"] = (w[i] * 100).to_fixed(2);
    weights.push_back(std::move(entry));
  }
  Json ladder = Json::array();
  for (const auto& r : satz.ladder) ladder.push_back(rational_to_json(r));
  return {{"weights", std::move(weights)},
          {"ranking", s.relation().ranking()},
          {"satz",
           {{"k", satz.k},
            {"max", rational_to_json(satz.max_weight)},
            {"step", rational_to_json(satz.step)},
            {"ladder", std::move(ladder)},
            {"holds", satz.holds},
            {"violations", satz.violations}}}};
}

Json result_document(const Session& s) {
  auto result = s.result();
  auto sensitivity = s.sensitivity();
  const auto& alts = s.scores()->alternatives();
  auto names = [&](const std::vector<std::size_t>& idx) {
    Json out = Json::array();
    for (auto a : idx) out.push_back(alts[a]);
    return out;
  };
  Json utilities = Json::array();
  for (std::size_t a = 0; a < result.utilities.size(); ++a) {
    Json u = rational_to_json(result.utilities[a]);
    u["alternative"] = alts[a];
    utilities.push_back(std::move(u));
  }
  Json ranking = Json::array();
  for (const auto& r : result.ranking) {
    ranking.push_back({{"alternative", alts[r.alternative]},
                       {"utility", rational_to_json(r.utility)},
                       {"place", r.place},
                       {"tied", r.tied}});
  }
  Json swaps = Json::array();
  for (const auto& sw : sensitivity) {
    Json weights = Json::array();
    for (const auto& w : sw.weights) weights.push_back(rational_to_json(w));
    swaps.push_back({{"position", sw.position},
                     {"upper", s.criteria().label(sw.upper)},
                     {"lower", s.criteria().label(sw.lower)},
                     {"weights", std::move(weights)},
                     {"winners_after", names(sw.winners_after)},
                     {"winner_changed", sw.winner_changed}});
  }
  return {{"utilities", std::move(utilities)},
          {"ranking", std::move(ranking)},
          {"winner", names(result.winners)},
          {"tie", result.winners.size() > 1},
          {"sensitivity", std::move(swaps)}};
}

Response Api::handle(std::string_view method, std::string_view path, const std::string& body) {
  if (path.substr(0, kPrefix.size()) != kPrefix ||
      (path.size() > kPrefix.size() && path[kPrefix.size()] != '/')) {
    return {404, error_body("NotFound", "no route for " + std::string(path))};
  }
  try {
    return dispatch(method, split_path(path.substr(kPrefix.size())), body);
  } catch (const Error& e) {
    return error_response(e);
  } catch (const std::exception& e) {
    return {500, error_body("Internal", e.what())};
  }
}

Response Api::dispatch(std::string_view method, const std::vector<std::string>& seg,
                       const std::string& body) {
  auto method_not_allowed = [&] {
    return Response{405, error_body("MethodNotAllowed", std::string(method) + " not allowed here")};
  };
  if (seg.empty() || seg[0] != "sessions" || seg.size() > 3) {
    return {404, error_body("NotFound", "unknown route")};
  }

  if (seg.size() == 1) {
    if (method != "POST") return method_not_allowed();
    Json req = parse_body(body);
    Strategy strategy = Strategy::Lexicographic;
    if (req.contains("strategy") && !req.at("strategy").is_null()) {
      strategy = parse_strategy(require_string(req, "strategy"));
    }
    std::int64_t scale_max = ScoreTable::kDefaultScaleMax;
    if (req.contains("scale_max") && !req.at("scale_max").is_null()) {
      scale_max = require_integer(req, "scale_max");
    }
    Session s = Session::create(require_string_list(req, "labels"), strategy, scale_max);
    std::string id = s.id();
    store_.insert(std::move(s));
    return {201, {{"id", id}}};
  }

  if (seg.size() == 2 && seg[1] == "import") {
    if (method != "POST") return method_not_allowed();
    Session s = Session::import_state(parse_json(body));
    std::string id = s.id();
    store_.insert(std::move(s));
    return {201, {{"id", id}}};
  }

  const std::string& id = seg[1];
  if (seg.size() == 2) {
    if (method != "GET") return method_not_allowed();
    return {200, store_.read(id, snapshot)};
  }

  const std::string& action = seg[2];
  if (action == "next") {
    if (method != "GET") return method_not_allowed();
    return {200, store_.read(id, [](const Session& s) {
              auto q = s.next_question();
              if (!q) return Json{{"complete", true}};
              return Json{{"complete", false},
                          {"pair", {q->first, q->second}},
                          {"labels", {s.criteria().label(q->first), s.criteria().label(q->second)}},
                          {"progress", progress(s)}};
            })};
  }
  if (action == "answers") {
    if (method != "POST") return method_not_allowed();
    Json req = parse_body(body);
    auto winner = require_integer(req, "winner");
    auto loser = require_integer(req, "loser");
    if (winner < 0 || loser < 0) throw Error(ErrorCode::IndexOutOfRange, "negative criterion index");
    Comparison c{static_cast<Criterion>(winner), static_cast<Criterion>(loser)};
    return {200, store_.mutate(id, [&](Session& s) {
              auto implied = s.answer(c);
              return Json{{"implied", labelled_comparisons(s, implied)},
                          {"status", to_string(s.status())},
                          {"progress", progress(s)}};
            })};
  }
  if (action == "undo") {
    if (method != "POST") return method_not_allowed();
    return {200, store_.mutate(id, [](Session& s) {
              s.undo();
              return snapshot(s);
            })};
  }
  if (action == "weights") {
    if (method != "GET") return method_not_allowed();
    return {200, store_.read(id, weights_document)};
  }
  if (action == "scores") {
    if (method != "PUT") return method_not_allowed();
    Json req = parse_body(body);
    return {200, store_.mutate(id, [&](Session& s) {
              s.set_scores(score_table_from_json(req, s.scale_max()));
              return snapshot(s);
            })};
  }
  if (action == "result") {
    if (method != "GET") return method_not_allowed();
    return {200, store_.read(id, result_document)};
  }
  if (action == "export") {
    if (method != "GET") return method_not_allowed();
    return {200, store_.read(id, [](const Session& s) { return s.export_state(); })};
  }
  return {404, error_body("NotFound", "unknown route")};
}

}  // namespace kritwahl::api
