#include "kritwahl/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "kritwahl/api.hpp"
#include "kritwahl/server.hpp"
#include "kritwahl/session.hpp"

namespace kritwahl::cli {
namespace {

using Row = std::vector<std::string>;

// Left-aligned columns, each padded to its widest cell plus two spaces.
void print_table(std::ostream& out, const Row& header, const std::vector<Row>& rows) {
  std::vector<std::size_t> width(header.size(), 0);
  auto measure = [&](const Row& r) {
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
  };
  measure(header);
  for (const auto& r : rows) measure(r);
  auto emit = [&](const Row& r) {
    std::string line;
    for (std::size_t c = 0; c < r.size(); ++c) {
      line += r[c];
      if (c + 1 < r.size()) line += std::string(width[c] - r[c].size() + 2, ' ');
    }
    out << line << '\n';
  };
  emit(header);
  for (const auto& r : rows) emit(r);
}

std::string read_file(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path);
  if (!file) throw Error(ErrorCode::InvalidArgument, "cannot read '" + path + "'");
  std::stringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::trunc);
  file << text;
  if (!file) throw Error(ErrorCode::InvalidArgument, "cannot write '" + path + "'");
}

std::string document_text(const Session& s) { return s.export_state().dump(2) + "\n"; }

Session load_session(const std::string& path, std::istream& in) {
  return Session::import_state(read_file(path, in));
}

std::vector<std::string> split_labels(const std::string& csv) {
  std::vector<std::string> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  if (!csv.empty() && csv.back() == ',') out.emplace_back();
  return out;
}

std::string percent(const Rational& w) { return (w * 100).to_fixed(2) + "%"; }

void print_weights(std::ostream& out, const Session& s) {
  auto w = s.weights();
  std::vector<Row> rows;
  for (Criterion i = 0; i < w.size(); ++i) {
    rows.push_back({s.criteria().label(i), w[i].to_string(), w[i].to_decimal(15), percent(w[i])});
  }
  print_table(out, {"criterion", "weight", "decimal", "percent"}, rows);
  auto satz = s.satz();
  out << "max=" << satz.max_weight << "  step=" << satz.step
      << "  ladder=" << (satz.holds ? "holds" : "VIOLATED") << '\n';
}

std::string comparison_text(const Session& s, const Comparison& c) {
  return s.criteria().label(c.winner) + " ≻ " + s.criteria().label(c.loser);
}

int cmd_new(const std::string& criteria, const std::string& out_path, const std::string& strategy,
            std::int64_t scale_max, std::ostream& out) {
  Session s = Session::create(split_labels(criteria), parse_strategy(strategy), scale_max);
  write_file(out_path, document_text(s));
  out << "created " << out_path << ": " << s.criteria().size() << " criteria, "
      << s.relation().pair_count() << " pairs to compare\n";
  return 0;
}

int cmd_ask(const std::string& path, std::istream& in, std::ostream& out, std::ostream& err) {
  Session s = load_session(path, in);
  std::string line;
  while (auto q = s.next_question()) {
    const auto& a = s.criteria().label(q->first);
    const auto& b = s.criteria().label(q->second);
    out << "[" << s.relation().decided_count() << "/" << s.relation().pair_count()
        << "] Which is more important: " << a << " or " << b << "? (1=" << a << ", 2=" << b
        << ", u=undo, q=quit) " << std::flush;
    if (!std::getline(in, line)) {
      out << '\n';
      auto open = s.relation().pair_count() - s.relation().decided_count();
      err << "Incomplete: " << open << (open == 1 ? " pair" : " pairs")
          << " undecided (progress saved)\n";
      return 1;
    }
    auto trimmed = line;
    trimmed.erase(0, trimmed.find_first_not_of(" \t\r"));
    trimmed.erase(trimmed.find_last_not_of(" \t\r") + 1);
    if (trimmed == "q") {
      out << "progress saved to " << path << '\n';
      return 0;
    }
    if (trimmed == "u") {
      try {
        s.undo();
        write_file(path, document_text(s));
        out << "undone\n";
      } catch (const Error& e) {
        out << "nothing to undo\n";
      }
      continue;
    }
    Criterion winner;
    if (trimmed == "1" || trimmed == a) {
      winner = q->first;
    } else if (trimmed == "2" || trimmed == b) {
      winner = q->second;
    } else {
      out << "please answer 1, 2, u or q\n";
      continue;
    }
    auto implied = s.answer(*q, winner);
    write_file(path, document_text(s));
    for (const auto& c : implied) out << "  also inferred: " << comparison_text(s, c) << '\n';
  }
  out << "all " << s.relation().pair_count() << " pairs decided ("
      << s.log().entered_count() << " answered, " << s.log().implied_count() << " inferred)\n";
  print_weights(out, s);
  return 0;
}

int cmd_weights(const std::string& path, std::istream& in, std::ostream& out) {
  Session s = load_session(path, in);
  print_weights(out, s);
  return 0;
}

int cmd_verify(std::size_t k_min, std::size_t k_max, std::size_t samples, std::uint64_t seed,
               std::ostream& out) {
  constexpr std::size_t kEnumerateUpTo = 6;
  std::mt19937_64 rng(seed);
  std::vector<Row> rows;
  bool ok = true;
  for (std::size_t k = k_min; k <= k_max; ++k) {
    auto report = theorem_ladder(k);
    std::string ladder;
    for (const auto& r : report.ladder) ladder += (ladder.empty() ? "" : " ") + r.to_string();

    std::vector<Criterion> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::size_t checked = 0;
    std::size_t passed = 0;
    auto check = [&] {
      ++checked;
      auto r = verify_satz(ComparisonMatrix::from_relation(relation_from_order(order)));
      passed += r.holds ? 1 : 0;
    };
    bool enumerate = k <= kEnumerateUpTo;
    if (enumerate) {
      do check();
      while (std::next_permutation(order.begin(), order.end()));
    } else {
      for (std::size_t n = 0; n < samples; ++n) {
        std::shuffle(order.begin(), order.end(), rng);
        check();
      }
    }
    bool row_ok = passed == checked;
    ok = ok && row_ok;
    rows.push_back({std::to_string(k), report.max_weight.to_string(), report.step.to_string(),
                    ladder,
                    std::to_string(passed) + "/" + std::to_string(checked) +
                        (enumerate ? " enumerated" : " sampled"),
                    row_ok ? "ok" : "FAIL"});
  }
  print_table(out, {"k", "max", "step", "ladder", "orders", "result"}, rows);
  return ok ? 0 : 1;
}

int cmd_evaluate(const std::string& session_path, const std::string& scores_path,
                 std::istream& in, std::ostream& out) {
  Session s = load_session(session_path, in);
  s.set_scores(score_table_from_json(parse_json(read_file(scores_path, in)), s.scale_max()));
  auto result = s.result();
  const auto& alts = s.scores()->alternatives();
  std::vector<Row> rows;
  for (const auto& r : result.ranking) {
    rows.push_back({std::to_string(r.place) + (r.tied ? "=" : ""), alts[r.alternative],
                    r.utility.to_string(), r.utility.to_decimal(15)});
  }
  print_table(out, {"place", "alternative", "utility", "decimal"}, rows);
  auto join = [&](const std::vector<std::size_t>& idx) {
    std::string text;
    for (auto a : idx) text += (text.empty() ? "" : ", ") + alts[a];
    return text;
  };
  out << (result.winners.size() > 1 ? "tie: " : "winner: ") << join(result.winners) << "\n\n";

  std::vector<Row> swaps;
  for (const auto& sw : s.sensitivity()) {
    swaps.push_back({s.criteria().label(sw.upper) + " <-> " + s.criteria().label(sw.lower),
                     join(sw.winners_after), sw.winner_changed ? "yes" : "no"});
  }
  print_table(out, {"swap", "winner after", "changed"}, swaps);
  return 0;
}

int cmd_export(const std::string& path, const std::string& out_path, std::istream& in,
               std::ostream& out) {
  Session s = load_session(path, in);
  if (out_path.empty()) {
    out << document_text(s);
  } else {
    write_file(out_path, document_text(s));
  }
  return 0;
}

int cmd_import(const std::string& in_path, const std::string& out_path, std::istream& in,
               std::ostream& out) {
  Session s = load_session(in_path, in);
  write_file(out_path, document_text(s));
  out << "imported " << s.log().entered_count() << " answers into " << out_path << " ("
      << to_string(s.status()) << ")\n";
  return 0;
}

int cmd_serve(std::string addr, std::string data, const std::vector<std::string>& origins,
              const std::string& ui, std::ostream& out, std::ostream& err) {
  api::ServerOptions options;
  api::parse_address(addr, options);
  options.allowed_origins = origins;
  if (!ui.empty()) options.static_dir = ui;
  api::Api service(data);
  for (const auto& e : service.store().load_errors()) err << "skipped " << e << '\n';
  api::HttpServer server(service, options);
  int port = server.bind();
  out << "serving " << service.store().size() << " sessions from " << data << " on http://"
      << options.host << ":" << port << std::string(api::kPrefix) << std::endl;
  return server.run() ? 0 : 1;
}

std::string env_or(const char* name, const std::string& fallback) {
  const char* v = std::getenv(name);
  return v && *v ? std::string(v) : fallback;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Pairwise comparison weighting and utility analysis", "kritwahl"};
  app.require_subcommand(1);

  std::string criteria, session_path, out_path, scores_path, in_path = "-";
  std::string strategy = "lexicographic";
  std::int64_t scale_max = ScoreTable::kDefaultScaleMax;
  std::size_t k_min = 2, k_max = 10, samples = 100;
  std::uint64_t seed = 1;
  std::string addr = env_or("KRITWAHL_ADDR", "127.0.0.1:8080");
  std::string data = env_or("KRITWAHL_DATA", "kritwahl-data");
  std::vector<std::string> origins;
  std::string ui;

  auto* c_new = app.add_subcommand("new", "Create a session document");
  c_new->add_option("--criteria", criteria, "Comma-separated criterion labels")->required();
  c_new->add_option("--out", out_path, "Session file to write")->required();
  c_new->add_option("--strategy", strategy, "lexicographic or max-inference")
      ->check(CLI::IsMember({"lexicographic", "max-inference"}));
  c_new->add_option("--scale-max", scale_max, "Upper end of the score scale")
      ->check(CLI::PositiveNumber);

  auto* c_ask = app.add_subcommand("ask", "Answer pairwise questions on the terminal");
  c_ask->add_option("--session", session_path)->required();

  auto* c_weights = app.add_subcommand("weights", "Print the weights of a complete session");
  c_weights->add_option("--session", session_path)->required();

  auto* c_verify = app.add_subcommand("verify", "Check the weight ladder for a range of k");
  c_verify->add_option("--k-min", k_min)->check(CLI::Range(2, 20));
  c_verify->add_option("--k-max", k_max)->check(CLI::Range(2, 20));
  c_verify->add_option("--samples", samples, "Random orders per k when k > 6");
  c_verify->add_option("--seed", seed);

  auto* c_eval = app.add_subcommand("evaluate", "Score alternatives with a session's weights");
  c_eval->add_option("--session", session_path)->required();
  c_eval->add_option("--scores", scores_path, "Score table JSON")->required();

  auto* c_export = app.add_subcommand("export", "Print a normalized session document");
  c_export->add_option("--session", session_path)->required();
  c_export->add_option("--out", out_path, "Write here instead of stdout");

  auto* c_import = app.add_subcommand("import", "Validate a session document and store it");
  c_import->add_option("--in", in_path, "Document to read ('-' for stdin)");
  c_import->add_option("--out", out_path, "Session file to write")->required();

  auto* c_serve = app.add_subcommand("serve", "Run the HTTP service");
  c_serve->add_option("--addr", addr, "HOST:PORT (default $KRITWAHL_ADDR)");
  c_serve->add_option("--data", data, "Session directory (default $KRITWAHL_DATA)");
  c_serve->add_option("--allow-origin", origins, "CORS origin to allow ('*' for any)");
  c_serve->add_option("--ui", ui, "Directory of static web client assets");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (c_verify->parsed() && k_min > k_max) {
      throw CLI::ValidationError("--k-min", "must not exceed --k-max");
    }
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    if (c_new->parsed()) return cmd_new(criteria, out_path, strategy, scale_max, out);
    if (c_ask->parsed()) return cmd_ask(session_path, in, out, err);
    if (c_weights->parsed()) return cmd_weights(session_path, in, out);
    if (c_verify->parsed()) return cmd_verify(k_min, k_max, samples, seed, out);
    if (c_eval->parsed()) return cmd_evaluate(session_path, scores_path, in, out);
    if (c_export->parsed()) return cmd_export(session_path, out_path, in, out);
    if (c_import->parsed()) return cmd_import(in_path, out_path, in, out);
    if (c_serve->parsed()) return cmd_serve(addr, data, origins, ui, out, err);
  } catch (const Error& e) {
    err << to_string(e.code()) << ": " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace kritwahl::cli
