#include <fstream>
#include <sstream>

#include "doctest.h"
#include "kritwahl/cli.hpp"
#include "kritwahl/codec.hpp"
#include "temp_dir.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = kritwahl::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("verify prints the ladder for k = 4") {
  auto r = run({"verify", "--k-min", "4", "--k-max", "4"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "k  max  step  ladder         orders            result\n"
        "4  1/2  1/6   0 1/6 1/3 1/2  24/24 enumerated  ok\n");
}

TEST_CASE("verify passes for k from 2 to 12") {
  auto r = run({"verify", "--k-min", "2", "--k-max", "12", "--samples", "20"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("20/20 sampled") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"new", "--criteria", "A,B"}).code == 2);
  auto bad = run({"verify", "--k-min", "1"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("Usage") != std::string::npos);
  CHECK(run({"verify", "--k-min", "5", "--k-max", "4"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("new, ask and weights on two criteria") {
  TempDir dir;
  auto file = (dir.path() / "s.json").string();
  auto created = run({"new", "--criteria", "A,B", "--out", file});
  REQUIRE(created.code == 0);

  auto asked = run({"ask", "--session", file}, "1\n");
  CHECK(asked.code == 0);
  CHECK(asked.out.find("Which is more important: A or B?") != std::string::npos);
  const std::string table =
      "criterion  weight  decimal  percent\n"
      "A          1       1        100.00%\n"
      "B          0       0        0.00%\n"
      "max=1  step=1  ladder=holds\n";
  CHECK(asked.out.find(table) != std::string::npos);

  // the saved document reproduces the same table
  auto weights = run({"weights", "--session", file});
  CHECK(weights.code == 0);
  CHECK(weights.out == table);
}

TEST_CASE("ask shows inferences, supports undo, and saves partial progress") {
  TempDir dir;
  auto file = (dir.path() / "s.json").string();
  REQUIRE(run({"new", "--criteria", "Cost,Quality,Speed", "--out", file}).code == 0);

  // Quality > Cost, undo, Cost > Quality, then Quality > Speed implies Cost > Speed
  auto partial = run({"ask", "--session", file}, "2\nu\nCost\n");
  CHECK(partial.code == 1);
  CHECK(partial.out.find("undone") != std::string::npos);
  CHECK(partial.err.find("Incomplete: 2 pairs undecided") != std::string::npos);

  auto weights = run({"weights", "--session", file});
  CHECK(weights.code == 1);
  CHECK(weights.err == "Incomplete: 2 pairs undecided\n");

  auto rest = run({"ask", "--session", file}, "maybe\n1\n1\n");
  CHECK(rest.code == 0);
  CHECK(rest.out.find("please answer") != std::string::npos);
  CHECK(rest.out.find("Cost       2/3     0.666666666666667  66.67%") != std::string::npos);

  auto doc = kritwahl::parse_json(slurp(file));
  CHECK(doc["answers"].size() == 3);
}

TEST_CASE("ask with the chain answers infers the rest") {
  TempDir dir;
  auto file = (dir.path() / "s.json").string();
  REQUIRE(run({"new", "--criteria", "A,B,C", "--out", file}).code == 0);
  // A > B, then C > A forces C > B
  auto r = run({"ask", "--session", file}, "1\n2\n");
  CHECK(r.code == 0);
  CHECK(r.out.find("also inferred: C ≻ B") != std::string::npos);
  CHECK(r.out.find("2 answered, 1 inferred") != std::string::npos);
}

TEST_CASE("evaluate prints utilities, ranking and sensitivity") {
  TempDir dir;
  auto file = (dir.path() / "s.json").string();
  auto scores = (dir.path() / "scores.json").string();
  REQUIRE(run({"new", "--criteria", "A,B,C", "--out", file}).code == 0);
  REQUIRE(run({"ask", "--session", file}, "1\n1\n1\n").code == 0);
  std::ofstream(scores) << R"({"alternatives": ["X", "Y"], "scores": [[9, 3, 0], [3, 9, 0]]})";
  auto r = run({"evaluate", "--session", file, "--scores", scores});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "place  alternative  utility  decimal\n"
        "1      X            7        7\n"
        "2      Y            5        5\n"
        "winner: X\n"
        "\n"
        "swap     winner after  changed\n"
        "A <-> B  Y             yes\n"
        "B <-> C  X             no\n");

  std::ofstream(scores) << R"({"alternatives": ["X"], "scores": [[11, 0, 0]]})";
  auto bad = run({"evaluate", "--session", file, "--scores", scores});
  CHECK(bad.code == 1);
  CHECK(bad.err.rfind("ScoreOutOfRange", 0) == 0);
}

TEST_CASE("export and import") {
  TempDir dir;
  auto file = (dir.path() / "s.json").string();
  auto copy = (dir.path() / "copy.json").string();
  REQUIRE(run({"new", "--criteria", "A,B,C", "--out", file}).code == 0);
  REQUIRE(run({"ask", "--session", file}, "2\n").code == 1);
  auto exported = run({"export", "--session", file});
  CHECK(exported.code == 0);
  CHECK(exported.out == slurp(file));

  auto imported = run({"import", "--out", copy}, exported.out);
  CHECK(imported.code == 0);
  CHECK(slurp(copy) == slurp(file));

  auto doc = kritwahl::parse_json(exported.out);
  doc["answers"] = {{{"winner", 0}, {"loser", 1}},
                    {{"winner", 1}, {"loser", 2}},
                    {{"winner", 2}, {"loser", 0}}};
  auto cyclic = run({"import", "--out", copy}, doc.dump());
  CHECK(cyclic.code == 1);
  CHECK(cyclic.err.rfind("Contradiction", 0) == 0);

  auto missing = run({"weights", "--session", (dir.path() / "none.json").string()});
  CHECK(missing.code == 1);
}
