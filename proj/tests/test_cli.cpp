#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "semirds/cli.hpp"
#include "semirds/json_io.hpp"

using namespace semirds;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "semirds");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
  return Run{code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("semirds_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST_CASE("construct then verify") {
  const Run c = run({"construct", "--q", "13"});
  REQUIRE(c.code == kExitConfirmed);
  const Json cert = Json::parse(c.out);
  CHECK(rds_to_json(rds_from_json(cert)) == cert);
  const std::string path = temp_file("c13.json", c.out);
  const Run v = run({"verify", "--cert", path});
  CHECK(v.code == kExitConfirmed);
  CHECK(Json::parse(v.out)["valid"] == true);
  CHECK(run({"verify", "--cert", path, "--threads", "3"}).out == v.out);
  CHECK(run({"verify", "--cert", path, "--method", "char"}).code == kExitRefuted);

  Json broken = cert;
  broken["R"][0] = broken["R"][1];
  const Run b = run({"verify", "--cert", temp_file("bad.json", broken.dump())});
  CHECK(b.code == kExitRefuted);
  CHECK(Json::parse(b.out)["brute"]["valid"] == false);

  CHECK(Json::parse(run({"construct", "--q", "13", "--all"}).out).size() == 8);
  CHECK(run({"construct", "--q", "13", "--e", "5", "--f", "5"}).code == kExitConfirmed);
  CHECK(run({"construct", "--q", "13", "--e", "2", "--f", "5"}).code == kExitRefuted);
  CHECK(run({"construct", "--q", "7"}).code == kExitRefuted);
  CHECK(run({"construct", "--q", "12"}).code == kExitRefuted);
  CHECK(run({"verify", "--cert", "/nonexistent/file.json"}).code == kExitRefuted);
  CHECK(run({"verify", "--cert", temp_file("garbage.json", "{not json")}).code == kExitRefuted);
}

TEST_CASE("sweep, search and lemma subcommands") {
  const Run s = run({"sweep", "--family", "2p2", "--p", "3"});
  CHECK(s.code == kExitConfirmed);
  const Json js = Json::parse(s.out);
  CHECK(sweep_to_json(sweep_from_json(js)) == js);
  CHECK(run({"sweep", "--family", "2p2", "--p", "3", "--threads", "4"}).out == s.out);
  CHECK(run({"sweep", "--family", "2p2", "--p", "7"}).code == kExitUsage);
  CHECK(run({"sweep", "--family", "3p2", "--p", "3"}).code == kExitUsage);

  const std::vector<std::string> base{"search", "--group", R"({"kind":"abelian","factors":[2,2,3,3]})", "--n-gens",
                                      "[[0,0,0,1]]", "--lambda", "4"};
  const Run one = run(base);
  CHECK(one.code == kExitConfirmed);
  auto threaded = base;
  threaded.insert(threaded.end(), {"--threads", "3"});
  CHECK(run(threaded).out == one.out);
  SearchTask task{Group(AbelianSpec{{2}}), {}, 0, {}};
  const SearchResult parsed = search_from_json(Json::parse(one.out), &task);
  CHECK(search_to_json(task, parsed) == Json::parse(one.out));
  auto expect = base;
  expect.insert(expect.end(), {"--expect", "empty"});
  CHECK(run(expect).code == kExitRefuted);
  CHECK(run({"search", "--group", R"({"kind":"abelian","factors":[4,3,3]})", "--n", "3", "--all-N", "--lambda", "4",
             "--expect", "empty"})
            .code == kExitConfirmed);
  CHECK(run({"search", "--group", R"({"kind":"abelian","factors":[4,25]})", "--n", "5", "--all-N", "--lambda", "4"})
            .code == kExitUsage);

  const Run l5 = run({"lemma31", "--p", "5"});
  CHECK(l5.code == kExitConfirmed);
  CHECK(Json::parse(l5.out)["solutions"].empty());
  const Run l7 = run({"lemma31", "--p", "7"});
  CHECK(l7.code == kExitConfirmed);
  CHECK(Json::parse(l7.out)["count"] == 14);
  CHECK(run({"lemma31", "--p", "17"}).code == kExitUsage);

  const Run fail = run({"check-lemma14", "--group", R"({"kind":"abelian","factors":[2,9]})", "--n", "[[0,3]]"});
  CHECK(fail.code == kExitRefuted);
  CHECK(lemma14_to_json(lemma14_from_json(Json::parse(fail.out)["verdict"])) == Json::parse(fail.out)["verdict"]);
  CHECK(run({"check-lemma14", "--group", R"({"kind":"abelian","factors":[2,2,3,3]})", "--n-gens", "[[0,0,0,1]]"}).code ==
        kExitConfirmed);
  CHECK(run({"check-lemma14", "--group", R"({"kind":"dihedral","rotations":3})", "--n", "[[0,1]]"}).code == kExitRefuted);
}

TEST_CASE("mub and bent subcommands") {
  const Run s = run({"search", "--group", R"({"kind":"abelian","factors":[5,5]})", "--n-gens", "[[0,1]]", "--lambda", "1",
                     "--limit", "1"});
  const Json report = Json::parse(s.out);
  const Json cert{{"group", report["group"]}, {"N", report["N"]}, {"R", report["solutions"][0]}, {"params", report["params"]}};
  const std::string path = temp_file("c25.json", cert.dump());
  const std::string float_path = (std::filesystem::temp_directory_path() / "semirds_test_float.json").string();
  const Run m = run({"mub", "--cert", path, "--verify", "--float-out", float_path});
  CHECK(m.code == kExitConfirmed);
  const Json jm = Json::parse(m.out);
  CHECK(jm["mub"]["bases"].size() == 6);
  CHECK(mub_to_json(mub_from_json(jm["mub"])) == jm["mub"]);
  std::ifstream fin(float_path);
  CHECK(Json::parse(fin).size() == 6);
  const Run plain = run({"mub", "--cert", path});
  CHECK(Json::parse(plain.out) == jm["mub"]);

  const Run h = run({"bent", "--p", "3", "--verify-hou"});
  CHECK(h.code == kExitConfirmed);
  CHECK(hou_to_json(3, hou_from_json(Json::parse(h.out))) == Json::parse(h.out));
  CHECK(run({"bent", "--p", "7", "--verify-hou"}).code == kExitUsage);
  const Run sq = run({"bent", "--p", "5"});
  CHECK(sq.code == kExitConfirmed);
  CHECK(Json::parse(sq.out)["bent"] == true);
  const Run lin = run({"bent", "--p", "5", "--table", "[0,1,2,3,4]"});
  CHECK(lin.code == kExitConfirmed);
  CHECK(Json::parse(lin.out)["bent"] == false);
  CHECK(run({"bent", "--p", "5", "--table", "[0,1]"}).code == kExitRefuted);
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"--help"}).code == 0);
}
