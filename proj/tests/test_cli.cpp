#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "norminf/cli.hpp"
#include "norminf/serialize.hpp"

using namespace norminf;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("norminf_cli_" + name);
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("enumerate counts") {
  CHECK(run({"enumerate", "--group", "2,3"}).out == "10\n");
  CHECK(run({"enumerate", "--group", "2^3", "--engine", "brute"}).out == "14\n");
  CHECK(run({"enumerate", "-g", "2,3,5", "--engine", "dfs", "--threads", "2"}).out == "450\n");

  auto comp = run({"enumerate", "--group", "2,3,5", "--by-comp", "--csv"});
  CHECK(comp.code == kExitOk);
  CHECK(comp.out == "450\nd,count\n0,198\n1,27\n2,27\n3,198\n");

  auto table = run({"enumerate", "--group", "2,3", "--by-comp"});
  CHECK(table.out.find("1  2\n") != std::string::npos);
}

TEST_CASE("enumerate emits catalogues and json") {
  auto hex = run({"enumerate", "--group", "2,3", "--emit", "hex"});
  CHECK(hex.code == kExitOk);
  CHECK(hex.out.rfind("10\n# norminf catalogue v1\n", 0) == 0);
  CHECK(hex.out.find("\n1f\n") != std::string::npos);

  auto path = temp_file("cat.txt");
  auto written = run({"enumerate", "--group", "2,3,5", "--emit", "hex", "--by-comp", "--out",
                      path.string()});
  CHECK(written.code == kExitOk);
  std::ifstream in(path);
  auto cat = read_catalogue(in);
  CHECK(cat.entries.size() == 450);
  CHECK(cat.entries.front().comp == 0);
  std::filesystem::remove(path);

  auto brute_path = temp_file("cat_brute.txt"), dfs_path = temp_file("cat_dfs.txt");
  run({"enumerate", "-g", "2^2,3", "--emit", "hex", "--engine", "brute", "-o", brute_path.string()});
  run({"enumerate", "-g", "2^2,3", "--emit", "hex", "--engine", "dfs", "-o", dfs_path.string()});
  std::ifstream a(brute_path), b(dfs_path);
  std::stringstream sa, sb;
  sa << a.rdbuf();
  sb << b.rdbuf();
  CHECK(sa.str() == sb.str());
  CHECK_FALSE(sa.str().empty());
  std::filesystem::remove(brute_path);
  std::filesystem::remove(dfs_path);

  auto json = run({"enumerate", "--group", "2", "--emit", "json"});
  CHECK(json.out.find("\"systems\"") != std::string::npos);
}

TEST_CASE("system commands") {
  const std::string top = R"({"group":"2,3","arrows":[[[0,0],[1,1]]]})";

  auto closed = run({"closure", "--in", top});
  CHECK(closed.code == kExitOk);
  CHECK(closed.out == "{\"group\":\"2,3\",\"arrows\":[[[0,0],[0,1]],[[0,0],[1,0]],[[0,0],[1,1]]]}\n");

  auto bad = run({"check-system", "--in", top});
  CHECK(bad.code == kExitCheckFailed);
  CHECK(bad.out.find("violation") != std::string::npos);

  auto ok = run({"check-system", "--group", "2,3", "--hex", "07"});
  CHECK(ok.code == kExitOk);
  CHECK(ok.out == "ok\n");

  auto image = run({"phi", "--group", "2,3", "--hex", "07"});
  CHECK(image.code == kExitOk);
  CHECK(image.out == "{\"group\":\"2,3\",\"arrows\":[[[0,0],[0,1]],[[0,0],[1,0]]]}\n");

  CHECK(run({"phi", "--in", top}).code == kExitCheckFailed);

  auto dec = run({"decompose", "--group", "2,3", "--hex", "1f", "--symbolic"});
  CHECK(dec.code == kExitOk);
  CHECK(dec.out.find("\"d\":2") != std::string::npos);
  CHECK(dec.out.find("\"support\":true") != std::string::npos);

  auto dot = run({"export-dot", "--group", "2,3", "--hex", "07"});
  CHECK(dot.code == kExitOk);
  CHECK(dot.out.rfind("digraph", 0) == 0);

  auto path = temp_file("system.json");
  {
    std::ofstream f(path);
    f << top;
  }
  CHECK(run({"closure", "--in", path.string()}).out == closed.out);
  std::filesystem::remove(path);
}

TEST_CASE("verify and check") {
  auto v = run({"verify", "--group", "2,3,5"});
  CHECK(v.code == kExitOk);
  CHECK(v.out.find("involution ok") != std::string::npos);
  CHECK(v.out.find("support ok") != std::string::npos);

  auto c = run({"check"});
  CHECK(c.code == kExitOk);
  CHECK(c.out.find("ALL PASS") != std::string::npos);

  auto one = run({"check", "--group", "2^4"});
  CHECK(one.code == kExitOk);
  CHECK(one.out.find("42") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"enumerate"}).code == kExitUsage);
  CHECK(run({"enumerate", "--group", "4"}).code == kExitUsage);
  CHECK(run({"enumerate", "--group", "2,3", "--engine", "magic"}).code == kExitUsage);
  CHECK(run({"check-system", "--in", "{oops"}).code == kExitUsage);
  CHECK(run({"check-system", "--group", "2,3", "--hex", "zz"}).code == kExitUsage);
  CHECK(run({"phi", "--group", "2^2", "--hex", "0"}).code == kExitUsage);
  CHECK(run({"verify", "--group", "2^2,3"}).code == kExitUsage);

  auto limit = run({"enumerate", "--group", "2,3,5,7", "--engine", "brute"});
  CHECK(limit.code == kExitLimits);
  CHECK(limit.err.find("limit") != std::string::npos);
  CHECK(run({"verify", "--group", "2,3,5,7,11"}).code == kExitLimits);

  CHECK(run({"closure", "--in", "/nonexistent/system.json"}).code == kExitIo);
  CHECK(run({"enumerate", "--group", "2", "--emit", "hex", "--out", "/nonexistent/dir/x"}).code ==
        kExitIo);
}

}  // TEST_SUITE
