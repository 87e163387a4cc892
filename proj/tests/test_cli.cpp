#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "clusterscope/catalog.hpp"
#include "clusterscope/cli.hpp"
#include "clusterscope/qvr.hpp"
#include "clusterscope/surface.hpp"

using namespace clusterscope;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int status = run_cli(args, in, out, err);
  return {status, out.str(), err.str()};
}

std::string qvr(const char* name) { return to_qvr(catalog_quiver(name), name); }

std::string surface(int g, std::vector<int> b, int p) {
  return to_surface_text({"s", {SurfaceComponent{g, std::move(b), p}}});
}

}  // namespace

TEST_CASE("usage errors") {
  CHECK(run({}).status == kUsage);
  CHECK(run({"no-such-command"}).status == kUsage);
  CHECK(run({"mutate"}, qvr("a2")).status == kUsage);  // --path is required
  CHECK(run({"mutate", "--path", "9"}, qvr("a2")).status == kUsage);
  CHECK(run({"mutate", "--path", "1"}, "quiver broken\n").status == kUsage);
  CHECK(run({"class", "/nonexistent/file.qvr"}).status == kUsage);
  CHECK(run({"--help"}).status == kSuccess);
}

TEST_CASE("mutate") {
  const auto r = run({"mutate", "--path", "1,2"}, qvr("a3_cycle"));
  REQUIRE(r.status == kSuccess);
  const auto back = parse_qvr(r.out).quiver;
  const std::vector<Index> path{0, 1};
  CHECK(back == mutate_along(catalog_quiver("a3_cycle"), path));
  CHECK(run({"mutate", "--path", "2"}, to_qvr(IceQuiver::from_arrows(2, {{0, 1, 1}}, {1}), "f")).status == kUsage);
}

TEST_CASE("class and searches") {
  CHECK(run({"class"}, qvr("x6")).status == kSuccess);
  CHECK(run({"class", "--depth", "1"}, qvr("smallex")).status == kIndeterminate);
  CHECK(run({"find-acyclic"}, qvr("a3_cycle")).status == kSuccess);
  CHECK(run({"find-acyclic"}, qvr("markov")).status == kNegative);
  CHECK(run({"find-acyclic", "--depth", "2"}, qvr("smallex")).status == kIndeterminate);
  CHECK(run({"covering-pairs"}, qvr("x6")).out == "pair 1,6\n");
  CHECK(run({"covering-pairs", "--search"}, qvr("x7")).status == kNegative);
  CHECK(run({"covering-pairs", "--search"}, qvr("x6")).status == kSuccess);
}

TEST_CASE("banff and verification") {
  const auto ok = run({"banff"}, qvr("x6"));
  REQUIRE(ok.status == kSuccess);
  CHECK(run({"banff-verify"}, ok.out).status == kSuccess);
  CHECK(run({"banff-verify"}, ok.out).out == "Accept\n");

  std::string tampered = ok.out;
  const auto at = tampered.find("pair=1,6");
  REQUIRE(at != std::string::npos);
  tampered.replace(at, 8, "pair=6,1");
  const auto rej = run({"banff-verify"}, tampered);
  CHECK(rej.status == kNegative);
  CHECK(rej.out.rfind("Reject", 0) == 0);
  CHECK(run({"banff-verify"}, "garbage\n").status == kUsage);

  CHECK(run({"banff"}, qvr("markov")).status == kNegative);
  CHECK(run({"banff", "--node-budget", "3"}, qvr("x6")).status == kIndeterminate);
  CHECK(run({"banff", "--stop", "sideways"}, qvr("x6")).status == kUsage);
  CHECK(run({"banff", "--stop", "isolated"}, qvr("a2")).status == kSuccess);
  CHECK(run({"banff", "--reduced"}, qvr("smallex")).status == kSuccess);
  CHECK(run({"banff", "--reduced", "--seed-level"}, qvr("smallex")).status == kUsage);

  const auto seeds = run({"banff", "--seed-level"}, qvr("smallex"));
  REQUIRE(seeds.status == kSuccess);
  CHECK(seeds.out.find("cluster 3 x1 * x3^-1 * x4 + x2 * x3^-1") != std::string::npos);
}

TEST_CASE("surfaces") {
  CHECK(run({"surface", "rank"}, surface(0, {2}, 3)).out == "rank 8\n");
  CHECK(run({"surface", "classify"}, surface(1, {2}, 0)).status == kSuccess);
  CHECK(run({"surface", "classify"}, surface(1, {1}, 0)).status == kNegative);
  CHECK(run({"surface", "classify"}, surface(1, {1}, 1)).status == kSuccess);
  CHECK(run({"surface", "classify"}, surface(1, {1}, 1)).out.find("Unknown") != std::string::npos);
  CHECK(run({"surface", "rank"}, surface(0, {}, 2)).status == kUsage);
  CHECK(run({"surface"}).status == kUsage);
}

TEST_CASE("catalog") {
  CHECK(run({"catalog", "--list"}).status == kSuccess);
  CHECK(run({"catalog", "x7"}).out == qvr("x7"));
  CHECK(run({"catalog", "nope"}).status == kUsage);
  CHECK(run({"catalog", "torus2", "--surface"}).out == to_surface_text(*catalog_entry("torus2").surface));
  CHECK(run({"catalog", "x7", "--surface"}).status == kUsage);
}

TEST_CASE("algebraic commands") {
  CHECK(run({"present"}, qvr("a2")).status == kSuccess);
  CHECK(run({"present"}, qvr("markov")).status == kUsage);
  const auto iso = to_qvr(IceQuiver::from_arrows(2, {{0, 1, 1}}, {1}), "iso");
  CHECK(run({"jacobian-check", "--frozen", "2=3"}, iso).status == kSuccess);
  CHECK(run({"jacobian-check", "--frozen", "2=0"}, iso).status == kUsage);
  CHECK(run({"jacobian-check"}, qvr("a2")).status == kUsage);
  CHECK(run({"degenerate-hom"}, qvr("markov")).status == kSuccess);
  CHECK(run({"degenerate-hom"}, qvr("a2")).status == kNegative);
  CHECK(run({"evaluate", "--start", "1=1,2=1", "--path", "1,2,1,2,1"}, qvr("a2")).status == kSuccess);
  CHECK(run({"evaluate", "--start", "1=-1,2=1", "--path", "2,1,2"}, qvr("a2")).status == kNegative);
  CHECK(run({"evaluate", "--start", "1=1"}, qvr("a2")).status == kUsage);
  CHECK(run({"evaluate", "--start", "1=1/0,2=1"}, qvr("a2")).status == kUsage);
  CHECK(run({"laurent-check", "--depth", "3"}, qvr("markov")).status == kSuccess);
}

TEST_CASE("json payloads") {
  using nlohmann::json;
  const auto m = run({"--json", "mutate", "--path", "1"}, qvr("a2"));
  REQUIRE(m.status == kSuccess);
  const auto j = json::parse(m.out);
  CHECK(j["command"] == "mutate");
  CHECK(j["quiver"]["vertices"] == 2);
  CHECK(j["quiver"]["arrows"] == json::parse("[[2,1,1]]"));

  // the flag also works after the subcommand
  const auto c = json::parse(run({"class", "--json"}, qvr("x6")).out);
  CHECK(c["size"] == 5);
  CHECK(c["complete"] == true);

  const auto b = json::parse(run({"banff", "--json"}, qvr("markov")).out);
  CHECK(b["kind"] == "NoCoveringPairInCompleteClass");

  const auto s = json::parse(run({"surface", "classify", "--json"}, surface(1, {2}, 0)).out);
  CHECK(s["verdict"] == "LocallyAcyclic");
  CHECK(s["components"][0]["reason"] == "Thm-atleast2");

  const auto v = json::parse(run({"banff-verify", "--json"}, "junk\n").out);
  CHECK(v["accepted"] == false);
  CHECK(v["reason"] == "Malformed");

  const auto e = json::parse(run({"evaluate", "--json", "--start", "1=1,2=1", "--path", "1"}, qvr("a2")).out);
  CHECK(e["steps"][0]["values"] == json::parse(R"(["2","1"])"));
}

TEST_CASE("thread option is accepted and does not change output") {
  const auto a = run({"--threads", "1", "class", "--list"}, qvr("la3"));
  const auto b = run({"class", "--list", "--threads", "3"}, qvr("la3"));
  CHECK(a.status == b.status);
  CHECK(a.out == b.out);
}
