#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "cli.hpp"

using lapsum::cli::run;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("number formatting") {
  using lapsum::cli::format_number;
  CHECK(format_number(1.0) == "1.0");
  CHECK(format_number(-0.0) == "0.0");
  CHECK(format_number(2.5) == "2.5");
  CHECK(format_number(1.0 / 3.0) == "0.333333333");
  CHECK(format_number(-1e-12) == "0.0");
}

TEST_CASE("single graph commands") {
  const Outcome sa = call({"stararbor", "--graph6", "Bw"});
  CHECK(sa.code == 0);
  CHECK(sa.out == "2\n");
  CHECK(call({"eps", "--family", "star:6", "--k", "1"}).out == "1.0\n");
  CHECK(call({"match", "--family", "complete:5"}).out == "2\n");
  CHECK(call({"cover", "--family", "cycle:5"}).out == "3\n");
  CHECK(call({"arbor", "--family", "complete:5"}).out == "3\n");
  CHECK(call({"spectrum", "--family", "complete:3"}).out == "3.0 3.0 0.0\n");
  const auto d = nlohmann::json::parse(call({"density", "--family", "complete:4"}).out);
  CHECK(d.at("rho") == "3/2");
  const auto p = nlohmann::json::parse(call({"pipeline", "--family", "kbip:3,5", "--k", "3"}).out);
  CHECK(p.at("route") == "2a");
}

TEST_CASE("family ranges produce one line per graph") {
  const Outcome r = call({"eps", "--family", "star:2..4", "--k", "1"});
  CHECK(r.out == "1.0\n1.0\n1.0\n");
}

TEST_CASE("scan exit codes") {
  const Outcome ok = call({"scan", "--all-labeled", "5", "--bound", "brouwer", "--format", "json", "--no-timing"});
  CHECK(ok.code == 0);
  const auto j = nlohmann::json::parse(ok.out);
  CHECK(j.at("source").at("graphs") == 1024);
  const Outcome csv = call({"scan", "--all-labeled", "3", "--bound", "brouwer", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out.find("bound,") == 0);
}

TEST_CASE("errors") {
  const Outcome unknown = call({"frobnicate"});
  CHECK(unknown.code == 2);
  CHECK(unknown.err.rfind("error:", 0) == 0);
  const Outcome bad_g6 = call({"spectrum", "--graph6", "~"});
  CHECK(bad_g6.code == 2);
  CHECK(bad_g6.err.rfind("error:", 0) == 0);
  CHECK(call({"scan", "--all-labeled", "4", "--bound", "nope"}).code == 2);
  CHECK(call({"spectrum"}).code == 2);
  const Outcome cap = call({"stararbor", "--family", "complete:9"});
  CHECK(cap.code == 3);
  CHECK(cap.err.find("size limit") != std::string::npos);
  CHECK(call({"scan", "--all-labeled", "8", "--bound", "brouwer"}).code == 3);
  CHECK(call({"structure", "--family", "complete:5", "--k", "2"}).code == 2);
}
