#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "itrails/engine.hpp"
#include "itrails/ineq.hpp"

using namespace itrails;
using json = nlohmann::json;

TEST_CASE("mult command") {
  std::string req = R"({"command":"mult","type":"A2","lambda":[1,1],"nu":[1,1],"mu":[1,1],"method":"oracle"})";
  auto resp = json::parse(execute_request(req));
  CHECK(resp.at("result").at("count") == 2);
  CHECK(resp.at("version") == std::string(kLibraryVersion));
  CHECK(resp.at("query").at("type") == "A2");
  CHECK(resp.at("diagnostics").contains("timing_ms"));
  CHECK(resp.at("diagnostics").at("enumerated_points") == 2);

  // all methods give the same count through the engine
  for (auto method : {"lusztig-trails", "string-trails", "plucker-lusztig", "plucker-strings"}) {
    json r2 = json::parse(req);
    r2["method"] = method;
    auto out = json::parse(execute_request(r2.dump()));
    CHECK(out.at("result").at("count") == 2);
  }

  // classical with index map
  std::string creq = R"({"command":"mult","type":"B2","lambda":[1,0],"nu":[1,0],"mu":[0,0],"method":"classical","emit_system":true})";
  auto cresp = json::parse(execute_request(creq));
  CHECK(cresp.at("result").contains("index_map"));
  CHECK(cresp.at("result").at("index_map").at("0") == 2);
  CHECK(cresp.at("result").contains("system"));
}

TEST_CASE("transition command") {
  std::string req = R"({"command":"transition","type":"A2","side":"lusztig","semifield":"tropical","from":[1,2,1],"to":[2,1,2],"t":[1,0,2]})";
  auto resp = json::parse(execute_request(req));
  CHECK(resp.at("result").at("t") == json::parse("[1,1,0]"));

  std::string rreq = R"({"command":"transition","type":"A2","side":"lusztig","semifield":"rational","from":[1,2,1],"to":[2,1,2],"t":["1","1","1"]})";
  auto rresp = json::parse(execute_request(rreq));
  CHECK(rresp.at("result").at("t") == json::parse(R"(["1/2","2","1/2"])"));
}

TEST_CASE("cone command") {
  std::string req = R"({"command":"cone","type":"A3","word":[2,1,3,2,1,3],"mode":"typeA"})";
  auto resp = json::parse(execute_request(req));
  auto sys = IneqSystem::from_json(resp.at("result").at("system").dump());
  CHECK(sys.num_vars == 6);
  CHECK(sys.satisfied({0, 1, 1, 2, 1, 1}));
  CHECK(!sys.satisfied({0, 0, 0, 1, 0, 0}));  // t4 > t2 + t3
}

TEST_CASE("trails command") {
  std::string req = R"({"command":"trails","type":"A2","fund":1,"from":[1,0],"to":[0,-1],"word":[1,2,1]})";
  auto resp = json::parse(execute_request(req));
  CHECK(resp.at("result").at("count") == 1);
  CHECK(resp.at("result").at("trails").at(0).at("c") == json::parse("[1,1,0]"));
}

TEST_CASE("crystal command") {
  std::string req = R"({"command":"crystal","type":"A1","word":[1],"t":[2],"i":1,"n":3})";
  auto resp = json::parse(execute_request(req));
  CHECK(resp.at("result").at("t") == json::parse("[5]"));

  std::string greq = R"({"command":"crystal","type":"A1","word":[1],"t":["2"],"i":1,"geometric":true,"c":"3"})";
  auto gresp = json::parse(execute_request(greq));
  CHECK(gresp.at("result").at("t") == json::parse(R"(["6"])"));
}

TEST_CASE("branch command") {
  std::string req = R"({"command":"branch","type":"A2","I":[1],"nu":[1,0],"beta":[1,0],"method":"string"})";
  auto resp = json::parse(execute_request(req));
  CHECK(resp.at("result").at("count") == 1);

  std::string pqreq = R"({"command":"branch","pq":[1,2],"nu":[1,1],"beta":[1,1],"method":"lusztig"})";
  auto pqresp = json::parse(execute_request(pqreq));
  CHECK(pqresp.at("result").at("count") == 1);
}

TEST_CASE("verify command is reproducible") {
  std::string req = R"({"command":"verify","type":"A2","id":"dodgson","trials":5,"seed":7})";
  auto a = execute_request(req);
  auto b = execute_request(req);
  CHECK(a == b);  // byte identical
  auto resp = json::parse(a);
  CHECK(resp.at("result").at("ok") == true);
  CHECK(resp.at("result").at("seed") == 7);
}

TEST_CASE("deterministic responses") {
  std::string req = R"({"command":"mult","type":"B2","lambda":[1,1],"nu":[1,1],"mu":[1,1],"method":"string-trails"})";
  CHECK(execute_request(req) == execute_request(req));
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(execute_request("{oops"), InputError);
  CHECK_THROWS_AS(execute_request(R"({"command":"nope"})"), InputError);
  CHECK_THROWS_AS(
      execute_request(R"({"command":"mult","type":"A2","lambda":[1],"nu":[0,0],"mu":[0,0]})"),
      InputError);
  CHECK_THROWS_AS(
      execute_request(
          R"({"command":"mult","type":"A2","lambda":[1,0],"nu":[0,0],"mu":[0,0],"method":"sideways"})"),
      InputError);
}
