#include "itrails/engine.hpp"

#include <chrono>
#include <cstdlib>

#include <json.hpp>

#include "itrails/counting.hpp"
#include "itrails/minors.hpp"
#include "itrails/oracle.hpp"

namespace itrails {

namespace {

using json = nlohmann::ordered_json;

Word get_word(const json& j, const char* key) {
  Word w;
  for (const auto& x : j.at(key)) w.push_back(x.get<int>());
  return w;
}

Weight get_weight(const json& j, const char* key, int rank) {
  Weight w = j.at(key).get<Weight>();
  if (static_cast<int>(w.size()) != rank) throw InputError(std::string(key) + " has wrong rank");
  return w;
}

Word default_wo_word(const CartanData& c) {
  return canonical_reduced_word(c, longest_element(c));
}

json system_to_jsonobj(const IneqSystem& s) { return json::parse(s.to_json()); }

json cmd_mult(const json& req, Int& points) {
  CartanData c = cartan(req.at("type").get<std::string>());
  MultiplicityQuery q;
  q.cartan = c;
  q.lambda = get_weight(req, "lambda", c.rank);
  q.nu = get_weight(req, "nu", c.rank);
  q.mu = get_weight(req, "mu", c.rank);
  q.method = mult_method_from_string(req.value("method", "lusztig-trails"));
  if (req.contains("word"))
    q.word = get_word(req, "word");
  else if (q.method != MultMethod::Classical && q.method != MultMethod::Oracle)
    q.word = default_wo_word(c);
  json result;
  result["count"] = multiplicity_count(q);
  points = result["count"].get<Int>();
  if (q.method == MultMethod::Classical) {
    json im;
    for (const auto& [paper, bourbaki] : classical_index_map(c)) im[paper] = bourbaki;
    result["index_map"] = im;
    result["designated_word"] = classical_designated_word(c);
  }
  if (req.value("emit_system", false) && q.method != MultMethod::Oracle)
    result["system"] = system_to_jsonobj(q.method == MultMethod::Classical
                                             ? classical_system(c, q.lambda, q.mu, q.nu)
                                             : build_system(q));
  return result;
}

json cmd_branch(const json& req, Int& points) {
  json result;
  if (req.contains("pq")) {
    auto pq = req.at("pq");
    int p = pq.at(0).get<int>(), qq = pq.at(1).get<int>();
    int r = p + qq - 1;
    Weight nu = get_weight(req, "nu", r);
    Weight beta = get_weight(req, "beta", r);
    std::string method = req.value("method", "string");
    if (method == "oracle") {
      CartanData c = cartan(Family::A, r);
      std::vector<int> I;
      for (int i = 1; i <= r; ++i)
        if (i != p) I.push_back(i);
      result["count"] = branching_oracle(c, I, nu, beta);
    } else {
      auto sys = reduction_pq(p, qq, nu, beta, method == "string");
      result["count"] = count_lattice(sys);
      if (req.value("emit_system", false)) result["system"] = system_to_jsonobj(sys);
    }
    points = result["count"].get<Int>();
    return result;
  }
  CartanData c = cartan(req.at("type").get<std::string>());
  std::vector<int> I;
  for (const auto& x : req.at("I")) I.push_back(x.get<int>());
  Weight nu = get_weight(req, "nu", c.rank);
  Weight beta = get_weight(req, "beta", c.rank);
  std::string method = req.value("method", "string");
  if (method == "oracle") {
    result["count"] = branching_oracle(c, I, nu, beta);
  } else {
    ReductionQuery q{c, I, nu, beta,
                     req.contains("word") ? get_word(req, "word") : reduction_default_word(c, I),
                     method == "string"};
    result["count"] = reduction_count(q);
    if (req.value("emit_system", false))
      result["system"] = system_to_jsonobj(build_reduction_system(q));
  }
  points = result["count"].get<Int>();
  return result;
}

json cmd_cone(const json& req) {
  CartanData c = cartan(req.at("type").get<std::string>());
  Word w = get_word(req, "word");
  std::string mode = req.value("mode", "general");
  ConeMode cm;
  if (mode == "general")
    cm = ConeMode::General;
  else if (mode == "split")
    cm = ConeMode::Split;
  else if (mode == "fully-commutative")
    cm = ConeMode::FullyCommutative;
  else if (mode == "typeA")
    cm = ConeMode::TypeA;
  else
    throw InputError("unknown cone mode: " + mode);
  std::vector<std::vector<int>> flag;
  if (req.contains("flag"))
    for (const auto& part : req.at("flag")) {
      std::vector<int> sub;
      for (const auto& x : part) sub.push_back(x.get<int>());
      flag.push_back(sub);
    }
  json result;
  result["system"] = system_to_jsonobj(string_cone(c, w, cm, flag));
  return result;
}

json cmd_transition(const json& req) {
  CartanData c = cartan(req.at("type").get<std::string>());
  std::string side_s = req.value("side", "lusztig");
  ParamSide side = side_s == "lusztig" ? ParamSide::Lusztig
                   : side_s == "string" ? ParamSide::String
                                        : throw InputError("unknown side: " + side_s);
  Word from = get_word(req, "from"), to = get_word(req, "to");
  std::string field = req.value("semifield", "tropical");
  json result;
  if (field == "tropical") {
    IntVec t = req.at("t").get<IntVec>();
    result["t"] = sf_to_tropical_vec(transition(c, side, from, to, sf_tropical_vec(t)));
  } else if (field == "rational") {
    std::vector<Rat> t;
    for (const auto& x : req.at("t")) t.push_back(Rat(x.get<std::string>()));
    auto out = transition(c, side, from, to, sf_rational_vec(t));
    auto arr = json::array();
    for (const auto& v : out) arr.push_back(v.rat.get_str());
    result["t"] = arr;
  } else {
    throw InputError("unknown semifield: " + field);
  }
  return result;
}

json cmd_trails(const json& req, Int& points) {
  CartanData c = cartan(req.at("type").get<std::string>());
  if (req.value("dual", false)) c = langlands_dual(c);
  int fund = req.at("fund").get<int>();
  const FundModule& m = cached_module(c, fund);
  Weight from = get_weight(req, "from", c.rank);
  Weight to = get_weight(req, "to", c.rank);
  Word w = get_word(req, "word");
  auto trails =
      req.value("extremal", false) ? extremal_trails(m, from, to, w) : enumerate_trails(m, from, to, w);
  json result;
  auto arr = json::array();
  for (const auto& t : trails) {
    json item;
    item["c"] = t.c;
    item["d"] = t.d;
    item["weights"] = t.weights;
    arr.push_back(item);
  }
  result["trails"] = arr;
  result["count"] = trails.size();
  points = static_cast<Int>(trails.size());
  return result;
}

json cmd_crystal(const json& req) {
  CartanData c = cartan(req.at("type").get<std::string>());
  Word w = get_word(req, "word");
  int i0 = req.at("i").get<int>();
  json result;
  if (req.value("geometric", false)) {
    std::vector<Rat> t;
    for (const auto& x : req.at("t")) t.push_back(Rat(x.get<std::string>()));
    Rat cc(req.value("c", std::string("1")));
    auto out = geom_crystal_apply(c, w, t, i0, cc);
    auto arr = json::array();
    for (const auto& v : out) arr.push_back(v.get_str());
    result["t"] = arr;
  } else {
    IntVec t = req.at("t").get<IntVec>();
    Int n = req.value("n", Int(1));
    result["t"] = crystal_apply(c, w, t, i0, n);
  }
  return result;
}

json cmd_verify(const json& req) {
  CartanData c = cartan(req.at("type").get<std::string>());
  std::string id = req.at("id").get<std::string>();
  int trials = req.value("trials", 20);
  Int seed = req.value("seed", Int(20260810));
  auto rep = verify_identity(id, c, trials, seed);
  json result;
  result["id"] = rep.id;
  result["type"] = rep.type;
  result["seed"] = rep.seed;
  result["trials"] = rep.trials;
  result["failures"] = rep.failures;
  result["ok"] = rep.ok();
  return result;
}

json cmd_accept(const json&) {
  auto results = run_acceptance(nullptr);
  json arr = json::array();
  bool all = true;
  for (const auto& r : results) {
    json item;
    item["id"] = r.id;
    item["name"] = r.name;
    item["pass"] = r.pass;
    item["details"] = r.details;
    arr.push_back(item);
    all = all && r.pass;
  }
  json result;
  result["criteria"] = arr;
  result["all_pass"] = all;
  return result;
}

}  // namespace

std::string execute_request(const std::string& request_json) {
  json req;
  try {
    req = json::parse(request_json);
  } catch (const std::exception& e) {
    throw InputError(std::string("malformed JSON request: ") + e.what());
  }
  std::string command = req.at("command").get<std::string>();
  auto start = std::chrono::steady_clock::now();
  Int points = 0;
  json result;
  if (command == "mult")
    result = cmd_mult(req, points);
  else if (command == "branch")
    result = cmd_branch(req, points);
  else if (command == "cone")
    result = cmd_cone(req);
  else if (command == "transition")
    result = cmd_transition(req);
  else if (command == "trails")
    result = cmd_trails(req, points);
  else if (command == "crystal")
    result = cmd_crystal(req);
  else if (command == "verify")
    result = cmd_verify(req);
  else if (command == "accept")
    result = cmd_accept(req);
  else
    throw InputError("unknown command: " + command);
  auto end = std::chrono::steady_clock::now();

  json resp;
  resp["version"] = kLibraryVersion;
  resp["query"] = req;
  resp["result"] = result;
  json diag;
  // timings vary run to run; emit them only on request so that identical queries
  // produce byte-identical responses by default
  bool want_timing = std::getenv("ITRAILS_TIMINGS") != nullptr;
  diag["timing_ms"] =
      want_timing ? std::chrono::duration_cast<std::chrono::milliseconds>(end - start).count()
                  : 0;
  diag["enumerated_points"] = points;
  resp["diagnostics"] = diag;
  return resp.dump(2) + "\n";
}

}  // namespace itrails
