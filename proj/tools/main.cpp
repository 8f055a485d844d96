// Command-line front end: parses a net file, runs one analysis, and prints
// a JSON (default) or plain-text report. Exit codes: 0 success, 1 negative
// verdict from a checking subcommand, 2 input or usage errors.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "semiflow/behavior.hpp"
#include "semiflow/bounds.hpp"
#include "semiflow/classify.hpp"
#include "semiflow/farkas.hpp"
#include "semiflow/hilbert.hpp"
#include "semiflow/natdec.hpp"
#include "semiflow/net.hpp"
#include "semiflow/oracle.hpp"
#include "semiflow/rational.hpp"
#include "semiflow/vec.hpp"

using json = nlohmann::ordered_json;
using namespace semiflow;

namespace {

struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

ParsedNet load_net(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open net file: " + path);
  try {
    return parse_net(in);
  } catch (const parse_error& e) {
    throw input_error(path + ": " + e.what());
  }
}

Int to_int(const json& j, const std::string& what) {
  if (j.is_number_unsigned()) return Int(j.get<std::uint64_t>());
  if (j.is_number_integer()) {
    auto v = j.get<std::int64_t>();
    if (v < 0) throw input_error(what + ": negative coordinate");
    return Int(static_cast<unsigned long>(v));
  }
  if (j.is_string()) {
    try {
      Int x(j.get<std::string>());
      if (x < 0) throw input_error(what + ": negative coordinate");
      return x;
    } catch (const std::invalid_argument&) {
      throw input_error(what + ": not an integer: " + j.get<std::string>());
    }
  }
  throw input_error(what + ": coordinates must be integers");
}

IntVec to_vec(const json& j, int d, const std::string& what) {
  if (!j.is_array())
    throw input_error(what + ": expected an array of coordinates");
  if (static_cast<int>(j.size()) != d)
    throw input_error(what + ": expected " + std::to_string(d) +
                      " coordinates, got " + std::to_string(j.size()));
  IntVec v;
  for (const auto& x : j) v.push_back(to_int(x, what));
  return v;
}

std::vector<IntVec> load_vectors(const std::string& path, int d) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open set file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw input_error(path + ": " + e.what());
  }
  if (!j.is_array()) throw input_error(path + ": expected an array of arrays");
  std::vector<IntVec> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(to_vec(j[i], d, path + "[" + std::to_string(i) + "]"));
  return out;
}

IntVec parse_coords(const std::string& text, int d, const std::string& what) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      parts.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  parts.push_back(cur);
  json arr = json::array();
  for (auto& p : parts) arr.push_back(p);
  return to_vec(arr, d, what);
}

json json_int(const Int& x) {
  if (x.fits_slong_p()) return json(static_cast<std::int64_t>(x.get_si()));
  return json(x.get_str());
}

json json_vec(const IntVec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(json_int(x));
  return a;
}

json json_vecs(const std::vector<IntVec>& vs) {
  json a = json::array();
  for (const auto& v : vs) a.push_back(json_vec(v));
  return a;
}

json json_rats(const RatVec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.get_str());
  return a;
}

json json_support(const Support& s, const PetriNet& net) {
  json a = json::array();
  for (int i : s.indices()) a.push_back(net.places[i]);
  return a;
}

json json_supports(const std::vector<Support>& ss, const PetriNet& net) {
  json a = json::array();
  for (const auto& s : ss) a.push_back(json_support(s, net));
  return a;
}

std::string text_vec(const IntVec& v) { return to_string(v); }

std::string text_support(const Support& s, const PetriNet& net) {
  std::string out = "{";
  bool first = true;
  for (int i : s.indices()) {
    if (!first) out += ",";
    out += net.places[i];
    first = false;
  }
  return out + "}";
}

void emit(const json& j, const std::string& format,
          const std::string& text) {
  if (format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

// ---- subcommand bodies ----------------------------------------------------

int run_parse(const ParsedNet& pn, const std::string& format) {
  const auto& net = pn.net;
  json j;
  j["places"] = net.places;
  j["transitions"] = net.transitions;
  j["initial"] = json_vec(pn.initial);
  json pre = json::array(), post = json::array();
  for (int p = 0; p < net.place_count(); ++p) {
    pre.push_back(json_vec(net.pre[p]));
    post.push_back(json_vec(net.post[p]));
  }
  j["pre"] = pre;
  j["post"] = post;

  std::ostringstream t;
  t << "places: " << net.place_count()
    << "  transitions: " << net.transition_count() << "\n"
    << render_net(net, pn.initial);
  emit(j, format, t.str());
  return 0;
}

int run_generate(const ParsedNet& pn, const std::string& over,
                 const std::string& format) {
  const auto& net = pn.net;
  std::vector<Semiflow> members;
  if (over == "nat") {
    members = minimal_semiflows(net).members;
  } else if (over == "qplus") {
    members = fundamental_set(net).members;
  } else {
    members = extract_q_basis(fundamental_set(net).members);
  }
  std::vector<Support> supports;
  for (const auto& m : members) supports.push_back(Support::of(m));

  json j;
  j["domain"] = over;
  j["count"] = members.size();
  j["semiflows"] = json_vecs(members);
  j["supports"] = json_supports(supports, net);

  std::ostringstream t;
  t << "domain: " << over << "\ncount: " << members.size() << "\n";
  for (std::size_t i = 0; i < members.size(); ++i)
    t << text_vec(members[i]) << "  support " << text_support(supports[i], net)
      << "\n";
  emit(j, format, t.str());
  return 0;
}

int run_classify(const ParsedNet& pn, const std::string& set_path,
                 const std::string& format) {
  const auto& net = pn.net;
  auto vectors = load_vectors(set_path, net.place_count());
  AnalysisContext ctx(net);

  json rows = json::array();
  std::ostringstream t;
  for (const auto& v : vectors) {
    bool sf;
    try {
      sf = is_semiflow(net, v);
    } catch (const std::invalid_argument& e) {
      throw input_error(e.what());
    }
    json row;
    row["vector"] = json_vec(v);
    row["semiflow"] = sf;
    t << text_vec(v) << ": ";
    if (!sf) {
      t << "not a semiflow\n";
    } else if (is_zero(v)) {
      throw input_error("zero vector cannot be classified");
    } else {
      row["canonical"] = is_canonical(v);
      row["minimal"] = is_minimal(ctx, v);
      row["minimal_support"] = has_minimal_support(ctx, v);
      t << (row["canonical"].get<bool>() ? "canonical" : "not canonical")
        << ", " << (row["minimal"].get<bool>() ? "minimal" : "not minimal")
        << ", "
        << (row["minimal_support"].get<bool>() ? "minimal support"
                                               : "non-minimal support")
        << "\n";
    }
    rows.push_back(row);
  }
  json j;
  j["vectors"] = rows;
  emit(j, format, t.str());
  return 0;
}

int run_check_gs(const ParsedNet& pn, const std::string& set_path,
                 const std::string& over, bool paranoid,
                 const std::string& format) {
  const auto& net = pn.net;
  auto gens = load_vectors(set_path, net.place_count());
  AnalysisContext ctx(net);
  GeneratingSetReport rep;
  try {
    rep = classify_generating_set(ctx, gens, parse_domain(over),
                                  ClassifyOptions{paranoid});
  } catch (const std::invalid_argument& e) {
    throw input_error(e.what());
  }

  json j;
  j["domain"] = over;
  j["members"] = gens.size();
  j["is_generating"] = rep.is_generating;
  j["is_minimal"] = rep.is_minimal_gs;
  j["is_least"] = rep.is_least_gs;
  j["witness"] = rep.not_generated ? json_vec(*rep.not_generated) : json();
  j["removable"] = rep.removable ? json(*rep.removable) : json();
  if (paranoid) {
    j["redundant"] = rep.redundant;
    j["paranoid_disagreement"] = rep.paranoid_disagreement;
  }

  std::ostringstream t;
  t << "domain: " << over << "\n"
    << "generating: " << (rep.is_generating ? "yes" : "no") << "\n"
    << "minimal: " << (rep.is_minimal_gs ? "yes" : "no") << "\n"
    << "least: " << (rep.is_least_gs ? "yes" : "no") << "\n";
  if (rep.not_generated)
    t << "not generated: " << text_vec(*rep.not_generated) << "\n";
  if (rep.removable) t << "removable member: " << *rep.removable << "\n";
  emit(j, format, t.str());
  return rep.is_generating ? 0 : 1;
}

int run_decompose(const ParsedNet& pn, const std::string& over,
                  const std::string& target_text,
                  const std::string& set_path,
                  const std::string& order_text, const std::string& format) {
  const auto& net = pn.net;
  const int d = net.place_count();
  IntVec target = parse_coords(target_text, d, "--target");
  try {
    if (!is_semiflow(net, target))
      throw input_error("target is not a semiflow");
  } catch (const std::invalid_argument& e) {
    throw input_error(e.what());
  }

  std::vector<Semiflow> gens;
  if (!set_path.empty()) {
    gens = load_vectors(set_path, d);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (is_zero(gens[i]))
        throw input_error("generator " + std::to_string(i) +
                          " is the zero vector");
      if (!is_semiflow(net, gens[i]))
        throw input_error("generator " + std::to_string(i) +
                          " is not a semiflow");
    }
  } else if (over == "nat") {
    gens = minimal_semiflows(net).members;
  } else {
    gens = fundamental_set(net).members;
  }

  std::vector<int> order(gens.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  if (!order_text.empty()) {
    if (over != "nat")
      throw input_error("--order only applies to --over nat");
    IntVec raw = parse_coords(order_text, static_cast<int>(gens.size()),
                              "--order");
    std::vector<char> used(gens.size(), 0);
    for (std::size_t i = 0; i < raw.size(); ++i) {
      if (raw[i] >= Int(static_cast<unsigned long>(gens.size())) ||
          used[raw[i].get_ui()])
        throw input_error("--order must be a permutation of 0.." +
                          std::to_string(gens.size() - 1));
      order[i] = static_cast<int>(raw[i].get_ui());
      used[order[i]] = 1;
    }
  }

  json j;
  j["domain"] = over;
  j["target"] = json_vec(target);
  j["generators"] = json_vecs(gens);
  std::ostringstream t;
  t << "domain: " << over << "\ntarget: " << text_vec(target) << "\n";

  bool feasible;
  if (over == "nat") {
    std::vector<Semiflow> ordered;
    for (int i : order) ordered.push_back(gens[i]);
    auto greedy = greedy_decompose(target, ordered);
    std::vector<Int> greedy_coeffs(gens.size());
    for (std::size_t i = 0; i < order.size(); ++i)
      greedy_coeffs[order[i]] = greedy.coeffs[i];

    auto exact = nat_decomposable(target, gens);
    feasible = exact.has_value();

    json ord = json::array();
    for (int i : order) ord.push_back(i);
    j["order"] = ord;
    j["greedy"] = {{"coeffs", json_vec(greedy_coeffs)},
                   {"remainder", json_vec(greedy.remainder)},
                   {"exact", greedy.exact()}};
    j["feasible"] = feasible;
    j["coeffs"] = feasible ? json_vec(*exact) : json();

    t << "greedy coeffs: " << text_vec(greedy_coeffs) << "\n"
      << "greedy remainder: " << text_vec(greedy.remainder) << "\n"
      << "feasible: " << (feasible ? "yes" : "no") << "\n";
    if (feasible) t << "coeffs: " << text_vec(*exact) << "\n";
  } else {
    std::optional<RatVec> coeffs;
    if (over == "qplus")
      coeffs = in_cone(target, gens);
    else
      coeffs = solve_q(target, gens);
    feasible = coeffs.has_value();
    j["feasible"] = feasible;
    j["coeffs"] = feasible ? json_rats(*coeffs) : json();
    t << "feasible: " << (feasible ? "yes" : "no") << "\n";
    if (feasible) {
      t << "coeffs: (";
      for (std::size_t i = 0; i < coeffs->size(); ++i) {
        if (i) t << ",";
        t << (*coeffs)[i].get_str();
      }
      t << ")\n";
    }
  }
  emit(j, format, t.str());
  return feasible ? 0 : 1;
}

int run_bound(const ParsedNet& pn, const std::string& format) {
  const auto& net = pn.net;
  const auto part = merge_classes(net);
  const Int sperner = sperner_bound(net.place_count());
  const Int refined = sperner_bound(part.count());

  json classes = json::array();
  for (const auto& c : part.classes) {
    json names = json::array();
    for (int p : c) names.push_back(net.places[p]);
    classes.push_back(names);
  }
  json j;
  j["sperner"] = json_int(sperner);
  j["refined"] = json_int(refined);
  j["classes"] = classes;

  std::ostringstream t;
  t << "sperner: " << sperner.get_str() << "\nrefined: " << refined.get_str()
    << "\nclasses:";
  for (const auto& c : part.classes) {
    t << " {";
    for (std::size_t i = 0; i < c.size(); ++i)
      t << (i ? "," : "") << net.places[c[i]];
    t << "}";
  }
  t << "\n";
  emit(j, format, t.str());
  return 0;
}

int run_verify(const ParsedNet& pn, const std::string& m0_text,
               std::size_t state_cap, const std::string& format) {
  const auto& net = pn.net;
  Marking m0 = pn.initial;
  if (!m0_text.empty())
    m0 = parse_coords(m0_text, net.place_count(), "--m0");

  ReachabilityReport rep;
  try {
    rep = reach_report(net, m0, ReachOptions{state_cap, true});
  } catch (const std::invalid_argument& e) {
    throw input_error(e.what());
  }

  auto verdict = [](const std::optional<bool>& v) {
    return v ? json(*v) : json("unknown");
  };
  auto verdict_text = [](const std::optional<bool>& v) {
    return v ? (*v ? "yes" : "no") : "unknown";
  };

  json dead = json::array();
  for (int t : rep.dead_transitions) dead.push_back(net.transitions[t]);

  json j;
  j["states"] = rep.states.size();
  j["bound_hit"] = rep.bound_hit;
  j["home_state"] = verdict(rep.is_home_state);
  j["live"] = verdict(rep.is_live);
  j["dead_transitions"] = dead;
  j["invariants_hold"] = rep.invariants_hold;

  std::ostringstream t;
  t << "states: " << rep.states.size() << "\n"
    << "bound hit: " << (rep.bound_hit ? "yes" : "no") << "\n"
    << "home state: " << verdict_text(rep.is_home_state) << "\n"
    << "live: " << verdict_text(rep.is_live) << "\n"
    << "invariants hold: " << (rep.invariants_hold ? "yes" : "no") << "\n";
  emit(j, format, t.str());

  const bool negative = (rep.is_home_state && !*rep.is_home_state) ||
                        (rep.is_live && !*rep.is_live) ||
                        !rep.invariants_hold;
  return negative ? 1 : 0;
}

int run_oracle(const ParsedNet& pn, unsigned bound,
               const std::string& format) {
  const auto& net = pn.net;
  auto all = brute_semiflows(net, bound);
  auto minimal = brute_minimal_semiflows(net, bound);
  auto supports = brute_minimal_supports(net, bound);

  json j;
  j["bound"] = bound;
  j["clipped"] = all.clipped;
  j["semiflows"] = json_vecs(all.members);
  j["minimal_semiflows"] = json_vecs(minimal.members);
  j["minimal_supports"] = json_supports(supports.supports, net);

  std::ostringstream t;
  t << "bound: " << bound << "\nclipped: " << (all.clipped ? "yes" : "no")
    << "\nsemiflows: " << all.members.size()
    << "\nminimal: " << minimal.members.size() << "\n";
  for (const auto& m : minimal.members) t << text_vec(m) << "\n";
  emit(j, format, t.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact semiflow analysis for weighted place/transition nets"};
  app.require_subcommand(1);

  std::string format = "json";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "text"}));
  bool dev = false;
  app.add_flag("--dev", dev)->group("");

  std::string net_path, set_path, over, target_text, order_text, m0_text;
  bool paranoid = false;
  std::size_t state_cap = 1'000'000;
  unsigned oracle_bound = 1;

  auto add_net = [&](CLI::App* sub) {
    sub->add_option("net", net_path, "net file")->required();
    sub->fallthrough();
  };

  auto* sc_parse = app.add_subcommand("parse", "parse and echo a net file");
  add_net(sc_parse);

  auto* sc_generate =
      app.add_subcommand("generate", "compute a generating set of semiflows");
  sc_generate->add_option("--over", over, "coefficient domain")
      ->required()
      ->check(CLI::IsMember({"nat", "qplus", "q"}));
  add_net(sc_generate);

  auto* sc_classify =
      app.add_subcommand("classify", "classify individual semiflows");
  sc_classify->add_option("--set", set_path, "JSON file of coordinate arrays")
      ->required();
  add_net(sc_classify);

  auto* sc_check =
      app.add_subcommand("check-gs", "check a candidate generating set");
  sc_check->add_option("--over", over, "coefficient domain")
      ->required()
      ->check(CLI::IsMember({"nat", "qplus", "q"}));
  sc_check->add_option("--set", set_path, "JSON file of coordinate arrays")
      ->required();
  sc_check->add_flag("--paranoid", paranoid,
                     "cross-check minimality by the remove-one test");
  add_net(sc_check);

  auto* sc_decompose =
      app.add_subcommand("decompose", "decompose a semiflow over generators");
  sc_decompose->add_option("--over", over, "coefficient domain")
      ->required()
      ->check(CLI::IsMember({"nat", "qplus", "q"}));
  sc_decompose->add_option("--target", target_text, "comma-separated coords")
      ->required();
  sc_decompose->add_option("--set", set_path,
                           "generator file (default: computed set)");
  sc_decompose->add_option("--order", order_text,
                           "generator order for the greedy pass (nat only)");
  add_net(sc_decompose);

  auto* sc_bound =
      app.add_subcommand("bound", "bounds on the number of minimal supports");
  add_net(sc_bound);

  auto* sc_verify = app.add_subcommand(
      "verify", "reachability: home-state and liveness verdicts");
  sc_verify->add_option("--m0", m0_text,
                        "initial marking override (default: from net file)");
  sc_verify->add_option("--state-cap", state_cap, "exploration cap");
  add_net(sc_verify);

  auto* sc_oracle = app.add_subcommand(
      "oracle", "brute-force reference enumeration (development)");
  sc_oracle->group("");
  sc_oracle->add_option("--bound", oracle_bound, "coordinate bound")
      ->required();
  add_net(sc_oracle);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n" << app.help() << "\n";
    return 2;
  }

  try {
    const ParsedNet pn = load_net(net_path);
    if (sc_parse->parsed()) return run_parse(pn, format);
    if (sc_generate->parsed()) return run_generate(pn, over, format);
    if (sc_classify->parsed()) return run_classify(pn, set_path, format);
    if (sc_check->parsed())
      return run_check_gs(pn, set_path, over, paranoid, format);
    if (sc_decompose->parsed())
      return run_decompose(pn, over, target_text, set_path, order_text,
                           format);
    if (sc_bound->parsed()) return run_bound(pn, format);
    if (sc_verify->parsed()) return run_verify(pn, m0_text, state_cap, format);
    if (sc_oracle->parsed()) {
      if (!dev) {
        std::cerr << "oracle is a development command; pass --dev\n";
        return 2;
      }
      return run_oracle(pn, oracle_bound, format);
    }
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const resource_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
