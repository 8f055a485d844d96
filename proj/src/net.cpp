#include "semiflow/net.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace semiflow {

int PetriNet::place_index(const std::string& id) const {
  auto it = std::find(places.begin(), places.end(), id);
  return it == places.end() ? -1 : static_cast<int>(it - places.begin());
}

IntVec PetriNet::incidence_row(int p) const {
  IntVec row(transition_count());
  for (int t = 0; t < transition_count(); ++t) row[t] = post[p][t] - pre[p][t];
  return row;
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) out.push_back(std::move(cur)), cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

// Non-negative integer literal; anything else (sign, dot, junk) is rejected.
Int parse_nat(const std::string& s, int line, const std::string& what) {
  if (s.empty()) throw parse_error(line, "empty " + what);
  if (s[0] == '-' || s[0] == '+')
    throw parse_error(line, what + " must be a non-negative integer: " + s);
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw parse_error(line, what + " must be a non-negative integer: " + s);
  return Int(s);
}

bool looks_numeric(const std::string& s) {
  return !s.empty() &&
         (std::isdigit(static_cast<unsigned char>(s[0])) || s[0] == '-' ||
          s[0] == '+');
}

struct ArcSpec {
  std::string place;
  Int weight;
};

// "pid" or "pid:w". A bare numeric token cannot be a place id.
ArcSpec parse_arc(const std::string& tok, int line) {
  auto colon = tok.find(':');
  if (colon == std::string::npos) return {tok, Int(1)};
  std::string pid = tok.substr(0, colon);
  std::string w = tok.substr(colon + 1);
  if (pid.empty()) throw parse_error(line, "missing place before ':' in arc");
  return {pid, parse_nat(w, line, "arc weight")};
}

}  // namespace

ParsedNet parse_net(std::istream& in) {
  PetriNet net;
  Marking initial;
  std::unordered_map<std::string, int> place_of;
  std::unordered_map<std::string, int> trans_of;
  std::string line;
  int lineno = 0;

  auto declare = [&](const std::string& id, int ln) {
    if (place_of.count(id) || trans_of.count(id))
      throw parse_error(ln, "duplicate identifier: " + id);
  };

  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokenize(line);
    if (toks.empty()) continue;

    if (toks[0] == "place") {
      if (toks.size() < 2) throw parse_error(lineno, "place needs a name");
      declare(toks[1], lineno);
      if (toks.size() > 3)
        throw parse_error(lineno, "trailing tokens after place declaration");
      place_of[toks[1]] = static_cast<int>(net.places.size());
      net.places.push_back(toks[1]);
      net.pre.emplace_back(net.transitions.size(), Int(0));
      net.post.emplace_back(net.transitions.size(), Int(0));
      initial.push_back(toks.size() == 3
                            ? parse_nat(toks[2], lineno, "initial marking")
                            : Int(0));
    } else if (toks[0] == "trans") {
      if (toks.size() < 2) throw parse_error(lineno, "trans needs a name");
      declare(toks[1], lineno);
      trans_of[toks[1]] = static_cast<int>(net.transitions.size());
      net.transitions.push_back(toks[1]);
      for (auto& row : net.pre) row.emplace_back(0);
      for (auto& row : net.post) row.emplace_back(0);
      const int t = static_cast<int>(net.transitions.size()) - 1;

      enum { none, in_list, out_list } mode = none;
      for (std::size_t i = 2; i < toks.size(); ++i) {
        if (toks[i] == "in") {
          mode = in_list;
        } else if (toks[i] == "out") {
          mode = out_list;
        } else {
          if (mode == none)
            throw parse_error(lineno, "expected 'in' or 'out' before arcs");
          if (looks_numeric(toks[i]))
            throw parse_error(lineno, "expected place name, got: " + toks[i]);
          ArcSpec arc = parse_arc(toks[i], lineno);
          auto it = place_of.find(arc.place);
          if (it == place_of.end())
            throw parse_error(lineno, "unknown place: " + arc.place);
          auto& mat = (mode == in_list) ? net.pre : net.post;
          mat[it->second][t] += arc.weight;  // repeated arcs accumulate
        }
      }
    } else {
      throw parse_error(lineno, "unknown directive: " + toks[0]);
    }
  }

  if (net.places.empty()) throw parse_error(lineno, "empty place set");
  return {std::move(net), std::move(initial)};
}

ParsedNet parse_net(const std::string& text) {
  std::istringstream in(text);
  return parse_net(in);
}

std::string render_net(const PetriNet& net, const Marking& initial) {
  std::ostringstream os;
  for (int p = 0; p < net.place_count(); ++p) {
    os << "place " << net.places[p];
    if (p < static_cast<int>(initial.size()) && initial[p] != 0)
      os << ' ' << initial[p].get_str();
    os << '\n';
  }
  for (int t = 0; t < net.transition_count(); ++t) {
    os << "trans " << net.transitions[t];
    bool any_in = false, any_out = false;
    for (int p = 0; p < net.place_count(); ++p)
      if (net.pre[p][t] != 0) any_in = true;
    for (int p = 0; p < net.place_count(); ++p)
      if (net.post[p][t] != 0) any_out = true;
    if (any_in) {
      os << " in";
      for (int p = 0; p < net.place_count(); ++p)
        if (net.pre[p][t] != 0)
          os << ' ' << net.places[p] << ':' << net.pre[p][t].get_str();
    }
    if (any_out) {
      os << " out";
      for (int p = 0; p < net.place_count(); ++p)
        if (net.post[p][t] != 0)
          os << ' ' << net.places[p] << ':' << net.post[p][t].get_str();
    }
    os << '\n';
  }
  return os.str();
}

bool is_enabled(const PetriNet& net, const Marking& m, int t) {
  if (t < 0 || t >= net.transition_count())
    throw std::out_of_range("transition index out of range");
  if (static_cast<int>(m.size()) != net.place_count())
    throw std::invalid_argument("marking length does not match net");
  for (int p = 0; p < net.place_count(); ++p)
    if (m[p] < net.pre[p][t]) return false;
  return true;
}

std::vector<int> enabled(const PetriNet& net, const Marking& m) {
  std::vector<int> out;
  for (int t = 0; t < net.transition_count(); ++t)
    if (is_enabled(net, m, t)) out.push_back(t);
  return out;
}

Marking fire(const PetriNet& net, const Marking& m, int t) {
  if (!is_enabled(net, m, t))
    throw std::invalid_argument("transition not enabled: " +
                                net.transitions[t]);
  Marking next(m);
  for (int p = 0; p < net.place_count(); ++p)
    next[p] += net.post[p][t] - net.pre[p][t];
  return next;
}

}  // namespace semiflow
