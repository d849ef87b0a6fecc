#ifndef LGQ_FORMAT_HPP
#define LGQ_FORMAT_HPP

#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "lgq/errors.hpp"
#include "lgq/quiver.hpp"

namespace lgq {

// Line-oriented quiver text format ('#' starts a comment):
//   vertex <id>
//   arrow <id> <source> -> <target>
//   rel <arrowid> <arrowid>
//   weight <arrowid> <monomial>     e.g.  q^2*t
// Ids must be declared before use. Arrows without a weight line default to
// the generic weight x_<arrowid>.

struct ParsedQuiver {
  Quiver quiver;
  VarTable vars;
  WeightFunction weights;
};

// <monomial> := factor ('*' factor)*, factor := name ('^' exponent)?
inline Monomial parse_monomial(const std::string& text, VarTable& vars, int line = 0) {
  Monomial m;
  std::string s = text;
  if (s.empty()) throw ParseError(line, "empty monomial");
  size_t pos = 0;
  while (pos < s.size()) {
    size_t star = s.find('*', pos);
    std::string factor = s.substr(pos, star == std::string::npos ? star : star - pos);
    pos = star == std::string::npos ? s.size() : star + 1;
    if (factor.empty()) throw ParseError(line, "empty factor in monomial '" + text + "'");
    std::string name = factor;
    int exp = 1;
    size_t caret = factor.find('^');
    if (caret != std::string::npos) {
      name = factor.substr(0, caret);
      std::string expstr = factor.substr(caret + 1);
      if (name.empty() || expstr.empty() || expstr.size() > 6 ||
          expstr.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError(line, "bad exponent in monomial '" + text + "'");
      exp = std::stoi(expstr);
    }
    if (name == "1" && exp == 1) continue;  // allow explicit unit factors
    if (name.empty() || (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_'))
      throw ParseError(line, "bad indeterminate name in monomial '" + text + "'");
    m *= Monomial::variable(vars.intern(name), exp);
  }
  return m;
}

// Optional leading '-' (used by --spec substitution maps).
inline SignedMonomial parse_signed_monomial(const std::string& text, VarTable& vars,
                                            int line = 0) {
  SignedMonomial sm;
  std::string s = text;
  if (!s.empty() && s[0] == '-') {
    sm.sign = -1;
    s = s.substr(1);
  }
  sm.m = parse_monomial(s, vars, line);
  return sm;
}

inline ParsedQuiver parse_quiver_text(const std::string& text) {
  ParsedQuiver out;
  std::map<std::string, int> vertex_of, arrow_of;
  std::map<int, Monomial> explicit_weight;
  std::vector<std::pair<int, int>> seen_rel_lines;  // for duplicate detection

  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw.substr(0, raw.find('#'));
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;

    auto rest_empty = [&ls]() {
      std::string extra;
      return !(ls >> extra);
    };

    if (kw == "vertex") {
      std::string id;
      if (!(ls >> id) || !rest_empty()) throw ParseError(lineno, "expected: vertex <id>");
      if (vertex_of.count(id)) throw ParseError(lineno, "duplicate vertex id '" + id + "'");
      vertex_of[id] = out.quiver.add_vertex(id);
    } else if (kw == "arrow") {
      std::string id, src, arrow_tok, dst;
      if (!(ls >> id >> src >> arrow_tok >> dst) || arrow_tok != "->" || !rest_empty())
        throw ParseError(lineno, "expected: arrow <id> <source> -> <target>");
      if (arrow_of.count(id)) throw ParseError(lineno, "duplicate arrow id '" + id + "'");
      auto s = vertex_of.find(src);
      if (s == vertex_of.end()) throw ParseError(lineno, "unknown vertex '" + src + "'");
      auto t = vertex_of.find(dst);
      if (t == vertex_of.end()) throw ParseError(lineno, "unknown vertex '" + dst + "'");
      arrow_of[id] = out.quiver.add_arrow(id, s->second, t->second);
    } else if (kw == "rel") {
      std::string a, b;
      if (!(ls >> a >> b) || !rest_empty())
        throw ParseError(lineno, "expected: rel <arrowid> <arrowid>");
      auto ia = arrow_of.find(a);
      if (ia == arrow_of.end()) throw ParseError(lineno, "unknown arrow '" + a + "'");
      auto ib = arrow_of.find(b);
      if (ib == arrow_of.end()) throw ParseError(lineno, "unknown arrow '" + b + "'");
      const Arrow& fa = out.quiver.arrows[static_cast<size_t>(ia->second)];
      const Arrow& fb = out.quiver.arrows[static_cast<size_t>(ib->second)];
      if (fa.target != fb.source)
        throw ParseError(lineno, "relation (" + a + ", " + b + ") is not composable: target(" +
                                     a + ") != source(" + b + ")");
      auto pr = std::make_pair(ia->second, ib->second);
      for (const auto& r : seen_rel_lines)
        if (r == pr) throw ParseError(lineno, "duplicate relation (" + a + ", " + b + ")");
      seen_rel_lines.push_back(pr);
      out.quiver.add_relation(pr.first, pr.second);
    } else if (kw == "weight") {
      std::string a, mono;
      if (!(ls >> a >> mono) || !rest_empty())
        throw ParseError(lineno, "expected: weight <arrowid> <monomial>");
      auto ia = arrow_of.find(a);
      if (ia == arrow_of.end()) throw ParseError(lineno, "unknown arrow '" + a + "'");
      if (explicit_weight.count(ia->second))
        throw ParseError(lineno, "duplicate weight for arrow '" + a + "'");
      Monomial m = parse_monomial(mono, out.vars, lineno);
      if (m.degree() == 0)
        throw ParseError(lineno, "arrow weight must be nonconstant");
      explicit_weight[ia->second] = m;
    } else {
      throw ParseError(lineno, "unknown keyword '" + kw + "'");
    }
  }

  out.weights.arrow_weight.resize(out.quiver.arrows.size());
  for (size_t i = 0; i < out.quiver.arrows.size(); ++i) {
    auto it = explicit_weight.find(static_cast<int>(i));
    if (it != explicit_weight.end())
      out.weights.arrow_weight[i] = it->second;
    else
      out.weights.arrow_weight[i] =
          Monomial::variable(out.vars.intern("x_" + out.quiver.arrows[i].id));
  }
  return out;
}

inline ParsedQuiver load_quiver_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error("cannot open file '" + path + "'");
  std::ostringstream buf;
  buf << f.rdbuf();
  return parse_quiver_text(buf.str());
}

inline std::string serialize_quiver(const Quiver& q, const WeightFunction& w,
                                    const VarTable& vars) {
  std::ostringstream out;
  for (const auto& v : q.vertices) out << "vertex " << v << "\n";
  for (const auto& a : q.arrows)
    out << "arrow " << a.id << " " << q.vertices[static_cast<size_t>(a.source)] << " -> "
        << q.vertices[static_cast<size_t>(a.target)] << "\n";
  for (const auto& [a, b] : q.relations)
    out << "rel " << q.arrows[static_cast<size_t>(a)].id << " "
        << q.arrows[static_cast<size_t>(b)].id << "\n";
  for (size_t i = 0; i < q.arrows.size(); ++i)
    out << "weight " << q.arrows[i].id << " " << w.arrow_weight[i].to_string(vars) << "\n";
  return out.str();
}

}  // namespace lgq

#endif
