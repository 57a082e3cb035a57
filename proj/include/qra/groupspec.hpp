#pragma once

#include "qra/action.hpp"
#include "qra/fieldlab.hpp"
#include "qra/gf2.hpp"
#include "qra/group.hpp"

#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace qra {

/// Thrown on malformed spec text; the CLI maps it to exit code 2.
struct SpecParseError : std::runtime_error {
  explicit SpecParseError(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

inline std::vector<std::string> split_lines(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

inline std::string trimmed(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

} // namespace detail

/// Generator list parsed from group spec text. Lines are either
///   perm <degree> <cycles>
///   gf2 <n> <hex rows...>        (bit k of a row value = column k)
/// with '#' comments; a bare "(...)" line continues the previous perm line's
/// kind and degree. Inline specs separate lines with ';'.
struct ParsedGenerators {
  std::vector<Perm> perms;       // empty if gf2
  std::vector<GF2Matrix> mats;   // empty if perm
  int degree = 0;                // perm degree or gf2 dimension

  bool is_gf2() const { return !mats.empty(); }
};

inline ParsedGenerators parse_generator_lines(const std::vector<std::string>& raw_lines,
                                              const std::string& where) {
  ParsedGenerators out;
  int line_no = 0;
  for (const std::string& raw : raw_lines) {
    ++line_no;
    std::string line = detail::trimmed(raw);
    if (line.empty() || line[0] == '#') continue;
    std::istringstream in(line);
    std::string head;
    in >> head;
    auto fail = [&](const std::string& msg) {
      throw SpecParseError(where + " line " + std::to_string(line_no) + ": " + msg);
    };
    if (head == "perm") {
      int degree = 0;
      if (!(in >> degree) || degree < 1) fail("expected 'perm <degree> <cycles>'");
      if (!out.mats.empty()) fail("cannot mix perm and gf2 generators");
      if (out.degree != 0 && out.degree != degree) fail("inconsistent degrees");
      out.degree = degree;
      std::string rest;
      std::getline(in, rest);
      try {
        out.perms.push_back(parse_permutation(detail::trimmed(rest), degree));
      } catch (const std::exception& e) {
        fail(e.what());
      }
    } else if (head == "gf2") {
      int n = 0;
      if (!(in >> n) || n < 1 || n > 10) fail("expected 'gf2 <n> <hex rows>' with n in 1..10");
      if (!out.perms.empty()) fail("cannot mix perm and gf2 generators");
      if (out.degree != 0 && out.degree != n) fail("inconsistent dimensions");
      out.degree = n;
      GF2Matrix m;
      m.n = n;
      for (int r = 0; r < n; ++r) {
        std::string hex;
        if (!(in >> hex)) fail("expected " + std::to_string(n) + " hex rows");
        try {
          m.rows.push_back(static_cast<std::uint32_t>(std::stoul(hex, nullptr, 16)));
        } catch (const std::exception&) {
          fail("bad hex row '" + hex + "'");
        }
        if (m.rows.back() >= (1u << n)) fail("row value exceeds " + std::to_string(n) + " bits");
      }
      if (!m.invertible()) fail("gf2 generator is singular");
      out.mats.push_back(m);
    } else if (head[0] == '(') {
      if (out.perms.empty()) fail("bare cycles need a preceding 'perm' line");
      try {
        out.perms.push_back(parse_permutation(line, out.degree));
      } catch (const std::exception& e) {
        fail(e.what());
      }
    } else {
      fail("unknown generator line '" + head + "'");
    }
  }
  if (out.perms.empty() && out.mats.empty())
    throw SpecParseError(where + ": no generators given");
  return out;
}

/// Named shorthands for common groups (natural permutation representations).
inline std::vector<std::string> named_group_lines(const std::string& name) {
  static const std::map<std::string, std::vector<std::string>> table = {
      {"S3", {"perm 3 (1 2)", "(1 2 3)"}},
      {"S4", {"perm 4 (1 2)", "(1 2 3 4)"}},
      {"S5", {"perm 5 (1 2)", "(1 2 3 4 5)"}},
      {"S6", {"perm 6 (1 2)", "(1 2 3 4 5 6)"}},
      {"S7", {"perm 7 (1 2)", "(1 2 3 4 5 6 7)"}},
      {"A4", {"perm 4 (1 2 3)", "(2 3 4)"}},
      {"A5", {"perm 5 (1 2 3 4 5)", "(3 4 5)"}},
      {"A6", {"perm 6 (1 2 3 4 5)", "(4 5 6)"}},
      {"A7", {"perm 7 (1 2 3 4 5 6 7)", "(5 6 7)"}},
      {"A8", {"perm 8 (1 2 3 4 5 6 7)", "(6 7 8)"}},
      {"A9", {"perm 9 (1 2 3 4 5 6 7 8 9)", "(7 8 9)"}},
      {"D8", {"perm 4 (1 2 3 4)", "(1 3)"}},
      {"Q8", {"perm 8 (1 3 2 4)(5 7 6 8)", "(1 5 2 6)(3 8 4 7)"}},
      {"SL2_2", {"gf2 2 3 2", "gf2 2 2 1"}},
      {"SL3_2", {"gf2 3 3 2 4", "gf2 3 4 1 2"}},
      {"SL4_2", {"gf2 4 3 2 4 8", "gf2 4 8 1 2 4"}},
  };
  auto it = table.find(name);
  if (it == table.end()) throw SpecParseError("unknown group name '" + name + "'");
  return it->second;
}

/// A group from an inline spec string: either a named shorthand or
/// ';'-separated generator lines.
inline GroupPtr parse_group(const std::string& text) {
  std::string t = detail::trimmed(text);
  if (t.empty()) throw SpecParseError("empty group spec");
  std::vector<std::string> lines;
  if (t.find("perm") == std::string::npos && t.find("gf2") == std::string::npos)
    lines = named_group_lines(t);
  else
    lines = detail::split_lines(t, ';');
  ParsedGenerators gens = parse_generator_lines(lines, "group spec");
  if (gens.is_gf2())
    return std::make_shared<ExplicitGroup>(ExplicitGroup::generate_gf2(gens.mats));
  return std::make_shared<ExplicitGroup>(ExplicitGroup::generate(gens.perms));
}

/// Action spec grammar: "natural", "cosets" (stabilizer cycles as argument),
/// "sl2-vectors:<n>" and "affine:<p>" (':' or whitespace separated).
struct ActionSpec {
  std::string kind;   // natural | cosets | sl2-vectors | affine
  int parameter = 0;  // n or p
  std::string stabilizer_cycles; // ';'-separated cycle strings for cosets
};

inline ActionSpec parse_action_spec(const std::string& text) {
  std::string t = detail::trimmed(text);
  for (char& c : t)
    if (c == ':') c = ' ';
  std::istringstream in(t);
  ActionSpec spec;
  in >> spec.kind;
  if (spec.kind == "natural" || spec.kind == "cosets") {
    std::string rest;
    std::getline(in, rest);
    spec.stabilizer_cycles = detail::trimmed(rest);
  } else if (spec.kind == "sl2-vectors" || spec.kind == "affine") {
    if (!(in >> spec.parameter)) throw SpecParseError("action '" + spec.kind + "' needs a number");
  } else {
    throw SpecParseError("unknown action kind '" + spec.kind + "'");
  }
  return spec;
}

/// Build the action described by (group spec, action spec, stabilizer).
inline TransitiveAction build_action(const ActionSpec& spec, const std::string& group_text,
                                     const std::string& stab_cycles) {
  if (spec.kind == "affine") return affine_action(spec.parameter);
  if (spec.kind == "sl2-vectors") return sl2_vector_action(spec.parameter);
  if (group_text.empty()) throw SpecParseError("action '" + spec.kind + "' needs --group");
  GroupPtr grp = parse_group(group_text);
  if (spec.kind == "natural") return natural_action(grp);
  // cosets: stabilizer generators from the action spec or --stab
  std::string cycles = !stab_cycles.empty() ? stab_cycles : spec.stabilizer_cycles;
  std::vector<int> h{0};
  if (!cycles.empty()) {
    std::vector<int> seed;
    for (const std::string& c : detail::split_lines(cycles, ';')) {
      std::string cc = detail::trimmed(c);
      if (cc.empty()) continue;
      seed.push_back(grp->index_of(parse_permutation(cc, grp->degree())));
    }
    h = grp->subgroup_closure(seed);
  }
  return coset_action(grp, h);
}

} // namespace qra
