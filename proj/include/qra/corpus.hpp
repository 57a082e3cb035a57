#pragma once

#include "qra/convolution.hpp"
#include "qra/groupspec.hpp"
#include "qra/isotypic.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace qra {

/// One bundled action: a name, generator lines, and an action line.
struct CorpusEntry {
  std::string name;
  std::vector<std::string> group_lines;
  std::string action_line;
};

/// Corpus text format: `entry <name>` ... `end` blocks holding generator
/// lines (group spec grammar) and one `action ...` line; '#' comments.
inline std::vector<CorpusEntry> parse_corpus(std::istream& in, const std::string& where) {
  std::vector<CorpusEntry> entries;
  std::string line;
  int line_no = 0;
  CorpusEntry current;
  bool open = false;
  auto fail = [&](const std::string& msg) {
    throw SpecParseError(where + " line " + std::to_string(line_no) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::string t = detail::trimmed(line);
    if (t.empty() || t[0] == '#') continue;
    std::istringstream ls(t);
    std::string head;
    ls >> head;
    if (head == "entry") {
      if (open) fail("nested 'entry'");
      open = true;
      current = CorpusEntry{};
      if (!(ls >> current.name)) fail("entry needs a name");
    } else if (head == "end") {
      if (!open) fail("'end' without 'entry'");
      if (current.action_line.empty()) fail("entry '" + current.name + "' has no action line");
      entries.push_back(current);
      open = false;
    } else if (head == "action") {
      if (!open) fail("'action' outside an entry");
      std::string rest;
      std::getline(ls, rest);
      current.action_line = detail::trimmed(rest);
    } else if (open) {
      current.group_lines.push_back(t);
    } else {
      fail("content outside an entry");
    }
  }
  if (open) throw SpecParseError(where + ": unterminated entry '" + current.name + "'");
  if (entries.empty()) throw SpecParseError(where + ": no entries");
  return entries;
}

inline std::vector<CorpusEntry> load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecParseError("cannot open corpus file '" + path + "'");
  return parse_corpus(in, path);
}

inline std::string default_corpus_path() {
  if (const char* env = std::getenv("QRA_CORPUS")) return env;
#ifdef QRA_BUNDLED_CORPUS
  return QRA_BUNDLED_CORPUS;
#else
  return "share/corpus.qra";
#endif
}

/// A corpus entry realized: the action plus every cached derived structure
/// the suites need.
struct PreparedAction {
  std::string name;
  TransitiveAction action;
  ActionAnalysis analysis;
  CosetTables tables;
  bool two_transitive = false;
};

inline TransitiveAction realize_entry(const CorpusEntry& e) {
  ActionSpec spec = parse_action_spec(e.action_line);
  std::string group_text;
  for (const std::string& l : e.group_lines) {
    if (!group_text.empty()) group_text += ';';
    group_text += l;
  }
  TransitiveAction act = build_action(spec, group_text, "");
  act.name = e.name;
  return act;
}

/// Lazy shared store of prepared actions; single-threaded preparation,
/// read-only afterwards.
class CorpusCache {
public:
  explicit CorpusCache(std::vector<CorpusEntry> entries) : entries_(std::move(entries)) {}

  const std::vector<CorpusEntry>& entries() const { return entries_; }

  const PreparedAction& prepared(size_t index) {
    if (index >= entries_.size()) throw std::out_of_range("corpus index");
    auto it = cache_.find(index);
    if (it != cache_.end()) return *it->second;
    auto p = std::make_unique<PreparedAction>();
    p->name = entries_[index].name;
    p->action = realize_entry(entries_[index]);
    p->analysis = analyze_action(p->action);
    if (p->action.has_explicit_group()) p->tables = build_coset_tables(p->action);
    p->two_transitive = p->analysis.orbitals.count == 2;
    return *cache_.emplace(index, std::move(p)).first->second;
  }

private:
  std::vector<CorpusEntry> entries_;
  std::map<size_t, std::unique_ptr<PreparedAction>> cache_;
};

} // namespace qra
