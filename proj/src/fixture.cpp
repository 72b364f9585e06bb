#include "curvelink/fixture.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

namespace curvelink::fixture {

std::string code_name(ErrorCode code) {
  switch (code) {
  case ErrorCode::Syntax: return "E1 syntax";
  case ErrorCode::UnknownKey: return "E2 unknown-key";
  case ErrorCode::Duplicate: return "E3 duplicate";
  case ErrorCode::DanglingReference: return "E4 dangling-reference";
  case ErrorCode::StrandCount: return "E5 strand-count";
  case ErrorCode::Invalid: return "E6 invalid";
  }
  return "E0 unknown";
}

namespace {

std::string format_error(ErrorCode code, int line, int column, const std::string& message, const std::string& file) {
  std::ostringstream os;
  if (!file.empty()) os << file << ':';
  os << line << ':' << column << ": error[" << code_name(code) << "]: " << message;
  return os.str();
}

} // namespace

FixtureError::FixtureError(ErrorCode code, int line, int column, const std::string& message, const std::string& file)
    : InvalidArgument(format_error(code, line, column, message, file)), code_(code), line_(line), column_(column),
      message_(message), file_(file) {}

const curve::CycleSpec& FixtureDocument::cycle(const std::string& name) const {
  for (const auto& c : cycles)
    if (c.name == name) return c;
  throw InvalidArgument("no cycle named '" + name + "'");
}

std::vector<std::string> FixtureDocument::cycle_names() const {
  std::vector<std::string> out;
  for (const auto& c : cycles) out.push_back(c.name);
  return out;
}

namespace {

struct Field {
  std::string key;
  std::string value;
  int key_col;
  int value_col;
};

struct Entry {
  int line;
  std::string name;
  int name_col;
  std::vector<Field> fields;

  const Field* find(std::string_view key) const {
    for (const auto& f : fields)
      if (f.key == key) return &f;
    return nullptr;
  }
};

struct Section {
  int line = 0;
  std::vector<Entry> entries;
};

const std::vector<std::string> kSections = {"components", "points", "cycles", "braids", "rho"};

bool valid_name(std::string_view s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](char ch) {
    return (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') || (ch >= '0' && ch <= '9') || ch == '_' ||
           ch == '-' || ch == '.' || ch == '[' || ch == ']' || ch == '\'';
  });
}

std::int64_t parse_int(std::string_view s, int line, int col) {
  std::int64_t v = 0;
  const char* first = s.data();
  if (!s.empty() && s.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw FixtureError(ErrorCode::Syntax, line, col, "expected an integer, got '" + std::string(s) + "'");
  return v;
}

/// Pieces of a comma-separated value with their columns.
std::vector<std::pair<std::string, int>> split_list(const std::string& value, int col) {
  std::vector<std::pair<std::string, int>> out;
  if (value.empty()) return out;
  std::size_t start = 0;
  while (true) {
    auto comma = value.find(',', start);
    const auto end = comma == std::string::npos ? value.size() : comma;
    out.emplace_back(value.substr(start, end - start), col + static_cast<int>(start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  FixtureDocument run() {
    lex();
    FixtureDocument doc;
    doc.metadata = std::move(metadata_);
    if (!sections_.contains("components") || sections_["components"].entries.empty())
      throw FixtureError(ErrorCode::Syntax, last_line_, 1, "document declares no components");
    doc.curve = build_curve();
    doc.realizations = build_realizations(doc.curve);
    doc.cycles = build_cycles(doc.curve, doc.realizations);
    return doc;
  }

private:
  void lex() {
    std::string current;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text_.size()) {
      auto nl = text_.find('\n', pos);
      if (nl == std::string_view::npos) nl = text_.size();
      std::string_view line = text_.substr(pos, nl - pos);
      pos = nl + 1;
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      if (line.find_first_not_of(" \t") == std::string_view::npos) {
        if (pos > text_.size()) break;
        continue;
      }
      last_line_ = line_no;
      const auto first = line.find_first_not_of(" \t");
      const int indent = static_cast<int>(first) + 1;
      if (line[first] == '#') {
        std::string_view body = line.substr(first + 1);
        if (!body.empty() && body.front() == ' ') body.remove_prefix(1);
        metadata_.emplace_back(body);
        continue;
      }
      if (line[first] == '[') {
        const auto close = line.find(']', first);
        if (close == std::string_view::npos)
          throw FixtureError(ErrorCode::Syntax, line_no, indent, "unterminated section header");
        if (line.find_first_not_of(" \t", close + 1) != std::string_view::npos)
          throw FixtureError(ErrorCode::Syntax, line_no, static_cast<int>(close) + 2,
                             "unexpected text after section header");
        current = std::string(line.substr(first + 1, close - first - 1));
        if (std::find(kSections.begin(), kSections.end(), current) == kSections.end())
          throw FixtureError(ErrorCode::UnknownKey, line_no, indent + 1, "unknown section '" + current + "'");
        if (sections_.contains(current))
          throw FixtureError(ErrorCode::Duplicate, line_no, indent, "section [" + current + "] appears twice");
        sections_[current].line = line_no;
        continue;
      }
      if (current.empty())
        throw FixtureError(ErrorCode::Syntax, line_no, indent, "entry outside of any section");
      sections_[current].entries.push_back(lex_entry(line, line_no));
      if (pos > text_.size()) break;
    }
  }

  static Entry lex_entry(std::string_view line, int line_no) {
    Entry e{line_no, {}, 0, {}};
    std::size_t i = 0;
    bool first = true;
    while (true) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
      if (i >= line.size()) break;
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
      std::string_view tok = line.substr(i, j - i);
      const int col = static_cast<int>(i) + 1;
      if (tok.front() == '#') throw FixtureError(ErrorCode::Syntax, line_no, col, "comments must be on their own line");
      const auto eq = tok.find('=');
      if (first) {
        if (eq != std::string_view::npos || !valid_name(tok))
          throw FixtureError(ErrorCode::Syntax, line_no, col, "expected an entry name, got '" + std::string(tok) + "'");
        e.name = std::string(tok);
        e.name_col = col;
        first = false;
      } else {
        if (eq == std::string_view::npos || eq == 0)
          throw FixtureError(ErrorCode::Syntax, line_no, col, "expected key=value, got '" + std::string(tok) + "'");
        Field f{std::string(tok.substr(0, eq)), std::string(tok.substr(eq + 1)), col, col + static_cast<int>(eq) + 1};
        if (e.find(f.key)) throw FixtureError(ErrorCode::Duplicate, line_no, col, "key '" + f.key + "' given twice");
        e.fields.push_back(std::move(f));
      }
      i = j;
    }
    return e;
  }

  static void allow_keys(const Entry& e, std::initializer_list<std::string_view> keys, std::string_view prefix = {}) {
    for (const auto& f : e.fields) {
      const bool known = std::find(keys.begin(), keys.end(), f.key) != keys.end() ||
                         (!prefix.empty() && f.key.starts_with(prefix) && f.key.size() > prefix.size());
      if (!known) throw FixtureError(ErrorCode::UnknownKey, e.line, f.key_col, "unknown key '" + f.key + "'");
    }
  }

  static const Field& require(const Entry& e, std::string_view key) {
    if (const auto* f = e.find(key)) return *f;
    throw FixtureError(ErrorCode::Syntax, e.line, e.name_col, "entry '" + e.name + "' needs " + std::string(key) + "=");
  }

  void claim_id(const Entry& e) {
    if (!ids_.insert(e.name).second)
      throw FixtureError(ErrorCode::Duplicate, e.line, e.name_col, "identifier '" + e.name + "' is already used");
  }

  curve::CurveCombinatorics build_curve() {
    std::vector<curve::Component> comps;
    std::set<std::string> comp_ids;
    for (const auto& e : sections_["components"].entries) {
      allow_keys(e, {"degree", "genus", "meridian"});
      claim_id(e);
      comp_ids.insert(e.name);
      curve::Component c;
      c.id = e.name;
      const auto& deg = require(e, "degree");
      c.degree = static_cast<int>(parse_int(deg.value, e.line, deg.value_col));
      if (c.degree < 1) throw FixtureError(ErrorCode::Invalid, e.line, deg.value_col, "degree must be at least 1");
      if (const auto* g = e.find("genus")) {
        c.genus = static_cast<int>(parse_int(g->value, e.line, g->value_col));
        if (c.genus < 0) throw FixtureError(ErrorCode::Invalid, e.line, g->value_col, "genus must be nonnegative");
      }
      if (const auto* m = e.find("meridian")) {
        if (!valid_name(m->value))
          throw FixtureError(ErrorCode::Syntax, e.line, m->value_col, "bad meridian name '" + m->value + "'");
        c.meridian = m->value;
      }
      comps.push_back(std::move(c));
    }

    std::vector<curve::SingularPoint> pts;
    for (const auto& e : sections_["points"].entries) {
      allow_keys(e, {"on", "lk"});
      claim_id(e);
      curve::SingularPoint p;
      p.id = e.name;
      const auto& on = require(e, "on");
      std::set<std::string> seen;
      for (const auto& [id, col] : split_list(on.value, on.value_col)) {
        if (!comp_ids.contains(id))
          throw FixtureError(ErrorCode::DanglingReference, e.line, col, "unknown component '" + id + "'");
        if (!seen.insert(id).second)
          throw FixtureError(ErrorCode::Duplicate, e.line, col, "component '" + id + "' listed twice");
        p.incident.push_back(id);
      }
      if (p.incident.empty()) throw FixtureError(ErrorCode::Syntax, e.line, on.value_col, "point lies on no component");

      std::optional<int> uniform;
      std::map<std::pair<std::string, std::string>, int> explicit_lk;
      if (const auto* lk = e.find("lk")) {
        if (lk->value.find(':') == std::string::npos) {
          uniform = static_cast<int>(parse_int(lk->value, e.line, lk->value_col));
        } else {
          for (const auto& [item, col] : split_list(lk->value, lk->value_col)) {
            const auto colon = item.find(':');
            const auto slash = item.find('/');
            if (colon == std::string::npos || slash == std::string::npos || slash > colon)
              throw FixtureError(ErrorCode::Syntax, e.line, col, "expected A/B:n, got '" + item + "'");
            const std::string a = item.substr(0, slash);
            const std::string b = item.substr(slash + 1, colon - slash - 1);
            for (const auto& x : {a, b})
              if (!seen.contains(x))
                throw FixtureError(ErrorCode::DanglingReference, e.line, col,
                                   "'" + x + "' is not listed in on= of point '" + e.name + "'");
            if (a == b) throw FixtureError(ErrorCode::Invalid, e.line, col, "linking pair needs two components");
            const auto key = curve::ordered_pair(a, b);
            if (explicit_lk.contains(key))
              throw FixtureError(ErrorCode::Duplicate, e.line, col, "pair " + a + "/" + b + " given twice");
            explicit_lk[key] = static_cast<int>(parse_int(item.substr(colon + 1), e.line, col + static_cast<int>(colon) + 1));
          }
        }
      }
      for (std::size_t i = 0; i < p.incident.size(); ++i)
        for (std::size_t j = i + 1; j < p.incident.size(); ++j) {
          const auto key = curve::ordered_pair(p.incident[i], p.incident[j]);
          auto it = explicit_lk.find(key);
          p.local_linking[key] = it != explicit_lk.end() ? it->second : uniform.value_or(1);
        }
      for (const auto& [key, v] : p.local_linking)
        if (v < 1) throw FixtureError(ErrorCode::Invalid, e.line, e.find("lk")->value_col, "local linking numbers must be positive");
      pts.push_back(std::move(p));
    }
    try {
      return curve::CurveCombinatorics(std::move(comps), std::move(pts));
    } catch (const InvalidArgument& ex) {
      throw FixtureError(ErrorCode::Invalid, sections_["components"].line, 1, ex.what());
    }
  }

  static braid::Label parse_label(const Field& f, int line, const curve::CurveCombinatorics& c) {
    if (f.value == "cycle") return braid::CycleLabel{};
    if (f.value == "dropped") return braid::DroppedLabel{};
    if (!c.component_index(f.value))
      throw FixtureError(ErrorCode::DanglingReference, line, f.value_col, "unknown component '" + f.value + "'");
    return f.value;
  }

  std::map<std::string, curve::Realization> build_realizations(const curve::CurveCombinatorics& c) {
    struct PendingBraid {
      const Entry* entry;
      braid::BraidWord word;
    };
    std::map<std::string, PendingBraid> braids;
    std::map<std::string, curve::Realization> out;
    std::set<std::string> names;

    for (const auto& e : sections_["braids"].entries) {
      allow_keys(e, {"strands", "word", "class"});
      if (!names.insert(e.name).second)
        throw FixtureError(ErrorCode::Duplicate, e.line, e.name_col, "realization '" + e.name + "' defined twice");
      if (const auto* cls = e.find("class")) {
        if (e.find("strands") || e.find("word"))
          throw FixtureError(ErrorCode::Syntax, e.line, cls->key_col, "class= cannot be combined with a braid word");
        curve::DirectClass d;
        for (const auto& [item, col] : split_list(cls->value, cls->value_col)) {
          const auto colon = item.find(':');
          if (colon == std::string::npos)
            throw FixtureError(ErrorCode::Syntax, e.line, col, "expected component:coefficient, got '" + item + "'");
          const std::string id = item.substr(0, colon);
          if (!c.component_index(id))
            throw FixtureError(ErrorCode::DanglingReference, e.line, col, "unknown component '" + id + "'");
          if (d.coefficients.contains(id))
            throw FixtureError(ErrorCode::Duplicate, e.line, col, "component '" + id + "' given twice");
          d.coefficients[id] = parse_int(item.substr(colon + 1), e.line, col + static_cast<int>(colon) + 1);
        }
        out.emplace(e.name, std::move(d));
        continue;
      }
      const auto& strands_f = require(e, "strands");
      const auto strands = parse_int(strands_f.value, e.line, strands_f.value_col);
      if (strands < 1 || strands > 1000)
        throw FixtureError(ErrorCode::StrandCount, e.line, strands_f.value_col, "strand count out of range");
      const auto& word_f = require(e, "word");
      std::vector<int> letters;
      for (const auto& [item, col] : split_list(word_f.value, word_f.value_col)) {
        const auto v = parse_int(item, e.line, col);
        if (v == 0 || v >= strands || v <= -strands)
          throw FixtureError(ErrorCode::StrandCount, e.line, col,
                             "generator " + item + " does not exist on " + std::to_string(strands) + " strands");
        letters.push_back(static_cast<int>(v));
      }
      braids.emplace(e.name, PendingBraid{&e, braid::BraidWord::from_signed(static_cast<int>(strands), letters)});
    }

    std::set<std::string> labeled;
    for (const auto& e : sections_["rho"].entries) {
      auto it = braids.find(e.name);
      if (it == braids.end())
        throw FixtureError(ErrorCode::DanglingReference, e.line, e.name_col, "no braid named '" + e.name + "'");
      if (!labeled.insert(e.name).second)
        throw FixtureError(ErrorCode::Duplicate, e.line, e.name_col, "braid '" + e.name + "' labeled twice");
      const auto& word = it->second.word;
      const auto partition = braid::closure_components(word);
      std::map<int, braid::Label> assignment;
      for (const auto& f : e.fields) {
        if (f.key.size() < 2 || f.key.front() != 's')
          throw FixtureError(ErrorCode::UnknownKey, e.line, f.key_col, "expected a strand key s<k>, got '" + f.key + "'");
        const auto k = parse_int(std::string_view(f.key).substr(1), e.line, f.key_col + 1);
        if (k < 1 || k > word.strand_count())
          throw FixtureError(ErrorCode::StrandCount, e.line, f.key_col,
                             "strand " + f.key + " does not exist on " + std::to_string(word.strand_count()) + " strands");
        const int id = static_cast<int>(k);
        if (!partition.has_component(id))
          throw FixtureError(ErrorCode::StrandCount, e.line, f.key_col,
                             f.key + " is not the first strand of its closure component; label s" +
                                 std::to_string(partition.component_of[id - 1]) + " instead");
        assignment[id] = parse_label(f, e.line, c);
      }
      for (int id : partition.component_ids())
        if (!assignment.contains(id))
          throw FixtureError(ErrorCode::StrandCount, e.line, e.name_col,
                             "closure component s" + std::to_string(id) + " of '" + e.name + "' has no label");
      int cycles = 0;
      for (const auto& [id, l] : assignment) cycles += std::holds_alternative<braid::CycleLabel>(l) ? 1 : 0;
      if (cycles != 1)
        throw FixtureError(ErrorCode::Invalid, e.line, e.name_col, "exactly one closure component must be the cycle");
      out.emplace(e.name, curve::BraidRealization{word, braid::StrandLabeling(std::move(assignment))});
    }
    for (const auto& [name, pending] : braids)
      if (!labeled.contains(name))
        throw FixtureError(ErrorCode::DanglingReference, pending.entry->line, pending.entry->name_col,
                           "braid '" + name + "' has no [rho] entry");
    return out;
  }

  std::vector<curve::CycleSpec> build_cycles(const curve::CurveCombinatorics& c,
                                             const std::map<std::string, curve::Realization>& realizations) {
    std::vector<curve::CycleSpec> out;
    std::set<std::string> names;
    for (const auto& e : sections_["cycles"].entries) {
      allow_keys(e, {"walk", "support", "class"}, "basis.");
      if (!names.insert(e.name).second)
        throw FixtureError(ErrorCode::Duplicate, e.line, e.name_col, "cycle '" + e.name + "' defined twice");
      curve::CycleSpec spec;
      spec.name = e.name;

      const auto& walk_f = require(e, "walk");
      std::vector<std::string> walk;
      for (const auto& [id, col] : split_list(walk_f.value, walk_f.value_col)) {
        if (!c.component_index(id) && !c.point_index(id))
          throw FixtureError(ErrorCode::DanglingReference, e.line, col, "unknown vertex '" + id + "'");
        walk.push_back(id);
      }
      try {
        spec.projection = curve::make_walk(c, walk);
      } catch (const InvalidArgument& ex) {
        throw FixtureError(ErrorCode::Invalid, e.line, walk_f.value_col, ex.what());
      }

      if (const auto* sup = e.find("support")) {
        for (const auto& [id, col] : split_list(sup->value, sup->value_col)) {
          if (!c.component_index(id))
            throw FixtureError(ErrorCode::DanglingReference, e.line, col, "unknown component '" + id + "'");
          spec.internal_support.push_back(id);
        }
      } else {
        for (const auto& v : spec.projection.vertices)
          if (v.kind == curve::Vertex::Kind::Component) {
            const auto& id = c.components()[v.index].id;
            if (std::find(spec.internal_support.begin(), spec.internal_support.end(), id) == spec.internal_support.end())
              spec.internal_support.push_back(id);
          }
      }

      for (const auto& f : e.fields) {
        if (!f.key.starts_with("basis.")) continue;
        const std::string comp = f.key.substr(6);
        if (!c.component_index(comp))
          throw FixtureError(ErrorCode::DanglingReference, e.line, f.key_col + 6, "unknown component '" + comp + "'");
        std::vector<std::string> basis;
        for (const auto& [name, col] : split_list(f.value, f.value_col)) {
          if (!realizations.contains(name))
            throw FixtureError(ErrorCode::DanglingReference, e.line, col, "no braid or class named '" + name + "'");
          basis.push_back(name);
        }
        spec.genus_basis.emplace_back(comp, std::move(basis));
      }
      if (const auto* cls = e.find("class")) {
        if (!realizations.contains(cls->value))
          throw FixtureError(ErrorCode::DanglingReference, e.line, cls->value_col,
                             "no braid or class named '" + cls->value + "'");
        spec.own_class = cls->value;
      }
      spec.realizations = realizations;
      try {
        curve::validate_cycle(spec, c);
      } catch (const InvalidArgument& ex) {
        throw FixtureError(ErrorCode::Invalid, e.line, e.name_col, ex.what());
      }
      out.push_back(std::move(spec));
    }
    return out;
  }

  std::string_view text_;
  std::vector<std::string> metadata_;
  std::map<std::string, Section> sections_;
  std::set<std::string> ids_;
  int last_line_ = 1;
};

std::string join(const std::vector<std::string>& items, char sep = ',') {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

} // namespace

FixtureDocument parse_fixture(std::string_view text) { return Parser(text).run(); }

FixtureDocument load_fixture(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_fixture(buf.str());
  } catch (const FixtureError& e) {
    throw FixtureError(e.code(), e.line(), e.column(), e.message(), path.string());
  }
}

std::string serialize_fixture(const FixtureDocument& doc) {
  std::ostringstream os;
  for (const auto& m : doc.metadata) os << '#' << (m.empty() ? "" : " ") << m << '\n';
  if (!doc.metadata.empty()) os << '\n';

  os << "[components]\n";
  for (const auto& c : doc.curve.components()) {
    os << c.id << " degree=" << c.degree << " genus=" << c.genus;
    if (c.meridian != "x[" + c.id + "]") os << " meridian=" << c.meridian;
    os << '\n';
  }

  if (!doc.curve.points().empty()) {
    os << "\n[points]\n";
    for (const auto& p : doc.curve.points()) {
      os << p.id << " on=" << join(p.incident);
      std::set<int> values;
      for (const auto& [pair, lk] : p.local_linking) values.insert(lk);
      if (values.size() == 1 && *values.begin() != 1) {
        os << " lk=" << *values.begin();
      } else if (values.size() > 1) {
        std::vector<std::string> items;
        for (const auto& [pair, lk] : p.local_linking)
          items.push_back(pair.first + "/" + pair.second + ":" + std::to_string(lk));
        os << " lk=" << join(items);
      }
      os << '\n';
    }
  }

  if (!doc.cycles.empty()) {
    os << "\n[cycles]\n";
    for (const auto& c : doc.cycles) {
      os << c.name << " walk=" << join(curve::walk_ids(doc.curve, c.projection))
         << " support=" << join(c.internal_support);
      for (const auto& [comp, basis] : c.genus_basis) os << " basis." << comp << '=' << join(basis);
      if (c.own_class) os << " class=" << *c.own_class;
      os << '\n';
    }
  }

  if (!doc.realizations.empty()) {
    os << "\n[braids]\n";
    for (const auto& [name, r] : doc.realizations) {
      os << name;
      if (const auto* b = std::get_if<curve::BraidRealization>(&r)) {
        std::vector<std::string> letters;
        for (int v : b->word.signed_indices()) letters.push_back(std::to_string(v));
        os << " strands=" << b->word.strand_count() << " word=" << join(letters);
      } else {
        std::vector<std::string> items;
        for (const auto& [id, k] : std::get<curve::DirectClass>(r).coefficients)
          items.push_back(id + ":" + std::to_string(k));
        os << " class=" << join(items);
      }
      os << '\n';
    }
    bool header = false;
    for (const auto& [name, r] : doc.realizations) {
      const auto* b = std::get_if<curve::BraidRealization>(&r);
      if (b == nullptr) continue;
      if (!header) os << "\n[rho]\n";
      header = true;
      os << name;
      for (const auto& [id, label] : b->labeling.assignment()) os << " s" << id << '=' << braid::label_to_string(label);
      os << '\n';
    }
  }
  return os.str();
}

} // namespace curvelink::fixture
