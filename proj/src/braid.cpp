#include "curvelink/braid.hpp"

#include "curvelink/checked.hpp"
#include "curvelink/error.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace curvelink::braid {

BraidWord::BraidWord(int strand_count, std::vector<Letter> letters)
    : strands_(strand_count), letters_(std::move(letters)) {
  if (strands_ < 1) throw InvalidArgument("braid needs at least one strand");
  for (const auto& l : letters_) {
    if (l.index < 1 || l.index >= strands_) {
      std::ostringstream os;
      os << "generator sigma_" << l.index << " out of range for " << strands_ << " strands";
      throw InvalidArgument(os.str());
    }
    if (l.sign != 1 && l.sign != -1) throw InvalidArgument("letter sign must be +1 or -1");
  }
}

BraidWord BraidWord::from_signed(int strand_count, const std::vector<int>& signed_indices) {
  std::vector<Letter> letters;
  letters.reserve(signed_indices.size());
  for (int s : signed_indices) {
    if (s == 0) throw InvalidArgument("braid letter 0 is not a generator");
    letters.push_back(Letter{s < 0 ? -s : s, s < 0 ? -1 : 1});
  }
  return BraidWord(strand_count, std::move(letters));
}

BraidWord BraidWord::parse(int strand_count, std::string_view text) {
  std::vector<int> values;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    if (i == text.size()) break;
    std::size_t j = i;
    while (j < text.size() && text[j] != ' ' && text[j] != '\t') ++j;
    std::string_view tok = text.substr(i, j - i);
    int v = 0;
    const char* first = tok.data();
    if (!tok.empty() && tok.front() == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      throw InvalidArgument("braid letter '" + std::string(tok) + "' is not an integer");
    values.push_back(v);
    i = j;
  }
  return from_signed(strand_count, values);
}

std::vector<int> BraidWord::signed_indices() const {
  std::vector<int> out;
  out.reserve(letters_.size());
  for (const auto& l : letters_) out.push_back(l.sign * l.index);
  return out;
}

std::string BraidWord::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int v : signed_indices()) {
    if (!first) os << ' ';
    os << v;
    first = false;
  }
  return os.str();
}

// ---- closure ----------------------------------------------------------------

std::vector<int> ClosurePartition::component_ids() const {
  std::vector<int> ids;
  ids.reserve(components.size());
  for (const auto& c : components) ids.push_back(c.front());
  return ids;
}

bool ClosurePartition::has_component(int id) const {
  return id >= 1 && id <= static_cast<int>(component_of.size()) && component_of[id - 1] == id;
}

ClosurePartition closure_components(const BraidWord& b) {
  const int d = b.strand_count();
  // at[k] = start position of the strand currently at position k + 1
  std::vector<int> at(d);
  std::iota(at.begin(), at.end(), 1);
  for (const auto& l : b.letters()) std::swap(at[l.index - 1], at[l.index]);

  ClosurePartition p;
  p.end_position.assign(d, 0);
  for (int k = 0; k < d; ++k) p.end_position[at[k] - 1] = k + 1;

  p.component_of.assign(d, 0);
  for (int s = 1; s <= d; ++s) {
    if (p.component_of[s - 1] != 0) continue;
    std::vector<int> cyc;
    for (int q = s; p.component_of[q - 1] == 0; q = p.end_position[q - 1]) {
      p.component_of[q - 1] = s;
      cyc.push_back(q);
    }
    std::sort(cyc.begin(), cyc.end());
    p.components.push_back(std::move(cyc));
  }
  return p;
}

std::int64_t linking_number(const BraidWord& b, const ClosurePartition& p, int a, int c) {
  if (a == c) throw InvalidArgument("linking number needs two distinct components");
  if (!p.has_component(a) || !p.has_component(c)) throw InvalidArgument("unknown closure component");
  if (static_cast<int>(p.component_of.size()) != b.strand_count())
    throw InvalidArgument("partition does not belong to this braid");

  std::vector<int> at(b.strand_count());
  std::iota(at.begin(), at.end(), 1);
  std::int64_t doubled = 0;
  for (const auto& l : b.letters()) {
    const int x = p.component_of[at[l.index - 1] - 1];
    const int y = p.component_of[at[l.index] - 1];
    if ((x == a && y == c) || (x == c && y == a)) doubled += l.sign;
    std::swap(at[l.index - 1], at[l.index]);
  }
  if (doubled % 2 != 0) throw InvariantFailure("odd crossing count between two closure components");
  return doubled / 2;
}

// ---- labeling ---------------------------------------------------------------

std::string label_to_string(const Label& l) {
  if (std::holds_alternative<CycleLabel>(l)) return "cycle";
  if (std::holds_alternative<DroppedLabel>(l)) return "dropped";
  return std::get<std::string>(l);
}

StrandLabeling::StrandLabeling(std::map<int, Label> assignment) : assignment_(std::move(assignment)) {
  int cycles = 0;
  for (const auto& [id, l] : assignment_)
    if (std::holds_alternative<CycleLabel>(l)) ++cycles;
  if (cycles != 1) throw InvalidArgument("strand labeling must mark exactly one component as the cycle");
}

int StrandLabeling::cycle_component() const {
  for (const auto& [id, l] : assignment_)
    if (std::holds_alternative<CycleLabel>(l)) return id;
  throw InvalidArgument("strand labeling has no cycle component");
}

void StrandLabeling::validate_against(const ClosurePartition& p) const {
  const auto ids = p.component_ids();
  if (ids.size() != assignment_.size())
    throw InvalidArgument("strand labeling does not cover exactly the closure components");
  for (int id : ids)
    if (!assignment_.contains(id))
      throw InvalidArgument("closure component s" + std::to_string(id) + " has no label");
  cycle_component();
}

StrandLabeling StrandLabeling::with_dropped(const std::vector<std::string>& ids) const {
  std::map<int, Label> out = assignment_;
  for (auto& [id, l] : out)
    if (auto* s = std::get_if<std::string>(&l); s && std::find(ids.begin(), ids.end(), *s) != ids.end())
      l = DroppedLabel{};
  return StrandLabeling(std::move(out));
}

std::map<int, std::int64_t> gamma_dot(const BraidWord& b, const ClosurePartition& p, const StrandLabeling& labeling) {
  labeling.validate_against(p);
  const int cyc = labeling.cycle_component();
  std::map<int, std::int64_t> out;
  for (const auto& [id, l] : labeling.assignment()) {
    if (id == cyc || std::holds_alternative<DroppedLabel>(l)) continue;
    out[id] = linking_number(b, p, cyc, id);
  }
  return out;
}

GroupElement rho_image(const std::map<int, std::int64_t>& dot, const StrandLabeling& labeling, std::size_t n,
                       const std::map<std::string, GroupElement>& meridians) {
  GroupElement sum = GroupElement::zero(n);
  for (const auto& [id, lk] : dot) {
    const auto* name = std::get_if<std::string>(&labeling.assignment().at(id));
    if (name == nullptr) throw InvalidArgument("component s" + std::to_string(id) + " is not a curve component");
    auto it = meridians.find(*name);
    if (it == meridians.end()) throw InvalidArgument("no meridian image for curve component '" + *name + "'");
    if (lk != 0) sum += lk * it->second;
  }
  return sum;
}

GroupElement hat_gamma(const BraidWord& b, const StrandLabeling& labeling, const FgAbelianGroup& target,
                       const std::map<std::string, GroupElement>& meridians) {
  const ClosurePartition p = closure_components(b);
  return target.canonicalize(rho_image(gamma_dot(b, p, labeling), labeling, target.generator_count(), meridians));
}

} // namespace curvelink::braid
