#include "curvelink/report.hpp"

#include "curvelink/error.hpp"
#include "curvelink/invariant.hpp"

#include <json.hpp>

#include <sstream>

namespace curvelink::report {

using pipeline::CompareReport;
using pipeline::InvariantReport;
using nlohmann::json;

namespace {

std::string list(const std::vector<std::string>& v) {
  if (v.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i];
  return out;
}

std::string tuple(const std::vector<std::int64_t>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ')';
  return os.str();
}

std::string triple(const std::array<int, 3>& a) {
  std::ostringstream os;
  os << '(' << a[0] << ',' << a[1] << ',' << a[2] << ')';
  return os.str();
}

std::string fmt(const InvariantReport& r, const std::vector<std::int64_t>& coeffs) {
  return pipeline::format_element(coeffs, r.generator_labels);
}

} // namespace

std::string to_text(const InvariantReport& r) {
  std::ostringstream os;
  os << "cycle " << r.cycle;
  if (!r.deleted.empty()) os << " (deleted: " << list(r.deleted) << ')';
  os << '\n';
  os << "  internal support: " << list(r.internal_support) << '\n';
  os << "  support:          " << list(r.support) << '\n';
  os << "  complement:       " << list(r.complement) << '\n';
  os << "  projection:       " << (r.projection_contractible ? "contractible" : "not contractible") << '\n';
  os << "H1 of complement: " << r.h1 << "  invariant factors " << tuple(r.h1_invariant_factors) << '\n';
  os << "indeterminacy subgroup generators:";
  if (r.indeterminacy.empty()) os << " none";
  os << '\n';
  for (const auto& g : r.indeterminacy) os << "  " << fmt(r, g) << '\n';
  os << "quotient: " << r.quotient << "  invariant factors " << tuple(r.quotient_invariant_factors) << '\n';

  if (r.gamma_hat) os << "class of the cycle: " << fmt(r, *r.gamma_hat) << '\n';
  if (!r.basis.empty()) os << "basis images:\n";
  for (const auto& b : r.basis)
    os << "  " << b.name << " on " << b.component << ": " << fmt(r, b.raw) << "   [in quotient " << fmt(r, b.reduced)
       << "]\n";

  os << "linking set (" << r.linking_case << ", zero " << (r.zero_excluded ? "excluded" : "included") << ")";
  if (!r.finite) {
    os << ": infinite, not enumerated\n";
  } else {
    os << ": " << r.members.size() << " element" << (r.members.size() == 1 ? "" : "s") << '\n';
    for (const auto& m : r.members) {
      os << "  [" << fmt(r, m.representative) << ']';
      if (m.epsilon)
        os << "   eps " << triple(*m.epsilon) << " ~ "
           << triple(invariant::EpsilonSignature{*m.epsilon}.canonical());
      os << '\n';
    }
  }
  for (const auto& k : r.kernel) os << "  coefficient tuple " << tuple(k) << " maps to 0\n";

  if (r.inner_cyclic) {
    const auto& ic = *r.inner_cyclic;
    os << "inner-cyclic check: quotient " << (ic.quotient_nontrivial ? "nontrivial" : "trivial")
       << ", moduli tried " << tuple(ic.moduli);
    if (ic.witness_modulus) os << ", witness character mod " << *ic.witness_modulus << ' ' << tuple(ic.witness_values);
    else os << ", no nontrivial inner-cyclic character";
    os << '\n';
    if (ic.i_invariant) os << "  I-invariant of the cycle: " << *ic.i_invariant << " mod " << *ic.witness_modulus << '\n';
  }
  for (const auto& n : r.notes) os << "note: " << n << '\n';
  return os.str();
}

std::string to_text(const CompareReport& r, bool per_map) {
  std::ostringstream os;
  os << "== A ==\n" << to_text(r.a) << "\n== B ==\n" << to_text(r.b) << '\n';
  os << "component bijections tried: " << r.maps.size() << ", failing: " << r.failures() << '\n';
  os << "comparison: " << (r.conjugate_compared ? "oriented and conjugate" : "oriented only") << '\n';
  auto describe_map = [&](const pipeline::MapSummary& m) {
    std::string out;
    for (std::size_t i = 0; i < m.images.size(); ++i)
      out += (i ? " " : "") + r.a_components.at(i) + "->" + m.images[i];
    return out;
  };
  if (per_map)
    for (const auto& m : r.maps)
      os << "  " << describe_map(m) << "  oriented " << (m.oriented_match ? "match" : "differ")
         << (r.conjugate_compared ? std::string(", conjugate ") + (m.conjugate_match ? "match" : "differ") : "") << '\n';
  if (r.epsilon_only_in_a) {
    os << "epsilon classes only in A:";
    for (const auto& c : *r.epsilon_only_in_a) os << ' ' << triple(c);
    if (r.epsilon_only_in_a->empty()) os << " none";
    os << "\nepsilon classes only in B:";
    for (const auto& c : *r.epsilon_only_in_b) os << ' ' << triple(c);
    if (r.epsilon_only_in_b->empty()) os << " none";
    os << '\n';
  }
  os << "verdict: " << r.verdict;
  if (r.witness) os << " (witness " << describe_map(r.maps.at(*r.witness)) << ')';
  else os << " (all " << r.maps.size() << " bijections fail)";
  os << '\n';
  return os.str();
}

// ---- json lines -------------------------------------------------------------

namespace {

template <class T> json opt(const std::optional<T>& v) { return v ? json(*v) : json(nullptr); }

template <class T> std::optional<T> get_opt(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

std::vector<json> invariant_records(const InvariantReport& r) {
  std::vector<json> out;
  json h;
  h["record"] = "invariant";
  h["cycle"] = r.cycle;
  h["deleted"] = r.deleted;
  h["internal_support"] = r.internal_support;
  h["support"] = r.support;
  h["complement"] = r.complement;
  h["generator_labels"] = r.generator_labels;
  h["projection_contractible"] = r.projection_contractible;
  h["h1"] = r.h1;
  h["h1_invariant_factors"] = r.h1_invariant_factors;
  h["quotient_invariant_factors"] = r.quotient_invariant_factors;
  h["quotient"] = r.quotient;
  h["indeterminacy"] = r.indeterminacy;
  h["gamma_hat"] = opt(r.gamma_hat);
  h["linking_case"] = r.linking_case;
  h["zero_excluded"] = r.zero_excluded;
  h["kernel"] = r.kernel;
  h["finite"] = r.finite;
  h["epsilon_applicable"] = r.epsilon_applicable;
  if (r.inner_cyclic) {
    const auto& ic = *r.inner_cyclic;
    h["inner_cyclic"] = {{"quotient_nontrivial", ic.quotient_nontrivial},
                         {"moduli", ic.moduli},
                         {"witness_modulus", opt(ic.witness_modulus)},
                         {"witness_values", ic.witness_values},
                         {"i_invariant", opt(ic.i_invariant)}};
  } else {
    h["inner_cyclic"] = nullptr;
  }
  out.push_back(std::move(h));
  for (const auto& b : r.basis)
    out.push_back({{"record", "basis"},
                   {"component", b.component},
                   {"name", b.name},
                   {"raw", b.raw},
                   {"canonical", b.canonical},
                   {"reduced", b.reduced},
                   {"text", fmt(r, b.raw)}});
  for (const auto& m : r.members)
    out.push_back({{"record", "member"},
                   {"representative", m.representative},
                   {"epsilon", opt(m.epsilon)},
                   {"text", "[" + fmt(r, m.representative) + "]"}});
  for (const auto& n : r.notes) out.push_back({{"record", "note"}, {"text", n}});
  return out;
}

void absorb(InvariantReport& r, const json& j) {
  const auto kind = j.at("record").get<std::string>();
  if (kind == "invariant") {
    r.cycle = j.at("cycle");
    r.deleted = j.at("deleted");
    r.internal_support = j.at("internal_support");
    r.support = j.at("support");
    r.complement = j.at("complement");
    r.generator_labels = j.at("generator_labels");
    r.projection_contractible = j.at("projection_contractible");
    r.h1 = j.at("h1");
    r.h1_invariant_factors = j.at("h1_invariant_factors").get<std::vector<std::int64_t>>();
    r.quotient_invariant_factors = j.at("quotient_invariant_factors").get<std::vector<std::int64_t>>();
    r.quotient = j.at("quotient");
    r.indeterminacy = j.at("indeterminacy").get<std::vector<std::vector<std::int64_t>>>();
    r.gamma_hat = get_opt<std::vector<std::int64_t>>(j, "gamma_hat");
    r.linking_case = j.at("linking_case");
    r.zero_excluded = j.at("zero_excluded");
    r.kernel = j.at("kernel").get<std::vector<std::vector<std::int64_t>>>();
    r.finite = j.at("finite");
    r.epsilon_applicable = j.at("epsilon_applicable");
    if (!j.at("inner_cyclic").is_null()) {
      const auto& ic = j.at("inner_cyclic");
      pipeline::InnerCyclicSummary s;
      s.quotient_nontrivial = ic.at("quotient_nontrivial");
      s.moduli = ic.at("moduli").get<std::vector<std::int64_t>>();
      s.witness_modulus = get_opt<std::int64_t>(ic, "witness_modulus");
      s.witness_values = ic.at("witness_values").get<std::vector<std::int64_t>>();
      s.i_invariant = get_opt<std::int64_t>(ic, "i_invariant");
      r.inner_cyclic = s;
    }
  } else if (kind == "basis") {
    r.basis.push_back({j.at("component"), j.at("name"), j.at("raw").get<std::vector<std::int64_t>>(),
                       j.at("canonical").get<std::vector<std::int64_t>>(),
                       j.at("reduced").get<std::vector<std::int64_t>>()});
  } else if (kind == "member") {
    r.members.push_back({j.at("representative").get<std::vector<std::int64_t>>(), get_opt<std::array<int, 3>>(j, "epsilon")});
  } else if (kind == "note") {
    r.notes.push_back(j.at("text"));
  } else {
    throw InvalidArgument("unknown report record '" + kind + "'");
  }
}

std::string render(const std::vector<json>& records) {
  std::string out;
  for (const auto& r : records) out += r.dump() + '\n';
  return out;
}

template <class F> void each_line(const std::string& text, F&& f) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      f(json::parse(line));
    } catch (const json::exception& e) {
      throw InvalidArgument(std::string("malformed report line: ") + e.what());
    }
  }
}

} // namespace

std::string to_json_lines(const InvariantReport& r) { return render(invariant_records(r)); }

std::string to_json_lines(const CompareReport& r) {
  std::vector<json> out;
  json h;
  h["record"] = "compare";
  h["verdict"] = r.verdict;
  h["a_components"] = r.a_components;
  h["conjugate_compared"] = r.conjugate_compared;
  h["maps_tried"] = r.maps.size();
  h["maps_failed"] = r.failures();
  h["witness"] = opt(r.witness);
  h["epsilon_only_in_a"] = opt(r.epsilon_only_in_a);
  h["epsilon_only_in_b"] = opt(r.epsilon_only_in_b);
  out.push_back(std::move(h));
  for (const auto& m : r.maps)
    out.push_back({{"record", "map"},
                   {"images", m.images},
                   {"oriented_match", m.oriented_match},
                   {"conjugate_match", m.conjugate_match}});
  for (const auto* side : {&r.a, &r.b})
    for (auto rec : invariant_records(*side)) {
      rec["side"] = side == &r.a ? "a" : "b";
      out.push_back(std::move(rec));
    }
  return render(out);
}

InvariantReport invariant_from_json_lines(const std::string& text) {
  InvariantReport r;
  bool header = false;
  each_line(text, [&](const json& j) {
    header = header || (j.contains("record") && j.at("record") == "invariant");
    absorb(r, j);
  });
  if (!header) throw InvalidArgument("report has no invariant record");
  return r;
}

CompareReport compare_from_json_lines(const std::string& text) {
  CompareReport r;
  bool header = false;
  each_line(text, [&](const json& j) {
    if (j.contains("side")) {
      absorb(j.at("side") == "a" ? r.a : r.b, j);
      return;
    }
    const auto kind = j.at("record").get<std::string>();
    if (kind == "compare") {
      header = true;
      r.verdict = j.at("verdict");
      r.a_components = j.at("a_components");
      r.conjugate_compared = j.at("conjugate_compared");
      r.witness = get_opt<std::size_t>(j, "witness");
      r.epsilon_only_in_a = get_opt<std::vector<std::array<int, 3>>>(j, "epsilon_only_in_a");
      r.epsilon_only_in_b = get_opt<std::vector<std::array<int, 3>>>(j, "epsilon_only_in_b");
    } else if (kind == "map") {
      r.maps.push_back({j.at("images"), j.at("oriented_match"), j.at("conjugate_match")});
    } else {
      throw InvalidArgument("unknown report record '" + kind + "'");
    }
  });
  if (!header) throw InvalidArgument("report has no compare record");
  return r;
}

} // namespace curvelink::report
