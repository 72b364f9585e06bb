#include "curvelink/error.hpp"
#include "curvelink/fixture.hpp"
#include "curvelink/pipeline.hpp"
#include "curvelink/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kInternal = 2;
constexpr int kDistinguished = 3;

using namespace curvelink;

std::vector<std::string> split_ids(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

int cmd_validate(const std::string& path) {
  const auto doc = fixture::load_fixture(path);
  const auto bad = doc.curve.bezout_violations();
  std::cout << path << ": " << doc.curve.components().size() << " components, " << doc.curve.points().size()
            << " singular points, " << doc.cycles.size() << " cycles, " << doc.realizations.size()
            << " realizations\n";
  for (const auto& b : bad) std::cout << "bezout: " << b << '\n';
  if (!bad.empty()) return kUsage;
  std::cout << "ok\n";
  return kOk;
}

int cmd_report(const std::string& path, const std::string& format, bool per_map) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  if (text.find("\"record\":\"compare\"") != std::string::npos) {
    const auto r = report::compare_from_json_lines(text);
    std::cout << (format == "text" ? report::to_text(r, per_map) : report::to_json_lines(r));
    return kOk;
  }
  const auto r = report::invariant_from_json_lines(text);
  std::cout << (format == "text" ? report::to_text(r) : report::to_json_lines(r));
  return kOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linking invariant of plane curves from combinatorics and braid monodromy"};
  app.require_subcommand(1);

  std::string format = "text";
  const std::vector<std::string> formats{"text", "json-lines"};

  auto* inv = app.add_subcommand("invariant", "Quotient, linking set and epsilon table for one cycle");
  std::string inv_file;
  std::string inv_cycle;
  std::string inv_delete;
  bool no_bezout = false;
  inv->add_option("file", inv_file, "Fixture file")->required()->check(CLI::ExistingFile);
  inv->add_option("--cycle", inv_cycle, "Cycle name")->required();
  inv->add_option("--delete", inv_delete, "Components to remove, comma separated");
  inv->add_flag("--no-bezout", no_bezout, "Skip the Bezout check");
  inv->add_option("--format", format, "Output format")->check(CLI::IsMember(formats));

  auto* cmp = app.add_subcommand("compare", "Zariski test between two curves");
  std::string file_a;
  std::string file_b;
  std::string cycle_a;
  std::string cycle_b;
  std::string delete_a;
  std::string delete_b;
  bool oriented_only = false;
  bool full_search = false;
  bool per_map = false;
  cmp->add_option("file_a", file_a, "First fixture")->required()->check(CLI::ExistingFile);
  cmp->add_option("file_b", file_b, "Second fixture")->required()->check(CLI::ExistingFile);
  cmp->add_option("--cycle", cycle_a, "Cycle name (both sides unless --cycle-b)")->required();
  cmp->add_option("--cycle-b", cycle_b, "Cycle name in the second fixture");
  cmp->add_option("--delete-a", delete_a, "Components removed from the first curve");
  cmp->add_option("--delete-b", delete_b, "Components removed from the second curve");
  cmp->add_flag("--oriented-only", oriented_only, "Never compare against the conjugate linking set");
  cmp->add_flag("--full-search", full_search, "Let the cycle's support move under the bijections");
  cmp->add_flag("--per-map", per_map, "List the outcome of every bijection");
  cmp->add_flag("--no-bezout", no_bezout, "Skip the Bezout check");
  cmp->add_option("--format", format, "Output format")->check(CLI::IsMember(formats));

  auto* val = app.add_subcommand("validate", "Schema and Bezout checks");
  std::string val_file;
  val->add_option("file", val_file, "Fixture file")->required()->check(CLI::ExistingFile);

  auto* rep = app.add_subcommand("report", "Re-render a saved json-lines report");
  std::string rep_file;
  rep->add_option("file", rep_file, "Report produced with --format json-lines")->required()->check(CLI::ExistingFile);
  rep->add_option("--format", format, "Output format")->check(CLI::IsMember(formats));
  rep->add_flag("--per-map", per_map, "List the outcome of every bijection");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*val) return cmd_validate(val_file);
    if (*rep) return cmd_report(rep_file, format, per_map);

    pipeline::Options opt;
    opt.check_bezout = !no_bezout;
    if (*inv) {
      const auto doc = fixture::load_fixture(inv_file);
      const auto result = pipeline::run_pipeline(doc, inv_cycle, split_ids(inv_delete), opt);
      std::cout << (format == "text" ? report::to_text(result.report) : report::to_json_lines(result.report));
      return kOk;
    }
    opt.oriented_only = oriented_only;
    opt.full_search = full_search;
    const auto doc_a = fixture::load_fixture(file_a);
    const auto doc_b = fixture::load_fixture(file_b);
    const auto c = pipeline::compare(doc_a, split_ids(delete_a), doc_b, split_ids(delete_b), cycle_a,
                                     cycle_b.empty() ? cycle_a : cycle_b, opt);
    std::cout << (format == "text" ? report::to_text(c.report, per_map) : report::to_json_lines(c.report));
    return c.result.verdict == invariant::Verdict::Distinguished ? kDistinguished : kOk;
  } catch (const InvariantFailure& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const OverflowError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const NotAHomomorphism& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const fixture::FixtureError& e) {
    std::cerr << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}
