// ltls: construct linear spaces, verify group actions on them, run the lemma catalog.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ltls/construct.hpp"
#include "ltls/error.hpp"
#include "ltls/io.hpp"
#include "ltls/lemmas.hpp"

namespace {

using namespace ltls;

enum Exit { kOk = 0, kUsage = 2, kConstruction = 3, kMismatch = 4, kFailed = 5 };

std::size_t enumeration_cap() {
  const char* env = std::getenv("LTLS_ENUM_CAP");
  if (!env || !*env) return grp::kDefaultEnumerationCap;
  char* end = nullptr;
  const auto cap = std::strtoull(env, &end, 10);
  if (*end != '\0' || cap == 0) throw Error(ErrorCode::Schema, "LTLS_ENUM_CAP must be a positive integer");
  return cap;
}

construct::Construction build(const std::string& kind, std::uint64_t q, const grp::GroupBuildOptions& opts) {
  return kind == "pg2" ? construct::pg2(q, opts) : construct::wbs(q, opts);
}

int cmd_construct(const std::string& kind, std::uint64_t q, const std::string& out) {
  grp::GroupBuildOptions opts{enumeration_cap(), false};
  construct::Construction c = [&] {
    try {
      return build(kind, q, opts);
    } catch (const Error& e) {
      std::cerr << "construct " << kind << ": " << e.what() << "\n";
      std::exit(kConstruction);
    }
  }();
  const std::string text = io::to_json(c.space).dump() + "\n";
  const std::string meta = io::to_json(io::Metadata{kind, q, c.space.regular_params()}).dump() + "\n";
  if (out.empty()) {
    std::cout << text;
    return kOk;
  }
  io::write_file(out, text);
  io::write_file(out + ".meta.json", meta);
  const auto& p = c.space.regular_params();
  std::cout << "wrote " << out << ": v=" << c.space.v() << " b=" << c.space.b();
  if (p) std::cout << " k=" << p->k << " r=" << p->r;
  std::cout << "\n";
  return kOk;
}

grp::ClassicalGroup build_group(const std::string& name, std::uint64_t q, const grp::GroupBuildOptions& opts) {
  if (name == "psl2") return grp::psl2(q, opts);
  if (name == "pgl2") return grp::pgl2(q, opts);
  return grp::psl3(q, opts);
}

void report(const std::string& check, bool ok, const std::string& detail, bool& all_ok) {
  std::cout << (ok ? "PASS " : "FAIL ") << check;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << "\n";
  all_ok = all_ok && ok;
}

int cmd_verify(const std::string& path, const std::string& group_name, std::uint64_t q,
               std::vector<std::string> checks) {
  if (checks.empty()) checks = {"valid-space", "point-transitive", "line-transitive"};
  const auto space = [&] {
    try {
      return io::space_from_json(io::json::parse(io::read_file(path)));
    } catch (const io::json::exception& e) {
      std::cerr << path << ": " << e.what() << "\n";
      std::exit(kUsage);
    } catch (const Error& e) {
      std::cerr << path << ": " << e.what() << "\n";
      std::exit(kUsage);
    }
  }();

  const auto rep = ls::validate(space);
  if (!rep.valid) {
    std::cout << "FAIL valid-space";
    if (!rep.violations.empty()) {
      const auto& v = rep.violations.front();
      std::cout << ": pair {" << v.a << "," << v.b << "} lies on " << v.lines << " lines";
    } else {
      std::cout << ": line " << rep.short_lines.front() << " has fewer than 2 points";
    }
    std::cout << "\n";
    return kUsage;
  }

  const bool need_elements = std::find(checks.begin(), checks.end(), "involution-fix-bounds") != checks.end();
  grp::GroupBuildOptions opts{enumeration_cap(), false};
  auto cg = build_group(group_name, q, opts);
  grp::PermGroup group = std::move(cg.group);

  if (group.degree() != space.v()) {
    // A declared action embedding: the file carries metadata naming a construction
    // whose group is the one requested.
    std::optional<io::Metadata> meta;
    try {
      meta = io::metadata_from_json(io::json::parse(io::read_file(path + ".meta.json")));
    } catch (const std::exception&) {
    }
    if (!meta || meta->construction != "wbs" || group_name != "psl2" || meta->q != q) {
      std::cerr << "group degree " << group.degree() << " does not match v = " << space.v() << "\n";
      return kMismatch;
    }
    auto c = construct::wbs(q, opts);
    if (!(c.space == space)) {
      std::cerr << "file does not match the wbs(" << q << ") construction\n";
      return kMismatch;
    }
    group = std::move(c.group);
  }
  if (need_elements && !group.is_enumerated()) {
    auto gens = group.generators();
    group = grp::PermGroup::enumerate(group.degree(), std::move(gens), opts.cap, static_cast<std::size_t>(group.order()));
  }

  bool all_ok = true;
  std::optional<ls::Transitivity> t;
  auto trans = [&]() -> const ls::Transitivity& {
    if (!t) t = ls::transitivity(space, group);
    return *t;
  };
  for (const auto& check : checks) {
    if (check == "valid-space") {
      report(check, true, "v=" + std::to_string(space.v()) + " b=" + std::to_string(space.b()), all_ok);
    } else if (check == "point-transitive") {
      report(check, trans().point, std::to_string(trans().point_orbits) + " orbits", all_ok);
    } else if (check == "line-transitive") {
      report(check, trans().line, std::to_string(trans().line_orbits) + " orbits", all_ok);
    } else if (check == "flag-transitive") {
      report(check, trans().flag, std::to_string(trans().flag_orbits) + " orbits", all_ok);
    } else if (check == "two-transitive") {
      report(check, trans().two_transitive, std::to_string(trans().pair_orbits) + " pair orbits", all_ok);
    } else if (check == "involution-fix-bounds") {
      const auto& p = rep.params;
      if (!p) {
        report(check, false, "space is not regular", all_ok);
        continue;
      }
      std::size_t count = 0, bad = 0;
      for (auto id : grp::involutions(group)) {
        ++count;
        const auto fd = ls::fixed_counts(space, group.element(id));
        const std::uint64_t lower = (p->v - 1 + p->k - 1) / p->k;
        const bool ok = fd.d_l >= lower && (fd.d_l >= fd.d_p || p->v == p->k * p->k);
        bad += !ok;
      }
      report(check, bad == 0, std::to_string(count) + " involutions, " + std::to_string(bad) + " violations", all_ok);
    }
  }
  return all_ok ? kOk : kFailed;
}

void print(const std::vector<lemmas::EliminationReport>& reports, bool as_json) {
  if (as_json) {
    for (const auto& r : reports) std::cout << io::to_json(r).dump() << "\n";
    return;
  }
  std::cout << io::table_header() << "\n";
  for (const auto& r : reports) std::cout << io::table_row(r) << "\n";
}

int cmd_eliminate(bool catalog, const std::string& case_text, std::optional<unsigned> min_k, bool as_json) {
  if (catalog) {
    const auto reports = lemmas::run_catalog();
    print(reports, as_json);
    const bool all = std::all_of(reports.begin(), reports.end(),
                                 [](const auto& r) { return r.verdict == lemmas::Verdict::Excluded; });
    return all ? kOk : kFailed;
  }
  lemmas::CandidateCase c;
  try {
    c = io::case_from_json(io::json::parse(case_text));
    if (min_k) c.min_k = *min_k;
    c.check();
  } catch (const io::json::exception& e) {
    std::cerr << "case: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "case: " << e.what() << "\n";
    return kUsage;
  }
  print(lemmas::eliminate_case(c), as_json);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Line-transitive linear spaces: constructions, verification and elimination lemmas"};
  app.require_subcommand(1);

  auto* construct = app.add_subcommand("construct", "Build a linear space and write it as JSON");
  std::string kind, out;
  std::uint64_t cq = 0;
  construct->add_option("kind", kind, "pg2 or wbs")->required()->check(CLI::IsMember({"pg2", "wbs"}));
  construct->add_option("--q", cq, "Field order")->required();
  construct->add_option("--out", out, "Output path; metadata goes to <out>.meta.json");

  auto* verify = app.add_subcommand("verify", "Check a group action on a linear space file");
  std::string path, group_name;
  std::uint64_t vq = 0;
  std::vector<std::string> checks;
  verify->add_option("path", path, "Linear space JSON")->required();
  verify->add_option("--group", group_name, "psl2, pgl2 or psl3")
      ->required()
      ->check(CLI::IsMember({"psl2", "pgl2", "psl3"}));
  verify->add_option("--q", vq, "Field order")->required();
  verify->add_option("--check", checks, "Checks to run")
      ->check(CLI::IsMember({"valid-space", "point-transitive", "line-transitive", "flag-transitive",
                             "two-transitive", "involution-fix-bounds"}));

  auto* eliminate = app.add_subcommand("eliminate", "Run elimination lemmas");
  bool catalog = false, as_json = false;
  std::string case_text;
  std::optional<unsigned> min_k;
  auto* cat_opt = eliminate->add_flag("--catalog", catalog, "Run the fixed catalog");
  auto* case_opt = eliminate->add_option("--case", case_text, "CandidateCase JSON object");
  cat_opt->excludes(case_opt);
  eliminate->add_option("--min-k", min_k, "Smallest line size considered");
  eliminate->add_flag("--json", as_json, "Newline-delimited JSON reports");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*construct) return cmd_construct(kind, cq, out);
    if (*verify) return cmd_verify(path, group_name, vq, checks);
    if (!catalog && case_text.empty()) {
      std::cerr << "eliminate: one of --catalog or --case is required\n";
      return kUsage;
    }
    return cmd_eliminate(catalog, case_text, min_k, as_json);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::Schema:
      case ErrorCode::InvalidQ:
        return kUsage;
      case ErrorCode::DomainMismatch:
        return kMismatch;
      case ErrorCode::NotAutomorphism:
        return kFailed;
      default:
        return kConstruction;
    }
  }
}
