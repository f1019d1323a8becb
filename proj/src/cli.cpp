#include "sadic/cli.hpp"

#include "sadic/construct.hpp"
#include "sadic/io.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <sstream>

namespace sadic {

namespace {

constexpr std::size_t kMaxDepth = 64;

struct Job {
  std::string mode = "main1";
  std::string diagram;
  std::string target;
  std::string directive;
  std::string result;
  std::size_t depth = 4;
  std::uint64_t n_max = 100000;
  std::uint64_t scan_limit = 100000;
  std::uint64_t seed = 0;
  std::string out;
};

void print_checks(std::ostream& out, const VerificationReport& rep) {
  for (const auto& c : rep.checks) {
    out << (c.pass ? "PASS " : (c.gating ? "FAIL " : "NOTE ")) << c.name;
    if (!c.detail.empty()) out << ": " << c.detail;
    out << '\n';
  }
  out << (rep.pass ? "verification PASS" : "verification FAIL") << '\n';
}

void write_verification(const std::string& dir, const VerificationReport& rep, const ComplexityTarget& target) {
  write_text_file(dir + "/verification.json", to_json(rep).dump(2) + "\n");
  if (rep.skipped) return;
  std::ostringstream csv;
  write_profile_csv(csv, rep.profile, &target, rep.bounds);
  write_text_file(dir + "/profile.csv", csv.str());
  if (rep.toeplitz) {
    std::ostringstream t;
    write_toeplitz_csv(t, *rep.toeplitz);
    write_text_file(dir + "/toeplitz.csv", t.str());
  }
}

int cmd_construct(const Job& job, std::ostream& out, std::ostream& err) {
  const ComplexityTarget target = ComplexityTarget::parse(job.target);
  const BratteliDiagram d = diagram_from_json(read_json_file(job.diagram));
  ConstructionOptions opts;
  opts.scan_limit = job.scan_limit;
  const Mode mode = parse_mode(job.mode);
  auto build = [&](std::size_t depth) {
    return mode == Mode::Main1 ? build_main1(d, target, depth, opts) : build_toeplitz(d, target, depth, opts);
  };
  ConstructionResult res = build(job.depth);
  // Levels are built one after another, so a deeper run only appends levels.
  while (!res.failed) {
    const auto need = verification_depth(res.sequence, job.n_max);
    const std::size_t next = need ? *need : res.depth + 1;
    if (next <= res.depth || next > kMaxDepth) break;
    out << "note: depth raised from " << res.depth << " to " << next << " for verification up to N=" << job.n_max
        << '\n';
    res = build(next);
  }
  if (!job.out.empty()) {
    std::filesystem::create_directories(job.out);
    write_text_file(job.out + "/result.json", to_json(res).dump(2) + "\n");
  }
  if (res.failed) {
    err << "construction FAILED: " << res.failure << '\n';
    return 2;
  }
  out << "construction OK (" << mode_name(mode) << ", depth " << res.depth << ")\n";
  VerifyOptions vopts;
  vopts.seed = job.seed;
  const VerificationReport rep = verify_construction(res, target, job.n_max, vopts);
  print_checks(out, rep);
  if (!job.out.empty()) write_verification(job.out, rep, target);
  return rep.pass ? 0 : 2;
}

int cmd_complexity(const Job& job, std::ostream& out, std::ostream&) {
  DirectiveSequence ds;
  std::optional<ComplexityTarget> target;
  if (!job.target.empty()) target = ComplexityTarget::parse(job.target);
  if (!job.result.empty()) {
    const ConstructionResult res = result_from_json(read_json_file(job.result));
    if (res.failed) throw FormatError("result '" + job.result + "' is a FAILED construction");
    ds = res.sequence;
    if (!target) target = ComplexityTarget::parse(res.target);
  } else {
    ds = directive_from_json(read_json_file(job.directive));
  }
  const ComplexityProfile profile = complexity_profile(ds, job.n_max);
  std::vector<std::optional<BoundValue>> bounds(job.n_max);
  BoundEvaluator eval(ds);
  BigInt tau0;
  try {
    tau0 = eval.max_len(1);
  } catch (const std::exception&) {
    tau0 = BigInt(job.n_max) + 1;
  }
  for (std::uint64_t n = 1; n <= job.n_max; ++n) {
    if (BigInt(n) < tau0) continue;
    try {
      bounds[n - 1] = eval.at(n);
    } catch (const std::out_of_range&) {
      break;
    }
  }
  std::ostringstream csv;
  write_profile_csv(csv, profile, target ? &*target : nullptr, bounds);
  if (job.out.empty())
    out << csv.str();
  else
    write_text_file(job.out, csv.str());
  return 0;
}

int cmd_verify(const Job& job, std::ostream& out, std::ostream& err) {
  const ConstructionResult res = result_from_json(read_json_file(job.result));
  const ComplexityTarget target = ComplexityTarget::parse(job.target.empty() ? res.target : job.target);
  VerifyOptions vopts;
  vopts.seed = job.seed;
  const VerificationReport rep = verify_construction(res, target, job.n_max, vopts);
  print_checks(out, rep);
  if (!job.out.empty()) {
    std::filesystem::create_directories(job.out);
    write_verification(job.out, rep, target);
  }
  if (!rep.pass) {
    for (const auto& c : rep.checks)
      if (c.gating && !c.pass) err << "FAIL: " << c.name << ": " << c.detail << '\n';
  }
  return rep.pass ? 0 : 2;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact constructions of ordered Bratteli diagrams and S-adic sequences with prescribed complexity"};
  app.require_subcommand(1);
  Job job;

  auto* construct = app.add_subcommand("construct", "run a construction and verify it");
  construct->add_option("--mode", job.mode, "main1 or toeplitz")->check(CLI::IsMember({"main1", "toeplitz"}));
  construct->add_option("--diagram", job.diagram, "diagram JSON")->required();
  construct->add_option("--target", job.target, "n^<rational>, n*log2(n)^<int> or @table.csv")->required();
  construct->add_option("--depth", job.depth, "number of output levels")->check(CLI::PositiveNumber);
  construct->add_option("--N", job.n_max, "verification horizon")->check(CLI::PositiveNumber);
  construct->add_option("--scan-limit", job.scan_limit, "threshold scan limit")->check(CLI::PositiveNumber);
  construct->add_option("--seed", job.seed, "seed for sampled words");
  construct->add_option("--out", job.out, "output directory");

  auto* complexity = app.add_subcommand("complexity", "complexity profile as CSV");
  auto* src = complexity->add_option_group("source");
  src->add_option("--directive", job.directive, "directive sequence JSON");
  src->add_option("--result", job.result, "construction result JSON");
  src->require_option(1);
  complexity->add_option("--target", job.target, "target for the ratio column");
  complexity->add_option("--N", job.n_max, "largest n")->check(CLI::PositiveNumber);
  complexity->add_option("--out", job.out, "CSV file (stdout if omitted)");

  auto* verify = app.add_subcommand("verify", "re-verify a stored construction result");
  verify->add_option("--result", job.result, "construction result JSON")->required();
  verify->add_option("--target", job.target, "override the stored target");
  verify->add_option("--N", job.n_max, "verification horizon")->check(CLI::PositiveNumber);
  verify->add_option("--seed", job.seed, "seed for sampled words");
  verify->add_option("--out", job.out, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*construct) return cmd_construct(job, out, err);
    if (*complexity) return cmd_complexity(job, out, err);
    return cmd_verify(job, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace sadic
