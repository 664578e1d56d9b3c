// knaster: command-line driver. Every subcommand prints a JSON run report
// on stdout. Exit codes: 0 pass, 1 violation found, 2 usage or parse error.

#include "knaster/arrange.hpp"
#include "knaster/chainlab.hpp"
#include "knaster/indep.hpp"
#include "knaster/instances.hpp"
#include "knaster/poset.hpp"
#include "knaster/serialize.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace knaster;

namespace {

constexpr int kPass = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw UsageError("cannot write " + path);
}

template <class F>
auto parse_file(const std::string& path, F parse) {
  try {
    return parse(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Json violations_json(const std::vector<Violation>& vs) {
  Json out = Json::array();
  for (const Violation& v : vs) out.push_back({{"clause", v.clause}, {"detail", v.detail}});
  return out;
}

Json strings_json(const std::vector<std::string>& ss) {
  Json out = Json::array();
  for (const auto& s : ss) out.push_back(s);
  return out;
}

/// Report skeleton plus the clock for its timing field.
class Run {
 public:
  Run(std::string command, Json args) : start_(std::chrono::steady_clock::now()) {
    report_["command"] = std::move(command);
    report_["args"] = std::move(args);
    report_["passed"] = 0;
    report_["failed"] = 0;
    report_["violations"] = Json::array();
    report_["result"] = Json::object();
  }

  void pass() { report_["passed"] = report_["passed"].get<std::uint64_t>() + 1; }
  void fail(const std::string& what) {
    report_["failed"] = report_["failed"].get<std::uint64_t>() + 1;
    report_["violations"].push_back(what);
  }
  void check(bool ok, const std::string& what) { ok ? pass() : fail(what); }
  Json& result() { return report_["result"]; }
  Json& timing() { return timing_; }

  int finish() {
    timing_["elapsed_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    report_["timing"] = timing_;
    std::cout << report_.dump(2) << "\n";
    return report_["failed"].get<std::uint64_t>() == 0 ? kPass : kViolation;
  }

 private:
  Json report_;
  Json timing_ = Json::object();
  std::chrono::steady_clock::time_point start_;
};

std::pair<Label, Label> parse_pair(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError("--pair expects two labels like 5,9");
  try {
    return {std::stoll(text.substr(0, comma)), std::stoll(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw UsageError("--pair expects two labels like 5,9");
  }
}

int cmd_validate(const std::string& file) {
  const Condition p = parse_file(file, parse_condition);
  Run run("validate", {{"file", file}});
  const auto vs = validate(p);
  for (const Violation& v : vs) run.fail("clause (" + std::to_string(v.clause) + "): " + v.detail);
  if (vs.empty()) run.pass();
  run.result()["valid"] = vs.empty();
  run.result()["clause_violations"] = violations_json(vs);
  return run.finish();
}

int require_valid(const Condition& p, Run& run) {
  const auto vs = validate(p);
  if (vs.empty()) return kPass;
  for (const Violation& v : vs) run.fail("input clause (" + std::to_string(v.clause) + "): " + v.detail);
  return run.finish();
}

int cmd_extend(const std::string& file, Label label, std::size_t min_n, std::size_t min_m, const std::string& out) {
  const Condition p = parse_file(file, parse_condition);
  Run run("extend", {{"file", file}, {"label", label}, {"min_n", min_n}, {"min_m", min_m}, {"output", out}});
  if (int rc = require_valid(p, run)) return rc;
  const Condition q = extend(p, label, min_n, min_m);
  run.check(q.has_label(label), "label missing from result");
  run.check(q.n >= min_n && q.m_star >= min_m, "thresholds not met");
  const OrderCheck above = leq(p, q);
  run.check(static_cast<bool>(above), "result not above input: " + above.reason);
  run.result()["u"] = q.u;
  run.result()["n"] = q.n;
  run.result()["m_star"] = q.m_star;
  write_file(out, print_condition(q));
  return run.finish();
}

int cmd_amalgamate(const std::string& f1, const std::string& f2, const std::string& out) {
  const Condition p = parse_file(f1, parse_condition);
  const Condition q = parse_file(f2, parse_condition);
  Run run("amalgamate", {{"files", {f1, f2}}, {"output", out}});
  if (int rc = require_valid(p, run)) return rc;
  if (int rc = require_valid(q, run)) return rc;
  const Alignment a = aligned(p, q);
  run.result()["aligned"] = a.aligned;
  if (!a) {
    run.fail("not aligned: " + a.reason);
    return run.finish();
  }
  const Condition r = amalgamate(p, q);
  run.check(static_cast<bool>(leq(p, r)), "result not above the first input");
  run.check(static_cast<bool>(leq(q, r)), "result not above the second input");
  run.result()["u"] = r.u;
  run.result()["n"] = r.n;
  run.result()["m_star"] = r.m_star;
  write_file(out, print_condition(r));
  return run.finish();
}

int cmd_chain(const std::vector<Label>& labels, std::size_t target_n, std::uint64_t seed, const std::string& out) {
  Run run("chain", {{"labels", labels}, {"target_n", target_n}, {"seed", seed}, {"output", out}});
  const Chain c = build_chain(labels, target_n, seed);
  const auto vs = chain_violations(c);
  for (const auto& v : vs) run.fail(v);
  if (vs.empty()) run.pass();
  run.result()["stages"] = c.stages.size();
  run.result()["u"] = c.stages.back().u;
  run.result()["n"] = c.stages.back().n;
  run.result()["m_star"] = c.stages.back().m_star;
  write_file(out, print_chain(c));
  return run.finish();
}

int cmd_witnesses(const std::string& file, const std::string& pair_text) {
  const Chain c = parse_file(file, parse_chain);
  const auto [alpha, beta] = parse_pair(pair_text);
  Run run("witnesses", {{"file", file}, {"pair", {alpha, beta}}});
  for (const auto& v : chain_violations(c)) run.fail(v);
  const ApproximationReport approx = approximation(c);
  if (!approx.approx.h.count(alpha) || !approx.approx.h.count(beta) || alpha == beta) {
    throw UsageError("--pair must name two distinct labels of the last stage");
  }
  const WitnessReport rep = intersection_witnesses(approx.approx, alpha, beta);
  for (const auto& v : rep.violations) run.fail(v);
  if (rep.violations.empty()) run.pass();
  Json ws = Json::array();
  for (const Witness& w : rep.witnesses) {
    ws.push_back({{"value", w.value.to_string()},
                  {"alpha_leaf", w.alpha_leaf.to_string()},
                  {"alpha_tree", w.alpha_tree},
                  {"beta_leaf", w.beta_leaf.to_string()},
                  {"beta_tree", w.beta_tree}});
  }
  run.result()["n"] = approx.approx.n;
  run.result()["witnesses"] = ws;
  return run.finish();
}

int cmd_scan_sums(const std::string& file) {
  const Condition p = parse_file(file, parse_condition);
  Run run("scan-sums", {{"file", file}});
  if (int rc = require_valid(p, run)) return rc;
  Json quads = Json::array();
  for (const QuadrupleReport& q : scan_equal_sums(p)) {
    const std::string text = q.first[0].to_string() + "+" + q.first[1].to_string() + " = " +
                             q.second[0].to_string() + "+" + q.second[1].to_string();
    run.check(q.certified, "uncertified quadruple " + text);
    Json entry{{"first", {q.first[0].to_string(), q.first[1].to_string()}},
               {"second", {q.second[0].to_string(), q.second[1].to_string()}},
               {"sum", q.sum.to_string()},
               {"certified", q.certified}};
    if (q.certified) {
      entry["alpha"] = q.alpha;
      entry["beta"] = q.beta;
      entry["shape_pair"] = q.shape_pair;
      entry["shape"] = to_string(q.shape);
    }
    quads.push_back(entry);
  }
  run.result()["quadruples"] = quads;
  return run.finish();
}

int cmd_scan_triangles(const std::string& file) {
  const Condition p = parse_file(file, parse_condition);
  Run run("scan-triangles", {{"file", file}});
  const auto vs = validate(p);
  run.result()["valid"] = vs.empty();
  run.result()["clause_violations"] = violations_json(vs);
  const TriangleReport rep = triangle_scan(p);
  run.result()["realized_sums"] = rep.realized_sums;
  run.result()["color_zero_sums"] = rep.color_zero_sums;
  if (rep.counterexample) {
    const auto& [s, t, u] = *rep.counterexample;
    run.result()["counterexample"] = {s.to_string(), t.to_string(), u.to_string()};
    run.fail("color-0 triangle " + s.to_string() + " + " + t.to_string() + " = " + u.to_string());
  } else {
    run.pass();
  }
  return run.finish();
}

int cmd_lemma2(std::size_t ell, const std::string& strategy, std::uint64_t seed, std::uint64_t runs) {
  std::vector<ColoringStrategy> cycle;
  if (strategy == "all") {
    cycle = {ColoringStrategy::AllOne, ColoringStrategy::Matching, ColoringStrategy::Bipartite,
             ColoringStrategy::SeededTriangleFree};
  } else {
    try {
      cycle = {parse_strategy(strategy)};
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  if (ell < 16 || ell > 62) throw UsageError("--ell must lie in [16, 62]");
  Run run("lemma2", {{"ell", ell}, {"strategy", strategy}, {"seed", seed}, {"runs", runs}});
  Json results = Json::array();
  Json times = Json::array();
  for (std::uint64_t i = 0; i < runs; ++i) {
    const auto start = std::chrono::steady_clock::now();
    const ColoringStrategy s = cycle[i % cycle.size()];
    const std::uint64_t run_seed = seed + i;
    const PairColoring h = gen_star_coloring(ell, s, run_seed);
    Json entry{{"run", i}, {"strategy", to_string(s)}, {"seed", run_seed}};
    try {
      const ArrangementCertificate cert = extract_homogeneous(h);
      const auto failure = verify_certificate(h, cert);
      run.check(!failure, "run " + std::to_string(i) + ": " + failure.value_or(""));
      entry["verified"] = !failure;
      entry["certificate"] = certificate_to_json(cert);
    } catch (const LemmaViolation& e) {
      run.fail("run " + std::to_string(i) + ": " + e.what());
      entry["verified"] = false;
      entry["trace"] = strings_json(e.trace());
    }
    results.push_back(entry);
    times.push_back(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count());
  }
  run.result()["runs"] = results;
  run.timing()["run_ms"] = times;
  return run.finish();
}

int cmd_lemma3(std::uint64_t runs, std::uint64_t seed, std::size_t max_n) {
  if (max_n < 6 || max_n > 64) throw UsageError("--max-n must lie in [6, 64]");
  Run run("lemma3", {{"runs", runs}, {"seed", seed}, {"max_n", max_n}});
  std::uint64_t matches = 0;
  for (std::uint64_t i = 0; i < runs; ++i) {
    const TranslationInstance inst = translation_instance(seed, i, max_n);
    const std::string tag = "instance " + std::to_string(i) + ": ";
    try {
      const Word x = recover_translation(inst.A, inst.B);
      const auto brute = brute_translation(inst.A, inst.B);
      if (brute.size() != 1) {
        run.fail(tag + std::to_string(brute.size()) + " translations found by brute force");
      } else if (brute.front() != x) {
        run.fail(tag + "recovered " + x.to_string() + ", brute force found " + brute.front().to_string());
      } else {
        ++matches;
        run.pass();
      }
    } catch (const LemmaViolation& e) {
      run.fail(tag + e.what());
    }
  }
  run.result()["matches"] = matches;
  run.result()["instances"] = runs;
  return run.finish();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite checks for the Knaster forcing construction"};
  app.require_subcommand(1);

  std::string file, file2, out, pair_text, strategy = "matching";
  Label label = 0;
  std::size_t min_n = 0, min_m = 0, target_n = 1, ell = 16, max_n = 24;
  std::uint64_t seed = 0, runs = 0;
  std::vector<Label> labels;

  auto add_seed = [&seed](CLI::App* sub) { sub->add_option("--seed", seed, "seed")->envname("KNASTER_SEED"); };

  auto* validate_cmd = app.add_subcommand("validate", "check clauses (1)-(9)");
  validate_cmd->add_option("condition", file)->required();

  auto* extend_cmd = app.add_subcommand("extend", "extend into the dense set for --label, --min-n, --min-m");
  extend_cmd->add_option("condition", file)->required();
  extend_cmd->add_option("--label", label)->required();
  extend_cmd->add_option("--min-n", min_n);
  extend_cmd->add_option("--min-m", min_m);
  extend_cmd->add_option("-o,--output", out)->required();

  auto* amalgamate_cmd = app.add_subcommand("amalgamate", "common extension of two aligned conditions");
  amalgamate_cmd->add_option("first", file)->required();
  amalgamate_cmd->add_option("second", file2)->required();
  amalgamate_cmd->add_option("-o,--output", out)->required();

  auto* chain_cmd = app.add_subcommand("chain", "build an increasing chain of conditions");
  chain_cmd->add_option("--labels", labels)->delimiter(',')->required();
  chain_cmd->add_option("--target-n", target_n);
  add_seed(chain_cmd);
  chain_cmd->add_option("-o,--output", out)->required();

  auto* witnesses_cmd = app.add_subcommand("witnesses", "four certified points of (h_a + B) and (h_b + B)");
  witnesses_cmd->add_option("chain", file)->required();
  witnesses_cmd->add_option("--pair", pair_text)->required();

  auto* sums_cmd = app.add_subcommand("scan-sums", "certify every equal-sum quadruple of leaves");
  sums_cmd->add_option("condition", file)->required();

  auto* triangles_cmd = app.add_subcommand("scan-triangles", "look for three color-0 sums closing a triangle");
  triangles_cmd->add_option("condition", file)->required();

  auto* lemma2_cmd = app.add_subcommand("lemma2", "homogeneous sets with a 4-arrangement");
  lemma2_cmd->add_option("--ell", ell);
  lemma2_cmd->add_option("--strategy", strategy, "all-one, matching, bipartite, seeded-triangle-free or all");
  add_seed(lemma2_cmd);
  lemma2_cmd->add_option("--runs", runs)->default_val(100);

  auto* lemma3_cmd = app.add_subcommand("lemma3", "translation recovery against brute force");
  lemma3_cmd->add_option("--runs", runs)->default_val(1000);
  add_seed(lemma3_cmd);
  lemma3_cmd->add_option("--max-n", max_n);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kPass : kUsage;
  }

  try {
    if (*validate_cmd) return cmd_validate(file);
    if (*extend_cmd) return cmd_extend(file, label, min_n, min_m, out);
    if (*amalgamate_cmd) return cmd_amalgamate(file, file2, out);
    if (*chain_cmd) return cmd_chain(labels, target_n, seed, out);
    if (*witnesses_cmd) return cmd_witnesses(file, pair_text);
    if (*sums_cmd) return cmd_scan_sums(file);
    if (*triangles_cmd) return cmd_scan_triangles(file);
    if (*lemma2_cmd) return cmd_lemma2(ell, strategy, seed, runs);
    if (*lemma3_cmd) return cmd_lemma3(runs, seed, max_n);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ConstructionError& e) {
    std::cerr << "construction failed: " << e.what() << "\n";
    for (const auto& line : e.trace()) std::cerr << "  " << line << "\n";
    return kViolation;
  } catch (const LemmaViolation& e) {
    std::cerr << "lemma violation: " << e.what() << "\n";
    for (const auto& line : e.trace()) std::cerr << "  " << line << "\n";
    return kViolation;
  }
  return kUsage;
}
