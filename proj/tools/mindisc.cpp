// mindisc: minimal discriminants and minimal models of elliptic and
// superelliptic curves over Q.  Reads JSON documents, prints either a
// human-readable summary or single-line JSON.  Exit codes: 0 success,
// 2 malformed or degenerate input, 3 singular curve.
#include "mindisc/curve_io.hpp"

#include "CLI11.hpp"

#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

using namespace mindisc;

constexpr int kExitOk = 0;
constexpr int kExitMalformed = 2;
constexpr int kExitSingular = 3;

int exit_code_for(const std::exception& ex) {
  if (dynamic_cast<const singular_curve_error*>(&ex) != nullptr) return kExitSingular;
  return kExitMalformed;
}

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct LineOutcome {
  int code = kExitOk;
  std::string text;
};

LineOutcome minimize_one(const std::string& line, bool json_mode, bool certificate) {
  LineOutcome out;
  try {
    ResultDocument res = run_minimize(parse_curve_document(line), certificate);
    out.text = json_mode ? result_to_json(res).dump() : render_result(res);
  } catch (const std::exception& ex) {
    out.code = exit_code_for(ex);
    if (json_mode) {
      ordered_json err;
      err["error"] = ex.what();
      err["code"] = out.code;
      out.text = err.dump();
    } else {
      out.text = std::string("error: ") + ex.what() + "\n";
    }
  }
  return out;
}

// Lines are independent, so they are fanned out across a small worker pool;
// output stays in input order and failures stay confined to their own line.
int run_batch(const std::string& path, bool json_mode, bool certificate) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open batch file: " << path << "\n";
    return kExitMalformed;
  }
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);)
    if (line.find_first_not_of(" \t\r") != std::string::npos) lines.push_back(line);

  std::vector<LineOutcome> results(lines.size());
  const unsigned workers = std::max(
      1u, std::min(std::thread::hardware_concurrency(),
                   static_cast<unsigned>(lines.size())));
  std::atomic<size_t> next{0};
  auto drain = [&] {
    for (size_t i; (i = next.fetch_add(1)) < lines.size();)
      results[i] = minimize_one(lines[i], json_mode, certificate);
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(drain);
  drain();
  for (std::thread& t : pool) t.join();

  int code = kExitOk;
  for (const LineOutcome& r : results) {
    std::cout << r.text;
    if (json_mode || r.text.empty() || r.text.back() != '\n') std::cout << "\n";
    if (code == kExitOk && r.code != kExitOk) code = r.code;
  }
  return code;
}

int run_single_minimize(const std::string& path, bool json_mode, bool certificate,
                        std::optional<CurveDocument::Kind> expected) {
  try {
    CurveDocument doc = parse_curve_document(read_input(path));
    if (expected && doc.kind != *expected)
      throw std::invalid_argument(
          *expected == CurveDocument::Kind::elliptic
              ? "expected an elliptic curve document (kind \"elliptic\")"
              : "expected a superelliptic curve document (kind \"superelliptic\")");
    ResultDocument res = run_minimize(doc, certificate);
    if (json_mode)
      std::cout << result_to_json(res).dump() << "\n";
    else
      std::cout << render_result(res);
    return kExitOk;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return exit_code_for(ex);
  }
}

int run_json_command(const std::string& path, bool json_mode,
                     ordered_json (*fn)(const ordered_json&),
                     std::string (*render)(const ordered_json&)) {
  try {
    ordered_json input = ordered_json::parse(read_input(path));
    ordered_json out = fn(input);
    if (json_mode)
      std::cout << out.dump() << "\n";
    else
      std::cout << render(out);
    return kExitOk;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return exit_code_for(ex);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minimal discriminants of elliptic and superelliptic curves over Q"};
  app.require_subcommand(1);

  struct {
    std::string file;
    std::string batch;
    bool json = false;
    bool certificate = false;
  } opt;

  auto add_common = [&](CLI::App* sub, bool with_batch) {
    sub->add_option("file", opt.file, "input file (defaults to standard input)");
    sub->add_flag("--json", opt.json, "emit single-line JSON");
    if (with_batch)
      sub->add_option("--batch", opt.batch,
                      "process a file of documents, one JSON object per line");
  };

  CLI::App* ell = app.add_subcommand(
      "elliptic-minimize", "minimal Weierstrass model via Laska's algorithm");
  add_common(ell, true);
  CLI::App* sup = app.add_subcommand(
      "super-minimize", "scaling-reduced superelliptic model");
  add_common(sup, true);
  sup->add_flag("--certificate", opt.certificate,
                "include per-prime minimality statuses");
  CLI::App* disc = app.add_subcommand(
      "discriminant", "exact discriminant of a curve or binary form");
  add_common(disc, false);
  CLI::App* tv = app.add_subcommand(
      "transvectant", "transvectant (f,g)^r of two binary forms");
  add_common(tv, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitMalformed;
  }

  if (ell->parsed() || sup->parsed()) {
    std::optional<CurveDocument::Kind> expected =
        ell->parsed() ? CurveDocument::Kind::elliptic
                      : CurveDocument::Kind::superelliptic;
    if (!opt.batch.empty()) {
      // Batch lines carry their own "kind"; the subcommand is an entry point.
      return run_batch(opt.batch, opt.json, opt.certificate);
    }
    return run_single_minimize(opt.file, opt.json, opt.certificate, expected);
  }
  if (disc->parsed())
    return run_json_command(opt.file, opt.json, run_discriminant, render_discriminant);
  return run_json_command(opt.file, opt.json, run_transvectant, render_transvectant);
}
