#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "tangentia/cli.hpp"

using namespace tangentia::cli;

namespace {

void print_records(const RunResult& res, Format format) {
  for (const auto& rec : res.records) std::cout << (format == Format::Json ? rec.json : rec.text) << '\n';
}

int run_file(const std::string& path, Format format, const RunOptions& opts) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "tangentia: cannot open " << path << '\n';
    return 1;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  const RunResult res = run_source(buf.str(), opts);
  print_records(res, format);
  if (!res.error.empty()) std::cerr << "tangentia: " << res.error << '\n';
  return res.exit_code;
}

int run_builtin_corpus(Format format, const RunOptions& opts) {
  const auto outcomes = run_corpus(opts);
  std::size_t passed = 0;
  for (const auto& o : outcomes) {
    passed += o.passed;
    if (format == Format::Json) {
      for (const auto& rec : o.run.records) std::cout << rec.json << '\n';
      continue;
    }
    char line[160];
    std::snprintf(line, sizeof line, "%-34s %-4s %10.1f ms", o.name.c_str(), o.passed ? "PASS" : "FAIL", o.timing_ms);
    std::cout << line << (o.detail.empty() ? "" : "  " + o.detail) << '\n';
  }
  if (format == Format::Text) std::cout << passed << "/" << outcomes.size() << " corpus entries passed\n";
  return passed == outcomes.size() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tangentia: projective duality, tangency strata and algebraic boundaries"};
  app.require_subcommand(1);

  std::string file;
  std::string format_name = "text";
  RunOptions opts;
  double timeout = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format_name, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--seed", opts.seed, "Seed for every pseudo-random draw");
    sub->add_option("--timeout", timeout, "Abort after this many seconds (exit code 3)")->check(CLI::PositiveNumber);
  };

  CLI::App* run = app.add_subcommand("run", "Execute a script");
  run->add_option("FILE", file, "Script file")->required();
  add_common(run);

  CLI::App* corpus = app.add_subcommand("corpus", "Run the built-in acceptance corpus");
  add_common(corpus);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }
  if (timeout > 0) opts.timeout_seconds = timeout;
  const Format format = format_name == "json" ? Format::Json : Format::Text;
  if (run->parsed()) return run_file(file, format, opts);
  return run_builtin_corpus(format, opts);
}
