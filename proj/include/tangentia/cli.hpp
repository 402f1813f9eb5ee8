#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tangentia::cli {

struct SourcePos {
  std::size_t line = 1;
  std::size_t column = 1;
};

/// Argument value as written.  Expressions keep their source text and are
/// parsed against a ring only when the statement runs.
struct Value {
  enum class Kind { Identifier, Number, Expression, List };
  Kind kind = Kind::Identifier;
  std::string text;
  std::vector<Value> items;
  SourcePos pos;
};

struct Argument {
  std::string key;  // empty for positional arguments
  Value value;
};

/// One `;`-terminated statement.  Declarations (`ring`, `ideal`, `scheme`,
/// `curve`) carry the declared name; verbs carry an optional assigned name.
struct Statement {
  std::string command;
  std::string qualifier;  // span kind for `span(kind)`
  std::string name;
  std::vector<Argument> args;
  std::vector<Value> body;  // declaration right-hand side
  SourcePos pos;
  std::string source;
};

struct Script {
  std::vector<Statement> statements;
};

/// Throws ParseError with the line and column of the first error.
Script parse_script(std::string_view source);

enum class Format { Text, Json };

struct RunOptions {
  std::uint64_t seed = 42;
  std::optional<double> timeout_seconds;
};

struct Record {
  std::string json;  // one line, fields kind, inputs, result, dims, seed, timing_ms
  std::string text;
};

struct RunResult {
  std::vector<Record> records;
  int exit_code = 0;  // 0 ok, 1 parse error, 2 computation error, 3 timeout
  std::string error;
};

/// Parses and executes `source`; stops at the first failing statement.
RunResult run_source(std::string_view source, const RunOptions& opts = {});

/// Drops timing_ms from a record so runs can be compared byte for byte.
std::string strip_timing(const std::string& json_line);

struct CorpusCheck {
  std::size_t statement = 0;
  std::string pointer;   // JSON pointer into the record
  std::string expected;  // JSON text
};

struct CorpusEntry {
  std::string name;
  std::string script;
  std::vector<CorpusCheck> checks;
  int expected_exit = 0;
};

const std::vector<CorpusEntry>& builtin_corpus();

struct CorpusOutcome {
  std::string name;
  bool passed = false;
  std::string detail;
  double timing_ms = 0;
  RunResult run;
};

std::vector<CorpusOutcome> run_corpus(const RunOptions& opts = {});

}  // namespace tangentia::cli
