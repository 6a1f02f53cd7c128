// `pytree` command-line front end.
//
//   pytree enumerate --depth K [--format jsonl|csv|dot]
//   pytree children S C N          pytree parent S C N
//   pytree diff-path S C N --form P|Q|R --steps K
//   pytree diff-root D             pytree solve-pell D [--ascii]
//   pytree verify --max-n B [--serial]
//
// Exit codes: 0 ok, 2 bad flags, 3 invalid triple or even D,
// 4 D not representable, 5 verify mismatch.
#pragma once

#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pytree/tree.hpp"

namespace pytree::cli {

enum ExitCode : int {
  kOk = 0,
  kBadFlags = 2,
  kInvalidInput = 3,
  kNotRepresentable = 4,
  kVerifyMismatch = 5,
};

// One output row. Extra fields are appended after the fixed eight; their
// values are raw JSON (already quoted if strings).
struct OutputRecord {
  BigInt s, c, n, m, n2;
  std::size_t level = 0;
  std::string path;
  std::string word;
  std::vector<std::pair<std::string, std::string>> extra;
};

OutputRecord make_record(const PrimTriple& t, const TreePath& path);
OutputRecord make_record(const PrimTriple& t);  // locates the path itself

std::string to_jsonl(const OutputRecord& r);
std::string csv_header(const OutputRecord& r);
std::string to_csv(const OutputRecord& r);

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pytree::cli
