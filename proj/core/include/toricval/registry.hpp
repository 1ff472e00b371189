// Canned worked examples with their expected verdict tables.
#pragma once

#include "toricval/io.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace toricval {

struct ExampleInfo {
  std::string id;
  std::string summary;
};

std::vector<ExampleInfo> list_examples();
/// The canned input as a "toricval/1" document. Throws Error(Input) on an unknown id.
Json example_document(std::string_view id);

struct ExampleRun {
  Json output;  // checks, expected, observed, matches
  bool matches = false;
  Status headline = Status::Unknown;
};

ExampleRun run_example(std::string_view id, long window = 8);

}  // namespace toricval
