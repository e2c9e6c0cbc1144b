#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "slzt/exact/rational.hpp"

namespace slzt::cli {

using Json = nlohmann::ordered_json;

enum class Format { Text, Json };

struct RunConfig {
  std::string command = "all";
  int n = 3;
  std::optional<std::int64_t> prec;  // floor; default depends on the stage
  long word_bound = 3;
  std::int64_t k = 1;
  std::optional<BigInt> ell;         // empty means auto
  Format format = Format::Text;
  std::uint64_t seed = 0;
  int samples = 100;                 // random matrices for the stabilizer oracle
  bool timing = false;
};

Json config_json(const RunConfig& c);

enum class Status { Pass, Fail, Inconclusive };

std::string to_string(Status s);

struct Check {
  std::string name;
  std::string anchor;
  Status status = Status::Pass;
  Json witness = Json::object();
  std::int64_t millis = 0;
};

class Report {
 public:
  explicit Report(RunConfig config) : config_(std::move(config)) {}

  const RunConfig& config() const { return config_; }
  const std::vector<Check>& checks() const { return checks_; }

  void add(Check c);
  void note_stop(std::string stage) { stopped_after_ = std::move(stage); }

  std::size_t count(Status s) const;
  bool any_failed() const { return count(Status::Fail) > 0; }
  // 0 all pass, 1 some failure, 3 inconclusive without failures.
  int exit_code() const;

  Json to_json() const;
  std::string to_text() const;
  std::string render() const;

 private:
  RunConfig config_;
  std::vector<Check> checks_;
  std::optional<std::string> stopped_after_;
};

}  // namespace slzt::cli
