#include "report.hpp"

#include <cctype>
#include <sstream>

namespace slzt::cli {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Inconclusive: return "inconclusive";
  }
  return "?";
}

Json config_json(const RunConfig& c) {
  Json j;
  j["command"] = c.command;
  j["n"] = c.n;
  if (c.prec) j["prec"] = *c.prec;
  else j["prec"] = "auto";
  j["word_bound"] = c.word_bound;
  j["k"] = c.k;
  if (c.ell) j["ell"] = c.ell->get_str();
  else j["ell"] = "auto";
  j["format"] = c.format == Format::Json ? "json" : "text";
  j["seed"] = c.seed;
  j["samples"] = c.samples;
  return j;
}

void Report::add(Check c) {
  if (!config_.timing) c.millis = 0;
  checks_.push_back(std::move(c));
}

std::size_t Report::count(Status s) const {
  std::size_t k = 0;
  for (const auto& c : checks_) k += c.status == s;
  return k;
}

int Report::exit_code() const {
  if (any_failed()) return 1;
  if (count(Status::Inconclusive) > 0) return 3;
  return 0;
}

Json Report::to_json() const {
  Json j;
  j["config"] = config_json(config_);
  Json checks = Json::array();
  for (const auto& c : checks_) {
    Json e;
    e["name"] = c.name;
    e["anchor"] = c.anchor;
    e["status"] = to_string(c.status);
    e["witness"] = c.witness;
    e["millis"] = c.millis;
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  Json s;
  s["total"] = checks_.size();
  s["pass"] = count(Status::Pass);
  s["fail"] = count(Status::Fail);
  s["inconclusive"] = count(Status::Inconclusive);
  const int code = exit_code();
  s["status"] = code == 0 ? "pass" : code == 1 ? "fail" : "inconclusive";
  if (stopped_after_) s["stopped_after"] = *stopped_after_;
  j["summary"] = std::move(s);
  return j;
}

std::string Report::to_text() const {
  std::ostringstream os;
  for (const auto& c : checks_) {
    std::string tag = to_string(c.status);
    for (auto& ch : tag) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    os << tag << "  " << c.name << "  [" << c.anchor << "]";
    if (config_.timing) os << "  " << c.millis << "ms";
    os << "\n      " << c.witness.dump() << "\n";
  }
  os << "summary: " << count(Status::Pass) << " pass, " << count(Status::Fail) << " fail, "
     << count(Status::Inconclusive) << " inconclusive";
  if (stopped_after_) os << " (stopped after " << *stopped_after_ << ")";
  os << "\n";
  return os.str();
}

std::string Report::render() const {
  return config_.format == Format::Json ? to_json().dump(2) + "\n" : to_text();
}

}  // namespace slzt::cli
