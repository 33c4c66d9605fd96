#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "bianchi/congruence.hpp"
#include "bianchi/covers.hpp"
#include "bianchi/fillpipe.hpp"
#include "bianchi/homcount.hpp"

namespace bianchi::cli {

using Json = nlohmann::ordered_json;

enum class Status { pass, fail, incomplete };

std::string to_string(Status s);

/// One CLI invocation's output document.
struct Report {
  Report() = default;
  explicit Report(std::string cmd, Json params = Json::object())
      : command(std::move(cmd)), parameters(std::move(params)) {}

  std::string command;
  Json parameters = Json::object();
  Status status = Status::pass;
  Json payload = Json::object();
  std::optional<double> wall_time_s;

  Json to_json() const;
};

Json to_json(const fp::AbelianInvariants& a);
Json to_json(const fp::Fingerprint& f);
Json to_json(const fp::CosetTable& t, bool permutations);
Json to_json(const GeodesicAudit& a);
Json to_json(const FillResult& r, bool with_presentation);
Json to_json(const MonodromyCheck& c);

}  // namespace bianchi::cli
