// JSON serialization of reports and parsing of presentation files.

#ifndef FULCRUM_IO_HPP_
#define FULCRUM_IO_HPP_

#include <string>

#include "fulcrum/fk3.hpp"
#include "fulcrum/jordan.hpp"
#include "json.hpp"

namespace fulcrum {

  using json = nlohmann::json;

  /// "F2", "Q" or "F<p>". Throws std::invalid_argument otherwise.
  Field parse_field(std::string const& name);

  json to_json(GroupTable const& g);
  json to_json(ReductionSystem const& sys);
  json to_json(CompletionReport const& r);
  json to_json(QuotientAlgebra const& q);
  json to_json(LiftingCertificate const& c);
  json to_json(PbwReport const& r);

  /// {"alphabet": [{"id": .., "sort": "module"|"group"}], "relations": [..],
  ///  "degree_cap": 8, "field": "F2", "order": "deglex"}; the last three are
  /// optional. Throws std::invalid_argument on malformed input.
  ReductionSystem parse_presentation(std::string const& text);

  /// Deterministic rendering with a trailing newline.
  std::string dump(json const& doc);

}  // namespace fulcrum

#endif  // FULCRUM_IO_HPP_
