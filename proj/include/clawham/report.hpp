#pragma once

// JSON encodings of graphs, witnesses and traces. Objects keep insertion
// order so that output is byte-stable.

#include <json.hpp>

#include "clawham/closure.hpp"
#include "clawham/collapsible.hpp"
#include "clawham/conditions.hpp"
#include "clawham/detect.hpp"
#include "clawham/graph.hpp"
#include "clawham/linegraph.hpp"
#include "clawham/trails.hpp"

namespace clawham {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "clawham/1";

Json to_json(const SimpleGraph& g);
Json to_json(const Multigraph& h);
Json to_json(const ClawWitness& w);
Json to_json(const NetWitness& w);
Json to_json(const SubdividedClawWitness& w);
Json to_json(const FWitness& w);
Json to_json(const ClosureTrace& t, bool with_steps);
Json to_json(const LineGraphRoot& r);
Json to_json(const ClosedTrail& t);
Json to_json(const HeavyMatching& m, const Multigraph& h);
Json to_json(const Reduction& r);
Json to_json(const SubdividedClawCertificate& c);

}  // namespace clawham
