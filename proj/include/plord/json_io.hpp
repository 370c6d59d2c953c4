#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "plord/harness.hpp"
#include "plord/interval_set.hpp"
#include "plord/limits.hpp"
#include "plord/ordering.hpp"
#include "plord/pl_homeo.hpp"
#include "plord/realization.hpp"
#include "plord/witness.hpp"

namespace plord {

using Json = nlohmann::json;

// Rationals travel as lowest-terms strings ("p/q" or "p"); interval ends
// use "-inf"/"inf" sentinels. All decoders validate and throw
// Error(ParseError) on malformed input; encode(decode(x)) is bit-exact.

Json rat_to_json(const Rat& r);
Rat rat_from_json(const Json& j);

Json interval_set_to_json(const IntervalSet& s);
IntervalSet interval_set_from_json(const Json& j);

Json pl_homeo_to_json(const PLHomeo& f);
PLHomeo pl_homeo_from_json(const Json& j);

Json standard_ordering_to_json(const StandardOrdering& o);
StandardOrdering standard_ordering_from_json(const Json& j);

Json staged_ordering_to_json(const StagedOrdering& o);
StagedOrdering staged_ordering_from_json(const Json& j);

Json composite_ordering_to_json(const CompositeOrdering& o);
CompositeOrdering composite_ordering_from_json(const Json& j);

using OrderingSpec =
    std::variant<StandardOrdering, StagedOrdering, CompositeOrdering>;

// Dispatches on the "kind" field: standard / staged / composite.
OrderingSpec ordering_spec_from_json(const Json& j);
Json ordering_spec_to_json(const OrderingSpec& spec);

Json anb_result_to_json(const AnBResult& r);
Json cone_report_to_json(const ConeReport& r);
Json typicality_report_to_json(const TypicalityReport& r);
Json realization_to_json(const RealizationResult& r);
Json recovery_report_to_json(const RecoveryReport& r);

}  // namespace plord
