// Structured (JSON) forms of every report.  Field order is fixed by
// nlohmann::ordered_json so serialized output is byte-stable.

#pragma once

#include "qsei/fockrep.hpp"
#include "qsei/ktheory.hpp"
#include "qsei/qwrp.hpp"

#include <json.hpp>

namespace qsei {

using Json = nlohmann::ordered_json;

/// Bumped whenever a field is renamed or removed.
inline constexpr int kReportSchemaVersion = 1;

Json to_json(const Weights& w);
Json to_json(const GeneratorSet& g);
Json to_json(const RelationReport& r);
Json to_json(const GeneratorWord& w, const NormalMonomial& mono);
Json to_json(const ResidualEntry& e);
Json to_json(const std::vector<ResidualEntry>& entries);
Json to_json(const AbelianGroup<KInt>& g);
Json to_json(const IndexMap& d);
Json to_json(const KGroups& k);
Json to_json(const PullbackReport& p);
Json to_json(const CokernelMapCheck& c);

}  // namespace qsei
