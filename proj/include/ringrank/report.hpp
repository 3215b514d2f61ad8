#pragma once

// JSON job documents and reports.
//
// Input documents:
//   {"kind": "order", "minpoly": [c0, ..., 1] | "table": [[[..]]],
//    "suborder_basis": [[..], ..], "normalization": "ambient", "ideals": [[[..]]]}
//   {"kind": "finring", "divisors": [..], "table": [[[..]]], "one": [..]}
//   {"kind": "construction", "name": "...", "args": [..]}
// Integers may be JSON numbers or decimal strings.

#include "ringrank/constructions.hpp"
#include "ringrank/finring.hpp"
#include "ringrank/invariants.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace ringrank {

using Json = nlohmann::json;

struct AnalyzeOptions {
    std::uint64_t max_ring_size = kDefaultSizeCap;
    unsigned hilbert_cap = kDefaultHilbertCap;
    bool deterministic = false;
};

/// An order or a finite ring, as produced by a job document or a named builder.
struct BuiltObject {
    std::string id;
    std::optional<EmbeddedOrder> order;
    std::optional<std::vector<Int>> minpoly; // set when the ambient order is Z[x]/(f)
    std::optional<FinRing> ring;
};

/// Names: matson n | axs c0,..,cN x | pullback c0,..,cN p.. | matson_quotient n |
/// trunc_poly p n D | semigroup_trunc p n D.
BuiltObject build_named(const std::string& name, const std::vector<std::string>& args);
std::vector<std::string> construction_names();

/// Parses a job document into the object it describes (SchemaError and the
/// construction errors surface as exceptions).
BuiltObject parse_job(const Json& doc);
/// Serializes an object back into a job document.
Json job_document(const BuiltObject& obj);

Json rank_report_json(const RankReport& rep);
/// Ideals are given by generators in the coordinates of the (sub)order.
Json order_report(const BuiltObject& obj, const std::vector<OrderIdeal>& ideals, const AnalyzeOptions& opts);
Json finring_report(const std::string& id, const FinRing& r, const AnalyzeOptions& opts);

struct AnalyzeOutcome {
    Json report;
    int exit_code; // 0 ok, 2 invalid job, 3 computation error
};
AnalyzeOutcome analyze_document(const Json& doc, const AnalyzeOptions& opts);

Json json_int(const Int& v);

} // namespace ringrank
