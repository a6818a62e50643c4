#pragma once

#include <json.hpp>

#include "dftsub/digit_table.hpp"
#include "dftsub/graph.hpp"
#include "dftsub/idempotent.hpp"
#include "dftsub/sampling.hpp"
#include "dftsub/tiling.hpp"
#include "dftsub/zn.hpp"

namespace dftsub {

/// Insertion-ordered JSON keeps every report byte-for-byte deterministic.
using Json = nlohmann::ordered_json;

Json to_json(const IndexSet& s);
/// Expects {"n": N, "elements": [...]}; throws on malformed input.
IndexSet index_set_from_json(const Json& j);

Json to_json(const DivisorSet& d);
DivisorSet divisor_set_from_json(const Json& j);

/// {"n", "elements", "divisors", "zero_set"}.
Json to_json(const Idempotent& h);

/// {"p", "m", "marked", "rows"}.
Json to_json(const DigitTable& t);
DigitTable digit_table_from_json(const Json& j);

/// {"i", "j", "n", "unitary", "gram_offdiag_max", "witness_basis_norm"}.
Json pair_report_json(const IndexSet& i, const IndexSet& j,
                      const PairReport& report);

/// {"n", "divisors", "max_clique", "holes"}; holes lists the odd holes
/// found in the graph and its complement (empty when Berge-clean).
Json graph_report_json(const DifferenceGraph& g, const IndexSet& clique,
                       const BergeReport& berge);

/// {"j", "n", "sampling_set", "tiling_complement", "agree"}.
Json to_json(const FugledeReport& report);

Json to_json(const ScanReport& report);

Json to_json(const ConsecutiveFamily& fam);
Json to_json(const ProgressionFamily& fam);

}  // namespace dftsub
