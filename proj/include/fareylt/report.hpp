#pragma once

// Text formats: CSV (golden), mirrored JSON, and the trace cache file.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fareylt/elliptic.hpp"
#include "fareylt/farey.hpp"
#include "fareylt/langtrotter.hpp"
#include "fareylt/quadratic.hpp"

namespace fareylt {

using OrderedJson = nlohmann::ordered_json;

/// Shortest round-trip decimal form.
[[nodiscard]] std::string format_double(double x);

// Residue histogram: "v,count" rows then "# T=<T> p=<p> main_term=<float>".
void write_histogram_csv(std::ostream& out, const ResidueHistogram& hist);
[[nodiscard]] OrderedJson histogram_json(const ResidueHistogram& hist);

struct DiscrepancyRow {
    std::uint32_t t_order;
    std::uint64_t coprime_pairs;
    double l1;
};
void write_discrepancy_csv(std::ostream& out, std::uint64_t p, const std::vector<DiscrepancyRow>& rows);
[[nodiscard]] OrderedJson discrepancy_json(std::uint64_t p, const std::vector<DiscrepancyRow>& rows);

// Trace cache:
//   # farey-lt trace-cache v1
//   # family=<A coeffs>;<B coeffs> p=<p> hash=<FNV-1a-64 of "A=..;B=..">
//   v,a_or_BAD   (p rows)
void write_trace_cache(std::ostream& out, const CurveFamily& family, const TraceTable& table);
[[nodiscard]] std::string trace_cache_text(const CurveFamily& family, const TraceTable& table);

struct CachedTraces {
    std::string family_serialization;  ///< "A=..;B=.."
    TraceTable table;
};
/// Throws DomainError on any deviation from the format above, including a
/// hash that does not match the family line.
[[nodiscard]] CachedTraces read_trace_cache(std::istream& in);
[[nodiscard]] OrderedJson trace_table_json(const CurveFamily& family, const TraceTable& table);

// Lang-Trotter report: "p,contribution_direct,contribution_swapped,good_v,bad_v"
// rows, then "# total=.., normalized=.., envelope=.., skipped=.." and provenance lines.
void write_average_csv(std::ostream& out, const CurveFamily& family, const AverageReport& report);
[[nodiscard]] OrderedJson average_json(const CurveFamily& family, const AverageReport& report);

void write_chebotarev_csv(std::ostream& out, const ChebotarevReport& report);
[[nodiscard]] OrderedJson chebotarev_json(const ChebotarevReport& report);

void write_classnum_csv(std::ostream& out, const std::vector<ImaginaryQuadraticField>& fields);
[[nodiscard]] OrderedJson classnum_json(const std::vector<ImaginaryQuadraticField>& fields);

} // namespace fareylt
