#include "fareylt/report.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "fareylt/errors.hpp"

namespace fareylt {

namespace {

const char* mode_name(AverageMode mode) { return mode == AverageMode::Trace ? "trace" : "field"; }

std::string_view strip_prefix(std::string_view s, std::string_view prefix)
{
    if (!s.starts_with(prefix))
        throw DomainError("trace cache: expected '" + std::string(prefix) + "'");
    return s.substr(prefix.size());
}

// Canonical decimal only: no sign on unsigned values, no leading zeros, no overflow.
template <typename Int>
Int parse_int(std::string_view s, const char* what)
{
    Int value{};
    const auto digits = s.starts_with('-') ? s.substr(1) : s;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || end != s.data() + s.size() || (digits.size() > 1 && digits[0] == '0') || s == "-0")
        throw DomainError(std::string("trace cache: bad ") + what + " '" + std::string(s) + "'");
    return value;
}

std::uint64_t parse_u64(std::string_view s) { return parse_int<std::uint64_t>(s, "unsigned integer"); }

std::int32_t parse_i32(std::string_view s) { return parse_int<std::int32_t>(s, "trace"); }

} // namespace

std::string format_double(double x) { return fmt::format("{}", x); }

void write_histogram_csv(std::ostream& out, const ResidueHistogram& hist)
{
    out << "v,count\n";
    for (std::size_t v = 0; v < hist.counts.size(); ++v)
        fmt::print(out, "{},{}\n", v, hist.counts[v]);
    fmt::print(out, "# T={} p={} main_term={}\n", hist.t_order, hist.p, format_double(hist.main_term()));
}

OrderedJson histogram_json(const ResidueHistogram& hist)
{
    OrderedJson j;
    j["T"] = hist.t_order;
    j["p"] = hist.p;
    j["main_term"] = hist.main_term();
    j["counts"] = hist.counts;
    return j;
}

void write_discrepancy_csv(std::ostream& out, std::uint64_t p, const std::vector<DiscrepancyRow>& rows)
{
    out << "T,coprime_pairs,l1,l1_normalized\n";
    for (const auto& r : rows)
        fmt::print(out, "{},{},{},{}\n", r.t_order, r.coprime_pairs, format_double(r.l1),
                   format_double(r.l1 / static_cast<double>(r.coprime_pairs)));
    fmt::print(out, "# p={}\n", p);
}

OrderedJson discrepancy_json(std::uint64_t p, const std::vector<DiscrepancyRow>& rows)
{
    OrderedJson j;
    j["p"] = p;
    j["rows"] = OrderedJson::array();
    for (const auto& r : rows)
        j["rows"].push_back({{"T", r.t_order},
                             {"coprime_pairs", r.coprime_pairs},
                             {"l1", r.l1},
                             {"l1_normalized", r.l1 / static_cast<double>(r.coprime_pairs)}});
    return j;
}

void write_trace_cache(std::ostream& out, const CurveFamily& family, const TraceTable& table)
{
    out << "# farey-lt trace-cache v1\n";
    fmt::print(out, "# family={};{} p={} hash={}\n", serialize(family.a_poly()), serialize(family.b_poly()), table.p,
               family.id());
    for (std::size_t v = 0; v < table.entries.size(); ++v) {
        if (table.entries[v])
            fmt::print(out, "{},{}\n", v, *table.entries[v]);
        else
            fmt::print(out, "{},BAD\n", v);
    }
}

std::string trace_cache_text(const CurveFamily& family, const TraceTable& table)
{
    std::ostringstream os;
    write_trace_cache(os, family, table);
    return os.str();
}

CachedTraces read_trace_cache(std::istream& in)
{
    std::string line;
    if (!std::getline(in, line) || line != "# farey-lt trace-cache v1")
        throw DomainError("trace cache: missing version line");
    if (!std::getline(in, line))
        throw DomainError("trace cache: missing family line");

    std::string_view rest = strip_prefix(line, "# family=");
    const auto p_pos = rest.find(" p=");
    const auto h_pos = rest.find(" hash=");
    if (p_pos == std::string_view::npos || h_pos == std::string_view::npos || h_pos < p_pos)
        throw DomainError("trace cache: malformed family line");
    const std::string_view coeffs = rest.substr(0, p_pos);
    const auto semi = coeffs.find(';');
    if (semi == std::string_view::npos)
        throw DomainError("trace cache: malformed family line");

    CachedTraces cached;
    cached.family_serialization =
        "A=" + std::string(coeffs.substr(0, semi)) + ";B=" + std::string(coeffs.substr(semi + 1));
    const std::uint64_t p = parse_u64(rest.substr(p_pos + 3, h_pos - p_pos - 3));
    const std::uint64_t hash = parse_u64(rest.substr(h_pos + 6));
    if (hash != fnv1a64(cached.family_serialization))
        throw DomainError("trace cache: hash does not match family");

    if (p < 5 || p >= (1ULL << 31) || !is_prime(p))
        throw DomainError("trace cache: p is not a prime in [5, 2^31)");
    cached.table.p = p;
    cached.table.family_id = hash;
    cached.table.entries.resize(p);
    for (std::uint64_t v = 0; v < p; ++v) {
        if (!std::getline(in, line))
            throw DomainError("trace cache: truncated at row " + std::to_string(v));
        const auto comma = line.find(',');
        if (comma == std::string::npos || parse_u64(std::string_view(line).substr(0, comma)) != v)
            throw DomainError("trace cache: bad row " + std::to_string(v));
        const std::string_view value = std::string_view(line).substr(comma + 1);
        if (value == "BAD")
            continue;
        const std::int32_t a = parse_i32(value);
        if (static_cast<std::int64_t>(a) * a > 4 * static_cast<std::int64_t>(p))
            throw DomainError("trace cache: trace outside the Hasse bound at row " + std::to_string(v));
        cached.table.entries[v] = a;
    }
    if (std::getline(in, line))
        throw DomainError("trace cache: trailing data");
    return cached;
}

OrderedJson trace_table_json(const CurveFamily& family, const TraceTable& table)
{
    OrderedJson j;
    j["family"] = family.serialization();
    j["hash"] = table.family_id;
    j["p"] = table.p;
    OrderedJson entries = OrderedJson::array();
    for (const auto& e : table.entries) {
        if (e)
            entries.push_back(*e);
        else
            entries.push_back("BAD");
    }
    j["entries"] = std::move(entries);
    return j;
}

void write_average_csv(std::ostream& out, const CurveFamily& family, const AverageReport& report)
{
    out << "p,contribution_direct,contribution_swapped,good_v,bad_v\n";
    for (const auto& row : report.per_prime)
        fmt::print(out, "{},{},{},{},{}\n", row.p, row.direct, row.swapped, row.good_v, row.bad_v);
    fmt::print(out, "# total={}, normalized={}, envelope={}, skipped={}\n", report.total_direct,
               format_double(report.normalized), format_double(report.envelope), report.skipped_primes);
    fmt::print(out, "# total_swapped={} family={} hash={} mode={} {}={} x={} T={}\n", report.total_swapped,
               family.serialization(), report.family_id, mode_name(report.mode),
               report.mode == AverageMode::Trace ? "a" : "d", report.target, report.x, report.t_order);
    out << "# good reduction means p does not divide Delta(v); conductors are not computed\n";
}

OrderedJson average_json(const CurveFamily& family, const AverageReport& report)
{
    OrderedJson j;
    j["family"] = family.serialization();
    j["hash"] = report.family_id;
    j["mode"] = mode_name(report.mode);
    j[report.mode == AverageMode::Trace ? "a" : "d"] = report.target;
    j["x"] = report.x;
    j["T"] = report.t_order;
    j["rows"] = OrderedJson::array();
    for (const auto& row : report.per_prime)
        j["rows"].push_back({{"p", row.p},
                             {"contribution_direct", row.direct},
                             {"contribution_swapped", row.swapped},
                             {"good_v", row.good_v},
                             {"bad_v", row.bad_v}});
    j["total"] = report.total_direct;
    j["total_swapped"] = report.total_swapped;
    j["normalized"] = report.normalized;
    j["envelope"] = report.envelope;
    j["skipped"] = report.skipped_primes;
    return j;
}

void write_chebotarev_csv(std::ostream& out, const ChebotarevReport& report)
{
    out << "residue,count\n";
    for (const auto& [r, c] : report.counts)
        fmt::print(out, "{},{}\n", r, c);
    fmt::print(out, "# p={} ell={} main_term={} max_abs_dev={} ell_below_17={}\n", report.p, report.ell,
               format_double(report.main_term), format_double(report.max_abs_dev), report.ell_below_17);
}

OrderedJson chebotarev_json(const ChebotarevReport& report)
{
    OrderedJson j;
    j["p"] = report.p;
    j["ell"] = report.ell;
    j["counts"] = OrderedJson::array();
    for (const auto& [r, c] : report.counts)
        j["counts"].push_back({{"residue", r}, {"count", c}});
    j["main_term"] = report.main_term;
    j["max_abs_dev"] = report.max_abs_dev;
    j["ell_below_17"] = report.ell_below_17;
    return j;
}

void write_classnum_csv(std::ostream& out, const std::vector<ImaginaryQuadraticField>& fields)
{
    out << "d,disc,h,w\n";
    for (const auto& f : fields)
        fmt::print(out, "{},{},{},{}\n", f.d, f.disc, f.class_number, f.unit_count);
}

OrderedJson classnum_json(const std::vector<ImaginaryQuadraticField>& fields)
{
    OrderedJson j = OrderedJson::array();
    for (const auto& f : fields)
        j.push_back({{"d", f.d}, {"disc", f.disc}, {"h", f.class_number}, {"w", f.unit_count}});
    return j;
}

} // namespace fareylt
