#include "fareylt/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>
#include <unistd.h>

#include "fareylt/errors.hpp"
#include "fareylt/farey.hpp"
#include "fareylt/langtrotter.hpp"
#include "fareylt/quadratic.hpp"
#include "fareylt/report.hpp"

namespace fareylt::cli {

namespace {

constexpr std::uint64_t kPrimeLimit = 1ULL << 31;

void require(bool ok, const std::string& message)
{
    if (!ok)
        throw UsageError(message);
}

void require_prime_flag(std::uint64_t value, const char* flag)
{
    require(is_prime(value), fmt::format("{} must be prime", flag));
    require(value < kPrimeLimit, fmt::format("{} must be below 2^31", flag));
}

// T may be given as a real number; counts depend only on its floor.
std::uint32_t floor_order(double t, const char* flag)
{
    require(std::isfinite(t) && t >= 1, fmt::format("{} must be at least 1", flag));
    require(t < 4294967296.0, fmt::format("{} must be below 2^32", flag));
    return static_cast<std::uint32_t>(std::floor(t));
}

void validate(CliConfig& cfg, const std::string& family_text)
{
    using S = Subcommand;
    const S s = cfg.subcommand;
    const bool needs_family = s == S::Traces || s == S::LtAvg || s == S::LtField || s == S::Chebotarev;
    if (needs_family) {
        try {
            cfg.family = parse_family(family_text);
        } catch (const DomainError& e) {
            throw UsageError(fmt::format("invalid --family: {}", e.what()));
        }
    }
    require(cfg.threads >= 1, "--threads must be positive");

    switch (s) {
    case S::FareyHist:
        require(cfg.t >= 1, "--t must be positive");
        require_prime_flag(cfg.p, "--p");
        break;
    case S::Discrepancy:
        require_prime_flag(cfg.p, "--p");
        require(!cfg.t_list.empty(), "--t-list must not be empty");
        require(std::all_of(cfg.t_list.begin(), cfg.t_list.end(), [](auto t) { return t >= 1; }),
                "--t-list entries must be positive");
        break;
    case S::MCount:
        require_prime_flag(cfg.p, "--p");
        require(cfg.divisor >= 1, "--divisor must be positive");
        require(!cfg.v || *cfg.v < cfg.p, "--v must lie in [0, p)");
        break;
    case S::Traces:
        require_prime_flag(cfg.p, "--p");
        require(cfg.p >= 5, "--p must be at least 5");
        break;
    case S::LtAvg:
    case S::LtField:
        require(cfg.x >= 1, "--x must be positive");
        require(cfg.t >= 1, "--t must be positive");
        if (s == S::LtField)
            require(cfg.d < 0 && is_squarefree(cfg.d), "--d must be a squarefree negative integer");
        break;
    case S::Chebotarev:
        require_prime_flag(cfg.p, "--p");
        require(cfg.p >= 5, "--p must be at least 5");
        require_prime_flag(cfg.ell, "--ell");
        require(cfg.ell != cfg.p, "--ell must differ from --p");
        break;
    case S::LemmaPoly:
        require(cfg.hw >= 1, "--hw must be positive");
        break;
    case S::Classnum:
        require(cfg.dmax >= 1, "--dmax must be positive");
        break;
    case S::Envelope:
        require(cfg.t >= 1 && cfg.x >= 1, "--t and --x must be positive");
        require(cfg.part >= 1 && cfg.part <= 3, "--part must be 1, 2 or 3");
        break;
    }
}

TraceTable load_or_compute_traces(const CliConfig& cfg, std::ostream& err)
{
    const CurveFamily& family = *cfg.family;
    if (!cfg.cache_dir)
        return trace_table(family, cfg.p, cfg.threads);

    const auto path = trace_cache_path(*cfg.cache_dir, family, cfg.p);
    if (std::filesystem::exists(path)) {
        std::ifstream in(path);
        try {
            CachedTraces cached = read_trace_cache(in);
            if (cached.family_serialization == family.serialization() && cached.table.p == cfg.p)
                return std::move(cached.table);
            fmt::print(err, "warning: cache file {} is for another family; recomputing\n", path.string());
        } catch (const DomainError& e) {
            fmt::print(err, "warning: ignoring unreadable cache file {}: {}\n", path.string(), e.what());
        }
    }

    TraceTable table = trace_table(family, cfg.p, cfg.threads);
    std::filesystem::create_directories(*cfg.cache_dir);
    auto tmp = path;
    tmp += fmt::format(".tmp.{}", ::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        write_trace_cache(out, family, table);
        out.flush();
        if (!out)
            throw std::runtime_error("failed to write " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
    return table;
}

void emit(std::ostream& out, const OrderedJson& j) { out << j.dump(2) << '\n'; }

} // namespace

std::filesystem::path trace_cache_path(const std::filesystem::path& dir, const CurveFamily& family, std::uint64_t p)
{
    return dir / fmt::format("traces-{:016x}-p{}.csv", family.id(), p);
}

CliConfig parse_args(std::span<const std::string> args)
{
    CliConfig cfg;
    cfg.threads = std::max(1u, std::thread::hardware_concurrency());
    std::string family_text;
    std::string format = "csv";
    std::string cache_dir;
    double t_real = 0;
    std::vector<double> t_list_real;

    CLI::App app{"Farey fractions in residue classes and Lang-Trotter averages", "farey-lt"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--cache-dir", cache_dir, "Trace cache directory (FAREY_LT_CACHE overrides)");
    app.add_option("--threads", cfg.threads, "Worker threads");

    auto family_opt = [&](CLI::App* sub) {
        sub->add_option("--family", family_text, "Family as A=<coeffs>;B=<coeffs>, ascending")->required();
    };

    auto* hist = app.add_subcommand("farey-hist", "Residue histogram of F(T) mod p");
    hist->add_option("--t", t_real)->required();
    hist->add_option("--p", cfg.p)->required();

    auto* disc = app.add_subcommand("discrepancy", "L1 discrepancy for several T at fixed p");
    disc->add_option("--p", cfg.p)->required();
    disc->add_option("--t-list", t_list_real)->required()->delimiter(',');

    auto* mcount = app.add_subcommand("m-count", "M_{W,p,d}(v) counts");
    mcount->add_option("--w", cfg.w)->required();
    mcount->add_option("--p", cfg.p)->required();
    mcount->add_option("--divisor", cfg.divisor);
    mcount->add_option("--v", cfg.v);

    auto* traces = app.add_subcommand("traces", "Trace table a_p(v) for v mod p");
    family_opt(traces);
    traces->add_option("--p", cfg.p)->required();

    auto* ltavg = app.add_subcommand("lt-avg", "Average of Pi(a, x) over F(T)");
    family_opt(ltavg);
    ltavg->add_option("--a", cfg.a)->required();
    ltavg->add_option("--x", cfg.x)->required();
    ltavg->add_option("--t", t_real)->required();

    auto* ltfield = app.add_subcommand("lt-field", "Average of Pi(Q(sqrt d), x) over F(T)");
    family_opt(ltfield);
    ltfield->add_option("--d", cfg.d)->required();
    ltfield->add_option("--x", cfg.x)->required();
    ltfield->add_option("--t", t_real)->required();

    auto* cheb = app.add_subcommand("chebotarev", "Traces a_p(v) tallied mod ell");
    family_opt(cheb);
    cheb->add_option("--p", cfg.p)->required();
    cheb->add_option("--ell", cfg.ell)->required();

    auto* lemma = app.add_subcommand("lemma-poly", "Coefficients of P(X) for a given hw");
    lemma->add_option("--hw", cfg.hw)->required();

    auto* classnum = app.add_subcommand("classnum", "Class numbers for |D| <= dmax");
    classnum->add_option("--dmax", cfg.dmax)->required();

    auto* envelope = app.add_subcommand("envelope", "Average-bound envelope value");
    envelope->add_option("--t", t_real)->required();
    envelope->add_option("--x", cfg.x)->required();
    envelope->add_option("--part", cfg.part)->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested{app.help()};
    } catch (const CLI::CallForAllHelp&) {
        throw HelpRequested{app.help("", CLI::AppFormatMode::All)};
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    const std::pair<CLI::App*, Subcommand> table[] = {
        {hist, Subcommand::FareyHist}, {disc, Subcommand::Discrepancy}, {mcount, Subcommand::MCount},
        {traces, Subcommand::Traces},  {ltavg, Subcommand::LtAvg},      {ltfield, Subcommand::LtField},
        {cheb, Subcommand::Chebotarev}, {lemma, Subcommand::LemmaPoly}, {classnum, Subcommand::Classnum},
        {envelope, Subcommand::Envelope},
    };
    for (const auto& [sub, kind] : table)
        if (sub->parsed())
            cfg.subcommand = kind;

    if (cfg.subcommand == Subcommand::Discrepancy) {
        for (double t : t_list_real)
            cfg.t_list.push_back(floor_order(t, "--t-list entries"));
    } else if (cfg.subcommand == Subcommand::FareyHist || cfg.subcommand == Subcommand::LtAvg ||
               cfg.subcommand == Subcommand::LtField || cfg.subcommand == Subcommand::Envelope) {
        cfg.t = floor_order(t_real, "--t");
    }

    cfg.format = format == "json" ? OutputFormat::Json : OutputFormat::Csv;
    if (const char* env = std::getenv("FAREY_LT_CACHE"); env && *env)
        cfg.cache_dir = env;
    else if (!cache_dir.empty())
        cfg.cache_dir = cache_dir;

    validate(cfg, family_text);
    return cfg;
}

int run(const CliConfig& cfg, std::ostream& out, std::ostream& err)
{
    const bool json = cfg.format == OutputFormat::Json;
    switch (cfg.subcommand) {
    case Subcommand::FareyHist: {
        const auto hist = residue_histogram(cfg.t, cfg.p, cfg.threads);
        json ? emit(out, histogram_json(hist)) : write_histogram_csv(out, hist);
        break;
    }
    case Subcommand::Discrepancy: {
        std::vector<DiscrepancyRow> rows;
        for (std::uint32_t t : cfg.t_list)
            rows.push_back({t, count_coprime_pairs(t), l1_discrepancy(t, cfg.p, cfg.threads)});
        json ? emit(out, discrepancy_json(cfg.p, rows)) : write_discrepancy_csv(out, cfg.p, rows);
        break;
    }
    case Subcommand::MCount: {
        std::vector<std::pair<std::uint64_t, std::uint64_t>> rows;
        if (cfg.v) {
            rows.emplace_back(*cfg.v, m_count(cfg.w, cfg.p, cfg.divisor, *cfg.v));
        } else {
            for (std::uint64_t v = 0; v < cfg.p; ++v)
                rows.emplace_back(v, m_count(cfg.w, cfg.p, cfg.divisor, v));
        }
        if (json) {
            OrderedJson j;
            j["W"] = cfg.w;
            j["p"] = cfg.p;
            j["d"] = cfg.divisor;
            j["rows"] = OrderedJson::array();
            for (const auto& [v, m] : rows)
                j["rows"].push_back({{"v", v}, {"m", m}});
            emit(out, j);
        } else {
            out << "v,m\n";
            for (const auto& [v, m] : rows)
                fmt::print(out, "{},{}\n", v, m);
            fmt::print(out, "# W={} p={} d={}\n", cfg.w, cfg.p, cfg.divisor);
        }
        break;
    }
    case Subcommand::Traces: {
        const auto table = load_or_compute_traces(cfg, err);
        json ? emit(out, trace_table_json(*cfg.family, table)) : write_trace_cache(out, *cfg.family, table);
        break;
    }
    case Subcommand::LtAvg:
    case Subcommand::LtField: {
        const auto report = cfg.subcommand == Subcommand::LtAvg
                                ? average_pi_a(*cfg.family, cfg.a, cfg.x, cfg.t, cfg.threads)
                                : average_pi_field(*cfg.family, cfg.d, cfg.x, cfg.t, cfg.threads);
        if (report.total_direct != report.total_swapped) {
            fmt::print(err, "error: direct total {} differs from swapped total {}\n", report.total_direct,
                       report.total_swapped);
            return 1;
        }
        json ? emit(out, average_json(*cfg.family, report)) : write_average_csv(out, *cfg.family, report);
        break;
    }
    case Subcommand::Chebotarev: {
        const auto report = chebotarev_counts(*cfg.family, cfg.p, cfg.ell, cfg.threads);
        if (report.ell_below_17)
            fmt::print(err, "note: ell = {} is below 17; counts are empirical only\n", cfg.ell);
        json ? emit(out, chebotarev_json(report)) : write_chebotarev_csv(out, report);
        break;
    }
    case Subcommand::LemmaPoly: {
        const auto poly = lemma_poly(cfg.hw);
        if (json) {
            OrderedJson j;
            j["hw"] = cfg.hw;
            j["coeffs"] = OrderedJson::array();
            for (const auto& c : poly.coeffs())
                j["coeffs"].push_back(c.str());
            emit(out, j);
        } else {
            out << serialize(poly) << '\n';
        }
        break;
    }
    case Subcommand::Classnum: {
        std::vector<ImaginaryQuadraticField> fields;
        for (std::int64_t d = -1; d >= -cfg.dmax; --d) {
            if (!is_squarefree(d))
                continue;
            if (-field_discriminant(d) <= cfg.dmax)
                fields.push_back(field_of(d));
        }
        json ? emit(out, classnum_json(fields)) : write_classnum_csv(out, fields);
        break;
    }
    case Subcommand::Envelope: {
        const double value = theorem2_envelope(cfg.t, cfg.x, cfg.part);
        if (json) {
            OrderedJson j;
            j["T"] = cfg.t;
            j["x"] = cfg.x;
            j["part"] = cfg.part;
            j["envelope"] = value;
            emit(out, j);
        } else {
            out << "T,x,part,envelope\n";
            fmt::print(out, "{},{},{},{}\n", cfg.t, cfg.x, cfg.part, format_double(value));
        }
        break;
    }
    }
    out.flush();
    if (!out) {
        err << "error: failed writing output\n";
        return 1;
    }
    return 0;
}

int main_entry(std::span<const std::string> args, std::ostream& out, std::ostream& err)
{
    CliConfig cfg;
    try {
        cfg = parse_args(args);
    } catch (const HelpRequested& h) {
        out << h.text;
        return 0;
    } catch (const UsageError& e) {
        fmt::print(err, "usage error: {}\n", e.what());
        return 2;
    }
    try {
        return run(cfg, out, err);
    } catch (const std::exception& e) {
        fmt::print(err, "error: {}\n", e.what());
        return 1;
    }
}

} // namespace fareylt::cli
