#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fareylt/cli.hpp"
#include "fareylt/errors.hpp"
#include "fareylt/report.hpp"

using namespace fareylt;
using namespace fareylt::cli;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = main_entry(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string golden(const std::string& name) { return slurp(std::filesystem::path(FAREYLT_GOLDEN_DIR) / name); }

struct TempDir {
    std::filesystem::path path;
    TempDir()
    {
        path = std::filesystem::temp_directory_path() / ("fareylt-cli-" + std::to_string(std::rand()));
        std::filesystem::remove_all(path);
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
};

} // namespace

TEST_CASE("parse_args examples")
{
    ::unsetenv("FAREY_LT_CACHE");
    const std::vector<std::string> hist{"farey-hist", "--t", "3", "--p", "5"};
    const auto cfg = parse_args(hist);
    CHECK(cfg.subcommand == Subcommand::FareyHist);
    CHECK(cfg.t == 3);
    CHECK(cfg.p == 5);
    CHECK(cfg.format == OutputFormat::Csv);
    CHECK_FALSE(cfg.cache_dir.has_value());
    CHECK(cfg.threads >= 1);

    const std::vector<std::string> bad{"farey-hist", "--t", "3", "--p", "4"};
    CHECK_THROWS_AS((void)parse_args(bad), UsageError);
    const auto r = invoke(bad);
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    CHECK(r.err.find("--p must be prime") != std::string::npos);

    const std::vector<std::string> lt{"lt-avg", "--family", "A=0,1;B=1", "--a", "-2", "--x", "5", "--t", "3"};
    const auto lcfg = parse_args(lt);
    CHECK(lcfg.subcommand == Subcommand::LtAvg);
    REQUIRE(lcfg.family.has_value());
    CHECK(lcfg.family->a_poly() == IntPolynomial{0, 1});
    CHECK(lcfg.family->b_poly() == IntPolynomial{1});
    CHECK(lcfg.family->serialization() == "A=0,1;B=1");
    CHECK(lcfg.a == -2);
}

TEST_CASE("real T is floored")
{
    ::unsetenv("FAREY_LT_CACHE");
    const std::vector<std::string> real{"farey-hist", "--t", "3.7", "--p", "5"};
    CHECK(parse_args(real).t == 3);
    CHECK(invoke(real).out == invoke({"farey-hist", "--t", "3", "--p", "5"}).out);
    const std::vector<std::string> list{"discrepancy", "--p", "7", "--t-list", "2.5,10,19.99"};
    CHECK(parse_args(list).t_list == std::vector<std::uint32_t>{2, 10, 19});
    CHECK(invoke({"farey-hist", "--t", "0.5", "--p", "5"}).code == 2);
    CHECK(invoke({"lt-avg", "--family", "A=0,1;B=1", "--a", "1", "--x", "5", "--t", "nan"}).code == 2);
}

TEST_CASE("parse_args rejects invalid input before computing")
{
    const std::vector<std::vector<std::string>> cases{
        {},
        {"no-such-command"},
        {"farey-hist", "--t", "3"},
        {"farey-hist", "--t", "3", "--p", "5", "--bogus"},
        {"farey-hist", "--t", "3", "--p", "5", "--format", "xml"},
        {"traces", "--family", "A=1;B=0", "--p", "7"},
        {"traces", "--family", "A=;B=", "--p", "7"},
        {"traces", "--family", "A=0,1;B=1", "--p", "3"},
        {"chebotarev", "--family", "A=0,1;B=1", "--p", "11", "--ell", "6"},
        {"lt-field", "--family", "A=0,1;B=1", "--d", "-4", "--x", "5", "--t", "3"},
        {"lt-field", "--family", "A=0,1;B=1", "--d", "3", "--x", "5", "--t", "3"},
        {"envelope", "--t", "3", "--x", "5", "--part", "7"},
        {"farey-hist", "--t", "x", "--p", "5"},
    };
    for (const auto& args : cases) {
        CAPTURE(args.size());
        const auto r = invoke(args);
        REQUIRE(r.code == 2);
        REQUIRE_FALSE(r.err.empty());
    }
}

TEST_CASE("help exits zero")
{
    const auto r = invoke({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("farey-hist") != std::string::npos);
}

TEST_CASE("golden CSV outputs")
{
    ::unsetenv("FAREY_LT_CACHE");
    auto r = invoke({"farey-hist", "--t", "3", "--p", "5"});
    CHECK(r.code == 0);
    CHECK(r.out == golden("farey_hist_3_5.csv"));
    CHECK(r.out.rfind("v,count\n0,0\n1,1\n2,2\n3,2\n4,2\n# T=3 p=5 main_term=", 0) == 0);

    r = invoke({"lemma-poly", "--hw", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "4,-4,1\n");
    CHECK(r.out == golden("lemma_poly_2.csv"));

    r = invoke({"lt-avg", "--family", "A=0,1;B=1", "--a", "-2", "--x", "5", "--t", "3"});
    CHECK(r.code == 0);
    CHECK(r.out == golden("lt_avg_example.csv"));
    CHECK(r.out.find("\n# total=2,") != std::string::npos);
}

TEST_CASE("output is byte-identical across thread counts")
{
    ::unsetenv("FAREY_LT_CACHE");
    const std::vector<std::vector<std::string>> commands{
        {"farey-hist", "--t", "200", "--p", "31"},
        {"discrepancy", "--p", "13", "--t-list", "10,40,90"},
        {"m-count", "--w", "50", "--p", "7", "--divisor", "2"},
        {"traces", "--family", "A=0,1;B=1", "--p", "101"},
        {"lt-avg", "--family", "A=0,1;B=1", "--a", "-2", "--x", "60", "--t", "12"},
        {"lt-field", "--family", "A=0,1;B=1", "--d", "-1", "--x", "60", "--t", "12"},
        {"chebotarev", "--family", "A=0,1;B=1", "--p", "101", "--ell", "5"},
        {"classnum", "--dmax", "60"},
        {"envelope", "--t", "10", "--x", "16", "--part", "1"},
    };
    for (auto args : commands) {
        for (const char* format : {"csv", "json"}) {
            auto one = args;
            one.insert(one.end(), {"--format", format, "--threads", "1"});
            auto four = args;
            four.insert(four.end(), {"--format", format, "--threads", "4"});
            const auto a = invoke(one);
            const auto b = invoke(four);
            CAPTURE(args[0]);
            REQUIRE(a.code == 0);
            REQUIRE(b.code == 0);
            REQUIRE(a.out == b.out);
        }
    }
}

TEST_CASE("trace cache round trip")
{
    TempDir dir;
    ::unsetenv("FAREY_LT_CACHE");
    const std::vector<std::string> args{"traces", "--family", "A=0,1;B=1", "--p", "211", "--cache-dir",
                                        dir.path.string()};
    const auto first = invoke(args);
    REQUIRE(first.code == 0);
    const auto fam = parse_family("A=0,1;B=1");
    const auto path = trace_cache_path(dir.path, fam, 211);
    REQUIRE(std::filesystem::exists(path));
    const std::string on_disk = slurp(path);
    CHECK(on_disk == first.out);

    std::ifstream in(path);
    const auto cached = read_trace_cache(in);
    CHECK(cached.family_serialization == "A=0,1;B=1");
    CHECK(cached.table == trace_table(fam, 211));
    CHECK(trace_cache_text(fam, cached.table) == on_disk);

    // the second run is served from the cache
    const auto second = invoke(args);
    CHECK(second.code == 0);
    CHECK(second.out == first.out);
    CHECK(slurp(path) == on_disk);

    std::size_t files = 0;
    for ([[maybe_unused]] const auto& e : std::filesystem::directory_iterator(dir.path))
        ++files;
    CHECK(files == 1);
}

TEST_CASE("FAREY_LT_CACHE overrides --cache-dir")
{
    TempDir env_dir, flag_dir;
    ::setenv("FAREY_LT_CACHE", env_dir.path.c_str(), 1);
    const auto r = invoke({"traces", "--family", "A=0,1;B=1", "--p", "13", "--cache-dir", flag_dir.path.string()});
    ::unsetenv("FAREY_LT_CACHE");
    CHECK(r.code == 0);
    const auto fam = parse_family("A=0,1;B=1");
    CHECK(std::filesystem::exists(trace_cache_path(env_dir.path, fam, 13)));
    CHECK_FALSE(std::filesystem::exists(trace_cache_path(flag_dir.path, fam, 13)));
}

TEST_CASE("corrupt cache files are recomputed")
{
    TempDir dir;
    ::unsetenv("FAREY_LT_CACHE");
    const auto fam = parse_family("A=0,1;B=1");
    const auto path = trace_cache_path(dir.path, fam, 7);
    {
        std::ofstream out(path);
        out << "# farey-lt trace-cache v1\ngarbage\n";
    }
    const auto r = invoke({"traces", "--family", "A=0,1;B=1", "--p", "7", "--cache-dir", dir.path.string()});
    CHECK(r.code == 0);
    CHECK(r.out == trace_cache_text(fam, trace_table(fam, 7)));
    CHECK(slurp(path) == r.out);
    CHECK_FALSE(r.err.empty());
}

TEST_CASE("read_trace_cache rejects malformed input")
{
    const auto fam = parse_family("A=0,1;B=1");
    const std::string good = trace_cache_text(fam, trace_table(fam, 5));
    {
        std::istringstream in(good);
        CHECK(read_trace_cache(in).table == trace_table(fam, 5));
    }
    auto replace = [&](const std::string& from, const std::string& to) {
        std::string s = good;
        const auto pos = s.find(from);
        REQUIRE(pos != std::string::npos);
        s.replace(pos, from.size(), to);
        return s;
    };
    const std::vector<std::string> bad{
        "",
        replace("v1", "v2"),
        replace("hash=", "hash=1"),
        replace("p=5", "p=7"),
        replace("3,BAD", "3,bad"),
        replace("0,0\n", "0,x\n"),
        replace("0,0\n", ""),
        good + "5,1\n",
        replace("1,-3", "1,-30"),
        replace("1,-3", "1,-03"),
        replace("p=5", "p=05"),
        replace("p=5", "p=4"),
    };
    for (const auto& text : bad) {
        std::istringstream in(text);
        CHECK_THROWS_AS((void)read_trace_cache(in), DomainError);
    }
}

TEST_CASE("exit codes are 0, 1 or 2")
{
    // I/O failure: the cache directory sits below a regular file
    TempDir dir;
    const auto blocker = dir.path / "file";
    std::ofstream(blocker) << "x";
    ::unsetenv("FAREY_LT_CACHE");
    const auto r = invoke({"traces", "--family", "A=0,1;B=1", "--p", "7", "--cache-dir", (blocker / "sub").string()});
    CHECK(r.code == 1);
    CHECK_FALSE(r.err.empty());

    for (const auto& args : std::vector<std::vector<std::string>>{
             {"classnum", "--dmax", "20"}, {"envelope", "--t", "1", "--x", "1", "--part", "3"}, {"bogus"}}) {
        const int code = invoke(args).code;
        CHECK((code == 0 || code == 1 || code == 2));
    }
}

TEST_CASE("classnum table")
{
    const auto r = invoke({"classnum", "--dmax", "24"});
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("d,disc,h,w\n", 0) == 0);
    CHECK(r.out.find("-1,-4,1,4\n") != std::string::npos);
    CHECK(r.out.find("-3,-3,1,6\n") != std::string::npos);
    CHECK(r.out.find("-5,-20,2,2\n") != std::string::npos);
    CHECK(r.out.find("-23,-23,3,2\n") != std::string::npos);
    CHECK(r.out.find("-6,-24,2,2\n") != std::string::npos);
    CHECK(r.out.find("-7,") != std::string::npos);
    CHECK(r.out.find("-10,") == std::string::npos);  // disc -40
}
