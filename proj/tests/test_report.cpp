#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include "leibhom/report.hpp"

using namespace leibhom;

namespace {

RunConfig config(Command c, std::string input = "")
{
    RunConfig cfg;
    cfg.command = c;
    cfg.input = std::move(input);
    return cfg;
}

std::size_t count_kind(const Report &r, const std::string &kind)
{
    std::size_t n = 0;
    for (const auto &rec : r.results) {
        n += rec["kind"] == kind ? 1 : 0;
    }
    return n;
}

} // namespace

TEST(Report, WittNumbers)
{
    EXPECT_EQ(witt_number(2, 1), 2u);
    EXPECT_EQ(witt_number(2, 4), 3u);
    EXPECT_EQ(witt_number(2, 6), 9u);
    EXPECT_EQ(witt_number(3, 2), 3u);
    EXPECT_EQ(witt_number(1, 1), 1u);
    EXPECT_EQ(witt_number(1, 3), 0u);
}

TEST(Report, ParseNames)
{
    EXPECT_EQ(parse_command("hl"), Command::Hl);
    EXPECT_THROW(parse_command("homology"), InputError);
    EXPECT_EQ(parse_format("csv"), OutputFormat::Csv);
    EXPECT_THROW(parse_format("xml"), InputError);
}

TEST(Report, ValidateFailsWithExitOne)
{
    const std::string path = ::testing::TempDir() + "bad_algebra.json";
    {
        std::ofstream out(path);
        out << R"({"name":"bad","dimension":2,"basis":["x","y"],"brackets":[
            {"left":"x","right":"y","value":{"x":"1"}},{"left":"y","right":"x","value":{"x":"1"}}]})";
    }
    const auto r = run(config(Command::Validate, path));
    EXPECT_EQ(r.exit_code, kCheckFailed);
    EXPECT_GT(count_kind(r, "violation"), 0u);
    EXPECT_THROW(run(config(Command::Hl, path)), InputError);
    std::remove(path.c_str());
}

TEST(Report, MissingInput)
{
    EXPECT_THROW(run(config(Command::Hl)), InputError);
    EXPECT_THROW(run(config(Command::Hl, "builtin:unknown")), InputError);
}

TEST(Report, ResourceCap)
{
    auto cfg = config(Command::Hl, "builtin:sl2");
    cfg.degree = 6;
    cfg.limits.max_columns = 50;
    EXPECT_THROW(run(cfg), ResourceLimitError);
}

TEST(Report, LiReportsLiezationCheck)
{
    auto cfg = config(Command::Li, "builtin:A2");
    cfg.degree = 3;
    const auto r = run(cfg);
    EXPECT_EQ(r.exit_code, kSuccess);
    EXPECT_EQ(count_kind(r, "homology"), 3u);
    EXPECT_EQ(count_kind(r, "liezation_check"), 1u);
}

TEST(Report, WignerZeroTrials)
{
    auto cfg = config(Command::Wigner);
    cfg.trials = 0;
    const auto r = run(cfg);
    EXPECT_EQ(r.exit_code, kSuccess);
    for (const auto &rec : r.results) {
        if (rec["kind"] == "friedrichs") {
            EXPECT_TRUE(rec["vacuous"].get<bool>());
        }
    }
}

TEST(Report, CorruptIdempotentAborts)
{
    auto cfg = config(Command::Conjecture2, "builtin:A2");
    cfg.corrupt_idempotent = true;
    const auto r = run(cfg);
    EXPECT_EQ(r.exit_code, kCheckFailed);
    EXPECT_EQ(count_kind(r, "aborted"), 1u);
    EXPECT_EQ(count_kind(r, "conjecture2"), 0u);
}

TEST(Report, DeterministicRendering)
{
    auto cfg = config(Command::Conjecture1);
    cfg.weight = 3;
    for (auto f : {OutputFormat::Json, OutputFormat::Text, OutputFormat::Csv}) {
        EXPECT_EQ(render(run(cfg), f), render(run(cfg), f));
    }
    const auto json = nlohmann::json::parse(render(run(cfg), OutputFormat::Json));
    EXPECT_FALSE(json.contains("timing_ms"));
    cfg.timing = true;
    EXPECT_TRUE(run(cfg).to_json().contains("timing_ms"));
}

TEST(Report, CsvHasUnionHeader)
{
    auto cfg = config(Command::Li, "builtin:A2");
    cfg.degree = 2;
    const std::string csv = render(run(cfg), OutputFormat::Csv);
    const std::string header = csv.substr(0, csv.find('\n'));
    EXPECT_EQ(header, "kind,complex,degree,chain_dim,boundary_rank,kernel_dim,homology_dim,liezation_dim,li1_dim,equal");
}

TEST(Report, ExportRoundTrips)
{
    const auto r = run(config(Command::Export, "builtin:sl2"));
    ASSERT_TRUE(r.payload.has_value());
    EXPECT_EQ((*r.payload)["name"], "sl2");
}

TEST(Report, DegreeZero)
{
    auto cfg = config(Command::Li, "builtin:A2");
    cfg.degree = 0;
    EXPECT_THROW(run(cfg), InputError);
    cfg.command = Command::Hl;
    const auto r = run(cfg);
    ASSERT_EQ(r.results.size(), 1u);
    EXPECT_EQ(r.results[0]["homology_dim"], 1);
}
