#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "fanoline/catalog.hpp"

namespace fanoline::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / ("fanoline_" + name);
  std::ofstream(path) << content;
  return path.string();
}

TEST(Cli, LinesJsonMatchesCatalogExpectation) {
  Result r = call({"lines", "--entry", "segre_1_2", "--seed", "2", "--json"});
  ASSERT_EQ(r.code, kOk) << r.err;
  auto j = nlohmann::json::parse(r.out);
  CatalogEntry e = segre(1, 2);
  EXPECT_EQ(j["dim"], e.expected.dim);
  EXPECT_EQ(j["degree"], e.expected.degree.get_si());
  EXPECT_EQ(j["empty"], false);
  EXPECT_EQ(j["L_equals_B"], true);
  for (const char* key : {"J", "J_saturated", "smooth", "degenerate", "I_star", "saturation_gap", "II", "L_subset_B"})
    EXPECT_TRUE(j.contains(key)) << key;
}

TEST(Cli, SchemeFileAndExplicitPoint) {
  Result emitted = call({"catalog", "emit", "segre_1_2"});
  ASSERT_EQ(emitted.code, kOk);
  std::string path = temp_file("s12.txt", emitted.out);
  Result r = call({"lines", "--scheme", path, "--point", "1,2,3,2,4,6", "--json"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["dim"], 1);
}

TEST(Cli, PointOffTheSchemeIsAnInputError) {
  std::string path = temp_file("cubic.txt", "ambient 3 dim 2\nx0^3 + x1^3 + x2^3 + x3^3\n");
  Result r = call({"lines", "--scheme", path, "--point", "1,1,1,1"});
  EXPECT_EQ(r.code, kInputError);
  EXPECT_NE(r.err.find("point not on scheme"), std::string::npos);
}

TEST(Cli, SingularPointIsAnInputError) {
  Result c = call({"cone", "--entry", "segre_1_1"});
  ASSERT_EQ(c.code, kOk);
  std::string path = temp_file("cone11.txt", c.out);
  Result r = call({"lines", "--scheme", path, "--point", "0,0,0,0,1"});
  EXPECT_EQ(r.code, kInputError);
  EXPECT_NE(r.err.find("singular point"), std::string::npos);
}

TEST(Cli, MissingFileAndBadFlags) {
  EXPECT_EQ(call({"lines", "--scheme", "/nonexistent/x.txt", "--point", "1,0"}).code, kInputError);
  EXPECT_EQ(call({"lines", "--frobnicate"}).code, kInputError);
  EXPECT_EQ(call({}).code, kInputError);
  EXPECT_EQ(call({"catalog", "emit", "nope"}).code, kInputError);
}

TEST(Cli, VerifyVeroneseReportsEmptiness) {
  Result r = call({"verify", "--entry", "veronese2_2", "--seeds", "5"});
  EXPECT_EQ(r.code, kOk) << r.out;
  EXPECT_NE(r.out.find("L empty at all seeds"), std::string::npos);
}

TEST(Cli, VerifyNamesTheFailingEntry) {
  Result r = call({"verify", "--entry", "segre_9_9", "--json"});
  EXPECT_EQ(r.code, kCheckFailed);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["passed"], false);
  EXPECT_EQ(j["checks"][0]["entry"], "segre_9_9");
  EXPECT_EQ(j["checks"][0]["check"], "construct");
}

TEST(Cli, JsonIsDeterministic) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"lines", "--entry", "plucker_3", "--seed", "3", "--json"},
        std::vector<std::string>{"extension-report", "--entry", "segre_1_2", "cone", "--json"},
        std::vector<std::string>{"verify", "--entry", "scroll_1_2", "--json"}}) {
    Result a = call(args), b = call(args);
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(a.out, b.out);
  }
}

TEST(Cli, TextAndJsonCarryTheSameVerdicts) {
  Result text = call({"second-form", "--entry", "fermat_cubic"});
  Result json = call({"second-form", "--entry", "fermat_cubic", "--json"});
  auto j = nlohmann::json::parse(json.out);
  EXPECT_EQ(j["L_equals_B"], false);
  EXPECT_NE(text.out.find("L_equals_B: false"), std::string::npos);
  EXPECT_NE(text.out.find("L_subset_B: true"), std::string::npos);
}

TEST(Cli, ScenarioFile) {
  std::string path = temp_file("scenario.json", R"({
    "Y": {"ambient": 2, "generators": ["x0^2 + x1*x2"]},
    "X": {"ambient": 3, "generators": ["x0*x3 + x1*x2"]},
    "H": "x0 - x3",
    "y": "1,-1,1"
  })");
  Result r = call({"extension-report", "--scenario", path, "--json"});
  ASSERT_EQ(r.code, kOk) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["hyperplane_section_ok"], true);
  EXPECT_EQ(j["line_restriction_ok"], true);
  EXPECT_EQ(j["conclusion"], "no-verdict");
  EXPECT_TRUE(j["singular_line_directions"].empty());
}

TEST(Cli, ScenarioWithCatalogDecomposition) {
  std::string path = temp_file("segre.json", R"({"Y": {"entry": "segre_2_2"}, "seed": 2, "decomposition": "catalog"})");
  Result r = call({"extension-report", "--scenario", path, "--json"});
  ASSERT_EQ(r.code, kOk) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["conclusion"], "cone-forced");
  EXPECT_EQ(j["hyperplane_section_ok"], nullptr);
}

TEST(Cli, MalformedScenario) {
  std::string path = temp_file("bad.json", R"({"Y": 3})");
  EXPECT_EQ(call({"extension-report", "--scenario", path}).code, kInputError);
  std::string broken = temp_file("broken.json", "{");
  EXPECT_EQ(call({"extension-report", "--scenario", broken}).code, kInputError);
}

TEST(Cli, CatalogListAndOutFile) {
  auto path = (std::filesystem::temp_directory_path() / "fanoline_list.json").string();
  Result r = call({"catalog", "list", "--json", "--out", path});
  ASSERT_EQ(r.code, kOk);
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(path);
  auto j = nlohmann::json::parse(f);
  EXPECT_EQ(j.size(), catalog_names().size());
}

}  // namespace
}  // namespace fanoline::cli
