#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "witnesskit/cli.hpp"
#include "support.hpp"

using namespace witnesskit;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("witnesskit_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name)) << text;
    return path(name);
  }

  std::string write(const std::string& name, const io::json& j) const { return write(name, j.dump()); }

  static std::string slurp(const std::string& p) { return io::read_file(p); }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, DetectTerhal) {
  ASSERT_EQ(run({"examples", "terhal", "-o", path("t.json")}).code, 0);
  const Result r = run({"detect", path("t.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const io::json j = io::json::parse(r.out);
  EXPECT_TRUE(j["verdicts"]["devicente"].get<bool>());
  EXPECT_FALSE(j["verdicts"]["ppt"].get<bool>());
  EXPECT_NEAR(j["devicente"].get<double>(), (8 + std::sqrt(5.0)) / (10 * std::sqrt(2.0)), 1e-12);
  for (const char* key : {"d1", "d2", "ccnr", "devicente", "devicente_threshold", "filter_results", "F1", "F2", "F3",
                          "ppt_min_eigenvalue", "verdicts", "tool_version"})
    EXPECT_TRUE(j.contains(key)) << key;
}

TEST_F(CliTest, DetectMaximallyMixed) {
  const std::string f = write("mm.json", io::state_to_json(HermitianMatrix(ComplexMatrix(ComplexMatrix::Identity(4, 4) / 4.0)), 2, 2));
  const Result r = run({"detect", f});
  ASSERT_EQ(r.code, 0) << r.err;
  const io::json j = io::json::parse(r.out);
  EXPECT_FALSE(j["verdicts"]["ccnr"].get<bool>());
  EXPECT_FALSE(j["verdicts"]["devicente"].get<bool>());
  EXPECT_FALSE(j["verdicts"]["ppt"].get<bool>());
  for (const auto& v : j["verdicts"]["filter"]) EXPECT_FALSE(v.get<bool>());
}

TEST_F(CliTest, DetectFilters) {
  ASSERT_EQ(run({"examples", "bell", "--d", "2", "-o", path("b.json")}).code, 0);
  const Result r = run({"detect", path("b.json"), "--x1", "0.5", "--x2", "0.5", "--x1", "1", "--x2", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const io::json j = io::json::parse(r.out);
  ASSERT_EQ(j["filter_results"].size(), 2u);
  EXPECT_EQ(j["filter_results"][0]["x1"].get<double>(), 0.5);
  EXPECT_NEAR(j["filter_results"][1]["value"].get<double>(), j["ccnr"].get<double>(), 1e-10);
  EXPECT_EQ(run({"detect", path("b.json"), "--x1", "0.5"}).code, 2);
  EXPECT_EQ(run({"detect", path("b.json"), "--x1", "-1", "--x2", "1"}).code, 2);
}

TEST_F(CliTest, DetectRejectsBadInput) {
  io::json nh = io::state_to_json(HermitianMatrix(ComplexMatrix(ComplexMatrix::Identity(4, 4) / 4.0)), 2, 2);
  nh["matrix"]["re"][0][1] = 0.3;
  Result r = run({"detect", write("nh.json", nh)});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("Hermitian"), std::string::npos) << r.err;

  io::json tr = io::state_to_json(HermitianMatrix::identity(4), 2, 2);
  EXPECT_EQ(run({"detect", write("tr.json", tr)}).code, 2);

  r = run({"detect", write("bad.json", std::string("{\"d1\": 2,\n \"d2\": ]"))});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 2"), std::string::npos) << r.err;

  EXPECT_EQ(run({"detect", write("dims.json", io::json{{"d1", 2}, {"d2", 3}, {"matrix", {{"re", {{1}}}}}})}).code, 2);
  EXPECT_EQ(run({"detect", path("missing.json")}).code, 2);
  EXPECT_EQ(run({"detect"}).code, 2);
}

TEST_F(CliTest, ToleranceFlag) {
  ComplexMatrix m = ComplexMatrix::Identity(4, 4) / 4.0;
  m(0, 0) += 1e-6;
  const std::string f = write("loose.json", io::json{{"d1", 2}, {"d2", 2}, {"matrix", io::complex_matrix_to_json(m)}});
  EXPECT_EQ(run({"detect", f}).code, 2);
  EXPECT_EQ(run({"--tol", "1e-5", "detect", f}).code, 0);
}

TEST_F(CliTest, CertifyMap) {
  Result r = run({"certify-map", write("red.json", io::mapspec_to_json(reduction_map(3)))});
  ASSERT_EQ(r.code, 0) << r.err;
  io::json j = io::json::parse(r.out);
  EXPECT_LE(std::abs(j["positivity"]["margin"].get<double>()), 1e-12);
  EXPECT_TRUE(j["positivity"]["satisfied"].get<bool>());
  EXPECT_FALSE(j["complete_positivity"]["satisfied"].get<bool>());

  r = run({"certify-map", write("tr.json", io::mapspec_to_json(transposition_map(3)))});
  ASSERT_EQ(r.code, 0);
  EXPECT_FALSE(io::json::parse(r.out)["positivity"]["satisfied"].get<bool>());

  MapSpec depol = MapSpec::zero(2, 2);
  depol.r00 = 1.0;
  depol.lambda = RealMatrix::Identity(3, 3) / 3.0;
  r = run({"certify-map", write("dp.json", io::mapspec_to_json(depol))});
  ASSERT_EQ(r.code, 0);
  j = io::json::parse(r.out);
  EXPECT_TRUE(j["complete_positivity"]["satisfied"].get<bool>());
  EXPECT_TRUE(j["trace_preserving"].get<bool>());
  EXPECT_TRUE(j["unital"].get<bool>());
}

TEST_F(CliTest, CertifyMapRejectsMalformed) {
  io::json m = io::mapspec_to_json(reduction_map(2));
  m["s"] = {0.0, 0.0};
  EXPECT_EQ(run({"certify-map", write("s.json", m)}).code, 2);
  m = io::mapspec_to_json(reduction_map(2));
  m.erase("lambda");
  EXPECT_EQ(run({"certify-map", write("l.json", m)}).code, 2);
  m = io::mapspec_to_json(reduction_map(2));
  m["r00"] = "one";
  EXPECT_EQ(run({"certify-map", write("r.json", m)}).code, 2);
}

TEST_F(CliTest, SweepA) {
  Result r = run({"sweep-a", "--min", "0.5", "--max", "2", "--steps", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "a,q_trace_norm,threshold,detected");
  std::vector<std::string> rows;
  while (std::getline(in, line)) rows.push_back(line);
  ASSERT_EQ(rows.size(), 4u);
  auto fields = [](const std::string& row) {
    std::vector<std::string> out;
    std::istringstream ss(row);
    for (std::string f; std::getline(ss, f, ',');) out.push_back(f);
    return out;
  };
  const auto at_one = fields(rows[1]);
  ASSERT_EQ(at_one.size(), 4u);
  EXPECT_EQ(std::stod(at_one[0]), 1.0);
  EXPECT_NEAR(std::stod(at_one[1]), 0.75, 1e-12);
  EXPECT_EQ(at_one[3], "false");
  const auto at_two = fields(rows[3]);
  EXPECT_EQ(std::stod(at_two[0]), 2.0);
  EXPECT_NEAR(std::stod(at_two[1]), 31.0 / 36.0, 1e-12);
  EXPECT_EQ(at_two[3], "true");

  ASSERT_EQ(run({"sweep-a", "--log", "-o", path("fig.csv")}).code, 0);
  const std::string csv = slurp(path("fig.csv"));
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 51);
  EXPECT_EQ(csv, run({"sweep-a", "--log"}).out);

  EXPECT_EQ(run({"sweep-a", "--max", "2000"}).code, 2);
  EXPECT_EQ(run({"sweep-a", "--max", "2000", "--cap", "5000"}).code, 0);
  EXPECT_EQ(run({"sweep-a", "--min", "3", "--max", "2"}).code, 2);
  EXPECT_EQ(run({"sweep-a", "--min", "0", "--max", "2"}).code, 2);
  EXPECT_EQ(run({"sweep-a", "--steps", "0"}).code, 2);
}

TEST_F(CliTest, VolumeRatio) {
  const Result a = run({"--seed", "7", "volume-ratio", "--samples", "100000"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, run({"--seed", "7", "volume-ratio", "--samples", "100000"}).out);
  const io::json j = io::json::parse(a.out);
  EXPECT_NEAR(j["analytic"].get<double>(), 0.302300, 5e-7);
  EXPECT_NEAR(j["estimate"].get<double>(), 0.3023, 0.02);
  EXPECT_DOUBLE_EQ(j["abs_error"].get<double>(), std::abs(j["estimate"].get<double>() - j["analytic"].get<double>()));
  EXPECT_EQ(j["seed"].get<std::uint64_t>(), 7u);
  EXPECT_EQ(run({"volume-ratio", "--samples", "100"}).code, 2);
}

TEST_F(CliTest, Mirror) {
  ASSERT_EQ(run({"examples", "choi-witness", "-o", path("c.json")}).code, 0);
  Result r = run({"mirror", path("c.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(io::json::parse(r.out)["mu_bound"].get<double>(), 4.0 / 3.0, 1e-12);

  r = run({"mirror", write("r.json", io::witness_to_json(witness_from_map(reduction_map(2))))});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(io::json::parse(r.out)["mu_bound"].get<double>(), 1.0, 1e-12);

  r = run({"mirror", write("s.json", io::witness_to_json(witness_from_map(transposition_map(2))))});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(io::json::parse(r.out)["mu_bound"].get<double>(), 1.0, 1e-12);

  r = run({"mirror", write("t3.json", io::witness_to_json(witness_from_map(transposition_map(3))))});
  EXPECT_EQ(r.code, 3);
  EXPECT_FALSE(r.err.empty());
}

TEST_F(CliTest, MirrorRejectsInconsistentCoefficients) {
  io::json j = io::witness_to_json(witness_from_map(reduction_map(2)));
  j["coeffs"]["r00"] = 5.0;
  EXPECT_EQ(run({"mirror", write("w.json", j)}).code, 2);
  j.erase("coeffs");
  EXPECT_EQ(run({"mirror", write("w2.json", j)}).code, 0);
}

TEST_F(CliTest, Examples) {
  ASSERT_EQ(run({"examples", "rho4", "--a", "2", "-o", path("r.json")}).code, 0);
  const io::StateDocument doc = io::state_from_json(io::load_json(path("r.json")));
  EXPECT_EQ(doc.d1, 4);
  EXPECT_EQ(doc.rho.dim(), 16);
  EXPECT_EQ(doc.rho.matrix(), rho4({2.0}).matrix());

  ASSERT_EQ(run({"examples", "terhal", "-o", path("t.json")}).code, 0);
  EXPECT_EQ(io::state_from_json(io::load_json(path("t.json"))).rho.dim(), 12);

  const Result b = run({"examples", "bell", "--d", "3"});
  ASSERT_EQ(b.code, 0);
  EXPECT_EQ(io::state_from_json(io::json::parse(b.out)).rho.matrix(), max_entangled(3).matrix());

  const Result w = run({"examples", "bell-witness", "--family", "2", "--a", "0", "--b", "1"});
  ASSERT_EQ(w.code, 0) << w.err;
  EXPECT_EQ(run({"examples", "rho4"}).out, run({"examples", "rho4"}).out);

  EXPECT_EQ(run({"examples", "nonsense"}).code, 2);
  EXPECT_EQ(run({"examples", "rho4", "--a", "-1"}).code, 2);
  EXPECT_EQ(run({"examples", "bell-witness", "--a", "1", "--b", "1"}).code, 2);
}

TEST_F(CliTest, ReportRoundTripIsBitStable) {
  const std::vector<std::pair<std::string, HermitianMatrix>> states{
      {"r", rho4({0.37})}, {"t", terhal_state()}, {"x", random_density(3, 3, 5)}};
  const std::vector<std::pair<int, int>> dims{{4, 4}, {3, 4}, {3, 3}};
  for (std::size_t i = 0; i < states.size(); ++i) {
    const auto& [name, rho] = states[i];
    const std::string f = write(name + ".json", io::state_to_json(rho, dims[i].first, dims[i].second).dump(2));
    const io::StateDocument back = io::state_from_json(io::load_json(f));
    EXPECT_EQ(back.rho.matrix(), rho.matrix());
    const Result r = run({"detect", f});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, io::report_to_json(detect(rho, dims[i].first, dims[i].second)).dump(2) + "\n");
    EXPECT_EQ(r.out, run({"detect", f}).out);
  }
}

TEST_F(CliTest, ExitCodesForUsage) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
  const Result v = run({"--version"});
  EXPECT_EQ(v.code, 0);
  EXPECT_EQ(v.out, std::string(kVersion) + "\n");
}
