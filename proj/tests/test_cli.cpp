#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "support.hpp"
#include "vlogic/json_io.hpp"

using namespace vlogic;
using json = nlohmann::json;
using vlogic::fixtures::cd;
using vlogic::fixtures::gen;

namespace {

struct outcome {
    int code;
    std::string out;
    std::string err;

    json payload() const { return json::parse(out); }
};

outcome run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = std::filesystem::temp_directory_path() /
               ("vlogic_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        std::filesystem::create_directories(dir_);
    }
    void TearDown() override { std::filesystem::remove_all(dir_); }

    std::string write(const std::string& name, const json& j) {
        const auto path = (dir_ / name).string();
        std::ofstream(path) << j.dump();
        return path;
    }

    std::filesystem::path dir_;
};

TEST(JsonIo, MatrixRoundTripIsExact) {
    gen g(61);
    for (int trial = 0; trial < 20; ++trial) {
        const auto m = g.matrix(g.integer(1, 6), g.integer(1, 6));
        const auto text = json_io::to_json(m).dump();
        EXPECT_EQ(json_io::matrix_from_json(json::parse(text)), m);
    }
}

TEST(JsonIo, RealMatrixOmitsImaginaryPart) {
    const complex_matrix m{{1, 2}, {3, 4}};
    const auto j = json_io::to_json(m);
    EXPECT_FALSE(j.contains("im"));
    EXPECT_EQ(json_io::matrix_from_json(j), m);
}

TEST(JsonIo, MatrixShapeErrors) {
    EXPECT_THROW(json_io::matrix_from_json(json{{"rows", 2}, {"cols", 2}, {"re", {{1, 2}}}}), dimension_mismatch);
    EXPECT_THROW(json_io::matrix_from_json(json{{"rows", 1}, {"cols", 2}, {"re", {{1, 2}}}, {"im", {{1}}}}),
                 dimension_mismatch);
    EXPECT_THROW(json_io::matrix_from_json(json{{"rows", 1}}), error);
}

TEST(JsonIo, BasisRoundTripRecomputesDuals) {
    gen g(62);
    for (int trial = 0; trial < 20; ++trial) {
        const auto b = random_basis(g.integer(2, 32), g.uniform(-0.5, 0.9), g.seed());
        auto j = json::parse(json_io::to_json(b).dump());
        j["y"] = std::vector<double>(b.dim(), 0.0);
        const auto back = json_io::basis_from_json(j);
        EXPECT_EQ(back.s(), b.s());
        EXPECT_EQ(back.n(), b.n());
        EXPECT_EQ(back.y(), b.y());
    }
    EXPECT_THROW(json_io::basis_from_json(json{{"dim", 3}, {"s", {1, 0}}, {"n", {0, 1}}}), dimension_mismatch);
    EXPECT_THROW(json_io::basis_from_json(json{{"s", {1, 0}}}), error);
}

TEST_F(CliTest, BasisCanonical) {
    const auto r = run({"basis", "--canonical", "DIM4"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.payload()["s"], json({0.5, 0.5, 0.5, 0.5}));
    EXPECT_EQ(r.payload()["epsilon"], 0.0);
}

TEST_F(CliTest, BasisIsDeterministic) {
    const auto a = run({"basis", "--dim", "8", "--epsilon", "0", "--seed", "3"});
    const auto b = run({"basis", "--dim", "8", "--epsilon", "0", "--seed", "3"});
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
}

TEST_F(CliTest, BasisRejectsBadInput) {
    EXPECT_EQ(run({"basis", "--dim", "8", "--epsilon", "1.5"}).code, 1);
    EXPECT_EQ(run({"basis"}).code, 1);
    EXPECT_EQ(run({"basis", "--canonical", "SET9"}).code, 1);
    EXPECT_EQ(run({"basis", "--canonical", "SET1", "--dim", "2"}).code, 1);
    EXPECT_EQ(run({}).code, 1);
    EXPECT_EQ(run({"frobnicate"}).code, 1);
}

TEST_F(CliTest, HelpExitsZero) {
    const auto r = run({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("diagnose"), std::string::npos);
}

TEST_F(CliTest, OpImplicationOnSet1) {
    const auto basis = write("set1.json", json_io::to_json(canonical_basis("SET1")));
    const auto r = run({"op", "--basis", basis, "--gate", "IMPL"});
    ASSERT_EQ(r.code, 0) << r.err;
    const complex_matrix l{{1, 0, 1, 1}, {0, 1, 0, 0}};
    EXPECT_LT(max_abs_diff(json_io::matrix_from_json(r.payload()), l), 1e-12);
    EXPECT_EQ(r.payload()["gate"], "IMPL");
    EXPECT_EQ(r.payload()["arity"], 2);
    EXPECT_EQ(run({"op", "--basis", basis, "--gate", "MAYBE"}).code, 1);
    EXPECT_EQ(run({"op", "--basis", (dir_ / "missing.json").string(), "--gate", "OR"}).code, 1);
}

TEST_F(CliTest, BasisOutputFeedsOtherCommands) {
    const auto gen_out = run({"basis", "--dim", "6", "--epsilon", "0.3", "--seed", "5"});
    ASSERT_EQ(gen_out.code, 0);
    const auto basis = write("b.json", gen_out.payload());
    EXPECT_EQ(run({"op", "--basis", basis, "--gate", "nand"}).code, 0);
    const auto srn = run({"sqrt-not", "--basis", basis});
    ASSERT_EQ(srn.code, 0) << srn.err;
    EXPECT_TRUE(srn.payload()["pass"].get<bool>());
    EXPECT_LT(srn.payload()["report"]["A2_minus_N"].get<double>(), 1e-10);
    EXPECT_EQ(srn.payload()["alpha"]["im"], 0.5);
    const auto euler = run({"euler", "--basis", basis, "--v", "0.25,0.5,1", "--k", "3"});
    ASSERT_EQ(euler.code, 0) << euler.err;
    EXPECT_TRUE(euler.payload()["pass"].get<bool>());
}

TEST_F(CliTest, OutFlagWritesFile) {
    const auto path = (dir_ / "out.json").string();
    const auto r = run({"basis", "--canonical", "SET2", "--out", path});
    ASSERT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    EXPECT_EQ(json_io::basis_from_json(json_io::read_file(path)).s(), canonical_basis("SET2").s());
}

TEST_F(CliTest, DiagnoseHiddenXor) {
    const auto b = canonical_basis("SET1");
    const auto basis = write("set1.json", json_io::to_json(b));
    const auto hidden = write("hidden.json", json_io::to_json(dyadic_operator(b, gates::xor_)));
    const auto r = run({"diagnose", "--oracle", hidden, "--basis", basis, "--arity", "2"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.payload()["verdict"], "XOR");
    EXPECT_LT(r.payload()["distance"].get<double>(), 1e-10);
}

TEST_F(CliTest, DiagnoseInfersArity) {
    const auto b = random_basis(4, 0.0, 8);
    const auto basis = write("b.json", json_io::to_json(b));
    const auto mon = write("m.json", json_io::to_json(monadic_operator(b, gates::cnot)));
    const auto r = run({"diagnose", "--oracle", mon, "--basis", basis});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.payload()["verdict"], "CNOT");
    EXPECT_EQ(r.payload()["arity"], 1);
    const auto odd = write("odd.json", json_io::to_json(complex_matrix(4, 5)));
    EXPECT_EQ(run({"diagnose", "--oracle", odd, "--basis", basis}).code, 1);
}

TEST_F(CliTest, DiagnoseCorruptedOracleIsUnknown) {
    const auto b = canonical_basis("SET1");
    const auto basis = write("set1.json", json_io::to_json(b));
    auto j = json_io::to_json(dyadic_operator(b, gates::and_));
    j["re"][1][2] = j["re"][1][2].get<double>() + 0.25;
    const auto hidden = write("hidden.json", j);
    const auto r = run({"diagnose", "--oracle", hidden, "--basis", basis});
    EXPECT_EQ(r.code, 2);
    EXPECT_EQ(r.payload()["verdict"], "UNKNOWN");
    EXPECT_FALSE(r.err.empty());
}

TEST_F(CliTest, DiagnoseRejectsOverlappingBasis) {
    const auto b = random_basis(3, 0.3, 1);
    const auto basis = write("b.json", json_io::to_json(b));
    const auto oracle = write("o.json", json_io::to_json(logical_identity(b)));
    EXPECT_EQ(run({"diagnose", "--oracle", oracle, "--basis", basis}).code, 1);
}

TEST_F(CliTest, EulerFailureExitsTwo) {
    const auto basis = write("set1.json", json_io::to_json(canonical_basis("SET1")));
    const auto r = run({"euler", "--basis", basis, "--v", "0.5", "--tol", "1e-30"});
    EXPECT_EQ(r.code, 2);
    EXPECT_FALSE(r.payload()["pass"].get<bool>());
}

TEST_F(CliTest, VerifyPasses) {
    const auto r = run({"verify", "--dim", "4", "--seed", "1"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = r.payload();
    EXPECT_TRUE(j["pass"].get<bool>());
    EXPECT_EQ(j["dim"], 4);
    EXPECT_GT(j["identities"].size(), 20u);
    EXPECT_EQ(run({"verify", "--dim", "1"}).code, 1);
}

} // namespace
