#include "matsos/cli/commands.hpp"
#include "matsos/matrixcert/serialize.hpp"
#include "matsos/polymatrix/matrix_io.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace matsos::cli {
namespace {

const std::string kData = MATSOS_TEST_DATA_DIR;

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cmd(RunConfig config) {
    std::ostringstream out, err;
    int code = run(config, out, err);
    return {code, out.str(), err.str()};
}

RunConfig with_input(const std::string& command, const std::string& file) {
    RunConfig c;
    c.command = command;
    c.input_path = kData + "/" + file;
    return c;
}

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("matsos_cli_" + name)).string();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

TEST(Cli, FourSquares) {
    RunConfig c;
    c.command = "four-squares";
    c.value = "7";
    auto r = run_cmd(c);
    EXPECT_EQ(r.code, exit_code::kOk);
    EXPECT_EQ(r.out, "7 = 2^2 + 1^2 + 1^2 + 1^2\n");
    c.value = "0";
    EXPECT_EQ(run_cmd(c).out, "0 = 0^2 + 0^2 + 0^2 + 0^2\n");
    c.value = "-3";
    EXPECT_EQ(run_cmd(c).code, exit_code::kInput);
    c.value = "seven";
    EXPECT_EQ(run_cmd(c).code, exit_code::kInput);
}

TEST(Cli, MinpolyExampleTwo) {
    auto r = run_cmd(with_input("minpoly", "example2.matrix"));
    EXPECT_EQ(r.code, exit_code::kOk);
    EXPECT_EQ(r.out,
              "d: 3\n"
              "a3: 1\n"
              "a2: 3*x1^2 + 3*x2^2 + 3*x3^2\n"
              "a1: 2*x1^4 + 6*x1^2*x2^2 + 6*x1^2*x3^2 + 2*x2^4 + 6*x2^2*x3^2 + 2*x3^4\n"
              "a0: 4*x1^4*x2^2 + 4*x1^2*x2^2*x3^2 + 4*x1^2*x3^4 + 4*x2^4*x3^2\n");
    EXPECT_TRUE(r.err.empty());
}

TEST(Cli, MinorsOfIdentity) {
    auto r = run_cmd(with_input("minors", "identity3.matrix"));
    EXPECT_EQ(r.code, exit_code::kOk);
    std::istringstream lines(r.out);
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) {
        ++count;
        EXPECT_EQ(line.substr(line.size() - 3), ": 1") << line;
    }
    EXPECT_EQ(count, 7);
}

TEST(Cli, CheckPsd) {
    auto r = run_cmd(with_input("check-psd", "x1.matrix"));
    EXPECT_EQ(r.code, exit_code::kRefuted);
    EXPECT_EQ(r.out.rfind("fail: principal minor {1} = -", 0), 0u);
    auto again = run_cmd(with_input("check-psd", "x1.matrix"));
    EXPECT_EQ(again.out, r.out);
    EXPECT_EQ(run_cmd(with_input("check-psd", "example1.matrix")).code, exit_code::kOk);
}

TEST(Cli, CertifyThenVerify) {
    const std::string cert_path = temp_path("ex1.json");
    auto c = with_input("certify", "example1.matrix");
    c.store_path = kData + "/example1.store";
    c.output_path = cert_path;
    auto r = run_cmd(c);
    ASSERT_EQ(r.code, exit_code::kOk) << r.err;
    EXPECT_NE(r.out.find("square_count: 100\n"), std::string::npos);
    EXPECT_NE(r.out.find("a0: denominator-lift, 24 squares\n"), std::string::npos);

    auto v = with_input("verify", "example1.matrix");
    v.cert_path = cert_path;
    auto vr = run_cmd(v);
    EXPECT_EQ(vr.code, exit_code::kOk) << vr.err;

    // Flip one numerator coefficient: the sum no longer matches.
    std::string text = slurp(cert_path);
    auto pos = text.find("\"num\": \"", text.find("\"squares\": [\n    [")) + 8;
    text.insert(pos, "2*(");
    text.insert(text.find('"', pos), ")");
    const std::string tampered = temp_path("ex1_tampered.json");
    std::ofstream(tampered, std::ios::binary) << text;
    v.cert_path = tampered;
    vr = run_cmd(v);
    EXPECT_EQ(vr.code, exit_code::kRefuted);
    EXPECT_NE(vr.err.find("verification failed"), std::string::npos);

    auto wrong = with_input("verify", "example2.matrix");
    wrong.cert_path = cert_path;
    EXPECT_EQ(run_cmd(wrong).code, exit_code::kInput);

    std::filesystem::remove(cert_path);
    std::filesystem::remove(tampered);
}

TEST(Cli, CertifyFailures) {
    auto no_store = run_cmd(with_input("certify", "example1.matrix"));
    EXPECT_EQ(no_store.code, exit_code::kNoScalarCert);
    EXPECT_NE(no_store.err.find("a0 = "), std::string::npos);
    EXPECT_NE(no_store.err.find("  gram: "), std::string::npos);

    auto refuted = run_cmd(with_input("certify", "x1.matrix"));
    EXPECT_EQ(refuted.code, exit_code::kRefuted);
    EXPECT_NE(refuted.err.find("x1 = -"), std::string::npos);

    EXPECT_EQ(run_cmd(with_input("certify", "malformed.matrix")).code, exit_code::kInput);
    EXPECT_EQ(run_cmd(with_input("certify", "does_not_exist.matrix")).code, exit_code::kInput);

    auto c = with_input("certify", "example1.matrix");
    c.store_path = kData + "/malformed.matrix";
    EXPECT_EQ(run_cmd(c).code, exit_code::kInput);
}

TEST(Cli, CertifyIsDeterministic) {
    const std::string a = temp_path("c1.json"), b = temp_path("c2.json");
    auto c = with_input("certify", "constant.matrix");
    c.output_path = a;
    auto r1 = run_cmd(c);
    c.output_path = b;
    auto r2 = run_cmd(c);
    ASSERT_EQ(r1.code, exit_code::kOk);
    EXPECT_EQ(slurp(a), slurp(b));
    std::filesystem::remove(a);
    std::filesystem::remove(b);
}

TEST(Cli, UnknownCommand) {
    RunConfig c;
    c.command = "prove";
    EXPECT_EQ(run_cmd(c).code, exit_code::kUsage);
}

}  // namespace
}  // namespace matsos::cli
