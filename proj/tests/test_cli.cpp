#include "cli.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = tqft::cli::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(TQFT_TEST_DATA_DIR) + "/" + name; }

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("tqft_test_" + name);
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

// (label, phi, probability) rows of a sweep CSV.
struct Row {
    std::string k;
    double phi, prob;
};
std::vector<Row> rows(const std::string& csv) {
    std::vector<Row> out;
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    REQUIRE(line == "k,phi,probability");
    while (std::getline(in, line)) {
        const auto c1 = line.find(','), c2 = line.rfind(',');
        out.push_back({line.substr(0, c1), std::stod(line.substr(c1 + 1, c2 - c1 - 1)), std::stod(line.substr(c2 + 1))});
    }
    return out;
}

double coeff_from_json(const std::string& text, const std::string& key, int part) {
    const auto at = text.find("\"" + key + "\"");
    REQUIRE(at != std::string::npos);
    auto pos = text.find('[', at) + 1;
    if (part == 1) pos = text.find(',', pos) + 1;
    return std::stod(text.substr(pos));
}

} // namespace

TEST_CASE("cli bracket") {
    CHECK(run({"bracket", data("unknot.json"), "--exact"}).out == "-1*A^-2 + -1*A^2\n");
    CHECK(run({"bracket", data("unknot.json")}).out == "-1*A^-2 + -1*A^2\n");
    CHECK(run({"bracket", data("unknot.json"), "--k", "2"}).out == "-1.41421356237+0i\n");
    CHECK(run({"bracket", data("unknot.json"), "--mode", "inf"}).out == "-2+0i\n");
    CHECK(run({"bracket", data("unknot.json"), "--mode", "-1"}).out == "2+0i\n");
    CHECK(run({"bracket", data("unknot.json"), "--a", "i"}).out == "2+0i\n");
    CHECK(run({"bracket", data("two_kinks.json")}).out == "-1*A^-8 + -1*A^-4\n");
    CHECK(run({"bracket", data("malformed.json")}).code == 2);
    CHECK(run({"bracket", data("open_arc.json")}).code == 2);
    CHECK(run({"bracket", data("missing.json")}).code == 2);
    CHECK(run({"bracket", data("too_large.json")}).code == 3);
    CHECK(run({"bracket", data("unknot.json"), "--exact", "--k", "2"}).code == 2);
    CHECK(run({"bracket", data("unknot.json"), "--a", "banana"}).code == 2);
}

TEST_CASE("cli sweep") {
    const auto path = temp_file("sweep.csv");
    auto r = run({"sweep", "--k", "inf", "--phi-steps", "720", "--out", path.string()});
    REQUIRE(r.code == 0);
    auto inf = rows(slurp(path));
    REQUIRE(inf.size() == 720);
    double best = 0;
    for (const auto& row : inf) best = std::max(best, row.prob);
    CHECK(std::abs(best - 9.0 / 28.0) <= 1e-6);
    CHECK(inf[1].phi == doctest::Approx(2 * 3.141592653589793 / 720));

    REQUIRE(run({"sweep", "--k", "2", "--phi-steps", "90", "--out", path.string()}).code == 0);
    for (const auto& row : rows(slurp(path))) CHECK(std::abs(row.prob - 0.25) <= 0.01);

    REQUIRE(run({"sweep", "--k", "-1,inf", "--phi-steps", "100", "--out", path.string()}).code == 0);
    const auto both = rows(slurp(path));
    REQUIRE(both.size() == 200);
    for (int j = 0; j < 100; ++j) {
        CHECK(both[j].k == "-1");
        CHECK(both[100 + j].k == "inf");
        CHECK(std::abs(both[j].prob - both[100 + j].prob) <= 1e-9);
    }

    r = run({"sweep", "--k", "1,3", "--phi-steps", "10", "--out", path.string()});
    CHECK(r.code == 0);
    CHECK(r.err.find("warning") != std::string::npos);
    CHECK(rows(slurp(path)).size() == 10);

    CHECK(run({"sweep", "--k", "3", "--phi-steps", "1", "--out", path.string()}).code == 2);
    CHECK(run({"sweep", "--k", "3", "--out", "/nonexistent-dir/x.csv"}).code == 4);
    CHECK(run({"sweep", "--k", "three", "--out", path.string()}).code == 2);
    std::filesystem::remove(path);
}

TEST_CASE("cli sweep output does not depend on the thread count") {
    const auto a = temp_file("t1.csv"), b = temp_file("t8.csv");
    const std::vector<std::string> base = {"sweep", "--k", "-1,2,3,4,5,10,inf", "--phi-steps", "333"};
    auto with = [&](const std::filesystem::path& p, const char* threads) {
        auto args = base;
        args.insert(args.end(), {"--out", p.string(), "--threads", threads});
        return run(args).code;
    };
    REQUIRE(with(a, "1") == 0);
    REQUIRE(with(b, "8") == 0);
    CHECK(slurp(a) == slurp(b));
    std::filesystem::remove(a);
    std::filesystem::remove(b);
}

TEST_CASE("cli coeffs") {
    auto r = run({"coeffs", "--alpha", "1", "--beta", "0", "--k", "3", "--format", "json"});
    REQUIRE(r.code == 0);
    const double d = -2 * std::cos(3.141592653589793 / 5);
    CHECK(coeff_from_json(r.out, "0000", 0) == doctest::Approx(d / (d * d * d)).epsilon(1e-11));

    r = run({"coeffs", "--alpha", "0", "--beta", "1", "--k", "3"});
    REQUIRE(r.code == 0);
    const std::complex<double> a(std::cos(3.141592653589793 / 10), std::sin(3.141592653589793 / 10));
    const auto want = -1.0 / (std::pow(a, 8) * d * d * d);
    CHECK(coeff_from_json(r.out, "0101", 0) == doctest::Approx(want.real()).epsilon(1e-11));
    CHECK(coeff_from_json(r.out, "0101", 1) == doctest::Approx(want.imag()).epsilon(1e-11));

    r = run({"coeffs", "--alpha", "1", "--beta", "0", "--k", "3", "--format", "csv"});
    CHECK(r.out.rfind("index,re,im\n0000,", 0) == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 17);

    CHECK(run({"coeffs", "--alpha", "1", "--beta", "0", "--k", "1"}).code == 5);
    CHECK(run({"coeffs", "--alpha", "1", "--beta", "0", "--k", "3", "--format", "xml"}).code == 2);
}

TEST_CASE("cli recover") {
    auto r = run({"recover", "--alpha", "0.6", "--beta", "0.8", "--a", "1"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("fidelity = 1.000000000000") != std::string::npos);
    r = run({"recover", "--alpha", "1", "--beta", "0", "--a", "i"});
    CHECK(r.out.find("fidelity = 1.000000000000") != std::string::npos);
    r = run({"recover", "--alpha", "0.6", "--beta", "0.8", "--a", "exp:0.3141592653589793"});
    CHECK(r.code == 0);
    CHECK(r.err.find("NonUnitaryPoint") != std::string::npos);
    CHECK(r.out.find("fidelity = ") != std::string::npos);
    CHECK(run({"recover", "--alpha", "0.6+0.2i", "--beta", "0.8", "--a", "1"}).code == 6);
    CHECK(run({"recover", "--alpha", "0.6", "--beta", "i", "--a", "1"}).code == 6);
    CHECK(run({"recover", "--alpha", "0.6+0i", "--beta", "0.8", "--a", "-i"}).code == 0);
    CHECK(run({"recover", "--alpha", "abc", "--beta", "0.8", "--a", "1"}).code == 2);
}

TEST_CASE("cli selftest mutation canary") {
    const auto r = run({"selftest", "--corrupt-r-matrix"});
    CHECK(r.code == 1);
    CHECK(r.out.find("[FAIL] 06") != std::string::npos);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 13);
}

TEST_CASE("cli usage errors") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"coeffs", "--alpha", "1"}).code == 2);
}
