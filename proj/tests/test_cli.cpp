#include "doctest.h"

#include "orbidim/cases.hpp"
#include "orbidim/cli.hpp"

#include "json.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <sstream>

using namespace orbidim;
namespace fs = std::filesystem;

namespace {

const fs::path data_dir{ORBIDIM_TEST_DATA};

struct Run {
    int code = 0;
    std::string out;
    std::string err;
};

Run orbidim_cli(std::vector<std::string> args)
{
    args.insert(args.begin(), "orbidim");
    args.push_back("--data");
    args.push_back(data_dir.string());
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    Run r;
    r.code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

struct TempDir {
    fs::path path;
    TempDir()
    {
        static std::atomic<int> counter{0};
        auto stamp = std::chrono::steady_clock::now().time_since_epoch().count();
        path = fs::temp_directory_path() / ("orbidim_cli_" + std::to_string(stamp) + "_" + std::to_string(counter++));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const fs::path& p, const std::string& text)
{
    std::ofstream out(p, std::ios::binary);
    out << text;
}

} // namespace

TEST_CASE("coeffs json")
{
    auto r = orbidim_cli({"coeffs", "--n", "6", "--format", "json"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j == nlohmann::json::parse(R"({"1":12,"2":-4,"3":-3,"6":1})"));

    // non-integral coefficients are "p/q" strings
    auto r4 = orbidim_cli({"--format", "json", "coeffs", "--n", "4"});
    CHECK(r4.code == 0);
    auto j4 = nlohmann::json::parse(r4.out);
    CHECK(j4["2"] == "-3/2");
    CHECK(j4["4"] == "-1/2");
    CHECK(j4["1"] == 6);
}

TEST_CASE("csv and table output")
{
    auto csv = orbidim_cli({"cusps", "--n", "6", "--format", "csv"});
    CHECK(csv.code == 0);
    CHECK(csv.out == "cusp,width\n1/6,1\n1/3,2\n1/2,3\n1/1,6\n");
    auto tab = orbidim_cli({"dcoeff", "--n", "6", "--i", "2", "--j", "1", "--k", "2"});
    CHECK(tab.code == 0);
    CHECK(tab.out.find("4") != std::string::npos);
}

TEST_CASE("usage errors exit 2")
{
    auto bad_level = orbidim_cli({"coeffs", "--n", "11"});
    CHECK(bad_level.code == 2);
    CHECK(bad_level.err.find("11 is not a genus-zero level") != std::string::npos);

    CHECK(orbidim_cli({"bogus"}).code == 2);
    CHECK(orbidim_cli({}).code == 2);
    CHECK(orbidim_cli({"coeffs"}).code == 2);
    CHECK(orbidim_cli({"coeffs", "--n", "6", "--format", "xml"}).code == 2);
    CHECK(orbidim_cli({"coeffs", "--n", "6", "--frobnicate"}).code == 2);
    CHECK(orbidim_cli({"dcoeff", "--n", "6", "--i", "2", "--j", "2", "--k", "5"}).code == 2);
    CHECK(orbidim_cli({"eta", "--quotient", "5:1", "--prec", "3"}).code == 0);
    CHECK(orbidim_cli({"eta", "--quotient", "five", "--prec", "3"}).code == 2);
    CHECK(orbidim_cli({"inner", "--algebra", "A2", "--h", "1/2"}).code == 2);
    CHECK(orbidim_cli({"case", "run", "99"}).code == 2);
    CHECK(orbidim_cli({"kac", "--algebra", "Z9", "--order", "2"}).code == 2);
}

TEST_CASE("series commands")
{
    auto h = orbidim_cli({"hauptmodul", "--n", "4", "--prec", "2", "--format", "json"});
    CHECK(h.code == 0);
    auto j = nlohmann::json::parse(h.out);
    REQUIRE(j["terms"].size() >= 2);
    CHECK(j["terms"][0]["exponent"] == -1);
    CHECK(j["terms"][0]["coefficient"] == 1);
    CHECK(j["terms"][1]["exponent"] == 0);
    CHECK(j["terms"][1]["coefficient"] == -8);

    auto e = orbidim_cli({"eta", "--quotient", "1:24", "--prec", "3", "--format", "json"});
    CHECK(e.code == 0);
    auto je = nlohmann::json::parse(e.out);
    CHECK(je["terms"][0]["exponent"] == 1);
    CHECK(je["terms"][1]["coefficient"] == -24);

    auto f = orbidim_cli({"fs", "--n", "6", "--cusp", "1/2", "--divisor", "--format", "json"});
    CHECK(f.code == 0);
}

TEST_CASE("Lie algebra commands")
{
    auto in = orbidim_cli({"inner", "--algebra", "A4", "--h", "2/5,2/5,2/5,2/5", "--format", "json"});
    CHECK(in.code == 0);
    auto k = orbidim_cli({"kac", "--algebra", "E6", "--order", "2"});
    CHECK(k.code == 0);
    CHECK(k.out.find("A1A5") != std::string::npos);
    CHECK(k.out.find("D5C") != std::string::npos);
}

TEST_CASE("case run")
{
    auto r = orbidim_cli({"case", "run", "4"});
    CHECK(r.code == 0);
    auto last = r.out.substr(r.out.rfind("d = "));
    CHECK(last.rfind("d = 744", 0) == 0);
    CHECK(last.find("PASS") != std::string::npos);

    auto js = orbidim_cli({"case", "run", "4", "--format", "json"});
    CHECK(js.code == 0);
    auto j = nlohmann::json::parse(js.out);
    CHECK(j["d"] == 744);
    CHECK(j["passed"] == true);
}

TEST_CASE("verification failures exit 1")
{
    TempDir tmp;
    std::string cases = slurp(data_dir / "cases.json");
    auto at = cases.find("\"expectedD\": 744");
    REQUIRE(at != std::string::npos);
    cases.replace(at, 16, "\"expectedD\": 743");
    spit(tmp.path / "cases.json", cases);
    fs::copy_file(data_dir / "schellekens.json", tmp.path / "schellekens.json");
    spit(tmp.path / "SHA256SUMS", cases::sha256_hex(cases) + "  cases.json\n" +
                                      cases::sha256_hex(slurp(tmp.path / "schellekens.json")) + "  schellekens.json\n");

    std::vector<std::string> args{"case", "run", "4", "--data", tmp.path.string()};
    std::vector<const char*> argv{"orbidim"};
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    CHECK(cli::run(static_cast<int>(argv.size()), argv.data(), out, err) == 1);
    CHECK(out.str().find("FAIL") != std::string::npos);

    // missing Schellekens table: I/O failure before any case runs
    fs::remove(tmp.path / "schellekens.json");
    std::ostringstream out2, err2;
    std::vector<std::string> args2{"case", "run", "--all", "--data", tmp.path.string()};
    std::vector<const char*> argv2{"orbidim"};
    for (const auto& a : args2) argv2.push_back(a.c_str());
    CHECK(cli::run(static_cast<int>(argv2.size()), argv2.data(), out2, err2) == 1);
    CHECK(out2.str().empty());
}

TEST_CASE("schellekens scan")
{
    auto r = orbidim_cli({"schellekens", "scan", "--dim", "744", "--fixed", "D8E8", "--order", "2", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out.find("E8^3") != std::string::npos);
    CHECK(r.out.find("D16E8") == std::string::npos);
}

TEST_CASE("screen command")
{
    auto r = orbidim_cli({"screen", "--case", "11", "--format", "json"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["problematic"].size() == 11);
    auto floor = orbidim_cli({"screen", "--case", "4", "--floor", "1", "--format", "json"});
    CHECK(floor.code == 0);
    CHECK(nlohmann::json::parse(floor.out)["problematic"].empty());
}

TEST_CASE("identical arguments give identical output")
{
    std::vector<std::vector<std::string>> cmds{
        {"coeffs", "--n", "12", "--format", "json"},
        {"cusps", "--n", "18"},
        {"kac", "--algebra", "F4", "--order", "3", "--format", "csv"},
        {"case", "run", "--all"},
        {"screen", "--case", "15", "--format", "json"},
    };
    for (const auto& c : cmds) {
        auto a = orbidim_cli(c);
        auto b = orbidim_cli(c);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("tables regen")
{
    TempDir tmp;
    auto out_dir = tmp.path / "out";
    auto r = orbidim_cli({"tables", "regen", "--out", out_dir.string()});
    CHECK(r.code == 0);
    for (const char* f : {"coefficients.json", "d_coefficients.json", "orbifold_table.json", "fixed_ranks.json", "screening.json",
                          "manifest.json"})
        CHECK_MESSAGE(fs::exists(out_dir / f), f);

    auto manifest = nlohmann::json::parse(slurp(out_dir / "manifest.json"));
    CHECK(manifest.dump().find(cases::sha256_hex(slurp(out_dir / "coefficients.json"))) != std::string::npos);

    // a second run is byte-identical
    auto again = tmp.path / "again";
    CHECK(orbidim_cli({"tables", "regen", "--out", again.string()}).code == 0);
    for (const auto& e : fs::directory_iterator(out_dir)) CHECK(slurp(e.path()) == slurp(again / e.path().filename()));
}

TEST_CASE("tables regen reports a corrupted golden file")
{
    TempDir tmp;
    auto golden = tmp.path / "golden";
    fs::copy(data_dir / "golden", golden);
    std::string text = slurp(golden / "fixed_ranks.json");
    auto at = text.find('8');
    REQUIRE(at != std::string::npos);
    text[at] = '9';
    spit(golden / "fixed_ranks.json", text);

    auto r = orbidim_cli({"tables", "regen", "--out", (tmp.path / "out").string(), "--golden", golden.string()});
    CHECK(r.code == 1);
    std::string all = r.out + r.err;
    CHECK(all.find("fixed_ranks.json") != std::string::npos);
    CHECK(all.find("coefficients.json: differs") == std::string::npos);

    fs::remove(golden / "screening.json");
    auto r2 = orbidim_cli({"tables", "regen", "--out", (tmp.path / "out2").string(), "--golden", golden.string()});
    CHECK(r2.code == 1);
    CHECK((r2.out + r2.err).find("screening.json") != std::string::npos);
}

TEST_CASE("tables regen into an unwritable location")
{
    TempDir tmp;
    spit(tmp.path / "plain_file", "x");
    auto r = orbidim_cli({"tables", "regen", "--out", (tmp.path / "plain_file" / "sub").string()});
    CHECK(r.code == 1);
    CHECK_FALSE(r.err.empty());
}
