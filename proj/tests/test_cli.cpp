#include "approx.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "cabletract/io.hpp"

namespace fs = std::filesystem;
using namespace cabletract;

namespace {

fs::path scratch(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / ("cabletract_cli_test_" + name);
    fs::remove_all(p);
    return p;
}

int run(const std::string& args) {
    const std::string cmd = std::string("\"") + CABLETRACT_CLI + "\" " + args + " >/dev/null 2>&1";
    const int rc = std::system(cmd.c_str());
    return rc == -1 ? -1 : WEXITSTATUS(rc);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("unknown inputs fail with a nonzero status and leave no files") {
    const fs::path out = scratch("bad");
    CHECK(run("--out " + out.string() + " energy --site Atlantis") != 0);
    CHECK_FALSE(fs::exists(out / "tables" / "sites.csv"));
    CHECK(run("--out " + out.string() + " plan --field field_999") != 0);
    CHECK_FALSE(fs::exists(out / "tables" / "corpus.csv"));
    CHECK(run("--out " + out.string() + " launch") != 0);
    CHECK(run("--out " + out.string()) != 0);
}

TEST_CASE("econ table carries the reference row and metadata") {
    const fs::path out = scratch("econ");
    REQUIRE(run("--out " + out.string() + " econ") == 0);
    const CsvTable t = read_csv((out / "tables" / "npv_farm_size.csv").string());
    bool found = false;
    for (std::size_t i = 0; i < t.rows.size(); ++i)
        if (t.num(i, "farm_ha") == 25 && t.num(i, "discount_rate") == 0.08) {
            CHECK(t.num(i, "npv_eur") == approx(3978.0).epsilon(0.05));
            found = true;
        }
    CHECK(found);
    const std::string text = slurp(out / "tables" / "npv_farm_size.csv");
    CHECK(text.rfind("# seed=42 params=defaults version=", 0) == 0);
    CHECK(fs::exists(out / "tables" / "competitor_comparison.csv"));
}

TEST_CASE("single-field plan") {
    const fs::path out = scratch("plan");
    REQUIRE(run("--out " + out.string() + " plan --field field_001") == 0);
    const CsvTable t = read_csv((out / "tables" / "shape_efficiency.csv").string());
    REQUIRE(t.rows.size() == 1);
    CHECK(t.at(0, "field_id") == "field_001");
    CHECK(t.num(0, "eta") == approx(1.0));
}

TEST_CASE("parameter file hash appears in the header") {
    const fs::path out = scratch("params");
    fs::create_directories(out);
    {
        std::ofstream(out / "p.txt") << "span_m=60\n";
    }
    REQUIRE(run("--out " + out.string() + " --params " + (out / "p.txt").string() + " variants") == 0);
    const std::string text = slurp(out / "tables" / "variants.csv");
    CHECK(text.rfind("# seed=42 params=", 0) == 0);
    CHECK(text.find("params=defaults") == std::string::npos);
    std::ofstream(out / "bad.txt") << "span_m=-3\n";
    CHECK(run("--out " + out.string() + "/x --params " + (out / "bad.txt").string() + " variants") != 0);
}

TEST_CASE("full regeneration is byte-identical across runs") {
    const fs::path a = scratch("all_a"), b = scratch("all_b");
    REQUIRE(run("--seed 42 --out " + a.string() + " all") == 0);
    REQUIRE(run("--seed 42 --out " + b.string() + " all") == 0);
    for (int i = 1; i <= 21; ++i) CHECK(fs::exists(a / "figdata" / ("F" + std::to_string(i) + ".csv")));
    int files = 0;
    for (const auto& e : fs::recursive_directory_iterator(a)) {
        if (!e.is_regular_file()) continue;
        ++files;
        const fs::path rel = fs::relative(e.path(), a);
        CAPTURE(rel.string());
        CHECK(slurp(e.path()) == slurp(b / rel));
    }
    CHECK(files >= 21 + 27);
}
