#include "doctest.h"

#include "app/commands.hpp"
#include "json.hpp"

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using doctest::Approx;
using Json = nlohmann::json;
namespace fs = std::filesystem;
namespace pt = boost::property_tree;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "cheeger");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cheeger::app::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

fs::path temp_file(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "cheeger_cli_tests";
    fs::create_directories(dir);
    return dir / name;
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p);
    std::stringstream s;
    s << f.rdbuf();
    return s.str();
}

// Counts <path> and <polyline> elements anywhere below `node`.
void count_elements(const pt::ptree& node, int& filled_paths, int& polylines) {
    for (const auto& [name, child] : node) {
        if (name == "path") {
            const auto fill = child.get_optional<std::string>("<xmlattr>.fill");
            if (fill && *fill != "none")
                ++filled_paths;
        } else if (name == "polyline") {
            ++polylines;
        }
        count_elements(child, filled_paths, polylines);
    }
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("cheeger command examples") {
    auto a = run({"cheeger", "cylinder", "--n", "3", "--l", "1", "--r", "1"});
    REQUIRE(a.code == 0);
    CHECK(Json::parse(a.out).at("h").get<double>() == Approx(3.72474).epsilon(1e-5));
    auto b = run({"cheeger", "cone", "--l", "1", "--theta", "0.5235987756"});
    REQUIRE(b.code == 0);
    CHECK(Json::parse(b.out).at("h").get<double>() == Approx(7.85898).epsilon(1e-5));
    auto c = run({"cheeger", "double-cone", "--l", "1", "--r", "1", "--theta", "1.0471975512"});
    REQUIRE(c.code == 0);
    const Json j = Json::parse(c.out);
    CHECK(j.at("h").get<double>() == Approx(3.00582).epsilon(1e-5));
    CHECK(j.at("certificate_pass").get<bool>());
    CHECK(j.at("candidate").at("structure") == "double-cone");
}

TEST_CASE("angle conveniences") {
    auto a = run({"cheeger", "cone", "--l", "4", "--theta-arcsin", "0.6"});
    REQUIRE(a.code == 0);
    CHECK(Json::parse(a.out).at("h").get<double>() == Approx(1.69452).epsilon(1e-5));
    auto b = run({"cheeger", "cone", "--l", "1", "--theta-deg", "30"});
    REQUIRE(b.code == 0);
    CHECK(Json::parse(b.out).at("h").get<double>() == Approx(7.85898).epsilon(1e-5));
    CHECK(run({"cheeger", "cone", "--l", "1", "--theta", "0.5", "--theta-deg", "30"}).code == 1);
}

TEST_CASE("csv output has the fixed header") {
    auto a = run({"--format", "csv", "cheeger", "cylinder", "--l", "2", "--r", "1", "--n", "10"});
    REQUIRE(a.code == 0);
    std::istringstream in(a.out);
    std::string header, row;
    std::getline(in, header);
    std::getline(in, row);
    CHECK(header == "family,l,r,theta,A,B,C,D,R,n,H_opt,h,structure,certificate_pass");
    CHECK(row.rfind("cylinder,", 0) == 0);
    CHECK(row.find(",cylinder,") != std::string::npos);
}

TEST_CASE("exit codes") {
    CHECK(run({"cheeger", "cylinder", "--l", "1"}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({"cheeger", "cylinder", "--l", "-1", "--r", "1"}).code == 2);
    CHECK(run({"cheeger", "cone", "--l", "1", "--theta", "0.7", "--n", "4"}).code == 2);
    CHECK(run({"plot", "cylinder", "--l", "1", "--r", "1", "--out",
               "/nonexistent-dir/x.svg"}).code == 3);
    CHECK(run({"check", "roundtrip", "--in", "/nonexistent-dir/r.json"}).code == 3);
    CHECK(run({"sweep", "--D-min", "1.0", "--D-max", "0.5"}).code == 1);
    CHECK(run({"sweep", "--D-min", "0.5", "--D-max", "0.5"}).code == 1);
}

TEST_CASE("classify and profile") {
    auto a = run({"classify", "--n", "5", "--H", "1", "--T", "0.10546875"});
    REQUIRE(a.code == 0);
    CHECK(Json::parse(a.out).at("class") == "cylinder");
    auto b = run({"--format", "csv", "profile", "--n", "3", "--H", "1", "--T", "0.1", "--points",
                  "20", "--length", "3"});
    REQUIRE(b.code == 0);
    std::istringstream in(b.out);
    std::string line;
    std::getline(in, line);
    CHECK(line == "s,x,y,sigma,first_integral_residual");
    int rows = 0;
    while (std::getline(in, line)) {
        const double res = std::stod(line.substr(line.rfind(',') + 1));
        CHECK(std::abs(res) < 1e-8);
        ++rows;
    }
    CHECK(rows == 20);
}

TEST_CASE("tables rows") {
    auto a = run({"tables", "--family", "cylinder"});
    REQUIRE(a.code == 0);
    std::istringstream in(a.out);
    std::string line;
    std::getline(in, line);
    CHECK(line.find("reference_h") != std::string::npos);
    int rows = 0;
    bool n30 = false, n10 = false;
    while (std::getline(in, line)) {
        ++rows;
        if (line.rfind("cylinder,1,1,", 0) == 0 && line.find(",30,") != std::string::npos) {
            n30 = true;
            CHECK(line.find(",29.7175,") != std::string::npos);
        }
        if (line.rfind("cylinder,2,1,", 0) == 0 && line.find(",10,") != std::string::npos) {
            n10 = true;
            CHECK(line.find(",9.51714,") != std::string::npos);
        }
    }
    CHECK(rows == 15);
    CHECK(n30);
    CHECK(n10);

    auto b = run({"--format", "json", "tables", "--family", "double-cone"});
    REQUIRE(b.code == 0);
    const Json j = Json::parse(b.out);
    REQUIRE(j.size() == 6);
    bool found = false;
    for (const auto& e : j) {
        CHECK(std::abs(e.at("relative_delta_h").get<double>()) < 1e-3);
        if (std::abs(e.at("reference_h").get<double>() - 2.38303) < 1e-9) {
            found = true;
            CHECK(e.at("h").get<double>() == Approx(2.38303).epsilon(1e-5));
        }
    }
    CHECK(found);
}

TEST_CASE("sweep over a narrow range") {
    const auto csv = temp_file("sweep.csv");
    auto a = run({"sweep", "--D-min", "1.11", "--D-max", "1.13", "--step", "0.01", "--csv",
                  csv.string()});
    REQUIRE(a.code == 0);
    const Json j = Json::parse(a.out);
    REQUIRE(j.at("critical").size() == 1);
    CHECK(j.at("critical")[0].at("value").get<double>() == Approx(1.1216).epsilon(5e-3));
    CHECK(slurp(csv).rfind("D,h,H_opt,structure,Bm,phase\n", 0) == 0);
}

TEST_CASE("plot of the cylinder optimum is valid SVG with one filled path") {
    const auto svg = temp_file("z31.svg");
    auto a = run({"plot", "cylinder", "--l", "3", "--r", "1", "--out", svg.string()});
    REQUIRE(a.code == 0);
    pt::ptree tree;
    REQUIRE_NOTHROW(pt::read_xml(svg.string(), tree));
    REQUIRE(tree.count("svg") == 1);
    int filled = 0, lines = 0;
    count_elements(tree, filled, lines);
    CHECK(filled == 1);
}

TEST_CASE("plot of a Delaunay family has one polyline per T") {
    const auto svg = temp_file("family.svg");
    auto a = run({"plot", "delaunay", "--n", "5", "--H", "1", "--T",
                  "-0.2,-0.05,0,0.05,0.1", "--out", svg.string()});
    REQUIRE(a.code == 0);
    pt::ptree tree;
    REQUIRE_NOTHROW(pt::read_xml(svg.string(), tree));
    int filled = 0, lines = 0;
    count_elements(tree, filled, lines);
    CHECK(lines == 5);
}

TEST_CASE("hourglass plot stays inside the domain and touches the faces") {
    const auto svg = temp_file("hourglass.svg");
    const auto rep = temp_file("hourglass.json");
    auto a = run({"cheeger", "hourglass", "--A", "3", "--B", "2", "--C", "0.3", "--D", "0.6",
                  "--plot", svg.string()});
    REQUIRE(a.code == 0);
    {
        std::ofstream f(rep);
        f << a.out;
    }
    const Json j = Json::parse(a.out);
    double xmin = 1e9, xmax = -1e9;
    for (const auto& piece : j.at("candidate").at("pieces")) {
        for (const char* k : {"start", "end"}) {
            const double x = piece.at(k)[0].get<double>();
            const double y = piece.at(k)[1].get<double>();
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
            // below the upper boundary of the hourglass
            const double ax = std::abs(x);
            const double top = ax <= 0.3 ? 2.0 - (1.4 / 0.3) * ax : 0.6 + (1.4 / 2.7) * (ax - 0.3);
            CHECK(y <= top + 1e-9);
        }
    }
    CHECK(xmin == Approx(-3.0));
    CHECK(xmax == Approx(3.0));
    auto b = run({"check", "roundtrip", "--in", rep.string()});
    REQUIRE(b.code == 0);
    CHECK(Json::parse(b.out).at("pass").get<bool>());
}

TEST_CASE("JSON reports round trip") {
    const auto rep = temp_file("dc.json");
    auto a = run({"cheeger", "double-cone", "--l", "1", "--r", "3", "--theta", "1.0471975512"});
    REQUIRE(a.code == 0);
    {
        std::ofstream f(rep);
        f << a.out;
    }
    auto b = run({"check", "roundtrip", "--in", rep.string()});
    REQUIRE(b.code == 0);
    const Json j = Json::parse(b.out);
    CHECK(j.at("difference").get<double>() <= 1e-9);
    CHECK(j.at("pass").get<bool>());
    auto svg = temp_file("dc.svg");
    CHECK(run({"plot", "double-cone", "--from", rep.string(), "--out", svg.string()}).code == 0);
}

TEST_CASE("output is deterministic") {
    const std::vector<std::string> args{"cheeger", "double-cone", "--l", "1", "--r", "1",
                                        "--theta", "0.7853981634"};
    const auto a = run(args);
    const auto b = run(args);
    std::vector<std::string> par = args;
    par.insert(par.begin(), "--parallel");
    const auto c = run(par);
    CHECK(a.out == b.out);
    CHECK(Json::parse(a.out).at("h") == Json::parse(c.out).at("h"));
}

TEST_CASE("check subcommands") {
    auto a = run({"check", "rolling-ball", "--l", "1", "--theta", "1.45"});
    REQUIRE(a.code == 0);
    CHECK(Json::parse(a.out).at("pass").get<bool>());
    auto b = run({"check", "sphere", "--n", "4", "--l", "3", "--r", "1"});
    REQUIRE(b.code == 0);
    CHECK(Json::parse(b.out).at("pass").get<bool>());
    auto c = run({"check", "height", "--family", "cylinder", "--l", "1", "--r", "1"});
    REQUIRE(c.code == 0);
    CHECK_FALSE(Json::parse(c.out).at("certificates")[0].at("applicable").get<bool>());
    CHECK(run({"check", "nonsense"}).code == 1);
}

TEST_CASE("environment tolerance override") {
    setenv("CHEEGER_TOL", "garbage", 1);
    CHECK(run({"cheeger", "cylinder", "--l", "1", "--r", "1"}).code == 1);
    setenv("CHEEGER_TOL", "1e-9", 1);
    auto a = run({"cheeger", "cylinder", "--l", "1", "--r", "1"});
    unsetenv("CHEEGER_TOL");
    REQUIRE(a.code == 0);
    CHECK(Json::parse(a.out).at("h").get<double>() == Approx(3.72474).epsilon(1e-5));
}

}
