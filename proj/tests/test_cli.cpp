#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run ratmed(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + (env.empty() ? "" : " ") + "'" RATMED_CLI "' " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    const int status = ::pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("verify") {
        const Run r = ratmed("verify 73 51 26");
        REQUIRE(r.code == 0);
        const auto j = nlohmann::json::parse(r.out);
        CHECK(j["area"] == 420);
        CHECK(j["k"] == "35/2");
        CHECK(j["l"] == "97/2");
        CHECK(j["m"].is_null());
        CHECK(j["medians_sq"]["m"] == "3796");
        CHECK(j["schubert"]["k"]["M"] == "4");
        CHECK(j["schubert"]["l"]["M"] == "35/6");
        CHECK_FALSE(j["schubert"].contains("m"));

        const auto eq = nlohmann::json::parse(ratmed("verify 1 1 1").out);
        CHECK(eq["area"] == "irrational");
        CHECK(eq["schubert"].empty());
    }

    TEST_CASE("orbit csv") {
        const Run r = ratmed("orbit --start 1,1 --steps 300 --format csv");
        REQUIRE(r.code == 0);
        const auto rows = lines(r.out);
        REQUIRE(rows.size() == 302);
        CHECK(rows[0] == "n,U_approx,V_approx,J");
        CHECK(rows[1] == "0,1,1,5");
        CHECK(rows[3] == "2,2,1.5,5");
        for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].substr(rows[i].rfind(',')) == ",5");

        const auto curve = lines(ratmed("orbit --start -1,7 --steps 7 --curve --curve-samples 40").out);
        const auto blank = std::find(curve.begin(), curve.end(), "");
        REQUIRE(blank != curve.end());
        CHECK(*(blank + 1) == "U_approx,V_approx");
        CHECK(curve.end() - blank > 20);

        const auto exact = nlohmann::json::parse(ratmed("orbit --start 1,1 --steps 3 --format json").out);
        CHECK(exact[3]["U"] == "3/2");
        CHECK(exact[3]["V"] == "5/6");
    }

    TEST_CASE("family tables") {
        const Run text = ratmed("family --from 1 --to 5 --format text");
        REQUIRE(text.code == 0);
        const auto rows = lines(text.out);
        REQUIRE(rows.size() == 6);
        CHECK(rows[1].find("73") != std::string::npos);
        CHECK(rows[5].find("2488886435/2") != std::string::npos);

        const auto j = nlohmann::json::parse(ratmed("family --from 1 --to 2").out);
        CHECK(j[1]["a"] == 626);
        CHECK(j[1]["k"] == "572");
        CHECK(j[1]["l"] == "433/2");

        const auto f = nlohmann::json::parse(ratmed("family --to 3 --factors").out);
        CHECK(f[0]["s"] == "3·5^2");
        CHECK(f[2]["s_minus_c"] == "2^5·3");
    }

    TEST_CASE("somos, params, schubert, factor") {
        const auto s = nlohmann::json::parse(ratmed("somos --sequence T --to 9").out);
        CHECK(s["terms"].back() == "391");
        const auto c = nlohmann::json::parse(ratmed("somos --seed 1,1,1,1,1 --to 15").out);
        CHECK(c["terms"].back() == "165713");
        const auto back = nlohmann::json::parse(ratmed("somos --seed 1,1,1,2,3 --from -1 --to 2").out);
        CHECK(back["terms"][0] == "1");

        const auto p = nlohmann::json::parse(ratmed("params 73 51 26").out);
        CHECK(p["pairs"][0]["theta"] == "1/3");
        CHECK(p["pairs"][0]["phi"] == "2/5");
        CHECK(p["pairs"][0]["constraints"] == true);
        CHECK(p["pairs"][3]["theta"] == "-24/25");

        const auto t = nlohmann::json::parse(ratmed("schubert --triangle 73 51 26").out);
        CHECK(t["triple"]["M"] == "4");
        CHECK(t["residual"] == "0");
        const auto back_tri = nlohmann::json::parse(ratmed("schubert --triple 1/4 3/2 3/8 --normalize --scale 26").out);
        CHECK(back_tri["a"] == "73");
        CHECK(back_tri["k"] == "35/2");

        const auto f = nlohmann::json::parse(ratmed("factor 420 2137147184560080").out);
        CHECK(f[0]["factors"] == "2^2·3·5·7");
        CHECK(f[1]["factors"] == "2^4·3·5·7·11·17·19·23·37^2·83·137");
        CHECK(ratmed("factor 97 --format text").out == "97 = 97\n");
    }

    TEST_CASE("search") {
        const Run r = ratmed("search --height 16 --workers 2");
        REQUIRE(r.code == 0);
        const auto rows = lines(r.out);
        REQUIRE(rows.size() == 2);
        CHECK(nlohmann::json::parse(rows[0])["class"] == "family:1");
        CHECK(nlohmann::json::parse(rows[1])["class"] == "family:2");
        CHECK(ratmed("search --height 16", "RATMED_WORKERS=3").out == r.out);
        CHECK(ratmed("search --height 16", "RATMED_WORKERS=zero").code == 2);

        const auto dir = std::filesystem::temp_directory_path() / "ratmed_cli_resume";
        std::filesystem::remove_all(dir);
        std::filesystem::create_directories(dir);
        const std::string log = (dir / "log").string();
        const std::string full = ratmed("search --height 30 --chunk-size 8 --workers 1").out;
        const Run first = ratmed("search --height 30 --chunk-size 8 --workers 1 --checkpoint " + log + " --stop-after 20");
        CHECK(first.code == 0);
        const Run second = ratmed("search --height 30 --chunk-size 8 --workers 2 --checkpoint " + log + " --resume");
        CHECK(second.code == 0);
        CHECK(second.out == full);
        CHECK(ratmed("search --height 31 --chunk-size 8 --checkpoint " + log + " --resume").code == 1);
        CHECK(ratmed("search --height 30 --checkpoint " + (dir / "missing").string() + " --resume").code == 1);
        std::filesystem::remove_all(dir);
    }

    TEST_CASE("exit codes") {
        CHECK(ratmed("").code == 2);
        CHECK(ratmed("verify 73 51").code == 2);
        CHECK(ratmed("verify 73 51 26 --bogus").code == 2);
        CHECK(ratmed("verify a b c").code == 2);
        CHECK(ratmed("frobnicate").code == 2);
        CHECK(ratmed("search --height 8 --resume").code == 2);
        CHECK(ratmed("search --height 8 --workers 0").code == 2);
        CHECK(ratmed("schubert").code == 2);
        CHECK(ratmed("verify 1 1 5").code == 1);
        CHECK(ratmed("factor 0").code == 1);
        CHECK(ratmed("params 3 4 5").code == 1);
        CHECK(ratmed("search --height 1").code == 1);
        CHECK(ratmed("schubert --triple 1 1 1").code == 1);
        CHECK(ratmed("schubert --triple 4 2/3 5/2").code == 3);
        CHECK(ratmed("--help").code == 0);
    }
}
