// Drives the installed binary end to end: exit-code contract, output
// byte-stability across thread counts, the search cache, and the round-trip
// guarantee on emitted files.

#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "hurwitz/jsonio.hpp"

using namespace hurwitz;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

class Scratch {
  public:
    Scratch() : dir_(fs::path("cli-scratch-" + std::to_string(::getpid()))) {
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    ~Scratch() { fs::remove_all(dir_); }
    fs::path path(const std::string& name) const { return dir_ / name; }
    std::string cache() const { return (dir_ / "cache").string(); }

    RunResult run(const std::string& args, const std::string& env = "") const {
        fs::path out = dir_ / "stdout.txt", err = dir_ / "stderr.txt";
        std::string cmd = env + (env.empty() ? "" : " ") + "\"" CLI_BINARY "\" " + args + " >" +
                          out.string() + " 2>" + err.string();
        int raw = std::system(cmd.c_str());
        RunResult r;
        r.code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
        r.out = slurp(out);
        r.err = slurp(err);
        return r;
    }

  private:
    fs::path dir_;
};

int count_lines(const std::string& s) {
    int n = 0;
    for (char c : s)
        if (c == '\n') ++n;
    return n;
}

}  // namespace

TEST_CASE("classify: three cases, exit 0, byte-stable output") {
    Scratch sc;
    auto hyper = sc.run("classify --case hypergeometric");
    CHECK(hyper.code == 0);
    CHECK(count_lines(hyper.out) == 12);
    CHECK(hyper.out.find("(0; 2,3,7)  d=42") != std::string::npos);

    auto again = sc.run("classify --case hypergeometric");
    CHECK(again.out == hyper.out);

    auto general = sc.run("classify --case general");
    CHECK(general.code == 0);
    CHECK(count_lines(general.out) == 4);
    CHECK(general.out.find("(1; 2)  d=2") != std::string::npos);

    auto triples = sc.run("classify --case triples");
    CHECK(triples.code == 0);
    CHECK(count_lines(triples.out) == 18);
    CHECK(triples.out.find("(2,5,6)  rejected") != std::string::npos);

    auto bad = sc.run("classify --case nonsense");
    CHECK(bad.code == 2);
}

TEST_CASE("search: exit codes distinguish empty, found, parse, resource") {
    Scratch sc;
    CHECK(sc.run("search --no-cache \"d=3; 3; 3; free\"").code == 1);
    CHECK(sc.run("search --no-cache \"d=4; 4; 4; 4; free\"").code == 0);
    CHECK(sc.run("search --no-cache \"d=4; 4; 4; 5; free\"").code == 2);
    CHECK(sc.run("search --no-cache \"four covers please\"").code == 2);
    CHECK(sc.run("search --no-cache \"d=14; 2,2,2,2,2,2,2; 7,7; 14\"").code == 3);
    CHECK(sc.run("search --no-cache --force --limit 1 \"d=14; 2,2,2,2,2,2,2; 7,7; 14\"").code == 0);
}

TEST_CASE("search: emitted JSON reloads and revalidates") {
    Scratch sc;
    fs::path out = sc.path("covers.json");
    auto r = sc.run("search --no-cache --format json -o " + out.string() +
                    " \"d=6; 3,3; 3,3; 6; free\"");
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());

    Json doc = read_json_file(out.string());
    CHECK(doc["format"] == kJsonFormat);
    CHECK(doc["status"] == "ok");
    CHECK(doc["exhaustive"] == true);
    auto witnesses = revalidated_witnesses(doc);
    REQUIRE(!witnesses.empty());
    for (const auto& w : witnesses) {
        CHECK(w.degree == 6);
        CHECK(w.genus() == 2);
        CHECK(w.slots.back().cycle_type() == std::vector<int>{2, 1, 1, 1, 1});
    }
}

TEST_CASE("search: output is byte-identical across thread counts") {
    Scratch sc;
    std::string spec = "\"d=6; 2,2,2; 6; 6; free\"";
    auto one = sc.run("search --no-cache --format json --threads 1 " + spec);
    auto four = sc.run("search --no-cache --format json --threads 4 " + spec);
    REQUIRE(one.code == 0);
    CHECK(one.out == four.out);
    auto table1 = sc.run("search --no-cache --threads 1 " + spec);
    auto table3 = sc.run("search --no-cache --threads 3 " + spec);
    CHECK(table1.out == table3.out);
}

TEST_CASE("search cache: hit reproduces the fresh run, corruption degrades to a miss") {
    Scratch sc;
    std::string spec = "\"d=6; 3,3; 3,3; 6; free\"";
    std::string flags = "search --format json --cache-dir " + sc.cache() + " " + spec;

    auto fresh = sc.run(flags);
    REQUIRE(fresh.code == 0);
    std::size_t files = 0;
    fs::path entry;
    for (const auto& f : fs::directory_iterator(sc.cache())) {
        ++files;
        entry = f.path();
    }
    REQUIRE(files == 1);

    auto cached = sc.run(flags);
    CHECK(cached.code == 0);
    CHECK(cached.out == fresh.out);

    {
        std::ofstream f(entry);
        f << "{\"format\": 1, \"witnesses\": \"?\"}";
    }
    auto recovered = sc.run(flags);
    CHECK(recovered.code == 0);
    CHECK(recovered.out == fresh.out);

    auto via_env = sc.run("search --format json " + spec,
                          "HURWITZ_CACHE_DIR=" + sc.cache() + "-env");
    CHECK(via_env.code == 0);
    CHECK(via_env.out == fresh.out);
    CHECK(fs::exists(sc.cache() + "-env"));
}

TEST_CASE("construct: merge route covers the four glued rows") {
    Scratch sc;
    for (std::string triple : {"2,6,6", "3,3,6", "2,4,8", "2,3,12"}) {
        fs::path out = sc.path("merge.json");
        auto r = sc.run("construct --route merge --no-cache --format json --triple " + triple +
                        " -o " + out.string());
        REQUIRE(r.code == 0);
        Json doc = read_json_file(out.string());
        Constellation c = doc["result"].get<Constellation>();
        c.validate();
        CHECK(c.genus() == 2);
        CHECK(c.slots.back().cycle_type().front() == 2);
    }
    CHECK(sc.run("construct --route merge --no-cache --triple 2,3,7").code == 2);
    CHECK(sc.run("construct --route merge --no-cache").code == 2);
    CHECK(sc.run("construct --route sideways --no-cache").code == 2);
}

TEST_CASE("construct: merge accepts a seed file and rejects a broken one") {
    Scratch sc;
    auto seed_doc = sc.run("search --no-cache --format json --limit 1 \"d=6; 2,2,2; 6; 3,3\"");
    REQUIRE(seed_doc.code == 0);
    Json witness = Json::parse(seed_doc.out)["witnesses"][0];
    fs::path seed = sc.path("seed.json");
    write_json_file(seed.string(), witness);

    auto r = sc.run("construct --route merge --no-cache --format json --triple 2,6,6 --seed " +
                    seed.string() + " --slot 3");
    REQUIRE(r.code == 0);
    Constellation c = Json::parse(r.out)["result"].get<Constellation>();
    c.validate();
    CHECK(c.genus() == 2);

    Json broken = witness;
    broken["slots"][0] = Json::parse("[[1,2]]");  // identity product fails
    write_json_file(seed.string(), broken);
    CHECK(sc.run("construct --route merge --no-cache --triple 2,6,6 --seed " + seed.string())
              .code == 2);
}

TEST_CASE("construct: compose route stacks the degree-42 witness") {
    Scratch sc;
    fs::path out = sc.path("stack.json");
    auto r = sc.run("construct --route compose --no-cache --format json -o " + out.string());
    REQUIRE(r.code == 0);

    Json doc = read_json_file(out.string());
    auto witnesses = revalidated_witnesses(doc);
    REQUIRE(witnesses.size() == 1);
    const Constellation& w = witnesses.front();
    CHECK(w.degree == 42);
    CHECK(w.genus() == 2);
    CHECK(w.slots[0].cycle_type() == std::vector<int>(21, 2));
    CHECK(w.slots[1].cycle_type() == std::vector<int>(14, 3));
    CHECK(w.slots[2].cycle_type() == std::vector<int>(6, 7));

    Json outer = doc["outer"];
    fs::path outer_file = sc.path("outer.json");
    write_json_file(outer_file.string(), outer);
    auto reused = sc.run("construct --route compose --no-cache --format json --outer " +
                         outer_file.string());
    CHECK(reused.code == 0);
    CHECK(Json::parse(reused.out)["witnesses"] == doc["witnesses"]);

    Json wrong = outer;
    wrong["slots"] = Json::parse("[[[1,2,3,4,5,6,7]],[[1,2,3,4,5,6,7]],[[1,2,3,4,5,6,7]]]");
    write_json_file(outer_file.string(), wrong);
    CHECK(sc.run("construct --route compose --no-cache --outer " + outer_file.string()).code == 2);
}

TEST_CASE("verify-family: symbolic, member, and scan modes with their exit codes") {
    Scratch sc;
    auto symbolic = sc.run("verify-family");
    CHECK(symbolic.code == 0);
    CHECK(symbolic.out.find("all identities hold") != std::string::npos);

    auto member = sc.run("verify-family --xt 1");
    CHECK(member.code == 0);
    CHECK(member.out.find("1/2 + 13/64*sqrt(2)") != std::string::npos);
    CHECK(member.out.find("admissible") != std::string::npos);

    auto json_member = sc.run("verify-family --xt 3 --format json");
    CHECK(json_member.code == 0);
    Json jm = Json::parse(json_member.out);
    CHECK(jm["admissible"] == true);
    CHECK(jm["yt"] == "2*sqrt(7)");
    CHECK(jm["profiles"]["over_infinity"]["parts"] == Json::parse("[6]"));

    auto collision = sc.run("verify-family --xt 2 --yt 3");
    CHECK(collision.code == 1);
    CHECK(collision.out.find("collides") != std::string::npos);

    CHECK(sc.run("verify-family --xt 2 --yt 4").code == 2);
    CHECK(sc.run("verify-family --xt -1").code == 2);
    CHECK(sc.run("verify-family --xt 0 --yt 0").code == 2);
    CHECK(sc.run("verify-family --yt 3").code == 2);   // --yt needs --xt
    CHECK(sc.run("verify-family --scan 5:1").code == 2);

    auto scan = sc.run("verify-family --scan -5:5 --format json");
    CHECK(scan.code == 0);
    Json js = Json::parse(scan.out);
    CHECK(js["admissible_count"].get<int>() >= 3);
    CHECK(js["members"].size() == 11);
}
