#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "entrain/cli.hpp"
#include "entrain/error.hpp"

using namespace entrain;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("entrain_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name, const std::string& content) const {
        const auto p = path / name;
        std::ofstream(p, std::ios::binary) << content;
        return p.string();
    }
    std::string at(const std::string& name) const { return (path / name).string(); }
    static inline int counter = 0;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Result {
    int code;
    std::string out, err;
};

Result run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "entrain");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

const char* kCorpus =
    R"({"dialogue_id": "d1", "turn": 0, "user": "i need a hotel in the north", "response": "i need a hotel in the north", "reference": "there are 3 hotels in the north", "candidates": [{"text": "what area ?", "rank": 1}, {"text": "a hotel in the north", "rank": 2}]}
{"dialogue_id": "d1", "turn": 1, "user": "book it for 3 nights starting sunday", "response": "book it for 3 nights starting sunday", "reference": "booked for 3 nights from sunday", "candidates": [{"text": "booked .", "rank": 1}, {"text": "booked for 3 nights", "rank": 2}]}
{"dialogue_id": "d2", "turn": 0, "user": "find me a cheap restaurant", "response": "find me a cheap restaurant", "reference": "what food would you like ?", "candidates": [{"text": "what food ?", "rank": 1}]}
)";

} // namespace

TEST_CASE("config precedence") {
    TempDir dir;
    CHECK(load_config(dir.file("empty.toml", "")).to_json() == RunConfig{}.to_json());

    const auto cfg_path = dir.file("c.toml", "# weights\n[weigh]\ntau = 30\nfn = \"w1\"\n");
    CHECK(load_config(cfg_path).weight.tau == 30.0);

    const auto corpus = dir.file("c.jsonl", kCorpus);
    const auto from_file = run_cli({"weigh", "--config", cfg_path, "-i", corpus, "-o", dir.at("a.jsonl"), "--json"});
    REQUIRE(from_file.code == 0);
    CHECK(from_file.out.find("\"tau\": 30.0") != std::string::npos);
    const auto flag_wins =
        run_cli({"weigh", "--config", cfg_path, "--tau", "20", "-i", corpus, "-o", dir.at("b.jsonl"), "--json"});
    REQUIRE(flag_wins.code == 0);
    CHECK(flag_wins.out.find("\"tau\": 20.0") != std::string::npos);
}

TEST_CASE("unknown configuration key is an error naming the key") {
    TempDir dir;
    const auto bad = dir.file("bad.toml", "taus = 30\n");
    CHECK_THROWS_WITH_AS(load_config(bad), doctest::Contains("taus"), InputError);
    const auto r = run_cli({"losscheck", "--config", bad, "--trials", "1"});
    CHECK(r.code == cli::kInputError);
    CHECK(r.err.find("taus") != std::string::npos);
}

TEST_CASE("config values") {
    RunConfig cfg;
    std::istringstream in("seed = 1_000\nsigma = 0.5 # inline\nmode = 'overlap'\nhistory = true\n");
    apply_config_text(in, cfg);
    CHECK(cfg.seed == 1000);
    CHECK(cfg.sigma == 0.5);
    CHECK(cfg.keyword_mode == KeywordMode::Overlap);
    CHECK(cfg.rerank.history);
    CHECK_THROWS_AS(apply_setting(cfg, "mode", "attention"), InputError);
    CHECK_THROWS_AS(apply_setting(cfg, "tau", "abc"), InputError);
    CHECK(is_known_key("tau"));
    CHECK_FALSE(is_known_key("taus"));

    const RunConfig defaults;
    CHECK(defaults.weight.tau == 25.0);
    CHECK(defaults.weight.w == 0.8);
    CHECK(defaults.weight.beta == 18.1);
    CHECK(defaults.weight.eps == 0.1);
    CHECK(defaults.t == 0.1);
    CHECK(defaults.alpha == 0.2);
    CHECK(defaults.sigma == 0.05);
}

TEST_CASE("metrics on a copy corpus") {
    TempDir dir;
    const auto corpus = dir.file("c.jsonl", kCorpus);
    const auto report_path = dir.at("report.json");
    const auto tsv = dir.at("rows.tsv");
    const auto r = run_cli({"metrics", "-i", corpus, "-o", report_path, "--tsv", tsv});
    REQUIRE(r.code == 0);
    CHECK(r.out.starts_with("metrics: 3 exchanges"));
    const auto report = nlohmann::json::parse(slurp(report_path));
    CHECK(report["tool"] == "entrain");
    CHECK(report["version"] == kToolkitVersion);
    CHECK(report["config"]["subcommand"] == "metrics");
    CHECK(report["result"]["lex_p1"] == 100.0);
    CHECK(report["result"]["lex_r1"] == 100.0);
    CHECK(report["result"]["syn_p2"] == 100.0);
    CHECK(report["result"]["mfc50"] == 0.0);
    CHECK(report["result"]["n_bleu_pairs"] == 3);
    const auto rows = slurp(tsv);
    CHECK(rows.starts_with("dialogue_id\tturn\t"));
    CHECK(std::count(rows.begin(), rows.end(), '\n') == 4);
}

TEST_CASE("exit codes") {
    TempDir dir;
    CHECK(run_cli({"losscheck", "--trials", "1000", "--seed", "7"}).code == cli::kOk);
    CHECK(run_cli({"losscheck", "--trials", "50", "--seed", "7", "--alpha-sweep"}).out.find("PASS") !=
          std::string::npos);
    CHECK(run_cli({"metrics", "-i", dir.at("missing.jsonl")}).code == cli::kInputError);
    CHECK(run_cli({"metrics", "-i", dir.file("bad.jsonl", "{not json\n")}).code == cli::kInputError);
    CHECK(run_cli({"weigh", "--tau", "abc", "-i", dir.file("c.jsonl", kCorpus)}).code == cli::kInputError);
    CHECK(run_cli({"bogus"}).code == cli::kInputError);
    CHECK(run_cli({}).code == cli::kInputError);
}

TEST_CASE("losscheck reports the error") {
    const auto r = run_cli({"losscheck", "--trials", "1000", "--seed", "7", "--json"});
    REQUIRE(r.code == 0);
    const auto brace = r.out.find('{');
    REQUIRE(brace != std::string::npos);
    const auto report = nlohmann::json::parse(r.out.substr(brace));
    CHECK(report["result"]["trials"] == 1000);
    CHECK(report["result"]["max_relative_error"].get<double>() < 1e-5);
}

TEST_CASE("weigh w2 at the midpoint") {
    TempDir dir;
    // reference/user unigram precision: 181 of 1000 tokens shared.
    std::string user, ref;
    for (int i = 0; i < 181; ++i) ref += "u" + std::to_string(i) + " ";
    for (int i = 181; i < 1000; ++i) ref += "r" + std::to_string(i) + " ";
    for (int i = 0; i < 181; ++i) user += "u" + std::to_string(i) + " ";
    nlohmann::json rec = {{"dialogue_id", "d"}, {"turn", 0}, {"user", user}, {"response", ref}, {"reference", ref}};
    std::string lines;
    for (int t = 0; t < 3; ++t) {
        rec["turn"] = t;
        lines += rec.dump() + "\n";
    }
    const auto out = dir.at("w.jsonl");
    REQUIRE(run_cli({"weigh", "--fn", "w2", "-i", dir.file("c.jsonl", lines), "-o", out}).code == 0);
    std::istringstream in(slurp(out));
    std::string line;
    int n = 0;
    while (std::getline(in, line)) {
        const auto j = nlohmann::json::parse(line);
        CHECK(j["overlap_p"] == doctest::Approx(18.1));
        CHECK(j["weight"].get<double>() == doctest::Approx(5.1).epsilon(1e-6));
        ++n;
    }
    CHECK(n == 3);
}

TEST_CASE("keywords and rerank outputs") {
    TempDir dir;
    const auto corpus = dir.file("c.jsonl", kCorpus);
    const auto kw = dir.at("kw.jsonl");
    REQUIRE(run_cli({"keywords", "--mode", "overlap", "--emit-sequences", "-i", corpus, "-o", kw}).code == 0);
    std::istringstream in(slurp(kw));
    std::string line;
    std::getline(in, line);
    auto j = nlohmann::json::parse(line);
    CHECK(j["keywords"] == nlohmann::json{"in", "the", "north"});
    CHECK(j["keyword_source"] == "overlap");
    CHECK(j["training_sequence"] == "<context> i need a hotel in the north <belief> <database> <keywords> in the north");

    // Attention mode without an attention file names the missing exchange.
    const auto missing = run_cli({"keywords", "--mode", "attn", "-i", corpus, "-o", dir.at("x.jsonl")});
    CHECK(missing.code == cli::kInputError);
    CHECK(missing.err.find("d1#0") != std::string::npos);

    const auto rr = dir.at("rr.jsonl");
    const auto r = run_cli({"rerank", "-i", corpus, "-o", rr});
    REQUIRE(r.code == 0);
    std::istringstream rin(slurp(rr));
    std::getline(rin, line);
    j = nlohmann::json::parse(line);
    CHECK(j["response"] == "a hotel in the north");
    CHECK(j["candidates"][0]["rank"] == 2);
}

TEST_CASE("tag fills POS fields") {
    TempDir dir;
    const auto out = dir.at("t.jsonl");
    REQUIRE(run_cli({"tag", "-i", dir.file("c.jsonl", kCorpus), "-o", out}).code == 0);
    std::istringstream in(slurp(out));
    std::string line;
    std::getline(in, line);
    const auto j = nlohmann::json::parse(line);
    CHECK(j["user_pos"].size() == 7);
    CHECK(j["response_pos"] == j["user_pos"]);
}

TEST_CASE("identical runs give byte-identical outputs") {
    TempDir dir;
    const auto corpus = dir.file("c.jsonl", kCorpus);
    const std::vector<std::vector<std::string>> commands{
        {"metrics", "--jobs", "3"},
        {"weigh", "--fn", "w2", "--materialize"},
        {"keywords", "--mode", "overlap", "--emit-sequences", "--jobs", "2"},
        {"rerank", "--history"},
        {"tag"},
    };
    for (const auto& cmd : commands) {
        std::string first;
        for (int rep = 0; rep < 2; ++rep) {
            auto args = cmd;
            const auto out = dir.at(cmd[0] + std::to_string(rep));
            args.insert(args.end(), {"-i", corpus, "-o", out});
            REQUIRE(run_cli(args).code == 0);
            if (rep == 0)
                first = slurp(out);
            else
                CHECK(slurp(out) == first);
        }
    }
    const auto a = run_cli({"losscheck", "--trials", "200", "--seed", "3", "--json", "--jobs", "1"});
    const auto b = run_cli({"losscheck", "--trials", "200", "--seed", "3", "--json", "--jobs", "1"});
    CHECK(a.out == b.out);
}

TEST_CASE("atomic output leaves no temp files and replaces the target") {
    TempDir dir;
    const auto out = dir.file("o.jsonl", "old contents\n");
    REQUIRE(run_cli({"tag", "-i", dir.file("c.jsonl", kCorpus), "-o", out}).code == 0);
    CHECK(slurp(out).find("old contents") == std::string::npos);
    for (const auto& e : fs::directory_iterator(dir.path))
        CHECK(e.path().filename().string().find(".tmp.") == std::string::npos);

    // A failing run leaves an existing output untouched.
    const auto kept = dir.file("kept.jsonl", "keep me\n");
    CHECK(run_cli({"tag", "-i", dir.file("bad.jsonl", "{\n"), "-o", kept}).code == cli::kInputError);
    CHECK(slurp(kept) == "keep me\n");
}

TEST_CASE("installed binary reads stdin and reports exit codes") {
    const std::string bin = ENTRAIN_CLI_PATH;
    TempDir dir;
    const auto corpus = dir.file("c.jsonl", kCorpus);
    const auto cmd = "'" + bin + "' metrics < '" + corpus + "' > '" + dir.at("out.json") + "' 2>/dev/null";
    const int status = std::system(cmd.c_str());
    REQUIRE(WIFEXITED(status));
    CHECK(WEXITSTATUS(status) == 0);
    CHECK(nlohmann::json::parse(slurp(dir.at("out.json")))["result"]["lex_p1"] == 100.0);

    const int bad = std::system(("'" + bin + "' weigh -i '" + dir.at("nope.jsonl") + "' 2>/dev/null").c_str());
    REQUIRE(WIFEXITED(bad));
    CHECK(WEXITSTATUS(bad) == 1);
}
