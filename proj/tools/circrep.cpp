#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "circrep/circrep.hpp"

using namespace circrep;
using nlohmann::json;

namespace {

constexpr const char* tool_version = "circrep 0.1.0";

enum Exit { ok = 0, property_failure = 1, unsupported = 2, usage = 3 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Timer {
public:
    double seconds() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count(); }

private:
    std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

json witness_json(const PowerWitness& w)
{
    return {{"start", w.start}, {"period", w.period}, {"length", w.length}, {"exponent", w.exponent().str()}};
}

Ratio parse_beta(const std::string& s)
{
    try {
        const Ratio r = Ratio::parse(s);
        if (r.den() == 0 || r.num() == 0)
            throw std::invalid_argument("zero");
        return r;
    } catch (const std::exception&) {
        throw UsageError("threshold must be an exact fraction num/den, got '" + s + "'");
    }
}

Word parse_word(std::string s, unsigned k = 0)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.pop_back();
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.erase(s.begin());
    if (s.empty())
        throw UsageError("empty word");
    try {
        return Word::parse(s, k);
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
}

std::string read_all(std::istream& in) { return {std::istreambuf_iterator<char>(in), {}}; }

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

// ---------------------------------------------------------------- construct

struct ConstructArgs {
    unsigned k = 4;
    std::size_t n = 1;
    std::string out;
    bool json = false;
};

int cmd_construct(const ConstructArgs& a)
{
    Timer t;
    json rep{{"command", "construct"}, {"version", tool_version}, {"inputs", {{"k", a.k}, {"n", a.n}}},
             {"seed", default_seed}};
    try {
        const Ratio beta = threshold_for(a.k);
        const CircularWord cw = construct(a.k, a.n);
        const Word& w = cw.representative();
        const auto mx = circular_max_exponent(w.letters());
        rep["verdict"] = "constructed";
        rep["word"] = w.str();
        rep["length"] = w.size();
        rep["alphabet"] = a.k;
        rep["threshold"] = beta.str();
        rep["max_exponent"] = mx.value.str();
        rep["witness"] = witness_json(mx.witness);
        rep["seconds"] = t.seconds();
        if (!a.out.empty()) {
            std::ofstream f(a.out);
            if (!f)
                throw UsageError("cannot write " + a.out);
            f << w.str() << "\n";
        }
        if (a.json)
            emit(rep);
        else
            std::cout << w.str() << "\n";
        return ok;
    } catch (const UnsupportedLength& e) {
        rep["verdict"] = "unsupported";
        rep["error"] = e.what();
        if (a.json)
            emit(rep);
        std::cerr << "error: " << e.what() << "\n";
        return unsupported;
    } catch (const UnsupportedAlphabet& e) {
        rep["verdict"] = "unsupported";
        rep["error"] = e.what();
        if (a.json)
            emit(rep);
        std::cerr << "error: " << e.what() << "\n";
        return unsupported;
    }
}

// ------------------------------------------------------------------- verify

struct VerifyArgs {
    std::string word;
    std::string file;
    std::string beta;
    bool circular = false;
    bool json = false;
};

int cmd_verify(const VerifyArgs& a)
{
    std::string text;
    if (!a.word.empty())
        text = a.word;
    else if (!a.file.empty()) {
        std::ifstream f(a.file);
        if (!f)
            throw UsageError("cannot read " + a.file);
        text = read_all(f);
    } else {
        text = read_all(std::cin);
    }
    std::string beta_text = a.beta;
    bool circular = a.circular;
    unsigned k = 0;
    // Accept the JSON report of `construct --json` as input.
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        json in;
        try {
            in = json::parse(text);
        } catch (const json::parse_error& e) {
            throw UsageError(std::string("bad JSON input: ") + e.what());
        }
        if (!in.contains("word") || !in["word"].is_string())
            throw UsageError("JSON input lacks a \"word\" string");
        text = in["word"].get<std::string>();
        if (beta_text.empty() && in.contains("threshold"))
            beta_text = in["threshold"].get<std::string>();
        if (in.contains("alphabet"))
            k = in["alphabet"].get<unsigned>();
        if (in.value("command", "") == "construct")
            circular = true;
    }
    if (beta_text.empty())
        throw UsageError("--beta is required");
    const Ratio beta = parse_beta(beta_text);
    const Word w = parse_word(text, k);
    Timer t;
    const auto mx = circular ? circular_max_exponent(w.letters()) : max_exponent(w.letters());
    const bool free = !(mx.value > beta);
    if (a.json) {
        emit({{"command", "verify"},
              {"version", tool_version},
              {"inputs", {{"beta", beta.str()}, {"circular", circular}}},
              {"verdict", free ? "free" : "not-free"},
              {"length", w.size()},
              {"alphabet", w.alphabet_size()},
              {"threshold", beta.str()},
              {"max_exponent", mx.value.str()},
              {"witness", witness_json(mx.witness)},
              {"seconds", t.seconds()}});
    } else {
        std::cout << (free ? "free" : "not free") << ": length " << w.size() << ", max exponent " << mx.value.str()
                  << " (start " << mx.witness.start << ", period " << mx.witness.period << ", length "
                  << mx.witness.length << ")\n";
    }
    return free ? ok : property_failure;
}

// ------------------------------------------------------------- check-lemmas

struct LemmaArgs {
    std::string suite;
    bool deep = false;
    std::uint64_t seed = default_seed;
};

int cmd_check_lemmas(const LemmaArgs& a)
{
    std::vector<std::string> names;
    if (a.suite == "all")
        names = suite_names();
    else if (std::find(suite_names().begin(), suite_names().end(), a.suite) != suite_names().end())
        names = {a.suite};
    else {
        std::string known;
        for (const auto& s : suite_names())
            known += " " + s;
        throw UsageError("unknown suite '" + a.suite + "' (known:" + known + ", all)");
    }
    SuiteOptions o;
    o.deep = a.deep;
    o.seed = a.seed;
    bool all = true;
    for (const auto& name : names) {
        const auto rep = run_suite(name, o);
        for (const auto& c : rep.claims) {
            std::cout << json{{"suite", name}, {"check", c.name}, {"pass", c.pass}, {"detail", c.detail}}.dump()
                      << "\n";
            all = all && c.pass;
        }
    }
    std::cout << json{{"command", "check-lemmas"}, {"version", tool_version}, {"suite", a.suite},
                      {"seed", a.seed},       {"verdict", all ? "pass" : "fail"}}
                     .dump()
              << "\n";
    return all ? ok : property_failure;
}

// ------------------------------------------------------------------ pansiot

struct PansiotArgs {
    std::string emit;
    std::size_t length = 0;
    std::string factor;
    bool json = false;
};

int cmd_pansiot(const PansiotArgs& a)
{
    if (a.emit == "p" || a.emit == "P") {
        if (a.length == 0)
            throw UsageError("--length is required for --emit " + a.emit);
        std::cout << (a.emit == "p" ? gen_p(a.length) : gen_P(a.length)).str() << "\n";
        return ok;
    }
    if (a.emit == "eta") {
        if (a.factor.empty())
            throw UsageError("--factor is required for --emit eta");
        const Word w = parse_word(a.factor, 4);
        try {
            const auto e = eta(w);
            if (a.json)
                emit({{"command", "pansiot"}, {"emit", "eta"}, {"factor", w.str()}, {"eta", e.word.str()},
                      {"edits", e.edits}});
            else
                std::cout << e.word.str() << "\n";
            return ok;
        } catch (const ProvenanceError& e) {
            std::cerr << "error: " << e.what() << "\n";
            return unsupported;
        }
    }
    if (a.emit == "case") {
        if (a.length == 0)
            throw UsageError("--length is required for --emit case");
        json rep{{"command", "pansiot"}, {"emit", "case"}, {"length", a.length}};
        if (a.length % 2 == 0 && a.length >= 146) {
            const auto b = build_even_detailed(a.length);
            rep["case"] = to_string(b.descriptor.tag);
            rep["position"] = b.descriptor.position;
            rep["factor"] = b.descriptor.w.str();
            rep["boundary_rules"] = b.rules;
            rep["word"] = b.word.str();
        } else if (a.length % 2 == 1 && a.length >= 1291) {
            const auto b = build_odd_detailed(a.length);
            rep["case"] = to_string(b.even.descriptor.tag);
            rep["position"] = b.even.descriptor.position;
            rep["boundary_rules"] = b.even.rules;
            rep["z_position"] = b.z.position;
            rep["condition"] = std::string(1, b.condition);
            rep["inserted_at"] = b.inserted_at;
            rep["word"] = b.word.str();
        } else {
            std::cerr << "error: length " << a.length << " is a base case (even >= 146 or odd >= 1291 needed)\n";
            return unsupported;
        }
        emit(rep);
        return ok;
    }
    throw UsageError("--emit must be one of p, P, eta, case");
}

// ------------------------------------------------------------------- search

struct SearchArgs {
    unsigned k = 3;
    std::string beta = "7/4";
    std::size_t n = 0;
    std::string mode = "randomized";
    std::uint64_t seed = default_seed;
    std::uint64_t nodes = 0;
    double time = 60;
    bool json = false;
};

json search_json(const char* cmd, const SearchConfig& cfg, const SearchResult& r)
{
    json j{{"command", cmd},
           {"version", tool_version},
           {"inputs", {{"k", cfg.k}, {"beta", cfg.beta.str()}, {"n", cfg.n}}},
           {"mode", cfg.mode == SearchMode::exhaustive ? "exhaustive" : "randomized"},
           {"verdict", to_string(r.verdict)},
           {"nodes", r.nodes},
           {"restarts", r.restarts},
           {"seconds", r.seconds},
           {"seed", r.seed}};
    j["word"] = r.word ? json(r.word->str()) : json(nullptr);
    return j;
}

SearchConfig make_config(const SearchArgs& a)
{
    if (a.n == 0)
        throw UsageError("--n must be positive");
    if (a.k < 1 || a.k > max_alphabet)
        throw UsageError("--k must be in 1..6");
    SearchConfig cfg;
    cfg.k = a.k;
    cfg.beta = parse_beta(a.beta);
    cfg.n = a.n;
    cfg.seed = a.seed;
    cfg.node_budget = a.nodes;
    cfg.time_budget = a.time;
    if (a.mode == "exhaustive")
        cfg.mode = SearchMode::exhaustive;
    else if (a.mode == "randomized")
        cfg.mode = SearchMode::randomized;
    else
        throw UsageError("--mode must be exhaustive or randomized");
    return cfg;
}

void print_search(const json& j)
{
    std::cout << j["verdict"].get<std::string>();
    if (!j["word"].is_null())
        std::cout << " " << j["word"].get<std::string>();
    std::cout << " (nodes " << j["nodes"] << ", seed " << j["seed"] << ")\n";
}

int cmd_search(const SearchArgs& a)
{
    const auto cfg = make_config(a);
    const auto r = search_circular(cfg);
    const auto j = search_json("search", cfg, r);
    a.json ? emit(j) : print_search(j);
    return r.verdict == Verdict::found ? ok : property_failure;
}

struct ProveArgs {
    unsigned k = 3;
    std::string beta = "7/4";
    std::size_t n = 0;
    bool json = false;
};

int cmd_prove_absent(const ProveArgs& a)
{
    if (a.n == 0) {
        // Without --n: the ternary exceptional lengths.
        const auto rep = prove_ternary_exceptions(22);
        const json j{{"command", "prove-absent"},
                     {"version", tool_version},
                     {"inputs", {{"k", 3}, {"beta", "7/4"}, {"max_length", 22}}},
                     {"absent", rep.absent},
                     {"present", rep.present},
                     {"nodes", rep.nodes},
                     {"verdict", rep.matches_expected ? "matches" : "differs"}};
        if (a.json)
            emit(j);
        else {
            std::cout << "absent:";
            for (auto n : rep.absent)
                std::cout << " " << n;
            std::cout << " (" << rep.nodes << " nodes)\n";
        }
        return rep.matches_expected ? ok : property_failure;
    }
    SearchArgs s;
    s.k = a.k;
    s.beta = a.beta;
    s.n = a.n;
    s.mode = "exhaustive";
    s.time = 0;
    const auto cfg = make_config(s);
    const auto r = search_circular(cfg);
    const auto j = search_json("prove-absent", cfg, r);
    a.json ? emit(j) : print_search(j);
    return r.verdict == Verdict::proven_absent ? ok : property_failure;
}

// ---------------------------------------------------------------- gen-cache

struct CacheArgs {
    std::string dir;
    double time = 600;
    std::uint64_t seed = default_seed;
};

int cmd_gen_cache(const CacheArgs& a)
{
    const std::filesystem::path dir = a.dir.empty() ? base_case_dir() : std::filesystem::path(a.dir);
    std::filesystem::create_directories(dir);
    std::vector<ManifestRow> rows;
    bool flagged = false;
    for (const auto& range : standard_base_ranges()) {
        BaseCaseStore store;
        const std::string file = base_case_file_name(range.k);
        Timer t;
        for (std::size_t n : range.lengths) {
            SearchConfig cfg;
            cfg.k = range.k;
            cfg.beta = range.beta;
            cfg.n = n;
            cfg.mode = SearchMode::randomized;
            cfg.seed = a.seed;
            cfg.time_budget = a.time;
            const auto r = search_circular(cfg);
            ManifestRow row{file, range.k, range.beta, n, "verified", r.nodes, a.seed};
            if (r.word)
                store.insert(range.k, range.beta, *r.word, "searched");
            else {
                row.status = "flagged";
                flagged = true;
            }
            rows.push_back(row);
        }
        store.save(dir / file, range.k, range.beta);
        std::cerr << file << ": " << range.lengths.size() << " lengths in " << t.seconds() << " s\n";
    }
    write_manifest(dir / "manifest.tsv", rows);
    std::cout << json{{"command", "gen-cache"}, {"version", tool_version}, {"dir", dir.string()},
                      {"seed", a.seed},        {"entries", rows.size()},  {"verdict", flagged ? "flagged" : "ok"}}
                     .dump()
              << "\n";
    return flagged ? property_failure : ok;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Repetition-free circular words over 3, 4 and 5 letters"};
    app.set_version_flag("--version", tool_version);
    app.require_subcommand(1);

    ConstructArgs ca;
    auto* construct_cmd = app.add_subcommand("construct", "Build a circular word of length n over k letters");
    construct_cmd->add_option("k", ca.k, "Alphabet size (3, 4 or 5)")->required();
    construct_cmd->add_option("n", ca.n, "Length")->required();
    construct_cmd->add_option("--out", ca.out, "Also write the word to this file");
    construct_cmd->add_flag("--json", ca.json, "Print a JSON report");

    VerifyArgs va;
    auto* verify_cmd = app.add_subcommand("verify", "Check that a word avoids powers above a threshold");
    verify_cmd->add_option("word", va.word, "Word in digits or letters (default: stdin)");
    verify_cmd->add_option("--file", va.file, "Read the word from a file");
    verify_cmd->add_option("--beta", va.beta, "Threshold as num/den");
    verify_cmd->add_flag("--circular", va.circular, "Treat the word as circular");
    verify_cmd->add_flag("--json", va.json, "Print a JSON report");

    LemmaArgs la_;
    auto* lemmas_cmd = app.add_subcommand("check-lemmas", "Run a lemma verification suite");
    lemmas_cmd->add_option("--suite", la_.suite, "Suite name or 'all'")->required();
    lemmas_cmd->add_flag("--deep", la_.deep, "d-family: check preservation up to length 22");
    lemmas_cmd->add_option("--seed", la_.seed, "Seed for sampled checks");

    PansiotArgs pa;
    auto* pansiot_cmd = app.add_subcommand("pansiot", "Emit prefixes of p and P, eta images, or case data");
    pansiot_cmd->add_option("--emit", pa.emit, "p, P, eta or case")->required();
    pansiot_cmd->add_option("--length", pa.length, "Prefix length, or word length for 'case'");
    pansiot_cmd->add_option("--factor", pa.factor, "Factor of P for 'eta'");
    pansiot_cmd->add_flag("--json", pa.json, "Print a JSON report");

    SearchArgs sa;
    auto* search_cmd = app.add_subcommand("search", "Backtracking search for a circular word");
    search_cmd->add_option("--k", sa.k, "Alphabet size");
    search_cmd->add_option("--beta", sa.beta, "Threshold as num/den");
    search_cmd->add_option("--n", sa.n, "Length")->required();
    search_cmd->add_option("--mode", sa.mode, "exhaustive or randomized");
    search_cmd->add_option("--seed", sa.seed, "Seed for randomized mode");
    search_cmd->add_option("--node-budget", sa.nodes, "Stop after this many nodes (0 = none)");
    search_cmd->add_option("--time-budget", sa.time, "Stop after this many seconds (0 = none)");
    search_cmd->add_flag("--json", sa.json, "Print a JSON report");

    ProveArgs pr;
    auto* prove_cmd = app.add_subcommand("prove-absent", "Exhaustively certify that no circular word exists");
    prove_cmd->add_option("--k", pr.k, "Alphabet size");
    prove_cmd->add_option("--beta", pr.beta, "Threshold as num/den");
    prove_cmd->add_option("--n", pr.n, "Length (omit for the ternary lengths 1..22)");
    prove_cmd->add_flag("--json", pr.json, "Print a JSON report");

    CacheArgs cc;
    auto* cache_cmd = app.add_subcommand("gen-cache", "Regenerate the base-case files and manifest");
    cache_cmd->add_option("--dir", cc.dir, "Output directory (default: the configured data directory)");
    cache_cmd->add_option("--time-budget", cc.time, "Seconds per length before it is flagged");
    cache_cmd->add_option("--seed", cc.seed, "Search seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return usage;
    }

    try {
        if (*construct_cmd)
            return cmd_construct(ca);
        if (*verify_cmd)
            return cmd_verify(va);
        if (*lemmas_cmd)
            return cmd_check_lemmas(la_);
        if (*pansiot_cmd)
            return cmd_pansiot(pa);
        if (*search_cmd)
            return cmd_search(sa);
        if (*prove_cmd)
            return cmd_prove_absent(pr);
        if (*cache_cmd)
            return cmd_gen_cache(cc);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return property_failure;
    }
    return usage;
}
