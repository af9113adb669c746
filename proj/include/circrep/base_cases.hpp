#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "circrep/exponent.hpp"
#include "circrep/ratio.hpp"
#include "circrep/search.hpp"
#include "circrep/word.hpp"

#ifndef CIRCREP_DEFAULT_DATA_DIR
#define CIRCREP_DEFAULT_DATA_DIR "data"
#endif

namespace circrep {

struct BaseCaseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Directory holding the base-case files: $CIRCREP_BASE_CASES if set, else
/// the directory configured at build time.
inline std::filesystem::path base_case_dir()
{
    if (const char* env = std::getenv("CIRCREP_BASE_CASES"); env && *env)
        return env;
    return CIRCREP_DEFAULT_DATA_DIR;
}

inline std::string base_case_file_name(unsigned k) { return "base_k" + std::to_string(k) + ".txt"; }

/// The (alphabet, threshold) pairs with shipped caches, and their length ranges.
struct BaseRange {
    unsigned k;
    Ratio beta;
    std::vector<std::size_t> lengths;
};

inline std::vector<BaseRange> standard_base_ranges()
{
    std::vector<BaseRange> out;
    BaseRange q{4, thresholds::three_halves, {}};
    for (std::size_t n = 1; n <= 173; ++n)
        q.lengths.push_back(n);
    BaseRange t{3, thresholds::seven_fourths, {}};
    for (std::size_t n = 23; n <= 555; ++n)
        t.lengths.push_back(n);
    BaseRange f{5, thresholds::four_thirds, {}};
    for (std::size_t n = 1; n <= 145; ++n)
        f.lengths.push_back(n);
    for (std::size_t n = 147; n <= 1289; n += 2)
        f.lengths.push_back(n);
    out.push_back(std::move(q));
    out.push_back(std::move(t));
    out.push_back(std::move(f));
    return out;
}

inline Notation notation_for(unsigned k) { return k == 5 ? Notation::letters : Notation::digits; }

class BaseCaseStore {
public:
    struct Entry {
        Word word;
        std::string provenance; // "loaded" or "searched"
    };

    /// Verifies and stores a word. Throws if it is not β⁺-free as a circular word.
    void insert(unsigned k, const Ratio& beta, const Word& w, std::string provenance)
    {
        if (w.empty() || w.alphabet_size() > k)
            throw BaseCaseError("base case of length " + std::to_string(w.size()) + " is empty or uses too many letters");
        for (Letter x : w.letters())
            if (x >= k)
                throw BaseCaseError("base case " + w.str() + " uses a letter outside the alphabet");
        if (!is_circular_beta_plus_free(w.letters(), beta))
            throw BaseCaseError("base case " + w.str() + " is not " + beta.str() + "+-free");
        std::lock_guard lock(mutex_);
        entries_[key(k, beta, w.size())] = Entry{w.with_alphabet(k, notation_for(k)), std::move(provenance)};
    }

    std::optional<Entry> find(unsigned k, const Ratio& beta, std::size_t n)
    {
        load_attached(k);
        std::lock_guard lock(mutex_);
        const auto it = entries_.find(key(k, beta, n));
        if (it == entries_.end())
            return std::nullopt;
        return it->second;
    }

    std::size_t size() const
    {
        std::lock_guard lock(mutex_);
        return entries_.size();
    }

    /// Stored word, or a fresh randomized search (default seed) whose
    /// result is kept for later calls.
    Word get_or_search(unsigned k, const Ratio& beta, std::size_t n, double time_budget = 600)
    {
        if (auto e = find(k, beta, n))
            return e->word;
        SearchConfig cfg;
        cfg.k = k;
        cfg.beta = beta;
        cfg.n = n;
        cfg.mode = SearchMode::randomized;
        cfg.time_budget = time_budget;
        const auto r = search_circular(cfg);
        if (!r.word)
            throw BaseCaseError("no base case of length " + std::to_string(n) + " over " + std::to_string(k) +
                                " letters for " + beta.str() + " (" + to_string(r.verdict) + ")");
        insert(k, beta, *r.word, "searched");
        return r.word->with_alphabet(k, notation_for(k));
    }

    /// Reads a cache file:
    ///     circrep-base-cases k=<k> beta=<num/den> count=<m>
    ///     <length>\t<word>
    /// Every word is verified; the count must agree.
    void load(const std::filesystem::path& path)
    {
        std::ifstream in(path);
        if (!in)
            throw BaseCaseError("cannot open " + path.string());
        std::string header;
        std::getline(in, header);
        unsigned k = 0;
        Ratio beta;
        std::size_t count = 0;
        {
            std::istringstream hs(header);
            std::string tag, kv;
            hs >> tag;
            if (tag != "circrep-base-cases")
                throw BaseCaseError(path.string() + ": missing header");
            while (hs >> kv) {
                const auto eq = kv.find('=');
                if (eq == std::string::npos)
                    throw BaseCaseError(path.string() + ": bad header field " + kv);
                const std::string name = kv.substr(0, eq), val = kv.substr(eq + 1);
                if (name == "k")
                    k = static_cast<unsigned>(std::stoul(val));
                else if (name == "beta")
                    beta = Ratio::parse(val);
                else if (name == "count")
                    count = std::stoul(val);
            }
        }
        if (k == 0)
            throw BaseCaseError(path.string() + ": header lacks k");
        std::string line;
        std::size_t seen = 0, line_no = 1;
        while (std::getline(in, line)) {
            ++line_no;
            if (line.empty() || line[0] == '#')
                continue;
            const auto tab = line.find('\t');
            if (tab == std::string::npos)
                throw BaseCaseError(path.string() + ":" + std::to_string(line_no) + ": expected length<TAB>word");
            const std::size_t n = std::stoul(line.substr(0, tab));
            const Word w = Word::parse(line.substr(tab + 1), k);
            if (w.size() != n)
                throw BaseCaseError(path.string() + ":" + std::to_string(line_no) + ": length field " +
                                    std::to_string(n) + " but word has " + std::to_string(w.size()) + " letters");
            insert(k, beta, w, "loaded");
            ++seen;
        }
        if (seen != count)
            throw BaseCaseError(path.string() + ": header promises " + std::to_string(count) + " words, found " +
                                std::to_string(seen));
    }

    void save(const std::filesystem::path& path, unsigned k, const Ratio& beta) const
    {
        std::lock_guard lock(mutex_);
        std::vector<const Entry*> rows;
        for (const auto& [key, e] : entries_)
            if (std::get<0>(key) == k && std::get<1>(key) == beta.num() && std::get<2>(key) == beta.den())
                rows.push_back(&e);
        std::ofstream out(path);
        if (!out)
            throw BaseCaseError("cannot write " + path.string());
        out << "circrep-base-cases k=" << k << " beta=" << beta.str() << " count=" << rows.size() << "\n";
        for (const Entry* e : rows)
            out << e->word.size() << "\t" << e->word.str() << "\n";
    }

    /// Loads every standard cache file present in dir.
    void load_directory(const std::filesystem::path& dir)
    {
        for (const auto& r : standard_base_ranges()) {
            const auto p = dir / base_case_file_name(r.k);
            if (std::filesystem::exists(p))
                load(p);
        }
    }

    /// Like load_directory, but each file is read the first time its
    /// alphabet is looked up.
    void attach_directory(std::filesystem::path dir)
    {
        std::lock_guard lock(load_mutex_);
        dir_ = std::move(dir);
        loaded_.clear();
    }

private:
    using Key = std::tuple<unsigned, std::uint64_t, std::uint64_t, std::size_t>;
    static Key key(unsigned k, const Ratio& b, std::size_t n) { return {k, b.num(), b.den(), n}; }

    void load_attached(unsigned k)
    {
        std::lock_guard lock(load_mutex_);
        if (dir_.empty() || !loaded_.insert(k).second)
            return;
        const auto p = dir_ / base_case_file_name(k);
        if (std::filesystem::exists(p))
            load(p);
    }

    mutable std::mutex mutex_;
    std::mutex load_mutex_;
    std::set<unsigned> loaded_;
    std::filesystem::path dir_;
    std::map<Key, Entry> entries_;
};

/// One line of the cache manifest.
struct ManifestRow {
    std::string file;
    unsigned k = 0;
    Ratio beta;
    std::size_t length = 0;
    std::string status; // "verified", or "flagged" when search ran out of budget
    std::uint64_t nodes = 0;
    std::uint64_t seed = 0;
};

inline void write_manifest(const std::filesystem::path& path, const std::vector<ManifestRow>& rows)
{
    std::ofstream out(path);
    if (!out)
        throw BaseCaseError("cannot write " + path.string());
    out << "file\tk\tbeta\tlength\tstatus\tnodes\tseed\n";
    for (const auto& r : rows)
        out << r.file << "\t" << r.k << "\t" << r.beta.str() << "\t" << r.length << "\t" << r.status << "\t"
            << r.nodes << "\t" << r.seed << "\n";
}

/// Process-wide store, loaded from base_case_dir() on first use.
inline BaseCaseStore& default_store()
{
    static BaseCaseStore* store = [] {
        auto* s = new BaseCaseStore;
        s->attach_directory(base_case_dir());
        return s;
    }();
    return *store;
}

} // namespace circrep
