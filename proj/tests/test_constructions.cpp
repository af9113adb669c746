#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <random>
#include <thread>

#include "circrep/base_cases.hpp"
#include "circrep/constructions.hpp"
#include "oracle.hpp"

using namespace circrep;

namespace {

Word searched(unsigned k, const Ratio& beta, std::size_t n, std::uint64_t seed)
{
    SearchConfig c;
    c.k = k;
    c.beta = beta;
    c.n = n;
    c.mode = SearchMode::randomized;
    c.seed = seed;
    const auto r = search_circular(c);
    REQUIRE(r.word);
    return *r.word;
}

struct TempDir {
    std::filesystem::path path;
    TempDir()
    {
        path = std::filesystem::temp_directory_path() /
               ("circrep_test_" + std::to_string(std::random_device{}()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
};

void write(const std::filesystem::path& p, const std::string& s) { std::ofstream(p) << s; }

} // namespace

TEST_CASE("f9/f11 images of split circular words stay 3/2+-free")
{
    const Ratio b = thresholds::three_halves;
    std::mt19937_64 rng(3);
    for (int t = 0; t < 60; ++t) {
        const std::size_t k = 8 + rng() % 20, l = 2 + rng() % 9;
        const Word w = searched(4, b, k + l, rng());
        const Word img = morphisms::f9()(w.prefix(k)) + morphisms::f11()(w.suffix(l));
        REQUIRE(img.size() == 9 * k + 11 * l);
        REQUIRE(oracle::circular_beta_plus_free(img.vec(), b));
    }
}

TEST_CASE("d19/d23 images of split circular words stay 7/4+-free")
{
    const Ratio b = thresholds::seven_fourths;
    std::mt19937_64 rng(4);
    for (int t = 0; t < 30; ++t) {
        const std::size_t l = 2 + rng() % 19;
        const std::size_t k = std::max<std::size_t>(6, 23 - std::min<std::size_t>(l, 23)) + rng() % 10;
        const Word w = searched(3, b, k + l, rng());
        const Word img = morphisms::d19()(w.prefix(k)) + morphisms::d23()(w.suffix(l));
        REQUIRE(img.size() == 19 * k + 23 * l);
        REQUIRE(oracle::circular_beta_plus_free(img.vec(), b));
    }
}

TEST_CASE("quaternary construction")
{
    CHECK(construct_quaternary(1).representative().str() == "0");
    const auto d = decompose(174 - 94, 9, 11);
    CHECK(d.r + 8 == 12);
    CHECK(d.s + 2 == 6);
    for (std::size_t n : {2, 50, 173, 174, 175, 300, 999}) {
        const Word w = construct(4, n).representative();
        REQUIRE(w.size() == n);
        REQUIRE(w.alphabet_size() == 4);
        REQUIRE(oracle::circular_beta_plus_free(w.vec(), thresholds::three_halves));
    }
    const Word big = construct(4, 10000).representative();
    CHECK(big.size() == 10000);
    CHECK(oracle::sampled_circular_free(big.vec(), thresholds::three_halves, 20, 1));
    CHECK_THROWS_AS(construct(4, 0), UnsupportedLength);
}

TEST_CASE("ternary construction")
{
    for (std::size_t n : {23, 24, 100, 555, 556, 700}) {
        const Word w = construct(3, n).representative();
        REQUIRE(w.size() == n);
        REQUIRE(oracle::circular_beta_plus_free(w.vec(), thresholds::seven_fourths));
    }
    for (std::size_t n : {5, 7, 9, 10, 14, 16, 17, 22})
        CHECK_THROWS_AS(construct(3, n), UnsupportedLength);
    CHECK_THROWS_AS(construct(3, 21), UnsupportedLength);
    // 395 = 19·23 − 19 − 23 has no representation, so 555 cannot recurse.
    CHECK_THROWS_AS(decompose(555 - 160, 19, 23), NoDecomposition);
}

TEST_CASE("quinary construction")
{
    CHECK(construct(5, 1).representative().str() == "a");
    for (std::size_t n : {7, 60, 145, 146, 147, 148, 400}) {
        const Word w = construct(5, n).representative();
        REQUIRE(w.size() == n);
        REQUIRE(oracle::circular_beta_plus_free(w.vec(), thresholds::four_thirds));
    }
    for (std::size_t n : {1291, 2000}) {
        const Word w = construct(5, n).representative();
        REQUIRE(w.size() == n);
        REQUIRE(oracle::sampled_circular_free(w.vec(), thresholds::four_thirds, 60, n));
    }
    CHECK_THROWS_AS(construct(6, 10), UnsupportedAlphabet);
    CHECK_THROWS_AS(construct(2, 10), UnsupportedAlphabet);
}

TEST_CASE("constructions are deterministic and thread safe")
{
    std::vector<std::size_t> lengths{180, 250, 600, 700, 150, 1293};
    std::vector<unsigned> ks{4, 4, 3, 3, 5, 5};
    std::vector<std::string> got(lengths.size());
    std::vector<std::thread> ts;
    for (std::size_t i = 0; i < lengths.size(); ++i)
        ts.emplace_back([&, i] { got[i] = construct(ks[i], lengths[i]).representative().str(); });
    for (auto& t : ts)
        t.join();
    for (std::size_t i = 0; i < lengths.size(); ++i)
        CHECK(got[i] == construct(ks[i], lengths[i]).representative().str());
}

TEST_CASE("base case store files")
{
    TempDir dir;
    BaseCaseStore s;
    s.insert(4, thresholds::three_halves, Word::parse("0123", 4), "searched");
    s.insert(4, thresholds::three_halves, Word::parse("012", 4), "searched");
    CHECK_THROWS_AS(s.insert(4, thresholds::three_halves, Word::parse("0101", 4), "x"), BaseCaseError);
    CHECK_THROWS_AS(s.insert(3, thresholds::seven_fourths, Word::parse("0123", 4), "x"), BaseCaseError);
    s.save(dir.path / "base_k4.txt", 4, thresholds::three_halves);

    BaseCaseStore t;
    t.load(dir.path / "base_k4.txt");
    REQUIRE(t.find(4, thresholds::three_halves, 4));
    CHECK(t.find(4, thresholds::three_halves, 4)->word.str() == "0123");
    CHECK(t.find(4, thresholds::three_halves, 4)->provenance == "loaded");
    CHECK_FALSE(t.find(4, thresholds::three_halves, 5));

    BaseCaseStore lazy;
    lazy.attach_directory(dir.path);
    CHECK(lazy.size() == 0);
    CHECK(lazy.find(4, thresholds::three_halves, 3));
    CHECK(lazy.size() == 2);

    write(dir.path / "bad1.txt", "circrep-base-cases k=4 beta=3/2 count=1\n4\t0101\n");
    write(dir.path / "bad2.txt", "circrep-base-cases k=4 beta=3/2 count=2\n3\t012\n");
    write(dir.path / "bad3.txt", "base cases\n3\t012\n");
    write(dir.path / "bad4.txt", "circrep-base-cases k=4 beta=3/2 count=1\n4\t012\n");
    for (const char* f : {"bad1.txt", "bad2.txt", "bad3.txt", "bad4.txt"}) {
        BaseCaseStore b;
        CHECK_THROWS_AS(b.load(dir.path / f), BaseCaseError);
    }
}

TEST_CASE("shipped base cases cover the standard ranges")
{
    BaseCaseStore s;
    s.load_directory(CIRCREP_DEFAULT_DATA_DIR);
    for (const auto& r : standard_base_ranges())
        for (std::size_t n : r.lengths) {
            const auto e = s.find(r.k, r.beta, n);
            REQUIRE(e);
            REQUIRE(e->word.size() == n);
            REQUIRE(e->word.alphabet_size() == r.k);
        }
}
