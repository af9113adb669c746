#include <catch_amalgamated.hpp>

#include <set>
#include <string>

#include "circrep/boundary_tables.hpp"
#include "circrep/pansiot.hpp"
#include "circrep/pansiot_cases.hpp"

using namespace circrep;

namespace {

Word L(std::string_view s) { return Word::parse(s, 5); }

const char* small_rule = R"(
rule T.1 case=I side=prefix len=4
match abcd
set eta1 2 b e
end
rule T.2 case=I side=suffix len=3 conj=ac
match-ending ba
expect eta2 dba
swap eta2 -1 -3
end
)";

} // namespace

TEST_CASE("fnv1a64 test vectors")
{
    CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
    CHECK(fnv1a64("foobar") == 0x85944171f73967e8ULL);
}

TEST_CASE("embedded rule table matches its checksum")
{
    CHECK(fnv1a64(boundary_rule_text) == boundary_rule_checksum);
    std::string edited(boundary_rule_text);
    edited[edited.size() / 2] ^= 1;
    CHECK(fnv1a64(edited) != boundary_rule_checksum);
}

TEST_CASE("embedded rule table parses")
{
    const auto& rules = boundary_rules();
    CHECK(rules.size() == 31);
    std::set<std::string> ids;
    for (const auto& r : rules) {
        CHECK(ids.insert(r.id).second);
        CHECK((r.len == 39 || r.len == 46));
        for (const auto& m : r.matches)
            CHECK(m.size() == r.len);
    }
    // Primed rules are the (a c) images of the rule before them.
    for (std::size_t i = 1; i < rules.size(); ++i)
        if (rules[i].id.back() == '\'') {
            REQUIRE(rules[i].id == rules[i - 1].id + "'");
            for (std::size_t j = 0; j < rules[i].matches.size(); ++j)
                CHECK(rules[i].matches[j] == detail::swap_ac(rules[i - 1].matches[j]));
        }
}

TEST_CASE("rule parser")
{
    const auto rules = parse_boundary_rules(small_rule);
    REQUIRE(rules.size() == 3);
    CHECK(rules[2].id == "T.2'");
    CHECK(rules[2].ending_matches == std::vector<std::string>{"bc"});
    CHECK(rules[2].expect_eta2 == std::vector<std::string>{"dbc"});
    CHECK(rules[0].edits[0].from == 'b');
    CHECK(rules[1].edits[0].swap);
    CHECK(rules[1].edits[0].i == -1);
}

TEST_CASE("rule parser rejects malformed tables")
{
    const char* bad[] = {
        "rule X case=I side=prefix len=4\nmatch abc\nset eta1 1 a e\nend\n",    // short literal
        "rule X case=I side=prefix len=4\nmatch abcd\nset eta1 -1 a e\nend\n",  // sign
        "rule X case=I side=suffix len=4\nmatch abcd\nset eta1 5 a e\nend\n",   // window
        "rule X case=I side=prefix len=4\nmatch abcd\nset eta3 1 a e\nend\n",   // target
        "rule X case=III side=prefix len=4\nmatch abcd\nset eta1 1 a e\nend\n", // case
        "rule X case=I side=prefix len=4\nmatch abcd\nend\n",                   // no edits
        "rule X case=I side=prefix len=4\nset eta1 1 a e\nend\n",               // no match
        "rule X case=I side=prefix len=4\nmatch abcd\nset eta1 1 a e\n",        // unterminated
        "match abcd\n",                                                         // outside
        "rule X case=I side=prefix len=4\nmatch abxd\nset eta1 1 a e\nend\n",   // letter
        "rule X case=I side=prefix\nmatch abcd\nset eta1 1 a e\nend\n",         // no len
    };
    for (const char* t : bad)
        CHECK_THROWS_AS(parse_boundary_rules(t), BoundaryRuleError);
}

TEST_CASE("applying a rule")
{
    const auto rules = parse_boundary_rules(small_rule);
    Word e1 = L("abcdab"), e2 = L("abcdab");
    REQUIRE(rule_matches(rules[0], e1));
    apply_boundary_rule(rules[0], e1, e2);
    CHECK(e1.str() == "aecdab");
    CHECK(e2.str() == "abcdab");
    // The from-letter is checked.
    CHECK_THROWS_AS(apply_boundary_rule(rules[0], e1, e2), BoundaryRuleError);

    Word s1 = L("cdba"), s2 = L("cdba");
    REQUIRE(rule_matches(rules[1], s1));
    CHECK_FALSE(rule_matches(rules[2], s1));
    apply_boundary_rule(rules[1], s1, s2);
    CHECK(s2.str() == "cabd");
    Word t1 = L("cdbc"), t2 = L("cdba");
    REQUIRE(rule_matches(rules[2], t1));
    CHECK_THROWS_AS(apply_boundary_rule(rules[2], t1, t2), BoundaryRuleError);
}

TEST_CASE("fixes are matched against the unmodified word")
{
    const auto& rules = boundary_rules();
    const auto it = std::find_if(rules.begin(), rules.end(), [](const BoundaryRule& r) { return r.id == "I.b"; });
    REQUIRE(it != rules.end());
    Word e1 = L(it->matches.front() + std::string(40, 'a'));
    Word e2 = e1;
    const auto fx = apply_boundary_fixes(CaseTag::I, e1, e2);
    REQUIRE(fx.applied == std::vector<std::string>{"I.b"});
    CHECK(e1[5] == le);
}

TEST_CASE("boundary exhaustion over a prefix of P")
{
    const auto rep = verify_boundary_exhaustion(gen_P(20000), {71, 100});
    CHECK(rep.unmatched_failures.empty());
    CHECK(rep.failures_after_fix.empty());
    CHECK(rep.unused_rules.empty());
    CHECK(rep.exceptional.at("I prefix") == 12);
    CHECK(rep.exceptional.at("I suffix") == 16);
    CHECK(rep.exceptional.at("IIa prefix") == 3);
    CHECK(rep.exceptional.at("IIa suffix") == 60);
    CHECK(rep.exceptional.at("IIb1 prefix") == 5);
    CHECK(rep.exceptional.at("IIb1 suffix") == 4);
    CHECK_THROWS_AS(verify_boundary_exhaustion(gen_P(1000), {70}), std::invalid_argument);
}
