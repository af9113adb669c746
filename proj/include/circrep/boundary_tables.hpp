#pragma once

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "circrep/boundary_rule_data.hpp"
#include "circrep/word.hpp"

namespace circrep {

enum class CaseTag { I, IIa, IIb1 };
enum class Side { prefix, suffix };

inline const char* to_string(CaseTag t)
{
    switch (t) {
    case CaseTag::I:
        return "I";
    case CaseTag::IIa:
        return "IIa";
    case CaseTag::IIb1:
        return "IIb1";
    }
    return "?";
}

inline const char* to_string(Side s) { return s == Side::prefix ? "prefix" : "suffix"; }

struct BoundaryRuleError : std::logic_error {
    using std::logic_error::logic_error;
};

struct BoundaryEdit {
    int target = 1;        // 1 = eta1 (after "de"), 2 = eta2 (permuted, reversed copy)
    bool swap = false;
    long i = 0, j = 0;     // 1-based, negative from the right
    char from = '*';       // required current letter for `set`; '*' = any
    char to = 'e';
};

struct BoundaryRule {
    std::string id;
    CaseTag tag = CaseTag::I;
    Side side = Side::prefix;
    std::size_t len = 0;
    std::vector<std::string> matches;        // whole length-len prefix/suffix
    std::vector<std::string> ending_matches; // the prefix/suffix ends with one of these
    std::vector<std::string> expect_eta2;
    std::vector<BoundaryEdit> edits;
};

inline std::uint64_t fnv1a64(std::string_view s)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

namespace detail {

inline char swap_ac(char c) { return c == 'a' ? 'c' : c == 'c' ? 'a' : c; }

inline std::string swap_ac(std::string s)
{
    for (char& c : s)
        c = swap_ac(c);
    return s;
}

inline BoundaryRule conjugate_ac(const BoundaryRule& r)
{
    BoundaryRule c = r;
    c.id += "'";
    for (auto& m : c.matches)
        m = swap_ac(m);
    for (auto& m : c.ending_matches)
        m = swap_ac(m);
    for (auto& m : c.expect_eta2)
        m = swap_ac(m);
    for (auto& e : c.edits) {
        e.from = swap_ac(e.from);
        e.to = swap_ac(e.to);
    }
    return c;
}

} // namespace detail

/// Parses the rule table format documented at the top of boundary_rule_text.
/// Rules with conj=ac are returned together with their (a c)-images, whose
/// ids carry a trailing prime.
inline std::vector<BoundaryRule> parse_boundary_rules(std::string_view text)
{
    std::vector<BoundaryRule> out;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    bool open = false, conj = false;
    BoundaryRule cur;
    auto fail = [&](const std::string& msg) {
        throw BoundaryRuleError("boundary rules line " + std::to_string(line_no) + ": " + msg);
    };
    auto check_word = [&](const std::string& w, bool exact) {
        for (char c : w)
            if (c < 'a' || c > 'e')
                fail("bad letter in " + w);
        if (exact && w.size() != cur.len)
            fail("literal " + w + " has length " + std::to_string(w.size()) + ", expected " +
                 std::to_string(cur.len));
        if (w.size() > cur.len)
            fail("literal longer than the rule window");
    };
    auto parse_target = [&](const std::string& t) {
        if (t == "eta1")
            return 1;
        if (t == "eta2")
            return 2;
        fail("unknown target " + t);
        return 0;
    };
    auto check_pos = [&](long p) {
        if (p == 0 || static_cast<std::size_t>(p < 0 ? -p : p) > cur.len)
            fail("position " + std::to_string(p) + " outside the rule window");
        if ((cur.side == Side::prefix) != (p > 0))
            fail("position sign does not match the rule side");
    };
    while (std::getline(in, line)) {
        ++line_no;
        if (auto h = line.find('#'); h != std::string::npos)
            line.erase(h);
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw))
            continue;
        if (kw == "rule") {
            if (open)
                fail("rule inside rule");
            cur = BoundaryRule{};
            conj = false;
            open = true;
            if (!(ls >> cur.id))
                fail("rule without id");
            std::string kv;
            while (ls >> kv) {
                const auto eq = kv.find('=');
                const std::string key = kv.substr(0, eq), val = eq == std::string::npos ? "" : kv.substr(eq + 1);
                if (key == "case") {
                    if (val == "I")
                        cur.tag = CaseTag::I;
                    else if (val == "IIa")
                        cur.tag = CaseTag::IIa;
                    else if (val == "IIb1")
                        cur.tag = CaseTag::IIb1;
                    else
                        fail("unknown case " + val);
                } else if (key == "side") {
                    if (val != "prefix" && val != "suffix")
                        fail("unknown side " + val);
                    cur.side = val == "prefix" ? Side::prefix : Side::suffix;
                } else if (key == "len") {
                    cur.len = std::stoul(val);
                } else if (key == "conj" && val == "ac") {
                    conj = true;
                } else {
                    fail("unknown attribute " + kv);
                }
            }
            if (cur.len == 0)
                fail("rule without len");
            continue;
        }
        if (!open)
            fail("statement outside a rule");
        if (kw == "end") {
            if (cur.matches.empty() && cur.ending_matches.empty())
                fail("rule " + cur.id + " has nothing to match");
            if (cur.edits.empty())
                fail("rule " + cur.id + " has no edits");
            out.push_back(cur);
            if (conj)
                out.push_back(detail::conjugate_ac(cur));
            open = false;
        } else if (kw == "match" || kw == "match-ending") {
            std::string w;
            if (!(ls >> w))
                fail("missing word");
            check_word(w, kw == "match");
            (kw == "match" ? cur.matches : cur.ending_matches).push_back(w);
        } else if (kw == "expect") {
            std::string t, w;
            if (!(ls >> t >> w) || t != "eta2")
                fail("expect takes eta2 and a word");
            check_word(w, true);
            cur.expect_eta2.push_back(w);
        } else if (kw == "set") {
            std::string t, from, to;
            BoundaryEdit e;
            if (!(ls >> t >> e.i >> from >> to) || from.size() != 1 || to.size() != 1)
                fail("set takes target, position, from-letter and to-letter");
            e.target = parse_target(t);
            check_pos(e.i);
            e.from = from[0];
            e.to = to[0];
            cur.edits.push_back(e);
        } else if (kw == "swap") {
            std::string t;
            BoundaryEdit e;
            e.swap = true;
            if (!(ls >> t >> e.i >> e.j))
                fail("swap takes target and two positions");
            e.target = parse_target(t);
            check_pos(e.i);
            check_pos(e.j);
            cur.edits.push_back(e);
        } else {
            fail("unknown statement " + kw);
        }
    }
    if (open)
        fail("unterminated rule " + cur.id);
    return out;
}

inline const std::vector<BoundaryRule>& boundary_rules()
{
    static const std::vector<BoundaryRule> rules = [] {
        if (fnv1a64(boundary_rule_text) != boundary_rule_checksum)
            throw BoundaryRuleError("boundary rule table does not match its checksum");
        return parse_boundary_rules(boundary_rule_text);
    }();
    return rules;
}

namespace detail {

inline std::string side_window(const Word& w, Side side, std::size_t len)
{
    if (w.size() < len)
        return {};
    return (side == Side::prefix ? w.prefix(len) : w.suffix(len)).with_alphabet(5, Notation::letters).str();
}

inline bool ends_with(const std::string& s, const std::string& t)
{
    return s.size() >= t.size() && s.compare(s.size() - t.size(), t.size(), t) == 0;
}

} // namespace detail

inline bool rule_matches(const BoundaryRule& r, const Word& eta1)
{
    const std::string win = detail::side_window(eta1, r.side, r.len);
    if (win.empty())
        return false;
    for (const auto& m : r.matches)
        if (win == m)
            return true;
    for (const auto& m : r.ending_matches)
        if (detail::ends_with(win, m))
            return true;
    return false;
}

/// The rule of the given case and side that applies to eta1, if any.
/// Two applicable rules is an error in the table.
inline const BoundaryRule* find_boundary_rule(CaseTag tag, Side side, const Word& eta1)
{
    const BoundaryRule* hit = nullptr;
    for (const auto& r : boundary_rules()) {
        if (r.tag != tag || r.side != side || !rule_matches(r, eta1))
            continue;
        if (hit)
            throw BoundaryRuleError("boundary rules " + hit->id + " and " + r.id + " both match " +
                                    detail::side_window(eta1, side, r.len));
        hit = &r;
    }
    return hit;
}

inline void apply_boundary_rule(const BoundaryRule& r, Word& eta1, Word& eta2)
{
    if (!r.expect_eta2.empty()) {
        const std::string win = detail::side_window(eta2, r.side, r.len);
        bool ok = false;
        for (const auto& m : r.expect_eta2)
            ok = ok || win == m;
        if (!ok)
            throw BoundaryRuleError("rule " + r.id + ": second word has unexpected " + to_string(r.side) + " " +
                                    win);
    }
    for (const auto& e : r.edits) {
        Word& w = e.target == 1 ? eta1 : eta2;
        const std::size_t i = w.index(e.i);
        if (e.swap) {
            const std::size_t j = w.index(e.j);
            const Letter x = w[i];
            w.set(i, w[j]);
            w.set(j, x);
            continue;
        }
        if (e.from != '*' && w[i] != static_cast<Letter>(e.from - 'a'))
            throw BoundaryRuleError("rule " + r.id + ": expected " + e.from + " at position " +
                                    std::to_string(e.i) + " of " + w.str());
        w.set(i, static_cast<Letter>(e.to - 'a'));
    }
}

/// Ids of the rules applied, prefix side first.
struct BoundaryFixes {
    std::vector<std::string> applied;
};

/// η′ and η″ from η: rules are matched against the unmodified eta1 and
/// then applied to both words.
inline BoundaryFixes apply_boundary_fixes(CaseTag tag, Word& eta1, Word& eta2)
{
    const Word original = eta1;
    BoundaryFixes out;
    for (Side side : {Side::prefix, Side::suffix}) {
        if (const BoundaryRule* r = find_boundary_rule(tag, side, original)) {
            apply_boundary_rule(*r, eta1, eta2);
            out.applied.push_back(r->id);
        }
    }
    return out;
}

} // namespace circrep
