#pragma once

// Exception lists for the boundary adjustments of the even-length 5-letter
// construction. boundary_rule_checksum is FNV-1a (64-bit) over the bytes of
// boundary_rule_text; the unit tests recompute it, so any edit to the text
// must update the checksum as well.

#include <cstdint>
#include <string_view>

namespace circrep {

inline constexpr std::string_view boundary_rule_text = R"rules(# Boundary adjustments for the even-length 5-letter construction.
#
# Each rule starts with a header line
#     rule <id> case=<I|IIa|IIb1> side=<prefix|suffix> len=<n> [conj=ac]
# followed by
#     match <word>             the length-n prefix/suffix of eta equals <word>
#     match-ending <word>      the length-n prefix/suffix ends with <word>
#     expect eta2 <word>       when the rule fires, eta2 has this prefix/suffix
#     set <eta1|eta2> <i> <from|*> <to>
#     swap <eta1|eta2> <i> <j>
# and a closing "end". Positions are 1-based; negative positions count from
# the right (-1 is the last letter). eta1 is the left copy (written after
# "de"), eta2 the copy that is permuted and reversed. conj=ac adds the image
# of the rule under the letter swap (a c).

rule I.a case=I side=prefix len=39
match adbacdabcadcbacebcabdacbadcabcebacbdabc
match adbacdabcadcbacebcabdacbadcabcdbacbdabc
match adcabdacbadbcabecbacdabcadbacbecabcdacb
match adcabdacbadbcabecbacdabcadbacbdcabcdacb
swap eta1 6 16
end

rule I.b case=I side=prefix len=39
match adcbacdbcabecbadbcdacbdcabcdbaecbdacdbc
match adcbacdbcabecbadbcdacbdcabcdbadcbdacdbc
match adcbacdbcabecbadbcdabdcadbacbdabcdbadca
set eta1 6 c e
end

rule I.c case=I side=prefix len=39
match adbcabdcbacebcadcbdabcdbacbdcaebcdabdcb
match adbcabdcbacebcadcbdabcdbacbdcadbcdabdcb
match adbcabdcbacebcadcbdacdbadcabcdacbdcadba
set eta2 6 b e
end

rule I.d case=I side=prefix len=39
match adbaceabcadcbacdbcabecbadbcdacbdcabcdba
set eta1 5 c e
set eta1 6 e d
end

rule I.e case=I side=prefix len=39
match adcabeacbadbcabdcbacebcadcbdabcdbacbdca
set eta2 5 b e
set eta2 6 e d
end

rule I.f case=I side=suffix len=39
match cbdcadbcdabdcbacdbcadcbdabcebacbdcabcda
match acdabdcbadbcabdacdbadcbdabcebacbdcabcda
match acdabdcadbcdacbadcabdacdbcaecbacdabcadb
match badbcdacbdcabcdbadcbdacdbcaecbacdabcadb
set eta1 -6 * e
end

rule I.g case=I side=suffix len=39
match bcdbadcbdacdbcabdcbadbcdacbecabcdbacbda
match abdacdbcadcbacdabdcadbcdacbecabcdbacbda
match cadcbdacdbadcabcdacbdcadbaceabcadcbacdb
match bcdbadcabdacbadbcdabdcadbaceabcadcbacdb
set eta2 -6 * e
end

rule I.h case=I side=suffix len=39
match bcadcbacdbcabdacbadcabcebacbdabcadbacda
match cbadbcabdcbacdabcadbacbecabcdacbadcabda
match acbdcabcdacbadbcabdcbaceabcadbacbdabcdb
match cabdacbadcabcdbacbdabcaecbacdbcabdcbadb
swap eta1 -6 -16
end

rule I.i case=I side=suffix len=39
match acdbcabdcbadbcdacbecabcdbacbdabcaebacda
match abdcbacdbcadcbdabcebacbdcabcdacbaecabda
match bcdacbadcabdacdbcaecbacdabcadbacbeabcdb
match badcabcdacbdcadbaceabcadcbacdbcabecbadb
set eta1 -6 * d
set eta1 -5 * e
set eta2 -6 * d
set eta2 -5 * e
end

rule IIa.1 case=IIa side=prefix len=46
match abdcbaebcabdacbadcabceacbdcadbacdabcadcbdacdba
match abdcbaebcabdacbadcabceacbdcadbacdabcadcbeacdba
set eta1 6 a e
set eta1 7 e d
set eta2 6 a e
set eta2 7 e d
end

rule IIa.2 case=IIa side=prefix len=46
match abecbadbcdabdcadbaceabcadcbdacdbadcabceacbdcad
set eta1 3 e d
set eta1 12 b e
set eta2 3 e d
set eta2 12 b e
end

rule IIa.3 case=IIa side=suffix len=39 conj=ac
match-ending dbacbda
match-ending dbcabda
set eta1 -6 b e
end

rule IIa.4 case=IIa side=suffix len=39 conj=ac
match cdbadcabdacbadbcdabdcadbacbeabcdbadcbda
match cdbadcabeacbadbcdabdcadbacbeabcdbadcbda
match bcdacbadbcabdcbacdabcadbacbeabcdbadcbda
set eta1 -12 e d
set eta1 -11 a e
end

rule IIa.5 case=IIa side=suffix len=39 conj=ac
match dcabdacdbcaecbacdabcadbacbeabcdbadcabda
set eta1 -13 e d
set eta1 -12 a e
end

rule IIa.6 case=IIa side=suffix len=39 conj=ac
match acbadcabdacdbcaecbacdabcadbacbeabcdbadc
set eta1 -9 e d
set eta1 -8 a e
end

rule IIa.7 case=IIa side=suffix len=39 conj=ac
match bcadcbacdbcabdacbadcabcebacbdabcadbacda
swap eta1 -6 -16
swap eta2 -6 -16
end

rule IIa.8 case=IIa side=suffix len=39 conj=ac
match dabcadbacbdcabcdacbaebcabdcbacdbcadcbda
swap eta1 -9 -19
end

rule IIa.9 case=IIa side=suffix len=39 conj=ac
match cbadbcabdcbacdabcadbacbecabcdacbadcabda
swap eta1 -6 -16
end

rule IIa.10 case=IIa side=suffix len=39 conj=ac
match adcbdacdbadcabceacbdcadbcdabdcbaebcabda
set eta1 -7 e d
set eta1 -6 b e
set eta2 -7 e d
set eta2 -6 b e
end

rule IIb1.1 case=IIb1 side=prefix len=39
match bdcadbcdacbecabcdbacbdabcadcbacdbcabdac
match bdcadbcdacbecabcdbadcbdacdbcabecbadbcda
match bdcadbcdacbecabcdbacbdabcadcbacdbcabeac
match bdcadbcdacbecabcdbadcbdacdbcabecbadbcda
set eta1 11 b e
set eta1 12 e d
end

rule IIb1.2 case=IIb1 side=prefix len=39
match bdcbacebcadcbdacdbadcabeacbadbcdabdcadb
expect eta2 adcbdabcebacbdcabcdacbaecabdacdbcadcbac
set eta1 6 c e
set eta1 7 e d
set eta2 8 c e
set eta2 9 e d
end

rule IIb1.3 case=IIb1 side=suffix len=39
match cadbacbdcabcdacbadbcabdcbacebcadcbdacdb
match adcbdabcdbacbdcadbcdabdcbacebcadcbdacdb
match adcbdabcebacbdcadbcdabdcbacebcadcbdacdb
set eta1 -12 e d
set eta1 -11 b e
end

rule IIb1.4 case=IIb1 side=suffix len=39
match bdacdbadcbdabcaebacdabdcadbcdacbecabcdb
expect eta2 cabcdacbdcadbaceabcadcbacdbcabecbadbcda
set eta1 -7 e d
set eta1 -6 c e
set eta2 -9 e d
set eta2 -8 c e
end
)rules";

inline constexpr std::uint64_t boundary_rule_checksum = 0x9cb8cf7feb53a52bULL;

} // namespace circrep
