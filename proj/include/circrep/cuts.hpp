#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "circrep/morphism.hpp"
#include "circrep/word.hpp"

namespace circrep {

/// Thrown when a word occurs in no mixed image within the enumeration bound.
struct NotAFactor : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Split u = x·y at `position` (|x| = position) that lines up with a block
/// boundary in every embedding of u into a product of building blocks.
struct Cut {
    std::size_t position = 0;
    friend bool operator==(const Cut&, const Cut&) = default;
};

/// One way of reading u inside h_1(a_1)...h_m(a_m): u starts `offset` letters
/// into the first block and ends inside the last one.
struct Embedding {
    std::vector<std::size_t> blocks; // indices into MorphismFamily::building_blocks()
    std::size_t offset = 0;
};

inline std::size_t default_enum_bound(const Word& u, const MorphismFamily& fam)
{
    return (u.size() + fam.min_block() - 1) / fam.min_block() + 2;
}

/// All embeddings of u using at most `max_blocks` blocks.
inline std::vector<Embedding> enumerate_embeddings(const Word& u, const MorphismFamily& fam,
                                                   std::size_t max_blocks)
{
    std::vector<Embedding> out;
    if (u.empty() || max_blocks == 0)
        return out;
    const auto blocks = fam.building_blocks();
    const auto& uv = u.vec();
    const std::size_t n = uv.size();

    std::vector<std::size_t> stack;
    // Extends an embedding whose blocks cover u[0, pos).
    auto extend = [&](auto&& self, std::size_t pos, std::size_t offset) -> void {
        if (stack.size() >= max_blocks)
            return;
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            const auto& bw = blocks[b].word.vec();
            const std::size_t take = std::min(bw.size(), n - pos);
            if (!std::equal(bw.begin(), bw.begin() + static_cast<long>(take), uv.begin() + static_cast<long>(pos)))
                continue;
            stack.push_back(b);
            if (pos + bw.size() >= n)
                out.push_back(Embedding{stack, offset});
            else
                self(self, pos + bw.size(), offset);
            stack.pop_back();
        }
    };

    for (std::size_t b = 0; b < blocks.size(); ++b) {
        const auto& bw = blocks[b].word.vec();
        for (std::size_t o = 0; o < bw.size(); ++o) {
            const std::size_t take = std::min(bw.size() - o, n);
            if (!std::equal(bw.begin() + static_cast<long>(o), bw.begin() + static_cast<long>(o + take), uv.begin()))
                continue;
            stack.assign(1, b);
            if (bw.size() - o >= n)
                out.push_back(Embedding{stack, o});
            else
                extend(extend, bw.size() - o, o);
        }
    }
    return out;
}

/// Block boundaries of an embedding, as positions 0..|u| inside u.
inline std::vector<std::size_t> boundary_positions(const Embedding& e, const MorphismFamily& fam, std::size_t u_len)
{
    const auto blocks = fam.building_blocks();
    std::vector<std::size_t> out;
    if (e.offset == 0)
        out.push_back(0);
    std::size_t pos = 0;
    for (std::size_t i = 0; i < e.blocks.size(); ++i) {
        const std::size_t len = blocks[e.blocks[i]].word.size() - (i == 0 ? e.offset : 0);
        pos += len;
        if (pos <= u_len)
            out.push_back(pos);
    }
    return out;
}

/// Positions that are block boundaries in every embedding of u.
inline std::vector<Cut> find_cuts(const Word& u, const MorphismFamily& fam, std::size_t enum_bound = 0)
{
    if (enum_bound == 0)
        enum_bound = default_enum_bound(u, fam);
    const auto embs = enumerate_embeddings(u, fam, enum_bound);
    if (embs.empty())
        throw NotAFactor("find_cuts: " + u.str() + " is not a factor of any " + fam.name() + "-image");
    std::vector<char> common(u.size() + 1, 1);
    std::vector<char> here(u.size() + 1);
    for (const auto& e : embs) {
        std::fill(here.begin(), here.end(), 0);
        for (auto p : boundary_positions(e, fam, u.size()))
            here[p] = 1;
        for (std::size_t i = 0; i <= u.size(); ++i)
            common[i] = common[i] && here[i];
    }
    std::vector<Cut> cuts;
    for (std::size_t i = 0; i <= u.size(); ++i)
        if (common[i])
            cuts.push_back(Cut{i});
    return cuts;
}

/// A minimal H-preimage of u together with how u sits on it: `lead` letters
/// of u come from the first block.
struct Preimage {
    Word word;
    std::size_t lead = 0;
    friend bool operator==(const Preimage&, const Preimage&) = default;
};

inline std::vector<Preimage> h_preimages(const Word& u, const MorphismFamily& fam, std::size_t enum_bound = 0)
{
    if (u.empty())
        throw std::invalid_argument("h_preimages: empty word");
    if (enum_bound == 0)
        enum_bound = default_enum_bound(u, fam);
    const auto embs = enumerate_embeddings(u, fam, enum_bound);
    if (embs.empty())
        throw NotAFactor("h_preimages: " + u.str() + " is not a factor of any " + fam.name() + "-image");
    const auto blocks = fam.building_blocks();
    std::vector<Preimage> out;
    for (const auto& e : embs) {
        std::vector<Letter> src;
        for (auto b : e.blocks)
            src.push_back(blocks[b].source);
        Preimage p{Word(std::move(src), fam.source_alphabet()),
                   std::min(blocks[e.blocks.front()].word.size() - e.offset, u.size())};
        if (std::find(out.begin(), out.end(), p) == out.end())
            out.push_back(std::move(p));
    }
    return out;
}

} // namespace circrep
