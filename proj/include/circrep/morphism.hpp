#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "circrep/word.hpp"

namespace circrep {

/// Letter-to-word map with arbitrary image lengths (φ, μ live here).
class GeneralMorphism {
public:
    GeneralMorphism() = default;

    GeneralMorphism(std::string name, std::vector<Word> images, unsigned target_alphabet)
        : name_(std::move(name)), images_(std::move(images)), target_alphabet_(target_alphabet)
    {
        if (images_.empty())
            throw std::invalid_argument("morphism " + name_ + ": no images");
        for (const auto& img : images_)
            if (img.alphabet_size() > target_alphabet_)
                throw std::invalid_argument("morphism " + name_ + ": image outside target alphabet");
    }

    const std::string& name() const noexcept { return name_; }
    unsigned source_alphabet() const noexcept { return static_cast<unsigned>(images_.size()); }
    unsigned target_alphabet() const noexcept { return target_alphabet_; }
    const Word& image(Letter a) const
    {
        if (a >= images_.size())
            throw std::invalid_argument("morphism " + name_ + ": letter outside source alphabet");
        return images_[a];
    }
    const std::vector<Word>& images() const noexcept { return images_; }

    Word apply(const Word& w) const
    {
        std::vector<Letter> out;
        for (Letter a : w.letters()) {
            const auto& img = image(a);
            out.insert(out.end(), img.vec().begin(), img.vec().end());
        }
        return Word(std::move(out), target_alphabet_, notation_of_target());
    }

    Word operator()(const Word& w) const { return apply(w); }

private:
    Notation notation_of_target() const
    {
        for (const auto& img : images_)
            if (!img.empty())
                return img.notation();
        return Notation::digits;
    }

    std::string name_;
    std::vector<Word> images_;
    unsigned target_alphabet_ = 2;
};

/// Morphism whose images all have the same length.
class UniformMorphism : public GeneralMorphism {
public:
    UniformMorphism() = default;

    UniformMorphism(std::string name, std::vector<Word> images, unsigned target_alphabet)
        : GeneralMorphism(std::move(name), std::move(images), target_alphabet)
    {
        block_length_ = this->images().front().size();
        if (block_length_ == 0)
            throw std::invalid_argument("uniform morphism " + this->name() + ": erasing image");
        for (const auto& img : this->images())
            if (img.size() != block_length_)
                throw std::invalid_argument("uniform morphism " + this->name() + ": image lengths differ");
    }

    std::size_t block_length() const noexcept { return block_length_; }

private:
    std::size_t block_length_ = 0;
};

/// Cyclic uniform morphism: the image of a is the image of 0 with a added
/// to every letter modulo k.
inline UniformMorphism make_cyclic_morphism(std::string name, const Word& image_of_zero, unsigned k,
                                            std::size_t block_len)
{
    if (image_of_zero.size() != block_len)
        throw std::invalid_argument("make_cyclic_morphism: image length " +
                                    std::to_string(image_of_zero.size()) + " != block length " +
                                    std::to_string(block_len));
    std::vector<Word> images;
    for (unsigned a = 0; a < k; ++a) {
        std::vector<Letter> v;
        for (Letter x : image_of_zero.letters()) {
            if (x >= k)
                throw std::invalid_argument("make_cyclic_morphism: letter outside alphabet");
            v.push_back(static_cast<Letter>((x + a) % k));
        }
        images.emplace_back(std::move(v), k, image_of_zero.notation());
    }
    return UniformMorphism(std::move(name), std::move(images), k);
}

/// A set H of uniform morphisms over a common source and target alphabet.
class MorphismFamily {
public:
    MorphismFamily() = default;

    MorphismFamily(std::string name, std::vector<UniformMorphism> members)
        : name_(std::move(name)), members_(std::move(members))
    {
        if (members_.empty())
            throw std::invalid_argument("family " + name_ + ": no members");
        for (const auto& m : members_) {
            if (m.source_alphabet() != members_.front().source_alphabet() ||
                m.target_alphabet() != members_.front().target_alphabet())
                throw std::invalid_argument("family " + name_ + ": members disagree on alphabets");
        }
    }

    const std::string& name() const noexcept { return name_; }
    const std::vector<UniformMorphism>& members() const noexcept { return members_; }
    const UniformMorphism& member(std::size_t i) const { return members_.at(i); }
    unsigned source_alphabet() const { return members_.front().source_alphabet(); }
    unsigned target_alphabet() const { return members_.front().target_alphabet(); }

    std::size_t min_block() const
    {
        std::size_t m = members_.front().block_length();
        for (const auto& h : members_)
            m = std::min(m, h.block_length());
        return m;
    }

    std::size_t max_block() const
    {
        std::size_t m = 0;
        for (const auto& h : members_)
            m = std::max(m, h.block_length());
        return m;
    }

    struct Block {
        Word word;
        Letter source;
        std::size_t member;
    };

    /// H(A): every image of every letter under every member.
    std::vector<Block> building_blocks() const
    {
        std::vector<Block> out;
        for (std::size_t m = 0; m < members_.size(); ++m)
            for (unsigned a = 0; a < source_alphabet(); ++a)
                out.push_back(Block{members_[m].image(static_cast<Letter>(a)), static_cast<Letter>(a), m});
        return out;
    }

    /// h_1(a_1) ... h_n(a_n) where h_i = members[selector[i]].
    Word mixed_image(const Word& w, std::span<const std::size_t> selector) const
    {
        if (selector.size() != w.size())
            throw std::invalid_argument("mixed_image: selector length differs from word length");
        std::vector<Letter> out;
        for (std::size_t i = 0; i < w.size(); ++i) {
            const auto& img = member(selector[i]).image(w[i]);
            out.insert(out.end(), img.vec().begin(), img.vec().end());
        }
        Notation n = members_.front().image(0).notation();
        return Word(std::move(out), target_alphabet(), n);
    }

private:
    std::string name_;
    std::vector<UniformMorphism> members_;
};

/// Reads a uniform morphism from text:
///
///     # optional comments
///     name f9
///     alphabet 4
///     block 9
///     012132310
///     123203021
///     ...
///
/// with one image per source letter, in letter order.
inline UniformMorphism parse_morphism_definition(std::string_view text)
{
    std::string name;
    unsigned alphabet = 0;
    std::size_t block = 0;
    std::vector<Word> images;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r'))
            line.remove_suffix(1);
        while (!line.empty() && (line.front() == ' ' || line.front() == '\t'))
            line.remove_prefix(1);
        if (line.empty())
            continue;
        auto value_of = [&](std::string_view key) -> std::optional<std::string_view> {
            if (line.substr(0, key.size()) != key || line.size() <= key.size() ||
                (line[key.size()] != ' ' && line[key.size()] != '\t'))
                return std::nullopt;
            auto v = line.substr(key.size());
            while (!v.empty() && (v.front() == ' ' || v.front() == '\t'))
                v.remove_prefix(1);
            return v;
        };
        try {
            if (auto v = value_of("name")) {
                name = std::string(*v);
            } else if (auto v = value_of("alphabet")) {
                alphabet = static_cast<unsigned>(std::stoul(std::string(*v)));
            } else if (auto v = value_of("block")) {
                block = std::stoul(std::string(*v));
            } else {
                images.push_back(Word::parse(line, alphabet));
            }
        } catch (const std::exception& e) {
            throw std::invalid_argument("morphism definition line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    if (name.empty() || alphabet == 0 || block == 0)
        throw std::invalid_argument("morphism definition: name, alphabet and block are required");
    if (images.size() != alphabet)
        throw std::invalid_argument("morphism definition: expected " + std::to_string(alphabet) + " images, got " +
                                    std::to_string(images.size()));
    for (const auto& img : images)
        if (img.size() != block)
            throw std::invalid_argument("morphism definition: image " + img.str() + " does not have length " +
                                        std::to_string(block));
    return UniformMorphism(std::move(name), std::move(images), alphabet);
}

namespace morphisms {

inline const UniformMorphism& f9()
{
    static const UniformMorphism m = make_cyclic_morphism("f9", Word::parse("012132310", 4), 4, 9);
    return m;
}

inline const UniformMorphism& f11()
{
    static const UniformMorphism m = make_cyclic_morphism("f11", Word::parse("01213231210", 4), 4, 11);
    return m;
}

inline const UniformMorphism& d19()
{
    static const UniformMorphism m =
        make_cyclic_morphism("d19", Word::parse("0120212012102120210", 3), 3, 19);
    return m;
}

inline const UniformMorphism& d23()
{
    static const UniformMorphism m =
        make_cyclic_morphism("d23", Word::parse("01202120102012102120210", 3), 3, 23);
    return m;
}

/// φ(0) = 101101, φ(1) = 10.
inline const GeneralMorphism& phi()
{
    static const GeneralMorphism m("phi", {Word::parse("101101", 2), Word::parse("10", 2)}, 2);
    return m;
}

/// μ(w) = φ(w)·101. Not a morphism in the algebraic sense, kept alongside φ.
inline Word mu(const Word& w) { return phi().apply(w) + Word::parse("101", 2); }

inline const MorphismFamily& family_F()
{
    static const MorphismFamily fam("F", {f9(), f11()});
    return fam;
}

inline const MorphismFamily& family_D()
{
    static const MorphismFamily fam("D", {d19(), d23()});
    return fam;
}

inline std::optional<UniformMorphism> uniform_by_name(std::string_view name)
{
    if (name == "f9")
        return f9();
    if (name == "f11")
        return f11();
    if (name == "d19" || name == "d")
        return d19();
    if (name == "d23")
        return d23();
    return std::nullopt;
}

inline std::optional<MorphismFamily> family_by_name(std::string_view name)
{
    if (name == "F")
        return family_F();
    if (name == "D")
        return family_D();
    return std::nullopt;
}

} // namespace morphisms

} // namespace circrep
