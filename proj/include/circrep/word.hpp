#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace circrep {

using Letter = std::uint8_t;

inline constexpr unsigned max_alphabet = 6;

/// How letters are rendered: 0,1,2,... (Σ3, Σ4, binary) or a,b,c,... (A ∪ {e}).
enum class Notation : std::uint8_t { digits, letters };

inline char letter_char(Letter x, Notation n)
{
    return static_cast<char>((n == Notation::digits ? '0' : 'a') + x);
}

/// Finite word over an alphabet of at most six letters, coded 0..k-1.
class Word {
public:
    Word() = default;

    Word(std::vector<Letter> letters, unsigned alphabet_size, Notation notation = Notation::digits)
        : letters_(std::move(letters)), alphabet_size_(alphabet_size), notation_(notation)
    {
        if (alphabet_size_ == 0 || alphabet_size_ > max_alphabet)
            throw std::invalid_argument("Word: alphabet size must be in 1..6");
        for (Letter x : letters_)
            if (x >= alphabet_size_)
                throw std::invalid_argument("Word: letter outside alphabet");
    }

    Word(std::initializer_list<Letter> letters, unsigned alphabet_size,
         Notation notation = Notation::digits)
        : Word(std::vector<Letter>(letters), alphabet_size, notation)
    {
    }

    /// Parses a word written with digits ("0121") or lowercase letters ("abcd").
    /// When alphabet_size is 0 it is inferred: the largest letter plus one,
    /// but at least 2.
    static Word parse(std::string_view text, unsigned alphabet_size = 0)
    {
        std::vector<Letter> out;
        out.reserve(text.size());
        Notation notation = Notation::digits;
        bool seen_digit = false, seen_alpha = false;
        for (char c : text) {
            if (c >= '0' && c <= '5') {
                out.push_back(static_cast<Letter>(c - '0'));
                seen_digit = true;
            } else if (c >= 'a' && c <= 'f') {
                out.push_back(static_cast<Letter>(c - 'a'));
                seen_alpha = true;
            } else {
                throw std::invalid_argument(std::string("Word::parse: invalid character '") + c + "'");
            }
        }
        if (seen_digit && seen_alpha)
            throw std::invalid_argument("Word::parse: mixed digit and letter notation");
        if (seen_alpha)
            notation = Notation::letters;
        if (alphabet_size == 0) {
            Letter hi = 1;
            for (Letter x : out)
                hi = std::max(hi, x);
            alphabet_size = hi + 1u;
        }
        return Word(std::move(out), alphabet_size, notation);
    }

    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    unsigned alphabet_size() const noexcept { return alphabet_size_; }
    Notation notation() const noexcept { return notation_; }

    std::span<const Letter> letters() const noexcept { return letters_; }
    const std::vector<Letter>& vec() const noexcept { return letters_; }

    Letter operator[](std::size_t i) const { return letters_[i]; }

    void set(std::size_t i, Letter x)
    {
        check_letter(x);
        letters_.at(i) = x;
    }

    void push_back(Letter x)
    {
        check_letter(x);
        letters_.push_back(x);
    }

    void pop_back() { letters_.pop_back(); }

    void insert(std::size_t pos, Letter x)
    {
        check_letter(x);
        letters_.insert(letters_.begin() + static_cast<std::ptrdiff_t>(pos), x);
    }

    Word& operator+=(const Word& other)
    {
        for (Letter x : other.letters_)
            check_letter(x);
        letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
        return *this;
    }

    friend Word operator+(Word a, const Word& b)
    {
        a += b;
        return a;
    }

    /// Zero-based, half-open substring.
    Word substr(std::size_t pos, std::size_t len) const
    {
        if (pos > size() || len > size() - pos)
            throw std::out_of_range("Word::substr: range outside word");
        return Word(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                                        letters_.begin() + static_cast<std::ptrdiff_t>(pos + len)),
                    alphabet_size_, notation_);
    }

    Word prefix(std::size_t m) const { return substr(0, m); }
    Word suffix(std::size_t m) const
    {
        if (m > size())
            throw std::out_of_range("Word::suffix: longer than word");
        return substr(size() - m, m);
    }

    /// One-based index with negative values counting from the right:
    /// at(1) is the first letter, at(-1) the last.
    Letter at(long i) const { return letters_[index(i)]; }

    /// Zero-based position of the one-based (possibly negative) index i.
    std::size_t index(long i) const
    {
        const long n = static_cast<long>(size());
        long k = i > 0 ? i : n + i + 1;
        if (i == 0 || k < 1 || k > n)
            throw std::out_of_range("Word: index " + std::to_string(i) + " outside word of length " +
                                    std::to_string(n));
        return static_cast<std::size_t>(k - 1);
    }

    /// Inclusive one-based slice w[i:j]; negative bounds count from the right,
    /// so slice(2, -2) drops the first and last letters.
    Word slice(long i, long j) const
    {
        const std::size_t a = index(i);
        const std::size_t b = index(j);
        if (b + 1 < a)
            throw std::out_of_range("Word::slice: reversed bounds");
        return substr(a, b + 1 - a);
    }

    Word with_alphabet(unsigned k, Notation n) const { return Word(letters_, k, n); }

    std::string str() const
    {
        std::string s;
        s.reserve(size());
        for (Letter x : letters_)
            s.push_back(letter_char(x, notation_));
        return s;
    }

    friend bool operator==(const Word& a, const Word& b) noexcept { return a.letters_ == b.letters_; }
    friend std::strong_ordering operator<=>(const Word& a, const Word& b) noexcept
    {
        return a.letters_ <=> b.letters_;
    }

    friend std::ostream& operator<<(std::ostream& os, const Word& w) { return os << w.str(); }

private:
    void check_letter(Letter x) const
    {
        if (x >= alphabet_size_)
            throw std::invalid_argument("Word: letter outside alphabet");
    }

    std::vector<Letter> letters_;
    unsigned alphabet_size_ = 2;
    Notation notation_ = Notation::digits;
};

inline Word reverse(const Word& w)
{
    std::vector<Letter> v(w.letters().rbegin(), w.letters().rend());
    return Word(std::move(v), w.alphabet_size(), w.notation());
}

inline Word rotate(const Word& w, std::size_t shift)
{
    if (w.empty())
        return w;
    std::vector<Letter> v(w.vec());
    std::rotate(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(shift % v.size()), v.end());
    return Word(std::move(v), w.alphabet_size(), w.notation());
}

inline bool contains_factor(const Word& w, const Word& f)
{
    return std::search(w.vec().begin(), w.vec().end(), f.vec().begin(), f.vec().end()) != w.vec().end();
}

/// Index of the lexicographically least rotation (Booth's algorithm).
inline std::size_t least_rotation(std::span<const Letter> s)
{
    const std::size_t n = s.size();
    if (n == 0)
        return 0;
    std::vector<long> f(2 * n, -1);
    std::size_t k = 0;
    for (std::size_t j = 1; j < 2 * n; ++j) {
        const Letter sj = s[j % n];
        long i = f[j - k - 1];
        while (i != -1 && sj != s[(k + static_cast<std::size_t>(i) + 1) % n]) {
            if (sj < s[(k + static_cast<std::size_t>(i) + 1) % n])
                k = j - static_cast<std::size_t>(i) - 1;
            i = f[static_cast<std::size_t>(i)];
        }
        if (i == -1 && sj != s[(k + static_cast<std::size_t>(i) + 1) % n]) {
            if (sj < s[(k + static_cast<std::size_t>(i) + 1) % n])
                k = j;
            f[j - k] = -1;
        } else {
            f[j - k] = i + 1;
        }
    }
    return k;
}

/// A word considered up to rotation. Keeps the representative it was built
/// from; the canonical form is the least rotation.
class CircularWord {
public:
    CircularWord() = default;

    explicit CircularWord(Word representative) : rep_(std::move(representative))
    {
        if (rep_.empty())
            throw std::invalid_argument("CircularWord: empty representative");
    }

    const Word& representative() const noexcept { return rep_; }
    std::size_t size() const noexcept { return rep_.size(); }
    unsigned alphabet_size() const noexcept { return rep_.alphabet_size(); }

    Word canonical() const { return rotate(rep_, least_rotation(rep_.letters())); }

    std::vector<Word> conjugates() const
    {
        std::vector<Word> out;
        out.reserve(size());
        for (std::size_t r = 0; r < size(); ++r)
            out.push_back(rotate(rep_, r));
        return out;
    }

    CircularWord rotated(std::size_t shift) const { return CircularWord(rotate(rep_, shift)); }

    std::string str() const { return rep_.str(); }

    /// Circular words compare equal when they are conjugate.
    friend bool operator==(const CircularWord& a, const CircularWord& b)
    {
        return a.size() == b.size() && a.canonical() == b.canonical();
    }

private:
    Word rep_;
};

/// Bijection on the letters 0..size-1.
class Permutation {
public:
    Permutation() = default;

    explicit Permutation(std::vector<Letter> image) : image_(std::move(image))
    {
        std::vector<bool> hit(image_.size(), false);
        for (Letter x : image_) {
            if (x >= image_.size() || hit[x])
                throw std::invalid_argument("Permutation: not a bijection");
            hit[x] = true;
        }
    }

    static Permutation identity(unsigned k)
    {
        std::vector<Letter> v(k);
        for (unsigned i = 0; i < k; ++i)
            v[i] = static_cast<Letter>(i);
        return Permutation(std::move(v));
    }

    /// Builds a permutation of k letters from cycle notation, e.g. "(abc)(de)"
    /// or "(0 1 2)". Letters not mentioned are fixed.
    static Permutation from_cycles(std::string_view cycles, unsigned k)
    {
        auto p = identity(k);
        std::vector<Letter> cur;
        auto close = [&] {
            for (std::size_t i = 0; i < cur.size(); ++i)
                p.image_[cur[i]] = cur[(i + 1) % cur.size()];
            cur.clear();
        };
        bool open = false;
        for (char c : cycles) {
            if (c == '(') {
                if (open)
                    throw std::invalid_argument("Permutation: nested cycle");
                open = true;
            } else if (c == ')') {
                if (!open)
                    throw std::invalid_argument("Permutation: unbalanced cycle");
                close();
                open = false;
            } else if (c == ' ' || c == ',') {
                continue;
            } else {
                Letter x;
                if (c >= 'a' && c <= 'f')
                    x = static_cast<Letter>(c - 'a');
                else if (c >= '0' && c <= '5')
                    x = static_cast<Letter>(c - '0');
                else
                    throw std::invalid_argument("Permutation: bad letter in cycle notation");
                if (x >= k)
                    throw std::invalid_argument("Permutation: letter outside alphabet");
                cur.push_back(x);
            }
        }
        if (open)
            throw std::invalid_argument("Permutation: unterminated cycle");
        return Permutation(p.image_);
    }

    unsigned size() const noexcept { return static_cast<unsigned>(image_.size()); }
    Letter operator()(Letter x) const { return x < image_.size() ? image_[x] : x; }

    Permutation inverse() const
    {
        std::vector<Letter> inv(image_.size());
        for (std::size_t i = 0; i < image_.size(); ++i)
            inv[image_[i]] = static_cast<Letter>(i);
        return Permutation(std::move(inv));
    }

    /// (a * b)(x) = a(b(x)).
    friend Permutation operator*(const Permutation& a, const Permutation& b)
    {
        const unsigned k = std::max(a.size(), b.size());
        std::vector<Letter> v(k);
        for (unsigned i = 0; i < k; ++i)
            v[i] = a(b(static_cast<Letter>(i)));
        return Permutation(std::move(v));
    }

    friend bool operator==(const Permutation& a, const Permutation& b) = default;

    bool is_identity() const
    {
        for (std::size_t i = 0; i < image_.size(); ++i)
            if (image_[i] != i)
                return false;
        return true;
    }

private:
    std::vector<Letter> image_;
};

inline Word apply_permutation(const Word& w, const Permutation& perm)
{
    std::vector<Letter> v;
    v.reserve(w.size());
    for (Letter x : w.letters())
        v.push_back(perm(x));
    return Word(std::move(v), std::max(w.alphabet_size(), perm.size()), w.notation());
}

} // namespace circrep
