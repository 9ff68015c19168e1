#pragma once

#include <cstdint>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace anc {

// Immutable binary word. Bits are packed into 64-bit blocks; position 0 is
// the first (leftmost) letter of the word.
class Word {
public:
    Word() = default;

    // Packs the low `length` bits of `bits`; bit i of `bits` is position i.
    static Word from_bits(std::uint64_t bits, std::size_t length) {
        if (length > 64)
            throw std::invalid_argument("from_bits: length > 64");
        Word w;
        w.length_ = length;
        if (length > 0) {
            std::uint64_t mask = length == 64 ? ~0ull : ((1ull << length) - 1);
            w.blocks_.push_back(bits & mask);
        }
        return w;
    }

    static Word parse(std::string_view text) {
        Word w;
        w.length_ = text.size();
        w.blocks_.assign((text.size() + 63) / 64, 0);
        for (std::size_t i = 0; i < text.size(); ++i) {
            char c = text[i];
            if (c == '1')
                w.blocks_[i >> 6] |= 1ull << (i & 63);
            else if (c != '0')
                throw std::invalid_argument("word literal must use only 0 and 1");
        }
        return w;
    }

    std::size_t length() const { return length_; }
    bool empty() const { return length_ == 0; }

    int bit(std::size_t i) const {
        if (i >= length_)
            throw std::out_of_range("Word::bit: position out of range");
        return static_cast<int>((blocks_[i >> 6] >> (i & 63)) & 1);
    }

    Word complement() const {
        Word w = *this;
        for (std::size_t i = 0; i < w.blocks_.size(); ++i)
            w.blocks_[i] = ~w.blocks_[i];
        w.trim();
        return w;
    }

    Word reverse() const {
        Word w;
        w.length_ = length_;
        w.blocks_.assign(blocks_.size(), 0);
        for (std::size_t i = 0; i < length_; ++i) {
            if (bit(i)) {
                std::size_t j = length_ - 1 - i;
                w.blocks_[j >> 6] |= 1ull << (j & 63);
            }
        }
        return w;
    }

    // New word with one letter appended.
    Word append(int b) const {
        Word w = *this;
        std::size_t i = w.length_++;
        if ((i >> 6) == w.blocks_.size())
            w.blocks_.push_back(0);
        if (b)
            w.blocks_[i >> 6] |= 1ull << (i & 63);
        return w;
    }

    std::string to_string() const {
        std::string s(length_, '0');
        for (std::size_t i = 0; i < length_; ++i)
            if (bit(i))
                s[i] = '1';
        return s;
    }

    friend bool operator==(const Word& a, const Word& b) {
        return a.length_ == b.length_ && a.blocks_ == b.blocks_;
    }
    friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }

private:
    void trim() {
        std::size_t tail = length_ & 63;
        if (!blocks_.empty() && tail != 0)
            blocks_.back() &= (1ull << tail) - 1;
    }

    std::size_t length_ = 0;
    std::vector<std::uint64_t> blocks_;
};

// True when some proper divisor d of the length is a period, i.e. the word is
// a shorter prefix repeated an integral number of times.
inline bool is_periodic(const Word& x) {
    std::size_t n = x.length();
    if (n == 0)
        throw std::invalid_argument("is_periodic: empty word");
    for (std::size_t d = 1; d * 2 <= n; ++d) {
        if (n % d != 0)
            continue;
        bool ok = true;
        for (std::size_t i = d; i < n && ok; ++i)
            ok = x.bit(i) == x.bit(i % d);
        if (ok)
            return true;
    }
    return false;
}

} // namespace anc
