#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace crosscap {

/// Permutation of {0,1,2,3}, used as the vertex map of a face gluing.
class Perm4 {
public:
    constexpr Perm4() : img_{0, 1, 2, 3} {}
    constexpr Perm4(int a, int b, int c, int d) : img_{static_cast<uint8_t>(a),
                                                       static_cast<uint8_t>(b),
                                                       static_cast<uint8_t>(c),
                                                       static_cast<uint8_t>(d)} {}

    static Perm4 identity() { return Perm4(); }

    /// Parses four digits, e.g. "0123". Throws std::invalid_argument on bad input.
    static Perm4 from_digits(const std::string& s) {
        if (s.size() != 4) throw std::invalid_argument("permutation needs exactly 4 digits: '" + s + "'");
        int seen[4] = {0, 0, 0, 0};
        Perm4 p;
        for (int i = 0; i < 4; ++i) {
            char c = s[static_cast<size_t>(i)];
            if (c < '0' || c > '3') throw std::invalid_argument("permutation digit out of range: '" + s + "'");
            p.img_[static_cast<size_t>(i)] = static_cast<uint8_t>(c - '0');
            seen[c - '0']++;
        }
        if (seen[0] != 1 || seen[1] != 1 || seen[2] != 1 || seen[3] != 1)
            throw std::invalid_argument("not a permutation: '" + s + "'");
        return p;
    }

    std::string digits() const {
        std::string s(4, '0');
        for (int i = 0; i < 4; ++i) s[static_cast<size_t>(i)] = static_cast<char>('0' + img_[static_cast<size_t>(i)]);
        return s;
    }

    int operator[](int i) const { return img_[static_cast<size_t>(i)]; }

    Perm4 inverse() const {
        Perm4 q;
        for (int i = 0; i < 4; ++i) q.img_[img_[static_cast<size_t>(i)]] = static_cast<uint8_t>(i);
        return q;
    }

    /// Composition: (p.then_after(q))(x) = p(q(x)).
    Perm4 after(const Perm4& q) const {
        Perm4 r;
        for (int i = 0; i < 4; ++i) r.img_[static_cast<size_t>(i)] = img_[q.img_[static_cast<size_t>(i)]];
        return r;
    }

    /// +1 for even permutations, -1 for odd.
    int sign() const {
        int s = 1;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (img_[static_cast<size_t>(i)] > img_[static_cast<size_t>(j)]) s = -s;
        return s;
    }

    bool operator==(const Perm4& o) const { return img_ == o.img_; }
    bool operator!=(const Perm4& o) const { return img_ != o.img_; }

private:
    std::array<uint8_t, 4> img_;
};

} // namespace crosscap
