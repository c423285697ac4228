#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "rng.hpp"

namespace organic {

enum class WallCell : std::uint8_t { Solid = 0, Glass = 1 };

/// Solid/glass pattern for one side of the building. Row 0 is the bottom wall
/// course; column 0 is the end of the side with the smaller coordinate.
class WallMatrix {
public:
    WallMatrix() = default;
    WallMatrix(int height, int length, WallCell fill = WallCell::Solid)
        : height_(height), length_(length) {
        if (height < 1 || length < 1)
            throw ValidationError("wall matrix dimensions must be >= 1");
        cells_.assign(static_cast<std::size_t>(height) * static_cast<std::size_t>(length), fill);
    }

    int height() const noexcept { return height_; }
    int length() const noexcept { return length_; }
    bool in_bounds(int row, int col) const noexcept {
        return row >= 0 && col >= 0 && row < height_ && col < length_;
    }

    WallCell at(int row, int col) const { return cells_[offset(row, col)]; }
    void set(int row, int col, WallCell v) { cells_[offset(row, col)] = v; }

    int state(int row, int col) const {
        return in_bounds(row, col) ? static_cast<int>(at(row, col)) : 0;
    }

    int glass_count() const {
        int n = 0;
        for (WallCell c : cells_) n += (c == WallCell::Glass);
        return n;
    }

    // "0101..." per row, bottom row first.
    std::vector<std::string> rows() const {
        std::vector<std::string> out;
        for (int r = 0; r < height_; ++r) {
            std::string line(static_cast<std::size_t>(length_), '0');
            for (int c = 0; c < length_; ++c)
                if (at(r, c) == WallCell::Glass) line[static_cast<std::size_t>(c)] = '1';
            out.push_back(std::move(line));
        }
        return out;
    }

    static WallMatrix from_rows(const std::vector<std::string>& rows) {
        if (rows.empty() || rows.front().empty()) throw ParseError("empty wall matrix");
        WallMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
        for (int r = 0; r < m.height_; ++r) {
            const auto& line = rows[static_cast<std::size_t>(r)];
            if (static_cast<int>(line.size()) != m.length_)
                throw ParseError("ragged wall matrix row", r);
            for (int c = 0; c < m.length_; ++c) {
                char ch = line[static_cast<std::size_t>(c)];
                if (ch != '0' && ch != '1') throw ParseError("wall cell must be 0 or 1", r, c);
                m.set(r, c, ch == '1' ? WallCell::Glass : WallCell::Solid);
            }
        }
        return m;
    }

    friend bool operator==(const WallMatrix&, const WallMatrix&) = default;

private:
    std::size_t offset(int row, int col) const {
        return static_cast<std::size_t>(row) * static_cast<std::size_t>(length_) +
               static_cast<std::size_t>(col);
    }

    int height_ = 0;
    int length_ = 0;
    std::vector<WallCell> cells_;
};

struct CaParams {
    double init_glass_probability = 0.25;
    int generations = 10;
    // Bit k set: a neighbourhood sum of k yields glass. Sums range over 0..5.
    std::uint8_t glass_sums = (1u << 2) | (1u << 3);

    bool glass_for(int sum) const { return sum >= 0 && sum <= 5 && ((glass_sums >> sum) & 1u); }

    void validate() const {
        if (!(init_glass_probability >= 0.0 && init_glass_probability <= 1.0))
            throw ValidationError("initial glass probability must lie in [0, 1]");
        if (generations < 0) throw ValidationError("CA generations must be >= 0");
        if (glass_sums & ~0x3Fu) throw ValidationError("glass sums must be within 0..5");
    }

    std::string sums_to_string() const {
        std::string out;
        for (int s = 0; s <= 5; ++s) {
            if (!glass_for(s)) continue;
            if (!out.empty()) out += ',';
            out += static_cast<char>('0' + s);
        }
        return out;
    }

    // Comma-separated digits, e.g. "2,3". An empty string means "never glass".
    static std::uint8_t parse_sums(std::string_view text) {
        std::uint8_t mask = 0;
        bool expect_digit = true;
        for (char ch : text) {
            if (ch == ' ') continue;
            if (expect_digit && ch >= '0' && ch <= '5') {
                mask |= static_cast<std::uint8_t>(1u << (ch - '0'));
                expect_digit = false;
            } else if (!expect_digit && ch == ',') {
                expect_digit = true;
            } else {
                throw ValidationError("glass sums must be comma-separated digits in 0..5, got '" +
                                      std::string(text) + "'");
            }
        }
        if (expect_digit && !text.empty())
            throw ValidationError("trailing comma in glass sums '" + std::string(text) + "'");
        return mask;
    }

    friend bool operator==(const CaParams&, const CaParams&) = default;
};

inline WallMatrix init_wall(int height, int length, const CaParams& params, RngStream& rng) {
    WallMatrix m(height, length);
    for (int r = 0; r < height; ++r)
        for (int c = 0; c < length; ++c)
            if (rng.bernoulli(params.init_glass_probability)) m.set(r, c, WallCell::Glass);
    return m;
}

/// One synchronous generation: each cell's own state plus its four
/// orthogonal neighbours (outside the matrix counts as solid) decides glass.
inline WallMatrix ca_step(const WallMatrix& m, const CaParams& params) {
    WallMatrix next(m.height(), m.length());
    for (int r = 0; r < m.height(); ++r) {
        for (int c = 0; c < m.length(); ++c) {
            int sum = m.state(r, c) + m.state(r - 1, c) + m.state(r + 1, c) + m.state(r, c - 1) +
                      m.state(r, c + 1);
            if (params.glass_for(sum)) next.set(r, c, WallCell::Glass);
        }
    }
    return next;
}

inline WallMatrix generate_wall(int height, int length, const CaParams& params, RngStream& rng) {
    WallMatrix m = init_wall(height, length, params, rng);
    for (int g = 0; g < params.generations; ++g) m = ca_step(m, params);
    return m;
}

enum class Side : std::uint8_t { North, East, South, West };

inline constexpr std::array<Side, 4> kSides = {Side::North, Side::East, Side::South, Side::West};

inline constexpr std::string_view side_name(Side s) {
    constexpr std::array<std::string_view, 4> names = {"north", "east", "south", "west"};
    return names[static_cast<std::size_t>(s)];
}

// North/south run along x (length = width); east/west along z (length = depth).
inline constexpr int side_length(Side s, int width, int depth) {
    return (s == Side::North || s == Side::South) ? width : depth;
}

/// Four facades in north, east, south, west order, each from its own
/// sub-stream of `seed`.
inline std::array<WallMatrix, 4> generate_facades(int width, int depth, int height,
                                                  const CaParams& params, std::uint64_t seed) {
    std::array<WallMatrix, 4> out;
    for (Side s : kSides) {
        auto rng = RngStream::derive(seed, "facade", static_cast<std::uint64_t>(s));
        out[static_cast<std::size_t>(s)] =
            generate_wall(height, side_length(s, width, depth), params, rng);
    }
    return out;
}

}  // namespace organic
