#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace jones2 {

/// The six-letter generator alphabet of the genus-2 mapping class group:
/// the chain twists z1..z5 and the order-6 element xi = z1 z2 z3 z4 z5.
enum class Gen : std::uint8_t { Z1 = 0, Z2, Z3, Z4, Z5, Xi };

struct Letter {
    Gen gen;
    bool inv = false;

    Letter inverse() const { return {gen, !inv}; }
    bool operator==(const Letter&) const = default;
};

std::string to_string(Gen g);
std::string to_string(Letter l);

/// All 12 signed letters, in a fixed order (z1..z5, xi, then inverses).
const std::array<Letter, 12>& all_letters();

struct WordParseError : std::runtime_error {
    WordParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
    std::size_t position;
};

/// A word in the generators, kept freely reduced (no adjacent g g^-1).
/// No further rewriting is done: semantic equality of mapping classes is
/// tested through the representations, not syntactically.
class GroupWord {
public:
    GroupWord() = default;
    explicit GroupWord(std::vector<Letter> letters);

    /// Whitespace-separated tokens z1..z5, xi with an optional ' or ^<int>
    /// suffix; macros psi0 = (z1 z2 z1)^4 and iota = z1 z2 z3 z4 z5 z5 z4
    /// z3 z2 z1 expand before reduction.
    static GroupWord parse(std::string_view text);

    GroupWord inverse() const;
    GroupWord operator*(const GroupWord&) const;
    /// w * this * w^-1.
    GroupWord conjugated_by(const GroupWord& w) const;

    bool empty() const { return letters_.empty(); }
    std::size_t size() const { return letters_.size(); }
    const std::vector<Letter>& letters() const { return letters_; }
    auto begin() const { return letters_.begin(); }
    auto end() const { return letters_.end(); }

    bool operator==(const GroupWord&) const = default;

    std::string str() const;

private:
    void reduce();
    std::vector<Letter> letters_;
};

GroupWord psi0_word();  // (z1 z2 z1)^4, the separating twist
GroupWord iota_word();  // z1 z2 z3 z4 z5 z5 z4 z3 z2 z1, the hyperelliptic involution
GroupWord xi_word();    // the single letter xi

}  // namespace jones2
