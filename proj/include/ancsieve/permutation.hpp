#pragma once

#include <compare>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ancsieve {

class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A permutation of {1, ..., size} stored as its image sequence.
///
/// Composition is right-to-left: compose(a, b)(x) = a(b(x)).
class Permutation {
public:
    Permutation() = default;
    /// images[i - 1] = image of i. Throws std::invalid_argument unless the
    /// sequence is a bijection on {1, ..., images.size()}.
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int size);
    /// Unlisted elements are fixed points.
    static Permutation from_cycles(int size, const std::vector<std::vector<int>>& cycles);
    /// Cycle notation such as "(1,3)(2,4)"; whitespace is ignored and
    /// unlisted elements are fixed points. Throws ParseError.
    static Permutation parse(int size, std::string_view text);

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int x) const { return images_[static_cast<std::size_t>(x - 1)]; }
    std::span<const int> images() const { return images_; }

    Permutation inverse() const;
    /// Canonical cycles: each starts at its smallest element, sorted by
    /// that element; fixed points included.
    std::vector<std::vector<int>> cycles() const;
    int cycle_count() const;
    std::string to_string() const;

    friend auto operator<=>(const Permutation&, const Permutation&) = default;
    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

Permutation compose(const Permutation& a, const Permutation& b);

/// Number of cycles of the permutation given by a 1-based image sequence.
int count_cycles(std::span<const int> images);

std::string format_cycles(const std::vector<std::vector<int>>& cycles);

}  // namespace ancsieve
