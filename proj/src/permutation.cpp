#include "ancsieve/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace ancsieve {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images))
{
    std::vector<bool> seen(images_.size() + 1, false);
    for (int v : images_) {
        if (v < 1 || v > size() || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("image sequence is not a permutation");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int size)
{
    std::vector<int> img(static_cast<std::size_t>(size));
    std::iota(img.begin(), img.end(), 1);
    return Permutation(std::move(img));
}

Permutation Permutation::from_cycles(int size, const std::vector<std::vector<int>>& cycles)
{
    std::vector<int> img(static_cast<std::size_t>(size));
    std::iota(img.begin(), img.end(), 1);
    std::vector<bool> used(static_cast<std::size_t>(size) + 1, false);
    for (const auto& cyc : cycles) {
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            const int x = cyc[i];
            if (x < 1 || x > size)
                throw ParseError("cycle element " + std::to_string(x) + " out of range 1.." + std::to_string(size));
            if (used[static_cast<std::size_t>(x)])
                throw ParseError("element " + std::to_string(x) + " appears twice");
            used[static_cast<std::size_t>(x)] = true;
            img[static_cast<std::size_t>(x - 1)] = cyc[(i + 1) % cyc.size()];
        }
    }
    return Permutation(std::move(img));
}

Permutation Permutation::parse(int size, std::string_view text)
{
    std::vector<std::vector<int>> cycles;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
    };
    auto fail = [&](const std::string& why) -> ParseError {
        return ParseError("cannot parse cycle notation '" + std::string(text) + "': " + why);
    };
    skip_ws();
    while (i < text.size()) {
        if (text[i] != '(')
            throw fail("expected '('");
        ++i;
        std::vector<int> cyc;
        skip_ws();
        if (i < text.size() && text[i] == ')')
            throw fail("empty cycle");
        while (true) {
            skip_ws();
            std::size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                ++i;
            if (start == i)
                throw fail("expected a number");
            cyc.push_back(std::stoi(std::string(text.substr(start, i - start))));
            skip_ws();
            if (i >= text.size())
                throw fail("missing ')'");
            if (text[i] == ',') {
                ++i;
                continue;
            }
            if (text[i] == ')') {
                ++i;
                break;
            }
            throw fail("unexpected character");
        }
        cycles.push_back(std::move(cyc));
        skip_ws();
    }
    return from_cycles(size, cycles);
}

Permutation Permutation::inverse() const
{
    std::vector<int> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
        inv[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i) + 1;
    return Permutation(std::move(inv));
}

std::vector<std::vector<int>> Permutation::cycles() const
{
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(images_.size() + 1, false);
    for (int start = 1; start <= size(); ++start) {
        if (seen[static_cast<std::size_t>(start)])
            continue;
        std::vector<int> cyc;
        for (int x = start; !seen[static_cast<std::size_t>(x)]; x = (*this)(x)) {
            seen[static_cast<std::size_t>(x)] = true;
            cyc.push_back(x);
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

int Permutation::cycle_count() const
{
    return count_cycles(images_);
}

std::string format_cycles(const std::vector<std::vector<int>>& cycles)
{
    std::string s;
    for (const auto& cyc : cycles) {
        s += '(';
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            if (i)
                s += ',';
            s += std::to_string(cyc[i]);
        }
        s += ')';
    }
    return s;
}

std::string Permutation::to_string() const
{
    return format_cycles(cycles());
}

Permutation compose(const Permutation& a, const Permutation& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("composing permutations of different sizes");
    std::vector<int> img(static_cast<std::size_t>(a.size()));
    for (int x = 1; x <= a.size(); ++x)
        img[static_cast<std::size_t>(x - 1)] = a(b(x));
    return Permutation(std::move(img));
}

int count_cycles(std::span<const int> images)
{
    std::vector<bool> seen(images.size() + 1, false);
    int count = 0;
    for (std::size_t start = 1; start <= images.size(); ++start) {
        if (seen[start])
            continue;
        ++count;
        for (auto x = start; !seen[x]; x = static_cast<std::size_t>(images[x - 1]))
            seen[x] = true;
    }
    return count;
}

}  // namespace ancsieve
