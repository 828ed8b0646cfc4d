#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gsynt {

/// Raised when an input instance violates one of its declared invariants.
/// The message names the violated invariant and the offending element.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Deterministic pseudo-random source. All randomized generators and
/// policies in the toolkit draw from this wrapper so that a seed fully
/// determines the output bytes, independent of the standard library's
/// distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed ^ 0x9e3779b97f4a7c15ull) {
        // warm up so that small seeds diverge quickly
        for (int i = 0; i < 4; ++i) next();
    }

    std::uint64_t next() {
        // splitmix64
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform value in [0, n); n must be positive.
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    int range(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool chance(int num, int den) { return below(static_cast<std::uint64_t>(den)) < static_cast<std::uint64_t>(num); }

    template <typename T>
    const T& pick(const std::vector<T>& v) {
        return v[below(v.size())];
    }

private:
    std::uint64_t state_;
};

/// True when `id` is a legal identifier for the line-oriented formats:
/// nonempty, over [A-Za-z0-9_@]. '@' appears in ids of constructed
/// objects (copies and representations use `<id>@<k>` suffixes).
bool valid_id(std::string_view id);

/// Splits `text` into lines, strips '#' comments and surrounding
/// whitespace, and drops blank lines. Returns (line number, content).
std::vector<std::pair<int, std::string>> format_lines(std::string_view text);

/// Whitespace tokenizer for one format line.
std::vector<std::string> split_tokens(std::string_view line);

/// Splits a comma-separated list (no surrounding whitespace expected).
std::vector<std::string> split_commas(std::string_view s);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

}  // namespace gsynt
