#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ratmed/buchholz.hpp"
#include "ratmed/exact.hpp"

namespace ratmed {

/// Search over all (theta, phi) = (p/q, r/t) in lowest terms with
/// 1 <= p < q <= height and 1 <= r < t <= height that satisfy the
/// positivity constraints. Each candidate is scaled by tau = q^2 t^2, which
/// makes all three sides integers.
struct SearchConfig {
    int height = 2;
    int workers = 1;
    /// Number of consecutive theta values per unit of work and checkpointing.
    std::size_t chunk_size = 1024;
    std::optional<std::filesystem::path> checkpoint_path;
    bool resume = false;
    /// Stop after this many chunks have been processed by this call. The run
    /// is then reported incomplete; used to simulate interruption.
    std::optional<std::size_t> stop_after_chunks;
};

struct Classification {
    enum class Kind { Family, Sporadic };
    Kind kind = Kind::Sporadic;
    long family_index = 0;

    /// "family:<n>" or "sporadic".
    std::string to_string() const;

    friend bool operator==(const Classification&, const Classification&) = default;
};

struct FoundTriangle {
    /// Primitive integer sides in parametrization order; k and l are the
    /// medians to the first two.
    std::array<Integer, 3> sides;
    Rational k;
    Rational l;
    Integer area;
    ParamPoint source;
    std::optional<Classification> classification;

    std::array<Integer, 3> sorted_sides() const;
    const Integer& max_side() const;
};

/// Visits every search parameter point for `height` in lexicographic order
/// of (q, p, t, r). Throws DomainError for height < 2.
void enumerate_params(int height, const std::function<void(const ParamPoint&)>& visit);
std::vector<ParamPoint> enumerate_params(int height);
std::uint64_t count_params(int height);

/// Builds the primitive triangle at `p` and returns it when its area is
/// rational. Throws DomainError if `p` violates the positivity constraints
/// and InvariantViolation if the a- or b-median of a hit is irrational.
std::optional<FoundTriangle> test_candidate(const ParamPoint& p);

/// Smallest n whose family triangle has every side above `max_side`.
long family_bound_for(const Integer& max_side);

/// Family member n <= family_bound with the same sorted sides, else
/// sporadic. Throws DomainError when family_triangle(family_bound) does not
/// have every side above t's largest side (the answer would be inconclusive).
Classification classify(const FoundTriangle& t, long family_bound);

struct SearchResult {
    /// Deduplicated by sorted sides, classified, ordered by area then sides.
    std::vector<FoundTriangle> triangles;
    std::size_t chunks_total = 0;
    std::size_t chunks_done = 0;
    std::uint64_t candidates = 0;
    bool complete() const { return chunks_done == chunks_total; }
};

/// Runs (or resumes) the search. Output is identical for any worker count.
/// Throws ResumeError when a checkpoint cannot be trusted.
SearchResult run_search(const SearchConfig& cfg);

/// One JSON object per line:
/// {"a":..,"b":..,"c":..,"k":"..","l":"..","area":..,"theta":"p/q","phi":"r/t","class":".."}
std::string to_json_line(const FoundTriangle& t);

namespace detail {

/// Integer-only screen for one candidate (all inputs positive, p < q,
/// r < t). Returns true for a rational-area triangle. Falls back to the
/// exact path when 128-bit arithmetic would overflow.
bool screen_candidate(std::int64_t p, std::int64_t q, std::int64_t r, std::int64_t t);

/// Perfect-square test on unsigned 128-bit integers.
bool is_square_u128(unsigned __int128 n);

}  // namespace detail

}  // namespace ratmed
