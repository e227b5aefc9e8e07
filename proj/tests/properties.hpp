#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace ratmed::testing {

struct PropertyResult {
    std::string name;
    std::size_t cases = 0;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty() && cases > 0; }
    void fail(std::string what) {
        if (failures.size() < 8) failures.push_back(std::move(what));
    }
    std::string summary() const;
};

PropertyResult prop_rational_roundtrips(std::uint64_t seed, std::size_t cases);
PropertyResult prop_int_sqrt(std::uint64_t seed, std::size_t cases);
PropertyResult prop_rat_sqrt(std::uint64_t seed, std::size_t cases);
PropertyResult prop_factorization(std::uint64_t seed, std::size_t cases);
PropertyResult prop_pythagorean(std::uint64_t seed, std::size_t cases);
PropertyResult prop_brahmagupta(std::uint64_t seed, std::size_t cases);
PropertyResult prop_circle(std::uint64_t seed, std::size_t cases);
PropertyResult prop_schubert_symmetry(std::uint64_t seed, std::size_t cases);
PropertyResult prop_schubert_roundtrip();
PropertyResult prop_somos_scaling(std::uint64_t seed, std::size_t cases);
PropertyResult prop_somos_backward_forward(std::uint64_t seed, std::size_t cases);
PropertyResult prop_qrt_conservation(std::uint64_t seed, std::size_t cases);
PropertyResult prop_qrt_bijective(std::uint64_t seed, std::size_t cases);
PropertyResult prop_two_medians(std::uint64_t seed, std::size_t cases);
/// run_search against a direct double loop in exact rationals.
PropertyResult prop_search_oracle(int height, int workers);
/// The integer screen agrees with the exact candidate test on every pair.
PropertyResult prop_screen_agreement(int height);
/// Interrupted-and-resumed searches match an uninterrupted one.
PropertyResult prop_checkpoint_resume(int height, const std::filesystem::path& dir);

}  // namespace ratmed::testing
