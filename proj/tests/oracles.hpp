#pragma once

// Frozen reference data: the family and sporadic tables of the two-median
// Heron triangles and their factorizations.

#include <array>
#include <string>

namespace ratmed::testing {

struct TriangleRow {
    const char* label;
    const char* a;
    const char* b;
    const char* c;
    const char* k;
    const char* l;
    const char* area;
};

inline constexpr std::array<TriangleRow, 9> kTriangleTable{{
    {"1", "73", "51", "26", "35/2", "97/2", "420"},
    {"2", "626", "875", "291", "572", "433/2", "55440"},
    {"*", "1241", "4368", "3673", "7975/2", "1657", "2042040"},
    {"**", "14384", "14791", "11257", "11001", "21177/2", "75698280"},
    {"3", "28779", "13816", "15155", "3589/2", "21937", "23931600"},
    {"4", "1823675", "185629", "1930456", "2048523/2", "3751059/2", "142334216640"},
    {"***", "2288232", "1976471", "2025361", "1641725", "3843143/2", "1877686881840"},
    {"****", "22816608", "20565641", "19227017", "16314487", "36845705/2", "185643608470320"},
    {"5", "2442655864", "2396426547", "46263061", "1175099279", "2488886435/2", "2137147184560080"},
}};

/// Family rows n = 1..5 in table order.
inline constexpr std::array<int, 5> kFamilyRowIndex{0, 1, 4, 5, 8};
/// Sporadic rows *, **, ***, ****.
inline constexpr std::array<int, 4> kSporadicRowIndex{2, 3, 6, 7};

struct FactorTableRow {
    const char* label;
    const char* s;
    const char* s_minus_a;
    const char* s_minus_b;
    const char* s_minus_c;
    const char* area;
};

inline constexpr std::array<FactorTableRow, 5> kFamilyFactors{{
    {"1", "3*5^2", "2", "2^3*3", "7^2", "2^2*3*5*7"},
    {"2", "5*11^2", "3*7", "2*3^3*5", "2^7*7", "2^4*3^2*5*7*11"},
    {"3", "11*37^2", "2^3*5*7^3", "3*5^3*7*11", "2^5*3", "2^4*3*5^2*7^2*11*37"},
    {"4", "7*37*83^2", "2^9*7*11", "2^3*5*11^3*37", "3^4*5*19^2", "2^6*3^2*5*7*11^2*19*37*83"},
    {"5", "2^5*7^2*83*137^2", "2^3*3*19*37", "11*37^3*83", "3*5^2*11*17^2*19*23^2",
     "2^4*3*5*7*11*17*19*23*37^2*83*137"},
}};

inline constexpr std::array<FactorTableRow, 4> kSporadicFactors{{
    {"*", "3*7*13*17", "2^3*5^2*17", "3*7*13", "2^3*11^2", "2^3*3*5*7*11*13*17"},
    {"**", "2^3*7*19^2", "2^3*3^6", "5^2*7*31", "17^2*31", "2^3*3^3*5*7*17*19*31"},
    {"***", "2^3*3^2*11^2*19^2", "2^5*3^2*5^2*7*17", "23^2*47^2", "7*17*97^2",
     "2^4*3^2*5*7*11*17*19*23*47*97"},
    {"****", "17*23^2*59^2", "5^2*7^2*13^2*41", "2^4*3*11^2*43^2", "2^4*3*17*19^2*41",
     "2^4*3*5*7*11*13*17*19*23*41*43*59"},
}};

/// The all-ones Somos-5 sequence as first listed.
inline constexpr std::array<long, 16> kSomosOriginal{1, 1, 1, 1, 1, 2, 3, 5, 11, 37, 83, 274, 1217, 6161, 22833, 165713};

inline constexpr std::array<long, 10> kSPrefix{1, 1, 1, 2, 3, 5, 11, 37, 83, 274};
inline constexpr std::array<long, 10> kTPrefix{0, 1, -1, 1, 1, -7, 8, -1, -57, 391};

}  // namespace ratmed::testing
