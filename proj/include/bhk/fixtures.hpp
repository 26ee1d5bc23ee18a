#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bhk/invertible/matrix.hpp"

namespace bhk::fixtures {

using inv::ExponentMatrix;

struct NamedPencil {
    std::string name;
    ExponentMatrix matrix;
    std::vector<std::int64_t> quotient;  // SL/J invariants as printed
};

inline const ExponentMatrix kF4{{4, 0, 0, 0}, {0, 4, 0, 0}, {0, 0, 4, 0}, {0, 0, 0, 4}};
inline const ExponentMatrix kF2L2{{4, 0, 0, 0}, {0, 4, 0, 0}, {0, 0, 3, 1}, {0, 0, 1, 3}};
inline const ExponentMatrix kF1L3{{4, 0, 0, 0}, {0, 3, 1, 0}, {0, 0, 3, 1}, {0, 1, 0, 3}};
inline const ExponentMatrix kL2L2{{3, 1, 0, 0}, {1, 3, 0, 0}, {0, 0, 3, 1}, {0, 0, 1, 3}};
inline const ExponentMatrix kL4{{3, 1, 0, 0}, {0, 3, 1, 0}, {0, 0, 3, 1}, {1, 0, 0, 3}};

/// x0^2 x1 + x1^2 x2 + x2^3
inline const ExponentMatrix kChain223{{2, 1, 0}, {0, 2, 1}, {0, 0, 3}};
/// x0^2 x1 + x1^5 + x2^5 + x3^5
inline const ExponentMatrix kFermat5Chain25{{2, 1, 0, 0}, {0, 5, 0, 0}, {0, 0, 5, 0}, {0, 0, 0, 5}};

/// The five symmetric quartic pencils with their printed SL/J groups.
inline std::vector<NamedPencil> quartic_pencils() {
    return {{"F4", kF4, {4, 4}}, {"F2L2", kF2L2, {8}}, {"F1L3", kF1L3, {7}}, {"L2L2", kL2L2, {2, 4}}, {"L4", kL4, {5}}};
}

/// P_X printed as (1 - qT)^minus (1 + qT)^plus (1 + c T + q^2 T^2).
struct ZetaRow {
    std::vector<std::int64_t> psis;
    bool smooth = true;
    int minus = 0;
    int plus = 0;
    std::optional<std::int64_t> quadratic;
};

inline constexpr std::int64_t kTableQ = 281;

inline std::vector<ZetaRow> table_f4() {
    return {
        {{0}, true, 19, 0, 462},
        {{1, 53, 228, 280}, false, 0, 0, std::nullopt},
        {{2, 106, 175, 279}, true, 3, 16, 238},
        {{3, 122, 159, 278}, true, 19, 0, 78},
        {{4, 69, 212, 277}, true, 3, 16, -434},
        {{5, 16, 265, 276}, true, 13, 6, 418},
        {{6, 37, 244, 275}, true, 3, 16, -50},
        {{7, 90, 191, 274}, true, 3, 16, 238},
        {{8, 138, 143, 273}, true, 3, 16, -50},
        {{9, 85, 196, 272}, true, 3, 16, -50},
        {{10, 32, 249, 271}, true, 5, 16, std::nullopt},
    };
}

inline std::vector<ZetaRow> table_l2l2() {
    return {
        {{0}, true, 19, 0, 462},
        {{1, 53, 228, 280}, false, 0, 0, std::nullopt},
        {{2, 106, 175, 279}, true, 11, 8, 238},
        {{3, 122, 159, 278}, true, 19, 0, 78},
        {{4, 69, 212, 277}, true, 15, 4, -434},
        {{5, 16, 265, 276}, true, 13, 6, 418},
        {{6, 37, 244, 275}, true, 15, 4, -50},
        {{7, 90, 191, 274}, true, 11, 8, 238},
        {{8, 138, 143, 273}, true, 15, 4, -50},
        {{9, 85, 196, 272}, true, 15, 4, -50},
        {{10, 32, 249, 271}, true, 17, 4, std::nullopt},
    };
}

/// Factor degrees of P_X / R_psi at q = 1 mod 4: F4 is (deg 2)^3 (deg 1)^12,
/// L2L2 is (1 - qT)^8 (deg 2) (deg 4)^2.
struct DegreePattern {
    std::string family;
    std::vector<std::pair<int, int>> degree_multiplicity;  // (degree, count) of the printed pieces
};

inline std::vector<DegreePattern> factor_degree_patterns() {
    return {{"F4", {{2, 3}, {1, 12}}}, {"L2L2", {{1, 8}, {2, 1}, {4, 2}}}};
}

}  // namespace bhk::fixtures
