/*
 * Copyright 2026 the bda authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bda/common.hpp"

namespace bda {

/// Damage classes; the numeric order defines severity for worst-case
/// aggregation (NoDamage < ModerateDamage < SevereDamage < Destroyed).
enum class DamageLabel : std::uint8_t {
    NoDamage = 0,
    ModerateDamage = 1,
    SevereDamage = 2,
    Destroyed = 3,
};

/// Mask value for pixels/buildings without an annotation. Such pixels never
/// contribute to the loss or to any metric.
inline constexpr std::uint8_t kUnlabeled = 255;

inline constexpr int kDamageClassCount = 4;

inline bool is_damage_code(std::uint8_t v) { return v < kDamageClassCount; }

inline const char* damage_label_name(DamageLabel l) {
    switch (l) {
        case DamageLabel::NoDamage: return "No Damage";
        case DamageLabel::ModerateDamage: return "Moderate Damage";
        case DamageLabel::SevereDamage: return "Severe Damage";
        case DamageLabel::Destroyed: return "Destroyed";
    }
    return "?";
}

/// Class-merging schemes used for reporting and training targets.
enum class MergeScheme {
    FourClass, // identity
    ThreeClass, // {0,1, 2+3}
    TwoClass,   // {0, 1+2+3}
};

inline int class_count(MergeScheme s) {
    switch (s) {
        case MergeScheme::FourClass: return 4;
        case MergeScheme::ThreeClass: return 3;
        case MergeScheme::TwoClass: return 2;
    }
    return 0;
}

/// Remaps one label code under a scheme; kUnlabeled passes through.
inline std::uint8_t merge_label(std::uint8_t v, MergeScheme s) {
    if (v == kUnlabeled) return kUnlabeled;
    require(is_damage_code(v), "invalid label code " + std::to_string(v));
    switch (s) {
        case MergeScheme::FourClass: return v;
        case MergeScheme::ThreeClass: return v >= 3 ? 2 : v;
        case MergeScheme::TwoClass: return v >= 1 ? 1 : 0;
    }
    return v;
}

/// Report column names mirroring the merged-class layout.
inline std::vector<std::string> class_names(MergeScheme s) {
    switch (s) {
        case MergeScheme::FourClass:
            return {"No Damage", "Moderate Damage", "Severe Damage", "Destroyed"};
        case MergeScheme::ThreeClass:
            return {"No Damage", "Moderate Damage", "Severe + Destroyed"};
        case MergeScheme::TwoClass:
            return {"No Damage", "Damage"};
    }
    return {};
}

inline MergeScheme scheme_from_class_count(int n) {
    switch (n) {
        case 4: return MergeScheme::FourClass;
        case 3: return MergeScheme::ThreeClass;
        case 2: return MergeScheme::TwoClass;
        default: fail("unsupported class count " + std::to_string(n));
    }
}

inline const char* scheme_name(MergeScheme s) {
    switch (s) {
        case MergeScheme::FourClass: return "4-class";
        case MergeScheme::ThreeClass: return "3-class";
        case MergeScheme::TwoClass: return "2-class";
    }
    return "?";
}

} // namespace bda
