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
#include <vector>

#include "bda/common.hpp"

namespace bda {

/// 8-bit image, row-major, band-interleaved (HWC).
struct ImageU8 {
    int width = 0;
    int height = 0;
    int bands = 0;
    std::vector<std::uint8_t> data;

    ImageU8() = default;
    ImageU8(int w, int h, int b, std::uint8_t fill = 0)
        : width(w), height(h), bands(b),
          data(static_cast<std::size_t>(w) * h * b, fill) {}

    std::uint8_t& at(int y, int x, int b) {
        return data[(static_cast<std::size_t>(y) * width + x) * bands + b];
    }
    std::uint8_t at(int y, int x, int b) const {
        return data[(static_cast<std::size_t>(y) * width + x) * bands + b];
    }
    std::size_t size() const { return data.size(); }
};

} // namespace bda
