// Copyright 2026 The Dislo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DISLO_RENDER_H
#define DISLO_RENDER_H

#include <string>
#include <string_view>

#include "dislo/witness.h"

namespace dislo {

struct RenderStyle {
    double cell_size = 40;
    std::string light_fill = "#f2f2f2";
    std::string dark_fill = "#8c8c8c";
    std::string dislocation_fill = "#c6d9ec";
    std::string twist_fill = "#e8c9f0";
    std::string error_glyph_color = "red";
    bool show_indices = false;
};

/// Hex (#rgb, #rgba, #rrggbb, #rrggbbaa), rgb()/rgba() with numeric or
/// percentage channels, or a CSS named color.
bool is_valid_css_color(std::string_view text);

/// Throws std::invalid_argument naming the offending field.
void validate_style(const RenderStyle &style);

/// One polygon per generator, one marker per twist, one glyph per chain site.
std::string render_svg(const StabilizerCode &code, const ErrorChain *chain, const RenderStyle &style = {});

}  // namespace dislo

#endif
