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

#include "dislo/render.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <iomanip>
#include <sstream>

namespace dislo {

namespace {

constexpr std::string_view kNamedColors[] = {
    "aliceblue", "antiquewhite", "aqua", "aquamarine", "azure", "beige", "bisque", "black", "blanchedalmond", "blue",
    "blueviolet", "brown", "burlywood", "cadetblue", "chartreuse", "chocolate", "coral", "cornflowerblue", "cornsilk",
    "crimson", "cyan", "darkblue", "darkcyan", "darkgoldenrod", "darkgray", "darkgreen", "darkgrey", "darkkhaki",
    "darkmagenta", "darkolivegreen", "darkorange", "darkorchid", "darkred", "darksalmon", "darkseagreen",
    "darkslateblue", "darkslategray", "darkslategrey", "darkturquoise", "darkviolet", "deeppink", "deepskyblue",
    "dimgray", "dimgrey", "dodgerblue", "firebrick", "floralwhite", "forestgreen", "fuchsia", "gainsboro",
    "ghostwhite", "gold", "goldenrod", "gray", "green", "greenyellow", "grey", "honeydew", "hotpink", "indianred",
    "indigo", "ivory", "khaki", "lavender", "lavenderblush", "lawngreen", "lemonchiffon", "lightblue", "lightcoral",
    "lightcyan", "lightgoldenrodyellow", "lightgray", "lightgreen", "lightgrey", "lightpink", "lightsalmon",
    "lightseagreen", "lightskyblue", "lightslategray", "lightslategrey", "lightsteelblue", "lightyellow", "lime",
    "limegreen", "linen", "magenta", "maroon", "mediumaquamarine", "mediumblue", "mediumorchid", "mediumpurple",
    "mediumseagreen", "mediumslateblue", "mediumspringgreen", "mediumturquoise", "mediumvioletred", "midnightblue",
    "mintcream", "mistyrose", "moccasin", "navajowhite", "navy", "oldlace", "olive", "olivedrab", "orange",
    "orangered", "orchid", "palegoldenrod", "palegreen", "paleturquoise", "palevioletred", "papayawhip", "peachpuff",
    "peru", "pink", "plum", "powderblue", "purple", "rebeccapurple", "red", "rosybrown", "royalblue", "saddlebrown",
    "salmon", "sandybrown", "seagreen", "seashell", "sienna", "silver", "skyblue", "slateblue", "slategray",
    "slategrey", "snow", "springgreen", "steelblue", "tan", "teal", "thistle", "tomato", "transparent", "turquoise",
    "violet", "wheat", "white", "whitesmoke", "yellow", "yellowgreen",
};

std::string lower(std::string_view text) {
    std::string out;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        }
    }
    return out;
}

bool is_number(std::string_view s, bool allow_percent) {
    if (allow_percent && !s.empty() && s.back() == '%') {
        s.remove_suffix(1);
    }
    if (s.empty()) {
        return false;
    }
    bool dot = false;
    bool digit = false;
    for (char c : s) {
        if (c == '.') {
            if (dot) {
                return false;
            }
            dot = true;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            digit = true;
        } else {
            return false;
        }
    }
    return digit;
}

struct Point {
    double x;
    double y;
};

class SvgWriter {
   public:
    SvgWriter(const StabilizerCode &code, const RenderStyle &style) : code_(code), style_(style) {
        for (const auto &c : code.coords) {
            min_row_ = std::min(min_row_, c.row);
            max_row_ = std::max(max_row_, c.row);
            min_col_ = std::min(min_col_, c.col);
            max_col_ = std::max(max_col_, c.col);
        }
        center_ = {(min_col_ + max_col_) / 2.0, (min_row_ + max_row_) / 2.0};
    }

    std::string render(const ErrorChain *chain) {
        double cs = style_.cell_size;
        double width = (max_col_ - min_col_ + 2) * cs;
        double height = (max_row_ - min_row_ + 2) * cs;
        out_ << std::fixed << std::setprecision(1);
        out_ << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
        out_ << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\""
             << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
        write_styles();
        out_ << "<g class=\"generators\">\n";
        for (size_t g = 0; g < code_.generators.size(); g++) {
            write_generator(g);
        }
        out_ << "</g>\n<g class=\"qubits\">\n";
        for (size_t q = 0; q < code_.n; q++) {
            Point p = pixel(code_.coords[q]);
            out_ << "<circle class=\"qubit\" cx=\"" << p.x << "\" cy=\"" << p.y << "\" r=\"" << cs * 0.06 << "\"/>\n";
            if (style_.show_indices) {
                out_ << "<text class=\"index\" x=\"" << p.x + cs * 0.08 << "\" y=\"" << p.y - cs * 0.08 << "\">" << q
                     << "</text>\n";
            }
        }
        out_ << "</g>\n<g class=\"twists\">\n";
        for (const auto &g : code_.generators) {
            if (g.kind != GeneratorKind::kTwist) {
                continue;
            }
            auto support = g.op.support();
            auto y = std::find_if(support.begin(), support.end(), [&](size_t q) {
                return g.op.letter(q) == 'Y';
            });
            Point p = pixel(code_.coords[y == support.end() ? support.front() : *y]);
            out_ << "<circle class=\"twist-marker\" cx=\"" << p.x << "\" cy=\"" << p.y << "\" r=\"" << cs * 0.18
                 << "\"/>\n";
        }
        out_ << "</g>\n";
        if (chain) {
            out_ << "<g class=\"errors\">\n";
            for (size_t q : chain->error.support()) {
                Point p = pixel(code_.coords[q]);
                out_ << "<text class=\"error\" data-qubit=\"" << q << "\" x=\"" << p.x << "\" y=\"" << p.y << "\">"
                     << chain->error.letter(q) << "</text>\n";
            }
            out_ << "</g>\n";
        }
        out_ << "</svg>\n";
        return out_.str();
    }

   private:
    const StabilizerCode &code_;
    const RenderStyle &style_;
    std::ostringstream out_;
    int min_row_ = 0;
    int max_row_ = 0;
    int min_col_ = 0;
    int max_col_ = 0;
    Point center_;

    Point pixel(const Coord &c) const {
        return {(c.col - min_col_ + 1) * style_.cell_size, (c.row - min_row_ + 1) * style_.cell_size};
    }

    Point pixel(Point grid) const {
        return {(grid.x - min_col_ + 1) * style_.cell_size, (grid.y - min_row_ + 1) * style_.cell_size};
    }

    void write_styles() {
        double cs = style_.cell_size;
        out_ << "<style>\n";
        out_ << ".plaquette.z, .boundary.z { fill: " << style_.light_fill << "; }\n";
        out_ << ".plaquette.x, .boundary.x { fill: " << style_.dark_fill << "; }\n";
        out_ << ".boundary.mixed { fill: " << style_.dislocation_fill << "; }\n";
        out_ << ".dislocation { fill: " << style_.dislocation_fill << "; }\n";
        out_ << ".twist { fill: " << style_.twist_fill << "; }\n";
        out_ << "polygon { stroke: black; stroke-width: " << cs * 0.025 << "; }\n";
        out_ << ".qubit { fill: black; }\n";
        out_ << ".twist-marker { fill: none; stroke: black; stroke-width: " << cs * 0.04 << "; }\n";
        out_ << ".error { fill: " << style_.error_glyph_color << "; font-family: sans-serif; font-weight: bold; "
             << "font-size: " << cs * 0.5 << "px; text-anchor: middle; dominant-baseline: central; }\n";
        out_ << ".index { fill: #444444; font-family: sans-serif; font-size: " << cs * 0.22 << "px; }\n";
        out_ << "</style>\n";
    }

    // Corner points of generator g in grid units. Weight-1 and weight-2
    // generators sit on the boundary and are closed off by points pushed
    // outward, away from the patch centre.
    std::vector<Point> outline(const std::vector<size_t> &support) const {
        std::vector<Point> pts;
        for (size_t q : support) {
            pts.push_back({static_cast<double>(code_.coords[q].col), static_cast<double>(code_.coords[q].row)});
        }
        if (pts.size() == 1) {
            Point p = pts[0];
            double sx = p.x < center_.x ? -0.5 : 0.5;
            double sy = p.y < center_.y ? -0.5 : 0.5;
            return {p, {p.x + sx, p.y}, {p.x + sx, p.y + sy}, {p.x, p.y + sy}};
        }
        if (pts.size() == 2) {
            Point a = pts[0];
            Point b = pts[1];
            Point mid = {(a.x + b.x) / 2, (a.y + b.y) / 2};
            Point normal = {-(b.y - a.y), b.x - a.x};
            double len = std::hypot(normal.x, normal.y);
            normal = {normal.x / len, normal.y / len};
            if ((mid.x - center_.x) * normal.x + (mid.y - center_.y) * normal.y < 0) {
                normal = {-normal.x, -normal.y};
            }
            pts.push_back({mid.x + normal.x * 0.5, mid.y + normal.y * 0.5});
        }
        Point c{0, 0};
        for (const auto &p : pts) {
            c.x += p.x / pts.size();
            c.y += p.y / pts.size();
        }
        std::sort(pts.begin(), pts.end(), [&](const Point &a, const Point &b) {
            return std::atan2(a.y - c.y, a.x - c.x) < std::atan2(b.y - c.y, b.x - c.x);
        });
        return pts;
    }

    std::string css_class(const Generator &g) const {
        bool has_x = false;
        bool has_z = false;
        for (size_t q : g.op.support()) {
            char l = g.op.letter(q);
            has_x |= l != 'Z';
            has_z |= l != 'X';
        }
        std::string letter = has_x && has_z ? "mixed" : has_x ? "x" : "z";
        switch (g.kind) {
            case GeneratorKind::kZPlaquette:
                return "plaquette z";
            case GeneratorKind::kXPlaquette:
                return "plaquette x";
            case GeneratorKind::kDislocation:
                return "dislocation";
            case GeneratorKind::kTwist:
                return "twist";
            case GeneratorKind::kBoundary:
                return "boundary " + letter;
            case GeneratorKind::kOther:
                return "plaquette " + letter;
        }
        return "plaquette " + letter;
    }

    void write_generator(size_t index) {
        const Generator &g = code_.generators[index];
        auto support = g.op.support();
        if (support.empty()) {
            return;
        }
        out_ << "<polygon class=\"" << css_class(g) << "\" data-generator=\"" << index << "\" points=\"";
        bool first = true;
        for (const auto &p : outline(support)) {
            Point px = pixel(p);
            out_ << (first ? "" : " ") << px.x << "," << px.y;
            first = false;
        }
        out_ << "\"/>\n";
    }
};

}  // namespace

bool is_valid_css_color(std::string_view text) {
    std::string s = lower(text);
    if (s.empty()) {
        return false;
    }
    if (s[0] == '#') {
        size_t len = s.size() - 1;
        if (len != 3 && len != 4 && len != 6 && len != 8) {
            return false;
        }
        return std::all_of(s.begin() + 1, s.end(), [](char c) {
            return std::isxdigit(static_cast<unsigned char>(c));
        });
    }
    for (std::string_view fn : {"rgba(", "rgb("}) {
        if (s.rfind(fn, 0) == 0 && s.back() == ')') {
            std::string body = s.substr(fn.size(), s.size() - fn.size() - 1);
            std::vector<std::string> parts;
            std::stringstream ss(body);
            std::string part;
            while (std::getline(ss, part, ',')) {
                parts.push_back(part);
            }
            if (parts.size() != 3 && parts.size() != 4) {
                return false;
            }
            for (const auto &p : parts) {
                if (!is_number(p, true)) {
                    return false;
                }
            }
            return true;
        }
    }
    return std::find(std::begin(kNamedColors), std::end(kNamedColors), s) != std::end(kNamedColors);
}

void validate_style(const RenderStyle &style) {
    if (!(style.cell_size >= 8) || !std::isfinite(style.cell_size)) {
        throw std::invalid_argument("cell_size must be at least 8 pixels");
    }
    const std::pair<const char *, const std::string *> colors[] = {
        {"light_fill", &style.light_fill},
        {"dark_fill", &style.dark_fill},
        {"dislocation_fill", &style.dislocation_fill},
        {"twist_fill", &style.twist_fill},
        {"error_glyph_color", &style.error_glyph_color},
    };
    for (const auto &[name, value] : colors) {
        if (!is_valid_css_color(*value)) {
            throw std::invalid_argument(std::string(name) + ": '" + *value + "' is not a CSS color");
        }
    }
}

std::string render_svg(const StabilizerCode &code, const ErrorChain *chain, const RenderStyle &style) {
    validate_style(style);
    if (!code.has_coords()) {
        throw std::invalid_argument("cannot render a code without qubit coordinates");
    }
    if (chain && chain->error.num_qubits() != code.n) {
        throw std::invalid_argument("chain length does not match the code");
    }
    return SvgWriter(code, style).render(chain);
}

}  // namespace dislo
