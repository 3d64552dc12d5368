#pragma once

#include <string>
#include <string_view>

#include "docparse/errors.hpp"

namespace docparse {

// Axis-aligned box in pixel coordinates, origin top-left. Degenerate or
// negative boxes are rejected at construction.
struct BBox {
    double x0 = 0;
    double y0 = 0;
    double x1 = 0;
    double y1 = 0;

    BBox() = default;
    BBox(double x0, double y0, double x1, double y1);

    double width() const { return x1 - x0; }
    double height() const { return y1 - y0; }
    double area() const { return width() * height(); }

    bool operator==(const BBox&) const = default;
};

enum class Category {
    Text,
    Title,
    Table,
    Formula,
    Chart,
    Figure,
    Header,
    Footer,
    FigureCaption,
    TableCaption,
    Footnote,
};

inline constexpr int kCategoryCount = 11;

// Canonical lowercase name, used verbatim in fixture files and output JSON.
std::string_view category_name(Category c);

// Inverse of category_name. Throws UnknownCategoryError for non-members.
Category parse_category(std::string_view name);

// One detected region of a page.
struct LayoutElement {
    int id = 0;          // dense, unique within its page
    int page_index = 0;  // 0-based
    BBox bbox;
    Category category = Category::Text;
    double score = 0.0;  // detector confidence in [0,1]

    LayoutElement() = default;
    LayoutElement(int id, int page_index, BBox bbox, Category category, double score);
};

// Intersection area over union area; 0 for disjoint boxes.
double iou(const BBox& a, const BBox& b);

// Length of the x-interval intersection divided by the shorter x-extent.
double x_overlap_ratio(const BBox& a, const BBox& b);

}  // namespace docparse
