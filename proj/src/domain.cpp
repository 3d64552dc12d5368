#include "docparse/domain.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace docparse {

BBox::BBox(double x0, double y0, double x1, double y1) : x0(x0), y0(y0), x1(x1), y1(y1) {
    if (!std::isfinite(x0) || !std::isfinite(y0) || !std::isfinite(x1) || !std::isfinite(y1))
        throw InvalidBoxError("box coordinates must be finite");
    if (x0 < 0 || y0 < 0) throw InvalidBoxError("box coordinates must be non-negative");
    if (!(x0 < x1) || !(y0 < y1))
        throw InvalidBoxError("degenerate box: require x0 < x1 and y0 < y1");
}

namespace {

struct CategoryName {
    Category category;
    std::string_view name;
};

constexpr std::array<CategoryName, kCategoryCount> kCategoryNames = {{
    {Category::Text, "text"},
    {Category::Title, "title"},
    {Category::Table, "table"},
    {Category::Formula, "formula"},
    {Category::Chart, "chart"},
    {Category::Figure, "figure"},
    {Category::Header, "header"},
    {Category::Footer, "footer"},
    {Category::FigureCaption, "figure_caption"},
    {Category::TableCaption, "table_caption"},
    {Category::Footnote, "footnote"},
}};

}  // namespace

std::string_view category_name(Category c) {
    for (const auto& e : kCategoryNames)
        if (e.category == c) return e.name;
    throw UnknownCategoryError("<invalid enum value>");
}

Category parse_category(std::string_view name) {
    for (const auto& e : kCategoryNames)
        if (e.name == name) return e.category;
    throw UnknownCategoryError(std::string(name));
}

LayoutElement::LayoutElement(int id, int page_index, BBox bbox, Category category, double score)
    : id(id), page_index(page_index), bbox(bbox), category(category), score(score) {
    if (!(score >= 0.0 && score <= 1.0))
        throw InvalidScoreError("element score must lie in [0,1]");
}

double iou(const BBox& a, const BBox& b) {
    const double ix = std::max(0.0, std::min(a.x1, b.x1) - std::max(a.x0, b.x0));
    const double iy = std::max(0.0, std::min(a.y1, b.y1) - std::max(a.y0, b.y0));
    const double inter = ix * iy;
    if (inter <= 0.0) return 0.0;
    return inter / (a.area() + b.area() - inter);
}

double x_overlap_ratio(const BBox& a, const BBox& b) {
    const double overlap = std::min(a.x1, b.x1) - std::max(a.x0, b.x0);
    if (overlap <= 0.0) return 0.0;
    return overlap / std::min(a.width(), b.width());
}

}  // namespace docparse
