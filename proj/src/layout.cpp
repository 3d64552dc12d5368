#include "docparse/layout.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "docparse/util.hpp"

namespace docparse {

namespace {

using nlohmann::json;

double require_number(const json& obj, const char* field, int page) {
    if (!obj.contains(field) || !obj[field].is_number())
        throw SchemaError(field, page, "missing or non-numeric");
    return obj[field].get<double>();
}

LayoutElement parse_element(const json& e, int page_index, double page_w, double page_h, int id) {
    if (!e.is_object()) throw SchemaError("elements", page_index, "element is not an object");
    if (!e.contains("bbox") || !e["bbox"].is_array() || e["bbox"].size() != 4)
        throw SchemaError("bbox", page_index, "expected [x0,y0,x1,y1]");
    double coords[4];
    for (int i = 0; i < 4; ++i) {
        if (!e["bbox"][i].is_number())
            throw SchemaError("bbox", page_index, "coordinate is not a number");
        coords[i] = e["bbox"][i].get<double>();
        if (!std::isfinite(coords[i]))
            throw SchemaError("bbox", page_index, "coordinate is not finite");
    }
    // Clamp to the page rectangle before validating; boxes that collapse
    // under clamping signal detector corruption.
    const double x0 = std::clamp(coords[0], 0.0, page_w);
    const double y0 = std::clamp(coords[1], 0.0, page_h);
    const double x1 = std::clamp(coords[2], 0.0, page_w);
    const double y1 = std::clamp(coords[3], 0.0, page_h);
    if (!(x0 < x1) || !(y0 < y1))
        throw SchemaError("bbox", page_index, "degenerate box after clamping to page bounds");

    if (!e.contains("category") || !e["category"].is_string())
        throw SchemaError("category", page_index, "missing or non-string");
    Category category;
    try {
        category = parse_category(e["category"].get<std::string>());
    } catch (const UnknownCategoryError& err) {
        throw SchemaError("category", page_index, err.what());
    }

    const double score = require_number(e, "score", page_index);
    if (!(score >= 0.0 && score <= 1.0))
        throw SchemaError("score", page_index, "score outside [0,1]");

    return LayoutElement(id, page_index, BBox(x0, y0, x1, y1), category, score);
}

}  // namespace

std::vector<PageLayout> parse_layout_json(const std::string& text, const std::string& origin) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw SchemaError("<document>", -1, origin + ": " + e.what());
    }
    if (!doc.is_object() || !doc.contains("pages") || !doc["pages"].is_array())
        throw SchemaError("pages", -1, "top-level \"pages\" array required");

    std::vector<PageLayout> pages;
    for (const auto& p : doc["pages"]) {
        if (!p.is_object()) throw SchemaError("pages", int(pages.size()), "page is not an object");
        PageLayout page;
        if (!p.contains("page_index") || !p["page_index"].is_number_integer())
            throw SchemaError("page_index", int(pages.size()), "missing or non-integer");
        page.page_index = p["page_index"].get<int>();
        page.width = require_number(p, "width", page.page_index);
        page.height = require_number(p, "height", page.page_index);
        if (!(page.width > 0) || !(page.height > 0))
            throw SchemaError("width", page.page_index, "page dimensions must be positive");
        if (!p.contains("elements") || !p["elements"].is_array())
            throw SchemaError("elements", page.page_index, "missing \"elements\" array");
        int id = 0;
        for (const auto& e : p["elements"])
            page.elements.push_back(
                parse_element(e, page.page_index, page.width, page.height, id++));
        pages.push_back(std::move(page));
    }
    std::stable_sort(pages.begin(), pages.end(),
                     [](const PageLayout& a, const PageLayout& b) {
                         return a.page_index < b.page_index;
                     });
    return pages;
}

std::vector<PageLayout> load_layout(const std::filesystem::path& path) {
    return parse_layout_json(read_file(path), path.string());
}

PageLayout filter_proposals(const PageLayout& layout, const ThresholdConfig& cfg) {
    PageLayout out;
    out.page_index = layout.page_index;
    out.width = layout.width;
    out.height = layout.height;
    int id = 0;
    for (const auto& e : layout.elements) {
        if (e.score >= cfg.threshold_for(e.category))
            out.elements.emplace_back(id++, e.page_index, e.bbox, e.category, e.score);
    }
    return out;
}

std::vector<CropPlan> plan_crops(const PageLayout& layout, double padding) {
    std::vector<CropPlan> crops;
    crops.reserve(layout.elements.size());
    for (const auto& e : layout.elements) {
        const double x0 = std::max(0.0, e.bbox.x0 - padding);
        const double y0 = std::max(0.0, e.bbox.y0 - padding);
        const double x1 = std::min(layout.width, e.bbox.x1 + padding);
        const double y1 = std::min(layout.height, e.bbox.y1 + padding);
        crops.push_back({e.id, BBox(x0, y0, x1, y1)});
    }
    return crops;
}

}  // namespace docparse
