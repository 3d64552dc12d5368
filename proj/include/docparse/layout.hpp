#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "docparse/domain.hpp"

namespace docparse {

// Detector output for one page after ingestion.
struct PageLayout {
    int page_index = 0;
    double width = 0;   // pixels, > 0
    double height = 0;  // pixels, > 0
    std::vector<LayoutElement> elements;
};

// Per-class confidence thresholds. Categories without an entry fall back to
// default_threshold. Comparison is inclusive: score >= threshold keeps.
struct ThresholdConfig {
    std::map<Category, double> per_category;
    double default_threshold = 0.5;

    double threshold_for(Category c) const {
        auto it = per_category.find(c);
        return it == per_category.end() ? default_threshold : it->second;
    }
};

// Planned recognition crop for one element.
struct CropPlan {
    int element_id = 0;
    BBox crop;
};

// Loads a layout fixture file. Pages come back sorted by page_index with
// element ids re-assigned densely per page; element boxes are clamped to
// the page rectangle.
std::vector<PageLayout> load_layout(const std::filesystem::path& path);

// Same, from already-read JSON text (path only used for error messages).
std::vector<PageLayout> parse_layout_json(const std::string& text, const std::string& origin);

// Keeps exactly the elements whose score passes their category threshold,
// preserving relative order; ids re-assigned densely.
PageLayout filter_proposals(const PageLayout& layout, const ThresholdConfig& cfg);

// Expands each element box by `padding` pixels and clamps to page bounds.
// Figure elements get a crop too (used for the saved image), they are just
// never submitted for recognition.
std::vector<CropPlan> plan_crops(const PageLayout& layout, double padding);

}  // namespace docparse
