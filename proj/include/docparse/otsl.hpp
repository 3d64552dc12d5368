#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "docparse/errors.hpp"

namespace docparse {

enum class OtslKind { FCel, ECel, LCel, UCel, XCel, NewLine };

std::string_view otsl_kind_name(OtslKind k);

// One token of the table structure stream. Only FCel carries text.
struct OtslToken {
    OtslKind kind = OtslKind::ECel;
    std::string text;

    static OtslToken fcel(std::string text) { return {OtslKind::FCel, std::move(text)}; }
    static OtslToken ecel() { return {OtslKind::ECel, ""}; }
    static OtslToken lcel() { return {OtslKind::LCel, ""}; }
    static OtslToken ucel() { return {OtslKind::UCel, ""}; }
    static OtslToken xcel() { return {OtslKind::XCel, ""}; }
    static OtslToken newline() { return {OtslKind::NewLine, ""}; }

    bool operator==(const OtslToken&) const = default;
};

// Validated rectangular table grid. Merge regions are solid rectangles;
// every covered cell resolves to the FCel/ECel anchor that owns it.
class OtslGrid {
  public:
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    OtslKind kind(int r, int c) const { return kinds_[idx(r, c)]; }
    // Anchor text; empty for ECel anchors and for covered cells.
    const std::string& text(int r, int c) const { return texts_[idx(r, c)]; }
    // (row, col) of the anchor owning this cell.
    std::pair<int, int> origin(int r, int c) const {
        const int o = origins_[idx(r, c)];
        return {o / cols_, o % cols_};
    }
    bool is_anchor(int r, int c) const { return origins_[idx(r, c)] == idx(r, c); }

    struct Span {
        int row_span = 1;
        int col_span = 1;
    };
    // Extent of the merge region anchored at (r, c); only valid at anchors.
    Span span(int r, int c) const;

    bool operator==(const OtslGrid& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && kinds_ == other.kinds_ &&
               texts_ == other.texts_;
    }

  private:
    friend OtslGrid parse_otsl(const std::vector<OtslToken>& stream);
    int idx(int r, int c) const { return r * cols_ + c; }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<OtslKind> kinds_;
    std::vector<std::string> texts_;
    std::vector<int> origins_;  // flat index of owning anchor
};

// Canonical single-table HTML produced by grid_to_html. Wrapping type so
// signatures distinguish canonical output from arbitrary HTML input.
struct TableHtml {
    std::string html;
    bool operator==(const TableHtml&) const = default;
};

// Splits on NewLine into rows, validates rectangularity and merge legality,
// and resolves the origin map. FCel tokens with empty text normalize to
// ECel so the HTML round trip stays exact.
OtslGrid parse_otsl(const std::vector<OtslToken>& stream);

// One td per merge-region anchor with rowspan/colspan (rowspan first, only
// when > 1); text HTML-escaped; no thead/tbody wrappers.
TableHtml grid_to_html(const OtslGrid& grid);

// Inverse of grid_to_html on its image. Accepts thead/tbody/tfoot wrappers
// and th cells on input, which normalize away.
OtslGrid html_to_grid(const std::string& html);

// Pipe table, first row as header. Merged cells are flattened: anchor text
// in the anchor position, empty strings in covered positions.
std::string grid_to_markdown(const OtslGrid& grid);

// Textual serialization used by fixtures and the recognizer wire format:
// tokens separated by single spaces, FCel text carried as fcel{...} with
// backslash escaping for "}" and "\".
std::string otsl_tokens_to_text(const std::vector<OtslToken>& tokens);
std::vector<OtslToken> otsl_text_to_tokens(const std::string& text);
std::vector<OtslToken> grid_to_otsl_tokens(const OtslGrid& grid);

}  // namespace docparse
