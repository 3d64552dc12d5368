#pragma once

#include <filesystem>
#include <span>
#include <vector>

#include "docparse/domain.hpp"

namespace docparse {

// Pairwise precedence scores over one page's elements. s(i,j) is the score
// that element i precedes element j. Construction enforces: diagonal fixed
// at 0.5, all entries in [0,1], and s(i,j) + s(j,i) = 1 within 1e-9.
class RelationMatrix {
  public:
    static RelationMatrix from_scores(std::vector<std::vector<double>> scores);

    int n() const { return n_; }
    double at(int i, int j) const { return scores_[std::size_t(i) * n_ + j]; }

  private:
    RelationMatrix(int n, std::vector<double> flat) : n_(n), scores_(std::move(flat)) {}
    int n_ = 0;
    std::vector<double> scores_;  // row-major n*n
};

struct OrderResult {
    std::vector<int> permutation;  // element indices in reading order
    std::vector<int> win_counts;   // per element index
};

// Model-free precedence backend: elements are grouped into columns by
// transitive x-overlap, columns read left to right, each column top to
// bottom. Winning pairs score 0.95, losing pairs 0.05.
RelationMatrix geometric_relation_scores(std::span<const LayoutElement> elements,
                                         double column_overlap_threshold = 0.5);

// Win-accumulation decode: rank elements by how many pairwise contests they
// win (s > 0.5), ties broken by (y0, x0, id) ascending. Total and
// deterministic for any matrix, including cyclic ones.
OrderResult decode_reading_order(const RelationMatrix& m,
                                 std::span<const LayoutElement> elements);

// True iff thresholding the matrix at 0.5 yields a strict total order:
// no off-diagonal tie and a transitive "precedes" relation.
bool is_consistent_tournament(const RelationMatrix& m);

// Fixture backend: {"n":int,"s":[[...]]} validated against the matrix
// invariants on load.
RelationMatrix load_relation_matrix(const std::filesystem::path& path);
RelationMatrix parse_relation_json(const std::string& text);

}  // namespace docparse
