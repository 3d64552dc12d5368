#include "docparse/reading_order.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <json.hpp>

#include "docparse/util.hpp"

namespace docparse {

RelationMatrix RelationMatrix::from_scores(std::vector<std::vector<double>> scores) {
    const int n = int(scores.size());
    if (n == 0) throw InvalidMatrixError("relation matrix must be at least 1x1");
    std::vector<double> flat(std::size_t(n) * n);
    for (int i = 0; i < n; ++i) {
        if (int(scores[i].size()) != n)
            throw InvalidMatrixError("relation matrix must be square");
        for (int j = 0; j < n; ++j) {
            const double v = scores[i][j];
            if (!std::isfinite(v) || v < 0.0 || v > 1.0)
                throw InvalidMatrixError("relation scores must lie in [0,1]");
            flat[std::size_t(i) * n + j] = v;
        }
    }
    for (int i = 0; i < n; ++i) {
        if (std::abs(flat[std::size_t(i) * n + i] - 0.5) > 1e-12)
            throw InvalidMatrixError("diagonal entries must equal 0.5");
        for (int j = i + 1; j < n; ++j) {
            const double sum = flat[std::size_t(i) * n + j] + flat[std::size_t(j) * n + i];
            if (std::abs(sum - 1.0) > 1e-9)
                throw InvalidMatrixError("complement consistency violated: s(i,j)+s(j,i) != 1");
        }
    }
    return RelationMatrix(n, std::move(flat));
}

RelationMatrix geometric_relation_scores(std::span<const LayoutElement> elements,
                                         double column_overlap_threshold) {
    const int n = int(elements.size());
    if (n == 0) throw EmptyPageError();

    // Union-find over transitive x-overlap groups.
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    const auto find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (x_overlap_ratio(elements[i].bbox, elements[j].bbox) >= column_overlap_threshold)
                parent[find(i)] = find(j);

    // Column key: leftmost x0 among members, then stable root index.
    std::vector<double> column_x0(n, 0.0);
    for (int i = 0; i < n; ++i) {
        const int r = find(i);
        if (r == i)
            column_x0[r] = elements[i].bbox.x0;
    }
    for (int i = 0; i < n; ++i) {
        const int r = find(i);
        column_x0[r] = std::min(column_x0[r], elements[i].bbox.x0);
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const int ra = find(a);
        const int rb = find(b);
        if (ra != rb) {
            if (column_x0[ra] != column_x0[rb]) return column_x0[ra] < column_x0[rb];
            return ra < rb;
        }
        const auto& ba = elements[a].bbox;
        const auto& bb = elements[b].bbox;
        if (ba.y0 != bb.y0) return ba.y0 < bb.y0;
        if (ba.x0 != bb.x0) return ba.x0 < bb.x0;
        return elements[a].id < elements[b].id;
    });

    std::vector<int> rank(n);
    for (int pos = 0; pos < n; ++pos) rank[order[pos]] = pos;

    std::vector<std::vector<double>> s(n, std::vector<double>(n, 0.5));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) s[i][j] = rank[i] < rank[j] ? 0.95 : 0.05;
    return RelationMatrix::from_scores(std::move(s));
}

OrderResult decode_reading_order(const RelationMatrix& m,
                                 std::span<const LayoutElement> elements) {
    const int n = m.n();
    if (n != int(elements.size()))
        throw DimensionMismatchError("relation matrix size " + std::to_string(n) +
                                     " does not match element count " +
                                     std::to_string(elements.size()));
    OrderResult result;
    result.win_counts.assign(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && m.at(i, j) > 0.5) ++result.win_counts[i];

    result.permutation.resize(n);
    std::iota(result.permutation.begin(), result.permutation.end(), 0);
    std::sort(result.permutation.begin(), result.permutation.end(), [&](int a, int b) {
        if (result.win_counts[a] != result.win_counts[b])
            return result.win_counts[a] > result.win_counts[b];
        const auto& ba = elements[a].bbox;
        const auto& bb = elements[b].bbox;
        if (ba.y0 != bb.y0) return ba.y0 < bb.y0;
        if (ba.x0 != bb.x0) return ba.x0 < bb.x0;
        return elements[a].id < elements[b].id;
    });
    return result;
}

bool is_consistent_tournament(const RelationMatrix& m) {
    const int n = m.n();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && m.at(i, j) == 0.5) return false;
    const auto precedes = [&](int i, int j) { return m.at(i, j) > 0.5; };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j || !precedes(i, j)) continue;
            for (int k = 0; k < n; ++k)
                if (k != i && k != j && precedes(j, k) && !precedes(i, k)) return false;
        }
    return true;
}

RelationMatrix parse_relation_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidMatrixError(std::string("relation fixture is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("s") || !doc["s"].is_array())
        throw InvalidMatrixError("relation fixture must be {\"n\":int,\"s\":[[...]]}");
    const int n = doc["n"].get<int>();
    if (int(doc["s"].size()) != n)
        throw InvalidMatrixError("relation fixture: \"s\" row count does not match \"n\"");
    std::vector<std::vector<double>> s;
    for (const auto& row : doc["s"]) {
        if (!row.is_array() || int(row.size()) != n)
            throw InvalidMatrixError("relation fixture: ragged score matrix");
        std::vector<double> r;
        for (const auto& v : row) {
            if (!v.is_number()) throw InvalidMatrixError("relation fixture: non-numeric score");
            r.push_back(v.get<double>());
        }
        s.push_back(std::move(r));
    }
    return RelationMatrix::from_scores(std::move(s));
}

RelationMatrix load_relation_matrix(const std::filesystem::path& path) {
    return parse_relation_json(read_file(path));
}

}  // namespace docparse
