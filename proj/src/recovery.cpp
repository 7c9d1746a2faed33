#include "sepmat/recovery.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

namespace sepmat {

std::int64_t hull_target(int n, int k) {
    if (k < 3 || k > n)
        throw std::invalid_argument("hull_target: need 3 <= k <= n");
    return static_cast<std::int64_t>(n - k) * (n - 1);
}

std::int64_t cycle_score(const SeparatingMatrix& matrix,
                         std::span<const int> order) {
    const int n = matrix.size();
    if (order.size() < 3)
        throw std::invalid_argument("cycle_score: need at least 3 indices");
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (int idx : order) {
        if (idx < 0 || idx >= n)
            throw std::invalid_argument("cycle_score: index out of range");
        if (seen[static_cast<size_t>(idx)])
            throw std::invalid_argument("cycle_score: duplicate index " +
                                        std::to_string(idx));
        seen[static_cast<size_t>(idx)] = 1;
    }
    std::int64_t sum = 0;
    for (size_t t = 0; t < order.size(); ++t)
        sum += matrix.entry(order[t], order[(t + 1) % order.size()]);
    return sum;
}

CycleScore min_cycle(const SeparatingMatrix& matrix, std::vector<int> subset) {
    std::sort(subset.begin(), subset.end());
    const size_t k = subset.size();
    if (k < 3) throw std::invalid_argument("min_cycle: need k >= 3");

    // Fix subset[0] first and keep only one direction per cycle
    // (second element < last element): (k-1)!/2 candidates, generated in
    // lexicographic order so the first strict minimum is the tie-break.
    std::vector<int> rest(subset.begin() + 1, subset.end());
    std::vector<int> order(k);
    order[0] = subset[0];

    CycleScore best;
    best.subset = subset;
    bool have = false;
    do {
        if (rest.front() > rest.back()) continue;
        std::copy(rest.begin(), rest.end(), order.begin() + 1);
        const std::int64_t s = cycle_score(matrix, order);
        if (!have || s < best.score) {
            best.order = order;
            best.score = s;
            have = true;
        }
    } while (std::next_permutation(rest.begin(), rest.end()));
    return best;
}

std::optional<std::array<int, 3>> detect_hull_size3(
    const SeparatingMatrix& matrix) {
    const int n = matrix.size();
    if (n < 4) throw std::invalid_argument("detect_hull_size3: need n >= 4");
    const std::int64_t target = hull_target(n, 3);

    std::optional<std::array<int, 3>> found;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                const std::int64_t sum = matrix.entry(i, j) +
                                         matrix.entry(i, k) +
                                         matrix.entry(j, k);
                if (sum != target) continue;
                if (found) {
                    std::ostringstream msg;
                    msg << "two distinct triples attain the size-3 target "
                        << target << ": (" << (*found)[0] << ", "
                        << (*found)[1] << ", " << (*found)[2] << ") and ("
                        << i << ", " << j << ", " << k
                        << "); no configuration produces such a matrix";
                    throw InconsistentMatrixError(msg.str());
                }
                found = std::array<int, 3>{i, j, k};
            }
    return found;
}

std::string to_string(CandidateStatus status) {
    switch (status) {
        case CandidateStatus::kConfirmedSize3: return "confirmed-size-3";
        case CandidateStatus::kCandidate: return "candidate";
        case CandidateStatus::kTrueHull: return "true-hull";
        case CandidateStatus::kFake: return "fake";
        case CandidateStatus::kFilteredOut: return "filtered-out";
    }
    return "unknown";
}

RecoveryResult general_hull_search(const SeparatingMatrix& matrix, int max_k) {
    const int n = matrix.size();
    if (max_k <= 0) max_k = n;
    if (max_k > n) max_k = n;

    RecoveryResult result;
    result.n = n;
    for (int k = 3; k <= max_k; ++k) {
        const std::int64_t target = hull_target(n, k);
        // Lexicographic k-subset enumeration.
        std::vector<int> subset(static_cast<size_t>(k));
        for (int i = 0; i < k; ++i) subset[static_cast<size_t>(i)] = i;
        while (true) {
            CycleScore cs = min_cycle(matrix, subset);
            if (cs.score == target) {
                HullCandidate cand;
                cand.cycle = std::move(cs);
                cand.k = k;
                cand.status = CandidateStatus::kCandidate;
                result.candidates.push_back(std::move(cand));
            }
            int i = k - 1;
            while (i >= 0 && subset[static_cast<size_t>(i)] == n - k + i) --i;
            if (i < 0) break;
            ++subset[static_cast<size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                subset[static_cast<size_t>(j)] =
                    subset[static_cast<size_t>(i)] + j - i;
        }
        if (!result.candidates.empty()) {
            result.k = k;
            return result;
        }
    }
    throw SearchExhaustedError(
        "no subset of any size up to " + std::to_string(max_k) +
        " attains its target cycle sum; the matrix does not come from a "
        "configuration");
}

bool row_sum_filter(const SeparatingMatrix& matrix,
                    const HullCandidate& candidate) {
    const int n = matrix.size();
    const std::vector<std::int64_t> sums = row_sums(matrix);
    std::vector<char> in_subset(static_cast<size_t>(n), 0);
    for (int idx : candidate.vertex_set())
        in_subset[static_cast<size_t>(idx)] = 1;

    bool have_outside = false;
    std::int64_t min_inside = 0, max_outside = 0;
    bool have_inside = false;
    for (int i = 0; i < n; ++i) {
        if (in_subset[static_cast<size_t>(i)]) {
            if (!have_inside || sums[static_cast<size_t>(i)] < min_inside)
                min_inside = sums[static_cast<size_t>(i)];
            have_inside = true;
        } else {
            if (!have_outside || sums[static_cast<size_t>(i)] > max_outside)
                max_outside = sums[static_cast<size_t>(i)];
            have_outside = true;
        }
    }
    if (!have_outside) return true;
    return min_inside >= max_outside;
}

bool combined_filter(const SeparatingMatrix& matrix,
                     const HullCandidate& candidate) {
    const int n = matrix.size();
    const std::vector<std::int64_t> sums = row_sums(matrix);
    const std::vector<int>& subset = candidate.vertex_set();
    const int k = static_cast<int>(subset.size());

    std::int64_t min_inside = sums[static_cast<size_t>(subset[0])];
    for (int idx : subset)
        min_inside = std::min(min_inside, sums[static_cast<size_t>(idx)]);
    int m = 0;
    for (int idx : subset)
        if (sums[static_cast<size_t>(idx)] == min_inside) ++m;

    // Rank all rows by descending sum, ties by ascending index, and ask
    // whether every candidate row lands in the top k+m.
    std::vector<int> ranked(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) ranked[static_cast<size_t>(i)] = i;
    std::sort(ranked.begin(), ranked.end(), [&](int a, int b) {
        if (sums[static_cast<size_t>(a)] != sums[static_cast<size_t>(b)])
            return sums[static_cast<size_t>(a)] > sums[static_cast<size_t>(b)];
        return a < b;
    });
    std::vector<int> rank_of(static_cast<size_t>(n));
    for (int r = 0; r < n; ++r)
        rank_of[static_cast<size_t>(ranked[static_cast<size_t>(r)])] = r;

    const int cutoff = std::min(n, k + m);
    for (int idx : subset)
        if (rank_of[static_cast<size_t>(idx)] >= cutoff) return false;
    return true;
}

void apply_filters(const SeparatingMatrix& matrix, RecoveryResult& result) {
    for (HullCandidate& cand : result.candidates) {
        cand.row_sum_pass = row_sum_filter(matrix, cand);
        if (!*cand.row_sum_pass) {
            cand.combined_pass = combined_filter(matrix, cand);
            if (!*cand.combined_pass &&
                cand.status == CandidateStatus::kCandidate)
                cand.status = CandidateStatus::kFilteredOut;
        }
    }
}

void classify_against_oracle(const Configuration& config,
                             RecoveryResult& result) {
    std::vector<int> hull = convex_hull(config).indices;
    std::sort(hull.begin(), hull.end());
    for (HullCandidate& cand : result.candidates)
        cand.status = (cand.vertex_set() == hull) ? CandidateStatus::kTrueHull
                                                  : CandidateStatus::kFake;
}

namespace {

void append_indices(std::ostream& out, const std::vector<int>& v) {
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out << ' ';
        out << v[i];
    }
}

} // namespace

std::string to_text(const RecoveryResult& result) {
    std::ostringstream out;
    out << "size " << result.k << ", " << result.candidates.size()
        << " candidate(s)\n";
    for (const HullCandidate& c : result.candidates) {
        out << "size " << c.k << ", vertices ";
        append_indices(out, c.cycle.subset);
        out << ", order ";
        append_indices(out, c.cycle.order);
        out << ", score " << c.cycle.score << ", status "
            << to_string(c.status);
        if (c.row_sum_pass)
            out << ", row-sum " << (*c.row_sum_pass ? "pass" : "fail");
        if (c.combined_pass)
            out << ", combined " << (*c.combined_pass ? "pass" : "fail");
        out << '\n';
    }
    return out.str();
}

std::string to_json(const RecoveryResult& result) {
    nlohmann::json j;
    j["n"] = result.n;
    j["k"] = result.k;
    j["candidates"] = nlohmann::json::array();
    for (const HullCandidate& c : result.candidates) {
        nlohmann::json jc;
        jc["indices"] = c.cycle.subset;
        jc["order"] = c.cycle.order;
        jc["score"] = c.cycle.score;
        jc["status"] = to_string(c.status);
        jc["filters"]["row_sum"] =
            c.row_sum_pass ? nlohmann::json(*c.row_sum_pass)
                           : nlohmann::json(nullptr);
        jc["filters"]["combined"] =
            c.combined_pass ? nlohmann::json(*c.combined_pass)
                            : nlohmann::json(nullptr);
        j["candidates"].push_back(std::move(jc));
    }
    return j.dump(2) + "\n";
}

} // namespace sepmat
