#ifndef SEPMAT_RECOVERY_HPP
#define SEPMAT_RECOVERY_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sepmat/matrix.hpp"

namespace sepmat {

// The cycle sum attained by the hull of size k in an n-point configuration:
// (n-k)(n-1) = n^2 - (k+1)n + k. For k = 3 this is n^2 - 4n + 3.
std::int64_t hull_target(int n, int k);

// Sum of matrix entries over consecutive pairs of the order, wrap-around
// edge included. Throws std::invalid_argument on duplicate or bad indices.
std::int64_t cycle_score(const SeparatingMatrix& matrix,
                         std::span<const int> order);

// A vertex subset with the minimal Hamiltonian cycle over it.
struct CycleScore {
    std::vector<int> subset; // ascending
    std::vector<int> order;  // the minimizing cycle, canonical form
    std::int64_t score = 0;
};

// Exhaustive minimum over the (k-1)!/2 distinct Hamiltonian cycles on the
// subset (first element fixed, direction canonicalized by second < last).
// Ties resolve to the lexicographically smallest canonical order.
CycleScore min_cycle(const SeparatingMatrix& matrix, std::vector<int> subset);

// The unique triple attaining n^2 - 4n + 3, i.e. the hull when its size is
// 3; nullopt means the hull is larger. Requires n >= 4. Two distinct
// attaining triples cannot happen for a matrix of a configuration and
// raise InconsistentMatrixError.
std::optional<std::array<int, 3>> detect_hull_size3(
    const SeparatingMatrix& matrix);

enum class CandidateStatus {
    kConfirmedSize3, // found by the size-3 detector
    kCandidate,      // attains the target, not yet classified
    kTrueHull,       // oracle-verified as the hull
    kFake,           // oracle-verified as not the hull
    kFilteredOut,    // rejected by the filters (matrix-only recovery)
};

std::string to_string(CandidateStatus status);

struct HullCandidate {
    CycleScore cycle;
    int k = 0;
    CandidateStatus status = CandidateStatus::kCandidate;
    // Filter outcomes, set once the filters run.
    std::optional<bool> row_sum_pass;
    std::optional<bool> combined_pass;

    const std::vector<int>& vertex_set() const { return cycle.subset; }
};

struct RecoveryResult {
    int n = 0;
    int k = 0; // smallest subset size admitting a candidate
    std::vector<HullCandidate> candidates;
};

// For k = 3, 4, ...: enumerate all k-subsets in lexicographic order and
// collect every subset whose minimal cycle attains hull_target(n, k).
// Stops at the smallest k with any hit and returns all hits, so fakes are
// visible. Throws SearchExhaustedError if no k <= max_k yields a candidate
// (impossible for matrices of configurations). max_k = 0 means n.
RecoveryResult general_hull_search(const SeparatingMatrix& matrix,
                                   int max_k = 0);

// Heuristic: hull rows should dominate. Pass iff the minimum row sum over
// the candidate's vertices is >= the maximum row sum over the complement
// (vacuously true when the candidate covers all points).
bool row_sum_filter(const SeparatingMatrix& matrix,
                    const HullCandidate& candidate);

// Fallback for candidates failing the row-sum filter. With m = number of
// candidate rows tied at the candidate's minimum row sum, pass iff all k
// candidate rows rank among the top k+m rows when rows sort by descending
// sum (ties by ascending index).
bool combined_filter(const SeparatingMatrix& matrix,
                     const HullCandidate& candidate);

// Runs row_sum_filter, then combined_filter on row-sum rejects; records
// both outcomes on each candidate and downgrades pipeline rejects to
// kFilteredOut. A candidate survives if either filter accepts it.
void apply_filters(const SeparatingMatrix& matrix, RecoveryResult& result);

// Experiment-side resolution: marks each candidate kTrueHull or kFake by
// comparing vertex sets with the geometric hull. Filter outcomes are kept.
void classify_against_oracle(const Configuration& config,
                             RecoveryResult& result);

// Line-oriented report and the machine-readable structure (keys: n, k,
// candidates[] with indices, order, score, status, filters).
std::string to_text(const RecoveryResult& result);
std::string to_json(const RecoveryResult& result);

} // namespace sepmat

#endif
