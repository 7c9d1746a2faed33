#ifndef SEPMAT_MATRIX_HPP
#define SEPMAT_MATRIX_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "sepmat/geometry.hpp"

namespace sepmat {

// Square integer matrix of order n >= 3. A matrix computed from a
// Configuration is symmetric with zero diagonal and entries bounded by
// C(n-2, 2); a matrix parsed from text is raw input and may violate any
// of that -- validate() is the screen.
class SeparatingMatrix {
public:
    explicit SeparatingMatrix(int n);

    int size() const { return n_; }
    std::int64_t entry(int i, int j) const {
        return entries_[static_cast<size_t>(i) * static_cast<size_t>(n_) +
                        static_cast<size_t>(j)];
    }
    void set_entry(int i, int j, std::int64_t value) {
        entries_[static_cast<size_t>(i) * static_cast<size_t>(n_) +
                 static_cast<size_t>(j)] = value;
    }
    // Sets (i,j) and (j,i) at once.
    void set_pair(int i, int j, std::int64_t value) {
        set_entry(i, j, value);
        set_entry(j, i, value);
    }

    friend bool operator==(const SeparatingMatrix&,
                           const SeparatingMatrix&) = default;

private:
    int n_;
    std::vector<std::int64_t> entries_;
};

// Entry (i,j) = separating_count(config, i, j). O(n^4) orientation tests;
// reference implementation, correctness over speed.
SeparatingMatrix compute_matrix(const Configuration& config);

// Largest admissible entry, C(n-2, 2).
std::int64_t max_entry_bound(int n);

// The parity partition: i and j share a class iff entry(i,j) == n-1 (mod 2).
// At most two classes when the matrix comes from a configuration.
struct OrchardPartition {
    std::vector<int> class_of; // values 0 or 1; class 0 contains index 0

    int size_of(int cls) const {
        int c = 0;
        for (int v : class_of) c += (v == cls);
        return c;
    }
};

// Throws std::invalid_argument if the matrix is not symmetric with zero
// diagonal, OrchardError if the parity relation is not an equivalence
// (the matrix then cannot come from a configuration).
OrchardPartition orchard_partition(const SeparatingMatrix& matrix);

struct ValidationCheck {
    std::string id;     // one of the five fixed condition ids
    bool pass = false;
    std::string detail; // human-readable explanation
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;
    bool overall = false; // all five pass

    const ValidationCheck* find(const std::string& id) const;
};

// Screens a raw matrix against the five necessary conditions:
// symmetry, zero-diagonal, max-entry, parity-count, parity-transitivity.
// Passing all five does not certify that a configuration realizes the
// matrix; the conditions are necessary only.
ValidationReport validate(const SeparatingMatrix& matrix);

std::vector<std::int64_t> row_sums(const SeparatingMatrix& matrix);

// Text format: first line n, then n lines of n space-separated integers.
SeparatingMatrix read_matrix(std::istream& in);
void write_matrix(std::ostream& out, const SeparatingMatrix& matrix);

std::string to_text(const ValidationReport& report);

} // namespace sepmat

#endif
