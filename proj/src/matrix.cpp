#include "sepmat/matrix.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace sepmat {

namespace {

int parity(std::int64_t v) { return static_cast<int>(((v % 2) + 2) % 2); }

} // namespace

SeparatingMatrix::SeparatingMatrix(int n) : n_(n) {
    if (n < 3)
        throw std::invalid_argument("separating matrix needs order >= 3");
    entries_.assign(static_cast<size_t>(n) * static_cast<size_t>(n), 0);
}

SeparatingMatrix compute_matrix(const Configuration& config) {
    const int n = config.size();
    SeparatingMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            m.set_pair(i, j, separating_count(config, i, j));
    return m;
}

std::int64_t max_entry_bound(int n) {
    const std::int64_t r = n - 2;
    return r * (r - 1) / 2;
}

OrchardPartition orchard_partition(const SeparatingMatrix& matrix) {
    const int n = matrix.size();
    for (int i = 0; i < n; ++i) {
        if (matrix.entry(i, i) != 0)
            throw std::invalid_argument("orchard_partition: nonzero diagonal");
        for (int j = i + 1; j < n; ++j)
            if (matrix.entry(i, j) != matrix.entry(j, i))
                throw std::invalid_argument("orchard_partition: not symmetric");
    }

    // Same class as point 0 iff the entry parity matches n-1; then every
    // pair must agree with the classes, otherwise the relation is not an
    // equivalence with <= 2 classes.
    const int same = parity(n - 1);
    OrchardPartition part;
    part.class_of.assign(static_cast<size_t>(n), 0);
    for (int j = 1; j < n; ++j)
        part.class_of[static_cast<size_t>(j)] =
            parity(matrix.entry(0, j)) == same ? 0 : 1;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const bool same_class = part.class_of[static_cast<size_t>(i)] ==
                                    part.class_of[static_cast<size_t>(j)];
            const bool claims_same = parity(matrix.entry(i, j)) == same;
            if (same_class != claims_same) {
                std::ostringstream msg;
                msg << "orchard relation is not an equivalence: entry (" << i
                    << ", " << j << ") = " << matrix.entry(i, j)
                    << " contradicts the classes forced by row 0";
                throw OrchardError(msg.str());
            }
        }
    return part;
}

const ValidationCheck* ValidationReport::find(const std::string& id) const {
    for (const auto& c : checks)
        if (c.id == id) return &c;
    return nullptr;
}

ValidationReport validate(const SeparatingMatrix& matrix) {
    const int n = matrix.size();
    ValidationReport report;

    {
        ValidationCheck c{"symmetry", true, "matrix equals its transpose"};
        for (int i = 0; i < n && c.pass; ++i)
            for (int j = i + 1; j < n && c.pass; ++j)
                if (matrix.entry(i, j) != matrix.entry(j, i)) {
                    c.pass = false;
                    std::ostringstream d;
                    d << "entries (" << i << ", " << j << ") and (" << j
                      << ", " << i << ") differ: " << matrix.entry(i, j)
                      << " vs " << matrix.entry(j, i);
                    c.detail = d.str();
                }
        report.checks.push_back(std::move(c));
    }
    {
        ValidationCheck c{"zero-diagonal", true, "all diagonal entries are 0"};
        for (int i = 0; i < n && c.pass; ++i)
            if (matrix.entry(i, i) != 0) {
                c.pass = false;
                std::ostringstream d;
                d << "diagonal entry (" << i << ", " << i
                  << ") = " << matrix.entry(i, i);
                c.detail = d.str();
            }
        report.checks.push_back(std::move(c));
    }
    {
        const std::int64_t bound = max_entry_bound(n);
        ValidationCheck c{"max-entry", true, ""};
        {
            std::ostringstream d;
            d << "all entries within [0, " << bound << "]";
            c.detail = d.str();
        }
        for (int i = 0; i < n && c.pass; ++i)
            for (int j = 0; j < n && c.pass; ++j) {
                const std::int64_t v = matrix.entry(i, j);
                if (v < 0 || v > bound) {
                    c.pass = false;
                    std::ostringstream d;
                    d << "entry (" << i << ", " << j << ") = " << v
                      << " outside [0, " << bound << "]";
                    c.detail = d.str();
                }
            }
        report.checks.push_back(std::move(c));
    }
    {
        // Entries of parity opposite to n-1 pair points from the two
        // classes, so their count in the strict upper triangle must be
        // i(n-i) for some 0 <= i <= n.
        const int opposite = parity(n);
        std::int64_t opp_count = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (parity(matrix.entry(i, j)) == opposite) ++opp_count;
        bool admissible = false;
        for (int i = 0; i <= n && !admissible; ++i)
            admissible = (static_cast<std::int64_t>(i) * (n - i) == opp_count);
        ValidationCheck c{"parity-count", admissible, ""};
        std::ostringstream d;
        d << opp_count << " entries of parity opposite to n-1 in the upper "
          << "triangle; " << (admissible ? "equals" : "is not") << " i(n-i) "
          << "for any 0 <= i <= n";
        c.detail = d.str();
        report.checks.push_back(std::move(c));
    }
    {
        // For every pivot j: equal parities of (i,j), (j,k) force entry
        // (i,k) to parity n-1, unequal parities force parity n.
        ValidationCheck c{"parity-transitivity", true,
                          "all index triples consistent"};
        const int pn1 = parity(n - 1);
        const int pn = parity(n);
        for (int j = 0; j < n && c.pass; ++j)
            for (int i = 0; i < n && c.pass; ++i) {
                if (i == j) continue;
                for (int k = i + 1; k < n && c.pass; ++k) {
                    if (k == j) continue;
                    const int pij = parity(matrix.entry(i, j));
                    const int pjk = parity(matrix.entry(j, k));
                    const int pik = parity(matrix.entry(i, k));
                    const int required = (pij == pjk) ? pn1 : pn;
                    if (pik != required) {
                        c.pass = false;
                        std::ostringstream d;
                        d << "triple (" << i << ", " << j << ", " << k
                          << "): parities of (" << i << "," << j << ") and ("
                          << j << "," << k << ") force entry (" << i << ","
                          << k << ") to parity " << required << ", found "
                          << pik;
                        c.detail = d.str();
                    }
                }
            }
        report.checks.push_back(std::move(c));
    }

    report.overall = true;
    for (const auto& c : report.checks) report.overall = report.overall && c.pass;
    return report;
}

std::vector<std::int64_t> row_sums(const SeparatingMatrix& matrix) {
    const int n = matrix.size();
    std::vector<std::int64_t> sums(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            sums[static_cast<size_t>(i)] += matrix.entry(i, j);
    return sums;
}

SeparatingMatrix read_matrix(std::istream& in) {
    std::string line;
    if (!std::getline(in, line))
        throw ParseError("matrix: missing order line");
    long n = 0;
    try {
        n = std::stol(line);
    } catch (const std::exception&) {
        throw ParseError("matrix: order line is not an integer: '" + line + "'");
    }
    if (n < 3) throw ParseError("matrix: order must be at least 3");

    SeparatingMatrix m(static_cast<int>(n));
    for (long i = 0; i < n; ++i) {
        if (!std::getline(in, line))
            throw ParseError("matrix: row " + std::to_string(i) +
                             ": unexpected end of input");
        std::istringstream ls(line);
        for (long j = 0; j < n; ++j) {
            std::int64_t v;
            if (!(ls >> v))
                throw ParseError("matrix: row " + std::to_string(i) +
                                 ": expected " + std::to_string(n) +
                                 " integers");
            m.set_entry(static_cast<int>(i), static_cast<int>(j), v);
        }
        std::string trailing;
        if (ls >> trailing)
            throw ParseError("matrix: row " + std::to_string(i) +
                             ": trailing content '" + trailing + "'");
    }
    return m;
}

void write_matrix(std::ostream& out, const SeparatingMatrix& matrix) {
    const int n = matrix.size();
    out << n << '\n';
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (j) out << ' ';
            out << matrix.entry(i, j);
        }
        out << '\n';
    }
}

std::string to_text(const ValidationReport& report) {
    std::ostringstream out;
    for (const auto& c : report.checks)
        out << "check " << c.id << ": " << (c.pass ? "pass" : "FAIL") << " ("
            << c.detail << ")\n";
    out << (report.overall
                ? "result: all necessary conditions satisfied\n"
                : "result: necessary conditions violated\n");
    return out.str();
}

} // namespace sepmat
