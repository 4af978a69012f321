#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace keibridge {

/// One violated kei axiom together with the witness tuple.
/// Unused witness slots are -1.
struct AxiomViolation {
    enum class Axiom { idempotence, involution, distributivity };
    Axiom axiom;
    int a = -1;
    int b = -1;
    int c = -1;

    std::string describe() const;
    bool operator==(const AxiomViolation&) const = default;
};

/// Full validation report for a candidate operation table.
struct KeiCheck {
    std::vector<std::string> structural;       // non-square table, out-of-range entry
    std::vector<AxiomViolation> violations;    // every failing axiom instance

    bool ok() const { return structural.empty() && violations.empty(); }
};

/// A finite kei: a set {0,...,order-1} with a binary operation a*b given by
/// an explicit table satisfying idempotence, right-involution and
/// right-self-distributivity. Immutable after construction.
class Kei {
public:
    /// Validates and constructs; throws std::invalid_argument with the full
    /// report text if the table fails validation.
    static Kei from_table(std::vector<std::vector<int>> table, std::string label = "");

    /// The dihedral kei R_p on {0,...,p-1} with i*j = (2j - i) mod p.
    static Kei dihedral(int p);

    int order() const { return static_cast<int>(table_.size()); }
    const std::string& label() const { return label_; }
    const std::vector<std::vector<int>>& table() const { return table_; }

    int op(int a, int b) const { return table_[a][b]; }

    /// Applies *a to x exactly |m| times; since *a is an involution the
    /// result depends only on the parity of m.
    int iterated_act(int x, int a, long long m) const;

    /// True iff the right-translation columns x -> x*a are pairwise distinct.
    bool is_faithful() const;

    /// True iff the table is exactly that of dihedral(order()).
    bool is_dihedral() const;

    bool operator==(const Kei&) const = default;

private:
    Kei(std::vector<std::vector<int>> table, std::string label)
        : table_(std::move(table)), label_(std::move(label)) {}

    std::vector<std::vector<int>> table_;
    std::string label_;
};

/// Exhaustive check of the three kei axioms plus structural sanity.
/// Reports every violation, not just the first.
KeiCheck validate_kei(const std::vector<std::vector<int>>& table);

}  // namespace keibridge
