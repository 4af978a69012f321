#include "keibridge/kei.hpp"

#include <sstream>
#include <stdexcept>

namespace keibridge {

std::string AxiomViolation::describe() const {
    std::ostringstream os;
    switch (axiom) {
        case Axiom::idempotence:
            os << "axiom (i) a*a=a fails at a=" << a;
            break;
        case Axiom::involution:
            os << "axiom (ii) (a*b)*b=a fails at a=" << a << " b=" << b;
            break;
        case Axiom::distributivity:
            os << "axiom (iii) (a*b)*c=(a*c)*(b*c) fails at a=" << a << " b=" << b
               << " c=" << c;
            break;
    }
    return os.str();
}

KeiCheck validate_kei(const std::vector<std::vector<int>>& table) {
    KeiCheck check;
    const int n = static_cast<int>(table.size());
    if (n == 0) {
        check.structural.push_back("table is empty");
        return check;
    }
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(table[i].size()) != n) {
            std::ostringstream os;
            os << "table is not square: row " << i << " has " << table[i].size()
               << " entries, expected " << n;
            check.structural.push_back(os.str());
        }
    }
    if (!check.structural.empty()) return check;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (table[i][j] < 0 || table[i][j] >= n) {
                std::ostringstream os;
                os << "entry (" << i << "," << j << ") = " << table[i][j]
                   << " out of range [0," << n << ")";
                check.structural.push_back(os.str());
            }
        }
    }
    if (!check.structural.empty()) return check;

    using Axiom = AxiomViolation::Axiom;
    for (int a = 0; a < n; ++a) {
        if (table[a][a] != a)
            check.violations.push_back({Axiom::idempotence, a, -1, -1});
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (table[table[a][b]][b] != a)
                check.violations.push_back({Axiom::involution, a, b, -1});
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[table[a][c]][table[b][c]])
                    check.violations.push_back({Axiom::distributivity, a, b, c});
    return check;
}

Kei Kei::from_table(std::vector<std::vector<int>> table, std::string label) {
    KeiCheck check = validate_kei(table);
    if (!check.ok()) {
        std::ostringstream os;
        os << "invalid kei table";
        for (const auto& s : check.structural) os << "; " << s;
        for (const auto& v : check.violations) os << "; " << v.describe();
        throw std::invalid_argument(os.str());
    }
    return Kei(std::move(table), std::move(label));
}

Kei Kei::dihedral(int p) {
    if (p < 1) throw std::invalid_argument("dihedral kei requires p >= 1");
    std::vector<std::vector<int>> table(p, std::vector<int>(p));
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j)
            table[i][j] = ((2 * j - i) % p + p) % p;
    std::string label = "R_" + std::to_string(p);
    return Kei(std::move(table), std::move(label));
}

int Kei::iterated_act(int x, int a, long long m) const {
    if (x < 0 || x >= order() || a < 0 || a >= order())
        throw std::out_of_range("kei element out of range");
    // *a is an involution, so only the parity of m matters.
    return (m % 2 == 0) ? x : table_[x][a];
}

bool Kei::is_faithful() const {
    const int n = order();
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            bool same = true;
            for (int x = 0; x < n; ++x) {
                if (table_[x][a] != table_[x][b]) {
                    same = false;
                    break;
                }
            }
            if (same) return false;
        }
    }
    return true;
}

bool Kei::is_dihedral() const {
    const int n = order();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (table_[i][j] != ((2 * j - i) % n + n) % n) return false;
    return true;
}

}  // namespace keibridge
