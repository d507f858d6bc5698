#include "roman/path_count.hpp"

#include <mutex>
#include <stdexcept>

namespace roman {

namespace {

// Mutual recurrences, memoized:
//   prefix2(n):    0, 1, then prefix_not2(n-2)
//   prefix_not2(n): 1, 2, 3, then
//                   prefix_not2(n-1) + prefix2(n-2) + total(n-3)
//   total(n) = prefix2(n) + prefix_not2(n)
class PathTable {
public:
    static PathTable& instance() {
        static PathTable table;
        return table;
    }

    BigInt prefix2(int n) { return with_table(n, c2_); }
    BigInt prefix_not2(int n) { return with_table(n, cn2_); }
    BigInt total(int n) { return with_table(n, total_); }

private:
    PathTable() {
        // Index by n; entry 0 is padding. Bases: prefix2 = 0, 1 and
        // prefix2(3) = prefix_not2(1); prefix_not2 = 1, 2, 3.
        c2_ = {0, 0, 1, 1};
        cn2_ = {0, 1, 2, 3};
        total_ = {0, 1, 3, 4};
    }

    BigInt with_table(int n, std::vector<BigInt>& table) {
        if (n < 1) throw std::invalid_argument("path length must be >= 1");
        std::lock_guard<std::mutex> lock(mutex_);
        ensure(n);
        return table[n];
    }

    void ensure(int n) {
        for (int i = static_cast<int>(cn2_.size()); i <= n; ++i) {
            c2_.push_back(cn2_[i - 2]);
            BigInt not2 = cn2_[i - 1] + c2_[i - 2] + total_[i - 3];
            // The shortened recurrence carries the same values from 6 on.
            if (i >= 6) {
                BigInt alt = cn2_[i - 1] + cn2_[i - 3] + cn2_[i - 4] + cn2_[i - 5];
                if (alt != not2) throw std::logic_error("path recurrences disagree");
            }
            cn2_.push_back(not2);
            total_.push_back(c2_[i] + cn2_[i]);
        }
    }

    std::mutex mutex_;
    std::vector<BigInt> c2_, cn2_, total_;
};

}  // namespace

BigInt count_prefix2(int n) { return PathTable::instance().prefix2(n); }

BigInt count_prefix_not2(int n) { return PathTable::instance().prefix_not2(n); }

BigInt count_path(int n) { return PathTable::instance().total(n); }

BigInt count_path_forest(const std::vector<int>& lengths) {
    BigInt product = 1;
    for (int n : lengths) product *= count_path(n);
    return product;
}

double growth_estimate(int n) {
    if (n < 10) throw std::invalid_argument("growth_estimate requires n >= 10");
    return count_path(n).convert_to<double>() / count_path(n - 1).convert_to<double>();
}

}  // namespace roman
