#ifndef APOLAR_HILBERT_HPP
#define APOLAR_HILBERT_HPP

#include <string>
#include <vector>

namespace apolar {

/// Hilbert function values indexed by degree 0..top. Comparisons ignore
/// trailing zeros so differently sized reports of the same function agree.
struct HilbertFunction {
    std::vector<long long> values;

    long long at(int d) const {
        if (d < 0 || static_cast<size_t>(d) >= values.size()) return 0;
        return values[static_cast<size_t>(d)];
    }

    /// Largest degree with a nonzero value; -1 if identically zero.
    int top_nonzero() const {
        for (int d = static_cast<int>(values.size()) - 1; d >= 0; --d)
            if (values[static_cast<size_t>(d)] != 0) return d;
        return -1;
    }

    bool operator==(const HilbertFunction& o) const {
        size_t m = std::max(values.size(), o.values.size());
        for (size_t i = 0; i < m; ++i)
            if (at(static_cast<int>(i)) != o.at(static_cast<int>(i))) return false;
        return true;
    }

    std::string str() const {
        std::string s = "[";
        for (size_t i = 0; i < values.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(values[i]);
        }
        return s + "]";
    }
};

} // namespace apolar

#endif
