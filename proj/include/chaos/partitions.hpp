#ifndef CHAOS_PARTITIONS_HPP
#define CHAOS_PARTITIONS_HPP

/* Partitions, Young-diagram combinatorics and shape vectors.
 *
 * Partitions carry a fixed capacity N and keep trailing zeros: every series
 * in this project runs at fixed N and the row index i in the Gamma offsets
 * (N-i+1)*gamma must stay unambiguous.  Cells are 1-based (row, column).
 * Diagrams are never materialized; parts can reach ~10^6.
 */

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace chaos {

using Part = std::int64_t;

struct Cell {
    int i;  // row, 1-based
    int j;  // column, 1-based
    friend bool operator==(const Cell&, const Cell&) = default;
};

class Partition {
  public:
    // Pads `parts` with zeros to length N.  Rejects negative entries and
    // increasing adjacent pairs.
    Partition(std::vector<Part> parts, int N) : parts_(std::move(parts)) {
        if (N < 0 || static_cast<int>(parts_.size()) > N)
            throw std::invalid_argument("partition longer than capacity");
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 0)
                throw std::invalid_argument("negative part");
            if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
                throw std::invalid_argument("parts not weakly decreasing");
        }
        parts_.resize(N, 0);
    }

    Partition() = default;  // empty partition, capacity 0

    int capacity() const { return static_cast<int>(parts_.size()); }
    Part operator[](int i) const { return parts_[i]; }          // 0-based
    Part part(int i) const { return parts_[i - 1]; }            // 1-based
    const std::vector<Part>& parts() const { return parts_; }

    Part weight() const {
        return std::accumulate(parts_.begin(), parts_.end(), Part{0});
    }

    // Number of nonzero parts.
    int length() const {
        int l = capacity();
        while (l > 0 && parts_[l - 1] == 0) --l;
        return l;
    }

    bool contains(const Cell& s) const {
        return s.i >= 1 && s.i <= capacity() && s.j >= 1 && s.j <= parts_[s.i - 1];
    }

    // lambda'_j = #{i : lambda_i >= j}; O(length), no diagram walk.
    Part conjugate_part(Part j) const {
        int lo = 0, hi = length();  // parts_[0..hi) sorted decreasing
        while (lo < hi) {
            int mid = (lo + hi) / 2;
            if (parts_[mid] >= j) lo = mid + 1; else hi = mid;
        }
        return lo;
    }

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.parts_ == b.parts_;
    }
    friend auto operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

    std::string str() const {
        std::string s = "(";
        for (int i = 0; i < capacity(); ++i)
            s += (i ? "," : "") + std::to_string(parts_[i]);
        return s + ")";
    }

  private:
    std::vector<Part> parts_;
};

inline Partition new_partition(std::vector<Part> parts, int N) {
    return Partition(std::move(parts), N);
}

// Capacity of the result is lambda_1 (conjugation changes capacity).
inline Partition conjugate(const Partition& la) {
    std::vector<Part> cols(static_cast<size_t>(la.length() ? la[0] : 0), 0);
    for (int i = 0; i < la.length(); ++i)
        for (Part j = 0; j < la[i]; ++j) ++cols[j];
    return Partition(std::move(cols), la.length() ? static_cast<int>(la[0]) : 0);
}

inline Part arm(const Partition& la, const Cell& s) {
    if (!la.contains(s)) throw std::invalid_argument("cell outside diagram");
    return la.part(s.i) - s.j;
}

inline Part leg(const Partition& la, const Cell& s) {
    if (!la.contains(s)) throw std::invalid_argument("cell outside diagram");
    return la.conjugate_part(s.j) - s.i;
}

// min over i = 1..N of lambda_i - lambda_{i+1}, with lambda_{N+1} = 0.
inline Part gap(const Partition& la) {
    const int N = la.capacity();
    if (N == 0) return 0;
    Part g = la[N - 1];
    for (int i = 0; i + 1 < N; ++i) g = std::min(g, la[i] - la[i + 1]);
    return g;
}

inline Partition add_scalar(const Partition& la, Part n) {
    if (n < 0) throw std::invalid_argument("negative shift");
    std::vector<Part> p = la.parts();
    for (auto& x : p) x += n;
    return Partition(std::move(p), la.capacity());
}

struct ShapeVector {
    std::vector<int> entries;  // sigma in {0..k}^N

    int height() const { return static_cast<int>(entries.size()); }
    int max_entry() const {
        return entries.empty() ? 0 : *std::max_element(entries.begin(), entries.end());
    }
    // N_r = #{i : sigma_i = r}, r = 1..k
    std::vector<int> multiplicities() const {
        std::vector<int> m(static_cast<size_t>(max_entry()), 0);
        for (int e : entries)
            if (e > 0) ++m[e - 1];
        return m;
    }
};

// Requires gap(lambda) >= max entry of sigma (the admissibility condition
// that keeps lambda + sigma weakly decreasing for every shape ordering).
inline Partition add_shape(const Partition& la, const ShapeVector& sigma) {
    if (sigma.height() != la.capacity())
        throw std::invalid_argument("shape height != partition capacity");
    if (gap(la) < sigma.max_entry())
        throw std::invalid_argument("gap(lambda) < max entry of shape");
    std::vector<Part> p = la.parts();
    for (int i = 0; i < la.capacity(); ++i) p[i] += sigma.entries[i];
    return Partition(std::move(p), la.capacity());
}

// Visits every partition with length <= N and lambda_1 <= Lmax exactly once,
// ordered lexicographically on (lambda_1, ..., lambda_N).  Count is
// binomial(Lmax + N, N).
inline void enumerate_partitions(int N, Part Lmax,
                                 const std::function<void(const Partition&)>& visit) {
    if (N < 1 || Lmax < 0) throw std::invalid_argument("bad enumeration domain");
    std::vector<Part> la(static_cast<size_t>(N), 0);
    for (;;) {
        visit(Partition(la, N));
        int i = N - 1;
        while (i >= 0) {
            Part cap = (i == 0) ? Lmax : la[i - 1];
            if (la[i] < cap) break;
            --i;
        }
        if (i < 0) return;
        ++la[i];
        std::fill(la.begin() + i + 1, la.end(), 0);
    }
}

// mu subset of nu and nu/mu a vertical strip: at most one cell per row,
// i.e. nu_i - mu_i in {0, 1} for every row.
inline bool is_vertical_strip(const Partition& nu, const Partition& mu) {
    const int N = std::max(nu.capacity(), mu.capacity());
    for (int i = 0; i < N; ++i) {
        const Part a = i < nu.capacity() ? nu[i] : 0;
        const Part b = i < mu.capacity() ? mu[i] : 0;
        if (a < b || a > b + 1) return false;
    }
    return true;
}

// All nu >= mu with nu/mu a vertical strip of size p, capacity that of mu.
inline std::vector<Partition> enumerate_vertical_strips(const Partition& mu, int p) {
    const int N = mu.capacity();
    if (p < 0 || p > N) throw std::invalid_argument("strip size outside [0, N]");
    std::vector<Partition> out;
    std::vector<Part> nu(mu.parts());
    // choose the set of rows getting +1; rows are scanned top to bottom
    std::function<void(int, int)> rec = [&](int row, int left) {
        if (left == 0) {
            out.emplace_back(nu, N);
            return;
        }
        if (N - row < left) return;
        // skip row
        rec(row + 1, left);
        // add a cell in this row if the result stays weakly decreasing
        if (row == 0 || nu[row] + 1 <= nu[row - 1]) {
            ++nu[row];
            rec(row + 1, left - 1);
            --nu[row];
        }
    };
    rec(0, p);
    std::sort(out.begin(), out.end());
    return out;
}

// Cells of tau lying in a column that meets tau - mu but not in a row that
// meets tau - mu.  Lazy: O(#added columns * N) cells at most.
inline std::vector<Cell> cells_C_minus_R(const Partition& tau, const Partition& mu) {
    if (!is_vertical_strip(tau, mu))
        throw std::invalid_argument("tau/mu is not a vertical strip");
    const int N = tau.capacity();
    std::vector<bool> added_row(static_cast<size_t>(N) + 1, false);
    std::vector<Part> cols;
    for (int i = 1; i <= N; ++i) {
        const Part mi = (i <= mu.capacity()) ? mu.part(i) : 0;
        if (tau.part(i) == mi + 1) {
            added_row[i] = true;
            cols.push_back(tau.part(i));
        }
    }
    std::sort(cols.begin(), cols.end());
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
    std::vector<Cell> out;
    for (Part j : cols)
        for (int r = 1; r <= tau.conjugate_part(j); ++r)
            if (!added_row[r]) out.push_back(Cell{r, static_cast<int>(j)});
    return out;
}

// All sigma in {0..k}^N with |{i : sigma_i = r}| = N_r (r = 1..k); the number
// of zero entries is N - sum N_r.  Yields each admissible sigma once.
inline std::vector<ShapeVector> enumerate_shapes(int N, const std::vector<int>& mult) {
    int total = 0;
    for (int m : mult) {
        if (m < 0) throw std::invalid_argument("negative multiplicity");
        total += m;
    }
    if (total > N) throw std::invalid_argument("multiplicities exceed N");
    std::vector<int> sigma;
    sigma.reserve(static_cast<size_t>(N));
    const int k = static_cast<int>(mult.size());
    for (int r = k; r >= 1; --r)
        for (int c = 0; c < mult[r - 1]; ++c) sigma.push_back(r);
    sigma.resize(static_cast<size_t>(N), 0);
    std::sort(sigma.begin(), sigma.end());
    std::vector<ShapeVector> out;
    do {
        out.push_back(ShapeVector{sigma});
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return out;
}

inline void to_json(nlohmann::json& j, const Partition& la) { j = la.parts(); }

inline Partition partition_from_json(const nlohmann::json& j) {
    std::vector<Part> p = j.get<std::vector<Part>>();
    return Partition(p, static_cast<int>(p.size()));
}

}  // namespace chaos

#endif
