#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace mfh::young {

/// Weakly decreasing list of positive row lengths. The empty partition is the
/// unique partition of 0.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> rows);
    explicit Partition(std::vector<int> rows);

    const std::vector<int>& rows() const noexcept { return rows_; }
    int size() const noexcept { return n_; }
    int parts() const noexcept { return static_cast<int>(rows_.size()); }
    bool empty() const noexcept { return rows_.empty(); }

    /// Row length with 1-based index; 0 past the last row.
    int row(int i) const noexcept {
        return i >= 1 && i <= parts() ? rows_[static_cast<std::size_t>(i - 1)] : 0;
    }

    /// Number of parts equal to 1..n, i.e. the multiplicities m_k of a cycle type.
    std::vector<int> multiplicities() const;

    std::string str() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.rows_ <=> b.rows_; }

private:
    std::vector<int> rows_;
    int n_ = 0;
};

/// Row lengths with at most one ascent and a nonzero last row. Every partition
/// is a pre-diagram.
class PreDiagram {
public:
    PreDiagram() = default;
    PreDiagram(std::initializer_list<int> rows);
    explicit PreDiagram(std::vector<int> rows);
    PreDiagram(const Partition& p);  // NOLINT: implicit embedding is intended

    const std::vector<int>& rows() const noexcept { return rows_; }
    int height() const noexcept { return static_cast<int>(rows_.size()); }
    int size() const noexcept;
    bool is_young() const noexcept;
    Partition to_partition() const;

    std::string str() const;

    friend bool operator==(const PreDiagram&, const PreDiagram&) = default;

private:
    std::vector<int> rows_;
};

struct BorderStripResult {
    Partition diagram;
    int strip_height = 0;

    friend bool operator==(const BorderStripResult&, const BorderStripResult&) = default;
    friend auto operator<=>(const BorderStripResult&, const BorderStripResult&) = default;
};

struct WrapResult {
    PreDiagram final;
    int move_count = 0;
    bool is_young = false;
};

/// lambda_i + r - i for i = 1..r, where r is the number of rows (zeros included).
std::vector<int> hook_numbers(const PreDiagram& shape);

/// Sum over boxes (i, j) of i - j.
long content_sum(const PreDiagram& shape);

/// mu with k boxes added to row i (1-based); rows past hght(mu) are zero-filled.
PreDiagram f_shift(const Partition& mu, int k, int i);

/// Same as f_shift without the bound i <= hght(mu) + k.
PreDiagram f_shift_unchecked(const Partition& mu, int k, int i);

/// Applies the move R_j (1-based): (r_j, r_{j+1}) -> (r_{j+1} - 1, r_j + 1).
/// Requires r_{j+1} >= r_j + 2.
PreDiagram apply_move(const PreDiagram& shape, int j);

WrapResult wrap(const PreDiagram& shape);

/// Number of rows in which lambda and mu differ; lambda must contain mu.
int skew_height(const Partition& lambda, const Partition& mu);

bool contains(const Partition& lambda, const Partition& mu);

/// Height of lambda \ mu when it is a nonempty edge-connected skew shape with
/// no 2x2 square, otherwise nullopt.
std::optional<int> border_strip_height(const Partition& lambda, const Partition& mu);

/// E_k(mu) with strip heights, generated by wrapping F_{k,i}(mu) for
/// i = 1..hght(mu)+k and keeping the Young results. Ordered by i.
std::vector<BorderStripResult> border_strips(const Partition& mu, int k);

/// E_k(mu) by enumerating every partition of |mu|+k and testing the skew
/// shape directly. Slow; sorted ascending.
std::vector<BorderStripResult> border_strips_by_enumeration(const Partition& mu, int k);

/// All partitions of n in reverse-lexicographic order ([n] first, [1^n] last).
std::vector<Partition> partitions(int n);

/// Two-row partitions [a, b] of n with a >= b >= 0, ordered by b ascending.
std::vector<Partition> two_row_partitions(int n);

Partition conjugate(const Partition& p);

}  // namespace mfh::young
