#include "mfh/young.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mfh::young {

namespace {

std::string join_rows(const std::vector<int>& rows) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i) os << ',';
        os << rows[i];
    }
    os << ']';
    return os.str();
}

// Index (0-based) of the unique ascent, or -1.
int ascent_index(const std::vector<int>& rows) {
    for (std::size_t j = 0; j + 1 < rows.size(); ++j)
        if (rows[j + 1] > rows[j]) return static_cast<int>(j);
    return -1;
}

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

Partition::Partition(std::initializer_list<int> rows) : Partition(std::vector<int>(rows)) {}

Partition::Partition(std::vector<int> rows) : rows_(std::move(rows)) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i] < 1) throw std::invalid_argument("partition rows must be positive: " + join_rows(rows_));
        if (i && rows_[i] > rows_[i - 1])
            throw std::invalid_argument("partition rows must be weakly decreasing: " + join_rows(rows_));
    }
    n_ = std::accumulate(rows_.begin(), rows_.end(), 0);
}

std::vector<int> Partition::multiplicities() const {
    std::vector<int> m(static_cast<std::size_t>(n_) + 1, 0);
    for (int r : rows_) ++m[static_cast<std::size_t>(r)];
    return m;
}

std::string Partition::str() const { return join_rows(rows_); }

PreDiagram::PreDiagram(std::initializer_list<int> rows) : PreDiagram(std::vector<int>(rows)) {}

PreDiagram::PreDiagram(std::vector<int> rows) : rows_(std::move(rows)) {
    if (!rows_.empty() && rows_.back() == 0)
        throw std::invalid_argument("pre-diagram last row must be nonzero: " + join_rows(rows_));
    int ascents = 0;
    for (std::size_t j = 0; j < rows_.size(); ++j) {
        if (rows_[j] < 0) throw std::invalid_argument("pre-diagram rows must be nonnegative: " + join_rows(rows_));
        if (j + 1 < rows_.size() && rows_[j + 1] > rows_[j]) ++ascents;
    }
    if (ascents > 1) throw std::invalid_argument("pre-diagram has more than one ascent: " + join_rows(rows_));
}

PreDiagram::PreDiagram(const Partition& p) : rows_(p.rows()) {}

int PreDiagram::size() const noexcept { return std::accumulate(rows_.begin(), rows_.end(), 0); }

bool PreDiagram::is_young() const noexcept {
    return std::is_sorted(rows_.begin(), rows_.end(), std::greater<>{}) &&
           std::all_of(rows_.begin(), rows_.end(), [](int r) { return r > 0; });
}

Partition PreDiagram::to_partition() const {
    if (!is_young()) throw std::invalid_argument("pre-diagram is not a Young diagram: " + str());
    return Partition(rows_);
}

std::string PreDiagram::str() const { return join_rows(rows_); }

std::vector<int> hook_numbers(const PreDiagram& shape) {
    const auto& rows = shape.rows();
    const int r = shape.height();
    std::vector<int> h(rows.size());
    for (int i = 1; i <= r; ++i) h[static_cast<std::size_t>(i - 1)] = rows[static_cast<std::size_t>(i - 1)] + r - i;
    return h;
}

long content_sum(const PreDiagram& shape) {
    long s = 0;
    const auto& rows = shape.rows();
    for (std::size_t idx = 0; idx < rows.size(); ++idx) {
        const long i = static_cast<long>(idx) + 1;
        const long len = rows[idx];
        // sum_{j=1}^{len} (i - j)
        s += len * i - len * (len + 1) / 2;
    }
    return s;
}

PreDiagram f_shift_unchecked(const Partition& mu, int k, int i) {
    if (k < 1 || i < 1) throw std::invalid_argument("f_shift requires k >= 1 and i >= 1");
    std::vector<int> rows = mu.rows();
    if (i <= mu.parts()) {
        rows[static_cast<std::size_t>(i - 1)] += k;
    } else {
        rows.resize(static_cast<std::size_t>(i - 1), 0);
        rows.push_back(k);
    }
    return PreDiagram(std::move(rows));
}

PreDiagram f_shift(const Partition& mu, int k, int i) {
    if (k < 1) throw std::invalid_argument("f_shift requires k >= 1");
    if (i < 1 || i > mu.parts() + k)
        throw std::invalid_argument("f_shift row index " + std::to_string(i) + " outside [1, " +
                                    std::to_string(mu.parts() + k) + "]");
    return f_shift_unchecked(mu, k, i);
}

PreDiagram apply_move(const PreDiagram& shape, int j) {
    std::vector<int> rows = shape.rows();
    if (j < 1 || j >= shape.height()) throw std::invalid_argument("move index out of range");
    auto& lo = rows[static_cast<std::size_t>(j - 1)];
    auto& hi = rows[static_cast<std::size_t>(j)];
    if (hi < lo + 2) throw std::invalid_argument("move R_" + std::to_string(j) + " not applicable to " + shape.str());
    const int a = lo;
    lo = hi - 1;
    hi = a + 1;
    return PreDiagram(std::move(rows));
}

WrapResult wrap(const PreDiagram& shape) {
    WrapResult res{shape, 0, false};
    for (;;) {
        const int j = ascent_index(res.final.rows());
        if (j < 0) break;
        const auto& rows = res.final.rows();
        if (rows[static_cast<std::size_t>(j) + 1] < rows[static_cast<std::size_t>(j)] + 2) break;
        res.final = apply_move(res.final, j + 1);
        ++res.move_count;
    }
    res.is_young = res.final.is_young();
    return res;
}

bool contains(const Partition& lambda, const Partition& mu) {
    if (mu.parts() > lambda.parts()) return false;
    for (int i = 1; i <= mu.parts(); ++i)
        if (mu.row(i) > lambda.row(i)) return false;
    return true;
}

int skew_height(const Partition& lambda, const Partition& mu) {
    int h = 0;
    for (int i = 1; i <= lambda.parts(); ++i)
        if (lambda.row(i) > mu.row(i)) ++h;
    return h;
}

std::optional<int> border_strip_height(const Partition& lambda, const Partition& mu) {
    if (!contains(lambda, mu) || lambda.size() == mu.size()) return std::nullopt;
    const int rows = lambda.parts();
    const int cols = lambda.row(1);
    auto inside = [&](int i, int j) {  // 1-based box in the skew shape
        return i >= 1 && i <= rows && j > mu.row(i) && j <= lambda.row(i);
    };
    for (int i = 1; i < rows; ++i)
        for (int j = 1; j < cols; ++j)
            if (inside(i, j) && inside(i + 1, j) && inside(i, j + 1) && inside(i + 1, j + 1)) return std::nullopt;

    // 4-neighbour flood fill; corners do not connect.
    std::vector<std::vector<char>> seen(static_cast<std::size_t>(rows) + 2,
                                        std::vector<char>(static_cast<std::size_t>(cols) + 2, 0));
    int start_i = 0, start_j = 0;
    for (int i = 1; i <= rows && !start_i; ++i)
        if (lambda.row(i) > mu.row(i)) {
            start_i = i;
            start_j = mu.row(i) + 1;
        }
    std::vector<std::pair<int, int>> stack{{start_i, start_j}};
    seen[static_cast<std::size_t>(start_i)][static_cast<std::size_t>(start_j)] = 1;
    int reached = 0;
    while (!stack.empty()) {
        auto [i, j] = stack.back();
        stack.pop_back();
        ++reached;
        const int di[] = {1, -1, 0, 0};
        const int dj[] = {0, 0, 1, -1};
        for (int d = 0; d < 4; ++d) {
            const int ni = i + di[d], nj = j + dj[d];
            if (inside(ni, nj) && !seen[static_cast<std::size_t>(ni)][static_cast<std::size_t>(nj)]) {
                seen[static_cast<std::size_t>(ni)][static_cast<std::size_t>(nj)] = 1;
                stack.emplace_back(ni, nj);
            }
        }
    }
    if (reached != lambda.size() - mu.size()) return std::nullopt;
    return skew_height(lambda, mu);
}

std::vector<BorderStripResult> border_strips(const Partition& mu, int k) {
    if (k < 1) throw std::invalid_argument("border_strips requires k >= 1");
    std::vector<BorderStripResult> out;
    for (int i = 1; i <= mu.parts() + k; ++i) {
        const WrapResult w = wrap(f_shift(mu, k, i));
        if (!w.is_young) continue;
        Partition lambda = w.final.to_partition();
        const int h = skew_height(lambda, mu);
        out.push_back({std::move(lambda), h});
    }
    return out;
}

std::vector<BorderStripResult> border_strips_by_enumeration(const Partition& mu, int k) {
    if (k < 1) throw std::invalid_argument("border_strips requires k >= 1");
    std::vector<BorderStripResult> out;
    for (auto& lambda : partitions(mu.size() + k))
        if (auto h = border_strip_height(lambda, mu)) out.push_back({lambda, *h});
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Partition> partitions(int n) {
    if (n < 0) throw std::invalid_argument("partitions of a negative integer");
    std::vector<Partition> out;
    std::vector<int> cur;
    partitions_rec(n, n, cur, out);
    return out;
}

std::vector<Partition> two_row_partitions(int n) {
    if (n < 0) throw std::invalid_argument("partitions of a negative integer");
    std::vector<Partition> out;
    for (int b = 0; 2 * b <= n; ++b)
        out.push_back(b == 0 ? (n == 0 ? Partition{} : Partition{n}) : Partition{n - b, b});
    return out;
}

Partition conjugate(const Partition& p) {
    std::vector<int> cols;
    for (int j = 1; j <= p.row(1); ++j) {
        int c = 0;
        for (int r : p.rows())
            if (r >= j) ++c;
        cols.push_back(c);
    }
    return Partition(std::move(cols));
}

}  // namespace mfh::young
