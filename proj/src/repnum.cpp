#include "mfh/repnum.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <utility>

namespace mfh::repnum {

namespace {

BigInt hook_product_value(const std::vector<int>& hooks, int n) {
    BigInt num = factorial(static_cast<unsigned long>(n));
    BigInt den = 1;
    for (int h : hooks) den *= factorial(static_cast<unsigned long>(h));
    for (std::size_t t = 0; t < hooks.size(); ++t)
        for (std::size_t s = t + 1; s < hooks.size(); ++s) num *= hooks[t] - hooks[s];
    // Exact for Young diagrams; for pre-diagrams the caller works in rationals.
    return num / den;
}

Rational hook_product_rational(const std::vector<int>& hooks, int n) {
    BigInt num = factorial(static_cast<unsigned long>(n));
    BigInt den = 1;
    for (int h : hooks) den *= factorial(static_cast<unsigned long>(h));
    for (std::size_t t = 0; t < hooks.size(); ++t)
        for (std::size_t s = t + 1; s < hooks.size(); ++s) num *= hooks[t] - hooks[s];
    return ratio(num, den);
}

void check_two_row(const Partition& mu, int k, int i) {
    if (mu.parts() > 2) throw std::invalid_argument("signed_dimension needs a two-row mu, got " + mu.str());
    if (k < 1 || i < 1 || i > k + 2)
        throw std::invalid_argument("signed_dimension needs k >= 1 and 1 <= i <= k+2");
}

// Beta-set form of a partition with r beads.
std::vector<int> beta_set(const Partition& lambda) { return young::hook_numbers(young::PreDiagram(lambda)); }

Partition from_beta_set(std::vector<int> beads) {
    std::sort(beads.begin(), beads.end(), std::greater<>{});
    const int r = static_cast<int>(beads.size());
    std::vector<int> rows;
    for (int i = 1; i <= r; ++i) {
        const int len = beads[static_cast<std::size_t>(i - 1)] - (r - i);
        if (len > 0) rows.push_back(len);
    }
    return Partition(std::move(rows));
}

BigInt murnaghan_nakayama(const Partition& lambda, const Partition& type);

std::shared_mutex& cache_mutex() {
    static std::shared_mutex m;
    return m;
}

std::map<std::pair<Partition, Partition>, BigInt>& cache() {
    static std::map<std::pair<Partition, Partition>, BigInt> c;
    return c;
}

BigInt murnaghan_nakayama(const Partition& lambda, const Partition& type) {
    if (type.empty()) return lambda.empty() ? 1 : 0;
    {
        std::shared_lock lock(cache_mutex());
        if (auto it = cache().find({lambda, type}); it != cache().end()) return it->second;
    }
    const int k = type.rows().front();
    const Partition rest(std::vector<int>(type.rows().begin() + 1, type.rows().end()));
    const auto beads = beta_set(lambda);
    BigInt total = 0;
    for (std::size_t idx = 0; idx < beads.size(); ++idx) {
        const int from = beads[idx];
        const int to = from - k;
        if (to < 0 || std::find(beads.begin(), beads.end(), to) != beads.end()) continue;
        const auto between = std::count_if(beads.begin(), beads.end(), [&](int g) { return g > to && g < from; });
        auto moved = beads;
        moved[idx] = to;
        const BigInt sub = murnaghan_nakayama(from_beta_set(moved), rest);
        total += (between % 2 ? -sub : sub);
    }
    std::unique_lock lock(cache_mutex());
    cache().emplace(std::make_pair(lambda, type), total);
    return total;
}

}  // namespace

BigInt dimension(const Partition& lambda) {
    return hook_product_value(young::hook_numbers(young::PreDiagram(lambda)), lambda.size());
}

long rho(const Partition& lambda) {
    const long n = lambda.size();
    return n * (n - 1) / 2 + young::content_sum(young::PreDiagram(lambda));
}

long rho_shifted(const Partition& mu, int k, int i) {
    if (k < 1 || i < 1) throw std::invalid_argument("rho_shifted needs k >= 1 and i >= 1");
    const long n = mu.size() + k;
    const long kk = k;
    return n * (n - 1) / 2 + young::content_sum(young::PreDiagram(mu)) + kk * i - kk * mu.row(i) -
           kk * (kk + 1) / 2;
}

Rational signed_dimension(const Partition& mu, int k, int i) {
    check_two_row(mu, k, i);
    const auto gamma = young::f_shift_unchecked(mu, k, i);
    return hook_product_rational(young::hook_numbers(gamma), mu.size() + k);
}

Rational signed_dimension_by_wrap(const Partition& mu, int k, int i) {
    check_two_row(mu, k, i);
    const auto w = young::wrap(young::f_shift_unchecked(mu, k, i));
    if (!w.is_young) return 0;
    const Partition delta = w.final.to_partition();
    const int h = young::skew_height(delta, mu);
    const BigInt d = dimension(delta);
    return Rational(h % 2 == 1 ? d : BigInt(-d));
}

Rational signed_dimension_closed_form(const Partition& mu, int k, int i) {
    check_two_row(mu, k, i);
    const long a = mu.row(1), b = mu.row(2), n = mu.size() + k;
    const BigInt nf = factorial(static_cast<unsigned long>(n));
    Rational r;
    if (i == 1) {
        r = ratio(nf * (a + k + 1 - b), factorial(static_cast<unsigned long>(a + k + 1)) * factorial(static_cast<unsigned long>(b)));
    } else if (i == 2) {
        r = ratio(nf * (a + 1 - b - k), factorial(static_cast<unsigned long>(a + 1)) * factorial(static_cast<unsigned long>(b + k)));
    } else {
        r = make_rational(a + 1 - b, k) * Rational(multinomial3(n, k - 1, a + 1, b)) * Rational(binomial(k - 1, i - 3)) *
            make_rational((a + i - 1 - k) * (b + i - 2 - k), (a + i - 1) * (b + i - 2));
        if ((i + 1) % 2) r = -r;
    }
    return r;
}

Rational a_coeff(const Partition& lambda, int k) {
    const int n = lambda.size();
    if (k < 1 || k > n) throw std::invalid_argument("a_coeff needs 1 <= k <= n");
    Rational sum = 0;
    for (const auto& mu : young::two_row_partitions(n - k)) {
        const auto h = young::border_strip_height(lambda, mu);
        if (!h) continue;
        const long weight = mu.row(1) - mu.row(2) + 1;
        sum += (*h % 2 == 1 ? weight : -weight);
    }
    return sum * make_rational(2, k);
}

BigInt character(const Partition& lambda, const Partition& cycle_type) {
    if (lambda.size() != cycle_type.size())
        throw std::invalid_argument("character: " + lambda.str() + " and " + cycle_type.str() + " differ in size");
    return murnaghan_nakayama(lambda, cycle_type);
}

}  // namespace mfh::repnum
