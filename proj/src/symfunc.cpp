#include "mfh/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mfh::symfunc {

namespace {

using Terms = std::map<Exponents, Rational>;

void add_into(Terms& t, const Exponents& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = t.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) t.erase(it);
    }
}


int permutation_sign(const std::vector<int>& perm) {
    int sign = 1;
    std::vector<char> seen(perm.size(), 0);
    for (std::size_t s = 0; s < perm.size(); ++s) {
        if (seen[s]) continue;
        std::size_t len = 0;
        for (std::size_t c = s; !seen[c]; c = static_cast<std::size_t>(perm[c])) {
            seen[c] = 1;
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

void check_variables(const Partition& lambda, int v) {
    if (v < lambda.parts())
        throw std::invalid_argument("need at least " + std::to_string(lambda.parts()) + " variables for " +
                                    lambda.str() + ", got " + std::to_string(v));
}

void tableaux_rec(const Partition& shape, int v, std::vector<std::vector<int>>& t, std::size_t row, std::size_t col,
                  Exponents& content, SymPoly& out) {
    if (row == shape.rows().size()) {
        out.add_term(content, 1);
        return;
    }
    const std::size_t len = static_cast<std::size_t>(shape.rows()[row]);
    if (col == len) {
        tableaux_rec(shape, v, t, row + 1, 0, content, out);
        return;
    }
    int lo = 1;
    if (col > 0) lo = std::max(lo, t[row][col - 1]);        // weakly increasing rows
    if (row > 0) lo = std::max(lo, t[row - 1][col] + 1);    // strictly increasing columns
    for (int val = lo; val <= v; ++val) {
        t[row][col] = val;
        ++content[static_cast<std::size_t>(val - 1)];
        tableaux_rec(shape, v, t, row, col + 1, content, out);
        --content[static_cast<std::size_t>(val - 1)];
    }
}

// Cycle types of T_lambda with multiplicities: product over factors.
void young_subgroup_rec(const Partition& lambda, std::size_t idx, std::vector<int>& parts, const BigInt& count,
                        const ClassFunction& f, Rational& acc) {
    if (idx == lambda.rows().size()) {
        std::vector<int> sorted = parts;
        std::sort(sorted.begin(), sorted.end(), std::greater<>{});
        acc += Rational(count) * f.at(Partition(sorted));
        return;
    }
    for (const auto& sub : young::partitions(lambda.rows()[idx])) {
        const std::size_t before = parts.size();
        parts.insert(parts.end(), sub.rows().begin(), sub.rows().end());
        young_subgroup_rec(lambda, idx + 1, parts, count * class_size(sub), f, acc);
        parts.resize(before);
    }
}

}  // namespace

SymPoly::SymPoly(int variables) : v_(variables) {
    if (variables < 0) throw std::invalid_argument("negative variable count");
}

Rational SymPoly::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

bool SymPoly::is_symmetric() const {
    for (const auto& [e, c] : terms_) {
        Exponents sorted = e;
        std::sort(sorted.begin(), sorted.end());
        do {
            if (coeff(sorted) != c) return false;
        } while (std::next_permutation(sorted.begin(), sorted.end()));
    }
    return true;
}

void SymPoly::add_term(const Exponents& e, const Rational& c) {
    if (static_cast<int>(e.size()) != v_) throw std::invalid_argument("exponent vector length mismatch");
    add_into(terms_, e, c);
}

SymPoly& SymPoly::operator+=(const SymPoly& o) {
    if (o.v_ != v_) throw std::invalid_argument("variable count mismatch");
    for (const auto& [e, c] : o.terms_) add_into(terms_, e, c);
    return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& o) {
    if (o.v_ != v_) throw std::invalid_argument("variable count mismatch");
    for (const auto& [e, c] : o.terms_) add_into(terms_, e, -c);
    return *this;
}

SymPoly& SymPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

SymPoly operator*(const SymPoly& a, const SymPoly& b) {
    if (a.v_ != b.v_) throw std::invalid_argument("variable count mismatch");
    SymPoly r(a.v_);
    Exponents e(static_cast<std::size_t>(a.v_));
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            add_into(r.terms_, e, ca * cb);
        }
    return r;
}

std::string SymPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        os << it->second.get_str();
        for (std::size_t i = 0; i < it->first.size(); ++i)
            if (it->first[i]) os << "*x" << i + 1 << (it->first[i] > 1 ? "^" + std::to_string(it->first[i]) : "");
    }
    return os.str();
}

ClassFunction ClassFunction::from(int n, const std::function<Rational(const Partition&)>& f) {
    ClassFunction cf;
    cf.n = n;
    for (const auto& p : young::partitions(n)) cf.values.emplace(p, f(p));
    return cf;
}

const Rational& ClassFunction::at(const Partition& type) const {
    auto it = values.find(type);
    if (it == values.end()) throw std::out_of_range("class function has no value at " + type.str());
    return it->second;
}

BigInt class_size(const Partition& cycle_type) {
    BigInt denom = 1;
    const auto m = cycle_type.multiplicities();
    for (std::size_t k = 1; k < m.size(); ++k) {
        if (!m[k]) continue;
        BigInt pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), k, static_cast<unsigned long>(m[k]));
        denom *= pw * factorial(static_cast<unsigned long>(m[k]));
    }
    return factorial(static_cast<unsigned long>(cycle_type.size())) / denom;
}

int cycle_count(const Partition& cycle_type) { return cycle_type.parts(); }

int cycles_of_length(const Partition& cycle_type, int k) {
    return static_cast<int>(std::count(cycle_type.rows().begin(), cycle_type.rows().end(), k));
}

ClassFunction two_pow_alpha(int n) {
    return ClassFunction::from(n, [](const Partition& p) {
        BigInt r;
        mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(p.parts()));
        return Rational(r);
    });
}

ClassFunction alpha_k_two_pow_alpha(int n, int k) {
    return ClassFunction::from(n, [k](const Partition& p) {
        BigInt r;
        mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(p.parts()));
        return Rational(r * cycles_of_length(p, k));
    });
}

ClassFunction alpha_k(int n, int k) {
    return ClassFunction::from(n, [k](const Partition& p) { return Rational(cycles_of_length(p, k)); });
}

SymPoly monomial_sym(const Partition& lambda, int v) {
    check_variables(lambda, v);
    SymPoly r(v);
    Exponents e(static_cast<std::size_t>(v), 0);
    std::copy(lambda.rows().begin(), lambda.rows().end(), e.begin());
    std::sort(e.begin(), e.end());
    do {
        r.add_term(e, 1);
    } while (std::next_permutation(e.begin(), e.end()));
    return r;
}

SymPoly power_sum(int k, int v) {
    if (k < 1 || v < 1) throw std::invalid_argument("power_sum requires k >= 1 and v >= 1");
    SymPoly r(v);
    for (int i = 0; i < v; ++i) {
        Exponents e(static_cast<std::size_t>(v), 0);
        e[static_cast<std::size_t>(i)] = k;
        r.add_term(e, 1);
    }
    return r;
}

SymPoly complete_homogeneous(int k, int v) {
    SymPoly r(v);
    for (const auto& lambda : young::partitions(k))
        if (lambda.parts() <= v) r += monomial_sym(lambda, v);
    return r;
}

SymPoly schur(const Partition& lambda, int v) {
    check_variables(lambda, v);
    static std::mutex mu;
    static std::map<std::pair<Partition, int>, SymPoly> cache;
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find({lambda, v}); it != cache.end()) return it->second;
    }

    // a_delta s_lambda = a_{lambda+delta}, solved in the monomial basis: the
    // coefficient of x^{nu+delta} on the left is sum_w sgn(w) K_{lambda, sort(nu+delta-w delta)},
    // on the right [nu == lambda]. sort(...) strictly dominates nu for w != id,
    // so walking nu in reverse-lex order makes the system triangular.
    const auto vs = static_cast<std::size_t>(v);
    std::map<Partition, BigInt> kostka;
    std::vector<int> perm(vs);
    Exponents e(vs);
    for (const auto& nu : young::partitions(lambda.size())) {
        if (nu.parts() > v) continue;
        BigInt acc = nu == lambda ? 1 : 0;
        std::iota(perm.begin(), perm.end(), 0);
        while (std::next_permutation(perm.begin(), perm.end())) {
            bool ok = true;
            for (std::size_t i = 0; i < vs && ok; ++i) {
                e[i] = nu.row(static_cast<int>(i) + 1) - static_cast<int>(i) + perm[i];
                ok = e[i] >= 0;
            }
            if (!ok) continue;
            std::sort(e.begin(), e.end(), std::greater<>());
            while (!e.empty() && e.back() == 0) e.pop_back();
            auto it = kostka.find(Partition(e));
            e.resize(vs);
            if (it == kostka.end() || it->second == 0) continue;
            if (permutation_sign(perm) > 0) acc -= it->second;
            else acc += it->second;
        }
        kostka.emplace(nu, acc);
    }

    SymPoly r(v);
    for (const auto& [nu, k] : kostka)
        if (k != 0) r += monomial_sym(nu, v) * Rational(k);
    std::lock_guard lock(mu);
    cache.emplace(std::make_pair(lambda, v), r);
    return r;
}

SymPoly schur_by_tableaux(const Partition& lambda, int v) {
    check_variables(lambda, v);
    SymPoly r(v);
    std::vector<std::vector<int>> t;
    for (int len : lambda.rows()) t.emplace_back(static_cast<std::size_t>(len), 0);
    Exponents content(static_cast<std::size_t>(v), 0);
    tableaux_rec(lambda, v, t, 0, 0, content, r);
    return r;
}

Rational young_subgroup_average(const ClassFunction& f, const Partition& lambda) {
    if (lambda.size() != f.n) throw std::invalid_argument("partition size differs from class function degree");
    Rational acc = 0;
    std::vector<int> parts;
    young_subgroup_rec(lambda, 0, parts, BigInt(1), f, acc);
    BigInt order = 1;
    for (int r : lambda.rows()) order *= factorial(static_cast<unsigned long>(r));
    acc /= Rational(order);
    return acc;
}

SymPoly frobenius_ch(const ClassFunction& f, int v) {
    if (v < f.n) throw std::invalid_argument("frobenius_ch needs at least n variables");
    SymPoly r(v);
    for (const auto& lambda : young::partitions(f.n)) {
        const Rational avg = young_subgroup_average(f, lambda);
        if (avg != 0) r += monomial_sym(lambda, v) * avg;
    }
    return r;
}

std::vector<SignedSchur> border_strip_product(int k, const Partition& mu, int v) {
    if (v < mu.parts() + k) throw std::invalid_argument("border_strip_product needs v >= parts(mu) + k");
    std::vector<SignedSchur> out;
    for (auto& bs : young::border_strips(mu, k))
        out.push_back({bs.diagram, bs.strip_height % 2 == 1 ? 1 : -1});
    return out;
}

SymPoly expand(const std::vector<SignedSchur>& terms, int v) {
    SymPoly r(v);
    for (const auto& t : terms) r += schur(t.lambda, v) * Rational(t.sign);
    return r;
}

}  // namespace mfh::symfunc
