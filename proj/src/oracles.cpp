#include "mfh/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

#include "mfh/repnum.hpp"
#include "mfh/symfunc.hpp"

namespace mfh::oracles {

namespace {

void check_exact_n(int n, int lo) {
    if (n < lo || n > kMaxExactN)
        throw std::invalid_argument("exact oracles need " + std::to_string(lo) + " <= n <= 8, got " + std::to_string(n));
}

std::vector<std::vector<int>> all_permutations(int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

int perm_index(const std::vector<int>& p) {
    // Lehmer code; matches the lexicographic order of all_permutations.
    const int n = static_cast<int>(p.size());
    int idx = 0;
    for (int i = 0; i < n; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < n; ++j)
            if (p[static_cast<std::size_t>(j)] < p[static_cast<std::size_t>(i)]) ++smaller;
        idx = idx * (n - i) + smaller;
    }
    return idx;
}

}  // namespace

const QPoly& HeatKernelClassFn::at(const Partition& type) const {
    auto it = values.find(type);
    if (it == values.end()) throw std::out_of_range("no cycle type " + type.str() + " in S_" + std::to_string(n));
    return it->second;
}

HeatKernelClassFn heat_kernel(int n) {
    check_exact_n(n, 1);
    HeatKernelClassFn hk;
    hk.n = n;
    const BigInt nf = factorial(static_cast<unsigned long>(n));
    const auto shapes = young::partitions(n);
    for (const auto& type : shapes) {
        QPoly p;
        for (const auto& lam : shapes) {
            const BigInt chi = repnum::character(lam, type);
            if (chi == 0) continue;
            p += QPoly::monomial(static_cast<int>(repnum::rho(lam)), ratio(repnum::dimension(lam) * chi, nf));
        }
        hk.values.emplace(type, std::move(p));
    }
    return hk;
}

double heat_kernel_matrix_deviation(int n, std::span<const double> ts) {
    if (n < 1 || n > 5) throw std::invalid_argument("matrix heat kernel needs 1 <= n <= 5");
    const auto perms = all_permutations(n);
    const auto size = static_cast<Eigen::Index>(perms.size());
    Eigen::MatrixXd gen = Eigen::MatrixXd::Zero(size, size);
    for (Eigen::Index a = 0; a < size; ++a) {
        const auto& p = perms[static_cast<std::size_t>(a)];
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                std::vector<int> q = p;
                for (auto& v : q) v = v == i ? j : (v == j ? i : v);  // (ij) composed on the left
                gen(a, perm_index(q)) += 1.0;
                gen(a, a) -= 1.0;
            }
    }
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gen);
    const HeatKernelClassFn hk = heat_kernel(n);
    std::vector<Partition> types;
    types.reserve(perms.size());
    for (const auto& p : perms) types.push_back(cycle_type(p));

    double worst = 0.0;
    for (double t : ts) {
        const Eigen::VectorXd ex = (es.eigenvalues().array() * t).exp();
        // Row of the identity permutation, which is index 0.
        const Eigen::VectorXd row = es.eigenvectors() * (ex.asDiagonal() * es.eigenvectors().row(0).transpose());
        for (Eigen::Index a = 0; a < size; ++a) {
            const double expect = static_cast<double>(hk.at(types[static_cast<std::size_t>(a)]).eval(t));
            worst = std::max(worst, std::fabs(row(a) - expect));
        }
    }
    return worst;
}

QPoly brute_force_weighted(int n, int k) {
    check_exact_n(n, 1);
    if (k < 1 || k > n) throw std::invalid_argument("brute_force_weighted needs 1 <= k <= n");
    const HeatKernelClassFn hk = heat_kernel(n);
    QPoly out;
    for (const auto& [type, p] : hk.values) {
        const int ak = symfunc::cycles_of_length(type, k);
        if (ak == 0) continue;
        const BigInt w = symfunc::class_size(type) * ak * (BigInt(1) << symfunc::cycle_count(type));
        out += p * Rational(w);
    }
    return out;
}

QPoly brute_force_partition_function(int n) {
    check_exact_n(n, 1);
    const HeatKernelClassFn hk = heat_kernel(n);
    QPoly out;
    for (const auto& [type, p] : hk.values)
        out += p * Rational(symfunc::class_size(type) * (BigInt(1) << symfunc::cycle_count(type)));
    return out;
}

Partition cycle_type(std::span<const int> perm) {
    const std::size_t n = perm.size();
    std::vector<char> seen(n, 0);
    std::vector<int> lengths;
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        int len = 0;
        for (std::size_t x = s; !seen[x]; x = static_cast<std::size_t>(perm[x])) {
            seen[x] = 1;
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.rbegin(), lengths.rend());
    return Partition(lengths);
}

QuantumObservables quantum_observables(int n, double beta) {
    check_exact_n(n, 2);
    using Mat = Eigen::MatrixXcd;
    using C = std::complex<double>;
    Mat sx(2, 2), sy(2, 2), sz(2, 2);
    sx << 0, 1, 1, 0;
    sy << 0, C(0, -1), C(0, 1), 0;
    sz << 1, 0, 0, -1;
    const Mat id2 = Mat::Identity(2, 2);

    // sigma^a acting on site i: I x ... x sigma x ... x I.
    auto site_op = [&](const Mat& s, int site) {
        Mat m = Mat::Identity(1, 1);
        for (int j = 0; j < n; ++j) {
            const Mat& f = j == site ? s : id2;
            Mat next(m.rows() * 2, m.cols() * 2);
            for (Eigen::Index r = 0; r < m.rows(); ++r)
                for (Eigen::Index c = 0; c < m.cols(); ++c) next.block(2 * r, 2 * c, 2, 2) = m(r, c) * f;
            m = std::move(next);
        }
        return m;
    };

    const Eigen::Index dim = Eigen::Index{1} << n;
    std::vector<Mat> xs, ys, zs;
    for (int i = 0; i < n; ++i) {
        xs.push_back(site_op(sx, i));
        ys.push_back(site_op(sy, i));
        zs.push_back(site_op(sz, i));
    }
    Mat h = Mat::Zero(dim, dim);
    Mat mz = Mat::Zero(dim, dim);
    for (int i = 0; i < n; ++i) {
        mz += zs[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < n; ++j) {
            const auto a = static_cast<std::size_t>(i), b = static_cast<std::size_t>(j);
            h -= 0.25 * (xs[a] * xs[b] + ys[a] * ys[b] + zs[a] * zs[b]);
        }
    }
    if (h.imag().cwiseAbs().maxCoeff() > 1e-14) throw std::logic_error("Hamiltonian is not real");
    const Eigen::MatrixXd hr = h.real();
    const Eigen::VectorXd mz_diag = mz.real().diagonal();

    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(hr);
    const Eigen::VectorXd& ev = es.eigenvalues();
    const double shift = ev.minCoeff();
    const Eigen::VectorXd w = (-beta * (ev.array() - shift)).exp();
    // Diagonal of (sum sigma^z)^2 in the eigenbasis.
    const Eigen::VectorXd m2_eig = es.eigenvectors().cwiseAbs2().transpose() * mz_diag.cwiseAbs2();
    const double zs_shifted = w.sum();
    QuantumObservables out;
    out.Z_q = zs_shifted * std::exp(-beta * shift);
    out.m2_q = w.dot(m2_eig) / zs_shifted;
    return out;
}

double quantum_z_constant(int n, double beta) { return std::exp(beta * n * (n - 1) / 8.0); }

}  // namespace mfh::oracles
