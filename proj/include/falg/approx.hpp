/*
   Copyright 2026 The falg authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef FALG_APPROX_HPP
#define FALG_APPROX_HPP

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "higher_derivations.hpp"

namespace falg {

/// One accepted stage of an approximating sequence. Residuals and norms are
/// recomputed from the returned coefficients, never echoed from the solver.
struct ApproxCertificate {
    PowerSeries<Complex> p{1};
    unsigned stage = 0;             // the n (or diagonal k) this stage serves
    unsigned degree = 0;            // degree actually used after escalation
    double bound = 0.0;             // claimed bound, 1/stage
    double sup_measured = 0.0;      // sampled sup on the unit circle
    double coeff_l1 = 0.0;          // sum |c_j|, a true upper bound for the sup
    std::vector<double> residuals;  // |D_i(p) - alpha_i|
    bool meets_bound = false;
};

struct ApproxOptions {
    unsigned samples = 512;
    double safety = 0.01;     // sampling safety factor on the sup measurement
    unsigned max_retries = 8; // degree doublings before giving up
};

/// Minimum-coefficient-norm polynomial p of degree <= d with p(1) = 0 and
/// Taylor coefficients at 1 hitting the targets: D_i(p) = alpha_i for
/// i = 1..k. The constraint matrix holds binomial(j, i) (expansion of z^j
/// about 1). Rows are scaled to unit length before the orthogonal solve;
/// row scaling changes neither the solution set nor its minimum-norm point.
inline PowerSeries<Complex> hermite_min_norm(const std::vector<Complex>& targets,
                                             unsigned d) {
    const unsigned k = unsigned(targets.size());
    if (k < 1) throw SolverError("at least one target required");
    if (d < k) throw SolverError("degree " + std::to_string(d) +
                                 " cannot carry " + std::to_string(k + 1) + " constraints");

    Eigen::MatrixXcd A(k + 1, d + 1);
    for (unsigned j = 0; j <= d; ++j) A(0, j) = Complex(1.0, 0.0);
    for (unsigned i = 1; i <= k; ++i)
        for (unsigned j = 0; j <= d; ++j)
            A(i, j) = A(i - 1, j) * (double(j) - double(i) + 1.0) / double(i);

    Eigen::VectorXcd b(k + 1);
    b(0) = Complex(0.0, 0.0);
    for (unsigned i = 1; i <= k; ++i) b(i) = targets[i - 1];

    for (unsigned i = 0; i <= k; ++i) {
        const double r = A.row(i).norm();
        if (r > 0.0) {
            A.row(i) /= r;
            b(i) /= r;
        }
    }

    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXcd> cod(A);
    if (unsigned(cod.rank()) < k + 1)
        throw SolverError("constraint system unexpectedly rank-deficient");
    const Eigen::VectorXcd c = cod.solve(b);

    PowerSeries<Complex> p(std::max<int>(int(d), 1));
    for (unsigned j = 0; j <= d; ++j)
        p.set_coefficient(j == 0 ? Monomial() : Monomial::variable(0, j), c(int(j)));
    return p;
}

/// Rebuilds every reported quantity from the polynomial itself.
inline ApproxCertificate verify_certificate(const PowerSeries<Complex>& p,
                                            const std::vector<Complex>& targets,
                                            unsigned stage, unsigned degree, double bound,
                                            const ApproxOptions& opt) {
    ApproxCertificate cert;
    cert.p = p;
    cert.stage = stage;
    cert.degree = degree;
    cert.bound = bound;
    cert.sup_measured = p.is_zero() ? 0.0 : disc_sup_norm(p, 1.0, opt.samples);
    for (const auto& [m, c] : p.terms()) cert.coeff_l1 += std::abs(c);
    const std::vector<Complex> shifted = taylor_at_one(p);
    for (unsigned i = 1; i <= targets.size(); ++i) {
        const Complex got = i < shifted.size() ? shifted[i] : Complex(0.0, 0.0);
        cert.residuals.push_back(std::abs(got - targets[i - 1]));
    }
    cert.meets_bound = cert.sup_measured * (1.0 + opt.safety) < bound;
    return cert;
}

/// Stages n = 1..n_max with the default degree schedule d(n) = k n^2,
/// escalating (doubling) the degree until the measured sup norm clears 1/n.
/// Derivative targets are interpolatory, so they hold to roundoff at every
/// degree. Throws when the retry budget runs out, reporting the best stage.
inline std::vector<ApproxCertificate> approximating_sequence(
    const std::vector<Complex>& targets, unsigned n_max, ApproxOptions opt = {}) {
    if (n_max < 1) throw SolverError("n_max must be >= 1");
    const unsigned k = unsigned(targets.size());
    std::vector<ApproxCertificate> out;
    for (unsigned n = 1; n <= n_max; ++n) {
        const double bound = 1.0 / double(n);
        const unsigned base = std::max(k, k * n * n);
        ApproxCertificate best;
        for (unsigned attempt = 0; attempt <= opt.max_retries; ++attempt) {
            const unsigned d = base << attempt;
            const PowerSeries<Complex> p = hermite_min_norm(targets, d);
            ApproxCertificate cert = verify_certificate(p, targets, n, d, bound, opt);
            if (attempt == 0 || cert.sup_measured < best.sup_measured) best = cert;
            if (cert.meets_bound) break;
        }
        if (!best.meets_bound)
            throw SolverError("stage " + std::to_string(n) + " exhausted retries; best sup " +
                              std::to_string(best.sup_measured) + " vs bound " +
                              std::to_string(bound));
        out.push_back(std::move(best));
    }
    return out;
}

/// Diagonal selection: for each level k <= K one polynomial obeying both
/// 1/k bounds at once: sup norm below 1/k and the first k targets hit
/// within 1/k (they are hit to roundoff).
inline std::vector<ApproxCertificate> diagonal_sequence(const std::vector<Complex>& stream,
                                                        unsigned K, ApproxOptions opt = {}) {
    if (K < 1) throw SolverError("K must be >= 1");
    if (stream.empty()) throw SolverError("at least one target required");
    std::vector<ApproxCertificate> out;
    for (unsigned k = 1; k <= K; ++k) {
        const std::vector<Complex> targets(
            stream.begin(), stream.begin() + std::min<size_t>(k, stream.size()));
        const double bound = 1.0 / double(k);
        const unsigned kk = unsigned(targets.size());
        const unsigned base = std::max(kk, kk * k * k);
        ApproxCertificate best;
        for (unsigned attempt = 0; attempt <= opt.max_retries; ++attempt) {
            const unsigned d = base << attempt;
            const PowerSeries<Complex> p = hermite_min_norm(targets, d);
            ApproxCertificate cert = verify_certificate(p, targets, k, d, bound, opt);
            bool resid_ok = true;
            for (double r : cert.residuals) resid_ok = resid_ok && r < bound;
            cert.meets_bound = cert.meets_bound && resid_ok;
            if (attempt == 0 || cert.sup_measured < best.sup_measured) best = cert;
            if (cert.meets_bound) break;
        }
        if (!best.meets_bound)
            throw SolverError("diagonal level " + std::to_string(k) +
                              " exhausted retries; best sup " +
                              std::to_string(best.sup_measured) + " vs bound " +
                              std::to_string(bound));
        out.push_back(std::move(best));
    }
    return out;
}

/// The decomposition (x, {alpha_i}) = (x, {D_i x}) + (0, {alpha_i - D_i x}):
/// the first summand lies on the higher graph, the second in the tail ideal.
template <class C>
struct OntoWitness {
    ArElement<C> graph;
    ArElement<C> tail_part;
    bool verified = false;
};

template <class C>
OntoWitness<C> onto_witness(const PowerSeries<C>& x, const std::vector<C>& targets,
                            unsigned R) {
    if (R < 1 || targets.size() != R)
        throw ConfigError("witness needs exactly R tail targets");
    const RankSpec rank = RankSpec::inf_trunc(R);
    const HigherDerivation<C> D = taylor_higher_derivation<C>();

    std::vector<C> graph_tail(R, C{});
    std::vector<C> rest_tail(R, C{});
    for (unsigned i = 1; i <= R; ++i) {
        graph_tail[i - 1] = D(i, x);
        rest_tail[i - 1] = targets[i - 1] - graph_tail[i - 1];
    }
    OntoWitness<C> w{ArElement<C>{x, std::move(graph_tail), rank},
                     ArElement<C>{PowerSeries<C>::zero(x.truncation()), std::move(rest_tail),
                                  rank},
                     false};
    const ArElement<C> total = ar_add(w.graph, w.tail_part);
    const ArElement<C> want{x, targets, rank};
    w.verified = (total == want);
    return w;
}

}  // namespace falg

#endif  // FALG_APPROX_HPP
