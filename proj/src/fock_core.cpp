#include "nlcs/fock_core.hpp"

#include <algorithm>
#include <cmath>

#include "nlcs/errors.hpp"

namespace nlcs {

FockState::FockState(std::vector<std::complex<double>> coeffs,
                     double tail_bound)
    : coeffs_(std::move(coeffs)), tail_bound_(tail_bound) {
    if (coeffs_.empty()) throw ConfigError("FockState needs dim >= 1");
    double n2 = 0.0;
    for (const auto& c : coeffs_) n2 += std::norm(c);
    if (!(n2 > 0.0) || !std::isfinite(n2)) {
        throw ConfigError("FockState coefficients are zero or non-finite");
    }
    const double inv = 1.0 / std::sqrt(n2);
    for (auto& c : coeffs_) c *= inv;
}

double FockState::norm() const {
    double n2 = 0.0;
    for (const auto& c : coeffs_) n2 += std::norm(c);
    return std::sqrt(n2);
}

std::complex<double> FockState::inner(const FockState& other) const {
    const int n = std::min(dim(), other.dim());
    std::complex<double> acc = 0.0;
    for (int i = 0; i < n; ++i) {
        acc += std::conj(coeffs_[i]) * other.coeffs_[i];
    }
    return acc;
}

FockState FockState::vacuum(int dim) {
    std::vector<std::complex<double>> c(dim, 0.0);
    c[0] = 1.0;
    return FockState(std::move(c));
}

LadderMatrices LadderMatrices::build(int dim) {
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(dim, dim);
    for (int n = 1; n < dim; ++n) {
        a(n - 1, n) = std::sqrt(double(n));
    }
    return LadderMatrices{a, a.adjoint(), dim};
}

Eigen::MatrixXcd deformed_annihilation(const NonlinearityFunction& f,
                                       int dim) {
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(dim, dim);
    for (int n = 1; n < dim; ++n) {
        a(n - 1, n) = std::sqrt(double(n)) * f.value(n);
    }
    return a;
}

namespace {

void apply_annihilate(std::vector<std::complex<double>>& v) {
    const int n = static_cast<int>(v.size());
    for (int k = 1; k < n; ++k) {
        v[k - 1] = std::sqrt(double(k)) * v[k];
    }
    v[n - 1] = 0.0;
}

void apply_create(std::vector<std::complex<double>>& v) {
    const int n = static_cast<int>(v.size());
    for (int k = n - 1; k >= 1; --k) {
        v[k] = std::sqrt(double(k)) * v[k - 1];
    }
    v[0] = 0.0;
}

}  // namespace

std::complex<double> expectation(const FockState& state,
                                 std::span<const Ladder> word) {
    int creates = 0;
    for (const Ladder op : word) {
        if (op != Ladder::Annihilate && op != Ladder::Create) {
            throw ConfigError("unknown ladder symbol in word");
        }
        if (op == Ladder::Create) ++creates;
    }
    // One extra level per a-dagger so nothing leaks past the truncation.
    const int dim = state.dim() + creates;
    std::vector<std::complex<double>> v(state.coeffs().begin(),
                                        state.coeffs().end());
    v.resize(dim, 0.0);
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        if (*it == Ladder::Annihilate) {
            apply_annihilate(v);
        } else {
            apply_create(v);
        }
    }
    std::complex<double> acc = 0.0;
    for (int k = 0; k < state.dim(); ++k) {
        acc += std::conj(state.coeff(k)) * v[k];
    }
    return acc;
}

std::complex<double> expectation(const FockState& state,
                                 std::initializer_list<Ladder> word) {
    return expectation(state, std::span<const Ladder>(word.begin(),
                                                      word.size()));
}

Eigen::MatrixXcd matrix_exponential(const Eigen::MatrixXcd& m) {
    const int dim = static_cast<int>(m.rows());
    const double norm = m.cwiseAbs().rowwise().sum().maxCoeff();  // inf-norm
    int squarings = 0;
    if (norm > 0.5) {
        squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
    }
    const Eigen::MatrixXcd scaled = m / std::pow(2.0, squarings);

    Eigen::MatrixXcd result = Eigen::MatrixXcd::Identity(dim, dim);
    Eigen::MatrixXcd term = Eigen::MatrixXcd::Identity(dim, dim);
    for (int k = 1; k <= 64; ++k) {
        term = (term * scaled) / double(k);
        result += term;
        if (term.cwiseAbs().maxCoeff() < 1e-18) break;
        if (k == 64) {
            throw TruncationError("matrix exponential series did not settle");
        }
    }
    for (int s = 0; s < squarings; ++s) result = result * result;
    return result;
}

FockState displacement_apply(const NonlinearityFunction& f,
                             std::complex<double> alpha, int dim) {
    if (std::abs(alpha) >= f.domain_radius()) {
        throw DomainError("|alpha| outside the domain of " + f.name());
    }
    for (int n = 1; n < dim; ++n) {
        if (!(std::abs(f.value(n)) > 0.0)) {
            throw DomainError(f.name() + " vanishes at n = " +
                              std::to_string(n));
        }
    }
    const Eigen::MatrixXcd a_def = deformed_annihilation(f, dim);
    Eigen::MatrixXcd c_def = Eigen::MatrixXcd::Zero(dim, dim);
    for (int n = 1; n < dim; ++n) {
        c_def(n - 1, n) = std::sqrt(double(n)) / f.value(n);
    }
    const Eigen::MatrixXcd generator =
        alpha * c_def.adjoint() - std::conj(alpha) * a_def;
    const Eigen::VectorXcd psi =
        matrix_exponential(generator).col(0);  // acting on |0>
    std::vector<std::complex<double>> coeffs(psi.data(), psi.data() + dim);
    return FockState(std::move(coeffs));
}

double canonical_commutator_check(const NonlinearityFunction& f, int dim) {
    const Eigen::MatrixXcd a_f = deformed_annihilation(f, dim);
    Eigen::MatrixXcd b = Eigen::MatrixXcd::Zero(dim, dim);
    for (int n = 1; n < dim; ++n) {
        b(n - 1, n) = std::sqrt(double(n)) / f.value(n);
    }
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(dim, dim);
    const Eigen::MatrixXcd c1 = a_f * b.adjoint() - b.adjoint() * a_f - id;
    const Eigen::MatrixXcd c2 = b * a_f.adjoint() - a_f.adjoint() * b - id;
    const int m = dim - 1;  // interior block only
    return std::max(c1.topLeftCorner(m, m).cwiseAbs().maxCoeff(),
                    c2.topLeftCorner(m, m).cwiseAbs().maxCoeff());
}

double eigenvalue_residual(const NonlinearityFunction& f,
                           std::complex<double> alpha,
                           const FockState& state) {
    const int dim = state.dim();
    double acc = 0.0;
    for (int n = 0; n < dim; ++n) {
        std::complex<double> v = -alpha * state.coeff(n);
        if (n + 1 < dim) {
            v += std::sqrt(n + 1.0) * f.value(n + 1) * state.coeff(n + 1);
        }
        acc += std::norm(v);
    }
    return std::sqrt(acc);
}

}  // namespace nlcs
