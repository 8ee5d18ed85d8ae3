#ifndef NLCS_FOCK_CORE_HPP
#define NLCS_FOCK_CORE_HPP

#include <Eigen/Dense>
#include <complex>
#include <span>
#include <vector>

#include "nlcs/nonlinearity.hpp"

namespace nlcs {

/// Normalized state vector over |0>..|N-1> with a record of the
/// estimated squared-norm weight dropped beyond the truncation.
class FockState {
 public:
    /// Normalizes the coefficients; rejects empty or zero vectors.
    explicit FockState(std::vector<std::complex<double>> coeffs,
                       double tail_bound = 0.0);

    int dim() const { return static_cast<int>(coeffs_.size()); }
    std::complex<double> coeff(int n) const { return coeffs_[n]; }
    std::span<const std::complex<double>> coeffs() const { return coeffs_; }
    double tail_bound() const { return tail_bound_; }

    double norm() const;

    /// <this|other>; the shorter vector is zero-padded.
    std::complex<double> inner(const FockState& other) const;

    static FockState vacuum(int dim);

 private:
    std::vector<std::complex<double>> coeffs_;
    double tail_bound_;
};

/// Truncated matrices of a and a-dagger, a|n> = sqrt(n)|n-1>.
struct LadderMatrices {
    Eigen::MatrixXcd annihilate;
    Eigen::MatrixXcd create;
    int dim;

    static LadderMatrices build(int dim);
};

/// a f(n) as a dim x dim matrix: entry (n-1, n) = sqrt(n) f(n).
Eigen::MatrixXcd deformed_annihilation(const NonlinearityFunction& f, int dim);

enum class Ladder { Annihilate, Create };

/// <state| op_1 ... op_k |state> by repeated operator application in a
/// space padded by one level per creation operator in the word.
std::complex<double> expectation(const FockState& state,
                                 std::span<const Ladder> word);
std::complex<double> expectation(const FockState& state,
                                 std::initializer_list<Ladder> word);

/// exp(M) by scaling-and-squaring over a truncated Taylor core.
Eigen::MatrixXcd matrix_exponential(const Eigen::MatrixXcd& m);

/// exp(alpha C+ - alpha* A)|0> with A = a f(n), C = a / f(n); the
/// displacement-type construction of the combination state when f is
/// the combined nonlinearity.
FockState displacement_apply(const NonlinearityFunction& f,
                             std::complex<double> alpha, int dim);

/// Max deviation of [A,B+] and [B,A+] from identity on the interior
/// (dim-1)x(dim-1) block, A = a f(n), B = a / f(n). The last row and
/// column are truncation-corrupted and excluded.
double canonical_commutator_check(const NonlinearityFunction& f, int dim);

/// ||(a f(n) - alpha)|psi>|| in the truncated norm.
double eigenvalue_residual(const NonlinearityFunction& f,
                           std::complex<double> alpha, const FockState& state);

}  // namespace nlcs

#endif
