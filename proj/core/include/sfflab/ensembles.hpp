// ensembles.hpp — GOE sampling, symmetric eigendecomposition, spectra

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "sfflab/errors.hpp"

namespace sfflab {

struct GoeConfig {
    int dim = 2;
    double sigma = 1.0;      // std. dev. of pre-symmetrization entries
    int count = 1;           // number of realizations
    std::uint64_t base_seed = 0;

    GoeConfig(int dim_, double sigma_, int count_, std::uint64_t base_seed_);
    GoeConfig() = default;
};

// Real symmetric matrix, exactly symmetric by construction. Carries the
// realization ordinal it was sampled as (or -1) so eigensolver failures can
// name the offending realization.
class SymmetricMatrix {
public:
    SymmetricMatrix(Eigen::MatrixXd entries, long ordinal = -1);

    int dim() const { return static_cast<int>(m_.rows()); }
    long ordinal() const { return ordinal_; }
    const Eigen::MatrixXd& matrix() const { return m_; }
    double trace() const { return m_.trace(); }

private:
    Eigen::MatrixXd m_;
    long ordinal_;
};

// Sorted real eigenvalues of one Hamiltonian realization.
class Spectrum {
public:
    static Spectrum from_sorted(std::vector<double> eigenvalues);
    static Spectrum from_unsorted(std::vector<double> eigenvalues);

    int dim() const { return static_cast<int>(e_.size()); }
    const std::vector<double>& values() const { return e_; }
    double operator[](int n) const { return e_[static_cast<std::size_t>(n)]; }
    double min() const { return e_.front(); }
    double max() const { return e_.back(); }
    double spread() const { return e_.back() - e_.front(); }

private:
    explicit Spectrum(std::vector<double> e) : e_(std::move(e)) {}
    std::vector<double> e_;
};

struct SpectralStats {
    double mean = 0.0;
    double variance = 0.0;
};

// H = (X + X^T)/2 with X_ij iid N(0, sigma^2); pure function of
// (config.base_seed, index).
SymmetricMatrix sample_goe(const GoeConfig& config, std::uint64_t index);

// Ascending eigenvalues. Throws NumericalError (naming the realization
// ordinal) if the eigensolver does not converge.
Spectrum eigenvalues(const SymmetricMatrix& m);

struct EigenSystem {
    Spectrum spectrum;
    Eigen::MatrixXd vectors; // columns, matching spectrum order
};

EigenSystem eigensystem(const SymmetricMatrix& m);

// Uniform-weight mean and population variance of the spectrum.
SpectralStats spectral_stats(const Spectrum& s);

// Semicircle support radius sigma*sqrt(2 d) for this sampling convention.
double semicircle_radius(int dim, double sigma);

// JSON persistence: {"dim":d,"sigma":s,"base_seed":u,"spectra":[[...],...]},
// eigenvalues ascending, full binary64 round-trip precision.
void save_spectra_json(const std::string& path, const GoeConfig& config,
                       const std::vector<Spectrum>& spectra);
std::pair<GoeConfig, std::vector<Spectrum>> load_spectra_json(const std::string& path);

} // namespace sfflab
