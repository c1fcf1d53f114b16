#include "sfflab/ensembles.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "sfflab/rng.hpp"

namespace sfflab {

GoeConfig::GoeConfig(int dim_, double sigma_, int count_, std::uint64_t base_seed_)
    : dim(dim_), sigma(sigma_), count(count_), base_seed(base_seed_) {
    if (dim < 2) throw std::invalid_argument("GoeConfig: dim must be >= 2, got " + std::to_string(dim));
    if (!(sigma > 0.0) || !std::isfinite(sigma))
        throw std::invalid_argument("GoeConfig: sigma must be positive and finite");
    if (count < 1) throw std::invalid_argument("GoeConfig: count must be >= 1, got " + std::to_string(count));
}

SymmetricMatrix::SymmetricMatrix(Eigen::MatrixXd entries, long ordinal)
    : m_(std::move(entries)), ordinal_(ordinal) {
    if (m_.rows() != m_.cols())
        throw std::invalid_argument("SymmetricMatrix: matrix must be square");
    for (Eigen::Index i = 0; i < m_.rows(); ++i) {
        for (Eigen::Index j = i + 1; j < m_.cols(); ++j) {
            if (m_(i, j) != m_(j, i))
                throw std::invalid_argument("SymmetricMatrix: entries must be exactly symmetric");
            if (!std::isfinite(m_(i, j)))
                throw std::invalid_argument("SymmetricMatrix: entries must be finite");
        }
        if (!std::isfinite(m_(i, i)))
            throw std::invalid_argument("SymmetricMatrix: entries must be finite");
    }
}

Spectrum Spectrum::from_sorted(std::vector<double> eigenvalues) {
    if (eigenvalues.empty()) throw std::invalid_argument("Spectrum: empty eigenvalue list");
    for (std::size_t n = 0; n < eigenvalues.size(); ++n) {
        if (!std::isfinite(eigenvalues[n]))
            throw std::invalid_argument("Spectrum: eigenvalue " + std::to_string(n) + " is not finite");
        if (n > 0 && eigenvalues[n] < eigenvalues[n - 1])
            throw std::invalid_argument("Spectrum: eigenvalues must be non-decreasing");
    }
    return Spectrum(std::move(eigenvalues));
}

Spectrum Spectrum::from_unsorted(std::vector<double> eigenvalues) {
    std::sort(eigenvalues.begin(), eigenvalues.end());
    return from_sorted(std::move(eigenvalues));
}

SymmetricMatrix sample_goe(const GoeConfig& config, std::uint64_t index) {
    if (index >= static_cast<std::uint64_t>(config.count))
        throw std::invalid_argument("sample_goe: index " + std::to_string(index) +
                                    " out of range for count " + std::to_string(config.count));
    const int d = config.dim;
    GaussianStream g(realization_stream(config.base_seed, index));
    Eigen::MatrixXd x(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            x(i, j) = g.next(config.sigma);

    Eigen::MatrixXd h(d, d);
    for (int i = 0; i < d; ++i) {
        h(i, i) = x(i, i);
        for (int j = i + 1; j < d; ++j) {
            const double v = (x(i, j) + x(j, i)) / 2.0;
            h(i, j) = v;
            h(j, i) = v;
        }
    }
    return SymmetricMatrix(std::move(h), static_cast<long>(index));
}

namespace {

Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>
solve_symmetric(const SymmetricMatrix& m, bool with_vectors) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.compute(m.matrix(), with_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        std::ostringstream msg;
        msg << "eigensolver failed to converge on matrix";
        if (m.ordinal() >= 0) msg << " (realization index " << m.ordinal() << ")";
        throw NumericalError(msg.str());
    }
    return solver;
}

} // namespace

Spectrum eigenvalues(const SymmetricMatrix& m) {
    auto solver = solve_symmetric(m, false);
    std::vector<double> e(solver.eigenvalues().data(),
                          solver.eigenvalues().data() + solver.eigenvalues().size());
    return Spectrum::from_sorted(std::move(e));
}

EigenSystem eigensystem(const SymmetricMatrix& m) {
    auto solver = solve_symmetric(m, true);
    std::vector<double> e(solver.eigenvalues().data(),
                          solver.eigenvalues().data() + solver.eigenvalues().size());
    return EigenSystem{Spectrum::from_sorted(std::move(e)), solver.eigenvectors()};
}

SpectralStats spectral_stats(const Spectrum& s) {
    const auto& e = s.values();
    const double d = static_cast<double>(e.size());
    double mean = 0.0;
    for (double v : e) mean += v;
    mean /= d;
    double var = 0.0;
    for (double v : e) var += (v - mean) * (v - mean);
    var /= d;
    return SpectralStats{mean, var};
}

double semicircle_radius(int dim, double sigma) {
    return sigma * std::sqrt(2.0 * dim);
}

void save_spectra_json(const std::string& path, const GoeConfig& config,
                       const std::vector<Spectrum>& spectra) {
    nlohmann::ordered_json j;
    j["dim"] = config.dim;
    j["sigma"] = config.sigma;
    j["base_seed"] = config.base_seed;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& s : spectra) arr.push_back(s.values());
    j["spectra"] = std::move(arr);
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("save_spectra_json: cannot open " + path);
    out << j.dump(1) << "\n";
}

std::pair<GoeConfig, std::vector<Spectrum>> load_spectra_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("load_spectra_json: cannot open " + path);
    nlohmann::json j;
    in >> j;
    const int dim = j.at("dim").get<int>();
    std::vector<Spectrum> spectra;
    for (const auto& row : j.at("spectra")) {
        auto s = Spectrum::from_sorted(row.get<std::vector<double>>());
        if (s.dim() != dim)
            throw std::invalid_argument("load_spectra_json: spectrum length mismatch in " + path);
        spectra.push_back(std::move(s));
    }
    GoeConfig cfg(dim, j.at("sigma").get<double>(),
                  std::max<int>(1, static_cast<int>(spectra.size())),
                  j.at("base_seed").get<std::uint64_t>());
    return {cfg, std::move(spectra)};
}

} // namespace sfflab
