#include "flatwitness/errors.hpp"
#include "flatwitness/witness.hpp"

namespace flatwitness::reference {

WitnessCertificate synthesize_witness(const PointwiseRelation& rel,
                                      const WitnessOptions& options) {
  rel.validate();
  const double threshold = options.zero_threshold.value_or(default_zero_threshold(rel));
  const std::size_t n = rel.n;

  WitnessCertificate cert;
  cert.n = n;
  cert.k = n;
  cert.points = rel.points;
  cert.rho.resize(rel.points * n * n);
  cert.mu.resize(rel.points * n);

  std::vector<Complex> row(n);
  for (std::size_t x = 0; x < rel.points; ++x) {
    const auto r = rel.r_row(x);
    const auto m = rel.m_row(x);
    if (rel.weights[x] > 0.0) {
      Complex s = 0.0;
      double rn = 0.0, mn = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        s += r[i] * m[i];
        rn += std::norm(r[i]);
        mn += std::norm(m[i]);
      }
      const double residual = std::abs(s) / (1.0 + std::sqrt(rn) * std::sqrt(mn));
      if (residual > options.relation_tol) throw NotARelation(x, residual);
    }

    for (std::size_t i = 0; i < n; ++i) row[i] = std::conj(r[i]);
    const OrthonormalFrame frame = orthocomplement_frame(row, threshold);
    for (std::size_t j = 0; j < n; ++j) {
      const auto e = frame.vector(j);
      Complex mu = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        cert.rho[(x * n + i) * n + j] = e[i];
        mu += m[i] * std::conj(e[i]);
      }
      cert.mu[x * n + j] = mu;
    }
  }
  return cert;
}

}  // namespace flatwitness::reference
