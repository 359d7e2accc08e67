#pragma once

#include "suchain/chain.hpp"

#include <cstdint>
#include <string>

namespace suchain {

struct RunConfig {
  Case tag = Case::regular;
  double eps = 0.1;
  std::uint64_t seed = 7;
  int samples = 20;
  double t_end = 10.0;
  double dt = 1e-3;
  int max_degree = 4;
  std::string output_dir = ".";
};

// throws std::invalid_argument on eps = 0, dt <= 0, samples < 1, t_end <= 0
void validate(const RunConfig& cfg);
MagneticSystem make_system(const RunConfig& cfg);

// full certificate suite for the configured case
CertificateReport run_verify(const RunConfig& cfg);

// individual suites, shared with the acceptance runner
CertificateReport bracket_checks(const MagneticSystem& sys, std::mt19937_64& rng, int samples);
CertificateReport relation_checks(const MagneticSystem& sys, std::mt19937_64& rng, int samples);
CertificateReport rank_checks(const MagneticSystem& sys, std::mt19937_64& rng, int samples);
CertificateReport flow_checks(const MagneticSystem& sys, std::mt19937_64& rng, double t_end, double dt);
CertificateReport angle_checks(const MagneticSystem& sys, std::mt19937_64& rng, int samples);

}  // namespace suchain
