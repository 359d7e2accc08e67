#include "suchain/system.hpp"

#include <stdexcept>

namespace suchain {

namespace {

MagneticSystem make(std::shared_ptr<const LieAlgebra> alg, VectorQ w, double eps, Case tag) {
  if (eps == 0.0) throw std::invalid_argument("eps must be nonzero");
  MagneticSystem s;
  s.alg = std::move(alg);
  s.W = std::move(w);
  s.W_d = to_double(s.W);
  s.sub = centralizer_of(*s.alg, s.W);
  s.eps = eps;
  s.eps_exact = Q3(mpq_class(eps));
  s.tag = tag;
  return s;
}

}  // namespace

MagneticSystem regular_system(double eps) {
  auto alg = std::make_shared<const LieAlgebra>(build_su3_chevalley());
  VectorQ w = VectorQ::Constant(8, Q3(0));
  w(0) = Q3::frac(1, 2);
  w(1) = Q3::frac(1, 2);
  return make(alg, w, eps, Case::regular);
}

MagneticSystem irregular_system(double eps) {
  auto alg = std::make_shared<const LieAlgebra>(build_su3_gellmann());
  // i*W = diag(-1,-1,2) = -sqrt3 lambda8, W = -sqrt3 e8
  VectorQ w = VectorQ::Constant(8, Q3(0));
  w(7) = Q3::sqrt3(-1);
  return make(alg, w, eps, Case::irregular);
}

const char* case_name(Case c) { return c == Case::regular ? "regular" : "irregular"; }

}  // namespace suchain
