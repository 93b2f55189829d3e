// Walks through the Z[sqrt 3] counterexample: a PSD matrix whose Smith form
// has a diagonal entry that no unit can make positive at both embeddings.

#include <iostream>

#include "realsnf/realsnf.hpp"

int main() {
  using namespace realsnf;
  QuadRing ring(RingSpec::sqrt(3));
  auto spec = sqrt3_counterexample_spec(ring);
  auto m = build_counterexample(ring, spec);

  std::cout << "M = [[" << m(0, 0).to_string() << ", " << m(0, 1).to_string() << "], [" << m(1, 0).to_string()
            << ", " << m(1, 1).to_string() << "]]  (w = sqrt 3)\n";

  auto rep = verify_main_theorem(ring, m);
  std::cout << "PSD on both embeddings: " << (rep.input_psd ? "yes" : "no") << "\n";
  for (std::size_t k = 0; k < rep.snf_diagonals.size(); ++k)
    std::cout << "d" << k + 1 << " = " << rep.snf_diagonals[k].to_string() << "  signs " << rep.sign_data[k]
              << (rep.positivizable[k] ? "  positivizable\n" : "  no positive associate\n");
  const auto& fu = ring.fundamental_unit();
  std::cout << "fundamental unit " << fu.unit.to_string() << ", norm " << fu.norm.get_str() << "\n";
  std::cout << "conclusion: " << to_string(rep.conclusion) << "\n";
}
