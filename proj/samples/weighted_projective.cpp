// Orbifold Chow ring of P(2,3,5) and the affine embedding of its mirror
// fibration, printed to stdout.
#include <iostream>

#include "orbichow/orbichow.hpp"

using namespace orbichow;

int main() {
  const auto stack = make_stack({2, 3, 5}, {1, 1, 1});
  const auto ring = orbifold_chow(stack);
  std::cout << "P(2,3,5): total dimension " << ring.total_dim() << "\n";
  for (const auto& [deg, dim] : ring.dims()) std::cout << "  degree " << to_string(deg) << ": " << dim << "\n";

  const auto emb = affine_embedding(stack->p, 3);
  std::cout << "\nembedding in A^" << emb.ambient_dim << "\n" << render_singular(emb);

  std::cout << "\nChow presentation\n" << render_latex(chow_presentation(stack, 3));
}
