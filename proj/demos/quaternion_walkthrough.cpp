// Builds the doubled loop over the quaternion group and prints the numbers
// the analysis pipeline is organized around.
#include <iostream>

#include "loopsmith/loopsmith.hpp"

int main() {
  using namespace loopsmith;

  const FiniteGroup q8 = preset("q8");
  const CheinEmbedding e = chein(q8);
  std::cout << "M(q8,2) has order " << e.loop.order << ", Moufang: "
            << (is_moufang(e.loop).ok ? "yes" : "no") << ", associative: "
            << (is_associative(e.loop).ok ? "yes" : "no") << "\n";

  const HalfGroup h = coset_fixing_subgroup(e);
  std::cout << "coset-fixing subgroup H has order " << h.size() << "\n";
  for (const Perm& f : h.elements) {
    const InvertedSet inv = inverted_set(e, f);
    std::cout << "  inverts {";
    for (std::size_t i = 0; i < inv.members.size(); ++i)
      std::cout << (i ? "," : "") << q8.names[inv.members[i]];
    std::cout << "}\n";
  }

  const HalfGroup aut = enumerate_automorphisms(e.loop);
  const HalfGroup half = enumerate_half_automorphisms(e.loop);
  const HalfSummary s = summarize(e.loop, half);
  std::cout << "|Aut(L)| = " << aut.size() << ", |Half(L)| = " << half.size()
            << ", nontrivial = " << s.nontrivial << "\n";
  return 0;
}
