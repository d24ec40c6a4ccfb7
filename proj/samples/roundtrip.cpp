// Build a standard pair, check it, recover its parameters and print the sequences.

#include <iostream>

#include "golay/golay.hpp"
#include "golay/io.hpp"

int main() {
  using namespace golay;
  // pi = (3,1,4,2) in one-based form
  const StandardParams params{4, 4, {2, 0, 3, 1}, {1, 2, 3, 0}, 1, 3};
  const ArrayPair pair = construct_standard(params);
  std::cout << "complementary: " << std::boolalpha << is_gap(pair.f, pair.g) << '\n';

  const Decomposition d = decompose(pair.f, pair.g);
  std::cout << "recovered: " << to_json(d.params).dump() << '\n';
  std::cout << "replay ok: " << (replay(d.certificate) == pair) << '\n';

  for (const auto& s : {project_sequence(pair.f), project_sequence(pair.g)}) {
    for (std::size_t i = 0; i < s.size(); ++i) std::cout << (i ? "," : "") << s[i];
    std::cout << '\n';
  }
  std::cout << "sequences form a GCP: " << is_gcp(4, project_sequence(pair.f), project_sequence(pair.g)) << '\n';
}
