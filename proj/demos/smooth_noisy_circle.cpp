// Smooth one noisy circle with each filter and print the resulting degrees.

#include <iostream>

#include "monochain/chain_io.hpp"
#include "monochain/filters.hpp"
#include "monochain/synth.hpp"

int main() {
  using namespace monochain;
  const Chain clean = gen_circle_chain(10, 3, 1.0);
  const Chain noisy = add_noise(clean, 0.005, 7);

  std::cout << "noise mse   " << format_number(mse(clean, noisy)) << '\n';
  std::cout << "raw         " << format_degree(signal_degree(noisy)) << '\n';
  std::cout << "ma3         " << format_degree(signal_degree(ma_filter(noisy, 3))) << '\n';
  std::cout << "ma5         " << format_degree(signal_degree(ma_filter(noisy, 5))) << '\n';
  std::cout << "sp          " << format_degree(signal_degree(sp_filter(noisy))) << '\n';
}
