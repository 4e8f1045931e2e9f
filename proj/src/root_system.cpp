#include "wonderk/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <set>

#include "wonderk/error.hpp"

namespace wonderk {

bool is_admissible(Family family, int rank) {
  switch (family) {
  case Family::A:
    return rank >= 1;
  case Family::B:
  case Family::C:
    return rank >= 2;
  case Family::D:
    return rank >= 3;
  case Family::E:
    return rank >= 6 && rank <= 8;
  case Family::F:
    return rank == 4;
  case Family::G:
    return rank == 2;
  }
  return false;
}

CartanLabel CartanLabel::parse(std::string_view text) {
  auto fail = [&]() -> CartanLabel {
    throw ValidationError("InvalidCartanLabel",
                          "invalid Cartan label '" + std::string(text) + "'");
  };
  if (text.size() < 2)
    return fail();
  const char f = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  if (f < 'A' || f > 'G')
    return fail();
  int rank = 0;
  const auto digits = text.substr(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), rank);
  if (ec != std::errc() || ptr != digits.data() + digits.size())
    return fail();
  CartanLabel label{static_cast<Family>(f - 'A'), rank};
  if (!is_admissible(label.family, rank))
    return fail();
  return label;
}

std::string CartanLabel::to_string() const {
  return std::string(1, static_cast<char>('A' + static_cast<int>(family))) +
         std::to_string(rank);
}

bool Root::positive() const {
  return std::all_of(simple_coords.begin(), simple_coords.end(),
                     [](std::int64_t c) { return c >= 0; });
}

IntMatrix cartan_matrix(const CartanLabel &label) {
  if (!is_admissible(label.family, label.rank))
    throw ValidationError("InvalidCartanLabel",
                          "inadmissible Cartan label " + label.to_string());
  const std::size_t n = static_cast<std::size_t>(label.rank);
  IntMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    a(i, i) = 2;
  auto link = [&](std::size_t i, std::size_t j) { a(i, j) = a(j, i) = -1; };
  // Bourbaki numbering throughout.
  switch (label.family) {
  case Family::A:
    for (std::size_t i = 0; i + 1 < n; ++i)
      link(i, i + 1);
    break;
  case Family::B:
    for (std::size_t i = 0; i + 1 < n; ++i)
      link(i, i + 1);
    a(n - 1, n - 2) = -2; // alpha_n short
    break;
  case Family::C:
    for (std::size_t i = 0; i + 1 < n; ++i)
      link(i, i + 1);
    a(n - 2, n - 1) = -2; // alpha_n long
    break;
  case Family::D:
    for (std::size_t i = 0; i + 2 < n; ++i)
      link(i, i + 1);
    link(n - 3, n - 1);
    break;
  case Family::E:
    link(0, 2);
    link(2, 3);
    link(1, 3);
    for (std::size_t i = 3; i + 1 < n; ++i)
      link(i, i + 1);
    break;
  case Family::F:
    link(0, 1);
    link(1, 2);
    link(2, 3);
    a(2, 1) = -2;
    break;
  case Family::G:
    a(0, 1) = -3; // alpha_1 short
    a(1, 0) = -1;
    break;
  }
  return a;
}

std::size_t expected_positive_root_count(const CartanLabel &label) {
  const std::size_t n = static_cast<std::size_t>(label.rank);
  switch (label.family) {
  case Family::A:
    return n * (n + 1) / 2;
  case Family::B:
  case Family::C:
    return n * n;
  case Family::D:
    return n * (n - 1);
  case Family::E:
    return n == 6 ? 36 : n == 7 ? 63 : 120;
  case Family::F:
    return 24;
  case Family::G:
    return 6;
  }
  return 0;
}

RootSystem::RootSystem(CartanLabel label, IntMatrix cartan)
    : label_(label), cartan_(std::move(cartan)) {
  const int r = rank();
  for (int j = 0; j < r; ++j)
    simple_roots_.push_back(cartan_.column(j));

  // Closure of the simple roots under simple reflections, in simple-root
  // coordinates: s_i(beta) = beta - <beta, alpha_i^vee> alpha_i.
  std::set<IntVector> seen;
  std::deque<IntVector> queue;
  for (int j = 0; j < r; ++j) {
    IntVector e(r, 0);
    e[j] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    IntVector beta = queue.front();
    queue.pop_front();
    for (int i = 0; i < r; ++i) {
      std::int64_t pairing = 0;
      for (int j = 0; j < r; ++j)
        pairing += beta[j] * cartan_(i, j);
      IntVector image = beta;
      image[i] -= pairing;
      if (seen.insert(image).second)
        queue.push_back(image);
    }
  }
  for (const auto &coords : seen) {
    Root root{coords, root_lattice_to_weight(coords)};
    const bool pos = root.positive();
    sign_of_root_[root.weight] = pos ? 1 : -1;
    if (pos)
      positive_.push_back(std::move(root));
  }
  std::sort(positive_.begin(), positive_.end(), [](const Root &a, const Root &b) {
    std::int64_t ha = 0, hb = 0;
    for (auto c : a.simple_coords)
      ha += c;
    for (auto c : b.simple_coords)
      hb += c;
    if (ha != hb)
      return ha < hb;
    return a.simple_coords > b.simple_coords;
  });
}

IntVector RootSystem::root_lattice_to_weight(const IntVector &simple_coords) const {
  return cartan_ * std::span<const std::int64_t>(simple_coords);
}

int RootSystem::root_sign(const IntVector &weight) const {
  auto it = sign_of_root_.find(weight);
  return it == sign_of_root_.end() ? 0 : it->second;
}

RootSystem build_root_system(const CartanLabel &label) {
  return RootSystem(label, cartan_matrix(label));
}

} // namespace wonderk
