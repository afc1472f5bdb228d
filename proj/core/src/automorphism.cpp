#include "grouplab/automorphism.hpp"

#include <numeric>
#include <random>

#include "grouplab/errors.hpp"

namespace grouplab {

Automorphism::Automorphism(const GroupTable &g, std::vector<Element> image)
    : image_(std::move(image)) {
  const std::size_t n = g.order();
  if (image_.size() != n)
    throw NotBijective("image array has wrong length");
  std::vector<char> seen(n, 0);
  for (auto v : image_) {
    if (v >= n || seen[v])
      throw NotBijective("image is not a bijection");
    seen[v] = 1;
  }
  if (image_[kIdentity] != kIdentity)
    throw NotBijective("identity is not fixed");
  auto bad = [&](std::size_t x, std::size_t y) {
    return image_[g.mul(Element(x), Element(y))] != g.mul(image_[x], image_[y]);
  };
  if (n <= 512) {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (bad(x, y))
          throw NotBijective("image does not respect multiplication");
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (int t = 0; t < 10'000; ++t)
      if (bad(pick(rng), pick(rng)))
        throw NotBijective("image does not respect multiplication");
  }
}

Automorphism Automorphism::trusted(std::vector<Element> image) {
  return Automorphism(std::move(image));
}

Automorphism Automorphism::identity(const GroupTable &g) {
  std::vector<Element> img(g.order());
  std::iota(img.begin(), img.end(), Element(0));
  return Automorphism(std::move(img));
}

Automorphism Automorphism::inner(const GroupTable &g, Element x) {
  std::vector<Element> img(g.order());
  for (std::size_t y = 0; y < img.size(); ++y)
    img[y] = g.conjugate(x, Element(y));
  return Automorphism(std::move(img));
}

Automorphism Automorphism::compose(const Automorphism &other) const {
  std::vector<Element> img(image_.size());
  for (std::size_t x = 0; x < img.size(); ++x)
    img[x] = image_[other.image_[x]];
  return Automorphism(std::move(img));
}

Automorphism Automorphism::inverse() const {
  std::vector<Element> img(image_.size());
  for (std::size_t x = 0; x < img.size(); ++x)
    img[image_[x]] = Element(x);
  return Automorphism(std::move(img));
}

unsigned Automorphism::order() const {
  std::vector<char> seen(image_.size(), 0);
  unsigned long long o = 1;
  for (std::size_t x = 0; x < image_.size(); ++x) {
    if (seen[x])
      continue;
    unsigned len = 0;
    for (std::size_t y = x; !seen[y]; y = image_[y]) {
      seen[y] = 1;
      ++len;
    }
    o = std::lcm(o, static_cast<unsigned long long>(len));
  }
  return static_cast<unsigned>(o);
}

bool Automorphism::is_identity() const {
  for (std::size_t x = 0; x < image_.size(); ++x)
    if (image_[x] != x)
      return false;
  return true;
}

} // namespace grouplab
