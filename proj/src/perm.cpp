#include "tvk/perm.hpp"

#include <numeric>
#include <sstream>

#include "tvk/errors.hpp"

namespace tvk {

Perm Perm::identity(int degree) {
  if (degree < kMinDegree || degree > kMaxDegree)
    throw InputError("degree out of range");
  std::vector<std::uint8_t> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), std::uint8_t{0});
  return Perm(std::move(images));
}

Perm Perm::from_one_based(const std::vector<int>& images) {
  const int degree = static_cast<int>(images.size());
  if (degree < kMinDegree || degree > kMaxDegree)
    throw InputError("degree out of range");
  std::vector<std::uint8_t> zero_based(images.size());
  std::vector<bool> seen(images.size(), false);
  for (std::size_t i = 0; i < images.size(); ++i) {
    const int v = images[i];
    if (v < 1 || v > degree || seen[static_cast<std::size_t>(v - 1)])
      throw InputError("not a bijection");
    seen[static_cast<std::size_t>(v - 1)] = true;
    zero_based[i] = static_cast<std::uint8_t>(v - 1);
  }
  return Perm(std::move(zero_based));
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::vector<int> Perm::one_based_images() const {
  std::vector<int> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[i] = images_[i] + 1;
  return out;
}

std::string Perm::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) os << ',';
    os << static_cast<int>(images_[i]) + 1;
  }
  os << ']';
  return os.str();
}

Perm compose(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree()) throw InputError("degree mismatch in compose");
  std::vector<std::uint8_t> images(p.images_.size());
  for (std::size_t i = 0; i < images.size(); ++i)
    images[i] = p.images_[q.images_[i]];
  return Perm(std::move(images));
}

Perm inverse(const Perm& p) {
  std::vector<std::uint8_t> images(p.images_.size());
  for (std::size_t i = 0; i < images.size(); ++i)
    images[p.images_[i]] = static_cast<std::uint8_t>(i);
  return Perm(std::move(images));
}

}  // namespace tvk
