#include "icphi/perm.hpp"

#include "icphi/common.hpp"

namespace icphi {

Perm::Perm(std::vector<uint16_t> im) : images(std::move(im)) {
  std::vector<bool> seen(images.size(), false);
  for (uint16_t v : images) {
    require(v < images.size() && !seen[v], "Perm: image array is not a bijection");
    seen[v] = true;
  }
}

Perm Perm::identity(int degree) {
  Perm p;
  p.images.resize(degree);
  for (int i = 0; i < degree; ++i) p.images[i] = static_cast<uint16_t>(i);
  return p;
}

bool Perm::is_identity() const {
  for (size_t i = 0; i < images.size(); ++i)
    if (images[i] != i) return false;
  return true;
}

Perm compose(const Perm& a, const Perm& b) {
  require(a.degree() == b.degree(), "compose: degree mismatch");
  Perm r;
  r.images.resize(a.images.size());
  for (size_t i = 0; i < a.images.size(); ++i) r.images[i] = b.images[a.images[i]];
  return r;
}

Perm inverse(const Perm& p) {
  Perm r;
  r.images.resize(p.images.size());
  for (size_t i = 0; i < p.images.size(); ++i) r.images[p.images[i]] = static_cast<uint16_t>(i);
  return r;
}

std::string cycle_string(const Perm& p) {
  std::string out;
  std::vector<bool> done(p.images.size(), false);
  for (size_t start = 0; start < p.images.size(); ++start) {
    if (done[start] || p.images[start] == start) continue;
    out += '(';
    size_t i = start;
    bool first = true;
    while (!done[i]) {
      done[i] = true;
      if (!first) out += ' ';
      out += std::to_string(i);
      first = false;
      i = p.images[i];
    }
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

size_t PermHash::operator()(const Perm& p) const {
  // FNV-1a over the image bytes.
  size_t h = 1469598103934665603ull;
  for (uint16_t v : p.images) {
    h = (h ^ (v & 0xff)) * 1099511628211ull;
    h = (h ^ (v >> 8)) * 1099511628211ull;
  }
  return h;
}

}  // namespace icphi
