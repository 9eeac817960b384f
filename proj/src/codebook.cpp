#include "vqcrypt/codebook.hpp"

#include "vqcrypt/error.hpp"

namespace vqcrypt {

Codebook::Codebook(size_t dim, std::vector<uint8_t> data) : dim_(dim), data_(std::move(data)) {
  if (dim_ == 0) throw StructuralError("codebook dimension must be positive");
  if (data_.size() % dim_ != 0) throw StructuralError("codebook data is not a whole number of codewords");
}

bool Codebook::same_content(const Codebook& other) const {
  if (dim_ != other.dim_ || size() != other.size()) return false;
  auto rows = [](const Codebook& cb) {
    std::vector<std::vector<uint8_t>> r;
    r.reserve(cb.size());
    for (size_t i = 0; i < cb.size(); ++i) r.emplace_back(cb[i].begin(), cb[i].end());
    std::sort(r.begin(), r.end());
    return r;
  };
  return rows(*this) == rows(other);
}

}  // namespace vqcrypt
