#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include "quiverforge/io.hpp"
#include "quiverforge/random.hpp"

#ifndef QF_TEST_DATA
#define QF_TEST_DATA "tests/data"
#endif

namespace quiverforge {

inline std::ostream& operator<<(std::ostream& os, const DimVector& d) {
  os << '(';
  for (std::size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i];
  return os << ')';
}

inline std::ostream& operator<<(std::ostream& os, const Weight& w) {
  os << '(';
  for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i].get_str();
  return os << ')';
}

}  // namespace quiverforge

namespace fixtures {

using namespace quiverforge;

inline AlgebraPtr load(const std::string& name) {
  return io::algebra_from_json(io::read_json_file(std::string(QF_TEST_DATA) + "/" + name + ".json"));
}

inline AlgebraPtr kronecker() { return load("kronecker"); }
inline AlgebraPtr d4() { return load("d4_subspace"); }
inline AlgebraPtr a2_tilde() { return load("a2_tilde"); }
inline AlgebraPtr a3() { return load("a3"); }
inline AlgebraPtr d4_dynkin() { return load("d4_dynkin"); }
inline AlgebraPtr canonical() { return load("canonical222"); }

inline Representation canonical_witness(const AlgebraPtr& a) {
  return io::representation_from_json(a, io::read_json_file(std::string(QF_TEST_DATA) + "/canonical222_witness.json"));
}

/// Random module of a path algebra. `zero_percent` of the entries are forced to 0.
inline Representation random_module(const AlgebraPtr& a, const DimVector& d, std::uint64_t seed,
                                    std::int64_t range = 2, int zero_percent = 0) {
  Rng rng(seed);
  std::vector<Matrix> mats;
  for (const auto& arrow : a->quiver().arrows()) {
    Matrix m(static_cast<std::size_t>(d[arrow.head]), static_cast<std::size_t>(d[arrow.tail]));
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) {
        const bool zero = rng.uniform(0, 99) < zero_percent;
        const auto v = rng.uniform(-range, range);
        if (!zero) m(r, c) = static_cast<long>(v);
      }
    mats.push_back(std::move(m));
  }
  return Representation(a, d, std::move(mats));
}

inline DimVector random_dim(std::size_t n, std::int64_t max, Rng& rng) {
  DimVector d = DimVector::zero(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = rng.uniform(0, max);
  return d;
}

inline DimVector dv(std::initializer_list<std::int64_t> xs) { return DimVector(std::vector<std::int64_t>(xs)); }

inline Weight wt(std::initializer_list<std::int64_t> xs) { return Weight::from_integers(std::vector<std::int64_t>(xs)); }

}  // namespace fixtures
