#pragma once

#include <doctest.h>

#include "diagram/error.hpp"
#include "diagram/lattice.hpp"

#define CHECK_ERRC(expr, errc)                        \
  do {                                                \
    bool thrown_ = false;                             \
    try {                                             \
      (void)(expr);                                   \
    } catch (const diagram::Error& e_) {              \
      thrown_ = true;                                 \
      CHECK_MESSAGE(e_.code() == (errc), e_.what());  \
    }                                                 \
    CHECK_MESSAGE(thrown_, "expected " #errc);        \
  } while (false)

namespace testing_support {

inline diagram::LatticeVector vec(const diagram::LatticePtr& l, std::initializer_list<long> xs) {
  diagram::RationalVector v;
  for (long x : xs) v.emplace_back(x);
  return diagram::LatticeVector(l, std::move(v));
}

inline diagram::Matrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  diagram::Matrix m;
  for (const auto& r : rows) {
    diagram::RationalVector row;
    for (long x : r) row.emplace_back(x);
    m.push_back(row);
  }
  return m;
}

}  // namespace testing_support
