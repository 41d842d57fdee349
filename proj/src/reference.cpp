#include "traceform/reference.hpp"

namespace traceform::reference {

namespace {

RatMatrix scaled_rows(const std::vector<std::pair<long, std::vector<long>>>& rows) {
  RatMatrix m(rows.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].second.size(); ++j) m(i, j) = make_rat(rows[i].second[j], rows[i].first);
  return m;
}

}  // namespace

Poly octic_first() { return Poly::from_ints({15, 0, 0, 0, 0, 0, 0, 0, 1}); }
Poly octic_second() { return Poly::from_ints({240, 0, 0, 0, 0, 0, 0, 0, 1}); }

RatMatrix octic_first_basis() {
  return scaled_rows({
      {1, {1, 0, 0, 0, 0, 0, 0, 0}},
      {1, {0, 1, 0, 0, 0, 0, 0, 0}},
      {1, {0, 0, 1, 0, 0, 0, 0, 0}},
      {1, {0, 0, 0, 1, 0, 0, 0, 0}},
      {2, {1, 0, 0, 0, 1, 0, 0, 0}},
      {2, {0, 1, 0, 0, 0, 1, 0, 0}},
      {4, {1, 0, 1, 0, 1, 0, 1, 0}},
      {8, {1, 1, 1, 1, 1, 1, 1, 1}},
  });
}

RatMatrix octic_second_basis() {
  return scaled_rows({
      {1, {1, 0, 0, 0, 0, 0, 0, 0}},
      {1, {0, 1, 0, 0, 0, 0, 0, 0}},
      {2, {0, 0, 1, 0, 0, 0, 0, 0}},
      {4, {0, 2, 0, 1, 0, 0, 0, 0}},
      {8, {4, 0, 0, 0, 1, 0, 0, 0}},
      {16, {8, 12, 4, 0, 0, 1, 0, 0}},
      {32, {8, 0, 4, 0, 2, 0, 1, 0}},
      {64, {16, 24, 16, 12, 4, 2, 0, 1}},
  });
}

IntMatrix octic_first_gram() {
  return IntMatrix::from_rows({
      {8, 0, 0, 0, 4, 0, 2, 1},
      {0, 0, 0, 0, 0, 0, 0, -15},
      {0, 0, 0, 0, 0, 0, -30, -15},
      {0, 0, 0, 0, 0, -60, 0, -15},
      {4, 0, 0, 0, -28, 0, -14, -7},
      {0, 0, 0, -60, 0, 0, 0, -15},
      {2, 0, -30, 0, -14, 0, -22, -11},
      {1, -15, -15, -15, -7, -15, -11, -13},
  });
}

IntMatrix octic_second_gram() {
  return IntMatrix::from_rows({
      {8, 0, 0, 0, 4, 4, 2, 2},
      {0, 0, 0, 0, 0, 0, 0, -30},
      {0, 0, 0, 0, 0, 0, -30, 0},
      {0, 0, 0, 0, 0, -30, 0, -30},
      {4, 0, 0, 0, -28, 2, -14, -14},
      {4, 0, 0, -30, 2, 2, -14, -44},
      {2, 0, -30, 0, -14, -14, -22, -22},
      {2, -30, 0, -30, -14, -44, -22, -52},
  });
}

Int octic_disc() { return Int(1024) * 2187 * 78125; }

FieldFamily cubic_quadruple() {
  return {"cubic -3299",
          {Poly::from_ints({11, 2, 0, 1}), Poly::from_ints({27, -16, 0, 1}), Poly::from_ints({-8, 9, -1, 1}),
           Poly::from_ints({10, 3, -1, 1})},
          Int(-3299)};
}

FieldFamily quartic_pair() {
  return {"quartic 7537", {Poly::from_ints({5, -4, 5, -1, 1}), Poly::from_ints({4, -1, 5, 0, 1})}, Int(7537)};
}

Poly quartic_printed_second() { return Poly::from_ints({2, -5, 4, 0, 1}); }

FieldFamily quintic_pair() {
  return {"quintic 34129",
          {Poly::from_ints({-1, -2, -1, 2, 0, 1}), Poly::from_ints({4, -2, 1, 0, -2, 1})},
          Int(34129)};
}

FieldFamily septic_pair() {
  return {"septic 2741^2",
          {Poly::from_ints({1, -1, -4, 1, 4, 0, -3, 1}), Poly::from_ints({-1, -1, -2, -3, 4, 2, -3, 1})},
          Int(2741) * 2741};
}

FieldFamily spinor_triple() {
  return {"spinor quartics",
          {Poly::from_ints({1, 0, -10, -1, 19}), Poly::from_ints({1, 0, -18, -23, 16}),
           Poly::from_ints({1, -1, -10, 8, 17})},
          Int(151717)};
}

Poly spinor_printed_second() { return Poly::from_ints({1, -18, -23, 0, 16}); }

}  // namespace traceform::reference
