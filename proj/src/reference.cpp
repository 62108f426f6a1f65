#include "cogrowth/reference.hpp"

#include <array>

namespace cogrowth::reference {

namespace {

constexpr std::array<TableRow, 10> kTable{{
    {1, 4.0, 3.0},
    {2, 3.792765039, 2.668565568},
    {3, 3.647639445, 2.395062561},
    {4, 3.569497357, 2.215245886},
    {5, 3.525816111, 2.091305394},
    {6, 3.500607636, 2.002421757},
    {7, 3.485775158, 1.936941986},
    {8, 3.476962757, 1.887871818},
    {9, 3.471710431, 1.850717434},
    {10, 3.468586539, 1.822458708},
}};

} // namespace

std::optional<TableRow> table_row(int N) {
  if (N < 1 || N > static_cast<int>(kTable.size()))
    return std::nullopt;
  return kTable[static_cast<std::size_t>(N - 1)];
}

std::optional<std::string> reference_G_equation(int N) {
  switch (N) {
  case 2:
    return "1 + 3*z*Q*G - (1 - 4*z^2 - z^2*Q^2)*G^2"
           " - z*Q*(1 - z*Q - 2*z)*(1 - z*Q + 2*z)*G^3";
  case 3:
    return "1 + 4*z*Q*G + (6*Q^2*z^2 - z^2 - 1)*G^2"
           " + 2*z*(Q*z + 1)*(Q^2*z - Q + 2*z)*G^3"
           " + z^2*(1 - Q)*(1 + Q)*(Q*z + 2*z - 1)*(Q*z - 2*z - 1)*G^4";
  case 4:
    return "1 + 5*G*Q*z + (10*Q^2*z^2 - 2*z^2 - 1)*G^2"
           " + z*(10*Q^3*z^2 - 6*Q*z^2 - 3*Q + 4*z)*G^3"
           " + z^2*(3*Q^4*z^2 + 2*Q^2*z^2 - 3*Q^2 + 8*Q*z - 8*z^2 + 2)*G^4"
           " - z^3*Q*(Q^2 - 2)*(Q*z + 2*z - 1)*(Q*z - 2*z - 1)*G^5";
  case 5:
    return "1 + 6*Q*z*G + (15*Q^2*z^2 - 3*z^2 - 1)*G^2"
           " + 4*(5*Q^3*z^2 - 3*Q*z^2 - Q + z)*z*G^3"
           " + 3*(5*Q^4*z^2 - 6*Q^2*z^2 - 2*Q^2 + 4*Q*z - z^2 + 1)*z^2*G^4"
           " + 2*(2*Q^5*z^2 - Q^3*z^2 - 2*Q^3 + 6*Q^2*z - 8*Q*z^2 + 3*Q"
           " - 4*z)*z^3*G^5"
           " - (Q^2 + Q - 1)*(Q*z + 2*z - 1)*(Q*z - 2*z - 1)*(Q^2 - Q - 1)"
           "*z^4*G^6";
  default:
    return std::nullopt;
  }
}

} // namespace cogrowth::reference
