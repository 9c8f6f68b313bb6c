#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace lks {

using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;
using VertexList = std::vector<Vertex>;
using Rational = boost::multiprecision::cpp_rational;

inline constexpr Vertex kNoVertex = -1;

// Every failure raised by the library carries a short machine-readable code
// ("empty-side", "tau-too-small", ...) next to the human message.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

// Parses "3", "-2/7", "0.05" or "1e-3" into an exact rational.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& r);
double to_double(const Rational& r);

// Smallest integer >= r, largest integer <= r.
std::int64_t ceil_int(const Rational& r);
std::int64_t floor_int(const Rational& r);

// Normalizes an edge so that first < second.
inline Edge make_edge(Vertex u, Vertex v) {
  return u < v ? Edge{u, v} : Edge{v, u};
}

// Sorted, deduplicated copy.
VertexList sorted_unique(VertexList v);

}  // namespace lks
