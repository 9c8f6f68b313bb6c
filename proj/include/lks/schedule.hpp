#pragma once

#include <map>
#include <string>

#include "lks/io.hpp"
#include "lks/types.hpp"

namespace lks {

// Constants of the decomposition and the embedding. The omega values are
// multiples of k; find_degree_gap overwrites omega_star / omega_star_star
// with the band it picks.
struct ConstantSchedule {
  Rational eps{3, 10};
  Rational tau{1, 500};
  Rational beta{1, 100};
  Rational gamma{1, 20};
  Rational rho{3, 20};
  Rational eta{1, 5};
  Rational alpha{1, 25};
  Rational nu{1, 10};
  Rational mu{1, 10};
  Rational lambda{1, 20};
  Rational Lambda{10};
  Rational omega_star{4};
  Rational omega_star_star{16};
  Rational omega_prime{8};
};

// Throws Error("bad-schedule") naming the first broken relation:
// 0 < tau, tau + gamma^2 <= gamma, 5 tau <= beta, 5 beta <= gamma,
// 3 gamma <= rho, 2 rho <= eps, alpha <= eta/5, eta < 1, positive nu, mu,
// lambda, Lambda, and omega_star < omega_prime < omega_star_star.
void validate_schedule(const ConstantSchedule& s);

// Setting by name ("eps", "tau", ..., "Lambda", "omega_star", ...).
// Error("bad-schedule") for an unknown name.
void set_constant(ConstantSchedule& s, const std::string& name, const Rational& value);
std::map<std::string, Rational> constants_of(const ConstantSchedule& s);

// Small-epsilon schedule under which the Figure 2 graph keeps its high-degree
// set (degree 1.1k >= (1+eps)k needs eps <= 0.1).
ConstantSchedule figure2_schedule();

Json schedule_to_json(const ConstantSchedule& s);
ConstantSchedule schedule_from_json(const Json& j);

}  // namespace lks
