#include "lks/schedule.hpp"

namespace lks {

namespace {

template <typename Fn>
void for_each_constant(ConstantSchedule& s, Fn&& fn) {
  fn("eps", s.eps);
  fn("tau", s.tau);
  fn("beta", s.beta);
  fn("gamma", s.gamma);
  fn("rho", s.rho);
  fn("eta", s.eta);
  fn("alpha", s.alpha);
  fn("nu", s.nu);
  fn("mu", s.mu);
  fn("lambda", s.lambda);
  fn("Lambda", s.Lambda);
  fn("omega_star", s.omega_star);
  fn("omega_star_star", s.omega_star_star);
  fn("omega_prime", s.omega_prime);
}

}  // namespace

void validate_schedule(const ConstantSchedule& s) {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw Error("bad-schedule", std::string("violates ") + what);
  };
  require(s.tau > 0, "0 < tau");
  require(s.tau + s.gamma * s.gamma <= s.gamma, "tau + gamma^2 <= gamma");
  require(5 * s.tau <= s.beta, "5 tau <= beta");
  require(5 * s.beta <= s.gamma, "5 beta <= gamma");
  require(3 * s.gamma <= s.rho, "3 gamma <= rho");
  require(2 * s.rho <= s.eps, "2 rho <= eps");
  require(s.eta > 0 && s.eta < 1, "0 < eta < 1");
  require(s.alpha > 0 && 5 * s.alpha <= s.eta, "0 < alpha <= eta/5");
  require(s.nu > 0 && s.mu > 0, "nu, mu > 0");
  require(s.lambda > 0 && s.Lambda > 0, "lambda, Lambda > 0");
  require(s.omega_star < s.omega_prime && s.omega_prime < s.omega_star_star, "omega_star < omega_prime < omega_star_star");
}

void set_constant(ConstantSchedule& s, const std::string& name, const Rational& value) {
  bool found = false;
  for_each_constant(s, [&](const char* key, Rational& slot) {
    if (name == key) {
      slot = value;
      found = true;
    }
  });
  if (!found) throw Error("bad-schedule", "unknown constant \"" + name + "\"");
}

std::map<std::string, Rational> constants_of(const ConstantSchedule& s) {
  std::map<std::string, Rational> out;
  ConstantSchedule copy = s;
  for_each_constant(copy, [&](const char* key, Rational& slot) { out[key] = slot; });
  return out;
}

ConstantSchedule figure2_schedule() {
  ConstantSchedule s;
  s.eps = Rational(1, 10);
  s.rho = Rational(1, 20);
  s.gamma = Rational(1, 60);
  s.beta = Rational(1, 300);
  s.tau = Rational(1, 1500);
  s.eta = Rational(3, 10);
  s.alpha = Rational(3, 50);
  return s;
}

Json schedule_to_json(const ConstantSchedule& s) {
  Json j = Json::object();
  for (const auto& [key, value] : constants_of(s)) j[key] = to_string(value);
  return j;
}

ConstantSchedule schedule_from_json(const Json& j) {
  ConstantSchedule s;
  for (const auto& [key, value] : j.items()) set_constant(s, key, parse_rational(value.get<std::string>()));
  return s;
}

}  // namespace lks
