#include "skmono/analytic.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <numbers>

#include "skmono/errors.hpp"

namespace skmono {

using ordered_json = nlohmann::ordered_json;

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kE3 = std::polar(1.0, 2.0 * kPi / 3.0);

Complex horner(const std::vector<Complex>& coeffs, Complex z) {
  Complex v = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * z + *it;
  return v;
}

double abs_tail(const std::vector<Complex>& coeffs, double r, int from) {
  double s = 0.0;
  double rk = std::pow(r, from);
  for (std::size_t k = from; k < coeffs.size(); ++k) {
    s += std::abs(coeffs[k]) * rk;
    rk *= r;
  }
  return s;
}

Complex branch_pow(const BranchPoint& p, double e) {
  return std::pow(p.r, e) * std::polar(1.0, e * p.theta);
}

bool kind_has_log(LocalModel::Kind k) {
  using K = LocalModel::Kind;
  return k == K::Type1 || k == K::Type2 || k == K::In || k == K::Instar;
}

}  // namespace

double LocalModel::beta() const {
  using K = Kind;
  switch (kind) {
    case K::Type3:
      return static_cast<double>(beta_frac.first) / beta_frac.second;
    case K::II: return 5.0 / 6.0;
    case K::IIstar: return 1.0 / 6.0;
    case K::III: return 3.0 / 4.0;
    case K::IIIstar: return 1.0 / 4.0;
    case K::IV: return 2.0 / 3.0;
    case K::IVstar: return 1.0 / 3.0;
    case K::Type2:
    case K::Instar:
    case K::Istar0: return 0.5;
    case K::Type1:
    case K::In: return 1.0;
  }
  return 1.0;
}

double LocalModel::f_exponent() const {
  using K = Kind;
  switch (kind) {
    case K::III:
    case K::IIIstar: return 0.5;
    case K::II:
    case K::IVstar: return 1.0 / 3.0;
    case K::IIstar:
    case K::IV: return 2.0 / 3.0;
    case K::Type3: {
      int p = beta_frac.first, q = beta_frac.second;
      if (q == 2) return 0.0;                    // beta = 1/2
      if (q == 4) return 0.5;                    // 1/4, 3/4
      if (q == 6 && (p == 1 || p == 5)) return p == 5 ? 1.0 / 3.0 : 2.0 / 3.0;
      if (q == 3) return p == 1 ? 1.0 / 3.0 : 2.0 / 3.0;  // 1/3, 2/3
      return 0.0;
    }
    default: return 0.0;
  }
}

double LocalModel::domain_radius() const {
  using K = Kind;
  const double cap = 0.75;
  auto bisect = [&](auto ok) {
    if (!ok(1e-12)) return 0.0;
    if (ok(cap)) return cap;
    double lo = 1e-12, hi = cap;
    for (int i = 0; i < 80; ++i) {
      double mid = 0.5 * (lo + hi);
      (ok(mid) ? lo : hi) = mid;
    }
    return lo;
  };
  switch (kind) {
    case K::Type1:
    case K::Type2:
    case K::In:
    case K::Instar:
      // need the log term to dominate the perturbation
      return bisect([&](double r) {
        return abs_tail(f, r, 0) <= 0.5 * std::log(1.0 / r);
      });
    case K::Istar0: {
      double c0 = 0.0;
      if (!g.empty() && !h.empty()) c0 = std::imag(h[0] * std::conj(g[0]));
      if (c0 <= 0.0) return 0.0;
      return bisect([&](double r) {
        double pert = abs_tail(g, r, 0) * abs_tail(h, r, 1) +
                      abs_tail(g, r, 1) * std::abs(h.empty() ? 0.0 : std::abs(h[0]));
        return pert <= 0.5 * c0;
      });
    }
    default: {
      double e = f_exponent();
      return bisect([&](double r) {
        return std::pow(r, e) * abs_tail(f, r, 0) <= 0.5;
      });
    }
  }
}

PairSample sample_pair(const LocalModel& model, const BranchPoint& p) {
  using K = LocalModel::Kind;
  Complex z = std::polar(p.r, p.theta);
  Complex logz(std::log(p.r), p.theta);
  Complex dz, dw;
  switch (model.kind) {
    case K::Type1: {
      dz = 1.0;
      dw = -(Complex(0, 1) * logz + horner(model.f, z));
      break;
    }
    case K::Type2: {
      Complex w = branch_pow(p, -0.5);
      dz = w;
      dw = -(Complex(0, 1) * logz + horner(model.f, z)) * w;
      break;
    }
    case K::In: {
      dz = 1.0;
      dw = Complex(0, -model.n / (2.0 * kPi)) * (logz + horner(model.f, z));
      break;
    }
    case K::Instar: {
      Complex w = branch_pow(p, -0.5);
      dz = w;
      dw = Complex(0, -model.n / (2.0 * kPi)) * (logz + horner(model.f, z)) * w;
      break;
    }
    case K::Istar0: {
      Complex w = branch_pow(p, -0.5);
      dz = horner(model.g, z) * w;
      dw = horner(model.h, z) * w;
      break;
    }
    default: {
      Complex fv = branch_pow(p, model.f_exponent()) * horner(model.f, z);
      Complex w = branch_pow(p, model.beta() - 1.0);
      dz = (1.0 - fv) * w;
      if (model.kind == K::III || model.kind == K::IIIstar ||
          model.kind == K::Type3) {
        dw = Complex(0, 1) * (1.0 + fv) * w;
      } else {
        dw = kE3 * (1.0 - kE3 * fv) * w;
      }
      break;
    }
  }
  dz *= model.phase;
  dw *= model.phase;
  const Eigen::Matrix2d& pc = model.pair_change;
  Complex dz2 = pc(0, 0) * dz + pc(1, 0) * dw;
  Complex dw2 = pc(0, 1) * dz + pc(1, 1) * dw;
  return {z, dz2, dw2, p};
}

namespace {

PairSample principal_sample(const LocalModel& model, Complex zeta) {
  return sample_pair(model, BranchPoint{std::abs(zeta), std::arg(zeta)});
}

double density_at(const PairSample& s) {
  Complex tau = s.dw / s.dz;
  return 0.5 * std::imag(tau) * std::norm(s.dz);
}

void check_in_domain(const LocalModel& model, Complex zeta) {
  double r = std::abs(zeta);
  if (!(r > 0.0) || r >= 0.75)
    throw OutsideDomain("point outside the model's punctured disk");
  double dom = model.domain_radius();
  // dom == 0 means the coefficients admit no valid disk at all; let the
  // evaluation run so the positivity guard reports the broken data
  if (dom > 0.0 && r >= dom)
    throw OutsideDomain("point outside the model's punctured disk");
}

}  // namespace

double density(const LocalModel& model, Complex zeta) {
  check_in_domain(model, zeta);
  double d = density_at(principal_sample(model, zeta));
  if (!(d > 0.0))
    throw NonPositiveDensity("density <= 0: invalid model coefficients");
  return d;
}

double reference_density(const LocalModel& model, Complex zeta) {
  using K = LocalModel::Kind;
  check_in_domain(model, zeta);
  double r = std::abs(zeta);
  BranchPoint p{r, std::arg(zeta)};
  Complex z = zeta;
  Complex fv = horner(model.f, z);
  switch (model.kind) {
    case K::Type1: return -0.5 * (std::log(r) + std::imag(fv));
    case K::Type2: return -0.5 * (std::log(r) + std::imag(fv)) / r;
    case K::In: return -(model.n / (4.0 * kPi)) * (std::log(r) + std::real(fv));
    case K::Instar:
      return -(model.n / (4.0 * kPi)) * (std::log(r) + std::real(fv)) / r;
    case K::Istar0:
      return 0.5 * std::imag(horner(model.h, z) * std::conj(horner(model.g, z))) / r;
    default: {
      Complex fb = branch_pow(p, model.f_exponent()) * fv;
      double s2 = std::norm(fb);
      double w = std::pow(r, 2.0 * model.beta() - 2.0);
      if (model.kind == K::Type3 || model.kind == K::III ||
          model.kind == K::IIIstar)
        return 0.5 * (1.0 - s2) * w;
      return 0.5 * (std::sqrt(3.0) / 2.0) * (1.0 - s2) * w;
    }
  }
}

Eigen::Matrix2d continue_along(const LocalModel& model,
                               const std::vector<Complex>& path) {
  if (path.size() < 2)
    throw std::invalid_argument("continuation needs at least two points");
  if (path.front() == Complex(0.0, 0.0))
    throw BranchTrackingFailure("path starts at the puncture");
  BranchPoint p{std::abs(path.front()), std::arg(path.front())};
  PairSample start = sample_pair(model, p);
  for (std::size_t k = 1; k < path.size(); ++k) {
    if (path[k] == Complex(0.0, 0.0))
      throw BranchTrackingFailure("path passes through the puncture");
    double jump = std::arg(path[k] / path[k - 1]);
    if (std::abs(jump) > kPi / 2.0)
      throw BranchTrackingFailure("argument jump above pi/2 between steps");
    p.theta += jump;
    p.r = std::abs(path[k]);
  }
  PairSample end = sample_pair(model, p);
  Eigen::Matrix2d basis;
  basis << std::real(start.dz), std::real(start.dw),
           std::imag(start.dz), std::imag(start.dw);
  Eigen::Vector2d rz(std::real(end.dz), std::imag(end.dz));
  Eigen::Vector2d rw(std::real(end.dw), std::imag(end.dw));
  Eigen::Matrix2d basis_inv = basis.inverse();
  Eigen::Vector2d ac = basis_inv * rz;  // dz_end = a dz0 + c dw0
  Eigen::Vector2d bd = basis_inv * rw;
  Eigen::Matrix2d a;
  a << ac(0), bd(0), ac(1), bd(1);
  if (std::abs(a.determinant() - 1.0) >= 1e-8)
    throw BranchTrackingFailure("continuation lost SL2: |det-1| = " +
                                std::to_string(std::abs(a.determinant() - 1.0)));
  return a;
}

Eigen::Matrix2d continue_monodromy(const LocalModel& model, double radius,
                                   int steps) {
  if (steps < 64) throw std::invalid_argument("continuation needs steps >= 64");
  if (!(radius > 0.0) || radius >= model.domain_radius())
    throw OutsideDomain("continuation radius outside the model domain");
  std::vector<Complex> path;
  path.reserve(steps + 1);
  for (int k = 0; k <= steps; ++k)
    path.push_back(std::polar(radius, 2.0 * kPi * k / steps));
  return continue_along(model, path);
}

namespace {

// composite Simpson with panel doubling
template <class F>
double simpson(F&& f, double a, double b, double rel_tol, int max_panels) {
  auto run = [&](int panels) {
    double h = (b - a) / panels;
    double s = f(a) + f(b);
    for (int i = 1; i < panels; ++i)
      s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return s * h / 3.0;
  };
  double prev = run(64);
  for (int panels = 128; panels <= max_panels; panels *= 2) {
    double cur = run(panels);
    if (std::abs(cur - prev) <= rel_tol * (1.0 + std::abs(cur))) return cur;
    prev = cur;
  }
  throw QuadratureFailure("quadrature did not converge");
}

}  // namespace

double cone_angle(const LocalModel& model, double radius) {
  double dom = model.domain_radius();
  if (!(radius > 0.0) || radius > 0.01 * dom)
    throw std::invalid_argument("cone angle wants radius <= domain/100");
  auto sqrt_density = [&](Complex zeta) {
    double d = density_at(principal_sample(model, zeta));
    if (!(d > 0.0))
      throw NonPositiveDensity("density <= 0: invalid model coefficients");
    return std::sqrt(d);
  };
  double circumference = simpson(
      [&](double th) { return sqrt_density(std::polar(radius, th)) * radius; },
      0.0, 2.0 * kPi, 1e-10, 1 << 16);
  // ray integral: substitute s = radius * u^m so the integrand vanishes
  // like u^2 (up to a log factor) at the puncture
  double e_dz = model.beta() - 1.0;
  int m = std::max(3, static_cast<int>(std::ceil(3.0 / (e_dz + 1.0))));
  double ray = simpson(
      [&](double u) {
        if (u <= 0.0) return 0.0;
        double s = radius * std::pow(u, m);
        if (s <= 0.0) return 0.0;
        return sqrt_density(Complex(s, 0.0)) * m * radius * std::pow(u, m - 1);
      },
      0.0, 1.0, 1e-9, 1 << 18);
  if (!(ray > 0.0)) throw QuadratureFailure("degenerate ray length");
  return circumference / ray;
}

LocalModel twist(const LocalModel& model, double theta) {
  LocalModel out = model;
  out.phase *= std::polar(1.0, theta);
  return out;
}

TwistRelation recover_twist(const LocalModel& m1, const LocalModel& m2,
                            int samples) {
  if (samples < 4) throw DegenerateSamples("need at least 4 samples");
  double dom = std::min(m1.domain_radius(), m2.domain_radius());
  if (!(dom > 0.0)) throw DegenerateSamples("empty common domain");
  std::vector<PairSample> s1, s2;
  for (int i = 0; i < samples; ++i) {
    double r = (i % 2 ? 0.55 : 0.35) * dom;
    double th = -1.2 + 2.4 * i / std::max(1, samples - 1);
    Complex zeta = std::polar(r, th);
    s1.push_back(principal_sample(m1, zeta));
    s2.push_back(principal_sample(m2, zeta));
  }
  // (dz2, dw2) = (dz1, dw1) Q column by column, complex least squares
  Eigen::MatrixXcd a(samples, 2);
  Eigen::VectorXcd bz(samples), bw(samples);
  double scale = 0.0;
  for (int i = 0; i < samples; ++i) {
    a(i, 0) = s1[i].dz;
    a(i, 1) = s1[i].dw;
    bz(i) = s2[i].dz;
    bw(i) = s2[i].dw;
    scale = std::max({scale, std::abs(s2[i].dz), std::abs(s2[i].dw)});
  }
  if (!(scale > 0.0)) throw DegenerateSamples("vanishing pair samples");
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a, Eigen::ComputeThinU |
                                                Eigen::ComputeThinV);
  double smax = svd.singularValues()(0);
  bool rank_deficient = svd.singularValues()(1) <= 1e-10 * smax;
  Eigen::VectorXcd qz = svd.solve(bz);
  Eigen::VectorXcd qw = svd.solve(bw);
  double res = 0.0;
  for (int i = 0; i < samples; ++i) {
    res = std::max(res, std::abs(a(i, 0) * qz(0) + a(i, 1) * qz(1) - bz(i)));
    res = std::max(res, std::abs(a(i, 0) * qw(0) + a(i, 1) * qw(1) - bw(i)));
  }
  TwistRelation out;
  out.residual = res / scale;
  if (rank_deficient) {
    // constant tau: flat model, a twist is absorbed by a rotation of the pair
    out.status = out.residual < 1e-8 ? TwistRelation::Status::NotUnique
                                     : TwistRelation::Status::NotRelated;
    return out;
  }
  // Q = e^{i theta} P with P real: the entrywise squares share phase 2 theta
  Complex q11 = qz(0), q21 = qz(1), q12 = qw(0), q22 = qw(1);
  Complex phase2 = q11 * q11 + q12 * q12 + q21 * q21 + q22 * q22;
  double theta = 0.5 * std::arg(phase2);
  if (theta < 0) theta += kPi;
  Complex rot = std::polar(1.0, -theta);
  Eigen::Matrix2d p;
  p << std::real(rot * q11), std::real(rot * q12),
       std::real(rot * q21), std::real(rot * q22);
  double imag_left =
      std::max({std::abs(std::imag(rot * q11)), std::abs(std::imag(rot * q12)),
                std::abs(std::imag(rot * q21)), std::abs(std::imag(rot * q22))});
  double qnorm = std::max({std::abs(q11), std::abs(q12), std::abs(q21),
                           std::abs(q22), 1e-300});
  out.residual = std::max(out.residual, imag_left / qnorm);
  out.residual = std::max(out.residual, std::abs(p.determinant() - 1.0));
  if (out.residual < 1e-8) {
    out.status = TwistRelation::Status::Related;
    out.theta = theta;
    out.pair_change = p;
  } else {
    out.status = TwistRelation::Status::NotRelated;
  }
  return out;
}

double curvature_sample(const LocalModel& model, Complex zeta, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("curvature: h > 0");
  if (std::abs(zeta) <= h)
    throw StencilOutsideDomain("stencil straddles the puncture");
  const Complex stencil[5] = {zeta, zeta + h, zeta - h, zeta + Complex(0, h),
                              zeta - Complex(0, h)};
  for (const Complex& p : stencil) {
    double r = std::abs(p);
    if (!(r > 0.0) || r >= model.domain_radius())
      throw StencilOutsideDomain("curvature stencil leaves the domain");
  }
  // keep one branch across the whole stencil (arguments relative to the
  // center, so a stencil near the principal cut still reads consistently)
  double theta0 = std::arg(zeta);
  auto u = [&](Complex p) {
    BranchPoint bp{std::abs(p), theta0 + std::arg(p / zeta)};
    PairSample s = sample_pair(model, bp);
    return std::log(std::imag(s.dw / s.dz));
  };
  double lap = (u(stencil[1]) + u(stencil[2]) + u(stencil[3]) + u(stencil[4]) -
                4.0 * u(stencil[0])) /
               (h * h);
  return -lap / (2.0 * density(model, zeta));
}

// ---------------------------------------------------------------------------
// JSON

std::string kind_name(LocalModel::Kind kind) {
  using K = LocalModel::Kind;
  switch (kind) {
    case K::Type1: return "Type1";
    case K::Type2: return "Type2";
    case K::Type3: return "Type3";
    case K::In: return "In";
    case K::Instar: return "In*";
    case K::Istar0: return "I0*";
    case K::II: return "II";
    case K::IIstar: return "II*";
    case K::III: return "III";
    case K::IIIstar: return "III*";
    case K::IV: return "IV";
    case K::IVstar: return "IV*";
  }
  return "?";
}

namespace {

std::vector<Complex> coeffs_from_json(const ordered_json& arr) {
  std::vector<Complex> out;
  if (!arr.is_array()) throw ParseError("model: coefficient list expected");
  // either [[re,im],...] or a flat [re,im,re,im,...]
  bool flat = !arr.empty() && arr.front().is_number();
  if (flat) {
    if (arr.size() % 2 != 0)
      throw ParseError("model: flat coefficient list needs even length");
    for (std::size_t i = 0; i < arr.size(); i += 2)
      out.emplace_back(arr[i].get<double>(), arr[i + 1].get<double>());
  } else {
    for (const auto& c : arr) {
      if (!c.is_array() || c.size() != 2)
        throw ParseError("model: coefficient must be [re,im]");
      out.emplace_back(c[0].get<double>(), c[1].get<double>());
    }
  }
  return out;
}

ordered_json coeffs_to_json(const std::vector<Complex>& v) {
  ordered_json arr = ordered_json::array();
  for (const Complex& c : v) arr.push_back({c.real(), c.imag()});
  return arr;
}

std::pair<int, int> parse_beta(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) throw ParseError("beta must look like p/q");
  int p = std::stoi(s.substr(0, slash));
  int q = std::stoi(s.substr(slash + 1));
  static const std::pair<int, int> allowed[] = {{1, 2}, {1, 3}, {2, 3}, {1, 4},
                                                {3, 4}, {1, 6}, {5, 6}};
  for (const auto& b : allowed) {
    if (b.first == p && b.second == q) return b;
  }
  throw ParseError("beta outside the admissible list: " + s);
}

LocalModel::Kind kind_from_name(const std::string& name, int& n_out) {
  using K = LocalModel::Kind;
  if (name == "Type1") return K::Type1;
  if (name == "Type2") return K::Type2;
  if (name == "Type3") return K::Type3;
  if (name == "II") return K::II;
  if (name == "II*") return K::IIstar;
  if (name == "III") return K::III;
  if (name == "III*") return K::IIIstar;
  if (name == "IV") return K::IV;
  if (name == "IV*") return K::IVstar;
  if (name == "I0*") return K::Istar0;
  if (name == "In") return K::In;
  if (name == "In*") return K::Instar;
  if (name.size() >= 2 && name[0] == 'I') {
    bool star = name.back() == '*';
    std::string digits = name.substr(1, name.size() - 1 - (star ? 1 : 0));
    if (!digits.empty() &&
        digits.find_first_not_of("0123456789") == std::string::npos) {
      n_out = std::stoi(digits);
      if (n_out == 0 && star) return K::Istar0;
      if (n_out >= 1) return star ? K::Instar : K::In;
    }
  }
  throw ParseError("unknown model kind: " + name);
}

}  // namespace

LocalModel model_from_json(const std::string& json_text) {
  ordered_json j;
  try {
    j = ordered_json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("model JSON: ") + e.what());
  }
  LocalModel model;
  int n = 1;
  model.kind = kind_from_name(j.at("kind").get<std::string>(), n);
  model.n = j.value("n", n);
  if (model.kind == LocalModel::Kind::Type3)
    model.beta_frac = parse_beta(j.at("beta").get<std::string>());
  if (j.contains("f")) model.f = coeffs_from_json(j.at("f"));
  if (model.kind == LocalModel::Kind::Istar0) {
    if (j.contains("g")) model.g = coeffs_from_json(j.at("g"));
    if (j.contains("h")) model.h = coeffs_from_json(j.at("h"));
  }
  if (j.contains("phase")) {
    auto ph = j.at("phase");
    Complex raw(ph.at(0).get<double>(), ph.at(1).get<double>());
    if (std::abs(raw) == 0.0) throw ParseError("model: zero phase");
    model.phase = raw / std::abs(raw);
  }
  if ((model.kind == LocalModel::Kind::In ||
       model.kind == LocalModel::Kind::Instar) &&
      model.n < 1)
    throw ParseError("model: n >= 1 required");
  return model;
}

std::string model_to_json(const LocalModel& model) {
  ordered_json j;
  using K = LocalModel::Kind;
  if (model.kind == K::In)
    j["kind"] = "I" + std::to_string(model.n);
  else if (model.kind == K::Instar)
    j["kind"] = "I" + std::to_string(model.n) + "*";
  else
    j["kind"] = kind_name(model.kind);
  if (model.kind == K::In || model.kind == K::Instar) j["n"] = model.n;
  if (model.kind == K::Type3)
    j["beta"] = std::to_string(model.beta_frac.first) + "/" +
                std::to_string(model.beta_frac.second);
  if (!model.f.empty()) j["f"] = coeffs_to_json(model.f);
  if (model.kind == K::Istar0) {
    j["g"] = coeffs_to_json(model.g);
    j["h"] = coeffs_to_json(model.h);
  }
  if (model.phase != Complex(1.0, 0.0))
    j["phase"] = {model.phase.real(), model.phase.imag()};
  return j.dump();
}

}  // namespace skmono
