#include "vdwaccel/dipole_fields.hpp"

#include <cmath>

#include "vdwaccel/error.hpp"

namespace vdwaccel::fields {

namespace {

void require_distance(double rho) {
  if (!(rho > 0.0))
    throw Error(ErrorCode::zero_distance, "dipole field requires rho > 0");
}

} // namespace

Vec3 DipoleHistory::moment(double t) const {
  return amplitude * std::cos(omega * t);
}

Vec3 DipoleHistory::rate(double t) const {
  return -omega * std::sin(omega * t) * amplitude;
}

Vec3 DipoleHistory::second_rate(double t) const {
  return -omega * omega * std::cos(omega * t) * amplitude;
}

GeometryTensors geometry_tensors(const Vec3& direction) {
  if (std::abs(direction.norm() - 1.0) > 1e-12)
    throw Error(ErrorCode::non_unit_vector,
                "geometry_tensors: direction must be a unit vector");
  const Mat3 outer = direction * direction.transpose();
  return {direction, Mat3::Identity() - 3.0 * outer, Mat3::Identity() - outer};
}

Vec3 e_polarization(const DipoleHistory& dip, const GeometryTensors& geom,
                    double rho, double t_r, double c, RadiationTerm radiation) {
  require_distance(rho);
  const double radiation_scale =
      radiation == RadiationTerm::as_published ? c * c * c * rho : c * c * rho;
  return -(geom.T * dip.moment(t_r) / (rho * rho * rho) +
           geom.T * dip.rate(t_r) / (c * rho * rho) +
           geom.S * dip.second_rate(t_r) / radiation_scale);
}

Vec3 e_roentgen(const DipoleHistory& dip, const GeometryTensors& geom,
                double rho, double t_r, const SourceMotion& motion, double c) {
  require_distance(rho);
  const Vec3& n = geom.direction;
  const double mu = n.dot(dip.moment(t_r));
  const double mu_dot = n.dot(dip.rate(t_r));
  const double mu_ddot = n.dot(dip.second_rate(t_r));
  const double near = 1.0 / (c * c * rho * rho);
  const double far = 1.0 / (c * c * c * rho);
  return -(near * (mu_dot * motion.velocity + mu * motion.acceleration) +
           far * (mu_ddot * motion.velocity + mu * motion.jerk +
                  2.0 * mu_dot * motion.acceleration));
}

Vec3 b_polarization(const DipoleHistory& dip, const GeometryTensors& geom,
                    double rho, double t_r, double c) {
  require_distance(rho);
  const Vec3& n = geom.direction;
  return -n.cross(dip.rate(t_r)) / (c * rho * rho) -
         n.cross(dip.second_rate(t_r)) / (c * c * rho);
}

Vec3 b_roentgen(const DipoleHistory& dip, const GeometryTensors& geom,
                double rho, double t_r, const SourceMotion& motion, double c) {
  require_distance(rho);
  const Vec3 mu = dip.moment(t_r);
  const Vec3 mu_dot = dip.rate(t_r);
  const Vec3 mu_ddot = dip.second_rate(t_r);
  const Vec3 near = mu.cross(motion.velocity) / rho +
                    mu.cross(motion.acceleration) / c +
                    mu_dot.cross(motion.velocity) / c;
  const Vec3 far = mu.cross(motion.jerk) + 2.0 * mu_dot.cross(motion.acceleration) +
                   mu_ddot.cross(motion.velocity);
  return -geom.T * near / (c * rho * rho) - geom.S * far / (c * c * c * rho);
}

FieldSample lab_field(const DipoleHistory& dip, const GeometryTensors& geom,
                      double rho, double t_r, const SourceMotion& motion,
                      double c, RadiationTerm radiation) {
  FieldSample out;
  out.E = e_polarization(dip, geom, rho, t_r, c, radiation) +
          e_roentgen(dip, geom, rho, t_r, motion, c);
  out.B = b_polarization(dip, geom, rho, t_r, c) +
          b_roentgen(dip, geom, rho, t_r, motion, c);
  out.frame = Frame::lab;
  return out;
}

namespace {

FieldSample boost_x(const FieldSample& s, double beta, double gamma) {
  if (!(std::abs(beta) < 1.0))
    throw Error(ErrorCode::superluminal_boost, "boost requires |beta| < 1");
  if (!(gamma >= 1.0))
    throw Error(ErrorCode::invalid_argument, "boost requires gamma >= 1");
  FieldSample out;
  out.E = {s.E.x(), gamma * (s.E.y() - beta * s.B.z()),
           gamma * (s.E.z() + beta * s.B.y())};
  out.B = {s.B.x(), gamma * (s.B.y() + beta * s.E.z()),
           gamma * (s.B.z() - beta * s.E.y())};
  return out;
}

} // namespace

FieldSample lorentz_to_comoving(const FieldSample& sample, double beta,
                                double gamma) {
  if (sample.frame != Frame::lab)
    throw Error(ErrorCode::invalid_argument,
                "lorentz_to_comoving expects a laboratory-frame sample");
  auto out = boost_x(sample, beta, gamma);
  out.frame = Frame::comoving;
  return out;
}

FieldSample lorentz_to_lab(const FieldSample& sample, double beta,
                           double gamma) {
  if (sample.frame != Frame::comoving)
    throw Error(ErrorCode::invalid_argument,
                "lorentz_to_lab expects a co-moving sample");
  auto out = boost_x(sample, -beta, gamma);
  out.frame = Frame::lab;
  return out;
}

} // namespace vdwaccel::fields
