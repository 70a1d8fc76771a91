#pragma once

#include "vdwaccel/linalg.hpp"

namespace vdwaccel::fields {

/// Harmonic dipole mu(t) = mu0 cos(omega t) with its first two derivatives.
struct DipoleHistory {
  Vec3 amplitude;
  double omega;

  Vec3 moment(double t) const;
  Vec3 rate(double t) const;
  Vec3 second_rate(double t) const;
};

/// T = 1 - 3 n n^T and S = 1 - n n^T for the unit direction n from the source
/// to the field point.
struct GeometryTensors {
  Vec3 direction;
  Mat3 T;
  Mat3 S;
};

GeometryTensors geometry_tensors(const Vec3& direction);

/// Source motion (velocity, acceleration, jerk) at the retarded time. The
/// energy pipeline feeds the nonrelativistic values (a t_r, a, 0) along x.
struct SourceMotion {
  Vec3 velocity = Vec3::Zero();
  Vec3 acceleration = Vec3::Zero();
  Vec3 jerk = Vec3::Zero();
};

enum class Frame { lab, comoving };

struct FieldSample {
  Vec3 E = Vec3::Zero();
  Vec3 B = Vec3::Zero();
  Frame frame = Frame::lab;
};

/// The radiation term of the polarization field. `as_published` divides
/// mu'' by c^3 rho; `standard_dipole` uses the textbook c^2 rho.
enum class RadiationTerm { as_published, standard_dipole };

Vec3 e_polarization(const DipoleHistory& dip, const GeometryTensors& geom,
                    double rho, double t_r, double c,
                    RadiationTerm radiation = RadiationTerm::as_published);

Vec3 e_roentgen(const DipoleHistory& dip, const GeometryTensors& geom,
                double rho, double t_r, const SourceMotion& motion, double c);

Vec3 b_polarization(const DipoleHistory& dip, const GeometryTensors& geom,
                    double rho, double t_r, double c);

Vec3 b_roentgen(const DipoleHistory& dip, const GeometryTensors& geom,
                double rho, double t_r, const SourceMotion& motion, double c);

/// Sum of polarization and Roentgen parts in the laboratory frame.
FieldSample lab_field(const DipoleHistory& dip, const GeometryTensors& geom,
                      double rho, double t_r, const SourceMotion& motion,
                      double c,
                      RadiationTerm radiation = RadiationTerm::as_published);

/// Boost along x into the frame moving with velocity beta c. Only E feeds
/// the potential tensor; B is carried along for diagnostics.
FieldSample lorentz_to_comoving(const FieldSample& sample, double beta,
                                double gamma);

/// Inverse of lorentz_to_comoving for the same (beta, gamma).
FieldSample lorentz_to_lab(const FieldSample& sample, double beta,
                           double gamma);

} // namespace vdwaccel::fields
