#pragma once

#include "alegeo/core/asymptotics.hpp"
#include "alegeo/core/models.hpp"
#include "alegeo/core/operators.hpp"
#include "alegeo/core/poisson.hpp"

#include <memory>
#include <string>
#include <vector>

namespace alegeo {

/// H_ij(x) = C_ijkl x^k x^l with
/// C_ijkl = -1/3 R_ikjl(0) - 2 mu / (3 (m + 2)) (delta_ij delta_kl + delta_ik delta_jl + delta_il delta_jk).
class QuadraticTensorH final : public Sym2Field {
 public:
  explicit QuadraticTensorH(const OrbifoldPointData& data);

  int dim() const override { return data_.dim; }
  Matrix value(const Vector& x) const override;
  SymJet jet(const Vector& x, int order) const override;
  bool analytic() const override { return true; }

  const Tensor4& coefficients() const { return c_; }
  const OrbifoldPointData& data() const { return data_; }

 private:
  OrbifoldPointData data_;
  Tensor4 c_;
};

QuadraticTensorH build_H(const OrbifoldPointData& data);

/// Residuals of the defining identities of H at a point, each relative to |x|^2 (or |x|)
/// times max(1, |mu|, |R0|).
struct HResiduals {
  double homogeneity = 0.0;  // |H(2x) - 4 H(x)|
  double bianchi = 0.0;      // |B_E H|
  double laplacian = 0.0;    // |1/2 nabla* nabla H - mu delta|
  double trace = 0.0;        // |tr H + mu |x|^2|
  double max() const;
};
HResiduals h_residuals(const QuadraticTensorH& h, const Vector& x);

struct PairingResult {
  double value = 0.0;
  double error = 0.0;
  ConvergenceTable table;
};

/// Relative Cauchy tolerance of the pairing sequence.
inline constexpr double kPairingTolerance = 1e-3;

/// lim_r -(m+2)/2 * 1/|Gamma| * int_{S_r} <H, o>_E / r dsigma with the unnormalized
/// field o, Richardson-extrapolated in 1/r. Throws NonDecayingInput when o does not
/// decay like r^{-m} and NoConvergence when the sequence is not Cauchy.
PairingResult lambda_pairing(const RadialAleModel& model, const QuadraticTensorH& h,
                             const Sym2Field& o, const std::vector<double>& radii);

/// -[2m(m-2) mu V + omega_{m-1} / (3 |Gamma|) (W0 : W_inf + W0_ikjl W_inf_iljk)].
/// Throws DimensionMismatch or GroupMismatch.
double lambda0_closed_form(const OrbifoldPointData& data, const AleInvariants& inv);

enum class Verdict { Obstructed, Unobstructed, Inconclusive };
std::string to_string(Verdict v);

struct ObstructionReport {
  int dim = 0;
  int group_order = 1;
  double mu = 0.0;
  double renormalized_volume = 0.0;
  double contraction = 0.0;  // W0 : W_inf + swapped
  double lambda0_closed = 0.0;
  bool has_pairing = false;
  double lambda0_pairing = 0.0;
  double pairing_error = 0.0;
  double route_discrepancy = 0.0;  // |pairing - closed| / max(|closed|, floor)
  double l2_norm = 0.0;
  double value = 0.0;
  double value_error = 0.0;
  Verdict verdict = Verdict::Inconclusive;
  ConvergenceTable pairing_table;
};

/// Left-hand side mu V + omega_{m-1} / (6 m (m-2) |Gamma|) (contraction + swap) and
/// its verdict. Throws PositiveEinsteinConstant when mu >= 0.
ObstructionReport obstruction_value(const OrbifoldPointData& data, const AleInvariants& inv);

/// Relative agreement required between the two routes to lambda0.
inline constexpr double kRouteTolerance = 1e-2;

/// Full pipeline from the invariants, Poisson solution and deformation field of the
/// model. The pairing route is added to the report; disagreeing routes make the
/// verdict inconclusive.
struct ObstructionPipeline {
  AleInvariants invariants;
  std::shared_ptr<const RadialPoissonSolution> poisson;
  ExplicitDeformation deformation;
  ObstructionReport report;
};
ObstructionPipeline evaluate_obstruction(std::shared_ptr<const RadialAleModel> model,
                                         const OrbifoldPointData& data,
                                         const std::vector<double>& schedule,
                                         double route_tolerance = kRouteTolerance);

}  // namespace alegeo
