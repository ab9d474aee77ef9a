#include <algorithm>
#include <cmath>

#include "facereview/error.hpp"
#include "facereview/expression.hpp"

namespace facereview {

void RatingConfig::validate() const {
  if (w_eye < 0.0 || w_mouth < 0.0 || w_smile < 0.0) throw ParameterError("rating weights must be non-negative");
  if (std::abs(w_eye + w_mouth + w_smile - 1.0) > 1e-9) throw ParameterError("rating weights must sum to 1");
  if (!(disinterest_threshold < curious_threshold && curious_threshold < excited_threshold)) {
    throw ParameterError("thresholds must satisfy disinterest < curious < excited");
  }
  if (!(curious_ratio_scale > 0.0)) throw ParameterError("curious_ratio_scale must be positive");
  if (!(a_scale > 0.0)) throw ParameterError("a_scale must be positive");
  if (smile_residual_max < 0.0) throw ParameterError("smile_residual_max must be non-negative");
}

double smile_score(const QuadraticFit& fit, const RatingConfig& cfg) {
  if (!fit.well_posed || fit.residual > cfg.smile_residual_max) return 0.0;
  return std::clamp(-fit.a / cfg.a_scale, -1.0, 1.0);
}

ExpressionScores classify_expression(CuriousRatio eye, CuriousRatio mouth, double smile,
                                     const RatingConfig& cfg) {
  const double eye_n = std::min(eye.value / cfg.curious_ratio_scale, 1.0);
  const double mouth_n = std::min(mouth.value / cfg.curious_ratio_scale, 1.0);

  ExpressionScores s;
  s.eye_cr = eye;
  s.mouth_cr = mouth;
  s.smile = smile;
  s.overall = cfg.w_eye * eye_n + cfg.w_mouth * mouth_n + cfg.w_smile * (smile + 1.0) / 2.0;

  if (eye_n > cfg.excited_threshold && mouth_n > cfg.excited_threshold) {
    s.label = ExpressionLabel::Excited;
  } else if (smile > 0.0 && s.overall >= cfg.curious_threshold) {
    s.label = ExpressionLabel::Satisfied;
  } else if (s.overall >= cfg.curious_threshold) {
    s.label = ExpressionLabel::Curious;
  } else if (s.overall < cfg.disinterest_threshold) {
    s.label = ExpressionLabel::Disinterested;
  } else {
    s.label = ExpressionLabel::Neutral;
  }
  return s;
}

}  // namespace facereview
