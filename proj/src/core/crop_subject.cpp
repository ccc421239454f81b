#include "detta/core/crop_subject.hpp"

namespace detta {

std::optional<PersonId> crop_subject(const BBox& crop,
                                     std::span<const GroundTruthRecord* const> people,
                                     double min_iou) {
  std::optional<PersonId> best;
  double best_iou = 0.0;
  for (const GroundTruthRecord* p : people) {
    const double o = iou(crop, p->bbox);
    if (o < min_iou) continue;
    if (!best || o > best_iou || (o == best_iou && p->gt_person_id < *best)) {
      best = p->gt_person_id;
      best_iou = o;
    }
  }
  return best;
}

}  // namespace detta
