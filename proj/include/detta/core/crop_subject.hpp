#pragma once

#include <optional>
#include <span>

#include "detta/core/types.hpp"

namespace detta {

/// Minimum overlap for a track's box to count as a crop of a person.
inline constexpr double kCropSubjectMinIou = 0.3;

/// The ground-truth person an analysis module "sees" when run on `crop`:
/// the one with the largest IoU (ties to the lower id), if any reaches min_iou.
std::optional<PersonId> crop_subject(const BBox& crop,
                                     std::span<const GroundTruthRecord* const> people,
                                     double min_iou = kCropSubjectMinIou);

}  // namespace detta
